#include "rootw/intmath.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "rootw/errors.hpp"

namespace rootw {

u64 mulmod(u64 a, u64 b, u64 m) { return (u128)a % m * ((u128)b % m) % m; }

u64 powmod(u64 a, u64 e, u64 m) {
    u64 r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

u64 powmod128(u64 a, u128 e, u64 m) {
    u64 r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

int v2_u64(u64 x) {
    if (x == 0) throw std::domain_error("v2 of zero");
    int v = 0;
    while ((x & 1) == 0) { x >>= 1; ++v; }
    return v;
}

bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    int s = v2_u64(d);
    d >>= s;
    // Sufficient witness set for all 64-bit integers.
    for (u64 a : {2ULL, 325ULL, 9375ULL, 28178ULL, 450775ULL, 9780504ULL, 1795265022ULL}) {
        u64 x = powmod(a % n, d, n);
        if (x == 0 || x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

u64 euler_phi(u64 n) {
    u64 result = n;
    for (u64 p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

u64 multiplicative_order(u64 a, u64 m) {
    if (m == 1) return 1;
    a %= m;
    if (std::gcd(a, m) != 1) throw std::domain_error("multiplicative_order: arguments not coprime");
    u64 phi = euler_phi(m);
    u64 order = phi;
    // Strip each prime out of phi while the power condition persists.
    u64 t = phi;
    for (u64 p = 2; p * p <= t; ++p) {
        if (t % p == 0) {
            while (t % p == 0) t /= p;
            while (order % p == 0 && powmod(a, order / p, m) == 1) order /= p;
        }
    }
    if (t > 1) {
        while (order % t == 0 && powmod(a, order / t, m) == 1) order /= t;
    }
    return order;
}

std::optional<std::pair<u64, int>> prime_power_split(u64 q) {
    if (q < 2) return std::nullopt;
    // Perfect k-th root candidates: k up to log2(q).
    for (int k = 63; k >= 2; --k) {
        if ((q >> k) == 0 && k > 1) continue;
        u64 r = (u64)std::llround(std::pow((double)q, 1.0 / k));
        for (u64 c = (r > 1 ? r - 1 : 1); c <= r + 1; ++c) {
            u128 pw = 1;
            bool over = false;
            for (int i = 0; i < k; ++i) {
                pw *= c;
                if (pw > (u128)q) { over = true; break; }
            }
            if (!over && pw == q && is_prime_u64(c)) return std::make_pair(c, k);
        }
    }
    if (is_prime_u64(q)) return std::make_pair(q, 1);
    return std::nullopt;
}

std::pair<std::map<u64, int>, u64> trial_division(u64 n, u64 bound) {
    std::map<u64, int> f;
    for (u64 p = 2; p <= bound && p * p <= n; p += (p == 2 ? 1 : 2)) {
        while (n % p == 0) { n /= p; ++f[p]; }
    }
    if (n > 1 && n <= bound * bound && n <= bound) { ++f[n]; n = 1; }
    return {f, n};
}

std::map<u64, int> factor_or_throw(u64 n) {
    if (n == 0) throw FactorizationError("cannot factor zero");
    auto [f, cof] = trial_division(n, 1000000);
    if (cof > 1) {
        if (is_prime_u64(cof)) {
            ++f[cof];
        } else if (auto pp = prime_power_split(cof)) {
            f[pp->first] += pp->second;
        } else {
            throw FactorizationError("composite cofactor " + std::to_string(cof) +
                                     " exceeds the trial-division range");
        }
    }
    return f;
}

}  // namespace rootw
