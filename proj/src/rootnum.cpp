#include "rootw/rootnum.hpp"

#include <numeric>
#include <stdexcept>

#include "rootw/errors.hpp"

namespace rootw {

int jacobi(i64 a, i64 n) {
    if (n <= 0 || n % 2 == 0) throw std::domain_error("jacobi: modulus must be odd and positive");
    a %= n;
    if (a < 0) a += n;
    int sign = 1;
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            i64 r = n % 8;
            if (r == 3 || r == 5) sign = -sign;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3) sign = -sign;
        a %= n;
    }
    return n == 1 ? sign : 0;
}

i64 tilde_phi(i64 e) {
    if (e <= 0) throw std::domain_error("tilde_phi: positive argument required");
    if (e <= 2) return 2;
    return (i64)euler_phi((u64)e);
}

int W_qe(i64 q, i64 e) {
    if (q < 2 || e < 1) throw std::domain_error("W_qe: bad arguments");
    if (std::gcd(q, e) != 1) throw std::domain_error("W_qe: q and e must be coprime");
    if (e == 1) return 1;
    if (e == 2) return jacobi(-1, q);
    if (e == 4) return jacobi(-2, q);
    auto pp = prime_power_split((u64)e);
    if (pp && pp->first % 2 == 1) return jacobi(q, (i64)pp->first);  // e = l^k, l odd
    if (pp && pp->first == 2) return jacobi(2, q);                   // e = 2^k, k >= 3
    if (e % 2 == 0) {
        auto half = prime_power_split((u64)(e / 2));
        if (half && half->first % 2 == 1 && half->first % 4 == 3) return jacobi(-1, q);  // e = 2*l^k, l = 3 mod 4
    }
    return 1;
}

SignedRootNumber local_root_number(const LocalRepData& d) {
    SignedRootNumber w;
    for (const auto& [e, me] : d.m) {
        if (me == 0) continue;
        int base = W_qe(d.q, e);
        int contrib = (me % 2 == 0) ? 1 : base;
        w.push("e=" + std::to_string(e) + ",m=" + std::to_string(me), contrib);
    }
    if (d.t1 % 2 != 0)
        w.push("toric:(-1)^t1", -1);
    else if (d.dim_toric > 0)
        w.push("toric:(-1)^t1", 1);
    if (d.m_T > 0) {
        int base = W_qe(d.q, 2);
        w.push("toric:W_{q,2}^m_T", d.m_T % 2 == 0 ? 1 : base);
    }
    return w;
}

int dual_pair_W(i64 e, i64 f, i64 q) {
    if (q % 2 == 0) return 1;
    // gcd(e, 1 + q + ... + q^{f-1}) only depends on the sum mod e.
    i64 s = 0;
    for (i64 i = 0, t = 1 % e; i < f; ++i, t = (i64)mulmod((u64)t, (u64)(q % e), (u64)e)) s = (s + t) % e;
    i64 g = std::gcd(e, s == 0 ? e : s);
    i64 modulus = 2 * e / g;
    return (q % modulus == 1 % modulus) ? 1 : -1;
}

int selfdual_irred_W(i64 e, i64 f, i64 q, SelfDualKind kind) {
    if (f < 2 || f % 2 != 0) throw std::domain_error("selfdual_irred_W: f must be even and >= 2");
    if (powmod128((u64)(q % e), (u128)(f / 2), (u64)e) != (u64)((e - 1) % e))
        throw std::domain_error("selfdual_irred_W: q^{f/2} must be -1 mod e");
    if (q % 2 == 0) return kind == SelfDualKind::Orthogonal ? 1 : -1;
    // v2(q^{f/2} + 1): equals v2(q+1) for odd f/2 and 1 for even f/2.
    i64 half = f / 2;
    int v = (half % 2 == 1) ? v2_u64((u64)(q + 1)) : 1;
    int ve = (e % 2 == 0) ? v2_u64((u64)e) : 0;
    bool plus = (kind == SelfDualKind::Orthogonal) ? (v != ve) : (v == ve);
    return plus ? 1 : -1;
}

int rohrlich_elliptic(i64 v_j, i64 v_disc, EllipticRedType red_type, i64 q) {
    if (v_j < 0) {
        switch (red_type) {
            case EllipticRedType::SplitMultiplicative: return -1;
            case EllipticRedType::NonsplitMultiplicative: return 1;
            case EllipticRedType::AdditivePotentiallyMultiplicative: return jacobi(-1, q);
            default: throw std::domain_error("rohrlich_elliptic: v(j) < 0 needs a multiplicative type");
        }
    }
    i64 vd = v_disc < 0 ? -v_disc : v_disc;
    i64 e = 12 / std::gcd(vd, (i64)12);
    switch (e) {
        case 1: return 1;
        case 2:
        case 6: return jacobi(-1, q);
        case 3: return jacobi(-3, q);
        case 4: return jacobi(-2, q);
        default: throw std::logic_error("rohrlich_elliptic: impossible e");
    }
}

int mult_lemma_W(i64 t1, int det_minus1) {
    if (det_minus1 != 1 && det_minus1 != -1) throw std::domain_error("mult_lemma_W: det value must be +-1");
    return (t1 % 2 == 0 ? 1 : -1) * det_minus1;
}

}  // namespace rootw
