#pragma once

#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

namespace rootw {

/// Exact rational on 64-bit integers. Denominator is kept positive and the
/// fraction reduced; the quantities handled here (depths, valuations,
/// eigenvalue exponents) stay far below the overflow range.
struct Rat {
    long long n = 0;
    long long d = 1;

    Rat() = default;
    Rat(long long num) : n(num), d(1) {}
    Rat(long long num, long long den) : n(num), d(den) { normalize(); }

    void normalize() {
        if (d == 0) throw std::domain_error("Rat: zero denominator");
        if (d < 0) { n = -n; d = -d; }
        long long g = std::gcd(n < 0 ? -n : n, d);
        if (g > 1) { n /= g; d /= g; }
    }

    friend Rat operator+(const Rat& a, const Rat& b) { return Rat(a.n * b.d + b.n * a.d, a.d * b.d); }
    friend Rat operator-(const Rat& a, const Rat& b) { return Rat(a.n * b.d - b.n * a.d, a.d * b.d); }
    friend Rat operator*(const Rat& a, const Rat& b) { return Rat(a.n * b.n, a.d * b.d); }
    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.n == 0) throw std::domain_error("Rat: division by zero");
        return Rat(a.n * b.d, a.d * b.n);
    }
    Rat operator-() const { return Rat(-n, d); }

    friend bool operator==(const Rat& a, const Rat& b) { return a.n == b.n && a.d == b.d; }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
    friend bool operator<(const Rat& a, const Rat& b) { return a.n * b.d < b.n * a.d; }
    friend bool operator<=(const Rat& a, const Rat& b) { return a.n * b.d <= b.n * a.d; }
    friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
    friend bool operator>=(const Rat& a, const Rat& b) { return b <= a; }

    bool is_integer() const { return d == 1; }

    /// 2-adic order v2(n) - v2(d) of a nonzero rational.
    long long ord2() const {
        if (n == 0) throw std::domain_error("Rat: ord2 of zero");
        auto v2 = [](long long x) {
            if (x < 0) x = -x;
            long long v = 0;
            while (x % 2 == 0) { x /= 2; ++v; }
            return v;
        };
        return v2(n) - v2(d);
    }

    std::string str() const {
        if (d == 1) return std::to_string(n);
        return std::to_string(n) + "/" + std::to_string(d);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }
};

/// An element of Q/Z written as a reduced fraction in [0,1); used to track a
/// root-of-unity eigenvalue exp(2*pi*i*k/m) exactly. Its multiplicative order
/// is the reduced denominator.
struct QmodZ {
    long long k = 0;  // 0 <= k < m, gcd(k,m)=1 after reduction or k=0,m=1
    long long m = 1;

    QmodZ() = default;
    QmodZ(long long num, long long den) {
        if (den <= 0) throw std::domain_error("QmodZ: denominator must be positive");
        long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
        num %= den;
        if (num < 0) num += den;
        k = num;
        m = den;
    }
    explicit QmodZ(const Rat& r) : QmodZ(r.n, r.d) {}

    long long order() const { return m; }

    friend QmodZ operator+(const QmodZ& a, const QmodZ& b) { return QmodZ(a.k * b.m + b.k * a.m, a.m * b.m); }
    friend bool operator==(const QmodZ& a, const QmodZ& b) { return a.k == b.k && a.m == b.m; }
    friend bool operator<(const QmodZ& a, const QmodZ& b) {
        return a.k * b.m < b.k * a.m;
    }

    std::string str() const { return std::to_string(k) + "/" + std::to_string(m); }
};

}  // namespace rootw
