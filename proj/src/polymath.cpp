#include "rootw/polymath.hpp"

#include <stdexcept>

namespace rootw {

i64 poly_degree(const std::vector<mpz_class>& f) {
    for (i64 i = (i64)f.size() - 1; i >= 0; --i)
        if (f[i] != 0) return i;
    return -1;
}

std::vector<mpz_class> poly_derivative(const std::vector<mpz_class>& f) {
    if (f.size() <= 1) return {mpz_class(0)};
    std::vector<mpz_class> d(f.size() - 1);
    for (size_t i = 1; i < f.size(); ++i) d[i - 1] = mpz_class(i) * f[i];
    return d;
}

mpz_class poly_eval(const std::vector<mpz_class>& f, const mpz_class& x) {
    mpz_class v = 0;
    for (i64 i = (i64)f.size() - 1; i >= 0; --i) v = v * x + f[i];
    return v;
}

std::vector<mpz_class> poly_shift_x(const std::vector<mpz_class>& f, const mpz_class& a) {
    i64 d = poly_degree(f);
    if (d < 0) return f;
    std::vector<mpz_class> out(d + 1, mpz_class(0));
    // binomial expansion of sum a_i (x+a)^i
    std::vector<std::vector<mpz_class>> binom(d + 1, std::vector<mpz_class>(d + 1, mpz_class(0)));
    for (i64 i = 0; i <= d; ++i) {
        binom[i][0] = 1;
        for (i64 j = 1; j <= i; ++j) binom[i][j] = binom[i - 1][j - 1] + (j <= i - 1 ? binom[i - 1][j] : mpz_class(0));
    }
    for (i64 i = 0; i <= d; ++i) {
        if (f[i] == 0) continue;
        mpz_class apow = 1;
        for (i64 j = i; j >= 0; --j) {
            out[j] += f[i] * binom[i][j] * apow;
            apow *= a;
        }
    }
    return out;
}

mpz_class poly_resultant(const std::vector<mpz_class>& f, const std::vector<mpz_class>& g) {
    i64 m = poly_degree(f), n = poly_degree(g);
    if (m < 0 || n < 0) return 0;
    if (m == 0) {
        mpz_class r;
        mpz_pow_ui(r.get_mpz_t(), f[0].get_mpz_t(), (unsigned long)n);
        return r;
    }
    if (n == 0) {
        mpz_class r;
        mpz_pow_ui(r.get_mpz_t(), g[0].get_mpz_t(), (unsigned long)m);
        return r;
    }
    // Sylvester matrix, exact Gaussian elimination over Q.
    i64 size = m + n;
    std::vector<std::vector<mpq_class>> M(size, std::vector<mpq_class>(size, mpq_class(0)));
    for (i64 r = 0; r < n; ++r)
        for (i64 i = 0; i <= m; ++i) M[r][r + i] = f[m - i];
    for (i64 r = 0; r < m; ++r)
        for (i64 i = 0; i <= n; ++i) M[n + r][r + i] = g[n - i];
    mpq_class det = 1;
    for (i64 col = 0; col < size; ++col) {
        i64 piv = -1;
        for (i64 r = col; r < size; ++r)
            if (M[r][col] != 0) { piv = r; break; }
        if (piv < 0) return 0;
        if (piv != col) { std::swap(M[piv], M[col]); det = -det; }
        det *= M[col][col];
        mpq_class inv = 1 / M[col][col];
        for (i64 r = col + 1; r < size; ++r) {
            if (M[r][col] == 0) continue;
            mpq_class factor = M[r][col] * inv;
            for (i64 c = col; c < size; ++c) M[r][c] -= factor * M[col][c];
        }
    }
    if (det.get_den() != 1) throw std::logic_error("poly_resultant: non-integral determinant");
    return det.get_num();
}

mpz_class poly_disc(const std::vector<mpz_class>& f) {
    i64 d = poly_degree(f);
    if (d < 1) throw std::domain_error("poly_disc: degree must be >= 1");
    mpz_class res = poly_resultant(f, poly_derivative(f));
    mpz_class lead = f[d];
    // disc = (-1)^{d(d-1)/2} res(f, f') / lc(f)
    mpz_class disc = res / lead;
    if (((d * (d - 1)) / 2) % 2 == 1) disc = -disc;
    return disc;
}

i64 mpz_val_p(const mpz_class& n, i64 p) {
    if (n == 0) throw std::domain_error("mpz_val_p of zero");
    mpz_class a = abs(n), q, r;
    i64 v = 0;
    while (true) {
        mpz_fdiv_qr_ui(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), (unsigned long)p);
        if (r != 0) break;
        a = q;
        ++v;
    }
    return v;
}

}  // namespace rootw
