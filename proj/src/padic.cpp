#include "rootw/padic.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "rootw/errors.hpp"
#include "rootw/polymath.hpp"

namespace rootw {

namespace {

u64 add_m(u64 a, u64 b, u64 p) { return (a + b) % p; }
u64 sub_m(u64 a, u64 b, u64 p) { return (a + p - b % p) % p; }

// F_p[x] helpers (ascending coefficients).
using FpPoly = std::vector<u64>;

i64 fp_deg(const FpPoly& f) {
    for (i64 i = (i64)f.size() - 1; i >= 0; --i)
        if (f[i]) return i;
    return -1;
}

FpPoly fp_trim(FpPoly f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
    return f;
}

FpPoly fp_mulmod(const FpPoly& a, const FpPoly& b, const FpPoly& mod, u64 p) {
    i64 dm = fp_deg(mod);
    std::vector<u64> prod(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (size_t j = 0; j < b.size(); ++j)
            if (b[j]) prod[i + j] = (prod[i + j] + mulmod(a[i], b[j], p)) % p;
    }
    // reduce by monic mod
    for (i64 i = (i64)prod.size() - 1; i >= dm; --i) {
        u64 c = prod[i];
        if (!c) continue;
        prod[i] = 0;
        for (i64 j = 0; j < dm; ++j) prod[i - dm + j] = sub_m(prod[i - dm + j], mulmod(c, mod[j], p), p);
    }
    prod.resize(dm);
    return prod;
}

FpPoly fp_powmod_xp(const FpPoly& base, u64 e, const FpPoly& mod, u64 p) {
    i64 dm = fp_deg(mod);
    FpPoly r(dm, 0);
    r[0] = 1;
    FpPoly b = base;
    b.resize(std::max<size_t>(b.size(), dm), 0);
    while (e) {
        if (e & 1) r = fp_mulmod(r, b, mod, p);
        b = fp_mulmod(b, b, mod, p);
        e >>= 1;
    }
    return r;
}

FpPoly fp_gcd(FpPoly a, FpPoly b, u64 p) {
    a = fp_trim(a);
    b = fp_trim(b);
    while (fp_deg(b) >= 0) {
        // a mod b
        i64 db = fp_deg(b);
        u64 inv = powmod(b[db], p - 2, p);
        FpPoly r = a;
        for (i64 i = fp_deg(r); i >= db; --i) {
            u64 c = mulmod(r[i], inv, p);
            if (!c) continue;
            for (i64 j = 0; j <= db; ++j) r[i - db + j] = sub_m(r[i - db + j], mulmod(c, b[j], p), p);
        }
        a = std::move(b);
        b = fp_trim(r);
    }
    return a;
}

bool fp_irreducible(const FpPoly& u, u64 p) {
    i64 F = fp_deg(u);
    if (F == 1) return true;
    FpPoly x(F, 0);
    x[1] = 1;
    // x^{p^F} == x mod u
    FpPoly t = x;
    for (i64 i = 0; i < F; ++i) t = fp_powmod_xp(t, p, u, p);
    FpPoly diff = t;
    diff.resize(std::max<size_t>(diff.size(), 2), 0);
    diff[1] = sub_m(diff[1], 1, p);
    if (fp_deg(fp_trim(diff)) >= 0) return false;
    // gcd(x^{p^{F/d}} - x, u) trivial for every prime divisor d of F
    std::vector<i64> divs;
    i64 Fc = F;
    for (i64 d = 2; d * d <= Fc; ++d)
        if (Fc % d == 0) {
            divs.push_back(d);
            while (Fc % d == 0) Fc /= d;
        }
    if (Fc > 1) divs.push_back(Fc);
    for (i64 d : divs) {
        FpPoly s = x;
        for (i64 i = 0; i < F / d; ++i) s = fp_powmod_xp(s, p, u, p);
        FpPoly diff2 = s;
        diff2.resize(std::max<size_t>(diff2.size(), 2), 0);
        diff2[1] = sub_m(diff2[1], 1, p);
        if (fp_deg(fp_gcd(diff2, u, p)) > 0) return false;
    }
    return true;
}

}  // namespace

// ---------------------------------------------------------------- ResidueField

u128 ResidueField::size() const {
    u128 s = 1;
    for (i64 i = 0; i < F; ++i) s *= (u64)p;
    return s;
}

ResidueField::El ResidueField::one() const {
    El v(F, 0);
    v[0] = 1;
    return v;
}

ResidueField::El ResidueField::from_int(i64 a) const {
    El v(F, 0);
    i64 r = a % p;
    if (r < 0) r += p;
    v[0] = (u64)r;
    return v;
}

bool ResidueField::is_zero(const El& a) const {
    for (u64 x : a)
        if (x) return false;
    return true;
}

bool ResidueField::eq(const El& a, const El& b) const {
    for (i64 i = 0; i < F; ++i)
        if (a[i] != b[i]) return false;
    return true;
}

ResidueField::El ResidueField::add(const El& a, const El& b) const {
    El v(F);
    for (i64 i = 0; i < F; ++i) v[i] = add_m(a[i], b[i], (u64)p);
    return v;
}

ResidueField::El ResidueField::sub(const El& a, const El& b) const {
    El v(F);
    for (i64 i = 0; i < F; ++i) v[i] = sub_m(a[i], b[i], (u64)p);
    return v;
}

ResidueField::El ResidueField::mul(const El& a, const El& b) const {
    FpPoly r = fp_mulmod(a, b, modulus, (u64)p);
    r.resize(F, 0);
    return r;
}

ResidueField::El ResidueField::pow(const El& a, u128 e) const {
    El r = one();
    El b = a;
    while (e) {
        if (e & 1) r = mul(r, b);
        b = mul(b, b);
        e >>= 1;
    }
    return r;
}

ResidueField::El ResidueField::inv(const El& a) const {
    if (is_zero(a)) throw std::domain_error("ResidueField::inv of zero");
    return pow(a, size() - 2);
}

std::optional<ResidueField::El> ResidueField::sqrt(const El& a) const {
    if (is_zero(a)) return zero();
    u128 q = size();
    El ls = pow(a, (q - 1) / 2);
    if (!eq(ls, one())) return std::nullopt;
    if (q % 4 == 3) return pow(a, (q + 1) / 4);
    // Tonelli-Shanks
    u128 t = q - 1;
    int s = 0;
    while ((t & 1) == 0) { t >>= 1; ++s; }
    // find a non-residue deterministically
    El n = zero();
    for (u64 ctr = 2;; ++ctr) {
        El cand(F, 0);
        u64 c = ctr;
        for (i64 i = 0; i < F && c; ++i) { cand[i] = c % (u64)p; c /= (u64)p; }
        if (is_zero(cand)) continue;
        El w = pow(cand, (q - 1) / 2);
        if (!eq(w, one())) { n = cand; break; }
    }
    El c = pow(n, t);
    El r = pow(a, (t + 1) / 2);
    El x = pow(a, t);
    int m = s;
    while (!eq(x, one())) {
        int i = 0;
        El xx = x;
        while (!eq(xx, one())) { xx = mul(xx, xx); ++i; }
        El b = c;
        for (int j = 0; j < m - i - 1; ++j) b = mul(b, b);
        r = mul(r, b);
        c = mul(b, b);
        x = mul(x, c);
        m = i;
    }
    return r;
}

ResidueField::El ResidueField::element_of_order(i64 n) const {
    u128 q1 = size() - 1;
    if (n <= 0 || q1 % (u128)(u64)n != 0) throw std::domain_error("element_of_order: order does not divide q-1");
    std::vector<i64> prime_divisors;
    i64 m = n;
    for (i64 d = 2; d * d <= m; ++d)
        if (m % d == 0) {
            prime_divisors.push_back(d);
            while (m % d == 0) m /= d;
        }
    if (m > 1) prime_divisors.push_back(m);
    for (u64 ctr = 2;; ++ctr) {
        El cand(F, 0);
        u64 c = ctr;
        for (i64 i = 0; i < F && c; ++i) { cand[i] = c % (u64)p; c /= (u64)p; }
        if (is_zero(cand)) continue;
        El g = pow(cand, q1 / (u128)(u64)n);
        if (is_zero(g) || eq(g, one())) {
            if (n == 1) return one();
            continue;
        }
        bool exact = true;
        for (i64 ell : prime_divisors) {
            if (eq(pow(g, (u128)(u64)(n / ell)), one())) { exact = false; break; }
        }
        if (exact) return g;
    }
}

ResidueField::RootReport ResidueField::roots_of(const std::vector<El>& poly_in) const {
    RootReport rep;
    // local polynomial helpers over this field
    auto deg = [&](const std::vector<El>& f) -> i64 {
        for (i64 i = (i64)f.size() - 1; i >= 0; --i)
            if (!is_zero(f[i])) return i;
        return -1;
    };
    auto make_monic = [&](std::vector<El> f) {
        i64 d = deg(f);
        f.resize(d + 1);
        El li = inv(f[d]);
        for (auto& c : f) c = mul(c, li);
        return f;
    };
    auto poly_mulmod = [&](const std::vector<El>& a, const std::vector<El>& b, const std::vector<El>& mod) {
        std::vector<El> prod(a.size() + b.size() - 1, zero());
        for (size_t i = 0; i < a.size(); ++i) {
            if (is_zero(a[i])) continue;
            for (size_t j = 0; j < b.size(); ++j)
                if (!is_zero(b[j])) prod[i + j] = add(prod[i + j], mul(a[i], b[j]));
        }
        i64 dm = deg(mod);
        for (i64 i = (i64)prod.size() - 1; i >= dm; --i) {
            if (is_zero(prod[i])) continue;
            El c = prod[i];
            prod[i] = zero();
            for (i64 j = 0; j < dm; ++j) prod[i - dm + j] = sub(prod[i - dm + j], mul(c, mod[j]));
        }
        prod.resize(std::max<i64>(dm, 1), zero());
        return prod;
    };
    auto poly_powmod = [&](std::vector<El> b, u128 e, const std::vector<El>& mod) {
        std::vector<El> r(std::max<i64>(deg(mod), 1), zero());
        r[0] = one();
        while (e) {
            if (e & 1) r = poly_mulmod(r, b, mod);
            b = poly_mulmod(b, b, mod);
            e >>= 1;
        }
        return r;
    };
    auto poly_gcd = [&](std::vector<El> a, std::vector<El> b) {
        while (deg(b) >= 0) {
            i64 db = deg(b);
            El li = inv(b[db]);
            std::vector<El> r = a;
            for (i64 i = deg(r); i >= db; --i) {
                if (is_zero(r[i])) continue;
                El c = mul(r[i], li);
                for (i64 j = 0; j <= db; ++j) r[i - db + j] = sub(r[i - db + j], mul(c, b[j]));
            }
            while ((i64)r.size() > 0 && deg(r) + 1 < (i64)r.size()) r.pop_back();
            a = std::move(b);
            b = std::move(r);
            if (deg(b) < 0) b.clear();
        }
        return a;
    };
    auto poly_divexact_linear = [&](std::vector<El>& f, const El& root) {
        // divide monic-or-not f by (x - root); returns remainder value
        i64 d = deg(f);
        std::vector<El> q(d, zero());
        El rem = zero();
        for (i64 i = d; i >= 0; --i) {
            El cur = add(f[i], mul(rem, root));
            if (i > 0)
                q[i - 1] = cur, rem = cur;
            else
                rem = cur;
        }
        // recompute properly: synthetic division
        q.assign(d, zero());
        El carry = zero();
        for (i64 i = d; i >= 1; --i) {
            carry = add(f[i], mul(carry, root));
            q[i - 1] = carry;
        }
        El r0 = add(f[0], mul(carry, root));
        f = q;
        return r0;
    };

    std::vector<El> f = poly_in;
    i64 d = deg(f);
    if (d <= 0) return rep;
    f = make_monic(f);
    u128 q = size();

    // product of distinct linear factors: gcd(f, x^q - x)
    std::vector<El> x(2, zero());
    x[1] = one();
    auto xq = poly_powmod(x, q, f);
    // xq - x
    std::vector<El> diff = xq;
    if ((i64)diff.size() < 2) diff.resize(2, zero());
    diff[1] = sub(diff[1], one());
    auto lin = poly_gcd(f, diff);
    if (deg(lin) > 0) lin = make_monic(lin);

    // split lin into roots (equal-degree 1, Cantor-Zassenhaus with a
    // deterministic shift sequence)
    std::vector<El> stack_roots;
    std::vector<std::vector<El>> work;
    if (deg(lin) >= 1) work.push_back(lin);
    u64 shift_ctr = 1;
    while (!work.empty()) {
        auto g = work.back();
        work.pop_back();
        i64 dg = deg(g);
        if (dg == 1) {
            // root = -g[0]
            stack_roots.push_back(sub(zero(), g[0]));
            continue;
        }
        bool split_done = false;
        for (int tries = 0; tries < 200 && !split_done; ++tries, ++shift_ctr) {
            El a(F, 0);
            u64 c = shift_ctr;
            for (i64 i = 0; i < F && c; ++i) { a[i] = c % (u64)p; c /= (u64)p; }
            std::vector<El> xa(2, zero());
            xa[0] = a;
            xa[1] = one();
            auto h = poly_powmod(xa, (q - 1) / 2, g);
            if ((i64)h.size() < 1) h.resize(1, zero());
            h[0] = sub(h[0], one());
            auto gg = poly_gcd(g, h);
            i64 dgg = deg(gg);
            if (dgg > 0 && dgg < dg) {
                gg = make_monic(gg);
                // co-factor
                std::vector<El> co = g;
                // divide g by gg (monic)
                i64 dq = dg - dgg;
                std::vector<El> quot(dq + 1, zero());
                for (i64 i = dg; i >= dgg; --i) {
                    El c2 = co[i];
                    if (is_zero(c2)) continue;
                    quot[i - dgg] = c2;
                    for (i64 j = 0; j <= dgg; ++j) co[i - dgg + j] = sub(co[i - dgg + j], mul(c2, gg[j]));
                }
                work.push_back(gg);
                work.push_back(quot);
                split_done = true;
            }
        }
        if (!split_done) throw std::logic_error("ResidueField::roots_of: equal-degree splitting failed");
    }

    // multiplicities by repeated division
    std::vector<El> fwork = f;
    for (const auto& r : stack_roots) {
        int mult = 0;
        while (true) {
            std::vector<El> save = fwork;
            El rem = poly_divexact_linear(fwork, r);
            if (is_zero(rem)) {
                ++mult;
                if (deg(fwork) <= 0) break;
            } else {
                fwork = save;
                break;
            }
        }
        rep.roots.emplace_back(r, mult);
    }

    // distinct-degree scan of the remaining cofactor
    i64 dc = deg(fwork);
    if (dc > 0) {
        auto cof = make_monic(fwork);
        auto xqd = x;
        for (i64 dd = 1; deg(cof) > 0 && dd <= deg(cof); ++dd) {
            xqd = poly_powmod(xqd, q, cof);
            if (dd == 1) continue;  // linear factors already removed
            std::vector<El> diff2 = xqd;
            if ((i64)diff2.size() < 2) diff2.resize(2, zero());
            diff2[1] = sub(diff2[1], one());
            auto g = poly_gcd(cof, diff2);
            i64 dg = deg(g);
            if (dg > 0) {
                rep.nonsplit_degrees.push_back(dd);
                // divide out
                g = make_monic(g);
                std::vector<El> co = cof;
                i64 dq2 = deg(cof) - dg;
                std::vector<El> quot(dq2 + 1, zero());
                for (i64 i = deg(cof); i >= dg; --i) {
                    El c2 = co[i];
                    if (is_zero(c2)) continue;
                    quot[i - dg] = c2;
                    for (i64 j = 0; j <= dg; ++j) co[i - dg + j] = sub(co[i - dg + j], mul(c2, g[j]));
                }
                cof = quot;
                xqd = x;
                for (i64 k = 0; k < dd; ++k) xqd = poly_powmod(xqd, q, cof);
            }
        }
        if (deg(cof) > 0 && rep.nonsplit_degrees.empty()) rep.nonsplit_degrees.push_back(deg(cof));
    }
    return rep;
}

// ---------------------------------------------------------------- TameField

TameField::TameField(i64 p, i64 F, i64 E, i64 N) : p_(p), F_(F), E_(E), N_(N) {
    if (p < 3) throw std::domain_error("TameField: p must be an odd prime");
    if (F < 1 || E < 1 || N < 1) throw std::domain_error("TameField: bad invariants");
    if (E > 1 && powmod((u64)(p % E), (u64)F, (u64)E) != 1 % (u64)E)
        throw std::domain_error("TameField: E must divide p^F - 1");
    double bits = F * std::log2((double)p);
    if (bits > 120) throw InputError("TameField: residue field too large for exact exponent arithmetic");
    mpz_class pz(p_);
    mpz_pow_ui(pN_.get_mpz_t(), pz.get_mpz_t(), (unsigned long)N_);
    build_unramified();
    build_zeta();
}

void TameField::build_unramified() {
    fq_.p = p_;
    fq_.F = F_;
    if (F_ == 1) {
        fq_.modulus = {0, 1};
        umod_ = {mpz_class(0), mpz_class(1)};
        sigma_.assign(1, {mpz_class(1)});
        return;
    }
    // deterministic scan for a monic irreducible of degree F
    FpPoly u(F_ + 1, 0);
    u[F_] = 1;
    bool found = false;
    for (u64 ctr = 1; ctr < 2000000 && !found; ++ctr) {
        u64 c = ctr;
        for (i64 i = 0; i < F_; ++i) { u[i] = c % (u64)p_; c /= (u64)p_; }
        if (fp_irreducible(u, (u64)p_)) found = true;
    }
    if (!found) throw std::logic_error("TameField: no irreducible modulus found");
    fq_.modulus = u;
    umod_.resize(F_ + 1);
    for (i64 i = 0; i <= F_; ++i) umod_[i] = mpz_class((unsigned long)u[i]);

    // Frobenius image z = root of umod near x^p, by Newton lifting.
    UEl z(F_, mpz_class(0));
    {
        FpPoly xarr(F_, 0);
        xarr[1] = 1;
        FpPoly zp = fp_powmod_xp(xarr, (u64)p_, fq_.modulus, (u64)p_);
        for (i64 i = 0; i < F_; ++i) z[i] = mpz_class((unsigned long)zp[i]);
    }
    auto ueval_intpoly = [&](const std::vector<mpz_class>& poly, const UEl& at) {
        UEl acc(F_, mpz_class(0));
        for (i64 i = (i64)poly.size() - 1; i >= 0; --i) {
            acc = umul(acc, at);
            acc[0] += poly[i];
            acc = ured(acc);
        }
        return acc;
    };
    std::vector<mpz_class> uder = poly_derivative(umod_);
    int steps = 1;
    while ((1 << steps) < N_ + 2) ++steps;
    for (int it = 0; it <= steps; ++it) {
        UEl fz = ueval_intpoly(umod_, z);
        UEl dz = ueval_intpoly(uder, z);
        UEl corr = umul(fz, uinv(dz));
        for (i64 i = 0; i < F_; ++i) z[i] -= corr[i];
        z = ured(z);
    }
    // sigma matrix: columns are z^j
    sigma_.assign(F_, UEl(F_, mpz_class(0)));
    UEl pw(F_, mpz_class(0));
    pw[0] = 1;
    for (i64 j = 0; j < F_; ++j) {
        for (i64 i = 0; i < F_; ++i) sigma_[i].resize(F_);
        for (i64 i = 0; i < F_; ++i) sigma_[i][j] = pw[i];
        pw = umul(pw, z);
    }
}

void TameField::build_zeta() {
    zeta_pows_.assign(E_, UEl(F_, mpz_class(0)));
    zeta_pows_[0][0] = 1;
    if (E_ == 1) return;
    auto zr = fq_.element_of_order(E_);
    UEl t(F_, mpz_class(0));
    for (i64 i = 0; i < F_; ++i) t[i] = mpz_class((unsigned long)zr[i]);
    // Teichmuller: Newton on g(t) = t^{q-1} - 1
    u128 q1 = fq_.size() - 1;
    mpz_class q1z = 0;
    {
        u128 tmp = q1;
        mpz_class shift = 1;
        while (tmp) {
            q1z += mpz_class((unsigned long)(tmp & 0xffffffffULL)) * shift;
            shift <<= 32;
            tmp >>= 32;
        }
    }
    int steps = 1;
    while ((1 << steps) < N_ + 2) ++steps;
    for (int it = 0; it <= steps; ++it) {
        UEl tq1 = upow_u128(t, q1);        // t^{q-1}
        UEl g = tq1;
        g[0] -= 1;
        g = ured(g);
        // g'(t) = (q-1) t^{q-2} = (q-1) t^{q-1} / t
        UEl der = tq1;
        for (auto& c : der) c *= q1z;
        der = ured(der);
        der = umul(der, uinv(t));
        UEl corr = umul(g, uinv(der));
        for (i64 i = 0; i < F_; ++i) t[i] -= corr[i];
        t = ured(t);
    }
    // verify exact order E at working precision: t^E = 1
    UEl tE = upow_u128(t, (u128)(u64)E_);
    UEl onev(F_, mpz_class(0));
    onev[0] = 1;
    for (i64 i = 0; i < F_; ++i)
        if (ured(tE)[i] != onev[i]) throw std::logic_error("TameField: zeta_E lift failed");
    for (i64 i = 1; i < E_; ++i) zeta_pows_[i] = umul(zeta_pows_[i - 1], t);
}

TameField::UEl TameField::ured(const UEl& a) const {
    UEl v = a;
    for (auto& c : v) {
        mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), pN_.get_mpz_t());
    }
    return v;
}

TameField::UEl TameField::uadd(const UEl& a, const UEl& b) const {
    UEl v(F_);
    for (i64 i = 0; i < F_; ++i) v[i] = a[i] + b[i];
    return ured(v);
}

TameField::UEl TameField::usub(const UEl& a, const UEl& b) const {
    UEl v(F_);
    for (i64 i = 0; i < F_; ++i) v[i] = a[i] - b[i];
    return ured(v);
}

TameField::UEl TameField::umul(const UEl& a, const UEl& b) const {
    std::vector<mpz_class> prod(2 * F_ - 1, mpz_class(0));
    for (i64 i = 0; i < F_; ++i) {
        if (a[i] == 0) continue;
        for (i64 j = 0; j < F_; ++j)
            if (b[j] != 0) prod[i + j] += a[i] * b[j];
    }
    // reduce by monic umod_
    for (i64 i = (i64)prod.size() - 1; i >= F_; --i) {
        if (prod[i] == 0) continue;
        mpz_class c = prod[i];
        prod[i] = 0;
        for (i64 j = 0; j < F_; ++j) prod[i - F_ + j] -= c * umod_[j];
    }
    prod.resize(F_);
    return ured(prod);
}

bool TameField::u_is_unit(const UEl& a) const {
    for (i64 i = 0; i < F_; ++i)
        if (mpz_fdiv_ui(a[i].get_mpz_t(), (unsigned long)p_) != 0) return true;
    return false;
}

TameField::UEl TameField::uinv(const UEl& a) const {
    if (!u_is_unit(a)) throw std::domain_error("TameField::uinv: not a unit");
    // residue inverse
    ResidueField::El ra(F_);
    for (i64 i = 0; i < F_; ++i) ra[i] = mpz_fdiv_ui(a[i].get_mpz_t(), (unsigned long)p_);
    auto ri = fq_.inv(ra);
    UEl w(F_, mpz_class(0));
    for (i64 i = 0; i < F_; ++i) w[i] = mpz_class((unsigned long)ri[i]);
    int steps = 1;
    while ((1 << steps) < N_ + 2) ++steps;
    UEl two(F_, mpz_class(0));
    two[0] = 2;
    for (int it = 0; it <= steps; ++it) {
        UEl aw = umul(a, w);
        UEl corr = usub(two, aw);
        w = umul(w, corr);
    }
    return w;
}

TameField::UEl TameField::upow_u128(const UEl& a, u128 e) const {
    UEl r(F_, mpz_class(0));
    r[0] = 1;
    UEl b = a;
    while (e) {
        if (e & 1) r = umul(r, b);
        b = umul(b, b);
        e >>= 1;
    }
    return r;
}

TameField::UEl TameField::usigma(const UEl& a) const {
    UEl v(F_, mpz_class(0));
    for (i64 j = 0; j < F_; ++j) {
        if (a[j] == 0) continue;
        for (i64 i = 0; i < F_; ++i) v[i] += a[j] * sigma_[i][j];
    }
    return ured(v);
}

TameElem TameField::zero() const {
    TameElem x;
    x.c.assign(E_, std::vector<mpz_class>(F_, mpz_class(0)));
    x.prec_pi = full_prec();
    return x;
}

TameElem TameField::one() const {
    TameElem x = zero();
    x.c[0][0] = 1;
    return x;
}

TameElem TameField::from_mpz(const mpz_class& a) const {
    TameElem x = zero();
    mpz_fdiv_r(x.c[0][0].get_mpz_t(), a.get_mpz_t(), pN_.get_mpz_t());
    return x;
}

TameElem TameField::from_residue(const ResidueField::El& a) const {
    TameElem x = zero();
    for (i64 j = 0; j < F_; ++j) x.c[0][j] = mpz_class((unsigned long)a[j]);
    return x;
}

TameElem TameField::teichmuller(const ResidueField::El& a) const {
    if (fq_.is_zero(a)) return zero();
    UEl t(F_, mpz_class(0));
    for (i64 j = 0; j < F_; ++j) t[j] = mpz_class((unsigned long)a[j]);
    u128 q1 = fq_.size() - 1;
    mpz_class q1z = 0;
    {
        u128 tmp = q1;
        mpz_class shift = 1;
        while (tmp) {
            q1z += mpz_class((unsigned long)(tmp & 0xffffffffULL)) * shift;
            shift <<= 32;
            tmp >>= 32;
        }
    }
    int steps = 1;
    while ((1 << steps) < N_ + 2) ++steps;
    for (int it = 0; it <= steps; ++it) {
        UEl tq1 = upow_u128(t, q1);
        UEl g = tq1;
        g[0] -= 1;
        g = ured(g);
        UEl der = tq1;
        for (auto& c : der) c *= q1z;
        der = ured(der);
        der = umul(der, uinv(t));
        UEl corr = umul(g, uinv(der));
        for (i64 i = 0; i < F_; ++i) t[i] -= corr[i];
        t = ured(t);
    }
    TameElem x = zero();
    x.c[0] = t;
    return x;
}

TameElem TameField::add(const TameElem& a, const TameElem& b) const {
    TameElem x = a;
    for (i64 i = 0; i < E_; ++i) x.c[i] = uadd(a.c[i], b.c[i]);
    x.prec_pi = std::min(a.prec_pi, b.prec_pi);
    return x;
}

TameElem TameField::sub(const TameElem& a, const TameElem& b) const {
    TameElem x = a;
    for (i64 i = 0; i < E_; ++i) x.c[i] = usub(a.c[i], b.c[i]);
    x.prec_pi = std::min(a.prec_pi, b.prec_pi);
    return x;
}

TameElem TameField::neg(const TameElem& a) const {
    TameElem x = a;
    for (i64 i = 0; i < E_; ++i) {
        for (auto& c : x.c[i]) c = -c;
        x.c[i] = ured(x.c[i]);
    }
    return x;
}

TameElem TameField::mul(const TameElem& a, const TameElem& b) const {
    TameElem x = zero();
    for (i64 i = 0; i < E_; ++i) {
        bool azero = true;
        for (const auto& c : a.c[i])
            if (c != 0) { azero = false; break; }
        if (azero) continue;
        for (i64 j = 0; j < E_; ++j) {
            bool bzero = true;
            for (const auto& c : b.c[j])
                if (c != 0) { bzero = false; break; }
            if (bzero) continue;
            UEl prod = umul(a.c[i], b.c[j]);
            i64 k = (i + j) % E_;
            i64 carry = (i + j) / E_;
            if (carry > 0) {
                mpz_class pc;
                mpz_class pz(p_);
                mpz_pow_ui(pc.get_mpz_t(), pz.get_mpz_t(), (unsigned long)carry);
                for (auto& c : prod) c *= pc;
                prod = ured(prod);
            }
            x.c[k] = uadd(x.c[k], prod);
        }
    }
    x.prec_pi = std::min(a.prec_pi, b.prec_pi);
    return x;
}

TameElem TameField::mul_pi_pow(const TameElem& a, i64 k) const {
    if (k == 0) return a;
    TameElem x = zero();
    if (k > 0) {
        for (i64 i = 0; i < E_; ++i) {
            i64 tot = i + k;
            i64 slot = tot % E_;
            i64 carry = tot / E_;
            UEl v = a.c[i];
            if (carry > 0) {
                mpz_class pc;
                mpz_class pz(p_);
                mpz_pow_ui(pc.get_mpz_t(), pz.get_mpz_t(), (unsigned long)carry);
                for (auto& c : v) c *= pc;
            }
            x.c[slot] = uadd(x.c[slot], v);
        }
    } else {
        i64 m = -k;
        i64 qq = m / E_;
        i64 r = m % E_;
        for (i64 i = 0; i < E_; ++i) {
            i64 down = (i >= r) ? qq : qq + 1;
            i64 slot = (i - r + E_) % E_;
            UEl v = a.c[i];
            if (down > 0) {
                mpz_class pc;
                mpz_class pz(p_);
                mpz_pow_ui(pc.get_mpz_t(), pz.get_mpz_t(), (unsigned long)down);
                for (auto& c : v) {
                    mpz_class quo, rem;
                    mpz_fdiv_qr(quo.get_mpz_t(), rem.get_mpz_t(), c.get_mpz_t(), pc.get_mpz_t());
                    if (rem != 0)
                        throw PrecisionExhaustedError("mul_pi_pow: inexact division while rescaling");
                    c = quo;
                }
            }
            x.c[slot] = uadd(x.c[slot], v);
        }
    }
    x.prec_pi = std::min(a.prec_pi + k, full_prec());
    if (x.prec_pi <= 0) throw PrecisionExhaustedError("mul_pi_pow: precision exhausted");
    return x;
}

std::optional<i64> TameField::valuation_pi(const TameElem& a) const {
    i64 best = -1;
    for (i64 i = 0; i < E_; ++i) {
        for (i64 j = 0; j < F_; ++j) {
            if (a.c[i][j] == 0) continue;
            i64 v = mpz_val_p(a.c[i][j], p_);
            i64 cand = (i64)E_ * v + i;
            if (best < 0 || cand < best) best = cand;
        }
    }
    if (best < 0 || best >= a.prec_pi) return std::nullopt;
    return best;
}

std::optional<Rat> TameField::valuation(const TameElem& a) const {
    auto v = valuation_pi(a);
    if (!v) return std::nullopt;
    return Rat(*v, E_);
}

ResidueField::El TameField::residue(const TameElem& a) const {
    ResidueField::El r(F_);
    for (i64 j = 0; j < F_; ++j) r[j] = mpz_fdiv_ui(a.c[0][j].get_mpz_t(), (unsigned long)p_);
    return r;
}

TameElem TameField::inv(const TameElem& a) const {
    auto v = valuation_pi(a);
    if (!v || *v != 0) throw std::domain_error("TameField::inv: element is not a unit");
    auto r = residue(a);
    TameElem w = from_residue(fq_.inv(r));
    int steps = 1;
    while ((1LL << steps) < full_prec() + 2) ++steps;
    TameElem two = from_mpz(2);
    for (int it = 0; it <= steps; ++it) w = mul(w, sub(two, mul(a, w)));
    w.prec_pi = std::min(a.prec_pi, full_prec());
    return w;
}

std::optional<TameElem> TameField::sqrt(const TameElem& a) const {
    auto v = valuation_pi(a);
    if (!v) return zero();
    if (*v % 2 != 0) return std::nullopt;
    TameElem w = mul_pi_pow(a, -*v);
    auto rs = fq_.sqrt(residue(w));
    if (!rs) return std::nullopt;
    TameElem t = from_residue(*rs);
    int steps = 1;
    while ((1LL << steps) < full_prec() + 2) ++steps;
    for (int it = 0; it <= steps; ++it) {
        // t <- t - (t^2 - w) / (2t)
        TameElem num = sub(mul(t, t), w);
        TameElem den = add(t, t);
        t = sub(t, mul(num, inv(den)));
    }
    t.prec_pi = w.prec_pi;
    return mul_pi_pow(t, *v / 2);
}

TameElem TameField::apply_frob(const TameElem& a) const {
    TameElem x = a;
    for (i64 i = 0; i < E_; ++i) x.c[i] = usigma(a.c[i]);
    return x;
}

TameElem TameField::apply_iota(const TameElem& a) const {
    TameElem x = a;
    for (i64 i = 0; i < E_; ++i) x.c[i] = umul(a.c[i], zeta_pows_[i]);
    return x;
}

// ---------------------------------------------------------------- Newton polygon

std::vector<NewtonSegment> newton_polygon(const std::vector<mpz_class>& f, i64 p) {
    i64 d = poly_degree(f);
    if (d < 0) throw std::domain_error("newton_polygon: zero polynomial");
    std::vector<std::pair<i64, i64>> pts;  // (i, v_p(a_i)) over nonzero coefficients
    for (i64 i = 0; i <= d; ++i)
        if (f[i] != 0) pts.emplace_back(i, mpz_val_p(f[i], p));
    // lower convex hull, left to right
    std::vector<std::pair<i64, i64>> hull;
    for (const auto& pt : pts) {
        while (hull.size() >= 2) {
            auto& a = hull[hull.size() - 2];
            auto& b = hull[hull.size() - 1];
            // keep hull lower-convex: slope(a,b) <= slope(b,pt)
            if ((b.second - a.second) * (pt.first - b.first) >= (pt.second - b.second) * (b.first - a.first))
                hull.pop_back();
            else
                break;
        }
        hull.push_back(pt);
    }
    std::vector<NewtonSegment> segs;
    for (size_t i = 0; i + 1 < hull.size(); ++i) {
        Rat slope(hull[i + 1].second - hull[i].second, hull[i + 1].first - hull[i].first);
        segs.push_back({slope, hull[i + 1].first - hull[i].first});
    }
    return segs;
}

// ---------------------------------------------------------------- root finding

namespace {

using LPoly = std::vector<TameElem>;

struct SplitCtx {
    const TameField* L = nullptr;
    i64 need_E = 1;
    i64 need_F = 1;
    bool complete = true;
};

struct HullPoint {
    i64 idx;
    i64 val;      // pi-valuation when known
    bool known;
    i64 bound;    // lower bound when unknown
};

LPoly subst_pi_pow(const TameField& L, const LPoly& h, i64 m) {
    LPoly out(h.size());
    for (size_t i = 0; i < h.size(); ++i) out[i] = L.mul_pi_pow(h[i], m * (i64)i);
    return out;
}

// divide all coefficients by the minimal pi-valuation present
i64 normalize_poly(const TameField& L, LPoly& h) {
    i64 c = -1;
    for (const auto& coef : h) {
        auto v = L.valuation_pi(coef);
        if (v && (c < 0 || *v < c)) c = *v;
    }
    if (c < 0) throw PrecisionExhaustedError("normalize_poly: polynomial vanishes at precision");
    if (c > 0)
        for (auto& coef : h) coef = L.mul_pi_pow(coef, -c);
    return c;
}

LPoly taylor_shift(const TameField& L, const LPoly& h, const TameElem& a) {
    i64 d = (i64)h.size() - 1;
    LPoly out(h.size(), L.zero());
    std::vector<TameElem> apow(d + 1, L.one());
    for (i64 i = 1; i <= d; ++i) apow[i] = L.mul(apow[i - 1], a);
    std::vector<std::vector<mpz_class>> binom(d + 1, std::vector<mpz_class>(d + 1, mpz_class(0)));
    for (i64 i = 0; i <= d; ++i) {
        binom[i][0] = 1;
        for (i64 j = 1; j <= i; ++j)
            binom[i][j] = binom[i - 1][j - 1] + (j <= i - 1 ? binom[i - 1][j] : mpz_class(0));
    }
    for (i64 i = 0; i <= d; ++i) {
        for (i64 j = 0; j <= i; ++j) {
            TameElem term = L.mul(h[i], apow[i - j]);
            TameElem scaled = L.mul(term, L.from_mpz(binom[i][j]));
            out[j] = L.add(out[j], scaled);
        }
    }
    return out;
}

TameElem poly_eval_L(const TameField& L, const LPoly& h, const TameElem& z) {
    TameElem acc = L.zero();
    for (i64 i = (i64)h.size() - 1; i >= 0; --i) acc = L.add(L.mul(acc, z), h[i]);
    return acc;
}

LPoly poly_derivative_L(const TameField& L, const LPoly& h) {
    if (h.size() <= 1) return {L.zero()};
    LPoly d(h.size() - 1);
    for (size_t i = 1; i < h.size(); ++i) d[i - 1] = L.mul(h[i], L.from_mpz(mpz_class((unsigned long)i)));
    return d;
}

TameElem hensel_lift(const TameField& L, const LPoly& h, const TameElem& seed) {
    LPoly dh = poly_derivative_L(L, h);
    TameElem z = seed;
    i64 last_v = -1;
    for (int it = 0; it < 64; ++it) {
        TameElem fz = poly_eval_L(L, h, z);
        auto vf = L.valuation_pi(fz);
        if (!vf) break;  // vanishes at precision
        TameElem dz = poly_eval_L(L, dh, z);
        auto vd = L.valuation_pi(dz);
        if (!vd || *vd != 0) throw PrecisionExhaustedError("hensel_lift: derivative not a unit");
        if (*vf <= last_v) throw PrecisionExhaustedError("hensel_lift: no progress");
        last_v = *vf;
        z = L.sub(z, L.mul(fz, L.inv(dz)));
        if (*vf * 2 >= L.full_prec()) break;
    }
    TameElem fz = poly_eval_L(L, h, z);
    auto vf = L.valuation_pi(fz);
    i64 acc = vf ? *vf : fz.prec_pi;
    z.prec_pi = std::min(z.prec_pi, acc);  // simple residual root: v(h') = 0
    if (z.prec_pi <= 0) throw PrecisionExhaustedError("hensel_lift: no precision left");
    return z;
}

void collect_roots(SplitCtx& ctx, const LPoly& h, bool only_positive, std::vector<TameElem>& out) {
    const TameField& L = *ctx.L;
    i64 d = (i64)h.size() - 1;
    if (d <= 0) return;

    std::vector<HullPoint> pts(d + 1);
    for (i64 i = 0; i <= d; ++i) {
        auto v = L.valuation_pi(h[i]);
        pts[i] = {i, v ? *v : 0, v.has_value(), h[i].prec_pi};
    }
    if (!pts[d].known) throw PrecisionExhaustedError("collect_roots: leading coefficient at precision zero");

    i64 i0 = -1;
    for (i64 i = 0; i <= d; ++i)
        if (pts[i].known) { i0 = i; break; }

    // hull of known points
    std::vector<std::pair<i64, i64>> hull;
    for (i64 i = i0; i <= d; ++i) {
        if (!pts[i].known) continue;
        while (hull.size() >= 2) {
            auto& a = hull[hull.size() - 2];
            auto& b = hull.back();
            if ((b.second - a.second) * (pts[i].idx - b.first) >= (pts[i].val - b.second) * (b.first - a.first))
                hull.pop_back();
            else
                break;
        }
        hull.emplace_back(pts[i].idx, pts[i].val);
    }
    // unknown points must sit on or above the hull
    for (i64 i = i0 + 1; i <= d; ++i) {
        if (pts[i].known) continue;
        for (size_t s = 0; s + 1 < hull.size(); ++s) {
            if (hull[s].first <= i && i <= hull[s + 1].first) {
                // line value at i (times common denominator)
                i64 dx = hull[s + 1].first - hull[s].first;
                i64 lhs = pts[i].bound * dx;
                i64 rhs = hull[s].second * dx + (hull[s + 1].second - hull[s].second) * (i - hull[s].first);
                if (lhs < rhs)
                    throw PrecisionExhaustedError("collect_roots: coefficient precision below Newton hull");
            }
        }
    }

    // deep bucket near zero: the constant coefficient vanishes at precision
    if (i0 > 0) {
        if (i0 == 1) {
            i64 prec = pts[0].bound - pts[1].val;
            if (prec <= 0) throw PrecisionExhaustedError("collect_roots: deep root below usable precision");
            TameElem z = L.zero();
            z.prec_pi = prec;
            out.push_back(z);
        } else {
            throw PrecisionExhaustedError("collect_roots: unresolved deep root cluster");
        }
    }

    for (size_t s = 0; s + 1 < hull.size(); ++s) {
        i64 il = hull[s].first, ir = hull[s + 1].first;
        i64 dv = hull[s].second - hull[s + 1].second;  // = m * (ir - il) when slope is -m
        i64 dx = ir - il;
        i64 g = std::gcd(dv < 0 ? -dv : dv, dx);
        i64 num = dv / (g == 0 ? 1 : g), den = dx / (g == 0 ? 1 : g);
        if (dv < 0) {
            if (only_positive) continue;  // negative-valuation roots belong to enclosing levels
            // roots of negative valuation cannot occur for the monic integral
            // inputs this module accepts
            throw std::logic_error("collect_roots: negative-valuation segment on integral input");
        }
        if (den != 1) {
            // fractional slope: ramification requirement in absolute terms
            Rat vp(dv, dx * L.E());  // root valuation in v(p)=1 units
            i64 denom = vp.d;
            if (denom % L.p() == 0)
                throw WildRamificationError("root valuation denominator divisible by p");
            ctx.need_E = std::lcm(ctx.need_E, denom);
            ctx.complete = false;
            continue;
        }
        i64 m = num;  // integral slope: root pi-valuation m on this segment
        if (only_positive && m <= 0) continue;

        LPoly hseg = subst_pi_pow(L, h, m);
        normalize_poly(L, hseg);

        // residue polynomial; nonzero exactly on this segment's support line
        std::vector<ResidueField::El> rbar(hseg.size(), L.residue_field().zero());
        for (size_t i = 0; i < hseg.size(); ++i) {
            auto v = L.valuation_pi(hseg[i]);
            if (v && *v == 0) rbar[i] = L.residue(hseg[i]);
        }
        auto report = L.residue_field().roots_of(rbar);
        for (i64 dd : report.nonsplit_degrees) {
            ctx.need_F = std::lcm(ctx.need_F, L.F() * dd);
            ctx.complete = false;
        }
        for (const auto& [rbar_root, mult] : report.roots) {
            if (L.residue_field().is_zero(rbar_root)) continue;  // deeper segments handle these
            TameElem lift = L.from_residue(rbar_root);
            if (mult == 1) {
                TameElem z = hensel_lift(L, hseg, lift);
                out.push_back(L.mul_pi_pow(z, m));
            } else {
                LPoly shifted = taylor_shift(L, hseg, lift);
                normalize_poly(L, shifted);
                std::vector<TameElem> sub;
                collect_roots(ctx, shifted, true, sub);
                if (!ctx.complete) continue;
                for (const auto& u : sub) out.push_back(L.mul_pi_pow(L.add(lift, u), m));
            }
        }
    }
}

struct AttemptResult {
    bool complete = false;
    std::vector<TameElem> roots;
    i64 need_E = 1;
    i64 need_F = 1;
};

AttemptResult attempt_split(const TameField& L, const std::vector<mpz_class>& f) {
    SplitCtx ctx;
    ctx.L = &L;
    AttemptResult res;
    i64 d = poly_degree(f);

    std::vector<mpz_class> g = f;
    // exact zero roots
    i64 zero_roots = 0;
    while (g.size() > 1 && g[0] == 0) {
        g.erase(g.begin());
        ++zero_roots;
    }
    LPoly hp((size_t)poly_degree(g) + 1);
    for (size_t i = 0; i < hp.size(); ++i) hp[i] = L.from_mpz(g[i]);

    std::vector<TameElem> roots;
    for (i64 i = 0; i < zero_roots; ++i) roots.push_back(L.zero());
    collect_roots(ctx, hp, false, roots);

    res.need_E = ctx.need_E;
    res.need_F = ctx.need_F;
    if (!ctx.complete) return res;
    if ((i64)roots.size() != d)
        throw PrecisionExhaustedError("attempt_split: root count mismatch");
    res.complete = true;
    res.roots = std::move(roots);
    return res;
}

}  // namespace

static RootSystem finish_root_system(std::shared_ptr<TameField> Lp, const std::vector<mpz_class>& f,
                                     std::vector<TameElem> roots) {
    const TameField& L = *Lp;
    RootSystem rs;
    rs.field = Lp;
    rs.poly = f;
    rs.roots = std::move(roots);
    i64 n = (i64)rs.roots.size();
    rs.val_matrix.assign(n, std::vector<Rat>(n, Rat(0)));
    i64 max_pi = 0;
    for (i64 i = 0; i < n; ++i) {
        for (i64 j = i + 1; j < n; ++j) {
            TameElem diff = L.sub(rs.roots[i], rs.roots[j]);
            auto v = L.valuation_pi(diff);
            if (!v) throw PrecisionExhaustedError("root system: two roots collide at precision");
            rs.val_matrix[i][j] = rs.val_matrix[j][i] = Rat(*v, L.E());
            max_pi = std::max(max_pi, *v);
        }
    }
    for (i64 i = 0; i < n; ++i)
        if (rs.roots[i].prec_pi <= max_pi)
            throw PrecisionExhaustedError("root system: root precision below separation scale");

    auto match = [&](const TameElem& img) -> i64 {
        i64 best = -1;
        for (i64 j = 0; j < n; ++j) {
            TameElem diff = L.sub(img, rs.roots[j]);
            auto v = L.valuation_pi(diff);
            if (!v || *v > max_pi) {
                if (best >= 0) throw PrecisionExhaustedError("root matching: ambiguous image");
                best = j;
            }
        }
        if (best < 0) throw PrecisionExhaustedError("root matching: no candidate");
        return best;
    };
    rs.iota_perm.resize(n);
    rs.frob_perm.resize(n);
    std::vector<bool> seen_i(n, false), seen_f(n, false);
    for (i64 i = 0; i < n; ++i) {
        rs.iota_perm[i] = match(L.apply_iota(rs.roots[i]));
        rs.frob_perm[i] = match(L.apply_frob(rs.roots[i]));
        if (seen_i[rs.iota_perm[i]] || seen_f[rs.frob_perm[i]])
            throw PrecisionExhaustedError("root matching: permutation not injective");
        seen_i[rs.iota_perm[i]] = seen_f[rs.frob_perm[i]] = true;
    }

    // invariants: both permutations preserve the valuation matrix, and
    // frob iota frob^-1 = iota^p
    for (i64 i = 0; i < n; ++i)
        for (i64 j = 0; j < n; ++j) {
            if (i == j) continue;
            if (rs.val_matrix[rs.iota_perm[i]][rs.iota_perm[j]] != rs.val_matrix[i][j] ||
                rs.val_matrix[rs.frob_perm[i]][rs.frob_perm[j]] != rs.val_matrix[i][j])
                throw std::logic_error("root system: Galois action does not preserve valuations");
        }
    {
        std::vector<i64> finv(n);
        for (i64 i = 0; i < n; ++i) finv[rs.frob_perm[i]] = i;
        for (i64 i = 0; i < n; ++i) {
            i64 lhs = rs.frob_perm[rs.iota_perm[finv[i]]];
            i64 rhs = i;
            for (i64 k = 0; k < L.p() % (4 * n * L.E() == 0 ? 1 : 1); ++k) rhs = rhs;  // placeholder
            (void)lhs;
            (void)rhs;
        }
        // iota^p as a permutation
        std::vector<i64> ip(n);
        for (i64 i = 0; i < n; ++i) ip[i] = i;
        for (i64 k = 0; k < L.p() % lcm_order(rs.iota_perm); ++k)
            for (i64 i = 0; i < n; ++i) ip[i] = rs.iota_perm[ip[i]];
        for (i64 i = 0; i < n; ++i) {
            if (rs.frob_perm[rs.iota_perm[finv[i]]] != ip[i])
                throw std::logic_error("root system: frob iota frob^-1 != iota^p");
        }
    }
    return rs;
}

RootSystem splitting_data_in(const std::vector<mpz_class>& f_monic, i64 p, i64 F, i64 E, i64 N) {
    auto L = std::make_shared<TameField>(p, F, E, N);
    auto attempt = attempt_split(*L, f_monic);
    if (!attempt.complete)
        throw PrecisionExhaustedError("splitting_data_in: polynomial does not split in the prescribed field");
    return finish_root_system(L, f_monic, std::move(attempt.roots));
}

RootSystem splitting_data(const std::vector<mpz_class>& f_monic, i64 p) {
    i64 d = poly_degree(f_monic);
    if (d < 1) throw std::domain_error("splitting_data: degree must be >= 1");
    if (f_monic[d] != 1) throw std::domain_error("splitting_data: polynomial must be monic");
    if (p < 3 || !is_prime_u64((u64)p)) throw std::domain_error("splitting_data: p must be an odd prime");
    mpz_class disc = poly_disc(f_monic);
    if (disc == 0) throw NotSquarefreeError("splitting_data: repeated roots");
    i64 vdisc = mpz_val_p(disc, p);
    i64 N = 2 * vdisc + 8;

    const i64 kMaxN = 1 << 14;
    const i64 kMaxSize = 512;
    while (true) {
        try {
            i64 needE = 1, needF = 1;
            while (true) {
                bool attempted = false;
                for (i64 s = 1; s <= kMaxSize; ++s) {
                    for (i64 F = 1; F <= s; ++F) {
                        if (s % F != 0) continue;
                        i64 E = s / F;
                        if (F % needF != 0 || E % needE != 0) continue;
                        if (E > 1 && powmod((u64)(p % E), (u64)F, (u64)E) != 1 % (u64)E) continue;
                        if (F * std::log2((double)p) > 120) continue;
                        auto L = std::make_shared<TameField>(p, F, E, N);
                        auto attempt = attempt_split(*L, f_monic);
                        attempted = true;
                        if (attempt.complete)
                            return finish_root_system(L, f_monic, std::move(attempt.roots));
                        bool grew = false;
                        if (attempt.need_E % needE != 0 || needE % attempt.need_E != 0 || attempt.need_E > needE) {
                            i64 ne = std::lcm(needE, attempt.need_E);
                            if (ne != needE) { needE = ne; grew = true; }
                        }
                        {
                            i64 nf = std::lcm(needF, attempt.need_F);
                            if (nf != needF) { needF = nf; grew = true; }
                        }
                        if (grew) goto rescan;
                    }
                }
                if (!attempted || true)
                    throw WildRamificationError("splitting_data: no tame splitting field within the search bound");
            rescan:;
            }
        } catch (const PrecisionExhaustedError&) {
            N *= 2;
            if (N > kMaxN) throw;
        }
    }
}

}  // namespace rootw
