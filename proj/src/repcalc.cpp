#include "rootw/repcalc.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "rootw/errors.hpp"

namespace rootw {

namespace {

// Exact division of integer polynomials (ascending coefficients), remainder
// must vanish.
std::vector<mpz_class> poly_divexact(std::vector<mpz_class> num, const std::vector<mpz_class>& den) {
    std::vector<mpz_class> quot(num.size() - den.size() + 1);
    for (i64 i = (i64)quot.size() - 1; i >= 0; --i) {
        mpz_class c = num[i + den.size() - 1] / den.back();
        quot[i] = c;
        if (c != 0)
            for (size_t j = 0; j < den.size(); ++j) num[i + j] -= c * den[j];
    }
    for (const auto& c : num)
        if (c != 0) throw std::logic_error("poly_divexact: nonzero remainder");
    return quot;
}

}  // namespace

std::vector<mpz_class> CycField::cyclotomic_polynomial(i64 m) {
    // x^m - 1 divided by all proper-divisor cyclotomics.
    std::vector<mpz_class> num(m + 1);
    num[0] = -1;
    num[m] = 1;
    for (i64 d = 1; d < m; ++d) {
        if (m % d != 0) continue;
        auto phid = cyclotomic_polynomial(d);
        num = poly_divexact(std::move(num), phid);
    }
    return num;
}

CycField::CycField(i64 conductor) : M_(conductor) {
    if (M_ < 1) throw std::domain_error("CycField: conductor must be positive");
    phi_poly_ = cyclotomic_polynomial(M_);
    phi_ = (i64)phi_poly_.size() - 1;
    // Powers x^k mod Phi_M for k < 2*phi_ (enough to reduce products).
    zpow_.resize(std::max<i64>(2 * phi_, M_));
    std::vector<mpz_class> cur(phi_, 0);
    if (phi_ > 0) cur[0] = 1;
    for (i64 k = 0; k < (i64)zpow_.size(); ++k) {
        zpow_[k] = cur;
        // multiply by x
        std::vector<mpz_class> next(phi_, 0);
        mpz_class top = cur[phi_ - 1];
        for (i64 i = phi_ - 1; i > 0; --i) next[i] = cur[i - 1];
        next[0] = 0;
        if (top != 0)
            for (i64 i = 0; i < phi_; ++i) next[i] -= top * phi_poly_[i];
        cur = std::move(next);
    }
}

CycField::Elem CycField::zero() const { return Elem(phi_, mpq_class(0)); }

CycField::Elem CycField::one() const {
    Elem v = zero();
    v[0] = 1;
    return v;
}

CycField::Elem CycField::rational(const mpq_class& r) const {
    Elem v = zero();
    v[0] = r;
    return v;
}

CycField::Elem CycField::zeta_pow(i64 k) const {
    k %= M_;
    if (k < 0) k += M_;
    Elem v = zero();
    const auto& zp = zpow_[k];
    for (i64 i = 0; i < phi_; ++i) v[i] = zp[i];
    return v;
}

CycField::Elem CycField::add(const Elem& a, const Elem& b) const {
    Elem v = a;
    for (i64 i = 0; i < phi_; ++i) v[i] += b[i];
    return v;
}

CycField::Elem CycField::sub(const Elem& a, const Elem& b) const {
    Elem v = a;
    for (i64 i = 0; i < phi_; ++i) v[i] -= b[i];
    return v;
}

CycField::Elem CycField::mul(const Elem& a, const Elem& b) const {
    std::vector<mpq_class> prod(2 * phi_ - 1, mpq_class(0));
    for (i64 i = 0; i < phi_; ++i) {
        if (a[i] == 0) continue;
        for (i64 j = 0; j < phi_; ++j) {
            if (b[j] == 0) continue;
            prod[i + j] += a[i] * b[j];
        }
    }
    Elem v = zero();
    for (i64 k = 0; k < (i64)prod.size(); ++k) {
        if (prod[k] == 0) continue;
        const auto& zp = zpow_[k];
        for (i64 i = 0; i < phi_; ++i)
            if (zp[i] != 0) v[i] += prod[k] * zp[i];
    }
    return v;
}

CycField::Elem CycField::scale(const Elem& a, const mpq_class& c) const {
    Elem v = a;
    for (auto& x : v) x *= c;
    return v;
}

CycField::Elem CycField::conj(const Elem& a) const {
    Elem v = zero();
    for (i64 i = 0; i < phi_; ++i) {
        if (a[i] == 0) continue;
        i64 k = (M_ - i) % M_;
        const auto& zp = zpow_[k];
        for (i64 j = 0; j < phi_; ++j)
            if (zp[j] != 0) v[j] += a[i] * zp[j];
    }
    return v;
}

bool CycField::eq(const Elem& a, const Elem& b) const {
    for (i64 i = 0; i < phi_; ++i)
        if (a[i] != b[i]) return false;
    return true;
}

bool CycField::is_zero(const Elem& a) const {
    for (const auto& x : a)
        if (x != 0) return false;
    return true;
}

std::optional<mpq_class> CycField::as_rational(const Elem& a) const {
    for (i64 i = 1; i < phi_; ++i)
        if (a[i] != 0) return std::nullopt;
    return a[0];
}

MetaElem MetacyclicGroup::mul(MetaElem g, MetaElem h) const {
    i64 qy = (i64)powmod((u64)(((q % e) + e) % e), (u64)g.y, (u64)e);
    i64 x = (g.x + h.x % e * qy) % e;
    if (x < 0) x += e;
    return {x, (g.y + h.y) % n};
}

MetaElem MetacyclicGroup::square(MetaElem g) const { return mul(g, g); }

CycField::Elem MetacyclicRep::character(i64 x, i64 y) const {
    x %= e;
    if (x < 0) x += e;
    y %= n;
    if (y < 0) y += n;
    if (y % f != 0) return K->zero();
    i64 M = K->conductor();
    // gamma(frob^f)^{y/f} = zeta_{n/f}^{t*(y/f)}
    i64 gexp = (M / (n / f)) * ((t * (y / f)) % (n / f));
    CycField::Elem val = K->zero();
    // sum over the orbit: zeta_e^{x*a*q^{-j}}
    i64 qinv = (i64)powmod((u64)(((q % e) + e) % e), euler_phi((u64)e) - 1, (u64)e);
    i64 aj = a;
    for (i64 j = 0; j < f; ++j) {
        val = K->add(val, K->zeta_pow((M / e) * ((x * aj) % e)));
        aj = (aj * qinv) % e;
    }
    return K->mul(val, K->zeta_pow(gexp));
}

std::vector<std::vector<CycField::Elem>> MetacyclicRep::matrix_iota() const {
    i64 M = K->conductor();
    i64 qinv = (i64)powmod((u64)(((q % e) + e) % e), euler_phi((u64)e) - 1, (u64)e);
    std::vector<std::vector<CycField::Elem>> m(f, std::vector<CycField::Elem>(f, K->zero()));
    i64 aj = a;
    for (i64 j = 0; j < f; ++j) {
        m[j][j] = K->zeta_pow((M / e) * (aj % e));
        aj = (aj * qinv) % e;
    }
    return m;
}

std::vector<std::vector<CycField::Elem>> MetacyclicRep::matrix_frob() const {
    i64 M = K->conductor();
    std::vector<std::vector<CycField::Elem>> m(f, std::vector<CycField::Elem>(f, K->zero()));
    for (i64 j = 0; j + 1 < f; ++j) m[j + 1][j] = K->one();
    m[0][f - 1] = K->zeta_pow((M / (n / f)) * (t % (n / f)));
    return m;
}

bool MetacyclicRep::is_faithful() const {
    MetacyclicGroup G{e, n, q};
    auto dimv = K->rational(mpq_class(f));
    for (i64 x = 0; x < e; ++x)
        for (i64 y = 0; y < n; ++y) {
            if (x == 0 && y == 0) continue;
            if (K->eq(character(x, y), dimv)) return false;
        }
    return true;
}

bool MetacyclicRep::is_selfdual() const {
    for (i64 x = 0; x < e; ++x)
        for (i64 y = 0; y < n; ++y) {
            auto c = character(x, y);
            if (!K->eq(c, K->conj(c))) return false;
        }
    return true;
}

std::vector<MetacyclicRep> irreducibles(i64 e, i64 n, i64 q) {
    if (e < 1 || n < 1) throw std::domain_error("irreducibles: bad group parameters");
    q = ((q % e) + e) % e;
    if (e > 1 && powmod((u64)q, (u64)n, (u64)e) != 1 % (u64)e)
        throw std::domain_error("irreducibles: q^n must be 1 mod e");
    i64 M = std::lcm(e, 2 * n);
    auto K = std::make_shared<CycField>(M);
    std::vector<MetacyclicRep> reps;
    std::vector<bool> seen(e, false);
    for (i64 a = 0; a < e; ++a) {
        if (seen[a]) continue;
        // orbit of a under multiplication by q
        i64 f = 0, b = a;
        do {
            seen[b] = true;
            b = (b * q) % e;
            ++f;
        } while (b != a);
        for (i64 t = 0; t < n / f; ++t) reps.push_back(MetacyclicRep{e, n, q, a, f, t, K});
    }
    return reps;
}

int frobenius_schur(const MetacyclicRep& rep) {
    MetacyclicGroup G{rep.e, rep.n, rep.q};
    auto sum = rep.K->zero();
    for (i64 x = 0; x < rep.e; ++x)
        for (i64 y = 0; y < rep.n; ++y) {
            auto g2 = G.square({x, y});
            sum = rep.K->add(sum, rep.character(g2.x, g2.y));
        }
    auto r = rep.K->as_rational(sum);
    if (!r) throw std::logic_error("frobenius_schur: indicator sum is not rational");
    mpq_class val = *r / mpq_class(G.size());
    if (val == 0) return 0;
    if (val == 1) return 1;
    if (val == -1) return -1;
    throw std::logic_error("frobenius_schur: indicator outside {-1,0,1}; representation not irreducible?");
}

i64 inner_product(const MetacyclicRep& r1, const MetacyclicRep& r2) {
    if (r1.e != r2.e || r1.n != r2.n || r1.q != r2.q)
        throw std::domain_error("inner_product: representations of different groups");
    auto sum = r1.K->zero();
    for (i64 x = 0; x < r1.e; ++x)
        for (i64 y = 0; y < r1.n; ++y) {
            auto c1 = r1.character(x, y);
            auto c2 = r2.K->conj(r2.character(x, y));
            sum = r1.K->add(sum, r1.K->mul(c1, c2));
        }
    auto r = r1.K->as_rational(sum);
    if (!r) throw std::logic_error("inner_product: non-rational value");
    mpq_class val = *r / mpq_class(r1.e * r1.n);
    if (val.get_den() != 1) throw std::logic_error("inner_product: non-integral value");
    return (i64)val.get_num().get_si();
}

i64 inner_product_with_char(const MetacyclicRep& rep, i64 chi_iota_num, i64 chi_iota_den,
                            i64 chi_frob_num, i64 chi_frob_den) {
    i64 M = rep.K->conductor();
    if (M % chi_iota_den != 0 || M % chi_frob_den != 0)
        throw std::domain_error("inner_product_with_char: character order does not divide conductor");
    auto sum = rep.K->zero();
    for (i64 x = 0; x < rep.e; ++x)
        for (i64 y = 0; y < rep.n; ++y) {
            auto c1 = rep.character(x, y);
            if (rep.K->is_zero(c1)) continue;
            i64 ce = (M / chi_iota_den) * ((chi_iota_num * x) % chi_iota_den) +
                     (M / chi_frob_den) * ((chi_frob_num * y) % chi_frob_den);
            auto c2 = rep.K->conj(rep.K->zeta_pow(ce));
            sum = rep.K->add(sum, rep.K->mul(c1, c2));
        }
    auto r = rep.K->as_rational(sum);
    if (!r) throw std::logic_error("inner_product_with_char: non-rational value");
    mpq_class val = *r / mpq_class(rep.e * rep.n);
    if (val.get_den() != 1) throw std::logic_error("inner_product_with_char: non-integral value");
    return (i64)val.get_num().get_si();
}

MetacyclicRep unramified_twist(const MetacyclicRep& rep, i64 tw) {
    // gamma index shifts by tw restricted to <frob^f>: nu(frob^f) = zeta_{2f}^{tw*f}
    // with n = 2f this is zeta_2^{tw}, i.e. t -> t + tw*f*(n/f)/n ... compute via orders:
    // nu(frob) = zeta_n'^{tw} with n' = n; nu(frob^f) = zeta_{n/f}^{tw}.
    MetacyclicRep r = rep;
    r.t = (rep.t + tw) % (rep.n / rep.f);
    return r;
}

BruteRhoE brute_rho_e(i64 e, i64 q, bool with_reps) {
    if (e < 1 || q < 2) throw std::domain_error("brute_rho_e: bad arguments");
    if (std::gcd(e, q) != 1) throw std::domain_error("brute_rho_e: e and q must be coprime");
    BruteRhoE out;
    out.e = e;
    out.q = q;

    if (e <= 2) {
        // A self-dual character appearing twice; handled as a dual pair.
        out.f = 1;
        out.num_blocks = 1;
        out.self_dual = false;
        out.W = dual_pair_W(e, 1, q);
        return out;
    }

    i64 qe = ((q % e) + e) % e;
    i64 f = (i64)multiplicative_order((u64)qe, (u64)e);
    out.f = f;
    i64 phi = (i64)euler_phi((u64)e);
    out.num_blocks = phi / f;

    bool selfdual = false;
    if (f % 2 == 0) selfdual = (powmod((u64)qe, (u64)(f / 2), (u64)e) == (u64)(e - 1));
    out.self_dual = selfdual;

    if (selfdual) {
        int blockW = selfdual_irred_W(e, f, q, SelfDualKind::Symplectic);
        out.W = (out.num_blocks % 2 == 0) ? 1 : blockW;
    } else {
        if (out.num_blocks % 2 != 0) throw std::logic_error("brute_rho_e: dual orbits must pair up");
        int pairW = dual_pair_W(e, f, q);
        out.W = 1;
        for (i64 i = 0; i < out.num_blocks / 2; ++i) out.W *= pairW;
    }

    if (with_reps) {
        // Orbits of <q> on the primitive residues; in the self-dual case the
        // symplectic member (gamma of order 2) of each pair of extensions.
        i64 n = selfdual ? 2 * f : f;
        auto all = irreducibles(e, n, qe);
        std::set<i64> prim_orbit_reps;
        std::vector<bool> seen(e, false);
        for (i64 a = 1; a < e; ++a) {
            if (seen[a] || std::gcd(a, e) != 1) continue;
            i64 b = a;
            do {
                seen[b] = true;
                b = (b * qe) % e;
            } while (b != a);
            prim_orbit_reps.insert(a);
        }
        for (const auto& rep : all) {
            if (!prim_orbit_reps.count(rep.a) || rep.f != f) continue;
            if (selfdual) {
                // keep the symplectic extension: gamma of exact order 2
                if (rep.n / rep.f == 2 && rep.t == 1) out.blocks.push_back(rep);
            } else {
                out.blocks.push_back(rep);
            }
        }
    }
    return out;
}

std::vector<MetacyclicRep> rho_ef(i64 e, i64 q) {
    if (e < 1 || std::gcd(e, q) != 1) throw std::domain_error("rho_ef: e and q must be coprime");
    i64 qe = e == 1 ? 0 : ((q % e) + e) % e;
    i64 f = e == 1 ? 1 : (i64)multiplicative_order((u64)qe, (u64)e);
    auto all = irreducibles(e, f, e == 1 ? 1 : qe);
    std::vector<MetacyclicRep> out;
    for (const auto& rep : all)
        if (rep.dim() == f && rep.is_faithful()) out.push_back(rep);
    return out;
}

}  // namespace rootw
