#pragma once

#include <gmpxx.h>

#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "rootw/intmath.hpp"
#include "rootw/rootnum.hpp"

namespace rootw {

/// Exact arithmetic in Q(zeta_M), elements written in the power basis
/// 1, zeta, ..., zeta^{phi(M)-1} with reduction by the M-th cyclotomic
/// polynomial.
class CycField {
  public:
    explicit CycField(i64 conductor);

    i64 conductor() const { return M_; }
    i64 degree() const { return phi_; }

    using Elem = std::vector<mpq_class>;  // length phi()

    Elem zero() const;
    Elem one() const;
    Elem rational(const mpq_class& r) const;
    Elem zeta_pow(i64 k) const;  // zeta_M^k

    Elem add(const Elem& a, const Elem& b) const;
    Elem sub(const Elem& a, const Elem& b) const;
    Elem mul(const Elem& a, const Elem& b) const;
    Elem scale(const Elem& a, const mpq_class& c) const;
    Elem conj(const Elem& a) const;  // zeta -> zeta^{-1}
    bool eq(const Elem& a, const Elem& b) const;
    bool is_zero(const Elem& a) const;
    std::optional<mpq_class> as_rational(const Elem& a) const;

    static std::vector<mpz_class> cyclotomic_polynomial(i64 m);

  private:
    i64 M_;
    i64 phi_;
    std::vector<mpz_class> phi_poly_;            // monic, ascending, degree phi_
    std::vector<std::vector<mpz_class>> zpow_;   // x^k mod Phi_M for k < 2*phi_
};

/// Group element of <iota, frob | iota^e, frob^n, frob iota frob^-1 = iota^q>,
/// stored as iota^x frob^y.
struct MetaElem {
    i64 x = 0;
    i64 y = 0;
};

/// An irreducible representation of C_e x| C_n, realized as the monomial
/// induced module of the inertia character a with frob-return value
/// zeta_{n/f}^t.
class MetacyclicRep {
  public:
    i64 e, n, q;
    i64 a;    // inertia character exponent (orbit representative)
    i64 f;    // orbit length = dimension
    i64 t;    // gamma index: gamma(frob^f) = zeta_{n/f}^t
    std::shared_ptr<CycField> K;

    i64 dim() const { return f; }

    /// Trace of the representation at iota^x frob^y. Zero off the subgroup
    /// f | y; closed monomial form otherwise.
    CycField::Elem character(i64 x, i64 y) const;

    std::vector<std::vector<CycField::Elem>> matrix_iota() const;
    std::vector<std::vector<CycField::Elem>> matrix_frob() const;

    bool is_faithful() const;
    bool is_selfdual() const;
};

struct MetacyclicGroup {
    i64 e, n, q;
    MetaElem mul(MetaElem g, MetaElem h) const;
    MetaElem square(MetaElem g) const;
    i64 size() const { return e * n; }
};

/// All irreducible representations of C_e x| C_n with frob iota frob^-1 = iota^q.
/// Requires q^n = 1 mod e.
std::vector<MetacyclicRep> irreducibles(i64 e, i64 n, i64 q);

/// Frobenius-Schur indicator: 1 orthogonal, -1 symplectic, 0 not self-dual.
int frobenius_schur(const MetacyclicRep& rep);

/// Exact inner product of characters of two representations of the same group.
i64 inner_product(const MetacyclicRep& r1, const MetacyclicRep& r2);

/// Inner product of the character of `rep` with an explicit 1-dimensional
/// character (values given as chi(iota), chi(frob) exponents of zeta_M).
i64 inner_product_with_char(const MetacyclicRep& rep, i64 chi_iota_num, i64 chi_iota_den,
                            i64 chi_frob_num, i64 chi_frob_den);

/// Twist by the unramified character frob -> zeta_{2f}^t (t odd gives the
/// order-2f primitive case used by the indicator swap).
MetacyclicRep unramified_twist(const MetacyclicRep& rep, i64 t);

/// Brute-force assembly of rho_e: the phi~(e) eigenvalues of order e grouped
/// into blocks along the orbits of <q> on the primitive residues mod e, each
/// block's sign taken from the dual-pair / self-dual closed forms, with
/// orthogonal blocks replaced by their symplectic unramified twists.
struct BruteRhoE {
    i64 e = 0, q = 0;
    i64 f = 0;              // block dimension
    i64 num_blocks = 0;
    bool self_dual = false;
    int W = 1;
    std::vector<MetacyclicRep> blocks;  // symplectic versions when self-dual
};
BruteRhoE brute_rho_e(i64 e, i64 q, bool with_reps = false);

/// The direct sum of all faithful f-dimensional irreducibles of
/// Gal(K(zeta_e, pi^{1/e})/K) = C_e x| C_f, f = order of q mod e.
std::vector<MetacyclicRep> rho_ef(i64 e, i64 q);

}  // namespace rootw
