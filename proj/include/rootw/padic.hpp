#pragma once

#include <gmpxx.h>

#include <memory>
#include <optional>
#include <vector>

#include "rootw/intmath.hpp"
#include "rootw/rational.hpp"

namespace rootw {

/// Arithmetic in the residue field F_{p^F} = F_p[x]/(u0).
struct ResidueField {
    i64 p = 0;
    i64 F = 1;
    std::vector<u64> modulus;  // monic irreducible, ascending, length F+1

    using El = std::vector<u64>;  // length F

    u128 size() const;  // p^F
    El zero() const { return El(F, 0); }
    El one() const;
    El from_int(i64 a) const;
    bool is_zero(const El& a) const;
    bool eq(const El& a, const El& b) const;
    El add(const El& a, const El& b) const;
    El sub(const El& a, const El& b) const;
    El mul(const El& a, const El& b) const;
    El pow(const El& a, u128 e) const;
    El inv(const El& a) const;
    El frobenius(const El& a) const { return pow(a, (u128)(u64)p); }
    std::optional<El> sqrt(const El& a) const;

    /// Element of exact multiplicative order n (requires n | p^F - 1).
    El element_of_order(i64 n) const;

    /// Distinct roots in F_{p^F} of a polynomial over this field, with
    /// multiplicities; also reports degrees of irreducible factors that do
    /// not split here.
    struct RootReport {
        std::vector<std::pair<El, int>> roots;
        std::vector<i64> nonsplit_degrees;
    };
    RootReport roots_of(const std::vector<El>& poly) const;
};

/// An element of the tame extension Q_{p^F}(pi), pi^E = p, carried modulo
/// p^N on each coordinate. `prec_pi` is the absolute precision in pi-units:
/// the element is known modulo pi^prec_pi.
struct TameElem {
    std::vector<std::vector<mpz_class>> c;  // c[i][j]: coefficient of x^j pi^i, 0<=i<E, 0<=j<F
    i64 prec_pi = 0;
};

/// The working model of one tame extension of Q_p: unramified part
/// U = Z_p[x]/(u(x)) to precision p^N, uniformiser pi with pi^E = p, the
/// inertia generator pi -> zeta_E pi and the Frobenius lift fixing pi.
class TameField {
  public:
    TameField(i64 p, i64 F, i64 E, i64 N);

    i64 p() const { return p_; }
    i64 F() const { return F_; }
    i64 E() const { return E_; }
    i64 N() const { return N_; }
    i64 full_prec() const { return N_ * E_; }
    const ResidueField& residue_field() const { return fq_; }

    TameElem zero() const;
    TameElem one() const;
    TameElem from_mpz(const mpz_class& a) const;
    TameElem from_residue(const ResidueField::El& a) const;  // plain digit lift
    TameElem teichmuller(const ResidueField::El& a) const;

    TameElem add(const TameElem& a, const TameElem& b) const;
    TameElem sub(const TameElem& a, const TameElem& b) const;
    TameElem neg(const TameElem& a) const;
    TameElem mul(const TameElem& a, const TameElem& b) const;
    /// Multiply by pi^k (k may be negative; requires exact divisibility).
    TameElem mul_pi_pow(const TameElem& a, i64 k) const;
    /// Inverse of a unit (valuation 0).
    TameElem inv(const TameElem& a) const;
    std::optional<TameElem> sqrt(const TameElem& a) const;

    /// Exact valuation in units v(p) = 1, or nullopt when the element is
    /// indistinguishable from zero at its precision.
    std::optional<Rat> valuation(const TameElem& a) const;
    /// Valuation in pi-units (E * v).
    std::optional<i64> valuation_pi(const TameElem& a) const;

    bool is_zero_at_prec(const TameElem& a) const { return !valuation_pi(a).has_value(); }

    /// Reduction of an integral element to the residue field.
    ResidueField::El residue(const TameElem& a) const;

    TameElem apply_frob(const TameElem& a) const;
    TameElem apply_iota(const TameElem& a) const;

  private:
    i64 p_, F_, E_, N_;
    mpz_class pN_;
    ResidueField fq_;
    std::vector<mpz_class> umod_;                 // monic lift of u0, ascending, length F+1
    std::vector<std::vector<mpz_class>> sigma_;   // Frobenius matrix on the x-power basis
    std::vector<std::vector<mpz_class>> zeta_pows_;  // zeta_E^i as U-elements, i < E

    using UEl = std::vector<mpz_class>;
    UEl ured(const UEl& a) const;
    UEl uadd(const UEl& a, const UEl& b) const;
    UEl usub(const UEl& a, const UEl& b) const;
    UEl umul(const UEl& a, const UEl& b) const;
    UEl uinv(const UEl& a) const;
    UEl upow_u128(const UEl& a, u128 e) const;
    UEl usigma(const UEl& a) const;
    bool u_is_unit(const UEl& a) const;
    friend class TameFieldTestAccess;

    void build_unramified();
    void build_zeta();
};

struct NewtonSegment {
    Rat slope;   // slope of the hull segment; root valuations are -slope
    i64 length;  // horizontal length = number of roots with that valuation
};

/// Newton polygon of a nonzero integer polynomial at p. Roots equal to zero
/// (trailing zero coefficients) are excluded from the segment list; their
/// count is deg f minus the sum of segment lengths.
std::vector<NewtonSegment> newton_polygon(const std::vector<mpz_class>& f, i64 p);

/// All roots of a monic squarefree integer polynomial in a minimal tame
/// splitting field, with the exact pairwise valuation matrix and the inertia
/// and Frobenius permutations.
struct RootSystem {
    std::shared_ptr<TameField> field;
    std::vector<mpz_class> poly;              // monic integral input
    std::vector<TameElem> roots;
    std::vector<std::vector<Rat>> val_matrix;  // v(r_i - r_j), diagonal unused
    std::vector<i64> iota_perm;
    std::vector<i64> frob_perm;

    i64 degree() const { return (i64)roots.size(); }
};

RootSystem splitting_data(const std::vector<mpz_class>& f_monic, i64 p);

/// Split in a prescribed container field (used by the toric pass, which
/// doubles both invariants of the minimal field).
RootSystem splitting_data_in(const std::vector<mpz_class>& f_monic, i64 p, i64 F, i64 E, i64 N);

}  // namespace rootw
