#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "rootw/intmath.hpp"
#include "rootw/rational.hpp"

namespace rootw {

/// Local representation data of an abelian variety at one finite place:
/// residue cardinality q of the base field, the order-e eigenvalue packet
/// counts m_e of the finite-inertia part, and the toric character counts.
struct LocalRepData {
    i64 q = 0;                   // residue cardinality (a prime power)
    std::map<i64, i64> m;        // e -> m_e, finite support
    i64 m_T = 0;                 // multiplicity of eigenvalue -1 of the toric inertia action
    i64 t1 = 0;                  // <1, rho_T>
    i64 n1 = 0, n2 = 0, n3 = 0, n4 = 0;
    i64 dim_toric = 0;
    i64 genus = 0;

    // Full inertia eigenvalue multisets; kept so quadratic twists of the data
    // can be formed exactly. `ab_eigen` covers the finite-inertia part,
    // `toric_eigen` the toric part.
    std::map<QmodZ, i64> ab_eigen;
    std::map<QmodZ, i64> toric_eigen;

    i64 me(i64 e) const {
        auto it = m.find(e);
        return it == m.end() ? 0 : it->second;
    }
};

/// A sign together with the labelled factors whose product it is.
struct SignedRootNumber {
    int value = 1;
    std::vector<std::pair<std::string, int>> breakdown;

    void push(const std::string& label, int contribution) {
        breakdown.emplace_back(label, contribution);
        value *= contribution;
    }
};

enum class EllipticRedType { SplitMultiplicative, NonsplitMultiplicative, AdditivePotentiallyMultiplicative, PotentiallyGood };

/// Jacobi symbol (a/n) for odd positive n.
int jacobi(i64 a, i64 n);

/// phi~(e): 2 for e <= 2, Euler phi otherwise.
i64 tilde_phi(i64 e);

/// The five-case sign W_{q,e}; requires gcd(q, e) = 1.
int W_qe(i64 q, i64 e);

/// W(A/K) = prod_e W_{q,e}^{m_e} * (-1)^{t1} * W_{q,2}^{m_T}.
SignedRootNumber local_root_number(const LocalRepData& d);

/// Root number of a dual pair sigma + sigma^* with inertia order e and
/// dimension f (f = order of q mod e).
int dual_pair_W(i64 e, i64 f, i64 q);

enum class SelfDualKind { Orthogonal, Symplectic };

/// Root number of an irreducible self-dual theta of dimension f >= 2 with
/// inertia order e; requires f even and q^{f/2} = -1 mod e.
int selfdual_irred_W(i64 e, i64 f, i64 q, SelfDualKind kind);

/// Rohrlich's elliptic-curve table.
int rohrlich_elliptic(i64 v_j, i64 v_disc, EllipticRedType red_type, i64 q);

/// W(tau (x) sp(2)) = (-1)^{<1,tau>} * (det tau)(-1) for a real character tau.
int mult_lemma_W(i64 t1, int det_minus1);

}  // namespace rootw
