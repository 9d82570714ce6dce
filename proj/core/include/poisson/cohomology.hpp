#ifndef POISSON_COHOMOLOGY_HPP
#define POISSON_COHOMOLOGY_HPP

#include <cstddef>
#include <functional>
#include <vector>

#include "poisson/algebra.hpp"
#include "poisson/linalg.hpp"
#include "poisson/multilinear.hpp"

namespace poisson {

/// Coboundary-type operators on cochains. The P/C/H/L family acts on
/// bilinear maps; Chevalley/Hochschild are the classical coboundaries for
/// the attached Lie and associative algebras at arities 1..3.
enum class OperatorKind {
    P1,
    P2,
    C2,
    H2,
    L1,
    L2,
    LP2,
    Chevalley1,
    Chevalley2,
    Chevalley3,
    Hochschild1,
    Hochschild2,
    Hochschild3,
};

/// delta^1 f(X,Y) = f(X)Y + X f(Y) - f(XY), products in mu0.
MultilinearMap delta1_P(const Algebra& a, const MultilinearMap& f);

/// The linearization of the defining identity at mu0 (12-term form):
///   3phi(XY,Z) - 3phi(X,YZ) - phi(XZ,Y) - phi(YZ,X) + phi(YX,Z) + phi(ZX,Y)
/// + 3phi(X,Y)Z - 3X phi(Y,Z) - phi(X,Z)Y - phi(Y,Z)X + phi(Y,X)Z + phi(Z,X)Y.
MultilinearMap delta2_P(const Algebra& a, const MultilinearMap& phi);

/// Same operator through the group-algebra route:
/// (mu0 o1 phi + phi o1 mu0) o phi_vP - 3(mu0 o2 phi + phi o2 mu0).
MultilinearMap delta2_P_via_group_algebra(const Algebra& a, const MultilinearMap& phi);

/// Chevalley-type operator of the attached pair:
///   sum_cyc phi({X,Y},Z) + sum_cyc {phi(X,Y),Z}.
/// On skew maps this is the Chevalley coboundary of g_P up to the pinned
/// constant -1.
MultilinearMap delta2_C(const Algebra& a, const MultilinearMap& phi);

/// Hochschild-type operator of the attached pair:
///   phi(X.Y,Z) - phi(X,Y.Z) + phi(X,Y).Z - X.phi(Y,Z).
/// Equal to -1 times the classical Hochschild coboundary of A_P.
MultilinearMap delta2_H(const Algebra& a, const MultilinearMap& phi);

/// L1(phi)(X,Y,Z) = phi(X.Y,Z) - phi(X,Z).Y - X.phi(Y,Z)   (bullet terms)
MultilinearMap operator_L1(const Algebra& a, const MultilinearMap& phi);
/// L2(phi)(X,Y,Z) = -3phi(X,{Y,Z}) + {phi(X,Y),Z} - {phi(X,Z),Y}  (bracket terms)
MultilinearMap operator_L2(const Algebra& a, const MultilinearMap& phi);

/// Group-algebra cross-checks for the operators above. The L1 composite is
/// the one with v-elements (Id+t12 | t23+c | Id+t12); the C/H composites use
/// the corrected v-elements that reproduce the explicit formulas.
MultilinearMap operator_L1_via_group_algebra(const Algebra& a, const MultilinearMap& phi);
MultilinearMap delta2_C_via_group_algebra(const Algebra& a, const MultilinearMap& phi);
MultilinearMap delta2_H_via_group_algebra(const Algebra& a, const MultilinearMap& phi);

struct Delta2Decomposition {
    MultilinearMap lhs; // delta2_P(phi)
    MultilinearMap rhs; // 2(dC phi_a + dC phi_s + dH phi_a + 2 dH phi_s + L1 phi_a + L2 phi_s)
    bool equal;
};

/// The decomposition identity of delta2_P into the C/H/L operators.
/// The outer coefficient is 2 under this library's normalization.
Delta2Decomposition decompose_delta2(const Algebra& a, const MultilinearMap& phi);

/// Checks the two alternating-sum identities
///   12 dC(phi_a) = sum_{sigma in S3} sign(sigma) d2P(phi) o sigma
///   12 dH(phi_s) = d2P(phi) - d2P(phi) o t13 + d2P(phi) o t23 - d2P(phi) o c^2
bool prop3_check(const Algebra& a, const MultilinearMap& phi);

/// Lichnerowicz-Poisson differential on skew bilinear maps:
/// 2phi({X,Y},Z) + 2phi({Y,Z},X) - 2phi({X,Z},Y)
/// + 2{phi(X,Y),Z} + 2{phi(Y,Z),X} - 2{phi(X,Z),Y}. Throws NotSkew.
MultilinearMap lichnerowicz_delta2(const PoissonPair& p, const MultilinearMap& phi);

/// Classical Chevalley coboundary of g_P (adjoint coefficients), input
/// arity k <= 3.
MultilinearMap chevalley_delta(const PoissonPair& p, const MultilinearMap& psi);
/// Classical Hochschild coboundary of A_P, input arity k <= 3.
MultilinearMap hochschild_delta(const PoissonPair& p, const MultilinearMap& psi);

/// Matrix of a linear cochain operator over a given domain basis, columns
/// in basis order.
Matrix operator_matrix(const std::vector<MultilinearMap>& domain_basis,
                       const std::function<MultilinearMap(const MultilinearMap&)>& op);

/// Exact kernel of an arity-2 operator kind on the (filtered) space of
/// bilinear maps, embedded in the ambient n^3 coordinates.
Subspace cocycle_space(const Algebra& a, OperatorKind kind,
                       SymmetryFilter filter = SymmetryFilter::None);

/// Both sides of the kernel-splitting equivalence evaluated independently:
/// d2P(phi) = 0  <=>  dC(phi_a) = 0 and dH(phi_s) = 0 and
///                    dC(phi_s) + dH(phi_a) + L1(phi_a) + L2(phi_s) = 0.
bool theorem5_check(const Algebra& a, const MultilinearMap& phi);

} // namespace poisson

#endif
