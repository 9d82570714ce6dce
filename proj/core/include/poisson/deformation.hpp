#ifndef POISSON_DEFORMATION_HPP
#define POISSON_DEFORMATION_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "poisson/algebra.hpp"
#include "poisson/cohomology.hpp"

namespace poisson {

/// Lie deformations keep the bullet product (all higher terms skew);
/// associative deformations keep the bracket (all higher terms symmetric).
enum class DeformationKind { General, Lie, Associative };

/// Truncated formal deformation mu0 + t mu1 + ... + t^N muN.
class Jet {
public:
    static constexpr std::size_t kMaxOrder = 6;

    explicit Jet(Algebra base, std::vector<MultilinearMap> terms = {});

    const Algebra& base() const { return base_; }
    const std::vector<MultilinearMap>& terms() const { return terms_; }
    std::size_t order() const { return terms_.size(); }

    /// mu_i with mu_0 = base product; indices past the order are zero.
    MultilinearMap term(std::size_t i) const;

    Jet extended_with(MultilinearMap next) const;

private:
    Algebra base_;
    std::vector<MultilinearMap> terms_;
};

/// Order-k condition residual:
///   sum_{i+j=k} (mu_i o1 mu_j) o phi_vP - 3 sum_{i+j=k} mu_i o2 mu_j.
/// Zero iff the order-k condition holds. Terms beyond the jet order are 0.
MultilinearMap dk_residual(const Jet& j, std::size_t k);

struct JetFailure {
    std::size_t order;        // failing k, or the index of the bad term
    std::string reason;       // "symmetry" or "dk"
    MultilinearMap residual;  // symmetry defect or dk residual
};

struct JetVerification {
    bool ok;
    std::optional<JetFailure> failure;
};

/// Checks the kind's symmetry constraint on every term, then the order-k
/// conditions for k = 1..order; reports the first failure.
JetVerification verify_jet(const Jet& j, DeformationKind kind);

/// Affine set of admissible next-order terms.
struct ExtensionSolutions {
    MultilinearMap particular;
    std::vector<MultilinearMap> kernel; // canonical basis, kind-filtered
    Subspace kernel_space;              // same basis in ambient n^3 coordinates
};

struct Obstructed {
    MultilinearMap residual; // the lower-order residual no cochain can cancel
};

using ExtendResult = std::variant<ExtensionSolutions, Obstructed>;

/// Solves the next-order condition for mu_{N+1} over the kind-filtered
/// bilinear maps. The system is delta2_P(x) = -(lower-order residual).
ExtendResult extend_jet(const Jet& j, DeformationKind kind);

/// {phi skew : delta2_C(phi) = 0 and L1(phi) = 0}; equals the skew slice of
/// the delta2_P kernel. Throws NotPoisson if the base fails verification.
Subspace lie_first_order_space(const Algebra& a);

/// {phi symmetric : delta2_H(phi) = 0 and phi a Lie biderivation}; equals
/// the symmetric slice of the delta2_P kernel.
Subspace assoc_first_order_space(const Algebra& a);

/// {psi(x1..xk), x_{k+1}} = sum_i psi(x1,...,{x_i,x_{k+1}},...,xk), k <= 3.
bool is_lie_k_derivation(const PoissonPair& p, const MultilinearMap& psi);

/// Nullspace of {phi(x1,x2),x3} - phi({x2,x3},x1) - phi({x1,x3},x2) = 0,
/// optionally intersected with the symmetric or skew slice.
Subspace lie_biderivation_space(const PoissonPair& p,
                                SymmetryFilter filter = SymmetryFilter::None);

enum class SymmetryNotion { VSymmetric, FullySymmetric };

/// C^k_PH: V_k-symmetric Lie k-derivations (k <= 3). For k = 1 the symmetry
/// condition is vacuous and the space is the Lie derivations. The
/// FullySymmetric notion is the strictly stronger variant.
Subspace ph_cochain_space(const PoissonPair& p, std::size_t k,
                          SymmetryNotion notion = SymmetryNotion::VSymmetric);

struct PhDeltaReport {
    MultilinearMap image; // hochschild_delta(psi), arity k+1
    bool is_lie_derivation;
    bool is_V_symmetric;
};

/// Applies the Hochschild coboundary and evaluates both membership
/// predicates on the image.
PhDeltaReport ph_delta_check(const PoissonPair& p, const MultilinearMap& psi);

struct RigidityReport {
    bool assoc_rigid_order1;
    std::size_t lie_order1_dim;
    std::size_t sym_order1_dim;
    std::size_t biderivation_dim;
};

/// First-order rigidity certificate (not an all-orders statement).
RigidityReport rigidity_probe(const PoissonPair& p);

} // namespace poisson

#endif
