#ifndef QUASISEP_SEPARABILITY_HPP
#define QUASISEP_SEPARABILITY_HPP

#include <Eigen/Dense>
#include <cstdint>
#include <functional>
#include <optional>
#include <tuple>
#include <utility>
#include <vector>

#include "quasisep/fock.hpp"
#include "quasisep/model.hpp"

namespace quasisep {

/// Diagonal 0/1 projector over a product occupation basis, given as a
/// basis-pair predicate. Idempotent and Hermitian by construction.
struct Constraint {
    int left_dim = 0;
    int right_dim = 0;
    std::function<bool(int, int)> keep;
};

/// P = identity (independent degrees of freedom).
Constraint all_pass_constraint(int left_dim, int right_dim);

/// Angular-momentum instance: left index i maps to j = i*step, right index
/// k to m = -j_max + k*step; keep(j, m) := -j <= m <= j. The default step 1
/// gives the integer grid; use step 0.5 for half-integer values.
Constraint angular_momentum_constraint(double j_max, double step = 1.0);

/// P(|x⟩ ⊗ |y⟩), normalized; the result lives on two bosonic index modes
/// with cutoffs (left_dim-1, right_dim-1). Throws when the projection
/// annihilates the product.
StateVector projected_product(std::span<const Complex> x,
                              std::span<const Complex> y,
                              const Constraint& constraint);

/// Filters a two-mode state through the constraint's keep predicate
/// (no renormalization).
StateVector apply_constraint(const StateVector& state,
                             const Constraint& constraint);

enum class SepStatus { Separable, Entangled, Inconclusive };
enum class SepMethod { ClosedFormFixedN, EigenstateCondition, Bilinear };

struct SeparabilityVerdict {
    SepStatus status = SepStatus::Inconclusive;
    SepMethod method = SepMethod::ClosedFormFixedN;
    /// (m, n) monomial witnesses for the closed-form methods; the first
    /// entry is the reported one.
    std::vector<std::pair<int, int>> witnesses;
    /// Factor coefficient vectors for the bilinear method.
    std::vector<Complex> factor_x, factor_y;
    double residual = 0.0;
};

/// Exact separability test for a state supported on one total-number
/// sector of the [fermionic, bosonic] space: writes it as
/// a|0,N⟩ + c|1,N-1⟩ and enumerates the achievable monomial ratios
/// (m phi² - n beta²)/(beta phi sqrt(N)) e^{i theta} for m = 0..N.
SeparabilityVerdict separability_fixed_N(const StateVector& state,
                                         const JCParams& params,
                                         double ratio_tol = 1e-9);

struct FactorizationSolution {
    int m = 0;
    int n = 0;
    Branch branch = Branch::Plus;
};

/// All (m, n) with m+n = N solving either factorization condition
///   phi_N/beta_N = (m phi² - n beta²)/(phi beta sqrt(N))   (branch +)
///  -beta_N/phi_N = (m phi² - n beta²)/(phi beta sqrt(N))   (branch -).
/// Empty list means both N-sector eigenstates are ±-entangled.
std::vector<FactorizationSolution> eigenstate_factorization_conditions(
    int N, const JCParams& params, double tol = 1e-9);

struct BilinearOptions {
    double tol = 1e-9;
    int restarts = 32;
    int max_alternations = 2000;
    double convergence = 1e-6;
    std::uint64_t seed = 20240915;
};

/// Alternating-least-squares search for factor coefficients. Never claims
/// "entangled": a failed search yields Inconclusive with the best residual
/// found. Deterministic given the seed; restarts are independent and the
/// minimum residual wins (ties broken by restart index).
SeparabilityVerdict separability_bilinear(const StateVector& state,
                                          int left_degree, int right_degree,
                                          const JCParams& params,
                                          const BilinearOptions& options = {});

/// Same solver over a generic constraint: candidates are normalized
/// projected products P(x ⊗ y) on the two-index-mode space.
SeparabilityVerdict separability_bilinear(const StateVector& state,
                                          const Constraint& constraint,
                                          const BilinearOptions& options = {});

struct MixedComponent {
    double weight = 0.0;
    std::vector<Complex> x, y;
    StateVector state;  // normalized projected product
};

/// Discrete realization of a classically correlated (separable) mixture of
/// projected products.
struct MixedSeparableEnsemble {
    std::vector<MixedComponent> components;
    Constraint constraint;

    /// Dense density matrix over the full two-mode index basis
    /// (lexicographic ket order); intended for small dimensions.
    Eigen::MatrixXcd density_matrix() const;
};

MixedSeparableEnsemble separable_mixture(
    const std::vector<std::tuple<double, std::vector<Complex>,
                                 std::vector<Complex>>>& components,
    const Constraint& constraint);

}  // namespace quasisep

#endif  // QUASISEP_SEPARABILITY_HPP
