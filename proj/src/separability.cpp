#include "quasisep/separability.hpp"

#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#include "quasisep/dense.hpp"

namespace quasisep {

Constraint all_pass_constraint(int left_dim, int right_dim) {
    if (left_dim < 1 || right_dim < 1) {
        throw std::invalid_argument("constraint dimensions must be positive");
    }
    return {left_dim, right_dim, [](int, int) { return true; }};
}

Constraint angular_momentum_constraint(double j_max, double step) {
    if (j_max < 0.0 || step <= 0.0) {
        throw std::invalid_argument("invalid angular-momentum grid");
    }
    const int levels = static_cast<int>(std::floor(j_max / step + 0.5)) + 1;
    const int left_dim = levels;
    const int right_dim = 2 * (levels - 1) + 1;
    const double eps = 1e-12;
    auto keep = [j_max, step, levels, eps](int i, int k) {
        const double j = i * step;
        const double m = -(levels - 1) * step + k * step;
        return m >= -j - eps && m <= j + eps;
    };
    return {left_dim, right_dim, keep};
}

StateVector projected_product(std::span<const Complex> x,
                              std::span<const Complex> y,
                              const Constraint& constraint) {
    if (static_cast<int>(x.size()) != constraint.left_dim ||
        static_cast<int>(y.size()) != constraint.right_dim) {
        throw std::invalid_argument(
            "factor lengths do not match constraint dimensions");
    }
    StateVector state({ModeSpec::bosonic(constraint.left_dim - 1),
                       ModeSpec::bosonic(constraint.right_dim - 1)});
    for (int i = 0; i < constraint.left_dim; ++i) {
        for (int k = 0; k < constraint.right_dim; ++k) {
            if (!constraint.keep(i, k)) {
                continue;
            }
            const Complex amp = x[i] * y[k];
            if (std::abs(amp) > kPruneThreshold) {
                state.set_amplitude({i, k}, amp);
            }
        }
    }
    if (state.is_zero()) {
        throw std::domain_error("projection annihilates the product");
    }
    return state.normalized();
}

StateVector apply_constraint(const StateVector& state,
                             const Constraint& constraint) {
    if (state.modes().size() != 2) {
        throw std::invalid_argument("constraint filter expects two modes");
    }
    StateVector result(state.modes());
    for (const auto& [ket, amp] : state.amplitudes()) {
        if (constraint.keep(ket[0], ket[1])) {
            result.set_amplitude(ket, amp);
        }
    }
    return result;
}

namespace {

void require_fb_modes(const StateVector& state) {
    const auto& modes = state.modes();
    if (modes.size() != 2 || modes[0].kind != ModeKind::Fermionic ||
        modes[1].kind != ModeKind::Bosonic) {
        throw std::invalid_argument("expected [fermionic, bosonic] modes");
    }
}

bool close_ratio(Complex ratio, Complex target, double tol) {
    return std::abs(ratio - target) <=
           tol * std::max(1.0, std::abs(target));
}

}  // namespace

SeparabilityVerdict separability_fixed_N(const StateVector& state,
                                         const JCParams& params,
                                         double ratio_tol) {
    require_fb_modes(state);
    if (state.is_zero()) {
        throw std::invalid_argument("zero state has no separability verdict");
    }
    const int N = single_sector(state);
    if (N < 0) {
        throw std::invalid_argument(
            "state spans multiple sectors; use the bilinear method");
    }
    if (N < 1) {
        throw std::invalid_argument("fixed-N test requires N >= 1");
    }

    SeparabilityVerdict verdict;
    verdict.method = SepMethod::ClosedFormFixedN;

    const double norm = state.norm();
    const Complex a = state.amplitude({0, N});
    const Complex c = state.amplitude({1, N - 1});
    const double bp = params.beta * params.phi;

    if (bp < 1e-12) {
        // kappa = 0: the mode transform is a permutation, so the only
        // ±-product states in the sector are the two basis kets.
        const bool a_zero = std::abs(a) <= ratio_tol * norm;
        const bool c_zero = std::abs(c) <= ratio_tol * norm;
        const bool phi_one = params.phi > 0.5;
        if (c_zero && !a_zero) {
            verdict.status = SepStatus::Separable;
            verdict.witnesses.push_back(phi_one ? std::pair{0, N}
                                                : std::pair{N, 0});
        } else if (a_zero && !c_zero) {
            verdict.status = SepStatus::Separable;
            verdict.witnesses.push_back(phi_one ? std::pair{1, N - 1}
                                                : std::pair{N - 1, 1});
        } else {
            verdict.status = SepStatus::Entangled;
        }
        return verdict;
    }

    if (std::abs(a) <= ratio_tol * norm) {
        // The |0,N⟩ coefficient of every ±-product monomial is nonzero, so
        // the c-only limit is never of product form.
        verdict.status = SepStatus::Entangled;
        verdict.residual = 0.0;
        return verdict;
    }

    const Complex ratio = c / a;
    const Complex phase{std::cos(params.theta), std::sin(params.theta)};
    const double p2 = params.phi * params.phi;
    const double b2 = params.beta * params.beta;
    double best_miss = std::numeric_limits<double>::infinity();
    for (int m = 0; m <= N; ++m) {
        const int n = N - m;
        const Complex target =
            ((m * p2 - n * b2) / (bp * std::sqrt(static_cast<double>(N)))) *
            phase;
        if (close_ratio(ratio, target, ratio_tol)) {
            verdict.witnesses.emplace_back(m, n);
        }
        best_miss = std::min(best_miss, std::abs(ratio - target) /
                                            std::max(1.0, std::abs(target)));
    }
    if (!verdict.witnesses.empty()) {
        verdict.status = SepStatus::Separable;
        const auto [m, n] = verdict.witnesses.front();
        const StateVector reference = canonical_phase(state.normalized());
        verdict.residual = distance(
            reference,
            product_state_pm(m, n, params, state.modes()[1].cutoff));
    } else {
        verdict.status = SepStatus::Entangled;
        verdict.residual = best_miss;
    }
    return verdict;
}

std::vector<FactorizationSolution> eigenstate_factorization_conditions(
    int N, const JCParams& params, double tol) {
    if (N < 1) {
        throw std::invalid_argument("factorization check requires N >= 1");
    }
    std::vector<FactorizationSolution> solutions;
    const double bp = params.beta * params.phi;
    if (bp < 1e-12) {
        // kappa = 0: both eigenstates are basis kets and therefore products.
        const bool phi_one = params.phi > 0.5;
        // branch + is |1,N-1⟩ when phi = 1, |0,N⟩ when beta = 1.
        if (phi_one) {
            solutions.push_back({1, N - 1, Branch::Plus});
            solutions.push_back({0, N, Branch::Minus});
        } else {
            solutions.push_back({N, 0, Branch::Plus});
            solutions.push_back({N - 1, 1, Branch::Minus});
        }
        return solutions;
    }
    const IndexedParams ip = indexed_params(params, N);
    const double lhs_plus = ip.phi_N / ip.beta_N;
    const double lhs_minus = -ip.beta_N / ip.phi_N;
    const double p2 = params.phi * params.phi;
    const double b2 = params.beta * params.beta;
    for (int m = 0; m <= N; ++m) {
        const int n = N - m;
        const double rhs =
            (m * p2 - n * b2) / (bp * std::sqrt(static_cast<double>(N)));
        if (std::abs(lhs_plus - rhs) <= tol * std::max(1.0, std::abs(rhs))) {
            solutions.push_back({m, n, Branch::Plus});
        }
        if (std::abs(lhs_minus - rhs) <= tol * std::max(1.0, std::abs(rhs))) {
            solutions.push_back({m, n, Branch::Minus});
        }
    }
    return solutions;
}

namespace {

struct AlsResult {
    Eigen::VectorXcd x, y;
    double residual = std::numeric_limits<double>::infinity();
};

// Distance of the unit vector s_hat to the ray spanned by c (global phase
// and scale quotiented out).
double ray_distance(const Eigen::VectorXcd& s_hat, const Eigen::VectorXcd& c) {
    const double cn2 = c.squaredNorm();
    if (cn2 <= 1e-300) {
        return std::sqrt(2.0);
    }
    // Orthogonal complement of s_hat relative to span{c}; evaluating the
    // complement vector directly avoids cancellation near zero residual.
    const Eigen::VectorXcd complement = s_hat - c * (c.dot(s_hat) / cn2);
    return complement.norm();
}

// basis[m][n] spans the candidate family Σ x_m y_n basis[m][n].
AlsResult run_als(const std::vector<std::vector<Eigen::VectorXcd>>& basis,
                  const Eigen::VectorXcd& s_hat,
                  const BilinearOptions& options) {
    const int dx = static_cast<int>(basis.size());
    const int dy = static_cast<int>(basis.front().size());
    const Eigen::Index dim = s_hat.size();

    AlsResult best;
    for (int restart = 0; restart < options.restarts; ++restart) {
        std::mt19937_64 rng(options.seed + 0x9e3779b97f4a7c15ULL *
                                               static_cast<std::uint64_t>(
                                                   restart + 1));
        std::normal_distribution<double> gauss(0.0, 1.0);
        Eigen::VectorXcd x(dx), y(dy);
        for (int i = 0; i < dx; ++i) {
            x(i) = Complex{gauss(rng), gauss(rng)};
        }
        for (int k = 0; k < dy; ++k) {
            y(k) = Complex{gauss(rng), gauss(rng)};
        }
        // The first dy restarts start from one-hot right factors; sparse
        // solutions (single-monomial factors) are poor targets for fully
        // random starts.
        if (restart < dy) {
            y.setZero();
            y(restart) = Complex{1.0, 0.0};
        }

        double previous = std::numeric_limits<double>::infinity();
        double current = previous;
        for (int iteration = 0; iteration < options.max_alternations;
             ++iteration) {
            // x-step: columns A_m = Σ_n y_n basis[m][n].
            Eigen::MatrixXcd ax = Eigen::MatrixXcd::Zero(dim, dx);
            for (int m = 0; m < dx; ++m) {
                for (int n = 0; n < dy; ++n) {
                    if (std::abs(y(n)) > 0.0) {
                        ax.col(m) += y(n) * basis[m][n];
                    }
                }
            }
            x = ax.colPivHouseholderQr().solve(s_hat);

            // y-step: columns B_n = Σ_m x_m basis[m][n].
            Eigen::MatrixXcd ay = Eigen::MatrixXcd::Zero(dim, dy);
            for (int n = 0; n < dy; ++n) {
                for (int m = 0; m < dx; ++m) {
                    if (std::abs(x(m)) > 0.0) {
                        ay.col(n) += x(m) * basis[m][n];
                    }
                }
            }
            y = ay.colPivHouseholderQr().solve(s_hat);

            current = ray_distance(s_hat, ay * y);
            // The candidate only depends on the ray of (x, y); renormalizing
            // keeps the alternating solves well conditioned.
            if (x.norm() > 0.0) {
                x /= x.norm();
            }
            if (y.norm() > 0.0) {
                y /= y.norm();
            }
            if (previous - current < options.convergence * current ||
                current < 1e-15) {
                break;
            }
            previous = current;
        }
        if (current < best.residual) {
            best = {x, y, current};
        }
    }
    return best;
}

SeparabilityVerdict als_verdict(
    const std::vector<std::vector<Eigen::VectorXcd>>& basis,
    const Eigen::VectorXcd& s_hat, const BilinearOptions& options) {
    const AlsResult result = run_als(basis, s_hat, options);
    SeparabilityVerdict verdict;
    verdict.method = SepMethod::Bilinear;
    verdict.residual = result.residual;
    verdict.status = result.residual <= options.tol ? SepStatus::Separable
                                                    : SepStatus::Inconclusive;
    verdict.factor_x.assign(result.x.data(), result.x.data() + result.x.size());
    verdict.factor_y.assign(result.y.data(), result.y.data() + result.y.size());
    return verdict;
}

}  // namespace

SeparabilityVerdict separability_bilinear(const StateVector& state,
                                          int left_degree, int right_degree,
                                          const JCParams& params,
                                          const BilinearOptions& options) {
    require_fb_modes(state);
    if (left_degree < 0 || right_degree < 0) {
        throw std::invalid_argument("factor degrees must be nonnegative");
    }
    const int cutoff = state.modes()[1].cutoff;
    if (left_degree + right_degree > cutoff) {
        throw std::invalid_argument("factor degrees exceed the boson cutoff");
    }
    const std::vector<Ket> kets = enumerate_kets(state.modes());
    const Eigen::VectorXcd s_hat = to_dense(state.normalized(), kets);

    const auto [plus, minus] = quasiparticle_weights(params);
    // basis[m][n] = p+†^m p-†^n |vac⟩ (unnormalized monomials).
    std::vector<std::vector<Eigen::VectorXcd>> basis(
        left_degree + 1, std::vector<Eigen::VectorXcd>(right_degree + 1));
    StateVector minus_power = vacuum(state.modes());
    for (int n = 0; n <= right_degree; ++n) {
        StateVector term = minus_power;
        for (int m = 0; m <= left_degree; ++m) {
            basis[m][n] = to_dense(term, kets);
            term = apply_mixed_creation(term, plus);
        }
        minus_power = apply_mixed_creation(minus_power, minus);
    }
    return als_verdict(basis, s_hat, options);
}

SeparabilityVerdict separability_bilinear(const StateVector& state,
                                          const Constraint& constraint,
                                          const BilinearOptions& options) {
    if (state.modes().size() != 2 ||
        state.modes()[0].cutoff + 1 != constraint.left_dim ||
        state.modes()[1].cutoff + 1 != constraint.right_dim) {
        throw std::invalid_argument(
            "state dimensions do not match the constraint");
    }
    const std::vector<Ket> kets = enumerate_kets(state.modes());
    const Eigen::VectorXcd s_hat = to_dense(state.normalized(), kets);

    std::vector<std::vector<Eigen::VectorXcd>> basis(
        constraint.left_dim,
        std::vector<Eigen::VectorXcd>(constraint.right_dim));
    for (int i = 0; i < constraint.left_dim; ++i) {
        for (int k = 0; k < constraint.right_dim; ++k) {
            Eigen::VectorXcd vec = Eigen::VectorXcd::Zero(kets.size());
            if (constraint.keep(i, k)) {
                vec(static_cast<Eigen::Index>(i) * constraint.right_dim + k) =
                    Complex{1.0, 0.0};
            }
            basis[i][k] = vec;
        }
    }
    return als_verdict(basis, s_hat, options);
}

Eigen::MatrixXcd MixedSeparableEnsemble::density_matrix() const {
    if (components.empty()) {
        throw std::domain_error("empty ensemble has no density matrix");
    }
    const std::vector<Ket> kets =
        enumerate_kets(components.front().state.modes());
    Eigen::MatrixXcd rho =
        Eigen::MatrixXcd::Zero(kets.size(), kets.size());
    for (const MixedComponent& component : components) {
        const Eigen::VectorXcd v = to_dense(component.state, kets);
        rho += component.weight * (v * v.adjoint());
    }
    return rho;
}

MixedSeparableEnsemble separable_mixture(
    const std::vector<std::tuple<double, std::vector<Complex>,
                                 std::vector<Complex>>>& components,
    const Constraint& constraint) {
    if (components.empty()) {
        throw std::invalid_argument("mixture needs at least one component");
    }
    double total = 0.0;
    MixedSeparableEnsemble ensemble;
    ensemble.constraint = constraint;
    for (const auto& [weight, x, y] : components) {
        if (weight < 0.0) {
            throw std::invalid_argument("mixture weights must be nonnegative");
        }
        total += weight;
        ensemble.components.push_back(
            {weight, x, y, projected_product(x, y, constraint)});
    }
    if (std::abs(total - 1.0) > 1e-12) {
        throw std::invalid_argument("mixture weights must sum to 1");
    }
    return ensemble;
}

}  // namespace quasisep
