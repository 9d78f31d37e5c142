#include "quasisep/multimode.hpp"

#include <cmath>
#include <stdexcept>

#include "quasisep/dense.hpp"

namespace quasisep {

ModeMatrix::ModeMatrix(Eigen::MatrixXcd matrix) : entries(std::move(matrix)) {
    if (entries.rows() != entries.cols() || entries.rows() < 2 ||
        entries.rows() % 2 != 0) {
        throw std::invalid_argument(
            "mode matrix must be square with even dimension");
    }
}

bool ModeMatrix::is_unitary(double tol) const {
    const Eigen::MatrixXcd gram = entries * entries.adjoint();
    const Eigen::MatrixXcd identity =
        Eigen::MatrixXcd::Identity(entries.rows(), entries.cols());
    return (gram - identity).cwiseAbs().maxCoeff() <= tol;
}

ModeMatrix jc_mode_matrix(const JCParams& params) {
    const Complex phase{std::cos(params.theta), std::sin(params.theta)};
    Eigen::MatrixXcd u(2, 2);
    u(0, 0) = Complex{params.phi, 0.0};
    u(0, 1) = params.beta * phase;
    u(1, 0) = -params.beta * std::conj(phase);
    u(1, 1) = Complex{params.phi, 0.0};
    return ModeMatrix(u);
}

std::vector<Complex> output_mode_weights(const ModeMatrix& matrix, Branch s,
                                         int j) {
    const int m = matrix.mode_pairs();
    if (j < 1 || j > m) {
        throw std::out_of_range("output mode index out of range");
    }
    const int row = (s == Branch::Plus ? 0 : m) + (j - 1);
    std::vector<Complex> weights(2 * m);
    for (int col = 0; col < 2 * m; ++col) {
        weights[col] = matrix.entries(row, col);
    }
    return weights;
}

namespace {

void require_multimode_layout(const ModeMatrix& matrix,
                              const std::vector<ModeSpec>& modes) {
    const int m = matrix.mode_pairs();
    if (static_cast<int>(modes.size()) != 2 * m) {
        throw std::invalid_argument("mode list must have 2M entries");
    }
    for (int j = 0; j < m; ++j) {
        if (modes[j].kind != ModeKind::Fermionic) {
            throw std::invalid_argument(
                "modes 0..M-1 must be fermionic (f_1..f_M)");
        }
    }
    for (int j = m; j < 2 * m; ++j) {
        if (modes[j].kind != ModeKind::Bosonic) {
            throw std::invalid_argument(
                "modes M..2M-1 must be bosonic (b_1..b_M)");
        }
    }
}

}  // namespace

StateVector multimode_product_state(const FactorSpec& spec,
                                    const ModeMatrix& matrix,
                                    const std::vector<ModeSpec>& modes) {
    require_multimode_layout(matrix, modes);
    const int m = matrix.mode_pairs();
    if (static_cast<int>(spec.size()) != 2 * m) {
        throw std::invalid_argument("factor spec must have 2M entries");
    }
    for (const auto& factor : spec) {
        bool nonzero = false;
        for (const Complex& coeff : factor) {
            nonzero = nonzero || std::abs(coeff) > 0.0;
        }
        if (!nonzero) {
            throw std::invalid_argument("each factor needs a nonzero coefficient");
        }
    }

    StateVector state = vacuum(modes);
    // Rightmost factor of the ordered product acts first: (-,M) .. (+,1).
    for (int index = 2 * m - 1; index >= 0; --index) {
        const Branch s = index < m ? Branch::Plus : Branch::Minus;
        const int j = (index % m) + 1;
        std::vector<Complex> row = output_mode_weights(matrix, s, j);
        for (Complex& w : row) {
            w = std::conj(w);  // creation weights
        }
        const auto& coeffs = spec[index];
        StateVector accumulated(modes);
        StateVector power = state;
        for (std::size_t p = 0; p < coeffs.size(); ++p) {
            if (std::abs(coeffs[p]) > 0.0) {
                accumulated += coeffs[p] * power;
            }
            if (p + 1 < coeffs.size()) {
                power = apply_mixed_creation(power, row);
            }
        }
        state = accumulated;
    }
    if (state.is_zero()) {
        throw std::domain_error("multimode product state vanished");
    }
    return canonical_phase(state.normalized());
}

Eigen::MatrixXcd MultimodeSeparableEnsemble::density_matrix() const {
    if (components.empty()) {
        throw std::domain_error("empty ensemble has no density matrix");
    }
    const std::vector<Ket> kets =
        enumerate_kets(components.front().state.modes());
    Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(kets.size(), kets.size());
    for (const MultimodeComponent& component : components) {
        const Eigen::VectorXcd v = to_dense(component.state, kets);
        rho += component.weight * (v * v.adjoint());
    }
    return rho;
}

MultimodeSeparableEnsemble multimode_separable_mixture(
    const std::vector<std::pair<double, FactorSpec>>& components,
    const ModeMatrix& matrix, const std::vector<ModeSpec>& modes) {
    if (components.empty()) {
        throw std::invalid_argument("mixture needs at least one component");
    }
    double total = 0.0;
    MultimodeSeparableEnsemble ensemble;
    for (const auto& [weight, spec] : components) {
        if (weight < 0.0) {
            throw std::invalid_argument("mixture weights must be nonnegative");
        }
        total += weight;
        ensemble.components.push_back(
            {weight, spec, multimode_product_state(spec, matrix, modes)});
    }
    if (std::abs(total - 1.0) > 1e-12) {
        throw std::invalid_argument("mixture weights must sum to 1");
    }
    return ensemble;
}

}  // namespace quasisep
