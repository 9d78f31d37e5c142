#ifndef QUASISEP_MULTIMODE_HPP
#define QUASISEP_MULTIMODE_HPP

#include <Eigen/Dense>
#include <vector>

#include "quasisep/fock.hpp"
#include "quasisep/model.hpp"
#include "quasisep/separability.hpp"

namespace quasisep {

/// 2M x 2M complex linear mode transform over (f_1..f_M, b_1..b_M),
/// partitioned as [[U+F, U+B], [U-F, U-B]]. Not required to be unitary.
struct ModeMatrix {
    Eigen::MatrixXcd entries;

    explicit ModeMatrix(Eigen::MatrixXcd matrix);

    int mode_pairs() const { return static_cast<int>(entries.rows()) / 2; }
    bool is_unitary(double tol = 1e-10) const;
};

/// The single-pair transform of the model module embedded as a ModeMatrix.
ModeMatrix jc_mode_matrix(const JCParams& params);

/// Annihilation-weight row of p_{s,j} over (f_1..f_M, b_1..b_M); j is
/// 1-based. Creation weights are the elementwise conjugates.
std::vector<Complex> output_mode_weights(const ModeMatrix& matrix, Branch s,
                                         int j);

/// Per output mode, ordered (+,1)..(+,M),(-,1)..(-,M): coefficients over
/// powers 0..degree of the corresponding creation polynomial.
using FactorSpec = std::vector<std::vector<Complex>>;

/// Π_{s,j} (Σ_m x_m^{(s,j)} p_{s,j}†^m) |vac⟩, normalized and
/// canonical-phased. Factors are applied in the fixed order
/// (+,1)..(+,M),(-,1)..(-,M) with the rightmost factor acting first;
/// the order matters when several fermionic modes are involved.
/// `modes` must list M fermionic modes followed by M bosonic modes.
StateVector multimode_product_state(const FactorSpec& spec,
                                    const ModeMatrix& matrix,
                                    const std::vector<ModeSpec>& modes);

struct MultimodeComponent {
    double weight = 0.0;
    FactorSpec spec;
    StateVector state;
};

/// Discrete separable mixture of multimode product states.
struct MultimodeSeparableEnsemble {
    std::vector<MultimodeComponent> components;

    Eigen::MatrixXcd density_matrix() const;
};

MultimodeSeparableEnsemble multimode_separable_mixture(
    const std::vector<std::pair<double, FactorSpec>>& components,
    const ModeMatrix& matrix, const std::vector<ModeSpec>& modes);

}  // namespace quasisep

#endif  // QUASISEP_MULTIMODE_HPP
