#ifndef QUASISEP_COMPARE_HPP
#define QUASISEP_COMPARE_HPP

#include <utility>
#include <vector>

#include "quasisep/fock.hpp"
#include "quasisep/model.hpp"
#include "quasisep/separability.hpp"

namespace quasisep {

/// Two-mode picture being compared: two fermions, two bosons, or the
/// fermion-boson quasiparticle system. FF states carry at most one
/// excitation per mode.
enum class PictureKind { FF, BB, FBQuasi };

/// Balanced ± creation-weight vectors for the requested picture, using the
/// vanishing-detuning convention (delta = 0, theta = 0).
std::pair<std::vector<Complex>, std::vector<Complex>> plus_minus_modes(
    PictureKind kind);

/// Normalized, canonical-phased expansion of the ± monomial state
/// a+†^m a-†^n |vac⟩ in the original two-mode basis, built by operator
/// application. FF requires m, n <= 1.
StateVector pm_number_state(PictureKind kind, int m, int n, int cutoff = -1);

/// Coefficients of the two-boson state |m,n⟩± over |s, N-s⟩_BB for
/// s = 0..N. Computed by operator application; the amplitudes are real in
/// the balanced convention and satisfy Σ_s q² = 1.
std::vector<double> bb_beamsplitter_coeffs(int m, int n);

/// Projector restricting the first (bosonic) mode to occupations {0,1};
/// the second mode is unrestricted up to its cutoff. Realizes a fermionic
/// mode inside a bosonic space.
Constraint truncation_constraint(int first_cutoff, int second_cutoff);

/// Builds |m⟩+ ⊗ |n⟩- in the two-boson picture with the ± weights induced
/// by `params`, projects the first mode to fermionic occupancy, relabels it
/// as the fermionic mode, and returns the norm distance to
/// product_state_pm(m, n, params) after normalization and canonical phase.
double verify_projection_identity(int m, int n, const JCParams& params,
                                  int cutoff = -1);

}  // namespace quasisep

#endif  // QUASISEP_COMPARE_HPP
