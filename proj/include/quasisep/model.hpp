#ifndef QUASISEP_MODEL_HPP
#define QUASISEP_MODEL_HPP

#include <utility>
#include <vector>

#include "quasisep/fock.hpp"

namespace quasisep {

/// Jaynes-Cummings-type scalars. All energies are reported in units of hbar
/// (hbar = 1 internally).
struct JCParams {
    double omega_f = 0.0;   ///< fermionic mode frequency
    double omega_b = 0.0;   ///< bosonic mode frequency
    Complex kappa{0.0, 0.0};

    // Derived, populated by derive_params.
    double Omega = 0.0;  ///< omega_f + omega_b
    double delta = 0.0;  ///< omega_f - omega_b (detuning)
    double theta = 0.0;  ///< arg(kappa); 0 by convention when kappa = 0
    double Delta = 0.0;  ///< sqrt(delta² + |kappa|²)
    double phi = 0.0;    ///< sqrt((Delta + delta) / (2 Delta))
    double beta = 0.0;   ///< sqrt((Delta - delta) / (2 Delta))
};

/// N-excitation-sector variants of the transform scalars.
struct IndexedParams {
    int N = 1;
    double Delta_N = 0.0;  ///< sqrt(delta² + N |kappa|²)
    double phi_N = 0.0;
    double beta_N = 0.0;
};

struct EnergyPair {
    double e_plus = 0.0;
    double e_minus = 0.0;
};

enum class Branch { Plus, Minus };

/// Populates all derived scalars; rejects the degenerate case
/// delta = 0 and kappa = 0 (Delta would vanish).
JCParams derive_params(double omega_f, double omega_b, Complex kappa);

IndexedParams indexed_params(const JCParams& params, int N);

/// Quasiparticle band energies E± = (Omega ± Delta)/2 in hbar units.
EnergyPair energy_bands(const JCParams& params);

/// Creation-weight vectors over (f, b):
/// p+† -> (phi, beta e^{-i theta}), p-† -> (-beta e^{i theta}, phi).
std::pair<std::vector<Complex>, std::vector<Complex>> quasiparticle_weights(
    const JCParams& params);

/// Mode list [fermionic, bosonic(cutoff)] used by all model-level states.
std::vector<ModeSpec> fb_modes(int boson_cutoff);

/// max(2 n, 8); fixed-N results are cutoff-exact at cutoff >= n, the
/// headroom catches truncation bugs.
int default_cutoff(int n);

/// (omega_f f†f + omega_b b†b + (kappa/2) f†b + (kappa*/2) b†f)|state⟩.
/// The state must live on [fermionic, bosonic] modes with headroom above
/// its top occupied sector.
StateVector hamiltonian_apply(const StateVector& state, const JCParams& params);

/// Dressed state of the N-excitation sector:
///   +: beta_N|0,N⟩ + phi_N e^{i theta}|1,N-1⟩
///   -: phi_N|0,N⟩ - beta_N e^{i theta}|1,N-1⟩
StateVector eigenstate(int N, Branch branch, const JCParams& params,
                       int boson_cutoff = -1);

/// (N Omega - N delta + delta ± Delta_N)/2 in hbar units.
double eigenenergy(int N, Branch branch, const JCParams& params);

/// p+†^m p-†^n |vac⟩ by repeated mixed-creation application, normalized
/// and canonical-phased. (0,0) is the vacuum.
StateVector product_state_pm(int m, int n, const JCParams& params,
                             int boson_cutoff = -1);

/// Closed-form ±-product state:
///   (|0,N⟩ + ((m phi² - n beta²)/(beta phi sqrt(N))) e^{i theta}|1,N-1⟩)
/// normalized and canonical-phased. Requires beta*phi > 0 (interacting case).
StateVector product_state_pm_closed_form(int m, int n, const JCParams& params,
                                         int boson_cutoff = -1);

/// Coefficients (c_N0, c_0N) expressing |m,n⟩± as
/// c_N0 |N,0⟩± + c_0N |0,N⟩± for 0 < n < N. The two basis states are
/// generally non-orthogonal, so c_N0² + c_0N² need not be 1.
std::pair<double, double> noon_coefficients(int m, int n,
                                            const JCParams& params);

}  // namespace quasisep

#endif  // QUASISEP_MODEL_HPP
