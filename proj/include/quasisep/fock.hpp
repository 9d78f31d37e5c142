#ifndef QUASISEP_FOCK_HPP
#define QUASISEP_FOCK_HPP

#include <complex>
#include <map>
#include <span>
#include <vector>

namespace quasisep {

using Complex = std::complex<double>;

/// Occupation-number tuple, one entry per mode.
using Ket = std::vector<int>;

enum class ModeKind { Fermionic, Bosonic };

/// Per-mode algebra choice and retained occupation range.
/// Fermionic modes always have cutoff 1 ({f,f†}=1, f†²=0); bosonic modes
/// keep occupations 0..cutoff and silently truncate above.
struct ModeSpec {
    ModeKind kind;
    int cutoff;

    static ModeSpec fermionic() { return {ModeKind::Fermionic, 1}; }
    static ModeSpec bosonic(int cutoff);

    bool operator==(const ModeSpec&) const = default;
};

/// Amplitudes below this magnitude are dropped after arithmetic.
inline constexpr double kPruneThreshold = 1e-14;

/// Minimum leading-amplitude magnitude used by canonical_phase.
inline constexpr double kPhaseThreshold = 1e-12;

/// Sparse complex state over a mixed fermionic/bosonic occupation basis.
/// Kets are stored in lexicographic order; all operations are pure value
/// transformations, so instances may be shared freely across threads.
class StateVector {
public:
    explicit StateVector(std::vector<ModeSpec> modes);

    const std::vector<ModeSpec>& modes() const { return modes_; }
    const std::map<Ket, Complex>& amplitudes() const { return amps_; }

    Complex amplitude(const Ket& ket) const;
    void set_amplitude(const Ket& ket, Complex value);
    void add_amplitude(const Ket& ket, Complex value);

    bool is_zero() const { return amps_.empty(); }
    std::size_t term_count() const { return amps_.size(); }

    double norm_squared() const;
    double norm() const;

    StateVector& operator*=(Complex scale);
    StateVector& operator+=(const StateVector& other);
    StateVector& operator-=(const StateVector& other);

    /// Unit-norm copy; throws on the zero state.
    StateVector normalized() const;

    void prune(double threshold = kPruneThreshold);

    /// Throws unless `ket` has one entry per mode, each within cutoff.
    void validate_ket(const Ket& ket) const;

private:
    std::vector<ModeSpec> modes_;
    std::map<Ket, Complex> amps_;
};

StateVector operator*(Complex scale, StateVector state);
StateVector operator+(StateVector lhs, const StateVector& rhs);
StateVector operator-(StateVector lhs, const StateVector& rhs);

/// ‖a − b‖.
double distance(const StateVector& a, const StateVector& b);

/// All-zero-occupation ket with amplitude 1. Throws on an empty mode list.
StateVector vacuum(std::vector<ModeSpec> modes);

/// â†_j. Bosonic: √(n+1) ladder factor, kets above cutoff are dropped.
/// Fermionic: occupied kets are annihilated (f†²=0); the Jordan-Wigner sign
/// is (−1)^(occupied fermionic modes with index < j).
StateVector apply_creation(const StateVector& state, int mode_index);

/// â_j, the adjoint of apply_creation (bosonic factor √n, same sign rule).
StateVector apply_annihilation(const StateVector& state, int mode_index);

/// (Σ_j w_j â†_j)|state⟩; repeated application builds creation monomials.
StateVector apply_mixed_creation(const StateVector& state,
                                 std::span<const Complex> weights);

/// ⟨a|b⟩ with conjugation on `a`; mode specs must match.
Complex inner_product(const StateVector& a, const StateVector& b);

/// Fixes the global phase so the lexicographically smallest ket with
/// |amplitude| > threshold has a real, positive amplitude.
StateVector canonical_phase(const StateVector& state,
                            double threshold = kPhaseThreshold);

int total_occupation(const Ket& ket);

/// Restriction to kets of total occupation N (possibly the zero state).
StateVector fixed_number_sector(const StateVector& state, int N);

/// Total-occupation number if the state is supported on one sector; -1 for
/// the zero state or multi-sector support.
int single_sector(const StateVector& state);

}  // namespace quasisep

#endif  // QUASISEP_FOCK_HPP
