#include "quasisep/fock.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace quasisep {

ModeSpec ModeSpec::bosonic(int cutoff) {
    if (cutoff < 0) {
        throw std::invalid_argument("bosonic cutoff must be nonnegative");
    }
    return {ModeKind::Bosonic, cutoff};
}

StateVector::StateVector(std::vector<ModeSpec> modes) : modes_(std::move(modes)) {
    if (modes_.empty()) {
        throw std::invalid_argument("StateVector requires at least one mode");
    }
    for (const ModeSpec& mode : modes_) {
        if (mode.kind == ModeKind::Fermionic && mode.cutoff != 1) {
            throw std::invalid_argument("fermionic modes must have cutoff 1");
        }
        if (mode.cutoff < 0) {
            throw std::invalid_argument("cutoff must be nonnegative");
        }
    }
}

void StateVector::validate_ket(const Ket& ket) const {
    if (ket.size() != modes_.size()) {
        throw std::invalid_argument("ket length does not match mode count");
    }
    for (std::size_t j = 0; j < ket.size(); ++j) {
        if (ket[j] < 0 || ket[j] > modes_[j].cutoff) {
            throw std::invalid_argument("ket occupation violates mode cutoff");
        }
    }
}

Complex StateVector::amplitude(const Ket& ket) const {
    auto it = amps_.find(ket);
    return it == amps_.end() ? Complex{0.0, 0.0} : it->second;
}

void StateVector::set_amplitude(const Ket& ket, Complex value) {
    validate_ket(ket);
    if (std::abs(value) <= kPruneThreshold) {
        amps_.erase(ket);
    } else {
        amps_[ket] = value;
    }
}

void StateVector::add_amplitude(const Ket& ket, Complex value) {
    validate_ket(ket);
    auto [it, inserted] = amps_.try_emplace(ket, value);
    if (!inserted) {
        it->second += value;
    }
    if (std::abs(it->second) <= kPruneThreshold) {
        amps_.erase(it);
    }
}

double StateVector::norm_squared() const {
    double total = 0.0;
    for (const auto& [ket, amp] : amps_) {
        total += std::norm(amp);
    }
    return total;
}

double StateVector::norm() const { return std::sqrt(norm_squared()); }

StateVector& StateVector::operator*=(Complex scale) {
    if (std::abs(scale) == 0.0) {
        amps_.clear();
        return *this;
    }
    for (auto& [ket, amp] : amps_) {
        amp *= scale;
    }
    prune();
    return *this;
}

StateVector& StateVector::operator+=(const StateVector& other) {
    if (modes_ != other.modes_) {
        throw std::invalid_argument("mode specs do not match");
    }
    for (const auto& [ket, amp] : other.amps_) {
        auto [it, inserted] = amps_.try_emplace(ket, amp);
        if (!inserted) {
            it->second += amp;
        }
    }
    prune();
    return *this;
}

StateVector& StateVector::operator-=(const StateVector& other) {
    return *this += Complex{-1.0, 0.0} * other;
}

StateVector StateVector::normalized() const {
    const double n = norm();
    if (n == 0.0) {
        throw std::domain_error("cannot normalize the zero state");
    }
    StateVector result = *this;
    result *= Complex{1.0 / n, 0.0};
    return result;
}

void StateVector::prune(double threshold) {
    for (auto it = amps_.begin(); it != amps_.end();) {
        if (std::abs(it->second) <= threshold) {
            it = amps_.erase(it);
        } else {
            ++it;
        }
    }
}

StateVector operator*(Complex scale, StateVector state) {
    state *= scale;
    return state;
}

StateVector operator+(StateVector lhs, const StateVector& rhs) {
    lhs += rhs;
    return lhs;
}

StateVector operator-(StateVector lhs, const StateVector& rhs) {
    lhs -= rhs;
    return lhs;
}

double distance(const StateVector& a, const StateVector& b) {
    return (a - b).norm();
}

StateVector vacuum(std::vector<ModeSpec> modes) {
    StateVector state(std::move(modes));
    state.set_amplitude(Ket(state.modes().size(), 0), Complex{1.0, 0.0});
    return state;
}

namespace {

void check_mode_index(const StateVector& state, int mode_index) {
    if (mode_index < 0 ||
        mode_index >= static_cast<int>(state.modes().size())) {
        throw std::out_of_range("mode index out of range");
    }
}

// (−1)^(occupied fermionic modes with index < mode_index).
int jordan_wigner_sign(const std::vector<ModeSpec>& modes, const Ket& ket,
                       int mode_index) {
    int parity = 0;
    for (int j = 0; j < mode_index; ++j) {
        if (modes[j].kind == ModeKind::Fermionic && ket[j] == 1) {
            parity ^= 1;
        }
    }
    return parity ? -1 : 1;
}

}  // namespace

StateVector apply_creation(const StateVector& state, int mode_index) {
    check_mode_index(state, mode_index);
    const ModeSpec& mode = state.modes()[mode_index];
    StateVector result(state.modes());
    for (const auto& [ket, amp] : state.amplitudes()) {
        const int n = ket[mode_index];
        if (mode.kind == ModeKind::Fermionic) {
            if (n == 1) {
                continue;  // f†² = 0
            }
            Ket raised = ket;
            raised[mode_index] = 1;
            const int sign = jordan_wigner_sign(state.modes(), ket, mode_index);
            result.add_amplitude(raised, static_cast<double>(sign) * amp);
        } else {
            if (n + 1 > mode.cutoff) {
                continue;  // truncated
            }
            Ket raised = ket;
            raised[mode_index] = n + 1;
            result.add_amplitude(raised, std::sqrt(n + 1.0) * amp);
        }
    }
    return result;
}

StateVector apply_annihilation(const StateVector& state, int mode_index) {
    check_mode_index(state, mode_index);
    const ModeSpec& mode = state.modes()[mode_index];
    StateVector result(state.modes());
    for (const auto& [ket, amp] : state.amplitudes()) {
        const int n = ket[mode_index];
        if (n == 0) {
            continue;
        }
        Ket lowered = ket;
        lowered[mode_index] = n - 1;
        if (mode.kind == ModeKind::Fermionic) {
            const int sign = jordan_wigner_sign(state.modes(), ket, mode_index);
            result.add_amplitude(lowered, static_cast<double>(sign) * amp);
        } else {
            result.add_amplitude(lowered, std::sqrt(static_cast<double>(n)) * amp);
        }
    }
    return result;
}

StateVector apply_mixed_creation(const StateVector& state,
                                 std::span<const Complex> weights) {
    if (weights.size() != state.modes().size()) {
        throw std::invalid_argument("weight vector length does not match modes");
    }
    StateVector result(state.modes());
    for (std::size_t j = 0; j < weights.size(); ++j) {
        if (std::abs(weights[j]) == 0.0) {
            continue;
        }
        result += weights[j] * apply_creation(state, static_cast<int>(j));
    }
    return result;
}

Complex inner_product(const StateVector& a, const StateVector& b) {
    if (a.modes() != b.modes()) {
        throw std::invalid_argument("mode specs do not match");
    }
    Complex total{0.0, 0.0};
    const auto& lhs = a.amplitudes();
    const auto& rhs = b.amplitudes();
    // Walk the smaller map.
    if (lhs.size() <= rhs.size()) {
        for (const auto& [ket, amp] : lhs) {
            auto it = rhs.find(ket);
            if (it != rhs.end()) {
                total += std::conj(amp) * it->second;
            }
        }
    } else {
        for (const auto& [ket, amp] : rhs) {
            auto it = lhs.find(ket);
            if (it != lhs.end()) {
                total += std::conj(it->second) * amp;
            }
        }
    }
    return total;
}

StateVector canonical_phase(const StateVector& state, double threshold) {
    for (const auto& [ket, amp] : state.amplitudes()) {
        const double mag = std::abs(amp);
        if (mag > threshold) {
            return (std::conj(amp) / mag) * state;
        }
    }
    throw std::domain_error("canonical_phase of a (numerically) zero state");
}

int total_occupation(const Ket& ket) {
    return std::accumulate(ket.begin(), ket.end(), 0);
}

StateVector fixed_number_sector(const StateVector& state, int N) {
    if (N < 0) {
        throw std::invalid_argument("sector number must be nonnegative");
    }
    StateVector result(state.modes());
    for (const auto& [ket, amp] : state.amplitudes()) {
        if (total_occupation(ket) == N) {
            result.set_amplitude(ket, amp);
        }
    }
    return result;
}

int single_sector(const StateVector& state) {
    int sector = -1;
    for (const auto& [ket, amp] : state.amplitudes()) {
        const int n = total_occupation(ket);
        if (sector == -1) {
            sector = n;
        } else if (sector != n) {
            return -1;
        }
    }
    return sector;
}

}  // namespace quasisep
