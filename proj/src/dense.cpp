#include "quasisep/dense.hpp"

#include <map>
#include <stdexcept>

namespace quasisep {

std::vector<Ket> enumerate_kets(const std::vector<ModeSpec>& modes) {
    std::vector<Ket> kets;
    Ket current(modes.size(), 0);
    while (true) {
        kets.push_back(current);
        // Odometer increment, last mode fastest.
        int j = static_cast<int>(modes.size()) - 1;
        for (; j >= 0; --j) {
            if (current[j] < modes[j].cutoff) {
                ++current[j];
                break;
            }
            current[j] = 0;
        }
        if (j < 0) {
            break;
        }
    }
    return kets;
}

Eigen::VectorXcd to_dense(const StateVector& state,
                          const std::vector<Ket>& basis) {
    std::map<Ket, int> index;
    for (int i = 0; i < static_cast<int>(basis.size()); ++i) {
        index[basis[i]] = i;
    }
    Eigen::VectorXcd vec = Eigen::VectorXcd::Zero(basis.size());
    for (const auto& [ket, amp] : state.amplitudes()) {
        auto it = index.find(ket);
        if (it == index.end()) {
            throw std::invalid_argument("state ket missing from dense basis");
        }
        vec(it->second) = amp;
    }
    return vec;
}

StateVector from_dense(const Eigen::VectorXcd& vec,
                       const std::vector<ModeSpec>& modes,
                       const std::vector<Ket>& basis) {
    if (vec.size() != static_cast<Eigen::Index>(basis.size())) {
        throw std::invalid_argument("dense vector length mismatch");
    }
    StateVector state(modes);
    for (Eigen::Index i = 0; i < vec.size(); ++i) {
        if (std::abs(vec(i)) > kPruneThreshold) {
            state.set_amplitude(basis[i], vec(i));
        }
    }
    return state;
}

}  // namespace quasisep
