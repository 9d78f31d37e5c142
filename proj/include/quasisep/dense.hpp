#ifndef QUASISEP_DENSE_HPP
#define QUASISEP_DENSE_HPP

#include <Eigen/Dense>
#include <vector>

#include "quasisep/fock.hpp"

namespace quasisep {

/// Every ket of the product occupation space, in lexicographic order.
std::vector<Ket> enumerate_kets(const std::vector<ModeSpec>& modes);

Eigen::VectorXcd to_dense(const StateVector& state,
                          const std::vector<Ket>& basis);

StateVector from_dense(const Eigen::VectorXcd& vec,
                       const std::vector<ModeSpec>& modes,
                       const std::vector<Ket>& basis);

}  // namespace quasisep

#endif  // QUASISEP_DENSE_HPP
