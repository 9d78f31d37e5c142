#ifndef QUASISEP_IO_HPP
#define QUASISEP_IO_HPP

#include <nlohmann/json.hpp>
#include <string>

#include "quasisep/fock.hpp"
#include "quasisep/multimode.hpp"
#include "quasisep/separability.hpp"

namespace quasisep {

using Json = nlohmann::ordered_json;

/// {"modes":[{"kind":...,"cutoff":...},...],
///  "amplitudes":[{"occ":[...],"re":...,"im":...},...]}
/// with amplitudes in lexicographic ket order.
Json state_to_json(const StateVector& state);

/// Rejects kets violating the declared cutoffs.
StateVector state_from_json(const Json& json);

StateVector load_state(const std::string& path);
void save_state(const StateVector& state, const std::string& path);

Json verdict_to_json(const SeparabilityVerdict& verdict);

Json mode_matrix_to_json(const ModeMatrix& matrix);
ModeMatrix mode_matrix_from_json(const Json& json);

Json factor_spec_to_json(const FactorSpec& spec);
FactorSpec factor_spec_from_json(const Json& json);

}  // namespace quasisep

#endif  // QUASISEP_IO_HPP
