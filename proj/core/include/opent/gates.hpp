#pragma once

#include <optional>
#include <string>

#include "opent/types.hpp"

namespace opent {

/// Named gate catalog. cnot and cz are d=2 gates; expzz(theta) is d=2;
/// controlled-phase(theta) puts the phase on |d-1,d-1> for any d;
/// identity and swap exist for any d. Unsupported (name, d) pairs throw.
BipartiteOperator make_gate(const std::string& name, int d,
                            std::optional<double> theta = std::nullopt);

BipartiteOperator identity_gate(int d);
BipartiteOperator swap_gate(int d);
BipartiteOperator cnot_gate();
BipartiteOperator cz_gate();
BipartiteOperator controlled_phase_gate(double theta, int d);

}  // namespace opent
