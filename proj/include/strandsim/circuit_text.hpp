#pragma once

#include "strandsim/gate.hpp"

#include <string>

namespace strandsim {

/// Renders a circuit in the line-oriented text format:
///
///   qubits 4
///   cbits 1
///   label 0 strip0
///   h q[0]
///   u(1.570796,0,3.141593) q[1]
///   cx q[0],q[2]
///   mcry(3.141593) [0-,1+],q[3]
///   measure q[0] -> c[0]
///
/// Control polarity prints '+' for closed (fires on |1>) and '-' for open.
/// Angles print as "0" when exactly zero, else with six fixed decimals.
std::string circuit_to_text(const Circuit& circuit);

/// One angle in the circuit-text convention ("0" or six fixed decimals).
std::string format_angle(double value);

} // namespace strandsim
