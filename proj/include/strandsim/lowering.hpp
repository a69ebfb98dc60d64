#pragma once

#include "strandsim/gate.hpp"
#include "strandsim/unitary.hpp"

#include <span>
#include <utility>

namespace strandsim {

/// Cap on MCRY control count accepted by the lowering pass.
inline constexpr int kMaxMcryControls = 6;

/// Result of lowering to the {U, CNOT} basis. `depth` counts greedy ASAP
/// layers: each gate is placed one layer after the latest layer occupied by
/// any of its qubits, in list order. `verified` says whether the lowered
/// circuit was actually compared against the ideal unitary; when it is true,
/// `equivalent` and `max_deviation` report that comparison (up to global
/// phase).
struct LoweringReport {
    Circuit lowered;
    int single_qubit_count = 0;
    int cnot_count = 0;
    int depth = 0;
    bool verified = false;
    bool equivalent = false;
    double max_deviation = 0.0;
};

/// Lowers CCX to 9 single-qubit basis gates and 6 CNOTs at ASAP depth 11,
/// verified against the ideal doubly-controlled X within 1e-10.
LoweringReport lower_toffoli(int c1, int c2, int target);

/// Lowers a multi-controlled RY (up to kMaxMcryControls controls, open or
/// closed) by recursive halving with no ancilla qubits, verified against the
/// ideal embedding within 1e-9. Zero controls degenerates to one U gate.
LoweringReport lower_mcry(std::span<const Control> controls, int target, double theta);

/// Rewrites every gate of `circuit` into the {U, CNOT} basis, preserving any
/// trailing Measure gates. With `verify`, compares the unitary parts of input
/// and output (requires width <= kUnitaryMaxQubits).
LoweringReport lower_circuit(const Circuit& circuit, bool verify = false);

/// True (with the deviation) iff the two circuits have the same unitary up to
/// global phase within `tol`. Both must be measurement-free and equal width.
std::pair<bool, double> check_equivalence(const Circuit& a, const Circuit& b, double tol);

/// Greedy ASAP layer count of a gate list (Measure gates occupy their qubit).
int asap_depth(const Circuit& circuit);

} // namespace strandsim
