#include "strandsim/lowering.hpp"

#include "strandsim/errors.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

namespace strandsim {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kToffoliTol = 1e-10;
constexpr double kMcryTol = 1e-9;

void emit_h(Circuit& c, int q) { c.u(q, kPi / 2, 0.0, kPi); }
void emit_x(Circuit& c, int q) { c.u(q, kPi, 0.0, kPi); }
void emit_ry(Circuit& c, int q, double theta) { c.u(q, theta, 0.0, 0.0); }
void emit_t(Circuit& c, int q) { c.u(q, 0.0, 0.0, kPi / 4); }
void emit_tdg(Circuit& c, int q) { c.u(q, 0.0, 0.0, -kPi / 4); }
void emit_phase(Circuit& c, int q, double angle) { c.u(q, 0.0, 0.0, angle); }

// Standard T/T-dagger ladder. The trailing T(b) and the control-side
// T(a)/Tdg(b) land in otherwise idle layers, which is what makes the ASAP
// depth come out at 11 for 15 gates.
void emit_toffoli(Circuit& c, int a, int b, int t) {
    emit_h(c, t);
    c.cx(b, t);
    emit_tdg(c, t);
    c.cx(a, t);
    emit_t(c, t);
    c.cx(b, t);
    emit_tdg(c, t);
    c.cx(a, t);
    emit_t(c, b);
    emit_t(c, t);
    emit_h(c, t);
    c.cx(a, b);
    emit_t(c, a);
    emit_tdg(c, b);
    c.cx(a, b);
}

// Diagonal phase (-1)^(x_0 x_1 ... x_{k-1}) over the listed qubits, as a
// parity network: one phase term per non-empty subset, with CNOT chains
// folding each subset's parity onto its last member. Exact by the
// multilinear expansion of the product x_0...x_{k-1} into XOR terms.
void emit_mcz(Circuit& c, std::span<const int> qubits) {
    const int k = static_cast<int>(qubits.size());
    const double base = kPi / static_cast<double>(std::size_t{1} << (k - 1));
    const std::size_t n_subsets = std::size_t{1} << k;
    for (std::size_t mask = 1; mask < n_subsets; ++mask) {
        std::vector<int> members;
        for (int j = 0; j < k; ++j) {
            if (mask & (std::size_t{1} << j)) {
                members.push_back(qubits[j]);
            }
        }
        const int anchor = members.back();
        for (std::size_t j = 0; j + 1 < members.size(); ++j) {
            c.cx(members[j], anchor);
        }
        const double sign = (members.size() % 2 == 1) ? 1.0 : -1.0;
        emit_phase(c, anchor, sign * base);
        for (std::size_t j = members.size() - 1; j-- > 0;) {
            c.cx(members[j], anchor);
        }
    }
}

void emit_mcx(Circuit& c, std::span<const int> controls, int target) {
    switch (controls.size()) {
    case 0:
        emit_x(c, target);
        break;
    case 1:
        c.cx(controls[0], target);
        break;
    case 2:
        emit_toffoli(c, controls[0], controls[1], target);
        break;
    default: {
        std::vector<int> all(controls.begin(), controls.end());
        all.push_back(target);
        emit_h(c, target);
        emit_mcz(c, all);
        emit_h(c, target);
        break;
    }
    }
}

void emit_cry(Circuit& c, int control, int target, double theta) {
    emit_ry(c, target, theta / 2);
    c.cx(control, target);
    emit_ry(c, target, -theta / 2);
    c.cx(control, target);
}

// RY(theta) on target controlled on all listed qubits being |1>. Recursive
// halving: CRY(theta/2) off the last control, toggled by an MCX over the
// rest, then recurse with the remaining controls at half angle. No ancillas.
void emit_mcry_closed(Circuit& c, std::span<const int> controls, int target, double theta) {
    if (controls.empty()) {
        emit_ry(c, target, theta);
        return;
    }
    if (controls.size() == 1) {
        emit_cry(c, controls[0], target, theta);
        return;
    }
    const int last = controls.back();
    const std::span<const int> rest = controls.first(controls.size() - 1);
    emit_cry(c, last, target, theta / 2);
    emit_mcx(c, rest, last);
    emit_cry(c, last, target, -theta / 2);
    emit_mcx(c, rest, last);
    emit_mcry_closed(c, rest, target, theta / 2);
}

// Open controls become closed by X-conjugation; those X gates count toward
// the reported totals.
void emit_mcry(Circuit& c, std::span<const Control> controls, int target, double theta) {
    std::vector<int> closed;
    std::vector<int> opens;
    for (const Control& ctl : controls) {
        closed.push_back(ctl.qubit);
        if (ctl.polarity == Polarity::Open) {
            opens.push_back(ctl.qubit);
        }
    }
    for (int q : opens) {
        emit_x(c, q);
    }
    emit_mcry_closed(c, closed, target, theta);
    for (int q : opens) {
        emit_x(c, q);
    }
}

// Ideal embeddings, built by index logic rather than gate application, so
// report verification does not share a code path with the simulator.
UnitaryMatrix ideal_ccx(int n_qubits, int c1, int c2, int target) {
    const std::size_t dim = std::size_t{1} << n_qubits;
    UnitaryMatrix m(dim);
    const std::size_t b1 = std::size_t{1} << c1;
    const std::size_t b2 = std::size_t{1} << c2;
    const std::size_t bt = std::size_t{1} << target;
    for (std::size_t col = 0; col < dim; ++col) {
        const std::size_t row = ((col & b1) && (col & b2)) ? (col ^ bt) : col;
        m.at(row, col) = Amplitude(1.0, 0.0);
    }
    return m;
}

UnitaryMatrix ideal_mcry(int n_qubits, std::span<const Control> controls, int target,
                         double theta) {
    const std::size_t dim = std::size_t{1} << n_qubits;
    UnitaryMatrix m(dim);
    std::size_t mask = 0;
    std::size_t want = 0;
    for (const Control& c : controls) {
        const std::size_t bit = std::size_t{1} << c.qubit;
        mask |= bit;
        if (c.polarity == Polarity::Closed) {
            want |= bit;
        }
    }
    const std::size_t bt = std::size_t{1} << target;
    const double cth = std::cos(theta / 2.0);
    const double sth = std::sin(theta / 2.0);
    for (std::size_t col = 0; col < dim; ++col) {
        if ((col & mask) != want) {
            m.at(col, col) = Amplitude(1.0, 0.0);
        } else if (!(col & bt)) {
            m.at(col, col) = Amplitude(cth, 0.0);
            m.at(col | bt, col) = Amplitude(sth, 0.0);
        } else {
            m.at(col ^ bt, col) = Amplitude(-sth, 0.0);
            m.at(col, col) = Amplitude(cth, 0.0);
        }
    }
    return m;
}

void count_gates(const Circuit& c, LoweringReport& report) {
    report.single_qubit_count = 0;
    report.cnot_count = 0;
    for (const Gate& g : c.gates()) {
        if (g.kind == GateKind::U) {
            ++report.single_qubit_count;
        } else if (g.kind == GateKind::CNOT) {
            ++report.cnot_count;
        }
    }
}

void verify_against(LoweringReport& report, const UnitaryMatrix& ideal, double tol) {
    const UnitaryMatrix actual = circuit_unitary(report.lowered);
    report.max_deviation = phase_aligned_deviation(actual, ideal);
    report.equivalent = report.max_deviation <= tol;
    report.verified = true;
}

Circuit without_measures(const Circuit& c) {
    Circuit out(c.n_qubits(), c.n_cbits());
    for (const Gate& g : c.gates()) {
        if (g.kind != GateKind::Measure) {
            out.append(g);
        }
    }
    return out;
}

} // namespace

int asap_depth(const Circuit& circuit) {
    std::vector<int> busy(circuit.n_qubits(), 0);
    int depth = 0;
    for (const Gate& g : circuit.gates()) {
        int layer = 0;
        for (int q : g.qubits()) {
            layer = std::max(layer, busy[q]);
        }
        ++layer;
        for (int q : g.qubits()) {
            busy[q] = layer;
        }
        depth = std::max(depth, layer);
    }
    return depth;
}

LoweringReport lower_toffoli(int c1, int c2, int target) {
    if (c1 == c2 || c1 == target || c2 == target) {
        throw UsageError("Toffoli qubit indices must be distinct");
    }
    if (c1 < 0 || c2 < 0 || target < 0) {
        throw UsageError("Toffoli qubit indices must be non-negative");
    }
    const int n = std::max({c1, c2, target}) + 1;
    LoweringReport report;
    report.lowered = Circuit(n);
    emit_toffoli(report.lowered, c1, c2, target);
    count_gates(report.lowered, report);
    report.depth = asap_depth(report.lowered);
    if (n <= kUnitaryMaxQubits) {
        verify_against(report, ideal_ccx(n, c1, c2, target), kToffoliTol);
    }
    return report;
}

LoweringReport lower_mcry(std::span<const Control> controls, int target, double theta) {
    if (controls.size() > static_cast<std::size_t>(kMaxMcryControls)) {
        throw CapacityError("MCRY supports at most " + std::to_string(kMaxMcryControls) +
                            " controls, got " + std::to_string(controls.size()));
    }
    std::vector<int> qs;
    for (const Control& c : controls) {
        qs.push_back(c.qubit);
    }
    qs.push_back(target);
    std::vector<int> sorted = qs;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw UsageError("MCRY qubit indices must be distinct");
    }
    if (sorted.front() < 0) {
        throw UsageError("MCRY qubit indices must be non-negative");
    }
    const int n = sorted.back() + 1;
    LoweringReport report;
    report.lowered = Circuit(n);
    emit_mcry(report.lowered, controls, target, theta);
    count_gates(report.lowered, report);
    report.depth = asap_depth(report.lowered);
    if (n <= kUnitaryMaxQubits) {
        verify_against(report, ideal_mcry(n, controls, target, theta), kMcryTol);
    }
    return report;
}

LoweringReport lower_circuit(const Circuit& circuit, bool verify) {
    bool seen_measure = false;
    for (const Gate& g : circuit.gates()) {
        if (g.kind == GateKind::Measure) {
            seen_measure = true;
        } else if (seen_measure) {
            throw UnsupportedError("measurements must form a trailing suffix");
        }
    }

    LoweringReport report;
    report.lowered = Circuit(circuit.n_qubits(), circuit.n_cbits());
    for (const auto& [q, name] : circuit.labels()) {
        report.lowered.set_label(q, name);
    }
    for (const Gate& g : circuit.gates()) {
        switch (g.kind) {
        case GateKind::H:
            emit_h(report.lowered, g.target);
            break;
        case GateKind::X:
            emit_x(report.lowered, g.target);
            break;
        case GateKind::RY:
            emit_ry(report.lowered, g.target, g.theta);
            break;
        case GateKind::U:
        case GateKind::CNOT:
        case GateKind::Measure:
            report.lowered.append(g);
            break;
        case GateKind::MCRY:
            emit_mcry(report.lowered, g.controls, g.target, g.theta);
            break;
        }
    }
    count_gates(report.lowered, report);
    report.depth = asap_depth(report.lowered);
    if (verify) {
        const auto [equal, dev] =
            check_equivalence(without_measures(circuit), without_measures(report.lowered), kMcryTol);
        report.verified = true;
        report.equivalent = equal;
        report.max_deviation = dev;
    }
    return report;
}

std::pair<bool, double> check_equivalence(const Circuit& a, const Circuit& b, double tol) {
    if (a.n_qubits() != b.n_qubits()) {
        throw UsageError("circuits have different qubit counts");
    }
    const double dev = phase_aligned_deviation(circuit_unitary(a), circuit_unitary(b));
    return {dev <= tol, dev};
}

} // namespace strandsim
