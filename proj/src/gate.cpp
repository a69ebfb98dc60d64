#include "strandsim/gate.hpp"

#include "strandsim/errors.hpp"

#include <algorithm>
#include <unordered_set>

namespace strandsim {

Gate Gate::h(int qubit) {
    Gate g;
    g.kind = GateKind::H;
    g.target = qubit;
    return g;
}

Gate Gate::x(int qubit) {
    Gate g;
    g.kind = GateKind::X;
    g.target = qubit;
    return g;
}

Gate Gate::ry(int qubit, double theta) {
    Gate g;
    g.kind = GateKind::RY;
    g.target = qubit;
    g.theta = theta;
    return g;
}

Gate Gate::u(int qubit, double theta, double phi, double lambda) {
    Gate g;
    g.kind = GateKind::U;
    g.target = qubit;
    g.theta = theta;
    g.phi = phi;
    g.lambda = lambda;
    return g;
}

Gate Gate::cnot(int control, int target) {
    Gate g;
    g.kind = GateKind::CNOT;
    g.control = control;
    g.target = target;
    return g;
}

Gate Gate::mcry(std::vector<Control> controls, int target, double theta) {
    Gate g;
    g.kind = GateKind::MCRY;
    g.controls = std::move(controls);
    g.target = target;
    g.theta = theta;
    return g;
}

Gate Gate::measure(int qubit, int cbit) {
    Gate g;
    g.kind = GateKind::Measure;
    g.target = qubit;
    g.cbit = cbit;
    return g;
}

std::vector<int> Gate::qubits() const {
    std::vector<int> out;
    if (kind == GateKind::CNOT) {
        out.push_back(control);
    }
    for (const Control& c : controls) {
        out.push_back(c.qubit);
    }
    out.push_back(target);
    return out;
}

Circuit::Circuit(int n_qubits, int n_cbits) : n_qubits_(n_qubits), n_cbits_(n_cbits) {
    if (n_qubits < 0 || n_cbits < 0) {
        throw UsageError("circuit register sizes must be non-negative");
    }
}

bool Circuit::has_measurement() const {
    return std::any_of(gates_.begin(), gates_.end(),
                       [](const Gate& g) { return g.kind == GateKind::Measure; });
}

void Circuit::append(Gate gate) {
    const std::vector<int> qs = gate.qubits();
    std::unordered_set<int> seen;
    for (int q : qs) {
        if (q < 0 || q >= n_qubits_) {
            throw UsageError("gate qubit index " + std::to_string(q) + " out of range for " +
                             std::to_string(n_qubits_) + "-qubit circuit");
        }
        if (!seen.insert(q).second) {
            throw UsageError("gate qubit indices must be distinct");
        }
    }
    if (gate.kind == GateKind::Measure) {
        if (gate.cbit < 0 || gate.cbit >= n_cbits_) {
            throw UsageError("measure classical bit " + std::to_string(gate.cbit) +
                             " out of range for " + std::to_string(n_cbits_) + " classical bits");
        }
    }
    gates_.push_back(std::move(gate));
}

void Circuit::set_label(int qubit, const std::string& name) {
    if (qubit < 0 || qubit >= n_qubits_) {
        throw UsageError("label qubit index out of range");
    }
    for (const auto& [q, existing] : labels_) {
        if (q != qubit && existing == name) {
            throw UsageError("duplicate qubit label: " + name);
        }
    }
    labels_[qubit] = name;
}

} // namespace strandsim
