#include "strandsim/circuit_text.hpp"

#include <cstdio>

namespace strandsim {

namespace {

std::string q(int index) { return "q[" + std::to_string(index) + "]"; }

std::string control_list(const std::vector<Control>& controls) {
    std::string out = "[";
    for (std::size_t i = 0; i < controls.size(); ++i) {
        if (i > 0) {
            out.push_back(',');
        }
        out += std::to_string(controls[i].qubit);
        out.push_back(controls[i].polarity == Polarity::Closed ? '+' : '-');
    }
    out.push_back(']');
    return out;
}

} // namespace

std::string format_angle(double value) {
    if (value == 0.0) {
        return "0";
    }
    char buffer[40];
    std::snprintf(buffer, sizeof(buffer), "%.6f", value);
    return buffer;
}

std::string circuit_to_text(const Circuit& circuit) {
    std::string out;
    out += "qubits " + std::to_string(circuit.n_qubits()) + "\n";
    out += "cbits " + std::to_string(circuit.n_cbits()) + "\n";
    for (const auto& [qubit, name] : circuit.labels()) {
        out += "label " + std::to_string(qubit) + " " + name + "\n";
    }
    for (const Gate& gate : circuit.gates()) {
        switch (gate.kind) {
        case GateKind::H:
            out += "h " + q(gate.target);
            break;
        case GateKind::X:
            out += "x " + q(gate.target);
            break;
        case GateKind::RY:
            out += "ry(" + format_angle(gate.theta) + ") " + q(gate.target);
            break;
        case GateKind::U:
            out += "u(" + format_angle(gate.theta) + "," + format_angle(gate.phi) + "," +
                   format_angle(gate.lambda) + ") " + q(gate.target);
            break;
        case GateKind::CNOT:
            out += "cx " + q(gate.control) + "," + q(gate.target);
            break;
        case GateKind::MCRY:
            out += "mcry(" + format_angle(gate.theta) + ") " + control_list(gate.controls) +
                   "," + q(gate.target);
            break;
        case GateKind::Measure:
            out += "measure " + q(gate.target) + " -> c[" + std::to_string(gate.cbit) + "]";
            break;
        }
        out.push_back('\n');
    }
    return out;
}

} // namespace strandsim
