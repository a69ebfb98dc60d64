#pragma once

#include <map>
#include <string>
#include <vector>

namespace strandsim {

enum class GateKind { H, X, RY, U, CNOT, MCRY, Measure };

/// Control polarity of one control wire of a multi-controlled gate.
/// Closed controls fire on |1>, open controls fire on |0>.
enum class Polarity { Closed, Open };

struct Control {
    int qubit = -1;
    Polarity polarity = Polarity::Closed;

    friend bool operator==(const Control&, const Control&) = default;
};

/// One gate instance. Which fields are meaningful depends on `kind`:
///   H, X          target
///   RY            target, theta
///   U             target, theta, phi, lambda
///   CNOT          control, target
///   MCRY          controls, target, theta
///   Measure       target (the measured qubit), cbit
///
/// U(theta, phi, lambda) is the matrix
///   [ cos(theta/2)              -e^{i lambda} sin(theta/2)      ]
///   [ e^{i phi} sin(theta/2)     e^{i(phi+lambda)} cos(theta/2) ]
/// and RY(theta) = U(theta, 0, 0).
struct Gate {
    GateKind kind = GateKind::H;
    int target = -1;
    int control = -1;              // CNOT only
    std::vector<Control> controls; // MCRY only
    double theta = 0.0;
    double phi = 0.0;
    double lambda = 0.0;
    int cbit = -1;                 // Measure only

    static Gate h(int qubit);
    static Gate x(int qubit);
    static Gate ry(int qubit, double theta);
    static Gate u(int qubit, double theta, double phi, double lambda);
    static Gate cnot(int control, int target);
    static Gate mcry(std::vector<Control> controls, int target, double theta);
    static Gate measure(int qubit, int cbit);

    /// Every qubit the gate touches (controls first, then target).
    std::vector<int> qubits() const;
};

/// An ordered gate list over a fixed register of qubits and classical bits.
/// Gates are validated on append: indices in range and pairwise distinct.
class Circuit {
public:
    Circuit() = default;
    explicit Circuit(int n_qubits, int n_cbits = 0);

    int n_qubits() const { return n_qubits_; }
    int n_cbits() const { return n_cbits_; }
    const std::vector<Gate>& gates() const { return gates_; }
    bool has_measurement() const;

    void append(Gate gate);

    // Convenience appenders.
    void h(int q) { append(Gate::h(q)); }
    void x(int q) { append(Gate::x(q)); }
    void ry(int q, double theta) { append(Gate::ry(q, theta)); }
    void u(int q, double theta, double phi, double lambda) { append(Gate::u(q, theta, phi, lambda)); }
    void cx(int control, int target) { append(Gate::cnot(control, target)); }
    void mcry(std::vector<Control> controls, int target, double theta) {
        append(Gate::mcry(std::move(controls), target, theta));
    }
    void measure(int q, int c) { append(Gate::measure(q, c)); }

    /// Optional per-qubit names ("strip0", "idx0", ...). Names must be unique.
    void set_label(int qubit, const std::string& name);
    const std::map<int, std::string>& labels() const { return labels_; }

private:
    int n_qubits_ = 0;
    int n_cbits_ = 0;
    std::vector<Gate> gates_;
    std::map<int, std::string> labels_;
};

} // namespace strandsim
