#include "strandsim/statevector.hpp"

#include "strandsim/errors.hpp"

#include <cmath>
#include <string>

namespace strandsim {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

} // namespace

void u_matrix(double theta, double phi, double lambda, Amplitude out[4]) {
    const double c = std::cos(theta / 2.0);
    const double s = std::sin(theta / 2.0);
    out[0] = Amplitude(c, 0.0);
    out[1] = -std::polar(s, lambda);
    out[2] = std::polar(s, phi);
    out[3] = std::polar(c, phi + lambda);
}

Statevector::Statevector(int n_qubits, int max_qubits) : n_qubits_(n_qubits) {
    if (n_qubits < 1 || n_qubits > max_qubits) {
        throw CapacityError("qubit count " + std::to_string(n_qubits) + " outside [1, " +
                            std::to_string(max_qubits) + "]");
    }
    amps_.assign(std::size_t{1} << n_qubits, Amplitude{});
    amps_[0] = Amplitude(1.0, 0.0);
}

Statevector Statevector::basis(int n_qubits, std::uint64_t index, int max_qubits) {
    Statevector sv(n_qubits, max_qubits);
    if (index >= sv.dim()) {
        throw UsageError("basis index out of range");
    }
    sv.amps_[0] = Amplitude{};
    sv.amps_[index] = Amplitude(1.0, 0.0);
    return sv;
}

double Statevector::norm_squared() const {
    double total = 0.0;
    for (const Amplitude& a : amps_) {
        total += std::norm(a);
    }
    return total;
}

void Statevector::check_qubit(int qubit) const {
    if (qubit < 0 || qubit >= n_qubits_) {
        throw UsageError("qubit index " + std::to_string(qubit) + " out of range for " +
                         std::to_string(n_qubits_) + " qubits");
    }
}

void Statevector::apply_single(const Amplitude m00, const Amplitude m01, const Amplitude m10,
                               const Amplitude m11, int target) {
    const std::size_t step = std::size_t{1} << target;
    const std::size_t block = step << 1;
    for (std::size_t base = 0; base < amps_.size(); base += block) {
        for (std::size_t off = 0; off < step; ++off) {
            const std::size_t i0 = base + off;
            const std::size_t i1 = i0 + step;
            const Amplitude a = amps_[i0];
            const Amplitude b = amps_[i1];
            amps_[i0] = m00 * a + m01 * b;
            amps_[i1] = m10 * a + m11 * b;
        }
    }
}

void Statevector::apply_cnot(int control, int target) {
    const std::size_t cbit = std::size_t{1} << control;
    const std::size_t tbit = std::size_t{1} << target;
    for (std::size_t i = 0; i < amps_.size(); ++i) {
        if ((i & cbit) && !(i & tbit)) {
            std::swap(amps_[i], amps_[i | tbit]);
        }
    }
}

void Statevector::apply_mcry(const std::vector<Control>& controls, int target, double theta) {
    std::size_t mask = 0;
    std::size_t want = 0;
    for (const Control& c : controls) {
        const std::size_t bit = std::size_t{1} << c.qubit;
        mask |= bit;
        if (c.polarity == Polarity::Closed) {
            want |= bit;
        }
    }
    const std::size_t tbit = std::size_t{1} << target;
    const double c = std::cos(theta / 2.0);
    const double s = std::sin(theta / 2.0);
    for (std::size_t i = 0; i < amps_.size(); ++i) {
        if ((i & tbit) || (i & mask) != want) {
            continue;
        }
        const std::size_t i1 = i | tbit;
        const Amplitude a = amps_[i];
        const Amplitude b = amps_[i1];
        amps_[i] = c * a - s * b;
        amps_[i1] = s * a + c * b;
    }
}

void Statevector::apply(const Gate& gate) {
    const std::vector<int> qs = gate.qubits();
    for (std::size_t i = 0; i < qs.size(); ++i) {
        check_qubit(qs[i]);
        for (std::size_t j = 0; j < i; ++j) {
            if (qs[j] == qs[i]) {
                throw UsageError("gate qubit indices must be distinct");
            }
        }
    }
    switch (gate.kind) {
    case GateKind::H:
        apply_single(Amplitude(kInvSqrt2, 0), Amplitude(kInvSqrt2, 0), Amplitude(kInvSqrt2, 0),
                     Amplitude(-kInvSqrt2, 0), gate.target);
        break;
    case GateKind::X:
        apply_single(Amplitude{}, Amplitude(1, 0), Amplitude(1, 0), Amplitude{}, gate.target);
        break;
    case GateKind::RY: {
        const double c = std::cos(gate.theta / 2.0);
        const double s = std::sin(gate.theta / 2.0);
        apply_single(Amplitude(c, 0), Amplitude(-s, 0), Amplitude(s, 0), Amplitude(c, 0),
                     gate.target);
        break;
    }
    case GateKind::U: {
        Amplitude m[4];
        u_matrix(gate.theta, gate.phi, gate.lambda, m);
        apply_single(m[0], m[1], m[2], m[3], gate.target);
        break;
    }
    case GateKind::CNOT:
        apply_cnot(gate.control, gate.target);
        break;
    case GateKind::MCRY:
        apply_mcry(gate.controls, gate.target, gate.theta);
        break;
    case GateKind::Measure:
        throw UsageError("Measure gates cannot be applied as unitaries; "
                         "use probability_of or sample_measurements");
    }
}

void Statevector::apply(const Circuit& circuit) {
    if (circuit.n_qubits() != n_qubits_) {
        throw UsageError("circuit width " + std::to_string(circuit.n_qubits()) +
                         " does not match state width " + std::to_string(n_qubits_));
    }
    bool seen_measure = false;
    for (const Gate& g : circuit.gates()) {
        if (g.kind == GateKind::Measure) {
            seen_measure = true;
        } else if (seen_measure) {
            throw UnsupportedError("mid-circuit measurement followed by unitary gates is not supported");
        }
    }
    for (const Gate& g : circuit.gates()) {
        if (g.kind == GateKind::Measure) {
            continue; // deferred to probability / sampling calls
        }
        apply(g);
    }
}

double Statevector::probability_of(int qubit, int outcome) const {
    check_qubit(qubit);
    if (outcome != 0 && outcome != 1) {
        throw UsageError("measurement outcome must be 0 or 1");
    }
    const std::size_t bit = std::size_t{1} << qubit;
    double total = 0.0;
    for (std::size_t i = 0; i < amps_.size(); ++i) {
        if (((i & bit) != 0) == (outcome == 1)) {
            total += std::norm(amps_[i]);
        }
    }
    return total;
}

} // namespace strandsim
