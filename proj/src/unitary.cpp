#include "strandsim/unitary.hpp"

#include "strandsim/errors.hpp"

#include <cmath>
#include <string>

namespace strandsim {

UnitaryMatrix UnitaryMatrix::identity(std::size_t dim) {
    UnitaryMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        m.at(i, i) = Amplitude(1.0, 0.0);
    }
    return m;
}

UnitaryMatrix circuit_unitary(const Circuit& circuit) {
    if (circuit.n_qubits() < 1 || circuit.n_qubits() > kUnitaryMaxQubits) {
        throw CapacityError("circuit_unitary supports 1 to " + std::to_string(kUnitaryMaxQubits) +
                            " qubits, got " + std::to_string(circuit.n_qubits()));
    }
    if (circuit.has_measurement()) {
        throw UsageError("circuit_unitary requires a measurement-free circuit");
    }
    const std::size_t dim = std::size_t{1} << circuit.n_qubits();
    UnitaryMatrix u(dim);
    for (std::size_t col = 0; col < dim; ++col) {
        Statevector sv = Statevector::basis(circuit.n_qubits(), col);
        sv.apply(circuit);
        const auto amps = sv.amplitudes();
        for (std::size_t row = 0; row < dim; ++row) {
            u.at(row, col) = amps[row];
        }
    }
    return u;
}

double phase_aligned_deviation(const UnitaryMatrix& a, const UnitaryMatrix& b) {
    if (a.dim != b.dim) {
        throw UsageError("matrix dimensions differ");
    }
    std::size_t ref = 0;
    double best = -1.0;
    for (std::size_t i = 0; i < a.elems.size(); ++i) {
        const double mag = std::abs(a.elems[i]);
        if (mag > best) {
            best = mag;
            ref = i;
        }
    }
    Amplitude phase(1.0, 0.0);
    if (best > 0.0) {
        const Amplitude ratio = b.elems[ref] / a.elems[ref];
        const double mag = std::abs(ratio);
        if (mag > 1e-12) {
            phase = ratio / mag;
        }
    }
    double dev = 0.0;
    for (std::size_t i = 0; i < a.elems.size(); ++i) {
        dev = std::max(dev, std::abs(phase * a.elems[i] - b.elems[i]));
    }
    return dev;
}

} // namespace strandsim
