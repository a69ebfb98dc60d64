#pragma once

#include "strandsim/gate.hpp"
#include "strandsim/statevector.hpp"

#include <complex>
#include <cstddef>
#include <vector>

namespace strandsim {

/// Cap on full-unitary extraction (dense 2^n x 2^n matrix).
inline constexpr int kUnitaryMaxQubits = 10;

/// Dense row-major complex matrix.
struct UnitaryMatrix {
    std::size_t dim = 0;
    std::vector<Amplitude> elems;

    UnitaryMatrix() = default;
    explicit UnitaryMatrix(std::size_t dim) : dim(dim), elems(dim * dim) {}

    Amplitude& at(std::size_t row, std::size_t col) { return elems[row * dim + col]; }
    const Amplitude& at(std::size_t row, std::size_t col) const { return elems[row * dim + col]; }

    static UnitaryMatrix identity(std::size_t dim);
};

/// The circuit's full unitary, column by column: column c is the circuit
/// applied to basis state |c>. Rejects measurements and widths above
/// kUnitaryMaxQubits.
UnitaryMatrix circuit_unitary(const Circuit& circuit);

/// Largest elementwise modulus difference after aligning global phase on the
/// largest-modulus element of `a`. Zero for matrices equal up to phase.
double phase_aligned_deviation(const UnitaryMatrix& a, const UnitaryMatrix& b);

} // namespace strandsim
