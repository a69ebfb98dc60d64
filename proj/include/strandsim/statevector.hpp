#pragma once

#include "strandsim/gate.hpp"

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

namespace strandsim {

using Amplitude = std::complex<double>;

/// Default cap on simulated register width (2^24 amplitudes = 256 MiB).
inline constexpr int kDefaultMaxQubits = 24;

/// Dense statevector over n qubits: 2^n complex amplitudes.
///
/// Bit numbering is little-endian throughout: qubit 0 is the least
/// significant bit of the amplitude index. Measurement gates are deferred:
/// applying a circuit runs its unitary prefix and leaves Measure gates to
/// probability_of / sample_measurements.
class Statevector {
public:
    explicit Statevector(int n_qubits, int max_qubits = kDefaultMaxQubits);

    /// The computational basis state |index>.
    static Statevector basis(int n_qubits, std::uint64_t index, int max_qubits = kDefaultMaxQubits);

    int n_qubits() const { return n_qubits_; }
    std::size_t dim() const { return amps_.size(); }
    std::span<const Amplitude> amplitudes() const { return amps_; }
    Amplitude amplitude(std::uint64_t index) const { return amps_.at(index); }

    /// Sum of |amplitude|^2; 1 within 1e-12 after any unitary application.
    double norm_squared() const;

    void apply(const Gate& gate);
    void apply(const Circuit& circuit);

    /// Exact marginal: probability that measuring `qubit` yields `outcome`.
    double probability_of(int qubit, int outcome) const;

private:
    void apply_single(const Amplitude m00, const Amplitude m01, const Amplitude m10,
                      const Amplitude m11, int target);
    void apply_cnot(int control, int target);
    void apply_mcry(const std::vector<Control>& controls, int target, double theta);
    void check_qubit(int qubit) const;

    int n_qubits_ = 0;
    std::vector<Amplitude> amps_;
};

/// The 2x2 matrix of U(theta, phi, lambda).
void u_matrix(double theta, double phi, double lambda, Amplitude out[4]);

} // namespace strandsim
