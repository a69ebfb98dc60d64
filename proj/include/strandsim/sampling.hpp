#pragma once

#include "strandsim/statevector.hpp"

#include <cstdint>
#include <map>
#include <span>
#include <string>

namespace strandsim {

/// splitmix64 (Steele, Lea & Flood / Vigna). Chosen as the one sampling
/// generator so histograms are bit-identical across platforms and runs.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
    std::uint64_t state_;
};

/// Derives an independent stream seed from a base seed and a work-item index:
/// seed XOR (index * 0x9E3779B97F4A7C15) pushed through the splitmix64
/// finalizer. Used by scan so per-window results do not depend on execution
/// order or thread count.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index);

/// Counts of measured bitstrings. Key character j is the outcome of the j-th
/// measured qubit, so keys have one character per measured qubit and only
/// observed outcomes appear.
struct Histogram {
    std::map<std::string, std::uint64_t> counts;
    std::uint64_t total_shots = 0;

    friend bool operator==(const Histogram&, const Histogram&) = default;
};

/// Draws `shots` independent samples from the exact joint marginal of the
/// listed qubits by inverse-CDF over splitmix64(seed). Deterministic: the
/// same (state, qubits, shots, seed) always yields the same histogram.
Histogram sample_measurements(const Statevector& state, std::span<const int> qubits,
                              std::uint64_t shots, std::uint64_t seed);

} // namespace strandsim
