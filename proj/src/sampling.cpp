#include "strandsim/sampling.hpp"

#include "strandsim/errors.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>
#include <vector>

namespace strandsim {

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed ^ (index * 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

Histogram sample_measurements(const Statevector& state, std::span<const int> qubits,
                              std::uint64_t shots, std::uint64_t seed) {
    if (qubits.empty()) {
        throw UsageError("sample_measurements requires at least one qubit");
    }
    if (shots == 0) {
        throw UsageError("shot count must be at least 1");
    }
    std::unordered_set<int> seen;
    for (int q : qubits) {
        if (q < 0 || q >= state.n_qubits()) {
            throw UsageError("sampled qubit index out of range");
        }
        if (!seen.insert(q).second) {
            throw UsageError("sampled qubits must be distinct");
        }
    }

    // Exact joint marginal over the listed qubits.
    const std::size_t n_outcomes = std::size_t{1} << qubits.size();
    std::vector<double> prob(n_outcomes, 0.0);
    const auto amps = state.amplitudes();
    for (std::size_t i = 0; i < amps.size(); ++i) {
        std::size_t outcome = 0;
        for (std::size_t j = 0; j < qubits.size(); ++j) {
            outcome |= ((i >> qubits[j]) & 1u) << j;
        }
        prob[outcome] += std::norm(amps[i]);
    }

    std::vector<double> cdf(n_outcomes);
    double acc = 0.0;
    for (std::size_t k = 0; k < n_outcomes; ++k) {
        acc += prob[k];
        cdf[k] = acc;
    }

    std::vector<std::uint64_t> counts(n_outcomes, 0);
    SplitMix64 rng(seed);
    for (std::uint64_t s = 0; s < shots; ++s) {
        const double u = rng.next_unit();
        auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
        std::size_t k = static_cast<std::size_t>(it - cdf.begin());
        if (k >= n_outcomes) {
            k = n_outcomes - 1; // guards the u >= cdf.back() rounding corner
        }
        ++counts[k];
    }

    Histogram hist;
    hist.total_shots = shots;
    for (std::size_t k = 0; k < n_outcomes; ++k) {
        if (counts[k] == 0) {
            continue;
        }
        std::string key(qubits.size(), '0');
        for (std::size_t j = 0; j < qubits.size(); ++j) {
            key[j] = ((k >> j) & 1u) ? '1' : '0';
        }
        hist.counts.emplace(std::move(key), counts[k]);
    }
    return hist;
}

} // namespace strandsim
