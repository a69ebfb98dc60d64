#pragma once

#include "strandsim/encoding.hpp"
#include "strandsim/sampling.hpp"

#include <cstdint>
#include <optional>
#include <utility>

namespace strandsim {

/// Outcome of one pairwise comparison. `similarity` is always 1 - 2*p1; with
/// the default AngleMap p1 stays in [0, 0.5] and similarity in [0, 1].
struct ComparisonResult {
    enum class Method { Exact, Sampled };

    double p1 = 0.0;
    double similarity = 0.0;
    Method method = Method::Exact;
    std::optional<std::uint64_t> shots;
    std::optional<std::uint64_t> seed;
    std::optional<Histogram> histogram;
    int n_qubits = 0;
};

/// Builds and simulates the comparison circuit, reading the strip qubit's
/// exact |1> probability.
ComparisonResult compare_exact(const NucleotideSeq& ref, const NucleotideSeq& cmp,
                               const AngleMap& map);

/// Same circuit, but p1 is estimated from `shots` seeded strip measurements;
/// the histogram of strip outcomes is attached.
ComparisonResult compare_sampled(const NucleotideSeq& ref, const NucleotideSeq& cmp,
                                 const AngleMap& map, std::uint64_t shots, std::uint64_t seed);

/// similarity = 1 - 2*p1. Not clamped: a negative value signals an AngleMap
/// whose angle gaps exceed pi.
double similarity_from_p1(double p1);

/// Closed-form (similarity, p1) without any circuit: similarity is the mean
/// of cos((theta_ref - theta_cmp)/2) over positions, p1 = (1 - similarity)/2.
/// Works for any equal length, power of two or not. This is the independent
/// oracle the circuit path is tested against.
std::pair<double, double> analytic_similarity(const NucleotideSeq& ref, const NucleotideSeq& cmp,
                                              const AngleMap& map);

} // namespace strandsim
