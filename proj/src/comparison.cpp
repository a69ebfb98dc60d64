#include "strandsim/comparison.hpp"

#include "strandsim/errors.hpp"
#include "strandsim/statevector.hpp"

#include <array>
#include <cmath>

namespace strandsim {

namespace {

/// Runs the comparison circuit and returns (layout, final state).
std::pair<EncodingLayout, Statevector> run_comparison(const NucleotideSeq& ref,
                                                      const NucleotideSeq& cmp,
                                                      const AngleMap& map) {
    auto [circuit, layout] = build_comparison_circuit(ref, cmp, map);
    Statevector state(layout.n_qubits);
    state.apply(circuit);
    return {std::move(layout), std::move(state)};
}

} // namespace

ComparisonResult compare_exact(const NucleotideSeq& ref, const NucleotideSeq& cmp,
                               const AngleMap& map) {
    auto [layout, state] = run_comparison(ref, cmp, map);
    ComparisonResult result;
    result.method = ComparisonResult::Method::Exact;
    result.n_qubits = layout.n_qubits;
    result.p1 = state.probability_of(layout.strip_qubit, 1);
    result.similarity = similarity_from_p1(result.p1);
    return result;
}

ComparisonResult compare_sampled(const NucleotideSeq& ref, const NucleotideSeq& cmp,
                                 const AngleMap& map, std::uint64_t shots, std::uint64_t seed) {
    auto [layout, state] = run_comparison(ref, cmp, map);
    const std::array<int, 1> qubits{layout.strip_qubit};
    Histogram histogram = sample_measurements(state, qubits, shots, seed);

    ComparisonResult result;
    result.method = ComparisonResult::Method::Sampled;
    result.n_qubits = layout.n_qubits;
    result.shots = shots;
    result.seed = seed;
    const auto ones = histogram.counts.find("1");
    const std::uint64_t n_ones = (ones == histogram.counts.end()) ? 0 : ones->second;
    result.p1 = static_cast<double>(n_ones) / static_cast<double>(shots);
    result.similarity = similarity_from_p1(result.p1);
    result.histogram = std::move(histogram);
    return result;
}

double similarity_from_p1(double p1) {
    if (!(p1 >= 0.0 && p1 <= 1.0)) {
        throw UsageError("p1 must lie in [0, 1], got " + std::to_string(p1));
    }
    return 1.0 - 2.0 * p1;
}

std::pair<double, double> analytic_similarity(const NucleotideSeq& ref, const NucleotideSeq& cmp,
                                              const AngleMap& map) {
    if (ref.size() != cmp.size()) {
        throw ValidationError("sequence lengths differ: " + std::to_string(ref.size()) +
                              " vs " + std::to_string(cmp.size()));
    }
    double sum = 0.0;
    for (std::size_t i = 0; i < ref.size(); ++i) {
        const double delta = angle_of(ref.bases[i], map) - angle_of(cmp.bases[i], map);
        sum += std::cos(delta / 2.0);
    }
    const double similarity = sum / static_cast<double>(ref.size());
    return {similarity, (1.0 - similarity) / 2.0};
}

} // namespace strandsim
