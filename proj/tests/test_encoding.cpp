#include "strandsim/encoding.hpp"

#include "strandsim/errors.hpp"
#include "strandsim/statevector.hpp"
#include "strandsim/unitary.hpp"
#include "oracle.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <vector>

using namespace strandsim;
using std::numbers::pi;

namespace {

NucleotideSeq seq(std::string_view letters) { return NucleotideSeq::from_string("t", letters); }

NucleotideSeq random_seq(std::mt19937_64& rng, std::size_t length) {
    static constexpr char kAlphabet[] = {'A', 'C', 'G', 'T'};
    std::string letters;
    for (std::size_t i = 0; i < length; ++i) {
        letters.push_back(kAlphabet[rng() % 4]);
    }
    return seq(letters);
}

} // namespace

TEST_CASE("sequence parsing and rendering") {
    const NucleotideSeq s = NucleotideSeq::from_string("x", "AcGt");
    CHECK(s.letters() == "ACGT");
    CHECK(s.size() == 4);
    CHECK(s.bases[0] == Nucleotide::A);
    CHECK(s.bases[3] == Nucleotide::T);

    CHECK_THROWS_AS(NucleotideSeq::from_string("x", "ACGN"), ValidationError);
    CHECK_THROWS_AS(NucleotideSeq::from_string("x", ""), ValidationError);
    CHECK_THROWS_WITH_AS(NucleotideSeq::from_string("probe", "AXGT"),
                         doctest::Contains("probe"), ValidationError);
}

TEST_CASE("default angle assignment") {
    const AngleMap map;
    CHECK(angle_of(Nucleotide::A, map) == pi);
    CHECK(angle_of(Nucleotide::C, map) == pi / 2);
    CHECK(angle_of(Nucleotide::G, map) == 0.0);
    CHECK(angle_of(Nucleotide::T, map) == doctest::Approx(pi / 6).epsilon(1e-15));
}

TEST_CASE("required_qubits is 2 plus ceil(log2 N)") {
    CHECK(required_qubits(1) == 2);
    CHECK(required_qubits(2) == 3);
    CHECK(required_qubits(4) == 4);
    CHECK(required_qubits(5) == 5);
    CHECK(required_qubits(8) == 5);
    CHECK(required_qubits(16) == 6);
    CHECK(required_qubits(32) == 7);
    CHECK_THROWS_AS(required_qubits(0), UsageError);
}

TEST_CASE("comparison circuit layout and register labels") {
    const auto [circuit, layout] = build_comparison_circuit(seq("AAAA"), seq("TTTT"), AngleMap{});
    CHECK(layout.n_qubits == 4);
    CHECK(layout.strip_qubit == 0);
    CHECK(layout.index_qubits == std::vector<int>{1, 2});
    CHECK(layout.dna_qubit == 3);
    CHECK(layout.classical_bits == 1);
    CHECK(circuit.n_qubits() == 4);
    CHECK(circuit.n_cbits() == 1);
    CHECK(circuit.labels().at(0) == "strip0");
    CHECK(circuit.labels().at(1) == "idx0");
    CHECK(circuit.labels().at(2) == "idx1");
    CHECK(circuit.labels().at(3) == "dna0");
}

TEST_CASE("comparison circuit has the fixed gate skeleton") {
    const auto [circuit, layout] = build_comparison_circuit(seq("AAAA"), seq("TTTT"), AngleMap{});
    const auto& gates = circuit.gates();
    // 3 H, 8 MCRY, 1 H, 1 measure.
    REQUIRE(gates.size() == 13);
    for (int i = 0; i < 3; ++i) {
        CHECK(gates[static_cast<std::size_t>(i)].kind == GateKind::H);
    }
    for (int i = 3; i < 11; ++i) {
        const Gate& g = gates[static_cast<std::size_t>(i)];
        CHECK(g.kind == GateKind::MCRY);
        CHECK(g.target == layout.dna_qubit);
        REQUIRE(g.controls.size() == 3);
        CHECK(g.controls[0].qubit == layout.strip_qubit);
    }
    CHECK(gates[11].kind == GateKind::H);
    CHECK(gates[11].target == layout.strip_qubit);
    CHECK(gates[12].kind == GateKind::Measure);
    CHECK(gates[12].target == layout.strip_qubit);
    CHECK(gates[12].cbit == 0);

    // Reference branch (strip open) carries A's angle pi, comparison branch
    // (strip closed) carries T's angle pi/6.
    for (int i = 3; i < 7; ++i) {
        const Gate& g = gates[static_cast<std::size_t>(i)];
        CHECK(g.controls[0].polarity == Polarity::Open);
        CHECK(g.theta == doctest::Approx(pi));
    }
    for (int i = 7; i < 11; ++i) {
        const Gate& g = gates[static_cast<std::size_t>(i)];
        CHECK(g.controls[0].polarity == Polarity::Closed);
        CHECK(g.theta == doctest::Approx(pi / 6));
    }

    // Index controls enumerate positions 0..3 in little-endian bit order.
    for (int branch = 0; branch < 2; ++branch) {
        for (std::size_t i = 0; i < 4; ++i) {
            const Gate& g = gates[3 + static_cast<std::size_t>(branch) * 4 + i];
            CHECK(g.controls[1].qubit == 1);
            CHECK(g.controls[1].polarity == ((i >> 0) & 1 ? Polarity::Closed : Polarity::Open));
            CHECK(g.controls[2].qubit == 2);
            CHECK(g.controls[2].polarity == ((i >> 1) & 1 ? Polarity::Closed : Polarity::Open));
        }
    }
}

TEST_CASE("degenerate single-base circuit") {
    const auto [circuit, layout] = build_comparison_circuit(seq("A"), seq("A"), AngleMap{});
    CHECK(layout.n_qubits == 2);
    CHECK(layout.index_qubits.empty());
    const auto& gates = circuit.gates();
    REQUIRE(gates.size() == 5); // H, 2 MCRY, H, measure
    CHECK(gates[0].kind == GateKind::H);
    CHECK(gates[1].kind == GateKind::MCRY);
    CHECK(gates[1].controls.size() == 1);
    CHECK(gates[2].kind == GateKind::MCRY);
    CHECK(gates[3].kind == GateKind::H);
    CHECK(gates[4].kind == GateKind::Measure);
}

TEST_CASE("comparison circuit precondition errors") {
    CHECK_THROWS_AS(build_comparison_circuit(seq("AAAA"), seq("AA"), AngleMap{}),
                    ValidationError);
    CHECK_THROWS_WITH_AS(build_comparison_circuit(seq("AAA"), seq("TTT"), AngleMap{}),
                         doctest::Contains("power of two"), ValidationError);
}

TEST_CASE("AAAA versus TTTT strip probability hits the closed form") {
    const auto [circuit, layout] = build_comparison_circuit(seq("AAAA"), seq("TTTT"), AngleMap{});
    Statevector sv(layout.n_qubits);
    sv.apply(circuit);
    const double want = (1.0 - std::cos(5.0 * pi / 12.0)) / 2.0;
    CHECK(std::abs(sv.probability_of(layout.strip_qubit, 1) - want) < 1e-9);
}

TEST_CASE("sequence_state matches hand-expanded cases") {
    const AngleMap map;
    SUBCASE("GG stays on the dna |0> branch") {
        const auto state = sequence_state(seq("GG"), map);
        REQUIRE(state.size() == 4);
        const double s2 = 1.0 / std::sqrt(2.0);
        CHECK(std::abs(state[0] - Amplitude{s2, 0.0}) < 1e-15);
        CHECK(std::abs(state[1] - Amplitude{s2, 0.0}) < 1e-15);
        CHECK(std::abs(state[2]) < 1e-15);
        CHECK(std::abs(state[3]) < 1e-15);
    }
    SUBCASE("AA lands fully on the dna |1> branch") {
        const auto state = sequence_state(seq("AA"), map);
        const double s2 = 1.0 / std::sqrt(2.0);
        CHECK(std::abs(state[0]) < 1e-12);
        CHECK(std::abs(state[1]) < 1e-12);
        CHECK(std::abs(state[2] - Amplitude{s2, 0.0}) < 1e-12);
        CHECK(std::abs(state[3] - Amplitude{s2, 0.0}) < 1e-12);
    }
    SUBCASE("AT mixes the two positions") {
        const auto state = sequence_state(seq("AT"), map);
        const double s2 = 1.0 / std::sqrt(2.0);
        CHECK(std::abs(state[0] - s2 * std::cos(pi / 2)) < 1e-12);
        CHECK(std::abs(state[2] - s2 * std::sin(pi / 2)) < 1e-12);
        CHECK(std::abs(state[1] - s2 * std::cos(pi / 12)) < 1e-12);
        CHECK(std::abs(state[3] - s2 * std::sin(pi / 12)) < 1e-12);
    }
    SUBCASE("norm is one") {
        std::mt19937_64 rng(88);
        for (std::size_t n : {std::size_t{1}, std::size_t{4}, std::size_t{16}}) {
            const auto state = sequence_state(random_seq(rng, n), map);
            double norm2 = 0.0;
            for (const Amplitude& a : state) {
                norm2 += std::norm(a);
            }
            CHECK(std::abs(norm2 - 1.0) <= 1e-12);
        }
    }
    SUBCASE("non-power-of-two length is rejected") {
        CHECK_THROWS_AS(sequence_state(seq("AAA"), map), ValidationError);
    }
}

TEST_CASE("circuit branches reproduce sequence_state") {
    // Apply only the superposition and encoding gates (no closing H, no
    // measure), then read each strip branch out of the statevector.
    std::mt19937_64 rng(1234);
    const AngleMap map;
    for (std::size_t n : {std::size_t{1}, std::size_t{2}, std::size_t{4}, std::size_t{8}}) {
        const NucleotideSeq ref = random_seq(rng, n);
        const NucleotideSeq cmp = random_seq(rng, n);
        const auto [circuit, layout] = build_comparison_circuit(ref, cmp, map);

        Statevector sv(layout.n_qubits);
        const std::size_t n_encoding_gates = circuit.gates().size() - 2;
        for (std::size_t i = 0; i < n_encoding_gates; ++i) {
            sv.apply(circuit.gates()[i]);
        }

        const auto expect_ref = sequence_state(ref, map);
        const auto expect_cmp = sequence_state(cmp, map);
        const double scale = std::sqrt(2.0); // renormalizes a strip branch
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t d = 0; d < 2; ++d) {
                const std::size_t index = (d << (layout.n_qubits - 1)) | (i << 1);
                CAPTURE(n);
                CAPTURE(i);
                CAPTURE(d);
                CHECK(std::abs(scale * sv.amplitude(index) - expect_ref[d * n + i]) <= 1e-10);
                CHECK(std::abs(scale * sv.amplitude(index | 1) - expect_cmp[d * n + i]) <=
                      1e-10);
            }
        }
    }
}

TEST_CASE("encoding gates commute: permuting the rotations keeps the unitary") {
    std::mt19937_64 rng(555);
    const AngleMap map;
    const NucleotideSeq ref = random_seq(rng, 4);
    const NucleotideSeq cmp = random_seq(rng, 4);
    const auto [circuit, layout] = build_comparison_circuit(ref, cmp, map);

    // Strip the measure, then shuffle only the MCRY block.
    Circuit original(circuit.n_qubits(), circuit.n_cbits());
    Circuit shuffled(circuit.n_qubits(), circuit.n_cbits());
    std::vector<Gate> rotations;
    for (const Gate& g : circuit.gates()) {
        if (g.kind == GateKind::MCRY) {
            rotations.push_back(g);
        }
    }
    std::shuffle(rotations.begin(), rotations.end(), rng);
    std::size_t next_rotation = 0;
    for (const Gate& g : circuit.gates()) {
        if (g.kind == GateKind::Measure) {
            continue;
        }
        original.append(g);
        shuffled.append(g.kind == GateKind::MCRY ? rotations[next_rotation++] : g);
    }

    const UnitaryMatrix a = circuit_unitary(original);
    const UnitaryMatrix b = circuit_unitary(shuffled);
    CHECK(phase_aligned_deviation(a, b) <= 1e-10);
}
