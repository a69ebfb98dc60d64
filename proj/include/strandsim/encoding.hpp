#pragma once

#include "strandsim/gate.hpp"
#include "strandsim/statevector.hpp"

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace strandsim {

enum class Nucleotide : unsigned char { A, C, G, T };

char to_char(Nucleotide base);

/// A validated DNA sequence over the strict {A, C, G, T} alphabet.
struct NucleotideSeq {
    std::string id;
    std::vector<Nucleotide> bases;

    /// Parses `letters`, upcasing as it goes. Throws ValidationError on any
    /// character outside the alphabet, naming the sequence and the offender.
    static NucleotideSeq from_string(std::string_view id, std::string_view letters);

    std::size_t size() const { return bases.size(); }
    std::string letters() const;

    friend bool operator==(const NucleotideSeq&, const NucleotideSeq&) = default;
};

/// Rotation angle per base, in radians. The default assignment puts A and G
/// at opposite poles (pi and 0) with C and T between them (pi/2 and pi/6), so
/// a base encodes as the single-qubit state cos(theta/2)|0> + sin(theta/2)|1>.
struct AngleMap {
    std::array<double, 4> theta{};

    AngleMap();

    double& operator[](Nucleotide base) { return theta[static_cast<std::size_t>(base)]; }
    double operator[](Nucleotide base) const { return theta[static_cast<std::size_t>(base)]; }
};

double angle_of(Nucleotide base, const AngleMap& map);

/// Register layout of a comparison circuit: one strip qubit selecting which
/// of the two sequences a branch encodes, ceil(log2 N) index qubits
/// addressing sequence positions, and one dna qubit carrying the base angle.
struct EncodingLayout {
    int strip_qubit = 0;
    std::vector<int> index_qubits;
    int dna_qubit = 0;
    int n_qubits = 0;
    int classical_bits = 1;
};

/// Qubits needed to compare sequences of the given length:
/// 2 + ceil(log2 length) (strip + index + dna).
int required_qubits(std::size_t sequence_length);

/// Builds the full comparison circuit for two equal, power-of-two-length
/// sequences: Hadamards on strip and index qubits, one multi-controlled RY
/// per (sequence, position) writing that base's angle onto the dna qubit,
/// a closing Hadamard on strip, and a strip measurement into classical bit 0.
/// Strip |0> selects `ref`, |1> selects `cmp`; index qubit k controls on bit
/// k of the position.
std::pair<Circuit, EncodingLayout> build_comparison_circuit(const NucleotideSeq& ref,
                                                            const NucleotideSeq& cmp,
                                                            const AngleMap& map);

/// The normalized state (1/sqrt(N)) sum_i (cos(theta_i/2)|0> +
/// sin(theta_i/2)|1>) (x) |i>, flattened so entry d*N + i is the
/// (dna = d, position = i) amplitude. This is one strip branch of the
/// comparison circuit just before the closing Hadamard.
std::vector<Amplitude> sequence_state(const NucleotideSeq& seq, const AngleMap& map);

} // namespace strandsim
