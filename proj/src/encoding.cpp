#include "strandsim/encoding.hpp"

#include "strandsim/errors.hpp"

#include <bit>
#include <cmath>
#include <numbers>

namespace strandsim {

namespace {

bool is_power_of_two(std::size_t n) { return n != 0 && std::has_single_bit(n); }

void require_comparable(const NucleotideSeq& ref, const NucleotideSeq& cmp) {
    if (ref.size() != cmp.size()) {
        throw ValidationError("sequence lengths differ: " + std::to_string(ref.size()) +
                              " vs " + std::to_string(cmp.size()));
    }
    if (!is_power_of_two(ref.size())) {
        throw ValidationError("length must be a power of two (pad via scan)");
    }
}

} // namespace

char to_char(Nucleotide base) {
    switch (base) {
    case Nucleotide::A:
        return 'A';
    case Nucleotide::C:
        return 'C';
    case Nucleotide::G:
        return 'G';
    case Nucleotide::T:
        return 'T';
    }
    return '?';
}

NucleotideSeq NucleotideSeq::from_string(std::string_view id, std::string_view letters) {
    NucleotideSeq seq;
    seq.id = std::string(id);
    seq.bases.reserve(letters.size());
    for (std::size_t i = 0; i < letters.size(); ++i) {
        switch (letters[i]) {
        case 'A':
        case 'a':
            seq.bases.push_back(Nucleotide::A);
            break;
        case 'C':
        case 'c':
            seq.bases.push_back(Nucleotide::C);
            break;
        case 'G':
        case 'g':
            seq.bases.push_back(Nucleotide::G);
            break;
        case 'T':
        case 't':
            seq.bases.push_back(Nucleotide::T);
            break;
        default:
            throw ValidationError("sequence '" + seq.id + "': invalid character '" +
                                  std::string(1, letters[i]) + "' at position " +
                                  std::to_string(i));
        }
    }
    if (seq.bases.empty()) {
        throw ValidationError("sequence '" + seq.id + "' is empty");
    }
    return seq;
}

std::string NucleotideSeq::letters() const {
    std::string out;
    out.reserve(bases.size());
    for (Nucleotide b : bases) {
        out.push_back(to_char(b));
    }
    return out;
}

AngleMap::AngleMap() {
    using std::numbers::pi;
    (*this)[Nucleotide::A] = pi;
    (*this)[Nucleotide::C] = pi / 2;
    (*this)[Nucleotide::G] = 0.0;
    (*this)[Nucleotide::T] = pi / 6;
}

double angle_of(Nucleotide base, const AngleMap& map) { return map[base]; }

int required_qubits(std::size_t sequence_length) {
    if (sequence_length == 0) {
        throw UsageError("sequence length must be at least 1");
    }
    return 2 + static_cast<int>(std::bit_width(sequence_length - 1));
}

std::pair<Circuit, EncodingLayout> build_comparison_circuit(const NucleotideSeq& ref,
                                                            const NucleotideSeq& cmp,
                                                            const AngleMap& map) {
    require_comparable(ref, cmp);
    const std::size_t n = ref.size();
    const int n_index = required_qubits(n) - 2;

    EncodingLayout layout;
    layout.strip_qubit = 0;
    for (int k = 0; k < n_index; ++k) {
        layout.index_qubits.push_back(1 + k);
    }
    layout.dna_qubit = 1 + n_index;
    layout.n_qubits = 2 + n_index;
    layout.classical_bits = 1;

    Circuit circuit(layout.n_qubits, 1);
    circuit.set_label(layout.strip_qubit, "strip0");
    for (int k = 0; k < n_index; ++k) {
        circuit.set_label(layout.index_qubits[k], "idx" + std::to_string(k));
    }
    circuit.set_label(layout.dna_qubit, "dna0");

    circuit.h(layout.strip_qubit);
    for (int q : layout.index_qubits) {
        circuit.h(q);
    }

    // One rotation per (strip branch, position): the strip control picks the
    // sequence, the index controls pick the position, and the angle is that
    // position's base angle.
    for (int strip_value = 0; strip_value <= 1; ++strip_value) {
        const NucleotideSeq& seq = (strip_value == 0) ? ref : cmp;
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<Control> controls;
            controls.push_back({layout.strip_qubit,
                                strip_value == 0 ? Polarity::Open : Polarity::Closed});
            for (int k = 0; k < n_index; ++k) {
                const bool bit = (i >> k) & 1u;
                controls.push_back(
                    {layout.index_qubits[k], bit ? Polarity::Closed : Polarity::Open});
            }
            circuit.mcry(std::move(controls), layout.dna_qubit, angle_of(seq.bases[i], map));
        }
    }

    circuit.h(layout.strip_qubit);
    circuit.measure(layout.strip_qubit, 0);
    return {std::move(circuit), std::move(layout)};
}

std::vector<Amplitude> sequence_state(const NucleotideSeq& seq, const AngleMap& map) {
    if (!is_power_of_two(seq.size())) {
        throw ValidationError("length must be a power of two (pad via scan)");
    }
    const std::size_t n = seq.size();
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    std::vector<Amplitude> state(2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        const double half = angle_of(seq.bases[i], map) / 2.0;
        state[i] = scale * std::cos(half);
        state[n + i] = scale * std::sin(half);
    }
    return state;
}

} // namespace strandsim
