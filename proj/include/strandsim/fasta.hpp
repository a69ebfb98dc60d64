#pragma once

#include "strandsim/encoding.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace strandsim {

/// One FASTA record: '>' header (id = first token, description = the rest)
/// followed by sequence lines.
struct FastaRecord {
    std::string id;
    std::string description;
    NucleotideSeq sequence;

    friend bool operator==(const FastaRecord&, const FastaRecord&) = default;
};

struct FastaOptions {
    /// Drop records that fail validation instead of throwing.
    bool skip_invalid = false;
};

/// Parses FASTA text. Sequence lines are concatenated, whitespace stripped,
/// and upcased before validation against the strict A/C/G/T alphabet. LF and
/// CRLF both work. Errors carry the record id, line number, and offending
/// character.
std::vector<FastaRecord> parse_fasta(std::string_view text, const FastaOptions& options = {});

/// Renders records back to FASTA text (60-column sequence lines). Parsing the
/// result reproduces the records exactly.
std::string write_fasta(std::span<const FastaRecord> records);

/// A fixed-size cut of a longer sequence. `length` counts real bases;
/// `bases` is padded with G up to `padded_length` (G's angle is zero, so pad
/// positions leave the dna qubit untouched and identical pads on both strips
/// are exactly correctable).
struct Window {
    std::size_t offset = 0;
    std::size_t length = 0;
    std::size_t padded_length = 0;
    NucleotideSeq bases;
};

/// Cuts windows starting at offsets 0, stride, 2*stride, ... until the
/// sequence is exhausted; a trailing partial window is G-padded to size.
/// window_size must be a power of two >= 2, and stride in [1, window_size]
/// so every base is covered.
std::vector<Window> windows(const NucleotideSeq& seq, std::size_t window_size,
                            std::size_t stride);

} // namespace strandsim
