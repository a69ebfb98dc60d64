#include "strandsim/fasta.hpp"

#include "strandsim/errors.hpp"

#include <bit>
#include <cctype>
#include <optional>

namespace strandsim {

namespace {

struct RawRecord {
    std::string id;
    std::string description;
    std::string letters;
    std::size_t header_line = 0;
    std::size_t bad_line = 0;   // line of the first invalid character, if any
    std::size_t bad_column = 0; // 1-based column of that character
    char bad_char = '\0';
};

std::optional<FastaRecord> finish_record(RawRecord&& raw, const FastaOptions& options) {
    const auto fail = [&](const std::string& message) -> std::optional<FastaRecord> {
        if (options.skip_invalid) {
            return std::nullopt;
        }
        throw ValidationError(message);
    };
    if (raw.bad_char != '\0') {
        return fail("record '" + raw.id + "': invalid character '" +
                    std::string(1, raw.bad_char) + "' at line " + std::to_string(raw.bad_line) +
                    ", column " + std::to_string(raw.bad_column));
    }
    if (raw.letters.empty()) {
        return fail("record '" + raw.id + "' (line " + std::to_string(raw.header_line) +
                    ") has no sequence data");
    }
    FastaRecord record;
    record.id = raw.id;
    record.description = raw.description;
    record.sequence = NucleotideSeq::from_string(raw.id, raw.letters);
    return record;
}

bool valid_base(char c) {
    switch (c) {
    case 'A':
    case 'C':
    case 'G':
    case 'T':
        return true;
    default:
        return false;
    }
}

} // namespace

std::vector<FastaRecord> parse_fasta(std::string_view text, const FastaOptions& options) {
    std::vector<FastaRecord> records;
    std::optional<RawRecord> current;
    std::size_t line_no = 0;

    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t eol = text.find('\n', pos);
        std::string_view line = (eol == std::string_view::npos) ? text.substr(pos)
                                                                : text.substr(pos, eol - pos);
        pos = (eol == std::string_view::npos) ? text.size() + 1 : eol + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.remove_suffix(1);
        }
        if (line.empty() && pos > text.size()) {
            break;
        }

        if (!line.empty() && line[0] == '>') {
            if (current) {
                if (auto record = finish_record(std::move(*current), options)) {
                    records.push_back(std::move(*record));
                }
            }
            std::string_view header = line.substr(1);
            const std::size_t id_begin = header.find_first_not_of(" \t");
            if (id_begin == std::string_view::npos) {
                throw FormatError("header at line " + std::to_string(line_no) + " has no id");
            }
            const std::size_t id_end = header.find_first_of(" \t", id_begin);
            RawRecord raw;
            raw.header_line = line_no;
            raw.id = std::string(header.substr(id_begin, id_end - id_begin));
            if (id_end != std::string_view::npos) {
                const std::size_t desc_begin = header.find_first_not_of(" \t", id_end);
                if (desc_begin != std::string_view::npos) {
                    raw.description = std::string(header.substr(desc_begin));
                }
            }
            current = std::move(raw);
            continue;
        }

        bool blank = true;
        for (char c : line) {
            if (!std::isspace(static_cast<unsigned char>(c))) {
                blank = false;
                break;
            }
        }
        if (blank) {
            continue;
        }
        if (!current) {
            throw FormatError("sequence data before the first '>' header at line " +
                              std::to_string(line_no));
        }
        for (std::size_t col = 0; col < line.size(); ++col) {
            const char c = line[col];
            if (std::isspace(static_cast<unsigned char>(c))) {
                continue;
            }
            const char up = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
            if (!valid_base(up) && current->bad_char == '\0') {
                current->bad_char = c;
                current->bad_line = line_no;
                current->bad_column = col + 1;
            }
            current->letters.push_back(up);
        }
    }

    if (current) {
        if (auto record = finish_record(std::move(*current), options)) {
            records.push_back(std::move(*record));
        }
    }
    return records;
}

std::string write_fasta(std::span<const FastaRecord> records) {
    constexpr std::size_t kLineWidth = 60;
    std::string out;
    for (const FastaRecord& record : records) {
        out.push_back('>');
        out += record.id;
        if (!record.description.empty()) {
            out.push_back(' ');
            out += record.description;
        }
        out.push_back('\n');
        const std::string letters = record.sequence.letters();
        for (std::size_t i = 0; i < letters.size(); i += kLineWidth) {
            out += letters.substr(i, kLineWidth);
            out.push_back('\n');
        }
    }
    return out;
}

std::vector<Window> windows(const NucleotideSeq& seq, std::size_t window_size,
                            std::size_t stride) {
    if (window_size < 2 || !std::has_single_bit(window_size)) {
        throw UsageError("window size must be a power of two >= 2, got " +
                         std::to_string(window_size));
    }
    if (stride < 1 || stride > window_size) {
        throw UsageError("stride must lie in [1, window size] so every base is covered, got " +
                         std::to_string(stride));
    }

    std::vector<Window> result;
    for (std::size_t offset = 0; offset < seq.size(); offset += stride) {
        Window w;
        w.offset = offset;
        w.length = std::min(window_size, seq.size() - offset);
        w.padded_length = window_size;
        w.bases.id = seq.id + ":" + std::to_string(offset);
        w.bases.bases.assign(seq.bases.begin() + static_cast<std::ptrdiff_t>(offset),
                             seq.bases.begin() + static_cast<std::ptrdiff_t>(offset + w.length));
        w.bases.bases.resize(window_size, Nucleotide::G);
        result.push_back(std::move(w));
    }
    return result;
}

} // namespace strandsim
