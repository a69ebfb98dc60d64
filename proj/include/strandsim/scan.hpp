#pragma once

#include "strandsim/comparison.hpp"
#include "strandsim/fasta.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace strandsim {

enum class ScanMode { Exact, Sampled };

struct ScanOptions {
    std::size_t window_size = 4;
    std::size_t stride = 4;
    ScanMode mode = ScanMode::Exact;
    std::uint64_t shots = 8000;     // sampled mode only
    double threshold = 0.999;
    std::uint64_t seed = 0;
    unsigned threads = 1;           // windows are independent work items
    AngleMap map;
};

/// One window's comparison outcome. sim_corrected removes the padding
/// contribution: (padded_length*sim_raw - pad_count) / real_length.
struct WindowReport {
    std::size_t window_index = 0;
    std::size_t offset = 0;
    std::size_t real_length = 0;
    std::size_t pad_count = 0;
    double p1 = 0.0;
    double sim_raw = 0.0;
    double sim_corrected = 0.0;
    bool flagged = false;
    std::optional<std::uint64_t> seed_used; // sampled mode only
};

/// Undoes G-padding: each pad position is identical on both strips and
/// contributes cos(0) = 1 to the similarity average, so the unpadded value is
/// (padded_length*sim_raw - pad_count) / (padded_length - pad_count).
double padding_corrected_similarity(double sim_raw, std::size_t padded_length,
                                    std::size_t pad_count);

/// Slides paired windows over two equal-length sequences and compares each
/// pair, flagging windows whose corrected similarity drops below the
/// threshold. Sampled mode derives the per-window seed as
/// mix_seed(options.seed, window_index), so reports are identical whatever
/// the thread count or execution order. Reports are ordered by window_index.
std::vector<WindowReport> scan_sequences(const NucleotideSeq& a, const NucleotideSeq& b,
                                         const ScanOptions& options);

/// CSV rendering with header
/// `window,offset,real_length,pad_count,p1,sim_raw,sim_corrected,flagged`.
std::string reports_to_csv(std::span<const WindowReport> reports);

} // namespace strandsim
