#include "strandsim/scan.hpp"

#include "strandsim/errors.hpp"
#include "strandsim/sampling.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <thread>

namespace strandsim {

double padding_corrected_similarity(double sim_raw, std::size_t padded_length,
                                    std::size_t pad_count) {
    if (pad_count >= padded_length) {
        throw UsageError("pad count " + std::to_string(pad_count) +
                         " must be smaller than the padded length " +
                         std::to_string(padded_length));
    }
    const double padded = static_cast<double>(padded_length);
    const double real = static_cast<double>(padded_length - pad_count);
    return (padded * sim_raw - static_cast<double>(pad_count)) / real;
}

std::vector<WindowReport> scan_sequences(const NucleotideSeq& a, const NucleotideSeq& b,
                                         const ScanOptions& options) {
    if (a.size() != b.size()) {
        throw ValidationError("sequence lengths differ: " + std::to_string(a.size()) + " vs " +
                              std::to_string(b.size()));
    }
    if (!(options.threshold >= 0.0 && options.threshold <= 1.0)) {
        throw UsageError("threshold must lie in [0, 1]");
    }
    if (options.mode == ScanMode::Sampled && options.shots == 0) {
        throw UsageError("sampled mode needs at least one shot");
    }

    const std::vector<Window> wa = windows(a, options.window_size, options.stride);
    const std::vector<Window> wb = windows(b, options.window_size, options.stride);

    std::vector<WindowReport> reports(wa.size());
    const auto run_window = [&](std::size_t w) {
        const Window& win_a = wa[w];
        const Window& win_b = wb[w];
        WindowReport& report = reports[w];
        report.window_index = w;
        report.offset = win_a.offset;
        report.real_length = win_a.length;
        report.pad_count = win_a.padded_length - win_a.length;

        ComparisonResult cmp;
        if (options.mode == ScanMode::Exact) {
            cmp = compare_exact(win_a.bases, win_b.bases, options.map);
        } else {
            const std::uint64_t window_seed = mix_seed(options.seed, w);
            cmp = compare_sampled(win_a.bases, win_b.bases, options.map, options.shots,
                                  window_seed);
            report.seed_used = window_seed;
        }
        report.p1 = cmp.p1;
        report.sim_raw = cmp.similarity;
        report.sim_corrected =
            padding_corrected_similarity(report.sim_raw, win_a.padded_length, report.pad_count);
        report.flagged = report.sim_corrected < options.threshold;
    };

    const unsigned threads = std::max(1u, options.threads);
    if (threads == 1 || reports.size() <= 1) {
        for (std::size_t w = 0; w < reports.size(); ++w) {
            run_window(w);
        }
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        const unsigned n_workers = std::min<unsigned>(threads, reports.size());
        pool.reserve(n_workers);
        for (unsigned t = 0; t < n_workers; ++t) {
            pool.emplace_back([&] {
                for (std::size_t w = next.fetch_add(1); w < reports.size();
                     w = next.fetch_add(1)) {
                    run_window(w);
                }
            });
        }
        for (std::thread& t : pool) {
            t.join();
        }
    }
    return reports;
}

std::string reports_to_csv(std::span<const WindowReport> reports) {
    std::string out = "window,offset,real_length,pad_count,p1,sim_raw,sim_corrected,flagged\n";
    char buffer[160];
    for (const WindowReport& r : reports) {
        std::snprintf(buffer, sizeof(buffer), "%zu,%zu,%zu,%zu,%.6f,%.6f,%.6f,%s\n",
                      r.window_index, r.offset, r.real_length, r.pad_count, r.p1, r.sim_raw,
                      r.sim_corrected, r.flagged ? "true" : "false");
        out += buffer;
    }
    return out;
}

} // namespace strandsim
