// strandsim: pairwise DNA sequence comparison on a simulated quantum circuit.
//
// Subcommands:
//   compare   similarity of two sequences (exact probability or seeded shots)
//   scan      windowed comparison of two long sequences with flagging
//   lower     decompose ccx / mcry into the {u, cx} basis with counts
//   encode    dump the comparison circuit for two sequences
//
// Exit codes: 0 success; 1 scan found flagged windows; 2 bad input.

#include "strandsim/circuit_text.hpp"
#include "strandsim/comparison.hpp"
#include "strandsim/errors.hpp"
#include "strandsim/fasta.hpp"
#include "strandsim/lowering.hpp"
#include "strandsim/scan.hpp"
#include "strandsim/version.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

using json = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFlagged = 1;
constexpr int kExitError = 2;

std::string format_fixed(double value) {
    char buffer[40];
    std::snprintf(buffer, sizeof(buffer), "%.6f", value);
    if (std::string_view(buffer) == "-0.000000") {
        return "0.000000"; // a value that rounds to zero carries no sign worth showing
    }
    return buffer;
}

std::string format_deviation(double value) {
    char buffer[40];
    std::snprintf(buffer, sizeof(buffer), "%.3e", value);
    return buffer;
}

/// Seed precedence: --seed flag, then STRANDSIM_SEED, then 0.
std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
    if (flag) {
        return *flag;
    }
    if (const char* env = std::getenv("STRANDSIM_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw strandsim::ValidationError("STRANDSIM_SEED is not a valid unsigned integer: " +
                                             std::string(env));
        }
    }
    return 0;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw strandsim::ValidationError("cannot open file: " + path);
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

/// First record of a FASTA file, as the sequence to compare.
strandsim::NucleotideSeq load_fasta_sequence(const std::string& path, bool skip_invalid) {
    const auto records =
        strandsim::parse_fasta(read_file(path), strandsim::FastaOptions{skip_invalid});
    if (records.empty()) {
        throw strandsim::ValidationError("no usable records in " + path);
    }
    return records.front().sequence;
}

strandsim::NucleotideSeq resolve_sequence(const std::string& literal, const std::string& fasta,
                                          const std::string& name, bool skip_invalid) {
    if (!literal.empty()) {
        return strandsim::NucleotideSeq::from_string(name, literal);
    }
    return load_fasta_sequence(fasta, skip_invalid);
}

json envelope(const std::string& command, json parameters, json result) {
    json out;
    out["version"] = strandsim::kVersion;
    out["command"] = command;
    out["parameters"] = std::move(parameters);
    out["result"] = std::move(result);
    return out;
}

json histogram_to_json(const strandsim::Histogram& histogram) {
    json counts = json::object();
    for (const auto& [key, count] : histogram.counts) {
        counts[key] = count;
    }
    return counts;
}

void print_histogram(const strandsim::Histogram& histogram) {
    constexpr int kBarWidth = 40;
    std::uint64_t max_count = 1;
    for (const auto& [key, count] : histogram.counts) {
        max_count = std::max(max_count, count);
    }
    std::printf("counts (%llu shots):\n",
                static_cast<unsigned long long>(histogram.total_shots));
    for (const auto& [key, count] : histogram.counts) {
        const int bar = static_cast<int>((count * kBarWidth + max_count - 1) / max_count);
        const double percent =
            100.0 * static_cast<double>(count) / static_cast<double>(histogram.total_shots);
        std::printf("  %s %8llu |%-*s| %6.2f%%\n", key.c_str(),
                    static_cast<unsigned long long>(count), kBarWidth,
                    std::string(static_cast<std::size_t>(bar), '#').c_str(), percent);
    }
}

json report_to_json(const strandsim::WindowReport& r) {
    json out;
    out["window"] = r.window_index;
    out["offset"] = r.offset;
    out["real_length"] = r.real_length;
    out["pad_count"] = r.pad_count;
    out["p1"] = r.p1;
    out["sim_raw"] = r.sim_raw;
    out["sim_corrected"] = r.sim_corrected;
    out["flagged"] = r.flagged;
    if (r.seed_used) {
        out["seed_used"] = *r.seed_used;
    }
    return out;
}

struct CompareArgs {
    std::string seq1, seq2, fasta1, fasta2;
    std::uint64_t shots = 8000;
    bool exact = false;
    bool skip_invalid = false;
    std::optional<std::uint64_t> seed;
    std::string format = "text";
};

int run_compare(const CompareArgs& args) {
    const auto ref = resolve_sequence(args.seq1, args.fasta1, "seq1", args.skip_invalid);
    const auto cmp = resolve_sequence(args.seq2, args.fasta2, "seq2", args.skip_invalid);
    const strandsim::AngleMap map;

    strandsim::ComparisonResult result;
    json parameters;
    parameters["seq1"] = ref.letters();
    parameters["seq2"] = cmp.letters();
    if (args.exact) {
        result = strandsim::compare_exact(ref, cmp, map);
        parameters["exact"] = true;
    } else {
        const std::uint64_t seed = resolve_seed(args.seed);
        result = strandsim::compare_sampled(ref, cmp, map, args.shots, seed);
        parameters["shots"] = args.shots;
        parameters["seed"] = seed;
    }

    if (args.format == "json") {
        json payload;
        payload["method"] = args.exact ? "exact" : "sampled";
        payload["n_qubits"] = result.n_qubits;
        payload["p1"] = result.p1;
        payload["similarity"] = result.similarity;
        if (result.shots) {
            payload["shots"] = *result.shots;
        }
        if (result.seed) {
            payload["seed"] = *result.seed;
        }
        if (result.histogram) {
            payload["histogram"] = histogram_to_json(*result.histogram);
        }
        std::printf("%s\n", envelope("compare", parameters, payload).dump(2).c_str());
        return kExitOk;
    }

    std::printf("method: %s\n", args.exact ? "exact" : "sampled");
    std::printf("n_qubits: %d\n", result.n_qubits);
    if (result.shots) {
        std::printf("shots: %llu\n", static_cast<unsigned long long>(*result.shots));
        std::printf("seed: %llu\n", static_cast<unsigned long long>(*result.seed));
    }
    std::printf("p1: %s\n", format_fixed(result.p1).c_str());
    std::printf("similarity: %s\n", format_fixed(result.similarity).c_str());
    if (result.histogram) {
        print_histogram(*result.histogram);
    }
    return kExitOk;
}

struct ScanArgs {
    std::string fasta_a, fasta_b;
    std::size_t window = 4;
    std::optional<std::size_t> stride;
    std::optional<double> threshold;
    std::uint64_t shots = 8000;
    bool exact = false;
    bool skip_invalid = false;
    std::optional<std::uint64_t> seed;
    unsigned threads = 1;
    std::string out = "csv";
};

int run_scan(const ScanArgs& args) {
    const auto a = load_fasta_sequence(args.fasta_a, args.skip_invalid);
    const auto b = load_fasta_sequence(args.fasta_b, args.skip_invalid);

    strandsim::ScanOptions options;
    options.window_size = args.window;
    options.stride = args.stride.value_or(args.window);
    options.mode = args.exact ? strandsim::ScanMode::Exact : strandsim::ScanMode::Sampled;
    options.shots = args.shots;
    // Exact similarities are sharp, sampled ones carry shot noise; the default
    // flag threshold is looser in sampled mode so noise alone does not flag.
    options.threshold = args.threshold.value_or(args.exact ? 0.999 : 0.95);
    options.seed = resolve_seed(args.seed);
    options.threads = args.threads;

    const auto reports = strandsim::scan_sequences(a, b, options);
    bool any_flagged = false;
    for (const auto& r : reports) {
        any_flagged = any_flagged || r.flagged;
    }

    if (args.out == "json") {
        json parameters;
        parameters["fasta_a"] = args.fasta_a;
        parameters["fasta_b"] = args.fasta_b;
        parameters["window"] = options.window_size;
        parameters["stride"] = options.stride;
        parameters["mode"] = args.exact ? "exact" : "sampled";
        if (!args.exact) {
            parameters["shots"] = options.shots;
            parameters["seed"] = options.seed;
        }
        parameters["threshold"] = options.threshold;
        json payload = json::array();
        for (const auto& r : reports) {
            payload.push_back(report_to_json(r));
        }
        std::printf("%s\n", envelope("scan", parameters, payload).dump(2).c_str());
    } else {
        std::fputs(strandsim::reports_to_csv(reports).c_str(), stdout);
    }
    return any_flagged ? kExitFlagged : kExitOk;
}

struct LowerArgs {
    std::string gate;
    int controls = 3;
    double angle = 3.14159265358979323846;
    bool verify = false;
    std::string format = "text";
};

int run_lower(const LowerArgs& args) {
    strandsim::LoweringReport report;
    json parameters;
    parameters["gate"] = args.gate;
    if (args.gate == "ccx") {
        report = strandsim::lower_toffoli(0, 1, 2);
    } else if (args.gate == "mcry") {
        std::vector<strandsim::Control> controls;
        for (int i = 0; i < args.controls; ++i) {
            controls.push_back({i, strandsim::Polarity::Closed});
        }
        report = strandsim::lower_mcry(controls, args.controls, args.angle);
        parameters["controls"] = args.controls;
        parameters["angle"] = args.angle;
    } else {
        throw strandsim::UsageError("unsupported gate '" + args.gate + "' (use ccx or mcry)");
    }
    parameters["verify"] = args.verify;

    if (args.format == "json") {
        json payload;
        payload["circuit"] = strandsim::circuit_to_text(report.lowered);
        payload["single_qubit_gates"] = report.single_qubit_count;
        payload["cnot_gates"] = report.cnot_count;
        payload["depth"] = report.depth;
        if (args.verify && report.verified) {
            payload["equivalent"] = report.equivalent;
            payload["max_deviation"] = report.max_deviation;
        }
        std::printf("%s\n", envelope("lower", parameters, payload).dump(2).c_str());
        return kExitOk;
    }

    std::fputs(strandsim::circuit_to_text(report.lowered).c_str(), stdout);
    std::printf("single_qubit_gates: %d\n", report.single_qubit_count);
    std::printf("cnot_gates: %d\n", report.cnot_count);
    std::printf("depth: %d\n", report.depth);
    if (args.verify && report.verified) {
        std::printf("equivalent: %s\n", report.equivalent ? "true" : "false");
        std::printf("max_deviation: %s\n", format_deviation(report.max_deviation).c_str());
    }
    return kExitOk;
}

struct EncodeArgs {
    std::string seq1, seq2;
    bool lowered = false;
    std::string format = "circuit";
};

int run_encode(const EncodeArgs& args) {
    const auto ref = strandsim::NucleotideSeq::from_string("seq1", args.seq1);
    const auto cmp = strandsim::NucleotideSeq::from_string("seq2", args.seq2);
    const strandsim::AngleMap map;
    auto [circuit, layout] = strandsim::build_comparison_circuit(ref, cmp, map);

    strandsim::LoweringReport report;
    if (args.lowered) {
        report = strandsim::lower_circuit(circuit);
    }
    const strandsim::Circuit& shown = args.lowered ? report.lowered : circuit;

    if (args.format == "json") {
        json parameters;
        parameters["seq1"] = ref.letters();
        parameters["seq2"] = cmp.letters();
        parameters["lowered"] = args.lowered;
        json payload;
        payload["n_qubits"] = layout.n_qubits;
        payload["strip_qubit"] = layout.strip_qubit;
        payload["index_qubits"] = layout.index_qubits;
        payload["dna_qubit"] = layout.dna_qubit;
        payload["circuit"] = strandsim::circuit_to_text(shown);
        if (args.lowered) {
            payload["single_qubit_gates"] = report.single_qubit_count;
            payload["cnot_gates"] = report.cnot_count;
            payload["depth"] = report.depth;
        }
        std::printf("%s\n", envelope("encode", parameters, payload).dump(2).c_str());
        return kExitOk;
    }

    std::fputs(strandsim::circuit_to_text(shown).c_str(), stdout);
    if (args.lowered) {
        std::printf("single_qubit_gates: %d\n", report.single_qubit_count);
        std::printf("cnot_gates: %d\n", report.cnot_count);
        std::printf("depth: %d\n", report.depth);
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Pairwise DNA sequence comparison on a simulated quantum circuit"};
    app.set_version_flag("--version", strandsim::kVersion);
    app.require_subcommand(1);

    CompareArgs compare_args;
    CLI::App* compare = app.add_subcommand("compare", "Compare two sequences");
    auto* seq1 = compare->add_option("--seq1", compare_args.seq1, "First sequence (ACGT letters)");
    auto* fasta1 = compare->add_option("--fasta1", compare_args.fasta1,
                                       "FASTA file providing the first sequence");
    auto* seq2 = compare->add_option("--seq2", compare_args.seq2, "Second sequence");
    auto* fasta2 = compare->add_option("--fasta2", compare_args.fasta2,
                                       "FASTA file providing the second sequence");
    seq1->excludes(fasta1);
    seq2->excludes(fasta2);
    compare->add_option("--shots", compare_args.shots, "Measurement shots")
        ->default_val(8000)
        ->check(CLI::PositiveNumber);
    compare->add_flag("--exact", compare_args.exact, "Exact probability instead of shots");
    compare->add_option("--seed", compare_args.seed, "Sampling seed (default: STRANDSIM_SEED or 0)");
    compare->add_option("--format", compare_args.format, "Output format")
        ->check(CLI::IsMember({"json", "text"}))
        ->default_val("text");
    compare->add_flag("--skip-invalid", compare_args.skip_invalid,
                      "Drop FASTA records that fail validation");
    compare->callback([&] {
        if (compare_args.seq1.empty() && compare_args.fasta1.empty()) {
            throw strandsim::UsageError("give --seq1 or --fasta1");
        }
        if (compare_args.seq2.empty() && compare_args.fasta2.empty()) {
            throw strandsim::UsageError("give --seq2 or --fasta2");
        }
    });

    ScanArgs scan_args;
    CLI::App* scan = app.add_subcommand("scan", "Windowed comparison of two FASTA files");
    scan->add_option("--fasta-a", scan_args.fasta_a, "First FASTA file")->required();
    scan->add_option("--fasta-b", scan_args.fasta_b, "Second FASTA file")->required();
    scan->add_option("--window", scan_args.window, "Window size (power of two)")->default_val(4);
    scan->add_option("--stride", scan_args.stride, "Window stride (default: window size)");
    scan->add_option("--threshold", scan_args.threshold,
                     "Flag windows below this corrected similarity "
                     "(default 0.999 exact, 0.95 sampled)");
    scan->add_option("--shots", scan_args.shots, "Measurement shots per window")
        ->default_val(8000)
        ->check(CLI::PositiveNumber);
    scan->add_flag("--exact", scan_args.exact, "Exact probabilities instead of shots");
    scan->add_option("--seed", scan_args.seed, "Base sampling seed (default: STRANDSIM_SEED or 0)");
    scan->add_option("--threads", scan_args.threads, "Worker threads")->default_val(1);
    scan->add_option("--out", scan_args.out, "Output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->default_val("csv");
    scan->add_flag("--skip-invalid", scan_args.skip_invalid,
                   "Drop FASTA records that fail validation");

    LowerArgs lower_args;
    CLI::App* lower = app.add_subcommand("lower", "Decompose a gate into the {u, cx} basis");
    lower->add_option("--gate", lower_args.gate, "Gate to lower")
        ->required()
        ->check(CLI::IsMember({"ccx", "mcry"}));
    lower->add_option("--controls", lower_args.controls, "Control count (mcry)")
        ->default_val(3)
        ->check(CLI::Range(0, strandsim::kMaxMcryControls));
    lower->add_option("--angle", lower_args.angle, "Rotation angle in radians (mcry)");
    lower->add_flag("--verify", lower_args.verify, "Report unitary equivalence of the lowering");
    lower->add_option("--format", lower_args.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->default_val("text");

    EncodeArgs encode_args;
    CLI::App* encode = app.add_subcommand("encode", "Dump the comparison circuit");
    encode->add_option("--seq1", encode_args.seq1, "First sequence (ACGT letters)")->required();
    encode->add_option("--seq2", encode_args.seq2, "Second sequence")->required();
    encode->add_flag("--lowered", encode_args.lowered, "Lower to the {u, cx} basis first");
    encode->add_option("--format", encode_args.format, "Output format")
        ->check(CLI::IsMember({"circuit", "json"}))
        ->default_val("circuit");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitError;
    } catch (const strandsim::Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitError;
    }

    try {
        if (compare->parsed()) {
            return run_compare(compare_args);
        }
        if (scan->parsed()) {
            return run_scan(scan_args);
        }
        if (lower->parsed()) {
            return run_lower(lower_args);
        }
        if (encode->parsed()) {
            return run_encode(encode_args);
        }
    } catch (const strandsim::Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitError;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitError;
    }
    return kExitOk;
}
