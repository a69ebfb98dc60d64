#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

// Drives the installed binary end to end through a shell. STRANDSIM_CLI_PATH
// is injected by the build so the test always runs the freshly built tool.

namespace {

using json = nlohmann::json;

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run(const std::string& args, bool merge_stderr = true) {
    const std::string command =
        std::string(STRANDSIM_CLI_PATH) + " " + args + (merge_stderr ? " 2>&1" : " 2>/dev/null");
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult result;
    std::array<char, 4096> buffer;
    std::size_t n = 0;
    while ((n = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
        result.output.append(buffer.data(), n);
    }
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

RunResult run_with_env(const std::string& env, const std::string& args) {
    FILE* pipe = popen((env + " " + std::string(STRANDSIM_CLI_PATH) + " " + args + " 2>&1").c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult result;
    std::array<char, 4096> buffer;
    std::size_t n = 0;
    while ((n = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
        result.output.append(buffer.data(), n);
    }
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

class TempFasta {
public:
    TempFasta(const std::string& stem, const std::string& content) {
        path_ = std::filesystem::temp_directory_path() /
                ("strandsim_test_" + stem + "_" + std::to_string(::getpid()) + ".fa");
        std::ofstream out(path_);
        out << content;
    }
    ~TempFasta() {
        std::error_code ec;
        std::filesystem::remove(path_, ec);
    }
    std::string path() const { return path_.string(); }

private:
    std::filesystem::path path_;
};

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

} // namespace

TEST_CASE("version flag") {
    const RunResult r = run("--version");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "0.1.0"));
}

TEST_CASE("compare exact prints the closed-form values") {
    const RunResult r = run("compare --seq1 AAAA --seq2 TTTT --exact");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "method: exact"));
    CHECK(contains(r.output, "n_qubits: 4"));
    CHECK(contains(r.output, "p1: 0.370590"));
    CHECK(contains(r.output, "similarity: 0.258819"));
}

TEST_CASE("compare exact of fully dissimilar sequences is zero") {
    const RunResult r = run("compare --seq1 AAAA --seq2 GGGG --exact");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "p1: 0.500000"));
    CHECK(contains(r.output, "similarity: 0.000000"));
}

TEST_CASE("sampled compare of identical sequences is certain") {
    const RunResult r = run("compare --seq1 AAAA --seq2 AAAA --shots 100 --seed 7 --format json");
    CHECK(r.exit_code == 0);
    const json out = json::parse(r.output);
    CHECK(out["version"] == "0.1.0");
    CHECK(out["command"] == "compare");
    CHECK(out["parameters"]["seq1"] == "AAAA");
    CHECK(out["parameters"]["shots"] == 100);
    CHECK(out["parameters"]["seed"] == 7);
    CHECK(out["result"]["method"] == "sampled");
    CHECK(out["result"]["p1"] == 0.0);
    CHECK(out["result"]["similarity"] == 1.0);
    CHECK(out["result"]["histogram"]["0"] == 100);
    CHECK(out["result"]["histogram"].size() == 1);
}

TEST_CASE("text histogram shows up in sampled mode") {
    const RunResult r = run("compare --seq1 AAAA --seq2 TTTT --shots 500 --seed 3");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "shots: 500"));
    CHECK(contains(r.output, "seed: 3"));
    CHECK(contains(r.output, "counts (500 shots):"));
    CHECK(contains(r.output, "#"));
}

TEST_CASE("text and JSON agree to the printed precision") {
    const RunResult text = run("compare --seq1 ACGT --seq2 AGGT --shots 2000 --seed 11");
    const RunResult js = run("compare --seq1 ACGT --seq2 AGGT --shots 2000 --seed 11 --format json");
    REQUIRE(text.exit_code == 0);
    REQUIRE(js.exit_code == 0);
    const json out = json::parse(js.output);
    char line[64];
    std::snprintf(line, sizeof(line), "p1: %.6f", out["result"]["p1"].get<double>());
    CHECK(contains(text.output, line));
    std::snprintf(line, sizeof(line), "similarity: %.6f",
                  out["result"]["similarity"].get<double>());
    CHECK(contains(text.output, line));
}

TEST_CASE("explicit seed and STRANDSIM_SEED give identical runs") {
    const RunResult flagged = run("compare --seq1 ACGT --seq2 TTGT --shots 1000 --seed 123 --format json");
    const RunResult via_env =
        run_with_env("STRANDSIM_SEED=123", "compare --seq1 ACGT --seq2 TTGT --shots 1000 --format json");
    REQUIRE(flagged.exit_code == 0);
    REQUIRE(via_env.exit_code == 0);
    CHECK(json::parse(flagged.output) == json::parse(via_env.output));
}

TEST_CASE("compare rejects bad sequences with exit 2") {
    const RunResult r = run("compare --seq1 AXGT --seq2 AAAA --exact");
    CHECK(r.exit_code == 2);
    CHECK(contains(r.output, "invalid character"));
}

TEST_CASE("compare requires both sequences") {
    const RunResult r = run("compare --seq1 AAAA --exact");
    CHECK(r.exit_code == 2);
}

TEST_CASE("compare reads FASTA files") {
    TempFasta a("cmp_a", ">a\nAAAA\n");
    TempFasta b("cmp_b", ">b\nTTTT\n");
    const RunResult r =
        run("compare --fasta1 " + a.path() + " --fasta2 " + b.path() + " --exact");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "p1: 0.370590"));
}

TEST_CASE("encode dumps the golden circuit") {
    const RunResult r = run("encode --seq1 AAAA --seq2 TTTT");
    CHECK(r.exit_code == 0);
    const std::string want = "qubits 4\n"
                             "cbits 1\n"
                             "label 0 strip0\n"
                             "label 1 idx0\n"
                             "label 2 idx1\n"
                             "label 3 dna0\n"
                             "h q[0]\n"
                             "h q[1]\n"
                             "h q[2]\n"
                             "mcry(3.141593) [0-,1-,2-],q[3]\n"
                             "mcry(3.141593) [0-,1+,2-],q[3]\n"
                             "mcry(3.141593) [0-,1-,2+],q[3]\n"
                             "mcry(3.141593) [0-,1+,2+],q[3]\n"
                             "mcry(0.523599) [0+,1-,2-],q[3]\n"
                             "mcry(0.523599) [0+,1+,2-],q[3]\n"
                             "mcry(0.523599) [0+,1-,2+],q[3]\n"
                             "mcry(0.523599) [0+,1+,2+],q[3]\n"
                             "h q[0]\n"
                             "measure q[0] -> c[0]\n";
    CHECK(r.output == want);
}

TEST_CASE("encode of a single base pair uses two qubits") {
    const RunResult r = run("encode --seq1 A --seq2 A");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "qubits 2"));
    CHECK(contains(r.output, "mcry(3.141593) [0-],q[1]"));
}

TEST_CASE("encode rejects non-power-of-two lengths with exit 2") {
    const RunResult r = run("encode --seq1 AAA --seq2 TTT");
    CHECK(r.exit_code == 2);
    CHECK(contains(r.output, "power of two"));
}

TEST_CASE("encode --lowered emits only basis gates plus counts") {
    const RunResult r = run("encode --seq1 AA --seq2 TT --lowered");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "single_qubit_gates:"));
    CHECK(contains(r.output, "cnot_gates:"));
    CHECK(contains(r.output, "depth:"));
    CHECK_FALSE(contains(r.output, "mcry"));
    CHECK_FALSE(contains(r.output, "\nh "));
    CHECK(contains(r.output, "measure q[0] -> c[0]"));
}

TEST_CASE("lower ccx reports the canonical resource counts") {
    const RunResult r = run("lower --gate ccx");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "single_qubit_gates: 9"));
    CHECK(contains(r.output, "cnot_gates: 6"));
    CHECK(contains(r.output, "depth: 11"));
}

TEST_CASE("lower mcry with zero controls is one u gate") {
    const RunResult r = run("lower --gate mcry --controls 0 --angle 1.0472");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "u(1.047200,0,0) q[0]"));
    CHECK(contains(r.output, "single_qubit_gates: 1"));
    CHECK(contains(r.output, "cnot_gates: 0"));
}

TEST_CASE("lower mcry --verify confirms equivalence") {
    const RunResult r = run("lower --gate mcry --controls 3 --angle 3.141593 --verify");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "equivalent: true"));
    CHECK(contains(r.output, "max_deviation:"));
}

TEST_CASE("lower json output carries the counts") {
    const RunResult r = run("lower --gate ccx --verify --format json");
    CHECK(r.exit_code == 0);
    const json out = json::parse(r.output);
    CHECK(out["result"]["single_qubit_gates"] == 9);
    CHECK(out["result"]["cnot_gates"] == 6);
    CHECK(out["result"]["depth"] == 11);
    CHECK(out["result"]["equivalent"] == true);
    CHECK(out["result"]["max_deviation"].get<double>() <= 1e-10);
}

TEST_CASE("lower rejects out-of-range control counts") {
    const RunResult r = run("lower --gate mcry --controls 7 --angle 1.0");
    CHECK(r.exit_code == 2);
}

TEST_CASE("scan of identical files exits 0 with no flags") {
    TempFasta a("scan_a", ">a\nACGTACGTACGTACGT\n");
    TempFasta b("scan_b", ">b\nACGTACGTACGTACGT\n");
    const RunResult r =
        run("scan --fasta-a " + a.path() + " --fasta-b " + b.path() + " --exact");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "window,offset,real_length,pad_count,p1,sim_raw,sim_corrected,flagged"));
    CHECK_FALSE(contains(r.output, "true"));
}

TEST_CASE("scan flags a substitution and exits 1") {
    TempFasta a("scan_c", ">a\nACGTACGT\n");
    TempFasta b("scan_d", ">b\nACGTACGG\n");
    const RunResult r =
        run("scan --fasta-a " + a.path() + " --fasta-b " + b.path() + " --exact");
    CHECK(r.exit_code == 1);
    // Exactly one flagged row.
    std::size_t flags = 0;
    std::size_t pos = 0;
    while ((pos = r.output.find("true", pos)) != std::string::npos) {
        ++flags;
        pos += 4;
    }
    CHECK(flags == 1);
    CHECK(contains(r.output, "0,0,4,0,"));
    CHECK(contains(r.output, "1,4,4,0,"));
}

TEST_CASE("scan json output is an array of reports") {
    TempFasta a("scan_e", ">a\nACGTACGT\n");
    TempFasta b("scan_f", ">b\nACGTACGG\n");
    const RunResult r = run("scan --fasta-a " + a.path() + " --fasta-b " + b.path() +
                            " --exact --out json");
    CHECK(r.exit_code == 1);
    const json out = json::parse(r.output);
    CHECK(out["command"] == "scan");
    REQUIRE(out["result"].size() == 2);
    CHECK(out["result"][0]["flagged"] == false);
    CHECK(out["result"][1]["flagged"] == true);
    CHECK(out["result"][1]["window"] == 1);
    CHECK(out["result"][1]["sim_corrected"].get<double>() ==
          doctest::Approx(0.991481456572267));
}

TEST_CASE("scan sampled mode is reproducible via the seed echo") {
    TempFasta a("scan_g", ">a\nACGTACGTACGTACGT\n");
    TempFasta b("scan_h", ">b\nACCTACGTACGAACGT\n");
    const std::string args = "scan --fasta-a " + a.path() + " --fasta-b " + b.path() +
                             " --shots 1000 --seed 5 --out json";
    const RunResult first = run(args);
    const RunResult second = run(args);
    CHECK(first.output == second.output);
    const json out = json::parse(first.output);
    for (const auto& report : out["result"]) {
        CHECK(report.contains("seed_used"));
    }
}

TEST_CASE("scan rejects mismatched lengths with exit 2") {
    TempFasta a("scan_i", ">a\nACGTACGT\n");
    TempFasta b("scan_j", ">b\nACGT\n");
    const RunResult r =
        run("scan --fasta-a " + a.path() + " --fasta-b " + b.path() + " --exact");
    CHECK(r.exit_code == 2);
    CHECK(contains(r.output, "lengths differ"));
}

TEST_CASE("unknown flags exit 2") {
    const RunResult r = run("compare --seq1 AAAA --seq2 AAAA --frobnicate");
    CHECK(r.exit_code == 2);
}
