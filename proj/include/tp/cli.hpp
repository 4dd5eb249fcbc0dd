#ifndef TP_CLI_HPP
#define TP_CLI_HPP

/**
 * @file cli.hpp
 * @brief Batch command surface behind the tprop tool.
 *
 * Every command resolves its options into a plain struct, renders
 * machine-readable CSV/TSV plus a human summary, and writes a manifest
 * (key-value text) recording the resolved configuration, input digests,
 * and the exact argument vector so the run can be replayed bit-for-bit.
 *
 * Exit codes: 0 success, 2 input/validation error, 3 non-convergence
 * (cluster, unless --allow-nonconverged), 4 internal invariant breach.
 */

#include <cstdint>
#include <string>
#include <vector>

#include "tp/solver.hpp"

namespace tp::cli {

inline constexpr const char* kToolName = "tprop";
inline constexpr const char* kToolVersion = "1.0.0";

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 2;
inline constexpr int kExitNonConverged = 3;
inline constexpr int kExitInternal = 4;

/// Shortest-round-trip decimal rendering; the single formatter every
/// CSV writer uses, so identical runs emit identical bytes.
std::string format_double(double v);

/// FNV-1a 64-bit digest of a file's bytes, hex-encoded.
std::string file_digest(const std::string& path);

struct ClusterOptions {
    std::string scores_path;  // exactly one of scores/reads
    std::string reads_path;
    double error_rate = 0.0;  // required with reads
    bool csv_header = false;
    bool allow_nonconverged = false;
    std::string out_prefix = "cluster";
    SolverConfig solver;
};

struct SimulateOptions {
    int template_count = 1;
    int word_length = 30;
    int read_count = 1;
    double error_rate = 0.0;
    std::uint64_t seed = 0;
    std::string out_prefix = "sim";
};

struct Fig4Options {
    std::vector<int> template_counts{10};
    std::vector<double> error_rates{0.01, 0.05};
    int word_length = 30;
    int reads_per_template = 10;
    int sims = 20;
    std::uint64_t seed = 0;
    int threads = 1;
    std::string out_path = "fig4.csv";
    SolverConfig solver;
};

struct Fig5Options {
    int template_count = 20;
    int word_length = 30;
    int read_count = 100;
    std::vector<double> error_rates{0.10};
    int sims = 20;
    std::uint64_t seed = 0;
    int threads = 1;
    std::string out_path = "fig5.csv";
    SolverConfig solver;
};

struct PriorOptions {
    std::string mode = "blue-fraction";  // zfun | blue-fraction | cluster-moments | critical-x
    std::vector<double> x_values{1.0};
    std::vector<int> point_counts{10};
    std::string out_path = "prior.csv";
};

// CSV renderers; pure given the options, used directly by determinism
// tests. The cmd_* wrappers add file output and manifests.
std::string render_fig4_csv(const Fig4Options& opts);
std::string render_fig5_csv(const Fig5Options& opts);
std::string render_prior_csv(const PriorOptions& opts);

int cmd_cluster(const ClusterOptions& opts, const std::vector<std::string>& argv);
int cmd_simulate(const SimulateOptions& opts, const std::vector<std::string>& argv);
int cmd_experiment_fig4(const Fig4Options& opts, const std::vector<std::string>& argv);
int cmd_experiment_fig5(const Fig5Options& opts, const std::vector<std::string>& argv);
int cmd_prior(const PriorOptions& opts, const std::vector<std::string>& argv);

/// Reads the "args" line of a manifest and re-runs the recorded command.
int cmd_replay(const std::string& manifest_path);

/// Full argument parsing + dispatch (what main() calls).
int run_cli(const std::vector<std::string>& args);
int run_cli(int argc, char** argv);

}  // namespace tp::cli

#endif  // TP_CLI_HPP
