#include "tp/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "tp/models.hpp"
#include "tp/oracle.hpp"
#include "tp/parallel.hpp"
#include "tp/prior.hpp"
#include "tp/simulator.hpp"

namespace tp::cli {

namespace {

std::string join_args(const std::vector<std::string>& argv) {
    std::string out;
    for (std::size_t i = 0; i < argv.size(); ++i) {
        if (i) out += '\t';
        out += argv[i];
    }
    return out;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot write file: " + path);
    out << content;
    if (!out) throw std::runtime_error("write failed: " + path);
}

using KeyValues = std::vector<std::pair<std::string, std::string>>;

std::string render_manifest(const std::string& subcommand, const std::vector<std::string>& argv,
                            const KeyValues& kv, const std::vector<std::string>& inputs) {
    std::ostringstream out;
    out << "tool = " << kToolName << '\n';
    out << "version = " << kToolVersion << '\n';
    out << "subcommand = " << subcommand << '\n';
    out << "args = " << join_args(argv) << '\n';
    for (const auto& [key, value] : kv) out << key << " = " << value << '\n';
    for (const auto& path : inputs)
        out << "input." << path << " = fnv1a64:" << file_digest(path) << '\n';
    return out.str();
}

std::string fmt_u64(std::uint64_t v) { return std::to_string(v); }

template <typename T>
std::string join_list(const std::vector<T>& values, const std::function<std::string(T)>& fmt) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ',';
        out += fmt(values[i]);
    }
    return out;
}

std::string join_doubles(const std::vector<double>& v) {
    return join_list<double>(v, [](double d) { return format_double(d); });
}

std::string join_ints(const std::vector<int>& v) {
    return join_list<int>(v, [](int i) { return std::to_string(i); });
}

/// Per-bit error rate used for scoring; a tiny floor keeps the p_e = 0
/// grid cells well defined (identical reads cluster, all else separates).
double scoring_error_rate(double p_e) { return p_e < 1e-9 ? 1e-6 : p_e; }

int guarded(const std::function<int()>& body) {
    try {
        return body();
    } catch (const std::invalid_argument& e) {
        std::cerr << kToolName << ": error: " << e.what() << '\n';
        return kExitInput;
    } catch (const std::logic_error& e) {
        std::cerr << kToolName << ": internal invariant breach: " << e.what() << '\n';
        return kExitInternal;
    } catch (const std::exception& e) {
        std::cerr << kToolName << ": error: " << e.what() << '\n';
        return kExitInput;
    }
}

KeyValues solver_kv(const SolverConfig& cfg) {
    return {{"lambda", format_double(cfg.lambda)},
            {"convergence_goal", std::to_string(cfg.convergence_goal)},
            {"max_iterations", std::to_string(cfg.max_iterations)},
            {"threads", std::to_string(cfg.threads)},
            {"f32", cfg.use_float32 ? "true" : "false"}};
}

}  // namespace

std::string format_double(double v) {
    char buf[40];
    for (int precision = 1; precision <= 17; ++precision) {
        std::snprintf(buf, sizeof buf, "%.*g", precision, v);
        if (std::strtod(buf, nullptr) == v) break;
    }
    return buf;
}

std::string file_digest(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open file for digest: " + path);
    std::uint64_t hash = 14695981039346656037ull;
    char chunk[4096];
    while (in.read(chunk, sizeof chunk) || in.gcount() > 0) {
        for (std::streamsize i = 0; i < in.gcount(); ++i) {
            hash ^= static_cast<unsigned char>(chunk[i]);
            hash *= 1099511628211ull;
        }
        if (!in) break;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash));
    return buf;
}

int cmd_cluster(const ClusterOptions& opts, const std::vector<std::string>& argv) {
    return guarded([&]() -> int {
        if (opts.scores_path.empty() == opts.reads_path.empty())
            throw std::invalid_argument("cluster: provide exactly one of --scores / --reads");
        std::vector<std::string> inputs;
        ScoreMatrix scores(1);
        if (!opts.scores_path.empty()) {
            scores = load_score_matrix(opts.scores_path, opts.csv_header);
            inputs.push_back(opts.scores_path);
        } else {
            ReadSet reads = ReadSet::load(opts.reads_path);
            if (reads.empty()) throw std::invalid_argument(opts.reads_path + ": no data points");
            scores = score_matrix_from_reads(BinaryReadModel(reads.length(), opts.error_rate), reads);
            inputs.push_back(opts.reads_path);
        }

        auto t0 = std::chrono::steady_clock::now();
        SolverResult result = solve(scores, opts.solver);
        auto wall = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - t0).count();

        std::ostringstream partitionOut;
        std::vector<int> labels = result.partition.labels();
        for (int i = 0; i < result.partition.n; ++i)
            partitionOut << i << '\t' << labels[i] << '\n';

        std::ostringstream summary;
        summary << "points = " << scores.size() << '\n'
                << "clusters = " << result.partition.block_count() << '\n'
                << "iterations = " << result.iterations << '\n'
                << "converged = " << (result.converged ? "true" : "false") << '\n'
                << "fast_path = " << (result.fast_path ? "true" : "false") << '\n'
                << "violations = " << result.violations.count() << '\n'
                << "objective = "
                << (result.objective_value ? format_double(*result.objective_value) : "-inf") << '\n'
                << "repaired_objective = " << format_double(result.repaired_objective) << '\n'
                << "min_abs_b = " << format_double(result.min_abs_b) << '\n'
                << "wall_time_ms = " << format_double(wall) << '\n';

        KeyValues kv = solver_kv(opts.solver);
        kv.emplace_back("input_kind", opts.scores_path.empty() ? "reads" : "scores");
        if (!opts.reads_path.empty())
            kv.emplace_back("error_rate", format_double(opts.error_rate));

        write_file(opts.out_prefix + ".partition.tsv", partitionOut.str());
        write_file(opts.out_prefix + ".summary.txt", summary.str());
        write_file(opts.out_prefix + ".manifest", render_manifest("cluster", argv, kv, inputs));

        std::cout << "clusters: " << result.partition.block_count()
                  << "  iterations: " << result.iterations
                  << "  converged: " << (result.converged ? "yes" : "no")
                  << "  violations: " << result.violations.count() << '\n';

        if (!result.converged && !opts.allow_nonconverged) {
            std::cerr << kToolName << ": did not converge within "
                      << opts.solver.max_iterations
                      << " iterations (use --allow-nonconverged to accept)\n";
            return kExitNonConverged;
        }
        return kExitOk;
    });
}

int cmd_simulate(const SimulateOptions& opts, const std::vector<std::string>& argv) {
    return guarded([&]() -> int {
        SimConfig cfg{opts.template_count, opts.word_length, opts.read_count,
                      opts.error_rate, opts.seed};
        SimDataset data = simulate(cfg);

        std::ostringstream readsOut;
        readsOut << "# " << kToolName << " simulate reads v1\n";
        write_reads(readsOut, data.reads);
        std::ostringstream truthOut;
        write_truth(truthOut, data.read_template);

        KeyValues kv{{"templates", std::to_string(opts.template_count)},
                     {"word_length", std::to_string(opts.word_length)},
                     {"reads", std::to_string(opts.read_count)},
                     {"error_rate", format_double(opts.error_rate)},
                     {"seed", fmt_u64(opts.seed)},
                     {"sampled_templates", std::to_string(data.sampled_templates)}};

        write_file(opts.out_prefix + ".reads.txt", readsOut.str());
        write_file(opts.out_prefix + ".truth.tsv", truthOut.str());
        write_file(opts.out_prefix + ".manifest", render_manifest("simulate", argv, kv, {}));

        std::cout << "wrote " << opts.read_count << " reads from "
                  << data.sampled_templates << " sampled templates\n";
        return kExitOk;
    });
}

namespace {

struct Fig4Cell {
    int templates;
    double p_e;
    int sim;
    std::uint64_t seed;
    int sampled = 0;
    int recovered = 0;
    long misclassified = 0;
    int iterations = 0;
    bool converged = false;
};

void run_fig4_cell(Fig4Cell& cell, const Fig4Options& opts) {
    SimConfig sim{cell.templates, opts.word_length,
                  cell.templates * opts.reads_per_template, cell.p_e, cell.seed};
    SimDataset data = simulate(sim);
    BinaryReadModel model(opts.word_length, scoring_error_rate(cell.p_e));
    ScoreMatrix scores = score_matrix_from_reads(model, data.reads);
    SolverResult result = solve(scores, opts.solver);
    EvalReport report = evaluate(result.partition, data.truth, nullptr);
    cell.sampled = data.sampled_templates;
    cell.recovered = report.predicted_clusters;
    cell.misclassified = report.misclassified_edges;
    cell.iterations = result.iterations;
    cell.converged = result.converged;
}

}  // namespace

std::string render_fig4_csv(const Fig4Options& opts) {
    std::vector<Fig4Cell> cells;
    std::uint64_t seed = opts.seed;
    for (int k : opts.template_counts) {
        for (double pe : opts.error_rates) {
            for (int s = 0; s < opts.sims; ++s) {
                Fig4Cell cell{};
                cell.templates = k;
                cell.p_e = pe;
                cell.sim = s;
                cell.seed = seed++;
                cells.push_back(cell);
            }
        }
    }

    parallel_for(cells.size(), opts.threads, [&](std::size_t c0, std::size_t c1) {
        for (std::size_t c = c0; c < c1; ++c) run_fig4_cell(cells[c], opts);
    });

    std::ostringstream out;
    out << "# " << kToolName << " experiment-fig4 csv v1\n";
    out << "row,K,p_e,sim,seed,sampled_templates,recovered_clusters,cluster_count_error,"
           "misclassified_edges,iterations,converged,mean_recovered,sd_recovered,mean_sampled\n";
    std::size_t c = 0;
    for (int k : opts.template_counts) {
        for (double pe : opts.error_rates) {
            double sumRec = 0.0, sumRec2 = 0.0, sumSampled = 0.0;
            std::size_t first = c;
            for (int s = 0; s < opts.sims; ++s, ++c) {
                const Fig4Cell& cell = cells[c];
                out << "sim," << k << ',' << format_double(pe) << ',' << s << ','
                    << fmt_u64(cell.seed) << ',' << cell.sampled << ',' << cell.recovered << ','
                    << (cell.recovered - cell.sampled) << ',' << cell.misclassified << ','
                    << cell.iterations << ',' << (cell.converged ? "true" : "false")
                    << ",,,\n";
                sumRec += cell.recovered;
                sumRec2 += static_cast<double>(cell.recovered) * cell.recovered;
                sumSampled += cell.sampled;
            }
            double nSims = static_cast<double>(opts.sims);
            double mean = sumRec / nSims;
            double var = std::max(0.0, sumRec2 / nSims - mean * mean);
            out << "agg," << k << ',' << format_double(pe) << ",,,,,,,,,"
                << format_double(mean) << ',' << format_double(std::sqrt(var)) << ','
                << format_double(sumSampled / nSims) << '\n';
            (void)first;
        }
    }
    return out.str();
}

int cmd_experiment_fig4(const Fig4Options& opts, const std::vector<std::string>& argv) {
    return guarded([&]() -> int {
        std::string csv = render_fig4_csv(opts);
        KeyValues kv = solver_kv(opts.solver);
        kv.emplace_back("template_counts", join_ints(opts.template_counts));
        kv.emplace_back("error_rates", join_doubles(opts.error_rates));
        kv.emplace_back("word_length", std::to_string(opts.word_length));
        kv.emplace_back("reads_per_template", std::to_string(opts.reads_per_template));
        kv.emplace_back("sims", std::to_string(opts.sims));
        kv.emplace_back("seed", fmt_u64(opts.seed));
        write_file(opts.out_path, csv);
        write_file(opts.out_path + ".manifest", render_manifest("experiment-fig4", argv, kv, {}));
        std::cout << "wrote " << opts.out_path << '\n';
        return kExitOk;
    });
}

namespace {

struct Fig5Cell {
    double p_e;
    int sim;
    std::uint64_t seed;
    std::map<int, long> mp_errors;
    std::map<int, long> baseline_errors;
    std::map<int, long> pair_counts;
};

void run_fig5_cell(Fig5Cell& cell, const Fig5Options& opts) {
    SimConfig sim{opts.template_count, opts.word_length, opts.read_count, cell.p_e, cell.seed};
    SimDataset data = simulate(sim);
    BinaryReadModel model(opts.word_length, scoring_error_rate(cell.p_e));
    ScoreMatrix scores = score_matrix_from_reads(model, data.reads);

    SolverResult result = solve(scores, opts.solver);
    EvalReport mp = evaluate(result.partition, data.truth, &data.reads);
    EvalReport baseline = evaluate(no_prior_solution(scores), data.truth, &data.reads);
    cell.mp_errors = mp.misclassified_by_distance;
    cell.baseline_errors = baseline.misclassified_by_distance;
    for (int i = 0; i < data.reads.size(); ++i)
        for (int j = i + 1; j < data.reads.size(); ++j)
            ++cell.pair_counts[data.reads.hamming(i, j)];
}

}  // namespace

std::string render_fig5_csv(const Fig5Options& opts) {
    std::vector<Fig5Cell> cells;
    std::uint64_t seed = opts.seed;
    for (double pe : opts.error_rates) {
        for (int s = 0; s < opts.sims; ++s) {
            Fig5Cell cell{};
            cell.p_e = pe;
            cell.sim = s;
            cell.seed = seed++;
            cells.push_back(std::move(cell));
        }
    }

    parallel_for(cells.size(), opts.threads, [&](std::size_t c0, std::size_t c1) {
        for (std::size_t c = c0; c < c1; ++c) run_fig5_cell(cells[c], opts);
    });

    std::ostringstream out;
    out << "# " << kToolName << " experiment-fig5 csv v1\n";
    out << "p_e,d,f0,f1,mp_errors_mean,baseline_errors_mean,pair_count_mean\n";
    std::size_t c = 0;
    for (double pe : opts.error_rates) {
        std::vector<double> mp(opts.word_length + 1, 0.0);
        std::vector<double> base(opts.word_length + 1, 0.0);
        std::vector<double> pairs(opts.word_length + 1, 0.0);
        for (int s = 0; s < opts.sims; ++s, ++c) {
            for (const auto& [d, cnt] : cells[c].mp_errors) mp[d] += cnt;
            for (const auto& [d, cnt] : cells[c].baseline_errors) base[d] += cnt;
            for (const auto& [d, cnt] : cells[c].pair_counts) pairs[d] += cnt;
        }
        BinaryReadModel model(opts.word_length, scoring_error_rate(pe));
        double nSims = static_cast<double>(opts.sims);
        for (int d = 0; d <= opts.word_length; ++d) {
            out << format_double(pe) << ',' << d << ','
                << format_double(std::exp(model.log_f0(d))) << ','
                << format_double(std::exp(model.log_f1(d))) << ','
                << format_double(mp[d] / nSims) << ','
                << format_double(base[d] / nSims) << ','
                << format_double(pairs[d] / nSims) << '\n';
        }
    }
    return out.str();
}

int cmd_experiment_fig5(const Fig5Options& opts, const std::vector<std::string>& argv) {
    return guarded([&]() -> int {
        std::string csv = render_fig5_csv(opts);
        KeyValues kv = solver_kv(opts.solver);
        kv.emplace_back("templates", std::to_string(opts.template_count));
        kv.emplace_back("word_length", std::to_string(opts.word_length));
        kv.emplace_back("reads", std::to_string(opts.read_count));
        kv.emplace_back("error_rates", join_doubles(opts.error_rates));
        kv.emplace_back("sims", std::to_string(opts.sims));
        kv.emplace_back("seed", fmt_u64(opts.seed));
        write_file(opts.out_path, csv);
        write_file(opts.out_path + ".manifest", render_manifest("experiment-fig5", argv, kv, {}));
        std::cout << "wrote " << opts.out_path << '\n';
        return kExitOk;
    });
}

std::string render_prior_csv(const PriorOptions& opts) {
    std::ostringstream out;
    if (opts.mode == "critical-x") {
        out << "# " << kToolName << " prior critical-x csv v1\n";
        out << "N,x_critical_estimate,blue_fraction_crossing\n";
        for (int n : opts.point_counts)
            out << n << ',' << format_double(critical_x_estimate(n)) << ','
                << format_double(blue_fraction_crossing(n)) << '\n';
        return out.str();
    }
    if (opts.mode != "zfun" && opts.mode != "blue-fraction" && opts.mode != "cluster-moments")
        throw std::invalid_argument("prior: unknown mode '" + opts.mode + "'");
    out << "# " << kToolName << " prior csv v1\n";
    out << "mode,x,N,Z_log,Z_exact,blue_fraction,mean_clusters,sd_clusters\n";
    for (int n : opts.point_counts) {
        for (double x : opts.x_values) {
            if (!(x > 0.0)) throw std::invalid_argument("prior: x must be > 0");
            double logZ = log_partition_function(x, n);
            std::string exact = (x == 1.0 && n <= 25)
                                    ? fmt_u64(partition_function_at_one(n)) : "";
            BlueEdgeStats blue{0.0, n >= 2 ? 0.0 : 1.0};
            if (n >= 2) blue = blue_edge_expectation(x, n);
            ClusterMoments moments = cluster_count_moments(x, n);
            out << opts.mode << ',' << format_double(x) << ',' << n << ','
                << format_double(logZ) << ',' << exact << ','
                << format_double(blue.blue_fraction) << ','
                << format_double(moments.mean) << ','
                << format_double(std::sqrt(std::max(0.0, moments.variance))) << '\n';
        }
    }
    return out.str();
}

int cmd_prior(const PriorOptions& opts, const std::vector<std::string>& argv) {
    return guarded([&]() -> int {
        std::string csv = render_prior_csv(opts);
        KeyValues kv{{"mode", opts.mode},
                     {"x", join_doubles(opts.x_values)},
                     {"N", join_ints(opts.point_counts)}};
        write_file(opts.out_path, csv);
        write_file(opts.out_path + ".manifest", render_manifest("prior", argv, kv, {}));
        std::cout << "wrote " << opts.out_path << '\n';
        return kExitOk;
    });
}

int cmd_replay(const std::string& manifest_path) {
    return guarded([&]() -> int {
        std::ifstream in(manifest_path);
        if (!in) throw std::invalid_argument("cannot open manifest: " + manifest_path);
        std::string line;
        while (std::getline(in, line)) {
            if (line.rfind("args = ", 0) != 0) continue;
            std::vector<std::string> args;
            std::stringstream ss(line.substr(7));
            std::string arg;
            while (std::getline(ss, arg, '\t')) args.push_back(arg);
            if (args.empty()) throw std::invalid_argument("manifest has empty args line");
            return run_cli(args);
        }
        throw std::invalid_argument("manifest has no args line: " + manifest_path);
    });
}

namespace {

void add_solver_flags(CLI::App* sub, SolverConfig& cfg) {
    sub->add_option("--lambda", cfg.lambda, "Message dampening factor in (0,1)")
        ->check(CLI::Range(1e-9, 1.0 - 1e-9));
    sub->add_option("--convergence-goal", cfg.convergence_goal,
                    "Stop once the sign-flip horizon exceeds this many iterations")
        ->check(CLI::PositiveNumber);
    sub->add_option("--max-iters", cfg.max_iterations, "Safety cap on iterations")
        ->check(CLI::PositiveNumber);
    sub->add_option("--threads", cfg.threads, "Worker threads (0 = all cores)");
    sub->add_flag("--f32", cfg.use_float32, "Store messages as 32-bit floats");
}

}  // namespace

int run_cli(const std::vector<std::string>& args) {
    CLI::App app{"Transitive propagation clustering toolkit"};
    app.require_subcommand(1);

    ClusterOptions cluster;
    auto* subCluster = app.add_subcommand("cluster", "Cluster a score matrix or reads file");
    subCluster->add_option("--scores", cluster.scores_path, "Score matrix CSV (dS_ij)");
    subCluster->add_option("--reads", cluster.reads_path, "Binary reads file (one word per line)");
    subCluster->add_option("--error-rate", cluster.error_rate,
                           "Per-bit error rate for the reads model, in (0, 0.5)");
    subCluster->add_flag("--csv-header", cluster.csv_header, "Skip the first CSV row");
    subCluster->add_flag("--allow-nonconverged", cluster.allow_nonconverged,
                         "Exit 0 even when the solver hits the iteration cap");
    subCluster->add_option("--out", cluster.out_prefix, "Output path prefix");
    add_solver_flags(subCluster, cluster.solver);

    SimulateOptions simulate;
    auto* subSim = app.add_subcommand("simulate", "Generate a synthetic template/read dataset");
    subSim->add_option("--templates", simulate.template_count, "Template count K")->required();
    subSim->add_option("--length", simulate.word_length, "Word length L in bits")->required();
    subSim->add_option("--reads", simulate.read_count, "Read count N")->required();
    subSim->add_option("--error-rate", simulate.error_rate, "Per-bit error rate in [0, 0.5)")
        ->required();
    subSim->add_option("--seed", simulate.seed, "RNG seed")->required();
    subSim->add_option("--out", simulate.out_prefix, "Output path prefix");

    Fig4Options fig4;
    auto* subFig4 = app.add_subcommand(
        "experiment-fig4", "Recovered cluster count vs error rate over simulated datasets");
    subFig4->add_option("--template-counts", fig4.template_counts, "Grid of template counts K");
    subFig4->add_option("--error-rates", fig4.error_rates, "Grid of per-bit error rates");
    subFig4->add_option("--length", fig4.word_length, "Word length L in bits");
    subFig4->add_option("--reads-per-template", fig4.reads_per_template, "N = K * this");
    subFig4->add_option("--sims", fig4.sims, "Simulations per grid cell")->check(CLI::PositiveNumber);
    subFig4->add_option("--seed", fig4.seed, "Base RNG seed (cells use seed, seed+1, ...)")
        ->required();
    subFig4->add_option("--out", fig4.out_path, "Output CSV path");
    subFig4->add_option("--grid-threads", fig4.threads, "Worker threads across grid cells");
    add_solver_flags(subFig4, fig4.solver);

    Fig5Options fig5;
    auto* subFig5 = app.add_subcommand(
        "experiment-fig5", "Misclassified edges per hamming distance vs likelihood-only baseline");
    subFig5->add_option("--templates", fig5.template_count, "Template count K");
    subFig5->add_option("--length", fig5.word_length, "Word length L in bits");
    subFig5->add_option("--reads", fig5.read_count, "Read count N");
    subFig5->add_option("--error-rates", fig5.error_rates, "Grid of per-bit error rates");
    subFig5->add_option("--sims", fig5.sims, "Simulations per error rate")->check(CLI::PositiveNumber);
    subFig5->add_option("--seed", fig5.seed, "Base RNG seed")->required();
    subFig5->add_option("--out", fig5.out_path, "Output CSV path");
    subFig5->add_option("--grid-threads", fig5.threads, "Worker threads across grid cells");
    add_solver_flags(subFig5, fig5.solver);

    PriorOptions prior;
    auto* subPrior = app.add_subcommand("prior", "Partition-function sweeps for the edge prior");
    subPrior->add_option("--mode", prior.mode,
                         "zfun | blue-fraction | cluster-moments | critical-x");
    subPrior->add_option("--x", prior.x_values, "Grid of prior weights x > 0");
    subPrior->add_option("--points", prior.point_counts, "Grid of point counts N");
    subPrior->add_option("--out", prior.out_path, "Output CSV path");

    std::string replayPath;
    auto* subReplay = app.add_subcommand("replay", "Re-run the command recorded in a manifest");
    subReplay->add_option("manifest", replayPath, "Manifest file")->required();

    std::vector<std::string> argv = args;
    try {
        app.parse(std::vector<std::string>(argv.rbegin(), argv.rend()));
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInput;
    }

    if (subCluster->parsed()) return cmd_cluster(cluster, argv);
    if (subSim->parsed()) return cmd_simulate(simulate, argv);
    if (subFig4->parsed()) return cmd_experiment_fig4(fig4, argv);
    if (subFig5->parsed()) return cmd_experiment_fig5(fig5, argv);
    if (subPrior->parsed()) return cmd_prior(prior, argv);
    if (subReplay->parsed()) return cmd_replay(replayPath);
    return kExitInput;
}

int run_cli(int argc, char** argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run_cli(args);
}

}  // namespace tp::cli
