// Acceptance gate: one self-contained check per shipped guarantee, each
// printing a single [PASS]/[FAIL] line. Exit status is the failure count.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "reference_messages.hpp"
#include "tp/cli.hpp"
#include "tp/models.hpp"
#include "tp/oracle.hpp"
#include "tp/prior.hpp"
#include "tp/simulator.hpp"
#include "tp/solver.hpp"

using namespace tp;

namespace {

int failures = 0;

void report(int id, bool pass, const std::string& detail) {
    std::printf("[%s] criterion %d: %s\n", pass ? "PASS" : "FAIL", id, detail.c_str());
    if (!pass) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// Planted-partition instance: in-cluster scores ~ Normal(-3,1), cross
// scores ~ Normal(+3,1).
ScoreMatrix planted_instance(int n, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> labelDist(0, 2);
    std::normal_distribution<double> noise(0.0, 1.0);
    std::vector<int> labels(n);
    for (int& l : labels) l = labelDist(rng);
    ScoreMatrix s(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            s.set(i, j, (labels[i] == labels[j] ? -3.0 : 3.0) + noise(rng));
    return s;
}

void criterion1() {
    auto t0 = std::chrono::steady_clock::now();
    std::mt19937_64 rng(10001);
    int agree = 0, total = 200;
    std::ostringstream misses;
    for (int t = 0; t < total; ++t) {
        int n = 4 + static_cast<int>(rng() % 5);  // 4..8
        ScoreMatrix s = planted_instance(n, rng);
        SolverResult r = solve(s);
        BruteForceResult oracle = brute_force_optimum(s);
        bool ok = r.violations.valid() && r.objective_value &&
                  std::abs(*r.objective_value - oracle.objective) <= 1e-9;
        if (ok) {
            ++agree;
        } else {
            double got = r.objective_value ? *r.objective_value : r.repaired_objective;
            misses << " [instance " << t << ": gap " << oracle.objective - got
                   << ", violations " << r.violations.count() << "]";
        }
    }
    double elapsed = seconds_since(t0);
    std::ostringstream detail;
    detail << "oracle agreement on planted instances: " << agree << "/" << total << " ("
           << elapsed << " s)" << misses.str();
    report(1, agree >= 196 && elapsed < 30.0, detail.str());
}

void criterion2() {
    std::mt19937_64 rng(10002);
    int exact = 0, total = 0, attempts = 0;
    while (total < 100 && attempts < 10000) {
        ++attempts;
        int n = 5 + static_cast<int>(rng() % 6);
        ScoreMatrix s = planted_instance(n, rng);
        HypothesisMatrix thresholded = no_prior_solution(s);
        if (!check_transitivity(thresholded).valid()) continue;
        ++total;
        SolverResult r = solve(s);
        if (r.fast_path && r.iterations == 0 && r.h_star == thresholded &&
            r.converged && r.violations.valid())
            ++exact;
    }
    std::ostringstream detail;
    detail << "fast path returns the transitive thresholding exactly: " << exact << "/"
           << total;
    report(2, total == 100 && exact == 100, detail.str());
}

void criterion3() {
    auto t0 = std::chrono::steady_clock::now();
    cli::Fig4Options opts;
    opts.template_counts = {10};
    opts.error_rates = {0.01, 0.05};
    opts.word_length = 30;
    opts.reads_per_template = 10;  // N = 100
    opts.sims = 20;
    opts.seed = 10003;
    std::ostringstream detail;
    bool pass = true;
    // consume the aggregate rows of the rendered experiment
    std::istringstream csv(cli::render_fig4_csv(opts));
    std::string line;
    std::vector<double> tolerance{0.5, 1.5};
    std::size_t aggSeen = 0;
    while (std::getline(csv, line)) {
        if (line.rfind("agg,", 0) != 0) continue;
        std::vector<std::string> cells;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) cells.push_back(cell);
        double pe = std::stod(cells[2]);
        double meanRecovered = std::stod(cells[11]);
        double meanSampled = std::stod(cells[13]);
        double gap = std::abs(meanRecovered - meanSampled);
        double tol = aggSeen < tolerance.size() ? tolerance[aggSeen] : 0.0;
        detail << "p_e=" << pe << ": recovered " << meanRecovered << " vs sampled "
               << meanSampled << " (tol " << tol << "); ";
        if (gap > tol) pass = false;
        ++aggSeen;
    }
    double elapsed = seconds_since(t0);
    detail << elapsed << " s";
    report(3, pass && aggSeen == 2 && elapsed < 300.0, detail.str());
}

void criterion4() {
    auto t0 = std::chrono::steady_clock::now();
    const int sims = 20, K = 20, L = 30, N = 100;
    const double pe = 0.10;
    long mpTotal = 0, baseTotal = 0, mpMid = 0, baseMid = 0;
    BinaryReadModel model(L, pe);
    double dstar = model.decision_distance();
    for (int s = 0; s < sims; ++s) {
        SimConfig cfg{K, L, N, pe, 10004ull + static_cast<std::uint64_t>(s)};
        SimDataset data = simulate(cfg);
        ScoreMatrix scores = score_matrix_from_reads(model, data.reads);
        SolverResult r = solve(scores);
        EvalReport mp = evaluate(r.partition, data.truth, &data.reads);
        EvalReport base = evaluate(no_prior_solution(scores), data.truth, &data.reads);
        mpTotal += mp.misclassified_edges;
        baseTotal += base.misclassified_edges;
        for (const auto& [d, c] : mp.misclassified_by_distance)
            if (std::abs(d - dstar) <= 3.0) mpMid += c;
        for (const auto& [d, c] : base.misclassified_by_distance)
            if (std::abs(d - dstar) <= 3.0) baseMid += c;
    }
    double elapsed = seconds_since(t0);
    std::ostringstream detail;
    detail << "misclassified edges, message passing vs thresholding: total " << mpTotal
           << " vs " << baseTotal << ", intermediate distances (|d - " << dstar
           << "| <= 3): " << mpMid << " vs " << baseMid << " (" << elapsed << " s)";
    report(4, mpTotal <= baseTotal && mpMid < baseMid && elapsed < 300.0, detail.str());
}

void criterion5() {
    auto t0 = std::chrono::steady_clock::now();
    bool pass = true;
    std::ostringstream detail;
    for (int n = 0; n <= 15; ++n)
        if (partition_function_at_one(n) != bell_number(n)) pass = false;
    detail << "Z(1,N) = Bell numbers for N <= 15 " << (pass ? "exactly" : "MISMATCH") << "; ";

    double worst = 0.0;
    for (int n = 2; n <= 10; ++n) {
        std::map<std::pair<int, int>, std::uint64_t> profile = partition_profile(n);
        for (double x : {0.1, 0.5, 1.0, 2.0, 10.0}) {
            double z = 0.0, blueSum = 0.0, c1 = 0.0, c2 = 0.0;
            for (const auto& [key, mult] : profile) {
                double w = static_cast<double>(mult) * std::pow(x, key.first);
                z += w;
                blueSum += w * key.first;
                c1 += w * key.second;
                c2 += w * static_cast<double>(key.second) * key.second;
            }
            double relZ = std::abs(log_partition_function(x, n) - std::log(z)) /
                          std::abs(std::log(z) == 0.0 ? 1.0 : std::log(z));
            double relB = n >= 2 ? std::abs(blue_edge_expectation(x, n).expected_blue_edges -
                                            blueSum / z) /
                                        std::max(1.0, blueSum / z)
                                  : 0.0;
            ClusterMoments m = cluster_count_moments(x, n);
            double mean = c1 / z, var = c2 / z - mean * mean;
            double relM = std::abs(m.mean - mean) / mean;
            double relV = std::abs(m.variance - var) / std::max(1.0, var);
            worst = std::max({worst, relZ, relB, relM, relV});
        }
    }
    if (worst > 1e-9) pass = false;
    double elapsed = seconds_since(t0);
    detail << "recurrence vs enumeration, worst relative error " << worst << " ("
           << elapsed << " s)";
    report(5, pass && elapsed < 60.0, detail.str());
}

void criterion6() {
    auto t0 = std::chrono::steady_clock::now();
    bool pass = true;
    std::ostringstream detail;
    for (int n : {50, 100}) {
        double crossing = blue_fraction_crossing(n);
        double upper = 1.0 + 4.0 * std::log(n) / n;
        detail << "N=" << n << ": crossing " << crossing << " in (1, " << upper << "); ";
        if (!(crossing > 1.0 && crossing < upper)) pass = false;
    }
    double elapsed = seconds_since(t0);
    detail << elapsed << " s";
    report(6, pass && elapsed < 10.0, detail.str());
}

void criterion7() {
    std::mt19937_64 rng(10007);
    std::uniform_real_distribution<double> dist(-3.0, 3.0);
    double worst = 0.0;
    bool sameH = true;
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 6;
        ScoreMatrix s(n);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) s.set(i, j, dist(rng));
        SolverConfig cfg;
        SolverState state(s, cfg);
        testref::ReferenceState ref(s, cfg.lambda);
        for (int iter = 0; iter < 10; ++iter) {
            state.step();
            ref.step();
            std::vector<double> b = state.current_b();
            for (int i = 0; i < n; ++i) {
                for (int j = i + 1; j < n; ++j) {
                    double bd = ref.belief_difference(i, j);
                    worst = std::max(worst,
                                     std::abs(b[static_cast<std::size_t>(i) * n + j] - bd));
                    if ((b[static_cast<std::size_t>(i) * n + j] >= 0.0) != (bd >= 0.0))
                        sameH = false;
                }
            }
        }
    }
    std::ostringstream detail;
    detail << "two-component reference vs difference form, worst |B| gap " << worst
           << ", identical thresholded hypotheses: " << (sameH ? "yes" : "no");
    report(7, worst <= 1e-9 && sameH, detail.str());
}

void criterion8() {
    // Per-sweep wall time on random dense instances. Each size is timed
    // round-robin over a pool of independent instances holding the same
    // total footprint (~32 MB), so every size streams from the same level
    // of the memory hierarchy and the fit sees the algorithmic exponent
    // rather than the L2 cliff between N=50 and N=100.
    std::mt19937_64 rng(10008);
    std::uniform_real_distribution<double> dist(-2.0, 2.0);
    std::vector<int> sizes{50, 100, 200};
    std::vector<double> times;
    for (int n : sizes) {
        int instances = (200 / n) * (200 / n) * (200 / n);
        std::vector<SolverState> pool;
        pool.reserve(instances);
        SolverConfig cfg;
        for (int c = 0; c < instances; ++c) {
            ScoreMatrix s(n);
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) s.set(i, j, dist(rng));
            pool.emplace_back(s, cfg);
        }
        for (auto& state : pool) state.step();  // warm up
        double best = 1e30;
        const int sweeps = 2;
        for (int rep = 0; rep < 5; ++rep) {
            auto t0 = std::chrono::steady_clock::now();
            for (int sweep = 0; sweep < sweeps; ++sweep)
                for (auto& state : pool) state.step();
            best = std::min(best, seconds_since(t0) / (sweeps * instances));
        }
        times.push_back(best);
    }
    // least-squares slope in log-log
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        double x = std::log(sizes[i]), y = std::log(times[i]);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    double k = static_cast<double>(sizes.size());
    double slope = (k * sxy - sx * sy) / (k * sxx - sx * sx);

    ScoreMatrix big(250);
    SolverState bigState(big, {});
    double mb = static_cast<double>(bigState.memory_bytes()) / (1024.0 * 1024.0);

    std::ostringstream detail;
    detail << "per-sweep time exponent " << slope << " over N in {50,100,200} (times";
    for (double t : times) detail << " " << t;
    detail << " s); N=250 working set " << mb << " MB";
    report(8, slope >= 2.7 && slope <= 3.3 && mb <= 300.0, detail.str());
}

void criterion9() {
    cli::Fig4Options f4;
    f4.template_counts = {6};
    f4.error_rates = {0.02, 0.05};
    f4.sims = 5;
    f4.seed = 10009;
    f4.threads = 1;
    std::string a = cli::render_fig4_csv(f4);
    std::string b = cli::render_fig4_csv(f4);
    f4.threads = 3;
    std::string c = cli::render_fig4_csv(f4);

    cli::Fig5Options f5;
    f5.template_count = 6;
    f5.read_count = 30;
    f5.error_rates = {0.08};
    f5.sims = 4;
    f5.seed = 10009;
    f5.threads = 1;
    std::string d = cli::render_fig5_csv(f5);
    f5.threads = 4;
    std::string e = cli::render_fig5_csv(f5);

    cli::PriorOptions prior;
    prior.mode = "cluster-moments";
    prior.x_values = {0.5, 1.0, 2.0};
    prior.point_counts = {5, 20};
    std::string p1 = cli::render_prior_csv(prior);
    std::string p2 = cli::render_prior_csv(prior);

    bool pass = a == b && a == c && d == e && p1 == p2;
    std::ostringstream detail;
    detail << "seeded CSV output byte-identical across repeats and thread counts: "
           << (pass ? "yes" : "no");
    report(9, pass, detail.str());
}

}  // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    if (failures == 0) std::printf("all criteria passed\n");
    return failures;
}
