#include "tp/solver.hpp"

namespace tp {

HypothesisMatrix no_prior_solution(const ScoreMatrix& scores) {
    const int n = scores.size();
    HypothesisMatrix h(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            h.set(i, j, detail::threshold_red(scores.at(i, j)));
    return h;
}

namespace {

void finalize(SolverResult& result, const ScoreMatrix& scores) {
    const int n = scores.size();
    auto [partition, verdict] = hypothesis_to_partition(result.h_star);
    result.partition = std::move(partition);
    result.violations = std::move(verdict);
    result.objective_value = objective(scores, result.h_star);
    result.repaired_objective = partition_objective(scores, result.partition);
    double margin = std::numeric_limits<double>::infinity();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            margin = std::min(margin, std::abs(result.b_final[static_cast<std::size_t>(i) * n + j]));
    result.min_abs_b = margin;
}

template <typename Real>
SolverResult run(const ScoreMatrix& scores, const SolverConfig& cfg) {
    BasicSolverState<Real> state(scores, cfg);
    double m = 0.0;
    do {
        m = state.step();
    } while (m < cfg.convergence_goal && state.iterations() < cfg.max_iterations);

    SolverResult result{HypothesisMatrix(scores.size())};
    result.iterations = state.iterations();
    result.converged = m >= cfg.convergence_goal;  // includes m == +inf
    result.h_star = state.current_hypothesis();
    result.b_final = state.current_b();
    finalize(result, scores);
    return result;
}

}  // namespace

SolverResult solve(const ScoreMatrix& scores, const SolverConfig& cfg) {
    cfg.validate();
    const int n = scores.size();

    // Thresholding is exact whenever it is already transitive; in that
    // case the constraints are all satisfied at the per-edge optimum and
    // message passing is unnecessary.
    HypothesisMatrix thresholded = no_prior_solution(scores);
    if (check_transitivity(thresholded).valid()) {
        SolverResult result{std::move(thresholded)};
        result.iterations = 0;
        result.converged = true;
        result.fast_path = true;
        result.b_final.assign(static_cast<std::size_t>(n) * n, 0.0);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (i != j) result.b_final[static_cast<std::size_t>(i) * n + j] = scores.at(i, j);
        finalize(result, scores);
        return result;
    }

    return cfg.use_float32 ? run<float>(scores, cfg) : run<double>(scores, cfg);
}

}  // namespace tp
