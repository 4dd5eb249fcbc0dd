#include "tp/prior.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace tp {

namespace {

double log_choose(int n, int k) {
    return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

void check_n(int n, int minimum) {
    if (n < minimum)
        throw std::invalid_argument("prior: n must be >= " + std::to_string(minimum));
}

/// One recurrence ladder carrying log Z plus the normalized first
/// derivatives the callers need. Everything is propagated exactly; the
/// only approximations are floating-point.
struct Ladder {
    std::vector<double> log_z;    // log Z(x, N)
    std::vector<double> dlog_dx;  // (dZ/dx) / Z
    std::vector<double> m1;       // (dZ/dlambda) / Z at lambda = 1
    std::vector<double> m2;       // (d2Z/dlambda2) / Z at lambda = 1
};

Ladder run_recurrence(double x, int n) {
    if (!(x >= 0.0)) throw std::invalid_argument("prior: x must be >= 0");
    Ladder lad;
    lad.log_z.assign(n + 1, 0.0);
    lad.dlog_dx.assign(n + 1, 0.0);
    lad.m1.assign(n + 1, 0.0);
    lad.m2.assign(n + 1, 0.0);
    if (n >= 1) lad.m1[1] = 1.0;
    const double logx = x > 0.0 ? std::log(x) : -std::numeric_limits<double>::infinity();
    std::vector<double> terms, exps;
    for (int N = 1; N < n; ++N) {
        terms.assign(N + 1, 0.0);
        exps.assign(N + 1, 0.0);
        double peak = -std::numeric_limits<double>::infinity();
        for (int k = 0; k <= N; ++k) {
            double e = 0.5 * k * (k + 1);
            double t = (k == 0) ? lad.log_z[N]
                                : log_choose(N, k) + e * logx + lad.log_z[N - k];
            terms[k] = t;
            exps[k] = e;
            peak = std::max(peak, t);
        }
        double sum = 0.0;
        for (double t : terms) sum += std::exp(t - peak);
        lad.log_z[N + 1] = peak + std::log(sum);
        double r = 0.0, m1 = 0.0, m2 = 0.0;
        for (int k = 0; k <= N; ++k) {
            double w = std::exp(terms[k] - lad.log_z[N + 1]);
            if (x > 0.0) r += w * (exps[k] / x + lad.dlog_dx[N - k]);
            m1 += w * lad.m1[N - k];
            m2 += w * (2.0 * lad.m1[N - k] + lad.m2[N - k]);
        }
        lad.dlog_dx[N + 1] = r;
        lad.m1[N + 1] = 1.0 + m1;  // the overall factor of lambda adds one block
        lad.m2[N + 1] = m2;
    }
    return lad;
}

}  // namespace

double log_partition_function(double x, int n) {
    check_n(n, 0);
    if (n <= 1) return 0.0;
    return run_recurrence(x, n).log_z[n];
}

std::uint64_t partition_function_at_one(int n) {
    check_n(n, 0);
    if (n > 25) throw std::invalid_argument("partition_function_at_one: n must be <= 25");
    // Integer recurrence with Pascal-triangle binomials.
    std::vector<std::vector<std::uint64_t>> choose(n + 1);
    for (int r = 0; r <= n; ++r) {
        choose[r].assign(r + 1, 1);
        for (int k = 1; k < r; ++k) choose[r][k] = choose[r - 1][k - 1] + choose[r - 1][k];
    }
    std::vector<std::uint64_t> z(n + 1, 1);
    for (int N = 1; N < n; ++N) {
        std::uint64_t total = 0;
        for (int k = 0; k <= N; ++k) total += choose[N][k] * z[N - k];
        z[N + 1] = total;
    }
    return z[n];
}

BlueEdgeStats blue_edge_expectation(double x, int n) {
    check_n(n, 2);
    if (!(x > 0.0)) throw std::invalid_argument("blue_edge_expectation: x must be > 0");
    Ladder lad = run_recurrence(x, n);
    BlueEdgeStats stats;
    stats.expected_blue_edges = x * lad.dlog_dx[n];
    stats.blue_fraction = stats.expected_blue_edges / (0.5 * n * (n - 1));
    return stats;
}

ClusterMoments cluster_count_moments(double x, int n) {
    check_n(n, 1);
    if (!(x > 0.0)) throw std::invalid_argument("cluster_count_moments: x must be > 0");
    Ladder lad = run_recurrence(x, n);
    ClusterMoments moments;
    moments.mean = lad.m1[n];
    // m2 = <n(n-1)>; variance = <n^2> - <n>^2.
    moments.variance = lad.m2[n] + lad.m1[n] - lad.m1[n] * lad.m1[n];
    return moments;
}

double critical_x_estimate(int n) {
    check_n(n, 2);
    return 1.0 + 2.0 * std::log(static_cast<double>(n)) / n;
}

double blue_fraction_crossing(int n, double target) {
    check_n(n, 2);
    if (!(target > 0.0 && target < 1.0))
        throw std::invalid_argument("blue_fraction_crossing: target must be in (0,1)");
    auto fraction = [n](double x) { return blue_edge_expectation(x, n).blue_fraction; };
    double lo = 1e-3, hi = 2.0;
    while (fraction(lo) > target) lo *= 0.5;
    while (fraction(hi) < target) hi *= 2.0;
    for (int it = 0; it < 200 && hi - lo > 1e-13 * hi; ++it) {
        double mid = 0.5 * (lo + hi);
        (fraction(mid) < target ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

PriorPolynomial PriorPolynomial::at_unit_weight(int n) {
    check_n(n, 1);
    if (n > 25) throw std::invalid_argument("PriorPolynomial: n must be <= 25");
    // Stirling partition numbers S(n,k): S(n,k) = k S(n-1,k) + S(n-1,k-1).
    std::vector<std::uint64_t> row(static_cast<std::size_t>(n) + 1, 0);
    row[0] = 1;  // S(0,0)
    for (int r = 1; r <= n; ++r) {
        for (int k = r; k >= 1; --k)
            row[k] = static_cast<std::uint64_t>(k) * row[k] + row[k - 1];
        row[0] = 0;  // S(r,0) = 0 for r >= 1
    }
    return PriorPolynomial{n, std::move(row)};
}

ScoreMatrix ConjugatePriorSpec::apply(const ScoreMatrix& scores) const {
    if (scores.size() != log_weights.size())
        throw std::invalid_argument("ConjugatePriorSpec::apply: dimension mismatch");
    ScoreMatrix out(scores.size());
    for (int i = 0; i < scores.size(); ++i)
        for (int j = i + 1; j < scores.size(); ++j)
            out.set(i, j, scores.at(i, j) + log_weights.at(i, j));
    return out;
}

}  // namespace tp
