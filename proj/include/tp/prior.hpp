#ifndef TP_PRIOR_HPP
#define TP_PRIOR_HPP

/**
 * @file prior.hpp
 * @brief Partition-function toolkit for the edge-weighted clustering prior.
 *
 * Z(x,N) = sum over partitions C of x^b(C), where b(C) counts within-block
 * (blue) edges; Z_lambda additionally weights lambda^n(C) by block count.
 * Both satisfy the recurrence obtained by conditioning on the block of
 * the last point:
 *
 *   Z(x,N+1) = sum_{k=0..N} C(N,k) x^{k(k+1)/2} Z(x,N-k),  Z(x,0)=Z(x,1)=1.
 *
 * Z has polynomial degree N(N-1)/2 in x, so the float path works in log
 * space throughout. Expectations are computed by propagating exact
 * derivatives through the recurrence (never finite differences):
 * <b> = x dlogZ/dx, and block-count moments from d/dlambda at lambda=1.
 */

#include <cstdint>
#include <vector>

#include "tp/types.hpp"

namespace tp {

/// log Z(x,n) for x >= 0 (x = 0 gives log 1 = 0).
double log_partition_function(double x, int n);

/// Exact Z(1,n) = Bell number, integer recurrence path. n <= 25.
std::uint64_t partition_function_at_one(int n);

struct BlueEdgeStats {
    double expected_blue_edges = 0.0;  ///< <b> = x dlogZ/dx
    double blue_fraction = 0.0;        ///< <b> / (n(n-1)/2)
};

/// Requires x > 0, n >= 2.
BlueEdgeStats blue_edge_expectation(double x, int n);

struct ClusterMoments {
    double mean = 0.0;
    double variance = 0.0;
};

/// Prior mean/variance of the number of blocks, from (Z, dZ/dlambda,
/// d2Z/dlambda2) at lambda = 1 pushed jointly through the recurrence.
/// Moments are normalized by Z.
ClusterMoments cluster_count_moments(double x, int n);

/// Closed-form order-disorder estimate x = 1 + (2/n) ln n.
double critical_x_estimate(int n);

/// x where the expected blue fraction crosses `target` (default 1/2),
/// located by bisection on the exact recurrence.
double blue_fraction_crossing(int n, double target = 0.5);

/// Z_lambda(1,n) as a polynomial in lambda: coefficient k is the number
/// of partitions of n points into exactly k blocks (Stirling partition
/// numbers). Coefficients sum to the Bell number.
struct PriorPolynomial {
    int n = 0;
    std::vector<std::uint64_t> coefficients;  ///< index k = 0..n

    static PriorPolynomial at_unit_weight(int n);  // n <= 25
};

/// Conjugate prior over colorings: per-edge log-weights X_ij added to
/// the transitivity constraint. Posterior inference is solve() on
/// dS + X, which apply() produces.
struct ConjugatePriorSpec {
    ScoreMatrix log_weights;

    explicit ConjugatePriorSpec(ScoreMatrix x) : log_weights(std::move(x)) {}

    ScoreMatrix apply(const ScoreMatrix& scores) const;
};

}  // namespace tp

#endif  // TP_PRIOR_HPP
