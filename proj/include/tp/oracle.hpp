#ifndef TP_ORACLE_HPP
#define TP_ORACLE_HPP

/**
 * @file oracle.hpp
 * @brief Exact answers by exhaustive set-partition enumeration.
 *
 * Desk-scale ground truth: the enumerator walks restricted-growth
 * strings in lexicographic order, visiting each partition of {0..n-1}
 * exactly once (B_n of them). Guarded at n <= 12 (B_12 = 4,213,597)
 * unless the caller explicitly opts out.
 */

#include <cstdint>
#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "tp/types.hpp"

namespace tp {

inline constexpr int kEnumerationCap = 12;

/// Streams every partition of {0..n-1} as a restricted-growth string
/// (labels[i] <= 1 + max(labels[0..i-1]), labels[0] == 0).
class PartitionEnumerator {
public:
    explicit PartitionEnumerator(int n, bool allow_large = false);

    /// Copies the next labeling into labels; false once exhausted.
    bool next(std::vector<int>& labels);

    void reset();

private:
    int n_;
    bool first_ = true;
    bool done_ = false;
    std::vector<int> labels_;
    std::vector<int> prefix_max_;
};

/// Calls visit once per partition, in enumeration order.
void enumerate_partitions(int n, const std::function<void(const std::vector<int>&)>& visit,
                          bool allow_large = false);

/// Bell number B_n via the Bell triangle. Exact for n <= 25.
std::uint64_t bell_number(int n);

struct BruteForceResult {
    Partition best;
    double objective = 0.0;
    bool is_unique = true;  ///< false when another partition ties within 1e-12
};

/// argmax of the clustering objective over all partitions. Ties keep the
/// first maximizer in enumeration (canonical) order.
BruteForceResult brute_force_optimum(const ScoreMatrix& scores, bool allow_large = false);

/// Z(x,n) = sum over partitions of x^(blue edge count), by direct
/// summation; b(C) = sum over blocks of s(s-1)/2.
double brute_force_partition_sum(double x, int n, bool allow_large = false);

/// Multiplicity of each blue-edge count over all partitions of n points.
std::map<int, std::uint64_t> blue_edge_histogram(int n, bool allow_large = false);

/// Multiplicity of each (blue edge count, block count) pair; one
/// enumeration pass serves every weighted-average cross-check.
std::map<std::pair<int, int>, std::uint64_t> partition_profile(int n, bool allow_large = false);

}  // namespace tp

#endif  // TP_ORACLE_HPP
