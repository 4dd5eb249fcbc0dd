#ifndef TP_TYPES_HPP
#define TP_TYPES_HPP

/**
 * @file types.hpp
 * @brief Core domain types for pairwise-evidence clustering.
 *
 * A clustering instance is described by a symmetric matrix of per-edge
 * log-likelihood ratios (ScoreMatrix). Candidate solutions are symmetric
 * binary edge colorings (HypothesisMatrix, blue=0 same cluster, red=1
 * different clusters). A coloring encodes a partition exactly when no
 * triple of points has exactly one red edge.
 */

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace tp {

/// Index of edge (i,j), i < j, in a row-major packed upper triangle.
inline std::size_t edge_index(int n, int i, int j) {
    return static_cast<std::size_t>(i) * (2 * n - i - 1) / 2 + (j - i - 1);
}

inline std::size_t edge_count(int n) {
    return static_cast<std::size_t>(n) * (n - 1) / 2;
}

/// Symmetric N x N matrix of per-edge scores dS_ij = log f1 - log f0,
/// in nats. Positive entries favor "different cluster" (red). The
/// diagonal is fixed to zero and ignored by all consumers. All entries
/// must be finite; set() rejects NaN and infinities.
class ScoreMatrix {
public:
    explicit ScoreMatrix(int n);

    /// Builds from a full row-major n*n buffer. Requires exact symmetry
    /// and finite entries; the diagonal is forced to zero.
    static ScoreMatrix from_dense(int n, const std::vector<double>& values);

    int size() const { return n_; }
    double at(int i, int j) const { return d_[idx(i, j)]; }

    /// Sets dS_ij and dS_ji. Throws std::invalid_argument for i == j,
    /// out-of-range indices, or non-finite values.
    void set(int i, int j, double value);

    /// Returns a copy with rows/cols relabeled by perm (new = perm[old]).
    ScoreMatrix permuted(const std::vector<int>& perm) const;

    /// Returns a copy with every entry multiplied by c.
    ScoreMatrix scaled(double c) const;

private:
    std::size_t idx(int i, int j) const {
        return static_cast<std::size_t>(i) * n_ + j;
    }
    int n_;
    std::vector<double> d_;
};

/// Symmetric binary edge coloring; h(i,j) == 0 means i and j are
/// hypothesized to share a cluster. The diagonal is fixed to 0.
/// Transitivity is *not* an invariant; see check_transitivity().
class HypothesisMatrix {
public:
    explicit HypothesisMatrix(int n);  // all blue

    int size() const { return n_; }
    std::uint8_t at(int i, int j) const { return h_[idx(i, j)]; }
    void set(int i, int j, std::uint8_t value);

    bool operator==(const HypothesisMatrix& other) const = default;

private:
    std::size_t idx(int i, int j) const {
        return static_cast<std::size_t>(i) * n_ + j;
    }
    int n_;
    std::vector<std::uint8_t> h_;
};

/// A partition of {0..n-1} in canonical form: blocks ordered by their
/// smallest member, members ascending within each block.
struct Partition {
    int n = 0;
    std::vector<std::vector<int>> blocks;

    /// Validates disjointness/coverage and canonicalizes block order.
    static Partition from_blocks(int n, std::vector<std::vector<int>> blocks);

    /// labels[i] = block id of point i; ids are dense but need not be
    /// in first-occurrence order.
    static Partition from_labels(const std::vector<int>& labels);

    /// Dense block id per point, numbered in canonical block order.
    std::vector<int> labels() const;

    std::size_t block_count() const { return blocks.size(); }

    bool operator==(const Partition& other) const = default;
};

/// Result of a transitivity scan: every unordered triple with exactly
/// one red edge (equivalently two blue edges), which is the only
/// forbidden coloring pattern.
struct TripleVerdict {
    std::vector<std::array<int, 3>> violations;

    std::size_t count() const { return violations.size(); }
    bool valid() const { return violations.empty(); }
};

/// Lists every triple i<j<k whose edge coloring has exactly one red edge.
/// The list is empty iff h encodes a partition.
TripleVerdict check_transitivity(const HypothesisMatrix& h);

/// Objective F(H) = sum over red edges of dS_ij, or nullopt when h
/// violates transitivity (the -infinity case; kept as an explicit
/// sentinel so it cannot leak into downstream arithmetic).
std::optional<double> objective(const ScoreMatrix& scores, const HypothesisMatrix& h);

/// Red edge exactly between points in different blocks. The result
/// always passes check_transitivity.
HypothesisMatrix partition_to_hypothesis(const Partition& p);

/// Connected components of the blue-edge graph, plus the transitivity
/// verdict. When the verdict is clean the round trip through
/// partition_to_hypothesis reproduces h exactly.
std::pair<Partition, TripleVerdict> hypothesis_to_partition(const HypothesisMatrix& h);

/// Objective of the partition obtained by treating p as the clustering:
/// sum of dS_ij over pairs in different blocks. Always finite.
double partition_objective(const ScoreMatrix& scores, const Partition& p);

}  // namespace tp

#endif  // TP_TYPES_HPP
