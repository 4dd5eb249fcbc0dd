#include "tp/types.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace tp {

namespace {

void require(bool cond, const std::string& msg) {
    if (!cond) throw std::invalid_argument(msg);
}

}  // namespace

ScoreMatrix::ScoreMatrix(int n) : n_(n) {
    require(n >= 1, "ScoreMatrix: n must be >= 1");
    d_.assign(static_cast<std::size_t>(n) * n, 0.0);
}

ScoreMatrix ScoreMatrix::from_dense(int n, const std::vector<double>& values) {
    require(values.size() == static_cast<std::size_t>(n) * n,
            "ScoreMatrix::from_dense: size mismatch");
    ScoreMatrix m(n);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            double a = values[static_cast<std::size_t>(i) * n + j];
            double b = values[static_cast<std::size_t>(j) * n + i];
            require(a == b, "ScoreMatrix::from_dense: matrix not symmetric");
            m.set(i, j, a);
        }
    }
    return m;
}

void ScoreMatrix::set(int i, int j, double value) {
    require(i >= 0 && j >= 0 && i < n_ && j < n_, "ScoreMatrix::set: index out of range");
    require(i != j, "ScoreMatrix::set: diagonal is fixed to zero");
    require(std::isfinite(value), "ScoreMatrix::set: non-finite score");
    d_[idx(i, j)] = value;
    d_[idx(j, i)] = value;
}

ScoreMatrix ScoreMatrix::permuted(const std::vector<int>& perm) const {
    require(perm.size() == static_cast<std::size_t>(n_), "ScoreMatrix::permuted: size mismatch");
    ScoreMatrix out(n_);
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j) out.set(perm[i], perm[j], at(i, j));
    return out;
}

ScoreMatrix ScoreMatrix::scaled(double c) const {
    ScoreMatrix out(n_);
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j) out.set(i, j, c * at(i, j));
    return out;
}

HypothesisMatrix::HypothesisMatrix(int n) : n_(n) {
    require(n >= 1, "HypothesisMatrix: n must be >= 1");
    h_.assign(static_cast<std::size_t>(n) * n, 0);
}

void HypothesisMatrix::set(int i, int j, std::uint8_t value) {
    require(i >= 0 && j >= 0 && i < n_ && j < n_, "HypothesisMatrix::set: index out of range");
    require(i != j, "HypothesisMatrix::set: diagonal is fixed to zero");
    require(value <= 1, "HypothesisMatrix::set: value must be 0 or 1");
    h_[idx(i, j)] = value;
    h_[idx(j, i)] = value;
}

Partition Partition::from_blocks(int n, std::vector<std::vector<int>> blocks) {
    std::vector<int> seen(n, 0);
    for (auto& blk : blocks) {
        require(!blk.empty(), "Partition: empty block");
        std::sort(blk.begin(), blk.end());
        for (int v : blk) {
            require(v >= 0 && v < n, "Partition: index out of range");
            require(!seen[v], "Partition: blocks not disjoint");
            seen[v] = 1;
        }
    }
    for (int v = 0; v < n; ++v) require(seen[v], "Partition: blocks do not cover all points");
    std::sort(blocks.begin(), blocks.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return Partition{n, std::move(blocks)};
}

Partition Partition::from_labels(const std::vector<int>& labels) {
    int n = static_cast<int>(labels.size());
    require(n >= 1, "Partition::from_labels: empty");
    int maxLabel = *std::max_element(labels.begin(), labels.end());
    std::vector<std::vector<int>> blocks(static_cast<std::size_t>(maxLabel) + 1);
    for (int i = 0; i < n; ++i) {
        require(labels[i] >= 0, "Partition::from_labels: negative label");
        blocks[labels[i]].push_back(i);
    }
    blocks.erase(std::remove_if(blocks.begin(), blocks.end(),
                                [](const auto& b) { return b.empty(); }),
                 blocks.end());
    return from_blocks(n, std::move(blocks));
}

std::vector<int> Partition::labels() const {
    std::vector<int> out(n, -1);
    for (std::size_t b = 0; b < blocks.size(); ++b)
        for (int v : blocks[b]) out[v] = static_cast<int>(b);
    return out;
}

TripleVerdict check_transitivity(const HypothesisMatrix& h) {
    TripleVerdict verdict;
    const int n = h.size();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k)
                if (h.at(i, j) + h.at(j, k) + h.at(i, k) == 1)
                    verdict.violations.push_back({i, j, k});
    return verdict;
}

std::optional<double> objective(const ScoreMatrix& scores, const HypothesisMatrix& h) {
    if (scores.size() != h.size())
        throw std::invalid_argument("objective: dimension mismatch");
    if (!check_transitivity(h).valid()) return std::nullopt;
    double f = 0.0;
    const int n = scores.size();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (h.at(i, j)) f += scores.at(i, j);
    return f;
}

HypothesisMatrix partition_to_hypothesis(const Partition& p) {
    HypothesisMatrix h(p.n);
    std::vector<int> lab = p.labels();
    for (int i = 0; i < p.n; ++i)
        for (int j = i + 1; j < p.n; ++j)
            if (lab[i] != lab[j]) h.set(i, j, 1);
    return h;
}

std::pair<Partition, TripleVerdict> hypothesis_to_partition(const HypothesisMatrix& h) {
    const int n = h.size();
    std::vector<int> lab(n, -1);
    int next = 0;
    std::vector<int> stack;
    for (int s = 0; s < n; ++s) {
        if (lab[s] >= 0) continue;
        lab[s] = next;
        stack.push_back(s);
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int v = 0; v < n; ++v) {
                if (v != u && lab[v] < 0 && h.at(u, v) == 0) {
                    lab[v] = next;
                    stack.push_back(v);
                }
            }
        }
        ++next;
    }
    return {Partition::from_labels(lab), check_transitivity(h)};
}

double partition_objective(const ScoreMatrix& scores, const Partition& p) {
    if (scores.size() != p.n)
        throw std::invalid_argument("partition_objective: dimension mismatch");
    std::vector<int> lab = p.labels();
    double f = 0.0;
    for (int i = 0; i < p.n; ++i)
        for (int j = i + 1; j < p.n; ++j)
            if (lab[i] != lab[j]) f += scores.at(i, j);
    return f;
}

}  // namespace tp
