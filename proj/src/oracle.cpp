#include "tp/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace tp {

namespace {

void check_cap(int n, bool allow_large) {
    if (n < 1) throw std::invalid_argument("partition enumeration: n must be >= 1");
    if (n > kEnumerationCap && !allow_large)
        throw std::invalid_argument("partition enumeration: n exceeds cap of 12 "
                                    "(pass allow_large to override)");
}

int blue_edges_of(const std::vector<int>& labels, std::vector<int>& scratch) {
    scratch.assign(labels.size(), 0);
    for (int lab : labels) ++scratch[lab];
    int b = 0;
    for (int s : scratch) b += s * (s - 1) / 2;
    return b;
}

}  // namespace

PartitionEnumerator::PartitionEnumerator(int n, bool allow_large) : n_(n) {
    check_cap(n, allow_large);
    labels_.assign(n, 0);
    prefix_max_.assign(n, 0);
}

bool PartitionEnumerator::next(std::vector<int>& labels) {
    if (done_) return false;
    if (first_) {
        first_ = false;
        labels = labels_;
        return true;
    }
    for (int i = n_ - 1; i >= 1; --i) {
        if (labels_[i] <= prefix_max_[i - 1]) {
            ++labels_[i];
            prefix_max_[i] = std::max(prefix_max_[i - 1], labels_[i]);
            for (int j = i + 1; j < n_; ++j) {
                labels_[j] = 0;
                prefix_max_[j] = prefix_max_[i];
            }
            labels = labels_;
            return true;
        }
    }
    done_ = true;
    return false;
}

void PartitionEnumerator::reset() {
    first_ = true;
    done_ = false;
    std::fill(labels_.begin(), labels_.end(), 0);
    std::fill(prefix_max_.begin(), prefix_max_.end(), 0);
}

void enumerate_partitions(int n, const std::function<void(const std::vector<int>&)>& visit,
                          bool allow_large) {
    PartitionEnumerator en(n, allow_large);
    std::vector<int> labels;
    while (en.next(labels)) visit(labels);
}

std::uint64_t bell_number(int n) {
    if (n < 0 || n > 25) throw std::invalid_argument("bell_number: need 0 <= n <= 25");
    if (n == 0) return 1;
    std::vector<std::uint64_t> row{1};
    for (int r = 1; r < n; ++r) {
        std::vector<std::uint64_t> next;
        next.reserve(row.size() + 1);
        next.push_back(row.back());
        for (std::uint64_t v : row) next.push_back(next.back() + v);
        row = std::move(next);
    }
    return row.back();
}

BruteForceResult brute_force_optimum(const ScoreMatrix& scores, bool allow_large) {
    const int n = scores.size();
    check_cap(n, allow_large);
    constexpr double kTieTol = 1e-12;
    bool have = false;
    double best = 0.0;
    int ties = 0;
    std::vector<int> bestLabels;
    enumerate_partitions(n, [&](const std::vector<int>& labels) {
        double f = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (labels[i] != labels[j]) f += scores.at(i, j);
        if (!have || f > best + kTieTol) {
            have = true;
            best = f;
            ties = 1;
            bestLabels = labels;
        } else if (f >= best - kTieTol) {
            ++ties;
        }
    }, allow_large);
    BruteForceResult result;
    result.best = Partition::from_labels(bestLabels);
    result.objective = best;
    result.is_unique = (ties == 1);
    return result;
}

double brute_force_partition_sum(double x, int n, bool allow_large) {
    check_cap(n, allow_large);
    double z = 0.0;
    std::vector<int> scratch;
    enumerate_partitions(n, [&](const std::vector<int>& labels) {
        z += std::pow(x, blue_edges_of(labels, scratch));
    }, allow_large);
    return z;
}

std::map<int, std::uint64_t> blue_edge_histogram(int n, bool allow_large) {
    check_cap(n, allow_large);
    std::map<int, std::uint64_t> hist;
    std::vector<int> scratch;
    enumerate_partitions(n, [&](const std::vector<int>& labels) {
        ++hist[blue_edges_of(labels, scratch)];
    }, allow_large);
    return hist;
}

std::map<std::pair<int, int>, std::uint64_t> partition_profile(int n, bool allow_large) {
    check_cap(n, allow_large);
    std::map<std::pair<int, int>, std::uint64_t> profile;
    std::vector<int> scratch;
    enumerate_partitions(n, [&](const std::vector<int>& labels) {
        int blocks = *std::max_element(labels.begin(), labels.end()) + 1;
        ++profile[{blue_edges_of(labels, scratch), blocks}];
    }, allow_large);
    return profile;
}

}  // namespace tp
