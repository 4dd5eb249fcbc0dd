#ifndef TP_SIMULATOR_HPP
#define TP_SIMULATOR_HPP

/**
 * @file simulator.hpp
 * @brief Seeded template/read generator and clustering scorer.
 *
 * Generation protocol: K templates drawn uniformly from {0,1}^L, N reads
 * each copying a uniformly chosen template with every bit flipped
 * independently with probability p_e. Fully deterministic given the
 * seed; no ambient entropy anywhere.
 */

#include <cstdint>
#include <iosfwd>
#include <map>
#include <random>

#include "tp/models.hpp"
#include "tp/types.hpp"

namespace tp {

/// Thin wrapper over std::mt19937_64 with explicit derivations, so the
/// byte streams written by the simulator are reproducible by contract.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t word() { return engine_(); }

    /// Uniform in [0,1) with 53 random bits.
    double unit() { return (word() >> 11) * 0x1.0p-53; }

    /// Uniform in [0, bound); bound >= 1.
    std::uint64_t below(std::uint64_t bound) { return word() % bound; }

    bool coin() { return (word() >> 63) != 0; }

private:
    std::mt19937_64 engine_;
};

struct SimConfig {
    int template_count = 1;   ///< K
    int word_length = 30;     ///< L bits
    int read_count = 1;       ///< N
    double error_rate = 0.0;  ///< p_e in [0, 0.5)
    std::uint64_t seed = 0;

    void validate() const;
};

struct SimDataset {
    ReadSet templates;
    ReadSet reads;
    std::vector<int> read_template;  ///< source template index per read
    Partition truth;                 ///< reads grouped by (deduplicated) template
    int sampled_templates = 0;       ///< distinct templates with >= 1 read
};

/// Templates that happen to coincide bit-for-bit are merged in the truth
/// partition (indistinguishable in principle), and templates that drew no
/// reads contribute no block.
SimDataset simulate(const SimConfig& cfg);

struct EvalReport {
    int predicted_clusters = 0;
    int truth_clusters = 0;
    int cluster_count_error = 0;        ///< predicted - truth
    long misclassified_edges = 0;       ///< pairs whose same/different verdict is wrong
    std::map<int, long> misclassified_by_distance;  ///< keyed by pair hamming distance
};

/// Scores an edge coloring against the truth partition. The per-distance
/// histogram is filled only when reads are supplied. The coloring need
/// not be transitive (baseline classifiers are scored through here too).
EvalReport evaluate(const HypothesisMatrix& predicted, const Partition& truth,
                    const ReadSet* reads = nullptr);
EvalReport evaluate(const Partition& predicted, const Partition& truth,
                    const ReadSet* reads = nullptr);

// Dataset dump formats: reads as in ReadSet::parse; truth as one line
// per read, "read_index<TAB>template_index".
void write_reads(std::ostream& out, const ReadSet& reads);
void write_truth(std::ostream& out, const std::vector<int>& read_template);

}  // namespace tp

#endif  // TP_SIMULATOR_HPP
