#include "tp/simulator.hpp"

#include <map>
#include <ostream>
#include <stdexcept>
#include <string>

namespace tp {

void SimConfig::validate() const {
    if (template_count < 1) throw std::invalid_argument("SimConfig: template_count must be >= 1");
    if (word_length < 1) throw std::invalid_argument("SimConfig: word_length must be >= 1");
    if (read_count < 1) throw std::invalid_argument("SimConfig: read_count must be >= 1");
    if (!(error_rate >= 0.0 && error_rate < 0.5))
        throw std::invalid_argument("SimConfig: error_rate must be in [0, 0.5)");
}

SimDataset simulate(const SimConfig& cfg) {
    cfg.validate();
    Rng rng(cfg.seed);
    SimDataset data;

    std::vector<std::vector<bool>> templateBits(cfg.template_count);
    for (auto& word : templateBits) {
        word.resize(cfg.word_length);
        for (int p = 0; p < cfg.word_length; ++p) word[p] = rng.coin();
        data.templates.append_bits(word);
    }

    data.read_template.resize(cfg.read_count);
    std::vector<bool> read(cfg.word_length);
    for (int r = 0; r < cfg.read_count; ++r) {
        int t = static_cast<int>(rng.below(static_cast<std::uint64_t>(cfg.template_count)));
        data.read_template[r] = t;
        for (int p = 0; p < cfg.word_length; ++p) {
            bool flip = cfg.error_rate > 0.0 && rng.unit() < cfg.error_rate;
            read[p] = templateBits[t][p] ^ flip;
        }
        data.reads.append_bits(read);
    }

    // Identical templates are one cluster in truth.
    std::map<std::string, int> canonical;
    std::vector<int> canonicalOf(cfg.template_count);
    for (int t = 0; t < cfg.template_count; ++t) {
        auto [it, inserted] = canonical.emplace(data.templates.to_string(t),
                                                static_cast<int>(canonical.size()));
        canonicalOf[t] = it->second;
    }
    std::vector<int> labels(cfg.read_count);
    for (int r = 0; r < cfg.read_count; ++r) labels[r] = canonicalOf[data.read_template[r]];
    // Relabel densely: only sampled templates form blocks.
    std::map<int, int> dense;
    for (int& lab : labels) {
        auto [it, inserted] = dense.emplace(lab, static_cast<int>(dense.size()));
        lab = it->second;
    }
    data.truth = Partition::from_labels(labels);
    data.sampled_templates = static_cast<int>(data.truth.block_count());
    return data;
}

EvalReport evaluate(const HypothesisMatrix& predicted, const Partition& truth,
                    const ReadSet* reads) {
    const int n = predicted.size();
    if (truth.n != n) throw std::invalid_argument("evaluate: dimension mismatch");
    if (reads && reads->size() != n)
        throw std::invalid_argument("evaluate: reads count mismatch");
    EvalReport report;
    report.truth_clusters = static_cast<int>(truth.block_count());
    std::vector<int> truthLab = truth.labels();
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            bool sameTruth = truthLab[i] == truthLab[j];
            bool samePred = predicted.at(i, j) == 0;
            if (sameTruth != samePred) {
                ++report.misclassified_edges;
                if (reads) ++report.misclassified_by_distance[reads->hamming(i, j)];
            }
        }
    }
    return report;
}

EvalReport evaluate(const Partition& predicted, const Partition& truth, const ReadSet* reads) {
    EvalReport report = evaluate(partition_to_hypothesis(predicted), truth, reads);
    report.predicted_clusters = static_cast<int>(predicted.block_count());
    report.cluster_count_error = report.predicted_clusters - report.truth_clusters;
    return report;
}

void write_reads(std::ostream& out, const ReadSet& reads) {
    for (int r = 0; r < reads.size(); ++r) out << reads.to_string(r) << '\n';
}

void write_truth(std::ostream& out, const std::vector<int>& read_template) {
    for (std::size_t r = 0; r < read_template.size(); ++r)
        out << r << '\t' << read_template[r] << '\n';
}

}  // namespace tp
