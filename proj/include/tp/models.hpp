#ifndef TP_MODELS_HPP
#define TP_MODELS_HPP

/**
 * @file models.hpp
 * @brief Likelihood models turning raw data into a ScoreMatrix.
 *
 * The binary-read model: reads are length-L bit words; two reads of the
 * same template disagree per bit with probability x = 2 p_e (1 - p_e),
 * two reads of unrelated random templates disagree per bit with
 * probability 1/2. All likelihood math is done in log space; the
 * binomial coefficient cancels in the ratio and is never formed.
 */

#include <iosfwd>
#include <string>
#include <vector>

#include "tp/types.hpp"

namespace tp {

class BinaryReadModel {
public:
    /// Throws unless word_length >= 1 and 0 < error_rate < 0.5 (the
    /// endpoints make the ratio singular or non-identifiable).
    BinaryReadModel(int word_length, double error_rate);

    int word_length() const { return length_; }
    double error_rate() const { return error_rate_; }
    /// Per-bit same-cluster mismatch probability x = 2 p_e (1 - p_e).
    double mismatch_rate() const { return x_; }

    /// dS(d) = log f1 - log f0 = -L log 2 - d log x - (L-d) log(1-x).
    /// Strictly increasing in d while x < 1/2.
    double delta_s_from_distance(int d) const;

    /// Hamming distance where dS crosses zero (real-valued).
    double decision_distance() const;

    // Full per-distance likelihoods, binomial coefficient included.
    double log_f0(int d) const;
    double log_f1(int d) const;

private:
    void check_distance(int d) const;
    int length_;
    double error_rate_;
    double x_;
    double log_x_;
    double log_1mx_;
};

/// N binary words of uniform length, bit-packed; hamming distances via
/// word-wise popcount.
class ReadSet {
public:
    ReadSet() = default;

    static ReadSet from_strings(const std::vector<std::string>& rows);

    /// Plain-text format: one read of '0'/'1' per line, uniform length;
    /// blank lines and lines starting with '#' ignored. Errors carry the
    /// 1-based line number.
    static ReadSet parse(std::istream& in);
    static ReadSet load(const std::string& path);

    void append_bits(const std::vector<bool>& bits);

    int size() const { return static_cast<int>(count_); }
    int length() const { return length_; }
    bool empty() const { return count_ == 0; }

    int hamming(int i, int j) const;
    bool bit(int read, int pos) const;
    std::string to_string(int read) const;

private:
    std::size_t words_per_read() const { return (static_cast<std::size_t>(length_) + 63) / 64; }
    int length_ = -1;
    std::size_t count_ = 0;
    std::vector<std::uint64_t> bits_;
};

/// dS_ij from pairwise hamming distances. Symmetric by construction.
ScoreMatrix score_matrix_from_reads(const BinaryReadModel& model, const ReadSet& reads);

/// Numeric CSV, N rows x N cols, '.' decimal separator; optional header
/// row skipped via flag. NaN/inf entries and asymmetry beyond 1e-9 are
/// rejected with row:col positions; smaller asymmetry is symmetrized by
/// averaging.
ScoreMatrix parse_score_matrix(std::istream& in, bool skip_header = false);
ScoreMatrix load_score_matrix(const std::string& path, bool skip_header = false);

}  // namespace tp

#endif  // TP_MODELS_HPP
