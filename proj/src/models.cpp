#include "tp/models.hpp"

#include <bit>
#include <cmath>
#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>

namespace tp {

namespace {

double log_choose(int n, int k) {
    return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

[[noreturn]] void parse_fail(std::size_t line, const std::string& what) {
    throw std::invalid_argument("line " + std::to_string(line) + ": " + what);
}

}  // namespace

BinaryReadModel::BinaryReadModel(int word_length, double error_rate)
    : length_(word_length), error_rate_(error_rate) {
    if (word_length < 1)
        throw std::invalid_argument("BinaryReadModel: word_length must be >= 1");
    if (!(error_rate > 0.0 && error_rate < 0.5))
        throw std::invalid_argument("BinaryReadModel: error_rate must be in (0, 0.5)");
    x_ = 2.0 * error_rate * (1.0 - error_rate);
    log_x_ = std::log(x_);
    log_1mx_ = std::log1p(-x_);
}

void BinaryReadModel::check_distance(int d) const {
    if (d < 0 || d > length_)
        throw std::invalid_argument("BinaryReadModel: distance out of [0, L]");
}

double BinaryReadModel::delta_s_from_distance(int d) const {
    check_distance(d);
    return -length_ * std::log(2.0) - d * log_x_ - (length_ - d) * log_1mx_;
}

double BinaryReadModel::decision_distance() const {
    return length_ * (std::log(2.0) + log_1mx_) / (log_1mx_ - log_x_);
}

double BinaryReadModel::log_f0(int d) const {
    check_distance(d);
    return log_choose(length_, d) + d * log_x_ + (length_ - d) * log_1mx_;
}

double BinaryReadModel::log_f1(int d) const {
    check_distance(d);
    return log_choose(length_, d) - length_ * std::log(2.0);
}

ReadSet ReadSet::from_strings(const std::vector<std::string>& rows) {
    ReadSet set;
    std::size_t line = 0;
    for (const auto& row : rows) {
        ++line;
        std::vector<bool> bits;
        bits.reserve(row.size());
        for (char c : row) {
            if (c == '0') bits.push_back(false);
            else if (c == '1') bits.push_back(true);
            else parse_fail(line, std::string("invalid character '") + c + "' in read");
        }
        if (bits.empty()) parse_fail(line, "empty read");
        if (set.length_ >= 0 && static_cast<int>(bits.size()) != set.length_)
            parse_fail(line, "read length differs from previous reads");
        set.append_bits(bits);
    }
    return set;
}

ReadSet ReadSet::parse(std::istream& in) {
    std::vector<std::string> rows;
    std::vector<std::size_t> lineOf;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        rows.push_back(line);
        lineOf.push_back(lineno);
    }
    try {
        return from_strings(rows);
    } catch (const std::invalid_argument& e) {
        // from_strings reports indices into rows; remap to file lines.
        std::string msg = e.what();
        auto pos = msg.find(':');
        if (msg.rfind("line ", 0) == 0 && pos != std::string::npos) {
            std::size_t idx = std::stoull(msg.substr(5, pos - 5));
            if (idx >= 1 && idx <= lineOf.size())
                parse_fail(lineOf[idx - 1], msg.substr(pos + 2));
        }
        throw;
    }
}

ReadSet ReadSet::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open reads file: " + path);
    try {
        return parse(in);
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument(path + ": " + e.what());
    }
}

void ReadSet::append_bits(const std::vector<bool>& bits) {
    if (length_ < 0) length_ = static_cast<int>(bits.size());
    if (static_cast<int>(bits.size()) != length_)
        throw std::invalid_argument("ReadSet: read length mismatch");
    std::size_t base = bits_.size();
    bits_.resize(base + words_per_read(), 0);
    for (int p = 0; p < length_; ++p)
        if (bits[p]) bits_[base + p / 64] |= (std::uint64_t{1} << (p % 64));
    ++count_;
}

int ReadSet::hamming(int i, int j) const {
    const std::size_t w = words_per_read();
    const std::uint64_t* a = bits_.data() + i * w;
    const std::uint64_t* b = bits_.data() + j * w;
    int d = 0;
    for (std::size_t q = 0; q < w; ++q) d += std::popcount(a[q] ^ b[q]);
    return d;
}

bool ReadSet::bit(int read, int pos) const {
    return (bits_[read * words_per_read() + pos / 64] >> (pos % 64)) & 1u;
}

std::string ReadSet::to_string(int read) const {
    std::string out(length_, '0');
    for (int p = 0; p < length_; ++p)
        if (bit(read, p)) out[p] = '1';
    return out;
}

ScoreMatrix score_matrix_from_reads(const BinaryReadModel& model, const ReadSet& reads) {
    if (reads.empty()) throw std::invalid_argument("score_matrix_from_reads: no reads");
    if (reads.length() != model.word_length())
        throw std::invalid_argument("score_matrix_from_reads: read length differs from model");
    const int n = reads.size();
    ScoreMatrix scores(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            scores.set(i, j, model.delta_s_from_distance(reads.hamming(i, j)));
    return scores;
}

ScoreMatrix parse_score_matrix(std::istream& in, bool skip_header) {
    std::vector<std::vector<double>> rows;
    std::string line;
    std::size_t lineno = 0;
    bool headerPending = skip_header;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        if (headerPending) {
            headerPending = false;
            continue;
        }
        std::vector<double> row;
        std::stringstream ss(line);
        std::string cell;
        std::size_t col = 0;
        while (std::getline(ss, cell, ',')) {
            ++col;
            std::size_t consumed = 0;
            double v = 0.0;
            try {
                v = std::stod(cell, &consumed);
            } catch (const std::exception&) {
                parse_fail(lineno, "column " + std::to_string(col) + ": not a number: '" + cell + "'");
            }
            while (consumed < cell.size() && std::isspace(static_cast<unsigned char>(cell[consumed])))
                ++consumed;
            if (consumed != cell.size())
                parse_fail(lineno, "column " + std::to_string(col) + ": trailing junk: '" + cell + "'");
            if (!std::isfinite(v))
                parse_fail(lineno, "column " + std::to_string(col) + ": non-finite entry");
            row.push_back(v);
        }
        if (row.empty()) parse_fail(lineno, "empty row");
        if (!rows.empty() && row.size() != rows.front().size())
            parse_fail(lineno, "ragged row: expected " + std::to_string(rows.front().size()) +
                                " columns, got " + std::to_string(row.size()));
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw std::invalid_argument("score matrix: no data points");
    const std::size_t n = rows.size();
    if (rows.front().size() != n)
        throw std::invalid_argument("score matrix: not square (" + std::to_string(n) + " rows, " +
                                    std::to_string(rows.front().size()) + " columns)");
    constexpr double kAsymTol = 1e-9;
    ScoreMatrix scores(static_cast<int>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            double a = rows[i][j];
            double b = rows[j][i];
            if (std::abs(a - b) > kAsymTol)
                throw std::invalid_argument(
                    "score matrix: asymmetry at (" + std::to_string(i) + "," + std::to_string(j) +
                    "): " + std::to_string(a) + " vs " + std::to_string(b));
            scores.set(static_cast<int>(i), static_cast<int>(j), 0.5 * (a + b));
        }
    }
    return scores;
}

ScoreMatrix load_score_matrix(const std::string& path, bool skip_header) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open score matrix file: " + path);
    try {
        return parse_score_matrix(in, skip_header);
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument(path + ": " + e.what());
    }
}

}  // namespace tp
