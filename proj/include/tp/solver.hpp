#ifndef TP_SOLVER_HPP
#define TP_SOLVER_HPP

/**
 * @file solver.hpp
 * @brief Damped max-sum message passing over the transitivity factor graph.
 *
 * Each unordered triple (i,j,k) carries a hard constraint forbidding
 * colorings with exactly one red edge. The solver tracks only message
 * differences A_ijk (red minus blue) sent from constraint (i,j,k) to edge
 * (i,j), and the accumulated matrix B_ij = dS_ij + sum_k A_ijk whose sign
 * determines the current best hypothesis.
 *
 * The per-iteration cost and memory are both O(N^3). Messages do not
 * settle to fixed values; the stopping rule watches the signs of B
 * instead: the run ends once the projected number of iterations until any
 * B entry changes sign exceeds a goal M.
 */

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <stdexcept>
#include <vector>

#include "tp/parallel.hpp"
#include "tp/types.hpp"

namespace tp {

/// Message difference update for one triple, from the two incoming edge
/// beliefs u = B_jk - A_jki and v = B_ki - A_kij:
///
///     delta_a(u, v) = max(u+v, u, v) - max(0, u+v)
///
/// Semantics: when both neighbors lean red (u,v > 0) the constraint says
/// nothing (0); when both lean blue it reinforces blue (max(u,v) <= 0);
/// when they disagree it pushes this edge red by min(|u|,|v|).
inline double delta_a(double u, double v) {
    double s = u + v;
    double hi = std::max(s, std::max(u, v));
    return hi - std::max(0.0, s);
}

/// Dense tensor of message differences A_ijk, symmetric in (i,j).
/// Storage is edge-major: one length-n row per unordered edge, indexed by
/// the third point k. Slots with k in {i,j} are held at zero.
template <typename Real>
class BasicMessageTensor {
public:
    explicit BasicMessageTensor(int n)
        : n_(n), a_(edge_count(n) * static_cast<std::size_t>(n), Real(0)) {
        if (n < 1) throw std::invalid_argument("MessageTensor: n must be >= 1");
    }

    int size() const { return n_; }

    Real at(int i, int j, int k) const {
        if (i == j || k == i || k == j) return Real(0);
        if (i > j) std::swap(i, j);
        return a_[edge_index(n_, i, j) * n_ + k];
    }

    void set(int i, int j, int k, Real value) {
        if (i == j || k == i || k == j)
            throw std::invalid_argument("MessageTensor::set: indices must be distinct");
        if (!std::isfinite(static_cast<double>(value)))
            throw std::invalid_argument("MessageTensor::set: non-finite value");
        if (i > j) std::swap(i, j);
        a_[edge_index(n_, i, j) * n_ + k] = value;
    }

    Real* row(std::size_t edge) { return a_.data() + edge * n_; }
    const Real* row(std::size_t edge) const { return a_.data() + edge * n_; }

    std::size_t value_count() const { return a_.size(); }

private:
    int n_;
    std::vector<Real> a_;
};

using MessageTensor = BasicMessageTensor<double>;

/// Update for the message from constraint (i,j,k) to edge (i,j), reading
/// the current B snapshot and incoming messages.
template <typename Real>
double delta_a(const std::vector<Real>& bDense, const BasicMessageTensor<Real>& a,
               int i, int j, int k) {
    const int n = a.size();
    double u = static_cast<double>(bDense[static_cast<std::size_t>(j) * n + k]) -
               static_cast<double>(a.at(j, k, i));
    double v = static_cast<double>(bDense[static_cast<std::size_t>(k) * n + i]) -
               static_cast<double>(a.at(k, i, j));
    return delta_a(u, v);
}

/// B_ij = dS_ij + sum_{k != i,j} A_ijk. With A == 0 this is dS exactly.
template <typename Real>
std::vector<double> compute_b(const ScoreMatrix& scores, const BasicMessageTensor<Real>& a) {
    const int n = scores.size();
    if (a.size() != n) throw std::invalid_argument("compute_b: dimension mismatch");
    std::vector<double> b(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const Real* row = a.row(edge_index(n, i, j));
            Real sum = Real(0);
            for (int k = 0; k < n; ++k) sum += row[k];  // k in {i,j} slots are 0
            double bij = scores.at(i, j) + static_cast<double>(sum);
            b[static_cast<std::size_t>(i) * n + j] = bij;
            b[static_cast<std::size_t>(j) * n + i] = bij;
        }
    }
    return b;
}

struct SolverConfig {
    double lambda = 0.5;          ///< damping, in (0,1)
    int convergence_goal = 1000;  ///< stop once the sign-flip horizon m exceeds this
    int max_iterations = 10000;   ///< safety cap; hitting it reports converged=false
    double epsilon_div = 1e-12;   ///< |dB| below this cannot flip a sign
    int threads = 1;              ///< worker threads for the sweep (0 = hardware)
    bool use_float32 = false;     ///< store messages as float (halves tensor memory)

    void validate() const {
        if (!(lambda > 0.0 && lambda < 1.0))
            throw std::invalid_argument("SolverConfig: lambda must be in (0,1)");
        if (convergence_goal < 1)
            throw std::invalid_argument("SolverConfig: convergence_goal must be >= 1");
        if (max_iterations < 1)
            throw std::invalid_argument("SolverConfig: max_iterations must be >= 1");
        if (!(epsilon_div > 0.0))
            throw std::invalid_argument("SolverConfig: epsilon_div must be > 0");
    }
};

struct SolverResult {
    explicit SolverResult(HypothesisMatrix h) : h_star(std::move(h)) {}

    HypothesisMatrix h_star;
    Partition partition;          ///< blue-component clustering of h_star
    TripleVerdict violations;     ///< transitivity scan of h_star
    int iterations = 0;
    bool converged = false;
    bool fast_path = false;       ///< thresholded solution was already transitive
    std::optional<double> objective_value;  ///< F(h_star); nullopt when non-transitive
    double repaired_objective = 0.0;        ///< F of the blue-component partition
    std::vector<double> b_final;  ///< dense N x N B matrix (diagnostic)
    double min_abs_b = 0.0;       ///< smallest |B_ij| margin at extraction
};

/// Per-edge thresholding of dS at zero: blue iff dS < 0. Optimal whenever
/// it happens to be transitive; in general not a valid clustering.
HypothesisMatrix no_prior_solution(const ScoreMatrix& scores);

namespace detail {

/// H from the sign of B; the tie B == 0 goes red.
inline std::uint8_t threshold_red(double b) { return b >= 0.0 ? 1 : 0; }

}  // namespace detail

/// Synchronous sweeps against a fixed B snapshot. The three messages of
/// an unordered triple are read and written by that triple alone, so the
/// in-place tiled update is an exact Jacobi sweep and is deterministic
/// for any thread count (B row sums always run in fixed k order).
template <typename Real>
class BasicSolverState {
public:
    BasicSolverState(const ScoreMatrix& scores, const SolverConfig& cfg)
        : n_(scores.size()),
          cfg_(cfg),
          a_(scores.size()),
          b_(static_cast<std::size_t>(scores.size()) * scores.size(), Real(0)),
          b_prev_(static_cast<std::size_t>(scores.size()) * scores.size(), Real(0)),
          ds_(static_cast<std::size_t>(scores.size()) * scores.size(), Real(0)) {
        cfg_.validate();
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j)
                ds_[flat(i, j)] = static_cast<Real>(scores.at(i, j));
        refresh_b();
    }

    int size() const { return n_; }

    /// Sign-flip horizon from the last step: the smallest -B/dB over
    /// edges whose B and dB disagree in sign (and |dB| >= epsilon_div).
    /// +infinity when no entry is headed for a flip.
    double step() {
        const Real lambda = static_cast<Real>(cfg_.lambda);
        // One unordered triple i<j<k owns three tensor elements, each
        // read and written by that triple alone: A_ij,k, A_jk,i, A_ki,j.
        // Updating the three together in place is therefore an exact
        // synchronous sweep against the B snapshot, race-free under any
        // partition of the triples across workers. Tiling keeps the two
        // gathered streams cache-resident.
        constexpr int kTile = 32;
        const int tiles = (n_ + kTile - 1) / kTile;
        parallel_for(static_cast<std::size_t>(tiles), cfg_.threads,
                     [&](std::size_t t0, std::size_t t1) {
            for (std::size_t ti = t0; ti < t1; ++ti) {
                const int iEnd = std::min(n_, static_cast<int>(ti + 1) * kTile);
                for (int tj = static_cast<int>(ti); tj < tiles; ++tj) {
                    const int jEnd = std::min(n_, (tj + 1) * kTile);
                    for (int tk = tj; tk < tiles; ++tk) {
                        const int kEnd = std::min(n_, (tk + 1) * kTile);
                        for (int i = static_cast<int>(ti) * kTile; i < iEnd; ++i) {
                            for (int j = std::max(tj * kTile, i + 1); j < jEnd; ++j) {
                                Real* rowIJ = a_.row(edge_index(n_, i, j));
                                const Real bij = b_at(i, j);
                                const int kBegin = std::max(tk * kTile, j + 1);
                                // rows for edges (j,k) and (i,k) sit n
                                // apart for consecutive k
                                Real* rowJK = kBegin < kEnd
                                                  ? a_.row(edge_index(n_, j, kBegin))
                                                  : nullptr;
                                Real* rowIK = kBegin < kEnd
                                                  ? a_.row(edge_index(n_, i, kBegin))
                                                  : nullptr;
                                for (int k = kBegin; k < kEnd;
                                     ++k, rowJK += n_, rowIK += n_) {
                                    Real r1 = bij - rowIJ[k];
                                    Real r2 = b_at(j, k) - rowJK[i];
                                    Real r3 = b_at(i, k) - rowIK[j];
                                    rowIJ[k] = (Real(1) - lambda) * rowIJ[k] +
                                               lambda * pair_update(r2, r3);
                                    rowJK[i] = (Real(1) - lambda) * rowJK[i] +
                                               lambda * pair_update(r3, r1);
                                    rowIK[j] = (Real(1) - lambda) * rowIK[j] +
                                               lambda * pair_update(r1, r2);
                                }
                            }
                        }
                    }
                }
            }
        });
        b_prev_.swap(b_);
        refresh_b();
        double m = std::numeric_limits<double>::infinity();
        for (int i = 0; i < n_; ++i) {
            for (int j = i + 1; j < n_; ++j) {
                double db = static_cast<double>(b_at(i, j)) -
                            static_cast<double>(b_prev_[flat(i, j)]);
                double b = static_cast<double>(b_prev_[flat(i, j)]);
                if (std::abs(db) >= cfg_.epsilon_div) {
                    double horizon = -b / db;
                    if (horizon >= 0.0 && horizon < m) m = horizon;
                }
            }
        }
        ++iterations_;
        return m;
    }

    int iterations() const { return iterations_; }

    const BasicMessageTensor<Real>& messages() const { return a_; }

    /// Dense B matrix recomputed from the current messages.
    std::vector<double> current_b() const {
        std::vector<double> out(static_cast<std::size_t>(n_) * n_, 0.0);
        for (int i = 0; i < n_; ++i) {
            for (int j = i + 1; j < n_; ++j) {
                const Real* row = a_.row(edge_index(n_, i, j));
                Real sum = Real(0);
                for (int k = 0; k < n_; ++k) sum += row[k];
                double bij = static_cast<double>(ds_[flat(i, j)]) + static_cast<double>(sum);
                out[flat(i, j)] = bij;
                out[flat(j, i)] = bij;
            }
        }
        return out;
    }

    HypothesisMatrix current_hypothesis() const {
        std::vector<double> b = current_b();
        HypothesisMatrix h(n_);
        for (int i = 0; i < n_; ++i)
            for (int j = i + 1; j < n_; ++j)
                h.set(i, j, detail::threshold_red(b[flat(i, j)]));
        return h;
    }

    /// Bytes held by the working set; the O(N^3) message tensor dominates.
    std::size_t memory_bytes() const {
        return a_.value_count() * sizeof(Real) +
               (b_.size() + b_prev_.size() + ds_.size()) * sizeof(Real);
    }

private:
    std::size_t flat(int i, int j) const { return static_cast<std::size_t>(i) * n_ + j; }
    Real b_at(int i, int j) const { return b_[flat(i, j)]; }

    void refresh_b() {
        parallel_for(static_cast<std::size_t>(n_), cfg_.threads,
                     [&](std::size_t i0, std::size_t i1) {
            for (std::size_t i = i0; i < i1; ++i) {
                for (int j = static_cast<int>(i) + 1; j < n_; ++j) {
                    const Real* row = a_.row(edge_index(n_, static_cast<int>(i), j));
                    Real sum = Real(0);
                    for (int k = 0; k < n_; ++k) sum += row[k];
                    Real bij = ds_[flat(static_cast<int>(i), j)] + sum;
                    b_[flat(static_cast<int>(i), j)] = bij;
                }
            }
        });
        // mirror lower triangle
        for (int i = 0; i < n_; ++i)
            for (int j = i + 1; j < n_; ++j) b_[flat(j, i)] = b_[flat(i, j)];
    }

    static Real pair_update(Real u, Real v) {
        Real s = u + v;
        return std::max(s, std::max(u, v)) - std::max(Real(0), s);
    }

    int n_;
    SolverConfig cfg_;
    BasicMessageTensor<Real> a_;
    std::vector<Real> b_;
    std::vector<Real> b_prev_;
    std::vector<Real> ds_;
    int iterations_ = 0;
};

using SolverState = BasicSolverState<double>;

/// Full run: thresholding fast path, then damped sweeps until the
/// sign-flip horizon reaches cfg.convergence_goal or the iteration cap.
/// Non-convergence is a reported state, not an error.
SolverResult solve(const ScoreMatrix& scores, const SolverConfig& cfg = {});

}  // namespace tp

#endif  // TP_SOLVER_HPP
