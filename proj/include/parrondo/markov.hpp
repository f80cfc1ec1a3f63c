#pragma once

#include <array>
#include <string>

#include "parrondo/errors.hpp"

namespace parrondo {

/// Tolerance for exact algebraic identities in double precision.
inline constexpr double kAlgebraTol = 1e-12;

/// Two-stage histories, indexed by outcome bits (0 = gain):
/// index = 2*(outcome at t-2) + (outcome at t-1).
enum class History : int { GG = 0, GL = 1, LG = 2, LL = 3 };

/// Gain probabilities of the four history-selected coins.
/// p[0] is the coin for history gain-gain, ..., p[3] for loss-loss.
struct CoinSet {
    std::array<double, 4> p{};

    CoinSet() = default;
    CoinSet(double p_gg, double p_gl, double p_lg, double p_ll);
    explicit CoinSet(const std::array<double, 4>& probs);

    double operator[](int j) const { return p[static_cast<std::size_t>(j)]; }
};

/// Column-stochastic 4x4 transition matrix of the history process.
struct TransitionMatrix {
    /// a[row][col]; column col sums to 1.
    std::array<std::array<double, 4>, 4> a{};

    double operator()(int row, int col) const {
        return a[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)];
    }
};

enum class Normalization { raw, l1 };

/// Nonnegative weights over the four histories.
struct HistoryDistribution {
    std::array<double, 4> w{};
    Normalization norm = Normalization::raw;

    double operator[](int j) const { return w[static_cast<std::size_t>(j)]; }
    double total() const;
    /// L1-normalized copy. Throws degenerate_error if all weights vanish.
    HistoryDistribution normalized() const;

    static HistoryDistribution uniform();
};

enum class GameClass { winning, fair, losing };

std::string to_string(GameClass c);

/// Long-run classification of a game plus the x/y diagnostics
/// (p_gain = 1/(2 + x/y) when the diagnostics are defined).
struct GameReport {
    double p_gain = 0.0;
    double x = 0.0;
    double y = 0.0;
    bool has_xy = false;
    GameClass cls = GameClass::fair;
};

/// Image of the game's payoff map: (w1 p1, w1 (1-p1), ..., w4 (1-p4)) over a
/// normalized history distribution. Gain components sit at even indices.
struct PayoffProfile {
    std::array<double, 8> v{};
    /// The input distribution had to be L1-normalized first.
    bool renormalized = false;

    double operator[](int k) const { return v[static_cast<std::size_t>(k)]; }
};

TransitionMatrix transition_matrix(const CoinSet& c);

/// Closed-form stationary state, returned as raw weights
/// (p3 p4, p4 (1-p1), p4 (1-p1), (1-p1)(1-p2)); total() is the L1
/// normalization constant. Throws degenerate_error when all weights vanish
/// (e.g. p1 = 1 and p4 = 0).
HistoryDistribution stationary_closed_form(const CoinSet& c);

/**
 * Independent stationary-state solver: extracts the null space of (X - I)
 * by Gauss-Jordan elimination and returns the L1-normalized fixed point.
 * A reducible chain (null space dimension > 1) throws degenerate_error
 * reporting that dimension.
 */
HistoryDistribution stationary_solve(const TransitionMatrix& t);

/// (sum_j w_j p_j) / (sum_j w_j); identical for raw and normalized weights.
double gain_probability(const CoinSet& c, const HistoryDistribution& d);

/// x = (1-p1)(1-p2) - p3 p4, y = p4 (p3 + 1 - p1); winning iff
/// p_gain > 1/2 + tol, losing iff < 1/2 - tol. When y <= 0 the diagnostics
/// are omitted and p_gain falls back to the stationary-weighted average.
GameReport classify(const CoinSet& c, double fairness_tol = kAlgebraTol);

PayoffProfile payoff_profile(const CoinSet& c, const HistoryDistribution& d);

}  // namespace parrondo
