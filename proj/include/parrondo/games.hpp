#pragma once

#include <string>
#include <utility>

#include "parrondo/markov.hpp"

namespace parrondo {

/// Largest epsilon for which the canonical example exhibits the effect.
inline constexpr double kCanonicalEpsLimit = 1.0 / 168.0;

struct GameSpec {
    CoinSet coins;
    std::string label;
};

/// Probability of playing the first game at each step.
struct MixWeight {
    double r = 0.5;
    MixWeight() = default;
    explicit MixWeight(double value);
};

struct ParrondoReport {
    GameReport report_1;
    GameReport report_2;
    GameReport report_mix;
    /// Both components losing and the mix winning.
    bool effect = false;
};

/// The history-free coin p, viewed as a history-dependent game that plays
/// the same coin for every history.
GameSpec lift_history_free(double p, std::string label = {});

/// Coinwise convex combination: coin j = r*(g1 coin j) + (1-r)*(g2 coin j).
/// The transition matrix of the result is the same convex combination of
/// the component matrices.
GameSpec mix(const GameSpec& g1, const GameSpec& g2, MixWeight r);

ParrondoReport parrondo_effect(const GameSpec& g1, const GameSpec& g2, MixWeight r,
                               double fairness_tol = kAlgebraTol);

/**
 * The original history-dependent Parrondo pair: A' plays the single coin
 * 1/2 - eps, B' plays the coins (7/10, 1/4, 1/4, 9/10) - eps. Coin values
 * are assigned with the original listing reversed across histories, so the
 * loss-loss history carries the 9/10 - eps coin; that is the assignment
 * under which B' is losing and the randomized A'B' sequence is winning.
 * Requires 0 < eps < 1/168.
 */
std::pair<GameSpec, GameSpec> canonical_example(double eps);

}  // namespace parrondo
