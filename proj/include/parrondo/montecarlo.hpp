#pragma once

#include <cstdint>
#include <vector>

#include "parrondo/games.hpp"

namespace parrondo {

struct SimConfig {
    /// Counted coin flips (after burn-in).
    std::uint64_t steps = 1'000'000;
    /// Uncounted flips discarded up front to wash out the initial history.
    std::uint64_t burn_in = 1'000;
    std::uint64_t seed = 0;
    History initial_history = History::GG;
};

struct TrajectoryStats {
    std::uint64_t steps = 0;
    std::uint64_t gains = 0;
    double empirical_p_gain = 0.0;
    /// L1-normalized fraction of counted steps spent in each history.
    HistoryDistribution occupancy;
    /// Net capital over the counted steps (+1 per gain, -1 per loss).
    std::int64_t final_capital = 0;
    std::uint64_t seed = 0;
};

/// Sequential coin-flip simulation of a history-dependent game; bit-exact
/// reproducible from (game, cfg).
TrajectoryStats simulate(const GameSpec& g, const SimConfig& cfg);

/// At each step g1 is chosen with probability r (one uniform draw, taken
/// before the coin flip draw), otherwise g2; statistically equivalent to
/// simulate(mix(g1, g2, r), cfg).
TrajectoryStats simulate_mixed(const GameSpec& g1, const GameSpec& g2, double r,
                               const SimConfig& cfg);

/// Independent replicas with per-stream seeds stream_seed(cfg.seed, k).
/// Parallel and serial execution produce identical results.
std::vector<TrajectoryStats> ensemble(const GameSpec& g, const SimConfig& cfg,
                                      int streams, bool parallel = true);

}  // namespace parrondo
