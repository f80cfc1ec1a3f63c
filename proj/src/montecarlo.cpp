#include "parrondo/montecarlo.hpp"

#include <cmath>

#include "parrondo/rng.hpp"

namespace parrondo {

namespace {

void require_config(const SimConfig& cfg) {
    if (cfg.steps == 0) throw parameter_error("simulation needs at least one counted step");
}

// Core loop shared by the plain and mixed simulations. `mixed` selects the
// per-step game draw; r is the probability of picking c1.
TrajectoryStats run(const CoinSet& c1, const CoinSet* c2, double r,
                    const SimConfig& cfg) {
    require_config(cfg);
    Xoshiro256pp rng(cfg.seed);
    int hist = static_cast<int>(cfg.initial_history);

    std::int64_t capital = 0;
    std::uint64_t gains = 0;
    std::array<std::uint64_t, 4> visits{};

    const std::uint64_t total = cfg.burn_in + cfg.steps;
    for (std::uint64_t t = 0; t < total; ++t) {
        const CoinSet* coins = &c1;
        if (c2 != nullptr && rng.uniform01() >= r) coins = c2;
        const bool counted = t >= cfg.burn_in;
        if (counted) ++visits[static_cast<std::size_t>(hist)];
        const bool gain = rng.uniform01() < coins->p[static_cast<std::size_t>(hist)];
        if (counted) {
            capital += gain ? 1 : -1;
            gains += gain ? 1 : 0;
        }
        hist = ((hist & 1) << 1) | (gain ? 0 : 1);
    }

    TrajectoryStats stats;
    stats.steps = cfg.steps;
    stats.gains = gains;
    stats.empirical_p_gain = static_cast<double>(gains) / static_cast<double>(cfg.steps);
    for (std::size_t j = 0; j < 4; ++j) {
        stats.occupancy.w[j] =
            static_cast<double>(visits[j]) / static_cast<double>(cfg.steps);
    }
    stats.occupancy.norm = Normalization::l1;
    stats.final_capital = capital;
    stats.seed = cfg.seed;
    return stats;
}

}  // namespace

TrajectoryStats simulate(const GameSpec& g, const SimConfig& cfg) {
    return run(g.coins, nullptr, 1.0, cfg);
}

TrajectoryStats simulate_mixed(const GameSpec& g1, const GameSpec& g2, double r,
                               const SimConfig& cfg) {
    MixWeight check(r);  // validate range
    return run(g1.coins, &g2.coins, check.r, cfg);
}

std::vector<TrajectoryStats> ensemble(const GameSpec& g, const SimConfig& cfg,
                                      int streams, bool parallel) {
    if (streams <= 0) throw parameter_error("ensemble needs at least one stream");
    std::vector<TrajectoryStats> out(static_cast<std::size_t>(streams));
    if (parallel) {
#pragma omp parallel for schedule(dynamic)
        for (int k = 0; k < streams; ++k) {
            SimConfig local = cfg;
            local.seed = stream_seed(cfg.seed, static_cast<std::uint64_t>(k));
            out[static_cast<std::size_t>(k)] = simulate(g, local);
        }
    } else {
        for (int k = 0; k < streams; ++k) {
            SimConfig local = cfg;
            local.seed = stream_seed(cfg.seed, static_cast<std::uint64_t>(k));
            out[static_cast<std::size_t>(k)] = simulate(g, local);
        }
    }
    return out;
}

}  // namespace parrondo
