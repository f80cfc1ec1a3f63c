#include "parrondo/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "parrondo/montecarlo.hpp"
#include "parrondo/protocols.hpp"
#include "parrondo/rng.hpp"

namespace parrondo {

namespace {

std::string fmt_trials(int trials) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%d trials", trials);
    return buf;
}

double draw_prob(Xoshiro256pp& rng, double lo = 0.01, double hi = 0.99) {
    return lo + (hi - lo) * rng.uniform01();
}

CoinSet draw_coins(Xoshiro256pp& rng) {
    return CoinSet(draw_prob(rng), draw_prob(rng), draw_prob(rng), draw_prob(rng));
}

CheckResult check_properness_theta(const VerifyOptions& o) {
    Xoshiro256pp rng(stream_seed(o.seed, 1));
    double worst = 0.0;
    for (int t = 0; t < o.trials; ++t) {
        const GameSpec g{draw_coins(rng), "g"};
        const double classical = gain_probability(g.coins, stationary_closed_form(g.coins));
        const double quantum = run_proper(g, EmbeddingKind::type1()).p_gain + o.perturb;
        worst = std::max(worst, std::abs(quantum - classical));
    }
    return {"properness-theta", worst <= 1e-12, worst, fmt_trials(o.trials)};
}

CheckResult check_properness_superposed(const VerifyOptions& o) {
    Xoshiro256pp rng(stream_seed(o.seed, 2));
    double worst = 0.0;
    double worst_defect = 0.0;
    for (int t = 0; t < o.trials; ++t) {
        const GameSpec g1{draw_coins(rng), "g1"};
        const GameSpec g2{draw_coins(rng), "g2"};
        const double r = rng.uniform01();
        const GameSpec m = mix(g1, g2, MixWeight(r));
        const double classical = gain_probability(m.coins, stationary_closed_form(m.coins));
        const Multiplexer sigma = superposed_multiplexer(
            embed_game(g1, EmbeddingKind::type1()), embed_game(g2, EmbeddingKind::type2()),
            SuperpositionWeights::from_probability(r));
        worst_defect = std::max(worst_defect, unitarity_defect(sigma));
        const double quantum =
            run_superposed(g1, g2, r, EmbeddingKind::type1(), EmbeddingKind::type2()).p_gain;
        worst = std::max(worst, std::abs(quantum - classical));
    }
    const bool pass = worst <= 1e-12 && worst_defect <= 1e-12;
    char buf[64];
    std::snprintf(buf, sizeof buf, ", max sigma defect %.3g", worst_defect);
    return {"properness-superposed", pass, std::max(worst, worst_defect),
            fmt_trials(o.trials) + std::string(buf)};
}

CheckResult check_properness_second(const VerifyOptions& o) {
    Xoshiro256pp rng(stream_seed(o.seed, 3));
    double worst = 0.0;
    for (int t = 0; t < o.trials; ++t) {
        const GameSpec g1{draw_coins(rng), "g1"};
        const GameSpec g2{draw_coins(rng), "g2"};
        const double r = rng.uniform01();
        const GameSpec m = mix(g1, g2, MixWeight(r));
        const double classical = gain_probability(m.coins, stationary_closed_form(m.coins));
        const double second = run_second_quantization(g1, g2, r, EmbeddingKind::type1()).p_gain;
        const double superposed =
            run_superposed(g1, g2, r, EmbeddingKind::type1(), EmbeddingKind::type2()).p_gain;
        worst = std::max({worst, std::abs(second - classical), std::abs(second - superposed)});
    }
    return {"properness-second", worst <= 1e-12, worst, fmt_trials(o.trials)};
}

CheckResult check_special_ab(const VerifyOptions& o) {
    Xoshiro256pp rng(stream_seed(o.seed, 4));
    double worst = 0.0;
    for (int t = 0; t < o.trials; ++t) {
        const double p = draw_prob(rng);
        const GameSpec b{draw_coins(rng), "B"};
        const GameSpec m = mix(b, lift_history_free(p), MixWeight(0.5));
        const double classical = gain_probability(m.coins, stationary_closed_form(m.coins));
        const double quantum = run_special_AB(p, b, EmbeddingKind::type1()).p_gain;
        worst = std::max(worst, std::abs(quantum - classical));
    }
    return {"special-ab", worst <= 1e-12, worst, fmt_trials(o.trials)};
}

CheckResult check_unitarity(const VerifyOptions& o) {
    Xoshiro256pp rng(stream_seed(o.seed, 5));
    const int trials = std::max(1, o.trials / 10);
    double worst = 0.0;
    bool same_type_detected = true;
    for (int t = 0; t < trials; ++t) {
        const int k = static_cast<int>(rng.next() % 6);
        const CoinSet coins = draw_coins(rng);
        for (int j = 0; j < 4; ++j) {
            worst = std::max(worst,
                             unitarity_defect(embed_coin(coins[j], EmbeddingKind::type1(sixth_root(k)))));
            worst = std::max(worst,
                             unitarity_defect(embed_coin(coins[j], EmbeddingKind::type2(sixth_root(k)))));
        }
        // same-type superposition with nondegenerate coins must be caught
        const GameSpec g{coins, "g"};
        const auto m1 = embed_game(g, EmbeddingKind::type1());
        try {
            superposed_multiplexer(m1, m1, SuperpositionWeights::from_probability(0.5));
            same_type_detected = false;
        } catch (const unitarity_error&) {
        }
    }
    const bool pass = worst <= 1e-12 && same_type_detected;
    return {"unitarity", pass, worst,
            fmt_trials(trials) +
                std::string(same_type_detected ? ", same-type superposition rejected"
                                               : ", same-type superposition NOT rejected")};
}

CheckResult check_stationary_oracle(const VerifyOptions& o) {
    Xoshiro256pp rng(stream_seed(o.seed, 6));
    double worst_diff = 0.0;
    double worst_resid = 0.0;
    for (int t = 0; t < o.trials; ++t) {
        const CoinSet c = draw_coins(rng);
        const HistoryDistribution closed = stationary_closed_form(c).normalized();
        const TransitionMatrix x = transition_matrix(c);
        const HistoryDistribution solved = stationary_solve(x);
        for (int j = 0; j < 4; ++j) {
            worst_diff = std::max(worst_diff, std::abs(closed[j] - solved[j]));
        }
        for (int row = 0; row < 4; ++row) {
            double acc = -closed[row];
            for (int col = 0; col < 4; ++col) acc += x(row, col) * closed[col];
            worst_resid = std::max(worst_resid, std::abs(acc));
        }
    }
    const bool pass = worst_diff <= 1e-10 && worst_resid <= 1e-12;
    char buf[64];
    std::snprintf(buf, sizeof buf, ", max |closed-solved| %.3g", worst_diff);
    return {"stationary-oracle", pass, std::max(worst_diff, worst_resid),
            fmt_trials(o.trials) + std::string(buf)};
}

CheckResult check_gain_identity(const VerifyOptions& o) {
    Xoshiro256pp rng(stream_seed(o.seed, 7));
    double worst = 0.0;
    for (int t = 0; t < o.trials; ++t) {
        const CoinSet c = draw_coins(rng);
        const double ratio = gain_probability(c, stationary_closed_form(c));
        const double closed = classify(c).p_gain;
        worst = std::max(worst, std::abs(ratio - closed));
    }
    return {"gain-identity", worst <= 1e-12, worst, fmt_trials(o.trials)};
}

CheckResult check_eta_invariance(const VerifyOptions& o) {
    Xoshiro256pp rng(stream_seed(o.seed, 8));
    const int trials = std::min(100, o.trials);
    double worst = 0.0;
    for (int t = 0; t < trials; ++t) {
        const GameSpec g1{draw_coins(rng), "g1"};
        const GameSpec g2{draw_coins(rng), "g2"};
        const double r = rng.uniform01();
        double lo[4], hi[4];
        std::fill(std::begin(lo), std::end(lo), 2.0);
        std::fill(std::begin(hi), std::end(hi), -1.0);
        for (int k = 0; k < 6; ++k) {
            const EmbeddingKind e1 = EmbeddingKind::type1(sixth_root(k));
            const EmbeddingKind e2 = EmbeddingKind::type2(sixth_root(k));
            const double vals[4] = {
                run_proper(g1, e1).p_gain,
                run_superposed(g1, g2, r, e1, e2).p_gain,
                run_second_quantization(g1, g2, r, e1).p_gain,
                run_fna(g1, FnaInitial::maximally_entangled, e1).p_gain,
            };
            for (int i = 0; i < 4; ++i) {
                lo[i] = std::min(lo[i], vals[i]);
                hi[i] = std::max(hi[i], vals[i]);
            }
        }
        for (int i = 0; i < 4; ++i) worst = std::max(worst, hi[i] - lo[i]);
    }
    return {"eta-invariance", worst <= 1e-12, worst, fmt_trials(trials) + std::string(", 6 roots")};
}

CheckResult check_mix_restriction(const VerifyOptions& o) {
    Xoshiro256pp rng(stream_seed(o.seed, 9));
    const int trials = std::max(1, o.trials / 10);
    double worst = 0.0;
    for (int t = 0; t < trials; ++t) {
        const GameSpec g1{draw_coins(rng), "g1"};
        const GameSpec g2{draw_coins(rng), "g2"};
        const EmbeddingKind e1 = EmbeddingKind::type1();
        const EmbeddingKind e2 = EmbeddingKind::type2();
        worst = std::max(worst, std::abs(run_superposed(g1, g2, 1.0, e1, e2).p_gain -
                                         run_proper(g1, e1).p_gain));
        worst = std::max(worst, std::abs(run_superposed(g1, g2, 0.0, e1, e2).p_gain -
                                         run_proper(g2, e1).p_gain));
    }
    return {"mix-restriction", worst <= 1e-12, worst, fmt_trials(trials) + std::string(", r in {0,1}")};
}

CheckResult check_fna_gap(const VerifyOptions&) {
    const auto [a, b] = canonical_example(0.005);
    (void)a;
    const EmbeddingKind e = EmbeddingKind::type1();
    const double gap000 = improperness_gap(b, FnaInitial::basic000, e);
    const double gap_ghz = improperness_gap(b, FnaInitial::maximally_entangled, e);
    const GameSpec fair = lift_history_free(0.5);
    const double fair000 = improperness_gap(fair, FnaInitial::basic000, e);
    const double fair_ghz = improperness_gap(fair, FnaInitial::maximally_entangled, e);
    const bool pass = gap000 >= 0.19 && gap_ghz >= 0.09 && fair000 <= 1e-12 && fair_ghz <= 1e-12;
    char buf[128];
    std::snprintf(buf, sizeof buf, "gap |000>=%.6f, GHZ=%.6f, fair gaps %.2e/%.2e",
                  gap000, gap_ghz, fair000, fair_ghz);
    return {"fna-gap", pass, std::max(fair000, fair_ghz), buf};
}

CheckResult check_canonical_effect(const VerifyOptions&) {
    const auto [a, b] = canonical_example(0.005);
    const ParrondoReport rep = parrondo_effect(a, b, MixWeight(0.5));
    const bool values_ok = std::abs(rep.report_1.p_gain - 0.495) <= 1e-12 &&
                           std::abs(rep.report_2.p_gain - 0.49447513812154698) <= 1e-4 &&
                           std::abs(rep.report_mix.p_gain - 0.50093001627528477) <= 1e-4;
    const bool pass = values_ok && rep.effect;
    char buf[128];
    std::snprintf(buf, sizeof buf, "A'=%.6f B'=%.6f mix=%.6f effect=%d",
                  rep.report_1.p_gain, rep.report_2.p_gain, rep.report_mix.p_gain,
                  rep.effect ? 1 : 0);
    return {"canonical-effect", pass, 0.0, buf};
}

CheckResult check_montecarlo(const VerifyOptions& o) {
    const auto [a, b] = canonical_example(0.005);
    SimConfig cfg;
    cfg.steps = o.mc_steps;
    cfg.seed = stream_seed(o.seed, 10);
    double worst_sigmas = 0.0;

    const auto deviation = [&](const GameSpec& g, const TrajectoryStats& stats) {
        const double analytic = gain_probability(g.coins, stationary_closed_form(g.coins));
        const double sigma =
            std::sqrt(analytic * (1.0 - analytic) / static_cast<double>(cfg.steps));
        return std::abs(stats.empirical_p_gain - analytic) / sigma;
    };

    worst_sigmas = std::max(worst_sigmas, deviation(a, simulate(a, cfg)));
    cfg.seed = stream_seed(o.seed, 11);
    worst_sigmas = std::max(worst_sigmas, deviation(b, simulate(b, cfg)));
    cfg.seed = stream_seed(o.seed, 12);
    const GameSpec m = mix(a, b, MixWeight(0.5));
    worst_sigmas = std::max(worst_sigmas, deviation(m, simulate_mixed(a, b, 0.5, cfg)));

    char buf[96];
    std::snprintf(buf, sizeof buf, "%llu steps, worst deviation %.2f sigma",
                  static_cast<unsigned long long>(cfg.steps), worst_sigmas);
    return {"montecarlo", worst_sigmas <= 3.0, worst_sigmas, buf};
}

}  // namespace

std::vector<CheckResult> run_verification(const VerifyOptions& opts) {
    if (opts.trials <= 0) throw parameter_error("verification needs at least one trial");
    std::vector<CheckResult> results;
    results.push_back(check_properness_theta(opts));
    results.push_back(check_properness_superposed(opts));
    results.push_back(check_properness_second(opts));
    results.push_back(check_special_ab(opts));
    results.push_back(check_unitarity(opts));
    results.push_back(check_stationary_oracle(opts));
    results.push_back(check_gain_identity(opts));
    results.push_back(check_eta_invariance(opts));
    results.push_back(check_mix_restriction(opts));
    results.push_back(check_fna_gap(opts));
    results.push_back(check_canonical_effect(opts));
    results.push_back(check_montecarlo(opts));
    return results;
}

}  // namespace parrondo
