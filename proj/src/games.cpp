#include "parrondo/games.hpp"

#include <cmath>
#include <cstdio>

namespace parrondo {

namespace {

std::string fmt(const char* pattern, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, pattern, v);
    return buf;
}

}  // namespace

MixWeight::MixWeight(double value) : r(value) {
    if (!std::isfinite(r) || r < 0.0 || r > 1.0) {
        throw parameter_error("mix weight must lie in [0,1]");
    }
}

GameSpec lift_history_free(double p, std::string label) {
    CoinSet coins(p, p, p, p);
    if (label.empty()) label = fmt("A'[p=%g]", p);
    return GameSpec{coins, std::move(label)};
}

GameSpec mix(const GameSpec& g1, const GameSpec& g2, MixWeight r) {
    std::array<double, 4> q{};
    for (std::size_t j = 0; j < 4; ++j) {
        q[j] = r.r * g1.coins.p[j] + (1.0 - r.r) * g2.coins.p[j];
    }
    std::string label = fmt("mix[r=%g]{", r.r) + g1.label + ", " + g2.label + "}";
    return GameSpec{CoinSet(q), std::move(label)};
}

ParrondoReport parrondo_effect(const GameSpec& g1, const GameSpec& g2, MixWeight r,
                               double fairness_tol) {
    ParrondoReport rep;
    rep.report_1 = classify(g1.coins, fairness_tol);
    rep.report_2 = classify(g2.coins, fairness_tol);
    rep.report_mix = classify(mix(g1, g2, r).coins, fairness_tol);
    rep.effect = rep.report_1.cls == GameClass::losing &&
                 rep.report_2.cls == GameClass::losing &&
                 rep.report_mix.cls == GameClass::winning;
    return rep;
}

std::pair<GameSpec, GameSpec> canonical_example(double eps) {
    if (!std::isfinite(eps) || eps <= 0.0 || eps >= kCanonicalEpsLimit) {
        throw parameter_error("eps must lie in (0, 1/168) for the canonical example");
    }
    GameSpec a = lift_history_free(0.5 - eps, fmt("A'[eps=%g]", eps));
    CoinSet b_coins(0.7 - eps, 0.25 - eps, 0.25 - eps, 0.9 - eps);
    GameSpec b{b_coins, fmt("B'[eps=%g; reversed histories, LL coin 0.9-eps]", eps)};
    return {std::move(a), std::move(b)};
}

}  // namespace parrondo
