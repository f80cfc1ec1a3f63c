#include <doctest.h>

#include <cmath>

#include "parrondo/games.hpp"
#include "parrondo/rng.hpp"

using namespace parrondo;

TEST_CASE("lift_history_free") {
    CHECK(classify(lift_history_free(0.5).coins).cls == GameClass::fair);

    const GameReport losing = classify(lift_history_free(0.495).coins);
    CHECK(losing.cls == GameClass::losing);
    CHECK(losing.p_gain == doctest::Approx(0.495).epsilon(1e-12));

    CHECK(classify(lift_history_free(1.0).coins).p_gain ==
          doctest::Approx(1.0).epsilon(1e-15));
    CHECK_THROWS_AS(lift_history_free(1.5), parameter_error);
}

TEST_CASE("mix restriction identities") {
    const GameSpec g1{CoinSet(0.9, 0.2, 0.3, 0.4), "g1"};
    const GameSpec g2{CoinSet(0.1, 0.8, 0.7, 0.6), "g2"};
    const GameSpec full = mix(g1, g2, MixWeight(1.0));
    const GameSpec none = mix(g1, g2, MixWeight(0.0));
    for (int j = 0; j < 4; ++j) {
        CHECK(full.coins[j] == g1.coins[j]);
        CHECK(none.coins[j] == g2.coins[j]);
    }
    CHECK_THROWS_AS(MixWeight(1.5), parameter_error);
}

TEST_CASE("mix example: equal blend of A' and B'") {
    const auto [ga, gb] = canonical_example(0.005);
    const GameSpec m = mix(ga, gb, MixWeight(0.5));
    CHECK(m.coins[0] == doctest::Approx(0.595).epsilon(1e-15));
    CHECK(m.coins[1] == doctest::Approx(0.37).epsilon(1e-15));
    CHECK(m.coins[2] == doctest::Approx(0.37).epsilon(1e-15));
    CHECK(m.coins[3] == doctest::Approx(0.695).epsilon(1e-15));
}

TEST_CASE("transition matrix of a mix is the mix of transition matrices") {
    Xoshiro256pp rng(43);
    for (int t = 0; t < 1000; ++t) {
        auto draw = [&] { return rng.uniform01(); };
        const GameSpec g1{CoinSet(draw(), draw(), draw(), draw()), "g1"};
        const GameSpec g2{CoinSet(draw(), draw(), draw(), draw()), "g2"};
        const double r = draw();
        const TransitionMatrix lhs = transition_matrix(mix(g1, g2, MixWeight(r)).coins);
        const TransitionMatrix t1 = transition_matrix(g1.coins);
        const TransitionMatrix t2 = transition_matrix(g2.coins);
        for (int row = 0; row < 4; ++row) {
            for (int col = 0; col < 4; ++col) {
                const double rhs = r * t1(row, col) + (1.0 - r) * t2(row, col);
                CHECK(std::abs(lhs(row, col) - rhs) <= 1e-15);
            }
        }
    }
}

TEST_CASE("canonical_example values") {
    SUBCASE("eps domain is enforced") {
        CHECK_THROWS_AS(canonical_example(0.0), parameter_error);
        CHECK_THROWS_AS(canonical_example(1.0 / 168.0), parameter_error);
        CHECK_THROWS_AS(canonical_example(-0.001), parameter_error);
    }

    SUBCASE("eps = 0.005 reproduces the frozen gains") {
        const auto [ga, gb] = canonical_example(0.005);
        CHECK(classify(ga.coins).p_gain == doctest::Approx(0.495).epsilon(1e-12));
        CHECK(classify(gb.coins).p_gain ==
              doctest::Approx(0.49447513812154698).epsilon(1e-12));
        const GameSpec m = mix(ga, gb, MixWeight(0.5));
        CHECK(classify(m.coins).p_gain ==
              doctest::Approx(0.50093001627528477).epsilon(1e-12));
    }

    SUBCASE("the eps -> 0 boundary coins are exactly fair") {
        // canonical_example itself excludes eps = 0; the underlying coins
        // have stationary weights (0.225, 0.27, 0.27, 0.225) and gain 1/2
        const CoinSet limit(0.7, 0.25, 0.25, 0.9);
        const HistoryDistribution d = stationary_closed_form(limit);
        CHECK(d[0] == doctest::Approx(0.225).epsilon(1e-15));
        CHECK(d[1] == doctest::Approx(0.27).epsilon(1e-15));
        CHECK(d.total() == doctest::Approx(0.99).epsilon(1e-15));
        CHECK(std::abs(gain_probability(limit, d) - 0.5) <= 1e-12);
    }
}

TEST_CASE("parrondo_effect") {
    const GameSpec fair = lift_history_free(0.5);
    CHECK_FALSE(parrondo_effect(fair, fair, MixWeight(0.5)).effect);

    const auto [ga, gb] = canonical_example(0.005);
    SUBCASE("equal mix shows the effect") {
        const ParrondoReport rep = parrondo_effect(ga, gb, MixWeight(0.5));
        CHECK(rep.report_1.cls == GameClass::losing);
        CHECK(rep.report_2.cls == GameClass::losing);
        CHECK(rep.report_mix.cls == GameClass::winning);
        CHECK(rep.effect);
    }

    SUBCASE("r = 0 restricts to the losing B'") {
        const ParrondoReport rep = parrondo_effect(ga, gb, MixWeight(0.0));
        CHECK(rep.report_mix.cls == GameClass::losing);
        CHECK_FALSE(rep.effect);
    }

    SUBCASE("the effect persists across small eps") {
        for (double eps : {1.0 / 1000.0, 1.0 / 500.0, 1.0 / 200.0}) {
            const auto [a, b] = canonical_example(eps);
            CHECK(parrondo_effect(a, b, MixWeight(0.5)).effect);
        }
    }
}

TEST_CASE("gain of a mix is not the mix of gains") {
    const auto [ga, gb] = canonical_example(0.005);
    const double pg_mix = classify(mix(ga, gb, MixWeight(0.5)).coins).p_gain;
    const double mixed_pg =
        0.5 * (classify(ga.coins).p_gain + classify(gb.coins).p_gain);
    CHECK(mixed_pg == doctest::Approx(0.49473756906077349).epsilon(1e-12));
    CHECK(std::abs(pg_mix - mixed_pg) > 1e-3);
}
