#include <doctest.h>

#include <cmath>

#include "parrondo/markov.hpp"
#include "parrondo/rng.hpp"

using namespace parrondo;

namespace {

CoinSet random_coins(Xoshiro256pp& rng, double lo = 0.01, double hi = 0.99) {
    auto draw = [&] { return lo + (hi - lo) * rng.uniform01(); };
    return CoinSet(draw(), draw(), draw(), draw());
}

}  // namespace

TEST_CASE("CoinSet validates probabilities") {
    CHECK_THROWS_AS(CoinSet(1.1, 0.5, 0.5, 0.5), parameter_error);
    CHECK_THROWS_AS(CoinSet(-0.1, 0.5, 0.5, 0.5), parameter_error);
    CHECK_THROWS_AS(CoinSet(std::nan(""), 0.5, 0.5, 0.5), parameter_error);
}

TEST_CASE("transition_matrix layout") {
    SUBCASE("fair coins put 1/2 at the eight live slots") {
        const TransitionMatrix t = transition_matrix(CoinSet(0.5, 0.5, 0.5, 0.5));
        int live = 0;
        for (int r = 0; r < 4; ++r) {
            for (int c = 0; c < 4; ++c) {
                if (t(r, c) != 0.0) {
                    CHECK(t(r, c) == 0.5);
                    ++live;
                }
            }
        }
        CHECK(live == 8);
    }

    SUBCASE("deterministic gain concentrates the columns") {
        const TransitionMatrix t = transition_matrix(CoinSet(1.0, 1.0, 1.0, 1.0));
        CHECK(t(0, 0) == 1.0);
        CHECK(t(1, 0) == 0.0);
        CHECK(t(2, 1) == 1.0);
        CHECK(t(0, 2) == 1.0);
        CHECK(t(2, 3) == 1.0);
    }

    SUBCASE("example coins land at the pattern positions") {
        const CoinSet c(0.695, 0.245, 0.245, 0.895);
        const TransitionMatrix t = transition_matrix(c);
        CHECK(t(0, 0) == 0.695);
        CHECK(t(1, 0) == doctest::Approx(0.305).epsilon(1e-15));
        CHECK(t(0, 2) == 0.245);
        CHECK(t(2, 1) == 0.245);
        CHECK(t(2, 3) == 0.895);
        CHECK(t(3, 3) == doctest::Approx(0.105).epsilon(1e-15));
        // the eight structural zeros
        for (auto [r, cidx] : {std::pair{0, 1}, {0, 3}, {1, 1}, {1, 3},
                               {2, 0}, {2, 2}, {3, 0}, {3, 2}}) {
            CHECK(t(r, cidx) == 0.0);
        }
    }

    SUBCASE("columns are stochastic for random coins") {
        Xoshiro256pp rng(5);
        for (int i = 0; i < 100; ++i) {
            const TransitionMatrix t = transition_matrix(random_coins(rng, 0.0, 1.0));
            for (int c = 0; c < 4; ++c) {
                double s = 0.0;
                for (int r = 0; r < 4; ++r) s += t(r, c);
                CHECK(std::abs(s - 1.0) <= 1e-12);
            }
        }
    }
}

TEST_CASE("stationary_closed_form") {
    SUBCASE("fair coins give the uniform state") {
        const HistoryDistribution d = stationary_closed_form(CoinSet(0.5, 0.5, 0.5, 0.5));
        for (int j = 0; j < 4; ++j) CHECK(d[j] == 0.25);
        const HistoryDistribution n = d.normalized();
        for (int j = 0; j < 4; ++j) CHECK(n[j] == doctest::Approx(0.25).epsilon(1e-15));
    }

    SUBCASE("example coins reproduce the raw weights") {
        const HistoryDistribution d =
            stationary_closed_form(CoinSet(0.695, 0.245, 0.245, 0.895));
        CHECK(d[0] == doctest::Approx(0.219275).epsilon(1e-14));
        CHECK(d[1] == doctest::Approx(0.272975).epsilon(1e-14));
        CHECK(d[2] == doctest::Approx(0.272975).epsilon(1e-14));
        CHECK(d[3] == doctest::Approx(0.230275).epsilon(1e-14));
        CHECK(d.total() == doctest::Approx(0.9955).epsilon(1e-14));
    }

    SUBCASE("degenerate chain throws") {
        CHECK_THROWS_AS(stationary_closed_form(CoinSet(1.0, 0.5, 0.5, 0.0)),
                        degenerate_error);
    }

    SUBCASE("fixed point of the transition matrix for random coins") {
        Xoshiro256pp rng(23);
        for (int i = 0; i < 1000; ++i) {
            const CoinSet c = random_coins(rng);
            const HistoryDistribution s = stationary_closed_form(c).normalized();
            const TransitionMatrix x = transition_matrix(c);
            for (int r = 0; r < 4; ++r) {
                double acc = -s[r];
                for (int col = 0; col < 4; ++col) acc += x(r, col) * s[col];
                CHECK(std::abs(acc) <= 1e-12);
            }
        }
    }
}

TEST_CASE("stationary_solve") {
    SUBCASE("fair-coin matrix") {
        const HistoryDistribution s =
            stationary_solve(transition_matrix(CoinSet(0.5, 0.5, 0.5, 0.5)));
        for (int j = 0; j < 4; ++j) CHECK(s[j] == doctest::Approx(0.25).epsilon(1e-14));
    }

    SUBCASE("agrees with the closed form") {
        const CoinSet c(0.695, 0.245, 0.245, 0.895);
        const HistoryDistribution closed = stationary_closed_form(c).normalized();
        const HistoryDistribution solved = stationary_solve(transition_matrix(c));
        for (int j = 0; j < 4; ++j) CHECK(std::abs(closed[j] - solved[j]) <= 1e-10);
    }

    SUBCASE("reducible chain reports the null-space dimension") {
        const TransitionMatrix t = transition_matrix(CoinSet(1.0, 0.5, 0.5, 0.0));
        CHECK_THROWS_WITH_AS(stationary_solve(t),
                             "stationary state is not unique: null space dimension 2",
                             degenerate_error);
    }

    SUBCASE("rejects non-stochastic input") {
        TransitionMatrix t = transition_matrix(CoinSet(0.5, 0.5, 0.5, 0.5));
        t.a[0][0] = 0.9;
        CHECK_THROWS_AS(stationary_solve(t), parameter_error);
    }

    SUBCASE("oracle agreement over random irreducible coins") {
        Xoshiro256pp rng(29);
        for (int i = 0; i < 1000; ++i) {
            const CoinSet c = random_coins(rng);
            const HistoryDistribution closed = stationary_closed_form(c).normalized();
            const HistoryDistribution solved = stationary_solve(transition_matrix(c));
            for (int j = 0; j < 4; ++j) CHECK(std::abs(closed[j] - solved[j]) <= 1e-10);
        }
    }
}

TEST_CASE("gain_probability") {
    CHECK(gain_probability(CoinSet(0.5, 0.5, 0.5, 0.5), HistoryDistribution::uniform()) ==
          doctest::Approx(0.5).epsilon(1e-15));

    const CoinSet c(0.695, 0.245, 0.245, 0.895);
    const double pg = gain_probability(c, stationary_closed_form(c));
    CHECK(pg == doctest::Approx(0.49447513812154698).epsilon(1e-12));

    SUBCASE("raw and normalized weights give the same value") {
        const HistoryDistribution raw = stationary_closed_form(c);
        CHECK(gain_probability(c, raw) ==
              doctest::Approx(gain_probability(c, raw.normalized())).epsilon(1e-14));
    }

    SUBCASE("matches the closed-form ratio for random coins") {
        Xoshiro256pp rng(31);
        for (int i = 0; i < 1000; ++i) {
            const CoinSet d = random_coins(rng);
            const double lhs = gain_probability(d, stationary_closed_form(d));
            const double n = (1.0 - d[0]) * (2.0 * d[3] + 1.0 - d[1]) + d[2] * d[3];
            const double rhs = d[3] * (d[2] + 1.0 - d[0]) / n;
            CHECK(std::abs(lhs - rhs) <= 1e-12);
        }
    }

    CHECK_THROWS_AS(gain_probability(c, HistoryDistribution{{0, 0, 0, 0}, Normalization::raw}),
                    degenerate_error);
}

TEST_CASE("classify") {
    SUBCASE("fair coins") {
        const GameReport r = classify(CoinSet(0.5, 0.5, 0.5, 0.5));
        CHECK(r.x == 0.0);
        CHECK(r.cls == GameClass::fair);
        CHECK(r.p_gain == doctest::Approx(0.5).epsilon(1e-15));
    }

    SUBCASE("example coins are losing with positive x") {
        const GameReport r = classify(CoinSet(0.695, 0.245, 0.245, 0.895));
        CHECK(r.has_xy);
        CHECK(r.x == doctest::Approx(0.011).epsilon(1e-12));
        CHECK(r.y == doctest::Approx(0.49225).epsilon(1e-14));
        CHECK(r.cls == GameClass::losing);
        CHECK(r.p_gain == doctest::Approx(0.49447513812154698).epsilon(1e-12));
    }

    SUBCASE("the two gain formulas agree on random coins") {
        Xoshiro256pp rng(37);
        for (int i = 0; i < 1000; ++i) {
            const CoinSet c = random_coins(rng);
            const double via_ratio = gain_probability(c, stationary_closed_form(c));
            CHECK(std::abs(classify(c).p_gain - via_ratio) <= 1e-12);
        }
    }

    SUBCASE("boundary coins fall back to the stationary average") {
        const GameReport r = classify(CoinSet(0.9, 0.9, 0.9, 0.0));  // y = 0
        CHECK_FALSE(r.has_xy);
        CHECK(std::isnan(r.x));
        CHECK(r.cls == GameClass::losing);  // stuck in loss-loss
        CHECK(r.p_gain == doctest::Approx(0.0).epsilon(1e-15));
    }

    SUBCASE("deterministic winners classify via the diagnostics") {
        const GameReport r = classify(CoinSet(1.0, 1.0, 1.0, 1.0));
        CHECK(r.p_gain == doctest::Approx(1.0).epsilon(1e-15));
        CHECK(r.cls == GameClass::winning);
    }
}

TEST_CASE("monotone sanity: raising any coin never lowers the gain") {
    Xoshiro256pp rng(41);
    const double delta = 5e-3;
    for (int i = 0; i < 100; ++i) {
        const CoinSet c = random_coins(rng, 0.01, 0.98);
        const double base = gain_probability(c, stationary_closed_form(c));
        for (int j = 0; j < 4; ++j) {
            CoinSet up = c;
            up.p[static_cast<std::size_t>(j)] += delta;
            const double bumped = gain_probability(up, stationary_closed_form(up));
            CHECK(bumped >= base - 1e-12);
        }
    }
}

TEST_CASE("payoff_profile") {
    SUBCASE("fair coins, uniform weights") {
        const PayoffProfile p =
            payoff_profile(CoinSet(0.5, 0.5, 0.5, 0.5), HistoryDistribution::uniform());
        for (int k = 0; k < 8; ++k) CHECK(p[k] == doctest::Approx(0.125).epsilon(1e-15));
        CHECK_FALSE(p.renormalized);
    }

    SUBCASE("deterministic gains empty the loss slots") {
        const PayoffProfile p =
            payoff_profile(CoinSet(1.0, 1.0, 1.0, 1.0), HistoryDistribution::uniform());
        for (int j = 0; j < 4; ++j) {
            CHECK(p[2 * j] == doctest::Approx(0.25).epsilon(1e-15));
            CHECK(p[2 * j + 1] == 0.0);
        }
    }

    SUBCASE("gain slots sum to the gain probability") {
        const CoinSet c(0.695, 0.245, 0.245, 0.895);
        const HistoryDistribution raw = stationary_closed_form(c);
        const PayoffProfile p = payoff_profile(c, raw);
        CHECK(p.renormalized);  // raw input had to be normalized
        double gain = 0.0, total = 0.0;
        for (int j = 0; j < 4; ++j) {
            gain += p[2 * j];
            total += p[2 * j] + p[2 * j + 1];
        }
        CHECK(std::abs(total - 1.0) <= 1e-12);
        CHECK(std::abs(gain - gain_probability(c, raw)) <= 1e-12);
    }
}
