#include "parrondo/markov.hpp"

#include <cmath>
#include <cstddef>

namespace parrondo {

namespace {

void require_probability(double p, const char* what) {
    if (!std::isfinite(p) || p < 0.0 || p > 1.0) {
        throw parameter_error(std::string(what) + " must lie in [0,1]");
    }
}

}  // namespace

CoinSet::CoinSet(double p_gg, double p_gl, double p_lg, double p_ll)
    : CoinSet(std::array<double, 4>{p_gg, p_gl, p_lg, p_ll}) {}

CoinSet::CoinSet(const std::array<double, 4>& probs) : p(probs) {
    for (double v : p) require_probability(v, "coin gain probability");
}

double HistoryDistribution::total() const { return w[0] + w[1] + w[2] + w[3]; }

HistoryDistribution HistoryDistribution::normalized() const {
    const double t = total();
    if (t <= 0.0) throw degenerate_error("history distribution has zero total weight");
    HistoryDistribution out;
    for (std::size_t j = 0; j < 4; ++j) out.w[j] = w[j] / t;
    out.norm = Normalization::l1;
    return out;
}

HistoryDistribution HistoryDistribution::uniform() {
    return HistoryDistribution{{0.25, 0.25, 0.25, 0.25}, Normalization::l1};
}

std::string to_string(GameClass c) {
    switch (c) {
        case GameClass::winning: return "winning";
        case GameClass::fair: return "fair";
        case GameClass::losing: return "losing";
    }
    return "?";
}

TransitionMatrix transition_matrix(const CoinSet& c) {
    // Histories move as (b2,b1) -> (b1, new outcome): a gain from GG or LG
    // lands in GG, a loss in GL; a gain from GL or LL lands in LG, a loss
    // in LL. Columns are the source history.
    TransitionMatrix t{};
    t.a[0][0] = c[0];
    t.a[0][2] = c[2];
    t.a[1][0] = 1.0 - c[0];
    t.a[1][2] = 1.0 - c[2];
    t.a[2][1] = c[1];
    t.a[2][3] = c[3];
    t.a[3][1] = 1.0 - c[1];
    t.a[3][3] = 1.0 - c[3];
    return t;
}

HistoryDistribution stationary_closed_form(const CoinSet& c) {
    HistoryDistribution d;
    d.w = {c[2] * c[3],
           c[3] * (1.0 - c[0]),
           c[3] * (1.0 - c[0]),
           (1.0 - c[0]) * (1.0 - c[1])};
    d.norm = Normalization::raw;
    if (d.total() <= 0.0) {
        throw degenerate_error(
            "degenerate chain: closed-form stationary weights all vanish");
    }
    return d;
}

namespace {

// Null-space basis of a 4x4 matrix via Gauss-Jordan elimination with
// partial pivoting. Pivots below tol count as zero.
int null_space_4x4(std::array<std::array<double, 4>, 4> m,
                   std::array<double, 4>& vec, double tol) {
    std::array<int, 4> pivot_col = {-1, -1, -1, -1};
    int rank = 0;
    for (int col = 0; col < 4 && rank < 4; ++col) {
        int best = -1;
        double best_abs = tol;
        for (int row = rank; row < 4; ++row) {
            const double v = std::abs(m[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)]);
            if (v > best_abs) {
                best_abs = v;
                best = row;
            }
        }
        if (best < 0) continue;
        std::swap(m[static_cast<std::size_t>(rank)], m[static_cast<std::size_t>(best)]);
        auto& prow = m[static_cast<std::size_t>(rank)];
        const double inv = 1.0 / prow[static_cast<std::size_t>(col)];
        for (int k = 0; k < 4; ++k) prow[static_cast<std::size_t>(k)] *= inv;
        for (int row = 0; row < 4; ++row) {
            if (row == rank) continue;
            const double f = m[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)];
            if (f == 0.0) continue;
            for (int k = 0; k < 4; ++k) {
                m[static_cast<std::size_t>(row)][static_cast<std::size_t>(k)] -=
                    f * prow[static_cast<std::size_t>(k)];
            }
        }
        pivot_col[static_cast<std::size_t>(rank)] = col;
        ++rank;
    }

    const int dim = 4 - rank;
    if (dim != 1) return dim;

    // Single free column: set it to 1 and read pivot rows.
    int free_col = -1;
    for (int col = 0; col < 4; ++col) {
        bool is_pivot = false;
        for (int r = 0; r < rank; ++r) is_pivot = is_pivot || pivot_col[static_cast<std::size_t>(r)] == col;
        if (!is_pivot) free_col = col;
    }
    vec = {0.0, 0.0, 0.0, 0.0};
    vec[static_cast<std::size_t>(free_col)] = 1.0;
    for (int r = 0; r < rank; ++r) {
        vec[static_cast<std::size_t>(pivot_col[static_cast<std::size_t>(r)])] =
            -m[static_cast<std::size_t>(r)][static_cast<std::size_t>(free_col)];
    }
    return dim;
}

}  // namespace

HistoryDistribution stationary_solve(const TransitionMatrix& t) {
    for (int col = 0; col < 4; ++col) {
        double s = 0.0;
        for (int row = 0; row < 4; ++row) s += t(row, col);
        if (std::abs(s - 1.0) > kAlgebraTol) {
            throw parameter_error("transition matrix is not column-stochastic");
        }
    }

    std::array<std::array<double, 4>, 4> a{};
    for (int row = 0; row < 4; ++row) {
        for (int col = 0; col < 4; ++col) {
            a[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] =
                t(row, col) - (row == col ? 1.0 : 0.0);
        }
    }

    std::array<double, 4> vec{};
    const int dim = null_space_4x4(a, vec, 1e-10);
    if (dim != 1) {
        throw degenerate_error("stationary state is not unique: null space dimension " +
                               std::to_string(dim));
    }

    double sum = vec[0] + vec[1] + vec[2] + vec[3];
    if (sum == 0.0) throw degenerate_error("stationary null vector sums to zero");
    HistoryDistribution d;
    for (std::size_t j = 0; j < 4; ++j) {
        d.w[j] = vec[j] / sum;
        // a stationary distribution is nonnegative; clip elimination dust
        if (d.w[j] < 0.0 && d.w[j] > -1e-12) d.w[j] = 0.0;
    }
    d.norm = Normalization::l1;
    return d;
}

double gain_probability(const CoinSet& c, const HistoryDistribution& d) {
    const double t = d.total();
    if (t <= 0.0) throw degenerate_error("history distribution has zero total weight");
    double acc = 0.0;
    for (int j = 0; j < 4; ++j) acc += d[j] * c[j];
    return acc / t;
}

GameReport classify(const CoinSet& c, double fairness_tol) {
    if (!(fairness_tol >= 0.0)) throw parameter_error("fairness tolerance must be >= 0");
    GameReport r;
    r.x = (1.0 - c[0]) * (1.0 - c[1]) - c[2] * c[3];
    r.y = c[3] * (c[2] + 1.0 - c[0]);
    if (r.y > 0.0) {
        r.has_xy = true;
        r.p_gain = 1.0 / (2.0 + r.x / r.y);
    } else {
        // boundary coins: no x/y diagnostics, classify by the stationary
        // average alone
        r.x = r.y = std::nan("");
        r.has_xy = false;
        r.p_gain = gain_probability(c, stationary_closed_form(c));
    }
    if (r.p_gain > 0.5 + fairness_tol) {
        r.cls = GameClass::winning;
    } else if (r.p_gain < 0.5 - fairness_tol) {
        r.cls = GameClass::losing;
    } else {
        r.cls = GameClass::fair;
    }
    return r;
}

PayoffProfile payoff_profile(const CoinSet& c, const HistoryDistribution& d) {
    PayoffProfile out;
    HistoryDistribution dist = d;
    if (d.norm != Normalization::l1 || std::abs(d.total() - 1.0) > kAlgebraTol) {
        dist = d.normalized();
        out.renormalized = true;
    }
    for (int j = 0; j < 4; ++j) {
        out.v[static_cast<std::size_t>(2 * j)] = dist[j] * c[j];
        out.v[static_cast<std::size_t>(2 * j + 1)] = dist[j] * (1.0 - c[j]);
    }
    return out;
}

}  // namespace parrondo
