#include "parrondo/protocols.hpp"

#include <cmath>

namespace parrondo {

namespace {

constexpr double kPi = 3.14159265358979323846;

void require_eta(cplx eta) {
    for (int k = 0; k < 6; ++k) {
        if (std::abs(eta - sixth_root(k)) <= kUnitarityTol) return;
    }
    throw parameter_error("eta must be a sixth root of unity");
}

void require_kind(const EmbeddingKind& e, Embedding expected, const char* what) {
    if (e.kind != expected) {
        throw parameter_error(std::string(what) + " requires a " +
                              (expected == Embedding::type1 ? "type-1" : "type-2") +
                              " embedding");
    }
}

ProtocolResult finish(QuantumState state) {
    ProtocolResult res{state, measure(state), 0.0};
    for (int k : kGainingIndices) res.p_gain += res.distribution[k];
    return res;
}

}  // namespace

cplx sixth_root(int k) {
    if (k < 0 || k > 5) throw parameter_error("sixth-root selector must be in 0..5");
    switch (k) {
        case 0: return {1.0, 0.0};
        case 3: return {-1.0, 0.0};
        default: break;
    }
    return std::polar(1.0, kPi * k / 3.0);
}

cplx default_eta() { return sixth_root(1); }

EmbeddingKind EmbeddingKind::type1(cplx eta) {
    require_eta(eta);
    return EmbeddingKind{Embedding::type1, eta};
}

EmbeddingKind EmbeddingKind::type2(cplx eta) {
    require_eta(eta);
    return EmbeddingKind{Embedding::type2, eta};
}

SuperpositionWeights::SuperpositionWeights(cplx g1_, cplx g2_) : g1(g1_), g2(g2_) {
    if (std::abs(g1 * g1 + g2 * g2 - 1.0) > kUnitarityTol) {
        throw parameter_error("superposition weights must satisfy g1^2 + g2^2 = 1");
    }
    if (std::abs(std::conj(g1) * g2 - std::conj(g2) * g1) > kUnitarityTol) {
        throw parameter_error("superposition weights must have a vanishing cross term");
    }
}

SuperpositionWeights SuperpositionWeights::from_probability(double r) {
    if (!std::isfinite(r) || r < 0.0 || r > 1.0) {
        throw parameter_error("mix probability must lie in [0,1]");
    }
    return SuperpositionWeights(cplx{std::sqrt(r), 0.0}, cplx{std::sqrt(1.0 - r), 0.0});
}

double SuperpositionWeights::r() const { return std::norm(g1); }

CoinOperator embed_coin(double p, const EmbeddingKind& e) {
    if (!std::isfinite(p) || p < 0.0 || p > 1.0) {
        throw parameter_error("coin gain probability must lie in [0,1]");
    }
    require_eta(e.eta);
    const double sp = std::sqrt(p);
    const double sq = std::sqrt(1.0 - p);
    CoinOperator op;
    if (e.kind == Embedding::type1) {
        // sqrt(p) N + sqrt(1-p) F
        op(0, 0) = sp;
        op(0, 1) = -sq * std::conj(e.eta);
        op(1, 0) = sq * e.eta;
        op(1, 1) = sp;
    } else {
        // sqrt(p) N* + sqrt(1-p) F*, N* = diag(i, -i), F* = [[0, i conj(eta)], [i eta, 0]]
        const cplx i{0.0, 1.0};
        op(0, 0) = i * sp;
        op(0, 1) = i * sq * std::conj(e.eta);
        op(1, 0) = i * sq * e.eta;
        op(1, 1) = -i * sp;
    }
    return op;
}

Multiplexer embed_game(const GameSpec& g, const EmbeddingKind& e) {
    std::array<CoinOperator, 4> blocks;
    for (int j = 0; j < 4; ++j) blocks[static_cast<std::size_t>(j)] = embed_coin(g.coins[j], e);
    return assemble_multiplexer(blocks);
}

QuantumState initial_state(const HistoryDistribution& d) {
    const double total = d.total();
    if (total <= 0.0) throw degenerate_error("history distribution has zero total weight");
    std::array<cplx, 8> amps{};
    for (int j = 0; j < 4; ++j) {
        const double wj = d[j];
        if (!std::isfinite(wj) || wj < 0.0) {
            throw parameter_error("history weights must be finite and nonnegative");
        }
        amps[static_cast<std::size_t>(2 * j)] = std::sqrt(wj);
    }
    // from_amplitudes supplies the 1/sqrt(total) prefactor
    return QuantumState::from_amplitudes(amps);
}

Multiplexer superposed_multiplexer(const Multiplexer& m1, const Multiplexer& m2,
                                   const SuperpositionWeights& w, bool strict) {
    std::array<CoinOperator, 4> blocks;
    for (std::size_t j = 0; j < 4; ++j) {
        blocks[j] = superpose_blocks(m1.blocks[j], m2.blocks[j], w.g1, w.g2);
    }
    Multiplexer out = assemble_multiplexer(blocks);
    if (strict && !is_unitary(out, kUnitarityTol)) {
        throw unitarity_error(
            "superposed multiplexer is not unitary; superposition requires one "
            "type-1 and one type-2 operand");
    }
    return out;
}

ProtocolResult run_proper(const GameSpec& g, const EmbeddingKind& e) {
    const HistoryDistribution pi = stationary_closed_form(g.coins);
    const QuantumState init = initial_state(pi);
    return finish(apply(embed_game(g, e), init));
}

ProtocolResult run_superposed(const GameSpec& g1, const GameSpec& g2, double r,
                              const EmbeddingKind& e1, const EmbeddingKind& e2) {
    require_kind(e1, Embedding::type1, "run_superposed first operand");
    require_kind(e2, Embedding::type2, "run_superposed second operand");
    const SuperpositionWeights w = SuperpositionWeights::from_probability(r);
    const GameSpec mixed = mix(g1, g2, MixWeight(r));
    const HistoryDistribution tau = stationary_closed_form(mixed.coins);
    const Multiplexer sigma =
        superposed_multiplexer(embed_game(g1, e1), embed_game(g2, e2), w);
    return finish(apply(sigma, initial_state(tau)));
}

ProtocolResult run_special_AB(double p, const GameSpec& gB, const EmbeddingKind& e1) {
    require_kind(e1, Embedding::type1, "run_special_AB");
    const GameSpec a = lift_history_free(p);
    return run_superposed(gB, a, 0.5, e1, EmbeddingKind::type2(e1.eta));
}

ProtocolResult run_second_quantization(const GameSpec& g1, const GameSpec& g2,
                                       double r, const EmbeddingKind& e) {
    require_kind(e, Embedding::type1, "run_second_quantization");
    const GameSpec mixed = mix(g1, g2, MixWeight(r));
    const HistoryDistribution tau = stationary_closed_form(mixed.coins);
    return finish(apply(embed_game(mixed, e), initial_state(tau)));
}

ProtocolResult run_fna(const GameSpec& g, FnaInitial init, const EmbeddingKind& e) {
    QuantumState state = QuantumState::basis(0);
    if (init == FnaInitial::maximally_entangled) {
        std::array<cplx, 8> amps{};
        amps[0] = amps[7] = 1.0;
        state = QuantumState::from_amplitudes(amps);
    }
    return finish(apply(embed_game(g, e), state));
}

double improperness_gap(const GameSpec& g, FnaInitial init, const EmbeddingKind& e) {
    const double classical = gain_probability(g.coins, stationary_closed_form(g.coins));
    return std::abs(run_fna(g, init, e).p_gain - classical);
}

}  // namespace parrondo
