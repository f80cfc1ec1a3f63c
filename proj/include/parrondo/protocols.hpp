#pragma once

#include "parrondo/games.hpp"
#include "parrondo/qcore.hpp"

namespace parrondo {

/// k-th sixth root of unity, exp(i pi k / 3), k in 0..5.
cplx sixth_root(int k);

/// Default phase parameter: the primitive root exp(i pi / 3). Any of the six
/// roots yields identical measured statistics; the choice only shows up in
/// amplitude-level displays.
cplx default_eta();

enum class Embedding { type1, type2 };

/**
 * How a classical coin is sent into SU(2). Type 1 superposes the No-Flip
 * and Flip embeddings N = I, F = [[0, -conj(eta)], [eta, 0]]; type 2 uses
 * N* = diag(i, -i), F* = [[0, i conj(eta)], [i eta, 0]]. The extra factor
 * of i in type 2 is what lets a type-1 and a type-2 multiplexer superpose
 * into a unitary operator.
 */
struct EmbeddingKind {
    Embedding kind = Embedding::type1;
    cplx eta;

    static EmbeddingKind type1(cplx eta = default_eta());
    static EmbeddingKind type2(cplx eta = default_eta());
};

/**
 * Amplitude weights (g1, g2) for superposing two multiplexers. Valid weights
 * satisfy g1^2 + g2^2 = 1 together with conj(g1) g2 - conj(g2) g1 = 0; the
 * mix probability is r = |g1|^2. The checked constructor enforces both
 * within 1e-12 (which pins the weights to the real case up to sign).
 */
struct SuperpositionWeights {
    cplx g1;
    cplx g2;

    SuperpositionWeights(cplx g1, cplx g2);
    /// (sqrt r, sqrt(1-r)), the canonical real solution.
    static SuperpositionWeights from_probability(double r);

    double r() const;
};

struct ProtocolResult {
    QuantumState final_state = QuantumState::basis(0);
    OutcomeDistribution distribution{};
    double p_gain = 0.0;
};

/// Fixed initial states of the improper protocols.
enum class FnaInitial { basic000, maximally_entangled };

/// SU(2) image of a single coin with gain probability p.
CoinOperator embed_coin(double p, const EmbeddingKind& e);

/// Blockwise embedding of a game's four coins.
Multiplexer embed_game(const GameSpec& g, const EmbeddingKind& e);

/// Evaluative initial state: history amplitudes are square roots of the
/// weights, coin qubit |0>, normalized by the root of the total weight.
QuantumState initial_state(const HistoryDistribution& d);

/// Blockwise g1*m1 + g2*m2. In strict mode the result must be unitary
/// within 1e-12 (true for a type-1/type-2 pair with legal weights, false
/// for same-type inputs with nondegenerate coins).
Multiplexer superposed_multiplexer(const Multiplexer& m1, const Multiplexer& m2,
                                   const SuperpositionWeights& w, bool strict = true);

/**
 * The proper quantization of a single game: evaluative initial state from
 * the stationary distribution, embedded multiplexer, measurement. The
 * resulting gain probability equals the classical one.
 */
ProtocolResult run_proper(const GameSpec& g, const EmbeddingKind& e);

/**
 * Proper quantization of the randomized sequence of two games: superposes
 * the type-1 embedding of g1 with the type-2 embedding of g2 using weights
 * (sqrt r, sqrt(1-r)), acting on the evaluative state of the classical mix.
 * e1 must be type 1 and e2 type 2.
 */
ProtocolResult run_superposed(const GameSpec& g1, const GameSpec& g2, double r,
                              const EmbeddingKind& e1, const EmbeddingKind& e2);

/// Equal-weight special case where the history-free coin p is embedded
/// type 2 and superposed with the type-1 embedding of gB.
ProtocolResult run_special_AB(double p, const GameSpec& gB, const EmbeddingKind& e1);

/// Second proper quantization of a randomized sequence: embeds the mixed
/// coins r*a_j + (1-r)*b_j directly with a type-1 embedding. Agrees with
/// run_superposed on the gain probability while producing a different
/// final state.
ProtocolResult run_second_quantization(const GameSpec& g1, const GameSpec& g2,
                                       double r, const EmbeddingKind& e);

/// The improper fixed-initial-state protocols: embeds the game and applies
/// it to |000> or (|000> + |111>)/sqrt(2) instead of the evaluative state.
ProtocolResult run_fna(const GameSpec& g, FnaInitial init, const EmbeddingKind& e);

/// |run_fna gain - classical gain|: how far the fixed-initial-state
/// protocol is from reproducing the classical game.
double improperness_gap(const GameSpec& g, FnaInitial init, const EmbeddingKind& e);

}  // namespace parrondo
