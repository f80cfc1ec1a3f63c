#pragma once

#include <array>
#include <complex>
#include <cstddef>

#include "parrondo/errors.hpp"

namespace parrondo {

using cplx = std::complex<double>;

/// Entrywise tolerance for U†U = I checks.
inline constexpr double kUnitarityTol = 1e-12;

/// Norm drift accepted (and silently repaired) by apply(); larger drift is
/// treated as caller error rather than masked.
inline constexpr double kNormDriftTol = 1e-9;

/// Computational-basis indices with coin qubit |0> (a gain under the Meyer
/// convention where "No Flip" keeps the coin on the gaining face).
inline constexpr std::array<int, 4> kGainingIndices{0, 2, 4, 6};

/// A 2x2 complex operator acting on the coin qubit.
struct CoinOperator {
    /// Row-major entries: e[0]=u00, e[1]=u01, e[2]=u10, e[3]=u11.
    std::array<cplx, 4> e{};

    cplx& operator()(int row, int col) { return e[2 * row + col]; }
    const cplx& operator()(int row, int col) const { return e[2 * row + col]; }

    static CoinOperator identity();
};

/// Max entrywise deviation of U†U from the identity.
double unitarity_defect(const CoinOperator& op);

/// True iff the defect is within tol. Throws parameter_error on non-finite
/// entries or tol <= 0.
bool is_unitary(const CoinOperator& op, double tol = kUnitarityTol);

/// Entrywise g1*b1 + g2*b2. Whether the result is unitary is the caller's
/// concern (see protocols for the constraints that make it so).
CoinOperator superpose_blocks(const CoinOperator& b1, const CoinOperator& b2,
                              cplx g1, cplx g2);

/**
 * The 8x8 block-diagonal operator on three qubits. Block j (j = 0..3) acts
 * on the amplitude pair (2j, 2j+1), i.e. on the coin qubit under control of
 * the two history qubits being in joint state j.
 */
struct Multiplexer {
    std::array<CoinOperator, 4> blocks{};
};

Multiplexer assemble_multiplexer(const std::array<CoinOperator, 4>& blocks);

double unitarity_defect(const Multiplexer& mux);
bool is_unitary(const Multiplexer& mux, double tol = kUnitarityTol);

/**
 * State of three qubits |b2 b1 b0>. The two high bits encode the two-stage
 * history (bit b2 = outcome at t-2, bit b1 = outcome at t-1, 0 = gain) and
 * the low bit is the coin qubit. Index 0 = |000>, index 7 = |111>.
 *
 * Unit norm is an invariant: construction normalizes, and unitary
 * application preserves it.
 */
class QuantumState {
public:
    /// Basis state |k>, k in 0..7.
    static QuantumState basis(int k);

    /// Normalizes the given amplitudes. Throws degenerate_error on the zero
    /// vector, parameter_error on non-finite entries.
    static QuantumState from_amplitudes(const std::array<cplx, 8>& amps);

    const std::array<cplx, 8>& amplitudes() const { return amp_; }
    const cplx& operator[](int k) const { return amp_[static_cast<std::size_t>(k)]; }

    double squared_norm() const;

private:
    QuantumState() = default;
    std::array<cplx, 8> amp_{};

    friend QuantumState apply(const Multiplexer&, const QuantumState&, bool);
};

/// Exact measurement distribution over the 8 basis states.
struct OutcomeDistribution {
    std::array<double, 8> p{};
    const double& operator[](int k) const { return p[static_cast<std::size_t>(k)]; }
};

/**
 * Block-diagonal matrix-vector product. Input norm drift up to kNormDriftTol
 * is renormalized; worse drift throws parameter_error. In strict mode
 * (default) a non-unitary multiplexer throws unitarity_error; in permissive
 * mode the output is renormalized instead.
 */
QuantumState apply(const Multiplexer& mux, const QuantumState& state,
                   bool strict = true);

/// probability(k) = |amplitude k|^2 / squared norm.
OutcomeDistribution measure(const QuantumState& state);

/// Measured mass on the gaining basis (coin qubit |0>): indices {0,2,4,6}.
double gain_probability_of(const QuantumState& state);

}  // namespace parrondo
