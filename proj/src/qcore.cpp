#include "parrondo/qcore.hpp"

#include <cmath>

namespace parrondo {

namespace {

bool finite(cplx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

void require_finite(const CoinOperator& op) {
    for (const cplx& z : op.e) {
        if (!finite(z)) throw parameter_error("coin operator has non-finite entries");
    }
}

}  // namespace

CoinOperator CoinOperator::identity() {
    CoinOperator id;
    id.e = {cplx{1.0, 0.0}, cplx{0.0, 0.0}, cplx{0.0, 0.0}, cplx{1.0, 0.0}};
    return id;
}

double unitarity_defect(const CoinOperator& op) {
    // U†U entry (r,c) = sum_k conj(U(k,r)) U(k,c)
    double worst = 0.0;
    for (int r = 0; r < 2; ++r) {
        for (int c = 0; c < 2; ++c) {
            cplx v = std::conj(op(0, r)) * op(0, c) + std::conj(op(1, r)) * op(1, c);
            if (r == c) v -= 1.0;
            worst = std::max(worst, std::abs(v));
        }
    }
    return worst;
}

bool is_unitary(const CoinOperator& op, double tol) {
    if (!(tol > 0.0)) throw parameter_error("unitarity tolerance must be positive");
    require_finite(op);
    return unitarity_defect(op) <= tol;
}

CoinOperator superpose_blocks(const CoinOperator& b1, const CoinOperator& b2,
                              cplx g1, cplx g2) {
    CoinOperator out;
    for (std::size_t k = 0; k < 4; ++k) out.e[k] = g1 * b1.e[k] + g2 * b2.e[k];
    return out;
}

Multiplexer assemble_multiplexer(const std::array<CoinOperator, 4>& blocks) {
    for (const CoinOperator& b : blocks) require_finite(b);
    return Multiplexer{blocks};
}

double unitarity_defect(const Multiplexer& mux) {
    double worst = 0.0;
    for (const CoinOperator& b : mux.blocks) worst = std::max(worst, unitarity_defect(b));
    return worst;
}

bool is_unitary(const Multiplexer& mux, double tol) {
    if (!(tol > 0.0)) throw parameter_error("unitarity tolerance must be positive");
    for (const CoinOperator& b : mux.blocks) require_finite(b);
    return unitarity_defect(mux) <= tol;
}

QuantumState QuantumState::basis(int k) {
    if (k < 0 || k > 7) throw parameter_error("basis index must be in 0..7");
    QuantumState s;
    s.amp_[static_cast<std::size_t>(k)] = cplx{1.0, 0.0};
    return s;
}

QuantumState QuantumState::from_amplitudes(const std::array<cplx, 8>& amps) {
    double n2 = 0.0;
    for (const cplx& a : amps) {
        if (!finite(a)) throw parameter_error("state has non-finite amplitudes");
        n2 += std::norm(a);
    }
    if (n2 <= 0.0) throw degenerate_error("zero state vector");
    QuantumState s;
    const double inv = 1.0 / std::sqrt(n2);
    for (std::size_t k = 0; k < 8; ++k) s.amp_[k] = amps[k] * inv;
    return s;
}

double QuantumState::squared_norm() const {
    double n2 = 0.0;
    for (const cplx& a : amp_) n2 += std::norm(a);
    return n2;
}

QuantumState apply(const Multiplexer& mux, const QuantumState& state, bool strict) {
    if (strict && !is_unitary(mux, kUnitarityTol)) {
        throw unitarity_error("multiplexer is not unitary within 1e-12");
    }
    const double norm = std::sqrt(state.squared_norm());
    if (std::abs(norm - 1.0) > kNormDriftTol) {
        throw parameter_error("input state norm drifted beyond 1e-9");
    }
    QuantumState out;
    const double inv = 1.0 / norm;
    for (int j = 0; j < 4; ++j) {
        const CoinOperator& b = mux.blocks[static_cast<std::size_t>(j)];
        const cplx a0 = state[2 * j] * inv;
        const cplx a1 = state[2 * j + 1] * inv;
        out.amp_[static_cast<std::size_t>(2 * j)] = b(0, 0) * a0 + b(0, 1) * a1;
        out.amp_[static_cast<std::size_t>(2 * j + 1)] = b(1, 0) * a0 + b(1, 1) * a1;
    }
    if (!strict) {
        const double n2 = out.squared_norm();
        if (n2 <= 0.0) throw degenerate_error("permissive apply produced the zero vector");
        const double s = 1.0 / std::sqrt(n2);
        for (cplx& a : out.amp_) a *= s;
    }
    return out;
}

OutcomeDistribution measure(const QuantumState& state) {
    const double n2 = state.squared_norm();
    if (n2 <= 0.0) throw degenerate_error("cannot measure the zero state");
    OutcomeDistribution d;
    for (std::size_t k = 0; k < 8; ++k) d.p[k] = std::norm(state.amplitudes()[k]) / n2;
    return d;
}

double gain_probability_of(const QuantumState& state) {
    const OutcomeDistribution d = measure(state);
    double p = 0.0;
    for (int k : kGainingIndices) p += d[k];
    return p;
}

}  // namespace parrondo
