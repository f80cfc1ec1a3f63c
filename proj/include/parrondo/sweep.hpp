#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "parrondo/games.hpp"

namespace parrondo {

/// Inclusive lattice lo + k*(hi-lo)/(count-1), k = 0..count-1.
struct Range {
    double lo = 0.0;
    double hi = 1.0;
    int count = 2;

    Range() = default;
    Range(double lo, double hi, int count);
    double at(int k) const;
};

/**
 * Grid specification over (eps, r). The base pair defaults to the canonical
 * example (A' coin 1/2, B' coins 7/10, 1/4, 1/4, 9/10); each cell shifts
 * every base coin down by its eps and mixes with its r. With an explicit
 * base, cells whose shifted coins leave [0,1] are marked degenerate rather
 * than failing the scan.
 */
struct SweepSpec {
    Range eps_range;
    Range r_range{0.0, 1.0, 11};
    bool canonical = true;
    std::array<double, 4> base1{{0.5, 0.5, 0.5, 0.5}};
    std::array<double, 4> base2{{0.7, 0.25, 0.25, 0.9}};
    bool quantum_check = false;
    /// Check properness with the superposed protocol instead of the second
    /// quantization (the cheaper default).
    bool quantum_use_superposed = false;
};

struct SweepCell {
    double eps = 0.0;
    double r = 0.0;
    double p_gain_1 = 0.0;
    double p_gain_2 = 0.0;
    double p_gain_mix = 0.0;
    bool effect = false;
    std::optional<double> quantum_gap;
    bool degenerate = false;
};

/// One cell per lattice point, ordered by (eps index, r index). Runs the
/// cells in parallel when OpenMP is enabled; cell values are independent of
/// the execution order.
std::vector<SweepCell> grid_scan(const SweepSpec& spec);

/// Single-threaded reference scan; must agree with grid_scan bit for bit.
std::vector<SweepCell> grid_scan_serial(const SweepSpec& spec);

/// Effect intervals along r for one eps row.
struct EffectRegion {
    double eps = 0.0;
    /// Maximal [r_lo, r_hi] runs of effect cells; empty when the row has none.
    std::vector<std::pair<double, double>> r_intervals;
};

/// Per-eps summary of where the effect holds; rows without any effect are
/// reported with an empty interval list.
std::vector<EffectRegion> extract_region(const std::vector<SweepCell>& cells);

}  // namespace parrondo
