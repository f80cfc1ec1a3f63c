#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "parrondo/qcore.hpp"
#include "parrondo/sweep.hpp"

namespace parrondo {

/// 12 significant digits: enough to witness the 1e-12 identity claims.
std::string format_sig(double v, int digits = 12);

/// Complex amplitude as "a+bi".
std::string format_amplitude(cplx a, int digits = 12);

/// Header "eps,r,p1,p2,pmix,effect,qgap"; one row per cell, values with 12
/// significant digits, effect as 0/1, qgap empty when absent.
void write_sweep_csv(std::ostream& os, const std::vector<SweepCell>& cells);

/// Inverse of write_sweep_csv; throws parameter_error on malformed input.
std::vector<SweepCell> parse_sweep_csv(std::istream& is);

/// Heatmap with r on the x axis, eps on the y axis, one rect per cell,
/// p_gain_mix as a blue-white-red ramp centered at 1/2 and a black outline
/// on effect cells.
void write_sweep_svg(std::ostream& os, const std::vector<SweepCell>& cells);

}  // namespace parrondo
