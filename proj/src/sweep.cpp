#include "parrondo/sweep.hpp"

#include <cmath>
#include <map>

#include "parrondo/protocols.hpp"

namespace parrondo {

Range::Range(double lo_, double hi_, int count_) : lo(lo_), hi(hi_), count(count_) {
    if (!(std::isfinite(lo) && std::isfinite(hi) && lo < hi)) {
        throw parameter_error("range requires finite lo < hi");
    }
    if (count < 2) throw parameter_error("range needs at least two points");
}

double Range::at(int k) const {
    return lo + static_cast<double>(k) * (hi - lo) / static_cast<double>(count - 1);
}

namespace {

void validate(const SweepSpec& spec) {
    if (spec.eps_range.count < 2 || spec.r_range.count < 2) {
        throw parameter_error("sweep ranges need at least two points");
    }
    if (spec.r_range.lo < 0.0 || spec.r_range.hi > 1.0) {
        throw parameter_error("r range must lie within [0,1]");
    }
    if (spec.canonical &&
        (spec.eps_range.lo <= 0.0 || spec.eps_range.hi >= kCanonicalEpsLimit)) {
        throw parameter_error("canonical sweep requires eps within (0, 1/168)");
    }
}

bool shifted(const std::array<double, 4>& base, double eps, std::array<double, 4>& out) {
    for (std::size_t j = 0; j < 4; ++j) {
        out[j] = base[j] - eps;
        if (out[j] < 0.0 || out[j] > 1.0) return false;
    }
    return true;
}

SweepCell evaluate_cell(const SweepSpec& spec, double eps, double r) {
    SweepCell cell;
    cell.eps = eps;
    cell.r = r;

    std::array<double, 4> c1{};
    std::array<double, 4> c2{};
    if (!shifted(spec.base1, eps, c1) || !shifted(spec.base2, eps, c2)) {
        cell.degenerate = true;
        cell.p_gain_1 = cell.p_gain_2 = cell.p_gain_mix = std::nan("");
        return cell;
    }

    const GameSpec g1{CoinSet(c1), "g1"};
    const GameSpec g2{CoinSet(c2), "g2"};
    try {
        const ParrondoReport rep = parrondo_effect(g1, g2, MixWeight(r));
        cell.p_gain_1 = rep.report_1.p_gain;
        cell.p_gain_2 = rep.report_2.p_gain;
        cell.p_gain_mix = rep.report_mix.p_gain;
        cell.effect = rep.effect;
        if (spec.quantum_check) {
            const EmbeddingKind e1 = EmbeddingKind::type1();
            const ProtocolResult q =
                spec.quantum_use_superposed
                    ? run_superposed(g1, g2, r, e1, EmbeddingKind::type2())
                    : run_second_quantization(g1, g2, r, e1);
            cell.quantum_gap = std::abs(q.p_gain - cell.p_gain_mix);
        }
    } catch (const degenerate_error&) {
        cell.degenerate = true;
        cell.p_gain_1 = cell.p_gain_2 = cell.p_gain_mix = std::nan("");
    }
    return cell;
}

}  // namespace

std::vector<SweepCell> grid_scan_serial(const SweepSpec& spec) {
    validate(spec);
    const int ne = spec.eps_range.count;
    const int nr = spec.r_range.count;
    std::vector<SweepCell> cells(static_cast<std::size_t>(ne) * static_cast<std::size_t>(nr));
    for (int i = 0; i < ne * nr; ++i) {
        cells[static_cast<std::size_t>(i)] =
            evaluate_cell(spec, spec.eps_range.at(i / nr), spec.r_range.at(i % nr));
    }
    return cells;
}

std::vector<SweepCell> grid_scan(const SweepSpec& spec) {
    validate(spec);
    const int ne = spec.eps_range.count;
    const int nr = spec.r_range.count;
    std::vector<SweepCell> cells(static_cast<std::size_t>(ne) * static_cast<std::size_t>(nr));
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < ne * nr; ++i) {
        cells[static_cast<std::size_t>(i)] =
            evaluate_cell(spec, spec.eps_range.at(i / nr), spec.r_range.at(i % nr));
    }
    return cells;
}

std::vector<EffectRegion> extract_region(const std::vector<SweepCell>& cells) {
    if (cells.empty()) throw parameter_error("cannot summarize an empty cell list");

    // cells arrive ordered by (eps, r); group rows by eps value
    std::vector<EffectRegion> regions;
    std::size_t i = 0;
    while (i < cells.size()) {
        EffectRegion row;
        row.eps = cells[i].eps;
        std::size_t j = i;
        while (j < cells.size() && cells[j].eps == row.eps) ++j;

        std::size_t k = i;
        while (k < j) {
            if (!cells[k].effect) {
                ++k;
                continue;
            }
            std::size_t end = k;
            while (end + 1 < j && cells[end + 1].effect) ++end;
            row.r_intervals.emplace_back(cells[k].r, cells[end].r);
            k = end + 1;
        }
        regions.push_back(std::move(row));
        i = j;
    }
    return regions;
}

}  // namespace parrondo
