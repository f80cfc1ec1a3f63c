#include "parrondo/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

namespace parrondo {

std::string format_sig(double v, int digits) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.*g", digits, v);
    return buf;
}

std::string format_amplitude(cplx a, int digits) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "%.*g%+.*gi", digits, a.real(), digits, a.imag());
    return buf;
}

void write_sweep_csv(std::ostream& os, const std::vector<SweepCell>& cells) {
    os << "eps,r,p1,p2,pmix,effect,qgap\n";
    for (const SweepCell& c : cells) {
        os << format_sig(c.eps) << ',' << format_sig(c.r) << ','
           << format_sig(c.p_gain_1) << ',' << format_sig(c.p_gain_2) << ','
           << format_sig(c.p_gain_mix) << ',' << (c.effect ? 1 : 0) << ',';
        if (c.quantum_gap) os << format_sig(*c.quantum_gap);
        os << '\n';
    }
}

namespace {

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = line.find(',', start);
        if (comma == std::string::npos) {
            out.push_back(line.substr(start));
            break;
        }
        out.push_back(line.substr(start, comma - start));
        start = comma + 1;
    }
    return out;
}

double parse_double(const std::string& s) {
    try {
        std::size_t used = 0;
        const double v = std::stod(s, &used);
        if (used != s.size()) throw parameter_error("trailing characters in field '" + s + "'");
        return v;
    } catch (const std::invalid_argument&) {
        throw parameter_error("malformed numeric field '" + s + "'");
    }
}

}  // namespace

std::vector<SweepCell> parse_sweep_csv(std::istream& is) {
    std::string line;
    if (!std::getline(is, line) || line != "eps,r,p1,p2,pmix,effect,qgap") {
        throw parameter_error("missing or unexpected sweep CSV header");
    }
    std::vector<SweepCell> cells;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        const std::vector<std::string> f = split_fields(line);
        if (f.size() != 7) throw parameter_error("sweep CSV row must have 7 fields");
        SweepCell c;
        c.eps = parse_double(f[0]);
        c.r = parse_double(f[1]);
        c.p_gain_1 = parse_double(f[2]);
        c.p_gain_2 = parse_double(f[3]);
        c.p_gain_mix = parse_double(f[4]);
        c.effect = parse_double(f[5]) != 0.0;
        if (!f[6].empty()) c.quantum_gap = parse_double(f[6]);
        c.degenerate = std::isnan(c.p_gain_mix);
        cells.push_back(c);
    }
    return cells;
}

namespace {

std::string ramp_color(double v, double lo, double hi) {
    if (std::isnan(v)) return "#999999";
    // diverging ramp: blue below 1/2, white at 1/2, red above
    const double span = std::max({hi - 0.5, 0.5 - lo, 1e-12});
    double t = (v - 0.5) / span;  // [-1, 1]
    t = std::clamp(t, -1.0, 1.0);
    int r = 255, g = 255, b = 255;
    if (t < 0) {
        r = g = static_cast<int>(std::lround(255.0 * (1.0 + t)));
    } else {
        g = b = static_cast<int>(std::lround(255.0 * (1.0 - t)));
    }
    char buf[8];
    std::snprintf(buf, sizeof buf, "#%02x%02x%02x", r, g, b);
    return buf;
}

}  // namespace

void write_sweep_svg(std::ostream& os, const std::vector<SweepCell>& cells) {
    if (cells.empty()) throw parameter_error("cannot render an empty cell list");

    std::set<double> eps_vals;
    std::set<double> r_vals;
    double lo = 1.0, hi = 0.0;
    for (const SweepCell& c : cells) {
        eps_vals.insert(c.eps);
        r_vals.insert(c.r);
        if (!std::isnan(c.p_gain_mix)) {
            lo = std::min(lo, c.p_gain_mix);
            hi = std::max(hi, c.p_gain_mix);
        }
    }
    const int nr = static_cast<int>(r_vals.size());
    const int ne = static_cast<int>(eps_vals.size());
    const double cw = 36.0, ch = 24.0, margin_l = 90.0, margin_t = 30.0;
    const double width = margin_l + nr * cw + 20.0;
    const double height = margin_t + ne * ch + 40.0;

    auto index_of = [](const std::set<double>& s, double v) {
        return static_cast<int>(std::distance(s.begin(), s.find(v)));
    };

    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
       << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << ' ' << height
       << "\">\n";
    os << "  <title>Parrondo effect sweep: mix gain probability over (r, eps)</title>\n";

    for (const SweepCell& c : cells) {
        const int ix = index_of(r_vals, c.r);
        // larger eps at the top
        const int iy = ne - 1 - index_of(eps_vals, c.eps);
        os << "  <rect x=\"" << margin_l + ix * cw << "\" y=\"" << margin_t + iy * ch
           << "\" width=\"" << cw << "\" height=\"" << ch << "\" fill=\""
           << ramp_color(c.p_gain_mix, lo, hi) << "\"";
        if (c.effect) {
            os << " stroke=\"#000000\" stroke-width=\"2\"";
        } else {
            os << " stroke=\"none\"";
        }
        os << "><desc>eps=" << format_sig(c.eps, 6) << " r=" << format_sig(c.r, 6)
           << " pmix=" << format_sig(c.p_gain_mix, 6) << "</desc></rect>\n";
    }

    // axis labels
    int ix = 0;
    for (double r : r_vals) {
        os << "  <text x=\"" << margin_l + ix * cw + cw / 2 << "\" y=\""
           << margin_t + ne * ch + 16.0
           << "\" font-size=\"10\" text-anchor=\"middle\">" << format_sig(r, 3)
           << "</text>\n";
        ++ix;
    }
    int iy = 0;
    for (auto it = eps_vals.rbegin(); it != eps_vals.rend(); ++it, ++iy) {
        os << "  <text x=\"" << margin_l - 6.0 << "\" y=\""
           << margin_t + iy * ch + ch / 2 + 4.0
           << "\" font-size=\"10\" text-anchor=\"end\">" << format_sig(*it, 4)
           << "</text>\n";
    }
    os << "  <text x=\"" << margin_l + nr * cw / 2 << "\" y=\"" << height - 6.0
       << "\" font-size=\"11\" text-anchor=\"middle\">r</text>\n";
    os << "  <text x=\"14\" y=\"" << margin_t + ne * ch / 2
       << "\" font-size=\"11\" text-anchor=\"middle\">eps</text>\n";
    os << "</svg>\n";
}

}  // namespace parrondo
