#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "parrondo/montecarlo.hpp"
#include "parrondo/protocols.hpp"
#include "parrondo/report.hpp"
#include "parrondo/sweep.hpp"
#include "parrondo/verify.hpp"

namespace {

using namespace parrondo;

// exit codes: 0 ok, 1 verification failure, 2 degenerate input, 64 usage, 73 I/O
constexpr int kExitVerify = 1;
constexpr int kExitDegenerate = 2;
constexpr int kExitUsage = 64;
constexpr int kExitIo = 73;

struct io_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct GameArgs {
    std::vector<double> coins;
    std::vector<double> coins2;
    bool canonical = false;
    double eps = 0.005;
    std::string which = "B";
    double r = 0.5;
    bool has_r = false;
    int eta_index = 1;
    std::string embedding = "type1";
};

void add_game_options(CLI::App* cmd, GameArgs& args, bool with_embedding) {
    cmd->add_option("--coins", args.coins,
                    "four gain probabilities p_GG,p_GL,p_LG,p_LL")
        ->delimiter(',')
        ->expected(4);
    cmd->add_option("--coins2", args.coins2, "coins of the second game")
        ->delimiter(',')
        ->expected(4);
    cmd->add_flag("--canonical", args.canonical,
                  "use the canonical Parrondo pair A', B'");
    cmd->add_option("--eps", args.eps, "epsilon of the canonical pair")
        ->check(CLI::Range(0.0, kCanonicalEpsLimit));
    cmd->add_option("--which", args.which, "canonical game to use: A, B or mix")
        ->check(CLI::IsMember({"A", "B", "mix"}));
    cmd->add_option("--r", args.r, "probability of playing the first game")
        ->check(CLI::Range(0.0, 1.0))
        ->trigger_on_parse()
        ->each([&args](const std::string&) { args.has_r = true; });
    if (with_embedding) {
        cmd->add_option("--eta", args.eta_index, "sixth-root selector k (eta = exp(i pi k/3))")
            ->check(CLI::Range(0, 5));
        cmd->add_option("--embedding", args.embedding, "coin embedding for single-game protocols")
            ->check(CLI::IsMember({"type1", "type2"}));
    }
}

GameSpec game_from_list(const std::vector<double>& v, const char* label) {
    return GameSpec{CoinSet(v[0], v[1], v[2], v[3]), label};
}

// Single game named by the arguments (canonical --which, or --coins with an
// optional --coins2/--r mix).
GameSpec resolve_single(const GameArgs& a) {
    if (a.canonical) {
        auto [ga, gb] = canonical_example(a.eps);
        if (a.which == "A") return ga;
        if (a.which == "mix") return mix(gb, ga, MixWeight(a.r));
        return gb;
    }
    if (a.coins.empty()) {
        throw CLI::ValidationError("game selection", "need --coins or --canonical");
    }
    GameSpec g1 = game_from_list(a.coins, "game1");
    if (!a.coins2.empty()) {
        if (!a.has_r) {
            throw CLI::ValidationError("game selection", "--coins2 requires --r");
        }
        return mix(g1, game_from_list(a.coins2, "game2"), MixWeight(a.r));
    }
    return g1;
}

// Pair (first game = type-1 side, second game = type-2 side). The canonical
// pair comes back as (B', A').
std::pair<GameSpec, GameSpec> resolve_pair(const GameArgs& a) {
    if (a.canonical) {
        auto [ga, gb] = canonical_example(a.eps);
        return {gb, ga};
    }
    if (a.coins.empty() || a.coins2.empty()) {
        throw CLI::ValidationError("game selection",
                                   "need --coins and --coins2 (or --canonical)");
    }
    return {game_from_list(a.coins, "game1"), game_from_list(a.coins2, "game2")};
}

void print_distribution(const HistoryDistribution& d, const char* name) {
    std::printf("%s:", name);
    for (int j = 0; j < 4; ++j) std::printf(" %s", format_sig(d[j]).c_str());
    std::printf("\n");
}

int cmd_analyze(const GameArgs& a, double fairness_tol) {
    const GameSpec g = resolve_single(a);
    std::printf("game: %s\n", g.label.c_str());
    std::printf("coins:");
    for (int j = 0; j < 4; ++j) std::printf(" %s", format_sig(g.coins[j]).c_str());
    std::printf("\n");

    const HistoryDistribution raw = stationary_closed_form(g.coins);
    print_distribution(raw, "stationary (raw)");
    print_distribution(raw.normalized(), "stationary (normalized)");

    const GameReport rep = classify(g.coins, fairness_tol);
    std::printf("p_gain = %s\n", format_sig(rep.p_gain).c_str());
    if (rep.has_xy) {
        std::printf("x = %s\ny = %s\n", format_sig(rep.x).c_str(), format_sig(rep.y).c_str());
    } else {
        std::printf("x, y: not defined for boundary coins\n");
    }
    std::printf("class: %s\n", to_string(rep.cls).c_str());
    return 0;
}

void print_protocol_result(const ProtocolResult& res) {
    std::printf("final state:\n");
    for (int k = 0; k < 8; ++k) {
        std::printf("  |%d%d%d>  %s\n", (k >> 2) & 1, (k >> 1) & 1, k & 1,
                    format_amplitude(res.final_state[k]).c_str());
    }
    std::printf("distribution:");
    for (int k = 0; k < 8; ++k) std::printf(" %s", format_sig(res.distribution[k]).c_str());
    std::printf("\n");
    std::printf("p_gain (quantum)   = %s\n", format_sig(res.p_gain).c_str());
}

int cmd_quantize(const GameArgs& a, const std::string& protocol, const std::string& init,
                 double special_p, bool has_special_p) {
    const EmbeddingKind e1 = EmbeddingKind::type1(sixth_root(a.eta_index));
    const EmbeddingKind e2 = EmbeddingKind::type2(sixth_root(a.eta_index));

    ProtocolResult res;
    double classical = 0.0;
    std::string desc;

    if (protocol == "proper" || protocol == "fna") {
        const GameSpec g = resolve_single(a);
        const EmbeddingKind e =
            a.embedding == "type2" ? EmbeddingKind::type2(sixth_root(a.eta_index)) : e1;
        classical = gain_probability(g.coins, stationary_closed_form(g.coins));
        if (protocol == "proper") {
            res = run_proper(g, e);
            desc = "proper quantization of " + g.label;
        } else {
            const FnaInitial fi = init == "ghz" ? FnaInitial::maximally_entangled
                                                : FnaInitial::basic000;
            res = run_fna(g, fi, e);
            desc = "FNA protocol (" + init + ") on " + g.label;
        }
    } else if (protocol == "special-ab") {
        auto [gb, ga] = resolve_pair(a);
        const double p = has_special_p ? special_p : ga.coins[0];
        const GameSpec m = mix(gb, lift_history_free(p), MixWeight(0.5));
        classical = gain_probability(m.coins, stationary_closed_form(m.coins));
        res = run_special_AB(p, gb, e1);
        desc = "special A'B' case: coin p=" + format_sig(p, 6) + " with " + gb.label;
    } else {
        auto [g1, g2] = resolve_pair(a);
        const GameSpec m = mix(g1, g2, MixWeight(a.r));
        classical = gain_probability(m.coins, stationary_closed_form(m.coins));
        if (protocol == "superposed") {
            res = run_superposed(g1, g2, a.r, e1, e2);
            desc = "superposed multiplexer for " + m.label;
        } else {
            res = run_second_quantization(g1, g2, a.r, e1);
            desc = "second quantization of " + m.label;
        }
    }

    std::printf("protocol: %s\n", desc.c_str());
    std::printf("eta = %s\n", format_amplitude(sixth_root(a.eta_index), 6).c_str());
    print_protocol_result(res);
    std::printf("p_gain (classical) = %s\n", format_sig(classical).c_str());
    const double delta = res.p_gain - classical;
    std::printf("delta              = %s\n", format_sig(delta, 3).c_str());
    if (std::abs(delta) <= 1e-12) {
        std::printf("PROPER: matches the classical game within 1e-12\n");
    } else {
        std::printf("NOT PROPER: deviates from the classical game by %s\n",
                    format_sig(std::abs(delta), 3).c_str());
    }
    return 0;
}

int cmd_compare_fna(const GameArgs& a) {
    const GameSpec g = resolve_single(a);
    const EmbeddingKind e =
        a.embedding == "type2" ? EmbeddingKind::type2(sixth_root(a.eta_index))
                               : EmbeddingKind::type1(sixth_root(a.eta_index));
    const double classical = gain_probability(g.coins, stationary_closed_form(g.coins));
    std::printf("game: %s\n", g.label.c_str());
    std::printf("classical p_gain        = %s\n", format_sig(classical).c_str());

    const ProtocolResult basic = run_fna(g, FnaInitial::basic000, e);
    const ProtocolResult ghz = run_fna(g, FnaInitial::maximally_entangled, e);
    std::printf("FNA |000>   p_gain      = %s   gap = %s\n", format_sig(basic.p_gain).c_str(),
                format_sig(std::abs(basic.p_gain - classical), 6).c_str());
    std::printf("FNA GHZ     p_gain      = %s   gap = %s\n", format_sig(ghz.p_gain).c_str(),
                format_sig(std::abs(ghz.p_gain - classical), 6).c_str());

    const ProtocolResult proper = run_proper(g, e);
    std::printf("proper protocol p_gain  = %s   gap = %s\n", format_sig(proper.p_gain).c_str(),
                format_sig(std::abs(proper.p_gain - classical), 6).c_str());
    return 0;
}

History parse_history(const std::string& s) {
    if (s == "GG") return History::GG;
    if (s == "GL") return History::GL;
    if (s == "LG") return History::LG;
    return History::LL;
}

int cmd_simulate(const GameArgs& a, const SimConfig& cfg) {
    TrajectoryStats stats;
    GameSpec analyzed{CoinSet(0.5, 0.5, 0.5, 0.5), ""};
    if (a.canonical && a.which == "mix") {
        auto [ga, gb] = canonical_example(a.eps);
        stats = simulate_mixed(gb, ga, a.r, cfg);
        analyzed = mix(gb, ga, MixWeight(a.r));
    } else if (!a.canonical && !a.coins2.empty()) {
        if (!a.has_r) throw CLI::ValidationError("game selection", "--coins2 requires --r");
        const GameSpec g1 = game_from_list(a.coins, "game1");
        const GameSpec g2 = game_from_list(a.coins2, "game2");
        stats = simulate_mixed(g1, g2, a.r, cfg);
        analyzed = mix(g1, g2, MixWeight(a.r));
    } else {
        analyzed = resolve_single(a);
        stats = simulate(analyzed, cfg);
    }

    std::printf("game: %s\n", analyzed.label.c_str());
    std::printf("steps=%llu burn_in=%llu seed=%llu\n",
                static_cast<unsigned long long>(cfg.steps),
                static_cast<unsigned long long>(cfg.burn_in),
                static_cast<unsigned long long>(cfg.seed));
    std::printf("gains=%llu empirical_p_gain=%s final_capital=%lld\n",
                static_cast<unsigned long long>(stats.gains),
                format_sig(stats.empirical_p_gain).c_str(),
                static_cast<long long>(stats.final_capital));
    print_distribution(stats.occupancy, "occupancy");

    const double analytic =
        gain_probability(analyzed.coins, stationary_closed_form(analyzed.coins));
    const double sigma =
        std::sqrt(analytic * (1.0 - analytic) / static_cast<double>(cfg.steps));
    std::printf("analytic p_gain=%s |diff|=%s sigma=%s (%.2f sigma)\n",
                format_sig(analytic).c_str(),
                format_sig(std::abs(stats.empirical_p_gain - analytic), 6).c_str(),
                format_sig(sigma, 6).c_str(),
                std::abs(stats.empirical_p_gain - analytic) / sigma);
    return 0;
}

Range parse_range(const std::string& s, const char* what) {
    double lo = 0.0, hi = 0.0;
    int count = 0;
    if (std::sscanf(s.c_str(), "%lf:%lf:%d", &lo, &hi, &count) != 3) {
        throw CLI::ValidationError(what, "expected lo:hi:count");
    }
    return Range(lo, hi, count);
}

int cmd_sweep(const GameArgs& a, const std::string& eps_spec, const std::string& r_spec,
              bool quantum_check, const std::string& qprotocol, const std::string& out_path,
              const std::string& svg_path) {
    SweepSpec spec;
    spec.eps_range = parse_range(eps_spec, "--eps");
    spec.r_range = parse_range(r_spec, "--r");
    spec.quantum_check = quantum_check;
    spec.quantum_use_superposed = qprotocol == "superposed";
    if (!a.coins.empty() || !a.coins2.empty()) {
        if (a.coins.size() != 4 || a.coins2.size() != 4) {
            throw CLI::ValidationError("--coins", "sweep needs both --coins and --coins2");
        }
        spec.canonical = false;
        for (std::size_t j = 0; j < 4; ++j) {
            spec.base1[j] = a.coins[j];
            spec.base2[j] = a.coins2[j];
        }
    }

    const std::vector<SweepCell> cells = grid_scan(spec);

    if (!out_path.empty()) {
        std::ofstream os(out_path);
        if (!os) throw io_error("cannot write " + out_path);
        write_sweep_csv(os, cells);
        if (!os.good()) throw io_error("failed while writing " + out_path);
        std::printf("wrote %s (%zu cells)\n", out_path.c_str(), cells.size());
    }
    if (!svg_path.empty()) {
        std::ofstream os(svg_path);
        if (!os) throw io_error("cannot write " + svg_path);
        write_sweep_svg(os, cells);
        if (!os.good()) throw io_error("failed while writing " + svg_path);
        std::printf("wrote %s\n", svg_path.c_str());
    }

    int effect_cells = 0;
    for (const SweepCell& c : cells) effect_cells += c.effect ? 1 : 0;
    std::printf("%d of %zu cells show the effect\n", effect_cells, cells.size());
    for (const EffectRegion& row : extract_region(cells)) {
        std::printf("eps=%s:", format_sig(row.eps, 6).c_str());
        if (row.r_intervals.empty()) {
            std::printf(" none\n");
            continue;
        }
        for (const auto& [lo, hi] : row.r_intervals) {
            std::printf(" [%s, %s]", format_sig(lo, 6).c_str(), format_sig(hi, 6).c_str());
        }
        std::printf("\n");
    }
    return 0;
}

int cmd_verify(const VerifyOptions& opts) {
    const std::vector<CheckResult> results = run_verification(opts);
    int failed = 0;
    for (const CheckResult& r : results) {
        std::printf("[%s] %-24s worst=%-12s %s\n", r.pass ? "PASS" : "FAIL", r.name.c_str(),
                    format_sig(r.worst, 3).c_str(), r.detail.c_str());
        failed += r.pass ? 0 : 1;
    }
    std::printf("%zu/%zu checks passed\n", results.size() - static_cast<std::size_t>(failed),
                results.size());
    return failed == 0 ? 0 : kExitVerify;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"History-dependent Parrondo games: classical analysis, proper "
                 "quantizations via 3-qubit multiplexers, Monte Carlo and sweeps"};
    app.require_subcommand(1);
    app.set_config("--config", "", "flat key=value config file; flags override");

    GameArgs analyze_args, quantize_args, simulate_args, sweep_args, fna_args;
    double fairness_tol = 1e-12;

    CLI::App* analyze = app.add_subcommand("analyze", "classify a game and print diagnostics");
    add_game_options(analyze, analyze_args, false);
    analyze->add_option("--fairness-tol", fairness_tol, "half-width of the fair band");

    CLI::App* quantize = app.add_subcommand("quantize", "run a quantization protocol");
    add_game_options(quantize, quantize_args, true);
    std::string protocol = "proper";
    std::string fna_init = "basic000";
    double special_p = 0.5;
    bool has_special_p = false;
    quantize->add_option("--protocol", protocol, "proper|superposed|second|special-ab|fna")
        ->check(CLI::IsMember({"proper", "superposed", "second", "special-ab", "fna"}));
    quantize->add_option("--init", fna_init, "FNA initial state")
        ->check(CLI::IsMember({"basic000", "ghz"}));
    quantize->add_option("--p", special_p, "history-free coin for special-ab")
        ->check(CLI::Range(0.0, 1.0))
        ->trigger_on_parse()
        ->each([&has_special_p](const std::string&) { has_special_p = true; });

    CLI::App* verify = app.add_subcommand("verify", "run the full invariant suite");
    VerifyOptions vopts;
    verify->add_option("--trials", vopts.trials, "random draws per identity check")
        ->check(CLI::PositiveNumber);
    verify->add_option("--seed", vopts.seed, "master seed")->envname("PARRONDO_SEED");
    verify->add_option("--perturb", vopts.perturb, "fault injection offset");
    verify->add_option("--mc-steps", vopts.mc_steps, "Monte Carlo steps");

    CLI::App* simulate = app.add_subcommand("simulate", "Monte Carlo trajectory of a game");
    add_game_options(simulate, simulate_args, false);
    SimConfig sim_cfg;
    std::string init_history = "GG";
    simulate->add_option("--steps", sim_cfg.steps, "counted coin flips")
        ->check(CLI::PositiveNumber);
    simulate->add_option("--burn-in", sim_cfg.burn_in, "uncounted warm-up flips");
    simulate->add_option("--seed", sim_cfg.seed, "RNG seed")->envname("PARRONDO_SEED");
    simulate->add_option("--init-history", init_history, "starting history")
        ->check(CLI::IsMember({"GG", "GL", "LG", "LL"}));

    CLI::App* sweep = app.add_subcommand("sweep", "scan the (eps, r) grid");
    sweep->add_flag("--canonical", sweep_args.canonical,
                    "sweep the canonical pair (the default)");
    sweep->add_option("--coins", sweep_args.coins,
                      "explicit base coins of the first game (default canonical A')")
        ->delimiter(',')
        ->expected(4);
    sweep->add_option("--coins2", sweep_args.coins2,
                      "explicit base coins of the second game (default canonical B')")
        ->delimiter(',')
        ->expected(4);
    std::string eps_spec = "0.001:0.005:5";
    std::string r_spec = "0:1:11";
    bool quantum_check = false;
    std::string qprotocol = "second";
    std::string out_path, svg_path;
    sweep->add_option("--eps", eps_spec, "epsilon range lo:hi:count");
    sweep->add_option("--r", r_spec, "mix range lo:hi:count");
    sweep->add_flag("--quantum-check", quantum_check,
                    "record |quantum - classical| per cell");
    sweep->add_option("--quantum-protocol", qprotocol, "second|superposed")
        ->check(CLI::IsMember({"second", "superposed"}));
    sweep->add_option("--out", out_path, "CSV output path");
    sweep->add_option("--svg", svg_path, "SVG heatmap path");

    CLI::App* compare = app.add_subcommand("compare-fna",
                                           "FNA protocols vs the classical game");
    add_game_options(compare, fna_args, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (app.got_subcommand(analyze)) return cmd_analyze(analyze_args, fairness_tol);
        if (app.got_subcommand(quantize)) {
            return cmd_quantize(quantize_args, protocol, fna_init, special_p, has_special_p);
        }
        if (app.got_subcommand(verify)) return cmd_verify(vopts);
        if (app.got_subcommand(simulate)) {
            sim_cfg.initial_history = parse_history(init_history);
            return cmd_simulate(simulate_args, sim_cfg);
        }
        if (app.got_subcommand(sweep)) {
            return cmd_sweep(sweep_args, eps_spec, r_spec, quantum_check, qprotocol,
                             out_path, svg_path);
        }
        if (app.got_subcommand(compare)) return cmd_compare_fna(fna_args);
    } catch (const CLI::ValidationError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitUsage;
    } catch (const io_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitIo;
    } catch (const degenerate_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitDegenerate;
    } catch (const parameter_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitUsage;
    } catch (const parrondo::error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitVerify;
    }
    return 0;
}
