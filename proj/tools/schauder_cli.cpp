// Command line driver: every pipeline in the library behind one binary,
// emitting CSV/report artifacts with reproducible bytes.

#include "schauder/schauder.hpp"

#include "CLI11.hpp"

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace fs = std::filesystem;
using namespace schauder;

namespace {

struct ScheduleOpts {
    std::string name = "takagi";
    double beta = 0.75;
    std::string levels = "1,2,6,24";
    std::string explicit_path;
    double a = 0.0;
    double b = 0.0;
    int depth = 30;

    void attach(CLI::App* cmd) {
        cmd->add_option("--schedule", name,
                        "takagi | takagi_log | sqrt_bridge | nonhoelder | power | lacunary | zero")
            ->capture_default_str();
        cmd->add_option("--beta", beta, "exponent for --schedule power")->capture_default_str();
        cmd->add_option("--levels", levels, "comma list of lacunary levels")->capture_default_str();
        cmd->add_option("--explicit", explicit_path, "n,i,gamma CSV overriding --schedule");
        cmd->add_option("--a", a, "value at 0")->capture_default_str();
        cmd->add_option("--b", b, "slope term")->capture_default_str();
        cmd->add_option("--depth", depth, "series truncation depth (<= 50)")->capture_default_str();
    }

    std::vector<int> level_list() const {
        std::vector<int> out;
        std::stringstream ss(levels);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            if (!tok.empty()) out.push_back(std::stoi(tok));
        }
        return out;
    }

    CoefficientSchedule schedule() const {
        if (!explicit_path.empty()) {
            std::ifstream in(explicit_path);
            if (!in) throw std::runtime_error("cannot open " + explicit_path);
            return read_coefficient_csv(in);
        }
        return named_schedule(name, beta, level_list());
    }

    SchauderSeries series() const { return SchauderSeries(a, b, schedule(), depth); }

    void describe(std::map<std::string, std::string>& meta) const {
        meta["schedule"] = explicit_path.empty() ? name : ("explicit:" + explicit_path);
        if (explicit_path.empty() && name == "power") meta["beta"] = format17(beta);
        if (explicit_path.empty() && name == "lacunary") meta["levels"] = levels;
        meta["a"] = format17(a);
        meta["b"] = format17(b);
        meta["depth"] = std::to_string(depth);
    }
};

void write_meta(const fs::path& dir, const std::string& command,
                std::map<std::string, std::string> meta) {
    meta["command"] = command;
    atomic_write(dir / "meta.txt", [&meta](std::ostream& out) {
        for (const auto& [k, v] : meta) out << k << '=' << v << '\n';
    });
}

fs::path ensure_out(const std::string& out_dir) {
    fs::path dir(out_dir);
    fs::create_directories(dir);
    return dir;
}

Side parse_side(const std::string& side) {
    if (side == "left") return Side::Left;
    if (side == "right") return Side::Right;
    throw CLI::ValidationError("--side must be left or right");
}

// ---- subcommand bodies ----------------------------------------------------

int run_synth(const ScheduleOpts& so, const std::string& out_dir, int grid_level) {
    const fs::path dir = ensure_out(out_dir);
    const SampleGrid grid = so.series().eval_grid(grid_level);
    atomic_write(dir / "grid.csv", [&grid](std::ostream& out) { grid.write_csv(out); });
    std::map<std::string, std::string> meta;
    so.describe(meta);
    meta["grid"] = std::to_string(grid_level);
    write_meta(dir, "synth", meta);
    return 0;
}

int run_analyze(const std::string& grid_path, const std::string& out_dir) {
    const fs::path dir = ensure_out(out_dir);
    std::ifstream in(grid_path);
    if (!in) throw std::runtime_error("cannot open " + grid_path);
    const SampleGrid grid = SampleGrid::read_csv(in);
    const AnalyzedSeries an = analyze(grid);
    atomic_write(dir / "coeffs.csv", [&an](std::ostream& out) { an.write_csv(out); });
    std::map<std::string, std::string> meta;
    meta["grid_file"] = grid_path;
    meta["grid_level"] = std::to_string(grid.level);
    meta["a"] = format17(an.a);
    meta["b"] = format17(an.b);
    write_meta(dir, "analyze", meta);
    return 0;
}

int run_regularity(const ScheduleOpts& so, const std::string& out_dir) {
    const fs::path dir = ensure_out(out_dir);
    const LevelExtremes ex = level_extremes(so.schedule(), so.depth);
    const RegularityReport report = classify(ex);
    atomic_write(dir / "extremes.csv", [&ex](std::ostream& out) { ex.write_csv(out); });
    atomic_write(dir / "report.txt", [&report](std::ostream& out) { out << report.to_text(); });
    std::map<std::string, std::string> meta;
    so.describe(meta);
    write_meta(dir, "regularity", meta);
    return 0;
}

int run_scan(const ScheduleOpts& so, const std::string& out_dir, double x0, const std::string& side,
             int m_min, int m_max, int probes) {
    const fs::path dir = ensure_out(out_dir);
    const SchauderSeries f = so.series();
    Evaluator ev = [&f](double x) { return f.eval(x); };

    std::ostringstream report;
    for (const std::string s : {std::string("left"), std::string("right")}) {
        if (side != "both" && side != s) continue;
        const Side sd = parse_side(s);
        const HolderScanResult h = holder_scan(ev, x0, sd, m_min, m_max, probes);
        const DerivativeScan d = derivative_scan(ev, x0, sd, m_min, m_max);
        atomic_write(dir / ("holder_" + s + ".csv"), [&h](std::ostream& out) { h.write_csv(out); });
        atomic_write(dir / ("deriv_" + s + ".csv"), [&d](std::ostream& out) { d.write_csv(out); });
        report << s << "_exponent_estimate="
               << (h.infinite_flag ? "inf" : format17(h.exponent_estimate)) << '\n';
        report << s << "_derivative_verdict=" << d.verdict_name() << '\n';
        if (d.verdict == ScanVerdict::Converges) {
            report << s << "_derivative_limit=" << format17(d.limit_estimate) << '\n';
        }
        report << s << "_max_abs_quotient=" << format17(d.max_abs_q) << '\n';
    }
    atomic_write(dir / "report.txt", [&report](std::ostream& out) { out << report.str(); });

    std::map<std::string, std::string> meta;
    so.describe(meta);
    meta["x0"] = format17(x0);
    meta["side"] = side;
    meta["m_min"] = std::to_string(m_min);
    meta["m_max"] = std::to_string(m_max);
    meta["probes"] = std::to_string(probes);
    write_meta(dir, "scan", meta);
    return 0;
}

int run_compose(const ScheduleOpts& so, const std::string& out_dir, const std::string& poly,
                const std::string& patch_file, double power_lambda, int grid_level) {
    const fs::path dir = ensure_out(out_dir);
    const SchauderSeries f = so.series();

    int picked = (!poly.empty() ? 1 : 0) + (!patch_file.empty() ? 1 : 0) + (power_lambda > 0 ? 1 : 0);
    if (picked != 1) {
        throw CLI::ValidationError("compose needs exactly one of --poly, --patch-file, --power-lambda");
    }

    Evaluator composed;
    std::map<std::string, std::string> meta;
    so.describe(meta);
    if (!poly.empty()) {
        const std::string text = poly.rfind("poly:", 0) == 0 ? poly : "poly: " + poly;
        const Polynomial P = Polynomial::parse(text);
        composed = compose_poly([&f](double x) { return f.eval(x); }, P);
        meta["poly"] = P.to_string();
    } else if (!patch_file.empty()) {
        std::ifstream in(patch_file);
        if (!in) throw std::runtime_error("cannot open " + patch_file);
        PatchSet set;
        std::string line;
        while (std::getline(in, line)) {
            if (!line.empty()) set.patches.push_back(PowerSeriesPatch::parse(line));
        }
        composed = compose_analytic(f, set, std::min(grid_level, 14));
        meta["patch_file"] = patch_file;
    } else {
        composed = power_family(f, power_lambda, std::min(grid_level, 14));
        meta["lambda"] = format17(power_lambda);
    }

    SampleGrid grid;
    grid.level = grid_level;
    grid.values.resize((std::size_t{1} << grid_level) + 1);
    for (std::size_t j = 0; j < grid.values.size(); ++j) grid.values[j] = composed(grid.x_of(j));
    atomic_write(dir / "grid.csv", [&grid](std::ostream& out) { grid.write_csv(out); });

    const AnalyzedSeries an = analyze(grid);
    atomic_write(dir / "coeffs.csv", [&an](std::ostream& out) { an.write_csv(out); });
    if (grid.level - 1 >= 8) {
        const RegularityReport report = classify(level_extremes(an.table, grid.level - 1));
        atomic_write(dir / "report.txt", [&report](std::ostream& out) { out << report.to_text(); });
    } else {
        atomic_write(dir / "report.txt", [&grid](std::ostream& out) {
            out << "depth=" << grid.level - 1 << '\n';
            out << "note=grid too shallow for regularity verdicts (needs depth >= 8)\n";
        });
    }

    meta["grid"] = std::to_string(grid_level);
    write_meta(dir, "compose", meta);
    return 0;
}

int run_omega(const ScheduleOpts& so, const std::string& out_dir, double x0, int grid_level,
              int m_max) {
    const fs::path dir = ensure_out(out_dir);
    const SchauderSeries f = so.series();
    auto shift = vanish_shift([&f](double x) { return f.eval(x); }, x0);
    const ModulusTable table = omega_modulus(shift.g, x0, grid_level);
    Evaluator h = differentiable_element(shift.g, x0, table);

    atomic_write(dir / "omega.csv", [&table](std::ostream& out) { table.write_csv(out); });
    atomic_write(dir / "quotients.csv", [&](std::ostream& out) {
        out << "m,side,q,bound\n";
        for (int m = 2; m <= m_max; ++m) {
            const double hh = std::exp2(-m);
            const double slack = 1.0 + std::exp2(m - grid_level);
            for (const std::string side : {std::string("left"), std::string("right")}) {
                const double x = side == "left" ? x0 - hh : x0 + hh;
                if (x < 0.0 || x > 1.0) continue;
                const double q = (h(x) - h(x0)) / (x - x0);
                out << m << ',' << side << ',' << format17(q) << ','
                    << format17(hh * slack * slack) << '\n';
            }
        }
    });

    std::map<std::string, std::string> meta;
    so.describe(meta);
    meta["x0"] = format17(x0);
    meta["grid_level"] = std::to_string(grid_level);
    meta["m_max"] = std::to_string(m_max);
    meta["non_constant"] = shift.non_constant ? "true" : "false";
    write_meta(dir, "omega", meta);
    return 0;
}

int run_levelset(const ScheduleOpts& so, const std::string& out_dir, double lambda, bool kahane,
                 int level_min, int level_max, int threads) {
    const fs::path dir = ensure_out(out_dir);
    const SchauderSeries f = so.series();
    if (kahane) lambda = 4.0 / 3.0;  // the max-level set under this normalization
    std::vector<CoverCount> counts;
    for (int n = level_min; n <= level_max; ++n) {
        counts.push_back(cover_count(f, lambda, n, threads));
    }
    const DimensionFit fit = dimension_fit(counts);
    atomic_write(dir / "counts.csv", [&fit](std::ostream& out) { fit.write_csv(out); });
    atomic_write(dir / "fit.txt", [&fit](std::ostream& out) { out << fit.to_text(); });

    std::map<std::string, std::string> meta;
    so.describe(meta);
    meta["lambda"] = format17(lambda);
    meta["level_min"] = std::to_string(level_min);
    meta["level_max"] = std::to_string(level_max);
    write_meta(dir, "levelset", meta);
    return 0;
}

int run_bridge(const std::string& out_dir, int depth, std::uint64_t seed, int grid_level,
               int ensemble) {
    const fs::path dir = ensure_out(out_dir);
    const BridgeSample b = bridge_sample(depth, seed);
    const SampleGrid grid = b.series.eval_grid(grid_level);
    atomic_write(dir / "grid.csv", [&grid](std::ostream& out) { grid.write_csv(out); });
    const AnalyzedSeries an = analyze(grid);
    atomic_write(dir / "coeffs.csv", [&an](std::ostream& out) { an.write_csv(out); });

    std::ostringstream report;
    report << "value_at_0=" << format17(b.series.eval(0.0)) << '\n';
    report << "value_at_1=" << format17(b.series.eval(1.0)) << '\n';
    report << "value_at_half=" << format17(b.series.eval(0.5)) << '\n';
    if (ensemble > 1) {
        double sum = 0.0, sumsq = 0.0;
        for (int t = 0; t < ensemble; ++t) {
            const double v = rng::normal(seed + static_cast<std::uint64_t>(t), 0, 0);
            sum += v;
            sumsq += v * v;
        }
        const double mean = sum / ensemble;
        const double var = (sumsq - ensemble * mean * mean) / (ensemble - 1);
        report << "ensemble=" << ensemble << '\n';
        report << "ensemble_mean_at_half=" << format17(mean) << '\n';
        report << "ensemble_var_at_half=" << format17(var) << '\n';
    }
    atomic_write(dir / "report.txt", [&report](std::ostream& out) { out << report.str(); });

    std::map<std::string, std::string> meta;
    meta["depth"] = std::to_string(depth);
    meta["seed"] = std::to_string(seed);
    meta["grid"] = std::to_string(grid_level);
    meta["ensemble"] = std::to_string(ensemble);
    write_meta(dir, "bridge", meta);
    return 0;
}

int run_percolate(const std::string& out_dir, int n, int k, double eps, int trials,
                  std::uint64_t seed, int threads) {
    const fs::path dir = ensure_out(out_dir);
    const PercolationEstimate est = percolation_estimate(n, k, eps, trials, seed, threads);
    atomic_write(dir / "trials.csv", [&](std::ostream& out) {
        out << "trial,seed,success\n";
        for (int t = 0; t < trials; ++t) {
            const auto ts = seed + static_cast<std::uint64_t>(t);
            const bool hit = percolation_trial(n, k, eps, ts).exists_exceptional_path;
            out << t << ',' << ts << ',' << (hit ? 1 : 0) << '\n';
        }
    });
    atomic_write(dir / "summary.txt", [&est](std::ostream& out) { out << est.to_text(); });

    std::map<std::string, std::string> meta;
    meta["n"] = std::to_string(n);
    meta["k"] = std::to_string(k);
    meta["eps"] = format17(eps);
    meta["trials"] = std::to_string(trials);
    meta["seed"] = std::to_string(seed);
    write_meta(dir, "percolate", meta);
    return 0;
}

int run_figures(const std::string& out_dir, int grid_level, int depth) {
    const fs::path dir = ensure_out(out_dir);
    const std::pair<const char*, const char*> figs[] = {
        {"fig1.csv", "takagi"},
        {"fig2.csv", "takagi_log"},
        {"fig3.csv", "sqrt_bridge"},
        {"fig4.csv", "nonhoelder"},
    };
    for (const auto& [file, schedule] : figs) {
        SchauderSeries f(0.0, 0.0, named_schedule(schedule), depth);
        const SampleGrid grid = f.eval_grid(grid_level);
        atomic_write(dir / file, [&grid](std::ostream& out) { grid.write_csv(out); });
    }
    std::map<std::string, std::string> meta;
    meta["grid"] = std::to_string(grid_level);
    meta["depth"] = std::to_string(depth);
    meta["fig1"] = "takagi";
    meta["fig2"] = "takagi_log";
    meta["fig3"] = "sqrt_bridge";
    meta["fig4"] = "nonhoelder";
    write_meta(dir, "figures", meta);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Faber-Schauder series toolkit: synthesis, regularity analysis, level sets, bridges"};
    app.require_subcommand(1);

    // the only environment knob: a default output directory override
    std::string out_dir = "out";
    if (const char* env = std::getenv("SCHAUDER_OUT")) out_dir = env;

    // synth
    auto* synth = app.add_subcommand("synth", "sample a series onto a dyadic grid CSV");
    ScheduleOpts synth_so;
    synth_so.attach(synth);
    int synth_grid = 12;
    synth->add_option("--grid", synth_grid, "grid level M, 2^M+1 samples")->capture_default_str();
    synth->add_option("--out", out_dir, "output directory")->capture_default_str();

    // analyze
    auto* an = app.add_subcommand("analyze", "read coefficients off a grid CSV");
    std::string grid_file;
    an->add_option("--grid-file", grid_file, "input x,value CSV")->required();
    an->add_option("--out", out_dir, "output directory")->capture_default_str();

    // regularity
    auto* reg = app.add_subcommand("regularity", "per-level extremes, exponents and verdicts");
    ScheduleOpts reg_so;
    reg_so.attach(reg);
    reg->add_option("--out", out_dir, "output directory")->capture_default_str();

    // scan
    auto* scan = app.add_subcommand("scan", "pointwise Hoelder and derivative scans");
    ScheduleOpts scan_so;
    scan_so.attach(scan);
    double scan_x0 = 0.5;
    std::string scan_side = "both";
    int scan_m_min = 6, scan_m_max = 24, scan_probes = 48;
    scan->add_option("--x0", scan_x0)->capture_default_str();
    scan->add_option("--side", scan_side, "left | right | both")->capture_default_str();
    scan->add_option("--m-min", scan_m_min)->capture_default_str();
    scan->add_option("--m-max", scan_m_max)->capture_default_str();
    scan->add_option("--probes", scan_probes, "probe points per scale band")->capture_default_str();
    scan->add_option("--out", out_dir, "output directory")->capture_default_str();

    // compose
    auto* comp = app.add_subcommand("compose", "polynomial/analytic/power composition + analysis");
    ScheduleOpts comp_so;
    comp_so.attach(comp);
    std::string comp_poly, comp_patches;
    double comp_lambda = 0.0;
    int comp_grid = 12;
    comp->add_option("--poly", comp_poly, "`c0 c1 ...` ascending coefficients");
    comp->add_option("--patch-file", comp_patches, "file of `patch: y0 radius c0 ...` lines");
    comp->add_option("--power-lambda", comp_lambda, "pointwise power f^lambda");
    comp->add_option("--grid", comp_grid)->capture_default_str();
    comp->add_option("--out", out_dir, "output directory")->capture_default_str();

    // omega
    auto* om = app.add_subcommand("omega", "modulus construction of a differentiable element");
    ScheduleOpts om_so;
    om_so.attach(om);
    double om_x0 = 0.5;
    int om_grid = 18, om_m_max = 16;
    om->add_option("--x0", om_x0)->capture_default_str();
    om->add_option("--grid-level", om_grid)->capture_default_str();
    om->add_option("--m-max", om_m_max)->capture_default_str();
    om->add_option("--out", out_dir, "output directory")->capture_default_str();

    // levelset
    auto* ls = app.add_subcommand("levelset", "dyadic covering counts and dimension fit");
    ScheduleOpts ls_so;
    ls_so.attach(ls);
    double ls_lambda = 0.9;
    bool ls_kahane = false;
    int ls_min = 8, ls_max = 16, ls_threads = 1;
    ls->add_option("--lambda", ls_lambda)->capture_default_str();
    ls->add_flag("--lambda-kahane", ls_kahane, "use the max-level value 4/3");
    ls->add_option("--level-min", ls_min)->capture_default_str();
    ls->add_option("--level-max", ls_max)->capture_default_str();
    ls->add_option("--threads", ls_threads)->capture_default_str();
    ls->add_option("--out", out_dir, "output directory")->capture_default_str();

    // bridge
    auto* br = app.add_subcommand("bridge", "sample a Brownian bridge through the expansion");
    int br_depth = 20, br_grid = 10, br_ensemble = 0;
    std::uint64_t br_seed = 1;
    br->add_option("--depth", br_depth)->capture_default_str();
    br->add_option("--seed", br_seed)->capture_default_str();
    br->add_option("--grid", br_grid)->capture_default_str();
    br->add_option("--ensemble", br_ensemble, "seeds for the midpoint variance estimate")
        ->capture_default_str();
    br->add_option("--out", out_dir, "output directory")->capture_default_str();

    // percolate
    auto* pc = app.add_subcommand("percolate", "exceptional-vertex band percolation Monte Carlo");
    int pc_n = 12, pc_k = 5, pc_trials = 1000, pc_threads = 1;
    double pc_eps = 0.9;
    std::uint64_t pc_seed = 1;
    pc->add_option("--n", pc_n)->capture_default_str();
    pc->add_option("--k", pc_k)->capture_default_str();
    pc->add_option("--eps", pc_eps)->capture_default_str();
    pc->add_option("--trials", pc_trials)->capture_default_str();
    pc->add_option("--seed", pc_seed)->capture_default_str();
    pc->add_option("--threads", pc_threads)->capture_default_str();
    pc->add_option("--out", out_dir, "output directory")->capture_default_str();

    // figures
    auto* fig = app.add_subcommand("figures", "grid datasets for the four reference schedules");
    int fig_grid = 14, fig_depth = 30;
    fig->add_option("--grid", fig_grid)->capture_default_str();
    fig->add_option("--depth", fig_depth)->capture_default_str();
    fig->add_option("--out", out_dir, "output directory")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        std::cerr << "error: usage: " << e.what() << '\n';
        return 2;
    }

    try {
        if (*synth) return run_synth(synth_so, out_dir, synth_grid);
        if (*an) return run_analyze(grid_file, out_dir);
        if (*reg) return run_regularity(reg_so, out_dir);
        if (*scan) {
            return run_scan(scan_so, out_dir, scan_x0, scan_side, scan_m_min, scan_m_max, scan_probes);
        }
        if (*comp) return run_compose(comp_so, out_dir, comp_poly, comp_patches, comp_lambda, comp_grid);
        if (*om) return run_omega(om_so, out_dir, om_x0, om_grid, om_m_max);
        if (*ls) return run_levelset(ls_so, out_dir, ls_lambda, ls_kahane, ls_min, ls_max, ls_threads);
        if (*br) return run_bridge(out_dir, br_depth, br_seed, br_grid, br_ensemble);
        if (*pc) return run_percolate(out_dir, pc_n, pc_k, pc_eps, pc_trials, pc_seed, pc_threads);
        if (*fig) return run_figures(out_dir, fig_grid, fig_depth);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: usage: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: computation: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
