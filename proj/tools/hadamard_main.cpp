// Command-line driver: experiment runners, counterexample demos, and the
// property-suite validator. JSON config file with CLI overrides; every output
// embeds its resolved configuration (minus execution-only knobs) and seed.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hadamard/experiments.hpp"
#include "hadamard/io.hpp"
#include "hadamard/validate.hpp"

using nlohmann::json;
using namespace hadamard;

namespace {

struct GlobalOpts {
    std::string config_path;
    std::string out_dir = "out";
    std::uint64_t seed = 1;
    int workers = default_workers();
    bool plots = false;
    std::optional<std::uint64_t> reps;
    std::optional<std::uint64_t> oracle_reps;
    bool out_dir_set = false, seed_set = false, workers_set = false;

    json config;  // parsed file (or empty object)
};

void reject_unknown_keys(const json& obj, const std::set<std::string>& allowed,
                         const std::string& where) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        if (!allowed.count(it.key()))
            throw domain_error("unknown config key '" + it.key() + "' in " + where);
    }
}

json load_config(GlobalOpts& g) {
    if (g.config_path.empty()) return json::object();
    std::ifstream f(g.config_path);
    if (!f.good()) throw domain_error("cannot read config file: " + g.config_path);
    json cfg = json::parse(f);
    reject_unknown_keys(cfg,
                        {"seed", "workers", "out_dir", "plots", "table1", "spd_bayes",
                         "spd_freq", "demo_circle", "validate"},
                        "top level");
    if (cfg.contains("seed") && !g.seed_set) g.seed = cfg["seed"].get<std::uint64_t>();
    if (cfg.contains("workers") && !g.workers_set) g.workers = cfg["workers"].get<int>();
    if (cfg.contains("out_dir") && !g.out_dir_set)
        g.out_dir = cfg["out_dir"].get<std::string>();
    if (cfg.contains("plots")) g.plots = g.plots || cfg["plots"].get<bool>();
    return cfg;
}

json section(const json& cfg, const std::string& name,
             const std::set<std::string>& allowed) {
    if (!cfg.contains(name)) return json::object();
    reject_unknown_keys(cfg[name], allowed, name);
    return cfg[name];
}

template <class T>
void maybe(const json& sec, const char* key, T& target) {
    if (sec.contains(key)) target = sec[key].get<T>();
}

void write_outputs(const GlobalOpts& g, const std::string& stem,
                   const std::vector<CsvRow>& rows, const std::string& config_json,
                   const std::vector<SvgSeries>& plot_series,
                   const std::string& plot_title) {
    std::filesystem::create_directories(g.out_dir);
    std::string base = g.out_dir + "/" + stem;
    write_file(base + ".csv", csv_text(rows, config_json));
    write_file(base + ".json", json_mirror_text(rows, config_json));
    if (g.plots && !plot_series.empty())
        write_file(base + ".svg", svg_line_plot(plot_series, plot_title));
    std::cout << "wrote " << base << ".csv (" << rows.size() << " rows)\n";
}

WalkLaw parse_walk_law(const std::string& s) {
    if (s == "lazy") return WalkLaw::Lazy;
    if (s == "uniform") return WalkLaw::UniformMove;
    throw domain_error("walk_law must be 'lazy' or 'uniform'");
}

int cmd_table1(GlobalOpts& g, const std::string& walk_override) {
    json sec = section(g.config, "table1",
                       {"reps", "k_tau", "k_sigma_list", "psi_distances", "walk_law",
                        "include_xbar", "include_oracle"});
    Table1Spec spec;
    spec.seed = g.seed;
    spec.workers = g.workers;
    maybe(sec, "reps", spec.reps);
    maybe(sec, "k_tau", spec.k_tau);
    maybe(sec, "k_sigma_list", spec.k_sigma_list);
    maybe(sec, "psi_distances", spec.psi_distances);
    maybe(sec, "include_xbar", spec.include_xbar);
    maybe(sec, "include_oracle", spec.include_oracle);
    if (sec.contains("walk_law")) spec.law = parse_walk_law(sec["walk_law"]);
    if (!walk_override.empty()) spec.law = parse_walk_law(walk_override);
    if (g.reps) spec.reps = *g.reps;

    auto cells = run_table1(spec);
    json resolved = {{"experiment", "table1"},
                     {"seed", spec.seed},
                     {"reps", spec.reps},
                     {"k_tau", spec.k_tau},
                     {"k_sigma_list", spec.k_sigma_list},
                     {"psi_distances", spec.psi_distances},
                     {"walk_law", walk_law_name(spec.law)},
                     {"include_xbar", spec.include_xbar},
                     {"include_oracle", spec.include_oracle}};
    std::vector<SvgSeries> series;
    for (std::size_t c = 0; c < cells.size(); ++c) {
        const std::string& col = cells[c].column;
        auto it = std::find_if(series.begin(), series.end(),
                               [&](const SvgSeries& s) { return s.label == col; });
        if (it == series.end()) {
            series.push_back({col, {}, {}});
            it = series.end() - 1;
        }
        it->x.push_back(cells[c].k_sigma);
        it->y.push_back(cells[c].ratio);
    }
    write_outputs(g, "table1", table1_csv_rows(spec, cells), resolved.dump(), series,
                  "risk ratio vs k_sigma");
    for (const auto& c : cells)
        std::cout << "k_sigma=" << c.k_sigma << " " << c.column << " ratio=" << c.ratio
                  << " se=" << c.std_error << "\n";
    return 0;
}

int cmd_spd(GlobalOpts& g, bool bayes) {
    if (bayes) {
        json sec = section(g.config, "spd_bayes",
                           {"k", "alphas", "n_list", "psi_scalars", "outer", "inner",
                            "oracle_reps", "const_psi_draws", "const_oracle_reps",
                            "include_xbar", "include_mu", "include_best"});
        SpdBayesSpec spec;
        spec.seed = g.seed;
        spec.workers = g.workers;
        maybe(sec, "k", spec.k);
        maybe(sec, "alphas", spec.alphas);
        maybe(sec, "n_list", spec.n_list);
        maybe(sec, "psi_scalars", spec.psi_scalars);
        maybe(sec, "outer", spec.outer);
        maybe(sec, "inner", spec.inner);
        maybe(sec, "oracle_reps", spec.oracle_reps);
        maybe(sec, "const_psi_draws", spec.const_psi_draws);
        maybe(sec, "const_oracle_reps", spec.const_oracle_reps);
        maybe(sec, "include_xbar", spec.include_xbar);
        maybe(sec, "include_mu", spec.include_mu);
        maybe(sec, "include_best", spec.include_best);
        if (g.reps) spec.outer = *g.reps;
        if (g.oracle_reps) spec.oracle_reps = static_cast<int>(*g.oracle_reps);

        auto rows = run_spd_bayes(spec);
        json resolved = {{"experiment", "spd-bayes"}, {"seed", spec.seed},
                         {"k", spec.k},               {"alphas", spec.alphas},
                         {"n_list", spec.n_list},     {"psi_scalars", spec.psi_scalars},
                         {"outer", spec.outer},       {"inner", spec.inner},
                         {"oracle_reps", spec.oracle_reps},
                         {"const_psi_draws", spec.const_psi_draws},
                         {"const_oracle_reps", spec.const_oracle_reps}};
        std::vector<CsvRow> csv;
        std::vector<SvgSeries> series;
        for (const auto& r : rows) {
            csv.push_back({"spd-bayes", r.n, std::to_string(r.alpha), r.estimator,
                           r.estimator == "x" ? "identity" : "geodesic_js", r.mean_loss,
                           r.std_error, r.replicates, spec.seed});
            std::string label = "a" + std::to_string(r.alpha) + ":" + r.estimator;
            auto it = std::find_if(series.begin(), series.end(),
                                   [&](const SvgSeries& s) { return s.label == label; });
            if (it == series.end()) {
                series.push_back({label, {}, {}});
                it = series.end() - 1;
            }
            it->x.push_back(r.n);
            it->y.push_back(r.mean_loss);
        }
        write_outputs(g, "spd-bayes", csv, resolved.dump(), series, "Bayes risk vs n");
        return 0;
    }
    json sec = section(g.config, "spd_freq",
                       {"k", "n_list", "psi_scalars", "include_xbar", "psi_draws",
                        "inner", "oracle_reps"});
    SpdFreqSpec spec;
    spec.seed = g.seed;
    spec.workers = g.workers;
    maybe(sec, "k", spec.k);
    maybe(sec, "n_list", spec.n_list);
    maybe(sec, "psi_scalars", spec.psi_scalars);
    maybe(sec, "include_xbar", spec.include_xbar);
    maybe(sec, "psi_draws", spec.psi_draws);
    maybe(sec, "inner", spec.inner);
    maybe(sec, "oracle_reps", spec.oracle_reps);
    if (g.reps) spec.inner = *g.reps;
    if (g.oracle_reps) spec.oracle_reps = static_cast<int>(*g.oracle_reps);

    auto rows = run_spd_freq(spec);
    json resolved = {{"experiment", "spd-freq"},       {"seed", spec.seed},
                     {"k", spec.k},                    {"n_list", spec.n_list},
                     {"psi_scalars", spec.psi_scalars},{"psi_draws", spec.psi_draws},
                     {"inner", spec.inner},            {"oracle_reps", spec.oracle_reps}};
    std::vector<CsvRow> csv;
    std::vector<SvgSeries> series;
    for (const auto& r : rows) {
        csv.push_back({"spd-freq", r.n, "0", r.shrink_point, "proportion_js_dominates",
                       r.proportion, 0.0, static_cast<std::uint64_t>(r.psi_draws),
                       spec.seed});
        auto it = std::find_if(series.begin(), series.end(), [&](const SvgSeries& s) {
            return s.label == r.shrink_point;
        });
        if (it == series.end()) {
            series.push_back({r.shrink_point, {}, {}});
            it = series.end() - 1;
        }
        it->x.push_back(r.n);
        it->y.push_back(r.proportion);
        std::cout << "n=" << r.n << " " << r.shrink_point
                  << " proportion=" << r.proportion << "\n";
    }
    write_outputs(g, "spd-freq", csv, resolved.dump(), series,
                  "proportion dominating vs n");
    return 0;
}

int cmd_demo_tripod(GlobalOpts& g) {
    TripodReport r = demo_tripod();
    std::cout << "tripod arms: A=1, B=2, C=1 from the center\n"
              << "d(A,B) = " << r.d_ab << "\n"
              << "d(A,C) = " << r.d_ac << "\n"
              << "Frechet mean of {A,B,C} at the center: "
              << (r.mean_is_center ? "yes" : "NO") << "\n"
              << "conditional-law mean offset toward B: " << r.conditional_mean_offset
              << "\n"
              << "tower-rule gap d(E2 X, E2 E2(X|Y)) = " << r.tower_gap << "\n"
              << "note: " << r.note << "\n";
    std::vector<CsvRow> rows{
        {"demo-tripod", 1, "0", "center", "d_ab", r.d_ab, 0.0, 1, g.seed},
        {"demo-tripod", 1, "0", "center", "d_ac", r.d_ac, 0.0, 1, g.seed},
        {"demo-tripod", 1, "0", "center", "tower_gap", r.tower_gap, 0.0, 1, g.seed}};
    write_outputs(g, "demo-tripod", rows, json{{"experiment", "demo-tripod"}}.dump(),
                  {}, "");
    bool ok = r.d_ab == 3.0 && r.d_ac == 2.0 && r.mean_is_center &&
              std::abs(r.tower_gap - 2.0 / 3.0) <= 1e-9;
    if (!ok) std::cout << "FAIL: tripod demo assertions violated\n";
    return ok ? 0 : 1;
}

int cmd_demo_circle(GlobalOpts& g) {
    json sec = section(g.config, "demo_circle", {"reps", "t_grid"});
    std::uint64_t reps = 100000;
    std::vector<double> t_grid;
    for (int i = 1; i <= 10; ++i) t_grid.push_back(0.05 * i);
    maybe(sec, "reps", reps);
    maybe(sec, "t_grid", t_grid);
    if (g.reps) reps = *g.reps;

    std::vector<double> grid_with_zero{0.0};
    grid_with_zero.insert(grid_with_zero.end(), t_grid.begin(), t_grid.end());
    CircleDemoResult res = demo_circle(grid_with_zero, reps, g.seed, g.workers);

    json resolved = {{"experiment", "demo-circle"},
                     {"seed", g.seed},
                     {"reps", reps},
                     {"t_grid", grid_with_zero}};
    std::vector<CsvRow> rows;
    std::vector<SvgSeries> series(2);
    series[0].label = "psi antipodal";
    series[1].label = "psi at mean";
    const auto& base = res.antipodal[0];
    bool monotone_fail = false, sep_fail = false, mean_fail = false;
    double prev = base.risk;
    std::cout << "risk of X (t=0): " << base.risk << " (uniform variance pi^2/12 = "
              << (CircleSpace::pi * CircleSpace::pi / 12.0) << ")\n";
    for (std::size_t i = 0; i < res.antipodal.size(); ++i) {
        const auto& a = res.antipodal[i];
        const auto& m = res.at_mean[i];
        rows.push_back({"demo-circle", 1, format_double(a.t), "antipodal",
                        "fixed_t_shrinkage", a.risk, a.std_error, reps, g.seed});
        rows.push_back({"demo-circle", 1, format_double(m.t), "mean",
                        "fixed_t_shrinkage", m.risk, m.std_error, reps, g.seed});
        series[0].x.push_back(a.t);
        series[0].y.push_back(a.risk);
        series[1].x.push_back(m.t);
        series[1].y.push_back(m.risk);
        if (i > 0) {
            std::cout << "t=" << a.t << " risk(antipodal)=" << a.risk
                      << " risk(mean)=" << m.risk << "\n";
            if (a.risk < prev) monotone_fail = true;
            if (a.risk <= base.risk + 4.0 * a.std_error) sep_fail = true;
            if (a.t <= 0.5 && m.risk >= base.risk) mean_fail = true;
            prev = a.risk;
        }
    }
    write_outputs(g, "demo-circle", rows, resolved.dump(), series,
                  "circle shrinkage risk vs t");
    if (monotone_fail) std::cout << "FAIL: risk not increasing in t\n";
    if (sep_fail) std::cout << "FAIL: risk(t) not above risk(0) by 4 std errors\n";
    if (mean_fail) std::cout << "FAIL: shrinking toward the mean did not help\n";
    return (monotone_fail || sep_fail || mean_fail) ? 1 : 0;
}

int cmd_validate(GlobalOpts& g, const std::string& space_filter) {
    json sec = section(g.config, "validate", {"cases", "trees", "spaces"});
    std::uint64_t cases = 100000;
    std::uint64_t trees = 200;
    std::vector<std::string> spaces{"euclidean", "spd", "tree", "tree3", "circle"};
    maybe(sec, "cases", cases);
    maybe(sec, "trees", trees);
    maybe(sec, "spaces", spaces);
    if (g.reps) cases = *g.reps;
    if (!space_filter.empty()) spaces = {space_filter};

    ValidationReport report;
    for (const std::string& s : spaces) {
        if (s == "euclidean")
            validate_euclidean(report, cases, g.seed, g.workers);
        else if (s == "spd")
            validate_spd(report, cases, g.seed, g.workers);
        else if (s == "tree") {
            validate_tree(report, cases, g.seed, g.workers);
            validate_tree_mean_oracle(report, trees, g.seed, g.workers);
        } else if (s == "tree3")
            validate_tree_words(report, cases, g.seed, g.workers);
        else if (s == "circle")
            validate_circle(report, cases, g.seed, g.workers);
        else
            throw domain_error("unknown space in validate: " + s);
    }
    validate_determinism(report, g.seed);
    report.print(std::cout);
    if (!report.all_passed()) {
        std::cout << "validation FAILED\n";
        return 1;
    }
    std::cout << "all invariants passed\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"geodesic shrinkage estimators on Hadamard spaces"};
    app.require_subcommand(1);

    GlobalOpts g;
    app.add_option("--config", g.config_path, "JSON config file");
    app.add_option("--reps", g.reps, "override the main replicate count");
    app.add_option("--oracle-reps", g.oracle_reps, "override oracle replicate count");
    auto* seed_opt = app.add_option("--seed", g.seed, "master seed");
    auto* workers_opt = app.add_option("--workers", g.workers, "worker thread count");
    auto* out_opt = app.add_option("--out", g.out_dir, "output directory");
    app.add_flag("--plots", g.plots, "emit SVG plots next to the CSV");

    std::string walk_override;
    auto* c_table1 = app.add_subcommand("table1", "two-group metric-tree risk table");
    c_table1->add_option("--walk", walk_override, "walk law: lazy|uniform");
    auto* c_bayes = app.add_subcommand("spd-bayes", "SPD Bayes-risk curves over n");
    auto* c_freq = app.add_subcommand("spd-freq", "SPD frequentist domination curves");
    auto* c_tripod = app.add_subcommand("demo-tripod", "tower-rule counterexample");
    auto* c_circle = app.add_subcommand("demo-circle", "positive-curvature counterexample");
    std::string space_filter;
    auto* c_val = app.add_subcommand("validate", "run the property suites");
    c_val->add_option("--space", space_filter,
                      "restrict to one space (euclidean|spd|tree|tree3|circle)");

    CLI11_PARSE(app, argc, argv);
    g.seed_set = seed_opt->count() > 0;
    g.workers_set = workers_opt->count() > 0;
    g.out_dir_set = out_opt->count() > 0;

    try {
        g.config = load_config(g);
        if (c_table1->parsed()) return cmd_table1(g, walk_override);
        if (c_bayes->parsed()) return cmd_spd(g, true);
        if (c_freq->parsed()) return cmd_spd(g, false);
        if (c_tripod->parsed()) return cmd_demo_tripod(g);
        if (c_circle->parsed()) return cmd_demo_circle(g);
        if (c_val->parsed()) return cmd_validate(g, space_filter);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
