#include "pbwos/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pbwos/analytic.hpp"
#include "pbwos/estimator.hpp"
#include "pbwos/geometry.hpp"
#include "pbwos/walker.hpp"

namespace pbwos {

namespace {

constexpr double kTruncationFailureFraction = 1e-3;

// All reals in CSV and summaries carry 9 significant digits, '.' separator.
std::string g9(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return buf;
}

std::string format_vec(const Vec3& v) { return g9(v.x) + "," + g9(v.y) + "," + g9(v.z); }

Vec3 parse_point(const std::string& text) {
    Vec3 p;
    int consumed = 0;
    if (std::sscanf(text.c_str(), "%lf,%lf,%lf%n", &p.x, &p.y, &p.z, &consumed) != 3 ||
        consumed != static_cast<int>(text.size()))
        throw std::invalid_argument("expected a point as x,y,z, got '" + text + "'");
    if (!p.finite()) throw std::invalid_argument("point components must be finite");
    return p;
}

// Shared geometry/solver flags and their CLI11 wiring.
struct CommonOpts {
    std::string geometry;
    double slab_half_width = 1.0;
    double radius = 1.0;
    double kappa = 1.0;
    std::int64_t n_walkers = 100000;
    double delta = 1e-4;
    std::uint64_t seed = 0;
    Method method = Method::NewSurvival;
    std::optional<double> cutoff;
    int threads = 1;
    std::int64_t max_steps = 1000000;

    std::unique_ptr<Domain> make() const {
        const double param = geometry == "slab" ? slab_half_width : radius;
        return make_domain(geometry, param);
    }

    SolverConfig config() const {
        SolverConfig cfg;
        cfg.kappa = kappa;
        cfg.delta = delta;
        cfg.n_walkers = n_walkers;
        cfg.seed = seed;
        cfg.method = method;
        cfg.max_steps = max_steps;
        cfg.cutoff_distance = cutoff;
        cfg.threads = threads;
        return cfg;
    }
};

void add_geometry_flags(CLI::App& cmd, CommonOpts& opts, bool geometry_required) {
    auto* geom = cmd.add_option("--geometry", opts.geometry,
                                "Domain: half_space, slab, cylinder or sphere");
    geom->check(CLI::IsMember({"half_space", "slab", "cylinder", "sphere"}));
    if (geometry_required) geom->required();
    cmd.add_option("--L", opts.slab_half_width, "Slab half-width (plates at z = +/-L)")
        ->capture_default_str();
    cmd.add_option("--R", opts.radius, "Cylinder/sphere radius")->capture_default_str();
    cmd.add_option("--kappa", opts.kappa, "Inverse Debye length")->capture_default_str();
}

void add_solver_flags(CLI::App& cmd, CommonOpts& opts, bool with_threads = true) {
    cmd.add_option("--n", opts.n_walkers, "Random walks per estimate")->capture_default_str();
    cmd.add_option("--delta", opts.delta, "Absorption-layer thickness")->capture_default_str();
    cmd.add_option("--seed", opts.seed, "Master RNG seed")->capture_default_str()->envname("PBWOS_SEED");
    cmd.add_option("--method", opts.method, "Estimator: new (survival) or old (weighted)")
        ->transform(CLI::CheckedTransformer(
            std::map<std::string, Method>{{"new", Method::NewSurvival}, {"old", Method::OldWeighted}}))
        ->default_str("new");
    cmd.add_option("--cutoff", opts.cutoff,
                   "Kill distance for the weighted method on open domains");
    cmd.add_option("--max-steps", opts.max_steps, "Per-walk step guard")->capture_default_str();
    if (with_threads)
        cmd.add_option("--threads", opts.threads, "Worker threads (results are thread-count independent)")
            ->capture_default_str();
}

bool truncation_failure(const Estimate& est) {
    return static_cast<double>(est.n_truncated) >
           kTruncationFailureFraction * static_cast<double>(est.n_total);
}

// Writes `text` to a file, or to `out` when path is "-".
void write_text(const std::string& path, const std::string& text, std::ostream& out) {
    if (path == "-") {
        out << text;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw std::invalid_argument("cannot open output file: " + path);
    file << text;
}

double analytic_profile(const CommonOpts& opts, double r) {
    if (opts.geometry == "half_space") return analytic_half_space(r, opts.kappa);
    if (opts.geometry == "slab") return analytic_slab(r, opts.slab_half_width, opts.kappa);
    if (opts.geometry == "cylinder") return analytic_cylinder(r, opts.radius, opts.kappa);
    return analytic_sphere(r, opts.radius, opts.kappa);
}

// Start point for a sweep coordinate: distance r to the plate, from the slab
// midplane, or from the curved surface.
Vec3 sweep_point(const CommonOpts& opts, double r) {
    if (opts.geometry == "half_space") return {0.0, 0.0, r};
    if (opts.geometry == "slab") return {0.0, 0.0, r};
    if (opts.geometry == "cylinder") return {opts.radius + r, 0.0, 0.0};
    return {0.0, 0.0, opts.radius + r};
}

int run_solve(const CommonOpts& opts, const std::string& point_text, const std::string& csv_path,
              std::ostream& out, std::ostream& err) {
    const Vec3 point = parse_point(point_text);
    const auto domain = opts.make();
    const SolverConfig cfg = opts.config();
    const Estimate est = estimate(*domain, cfg, point);

    out << "geometry: " << domain->describe() << "\n"
        << "method: " << (cfg.method == Method::NewSurvival ? "new" : "old") << "\n"
        << "kappa: " << g9(cfg.kappa) << "\n"
        << "point: " << format_vec(point) << "\n"
        << "n: " << est.n_total << "\n"
        << "delta: " << g9(cfg.delta) << "\n"
        << "seed: " << cfg.seed << "\n"
        << "mean: " << g9(est.mean) << "\n"
        << "std_error: " << g9(est.std_error) << "\n"
        << "n_survived: " << est.n_survived << "\n"
        << "n_killed: " << est.n_killed << "\n"
        << "n_truncated: " << est.n_truncated << "\n"
        << "n_cutoff: " << est.n_cutoff << "\n";
    err << "wall_time_s: " << g9(est.wall_time_s) << "\n";

    if (!csv_path.empty()) {
        std::string csv =
            "geometry,method,kappa,delta,n,seed,x,y,z,mean,std_error,n_survived,n_killed,n_truncated,n_cutoff\n";
        csv += domain->describe() + "," + (cfg.method == Method::NewSurvival ? "new" : "old") + "," +
               g9(cfg.kappa) + "," + g9(cfg.delta) + "," + std::to_string(est.n_total) + "," +
               std::to_string(cfg.seed) + "," + format_vec(point) + "," + g9(est.mean) + "," +
               g9(est.std_error) + "," + std::to_string(est.n_survived) + "," +
               std::to_string(est.n_killed) + "," + std::to_string(est.n_truncated) + "," +
               std::to_string(est.n_cutoff) + "\n";
        write_text(csv_path, csv, out);
    }

    if (truncation_failure(est)) {
        err << "error: " << est.n_truncated << " of " << est.n_total
            << " walks hit the max_steps guard\n";
        return 3;
    }
    return 0;
}

int run_profile(const CommonOpts& opts, double r_min, double r_max, int r_steps,
                const std::string& output, std::ostream& out, std::ostream& err) {
    if (r_steps < 1) throw std::invalid_argument("--r-steps must be at least 1");
    if (!(r_min >= 0.0)) throw std::invalid_argument("--r-min must be non-negative");
    if (r_steps > 1 && !(r_max > r_min)) throw std::invalid_argument("--r-max must exceed --r-min");

    const auto domain = opts.make();
    const SolverConfig cfg = opts.config();

    std::vector<double> rs(static_cast<std::size_t>(r_steps));
    for (int i = 0; i < r_steps; ++i)
        rs[static_cast<std::size_t>(i)] =
            r_steps == 1 ? r_min : r_min + (r_max - r_min) * i / (r_steps - 1);

    // The whole sweep must stay inside the closed domain.
    for (const double r : rs) {
        if (domain->signed_distance(sweep_point(opts, r)) < 0.0)
            throw std::invalid_argument("sweep point r=" + g9(r) + " lies outside the domain");
        analytic_profile(opts, r);  // rejects e.g. kappa=0 cylinder profiles up front
    }

    std::string csv = "r,mc_mean,mc_std_error,analytic,n,delta,seed\n";
    double wall_total = 0.0;
    for (const double r : rs) {
        const Estimate est = estimate(*domain, cfg, sweep_point(opts, r));
        wall_total += est.wall_time_s;
        if (truncation_failure(est)) {
            err << "error: " << est.n_truncated << " of " << est.n_total
                << " walks hit the max_steps guard at r=" << g9(r) << "\n";
            return 3;
        }
        csv += g9(r) + "," + g9(est.mean) + "," + g9(est.std_error) + "," +
               g9(analytic_profile(opts, r)) + "," + std::to_string(est.n_total) + "," +
               g9(cfg.delta) + "," + std::to_string(cfg.seed) + "\n";
    }
    write_text(output, csv, out);
    err << "wall_time_s: " << g9(wall_total) << "\n";
    return 0;
}

int run_bench(const CommonOpts& opts, int runs, const std::string& point_text,
              const std::string& csv_path, std::ostream& out, std::ostream& err) {
    const Vec3 point = parse_point(point_text);
    const auto domain = opts.make();

    SolverConfig cfg_new = opts.config();
    cfg_new.method = Method::NewSurvival;
    cfg_new.cutoff_distance.reset();
    SolverConfig cfg_old = opts.config();
    cfg_old.method = Method::OldWeighted;

    const BenchReport report = laboriousness(*domain, cfg_new, cfg_old, point, runs);

    out << "bench: " << domain->describe() << " kappa=" << g9(opts.kappa)
        << " point=" << format_vec(point) << " n=" << report.n_per_run << " delta=" << g9(opts.delta)
        << " runs=" << report.runs << " seed=" << opts.seed << "\n";
    char line[160];
    std::snprintf(line, sizeof(line), "%-8s %-20s %-14s %s\n", "method", "cpu_time_per_run_s",
                  "variance", "time_consumption");
    out << line;
    for (const MethodBench* m : {&report.old_method, &report.new_method}) {
        std::snprintf(line, sizeof(line), "%-8s %-20s %-14s %s\n",
                      m->method == Method::NewSurvival ? "new" : "old",
                      g9(m->cpu_time_per_run_s).c_str(), g9(m->variance_of_run_means).c_str(),
                      g9(m->laboriousness).c_str());
        out << line;
    }
    out << "mean_old: " << g9(report.old_method.mean_of_run_means)
        << " mean_new: " << g9(report.new_method.mean_of_run_means) << "\n";

    if (!csv_path.empty()) {
        std::string csv =
            "method,cpu_time_per_run_s,variance_of_run_means,laboriousness,mean_of_run_means,runs,n,"
            "kappa,delta,seed,geometry\n";
        for (const MethodBench* m : {&report.old_method, &report.new_method}) {
            csv += std::string(m->method == Method::NewSurvival ? "new" : "old") + "," +
                   g9(m->cpu_time_per_run_s) + "," + g9(m->variance_of_run_means) + "," +
                   g9(m->laboriousness) + "," + g9(m->mean_of_run_means) + "," +
                   std::to_string(report.runs) + "," + std::to_string(report.n_per_run) + "," +
                   g9(opts.kappa) + "," + g9(opts.delta) + "," + std::to_string(opts.seed) + "," +
                   domain->describe() + "\n";
        }
        write_text(csv_path, csv, out);
    }
    static_cast<void>(err);
    return 0;
}

int run_survival_curve(double kappa, double d_max, int steps, const std::string& output,
                       std::ostream& out) {
    if (!(d_max > 0.0)) throw std::invalid_argument("--d-max must be positive");
    if (steps < 1) throw std::invalid_argument("--steps must be at least 1");
    std::string csv = "d,p\n";
    for (int i = 1; i <= steps; ++i) {
        const double d = d_max * i / steps;
        csv += g9(d) + "," + g9(survival_probability(d, kappa)) + "\n";
    }
    write_text(output, csv, out);
    return 0;
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Grid-free Monte Carlo solver for the Dirichlet problem of the linearized "
                 "Poisson-Boltzmann equation (walk-on-spheres with survival killing)"};
    app.require_subcommand(1);

    CommonOpts opts;
    std::string point_text = "0,0,0";
    std::string csv_path;
    std::string output = "-";
    double r_min = 0.0, r_max = 0.0, d_max = 0.0;
    int r_steps = 21, curve_steps = 200, runs = 100;

    auto* solve = app.add_subcommand("solve", "Estimate the potential at one point");
    add_geometry_flags(*solve, opts, /*geometry_required=*/true);
    add_solver_flags(*solve, opts);
    solve->add_option("--point", point_text, "Evaluation point x,y,z")->required();
    solve->add_option("--csv", csv_path, "Also write the result as a CSV row ('-' for stdout)");

    auto* profile = app.add_subcommand("profile", "Sweep a radial profile and compare to the analytic curve");
    add_geometry_flags(*profile, opts, /*geometry_required=*/true);
    add_solver_flags(*profile, opts);
    profile->add_option("--r-min", r_min, "Sweep start")->capture_default_str();
    profile->add_option("--r-max", r_max, "Sweep end")->required();
    profile->add_option("--r-steps", r_steps, "Number of sweep points")->capture_default_str();
    profile->add_option("--output", output, "CSV destination ('-' for stdout)")->capture_default_str();

    auto* bench = app.add_subcommand("bench", "Efficiency comparison of the survival and weighted methods");
    add_geometry_flags(*bench, opts, /*geometry_required=*/false);
    opts.geometry = "slab";
    add_solver_flags(*bench, opts, /*with_threads=*/false);
    bench->add_option("--runs", runs, "Independent runs per method")->capture_default_str();
    bench->add_option("--point", point_text, "Evaluation point x,y,z")->capture_default_str();
    bench->add_option("--csv", csv_path, "Also write the comparison as CSV ('-' for stdout)");

    auto* curve = app.add_subcommand("survival-curve", "Tabulate the survival probability p(d)");
    curve->add_option("--kappa", opts.kappa, "Inverse Debye length")->capture_default_str();
    curve->add_option("--d-max", d_max, "Largest sampled distance")->required();
    curve->add_option("--steps", curve_steps, "Number of samples over (0, d-max]")->capture_default_str();
    curve->add_option("--output", output, "CSV destination ('-' for stdout)")->capture_default_str();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (solve->parsed()) return run_solve(opts, point_text, csv_path, out, err);
        if (profile->parsed()) return run_profile(opts, r_min, r_max, r_steps, output, out, err);
        if (bench->parsed()) return run_bench(opts, runs, point_text, csv_path, out, err);
        return run_survival_curve(opts.kappa, d_max, curve_steps, output, out);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    std::vector<std::string> args;
    args.reserve(argc > 0 ? static_cast<std::size_t>(argc - 1) : 0);
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return cli_main(args, out, err);
}

}  // namespace pbwos
