#include "pbwos/estimator.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "pbwos/rng.hpp"

namespace pbwos {

namespace {

double walk_score(const Domain& domain, const WalkOutcome& outcome) {
    if (outcome.kind != WalkTermination::Absorbed) return 0.0;
    return outcome.weight * domain.boundary_value(outcome.boundary_point);
}

void tally_outcome(WalkTally& tally, const WalkOutcome& outcome) {
    switch (outcome.kind) {
        case WalkTermination::Absorbed: ++tally.absorbed; break;
        case WalkTermination::Killed: ++tally.killed; break;
        case WalkTermination::Truncated: ++tally.truncated; break;
        case WalkTermination::CutOff: ++tally.cutoff; break;
    }
    tally.steps += outcome.steps;
}

}  // namespace

std::vector<double> run_scores(const Domain& domain, const SolverConfig& config, const Vec3& point,
                               std::int64_t first, std::int64_t last, WalkTally* tally) {
    if (first < 0 || last < first) throw std::invalid_argument("run_scores: bad walker index range");
    std::vector<double> scores;
    scores.reserve(static_cast<std::size_t>(last - first));
    WalkTally local;
    for (std::int64_t i = first; i < last; ++i) {
        RngStream stream(config.seed, static_cast<std::uint64_t>(i));
        const WalkOutcome outcome = run_walk(domain, config, point, stream);
        scores.push_back(walk_score(domain, outcome));
        tally_outcome(local, outcome);
    }
    if (tally) *tally += local;
    return scores;
}

double pairwise_sum(std::span<const double> values) {
    if (values.size() <= 8) {
        double s = 0.0;
        for (const double v : values) s += v;
        return s;
    }
    const std::size_t half = values.size() / 2;
    return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

Estimate estimate(const Domain& domain, const SolverConfig& config, const Vec3& point) {
    validate_config(domain, config);
    if (domain.signed_distance(point) < 0.0)
        throw std::domain_error("estimate: start point is outside the domain");
    if (config.cutoff_distance && *config.cutoff_distance <= domain.signed_distance(point))
        throw std::invalid_argument("estimate: cutoff_distance must exceed the start's boundary distance");

    const std::int64_t n = config.n_walkers;
    const int threads = static_cast<int>(std::min<std::int64_t>(config.threads, n));

    std::vector<double> scores(static_cast<std::size_t>(n));
    std::vector<WalkTally> tallies(static_cast<std::size_t>(threads));

    const auto t0 = std::chrono::steady_clock::now();
    if (threads == 1) {
        scores = run_scores(domain, config, point, 0, n, &tallies[0]);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(threads));
        for (int t = 0; t < threads; ++t) {
            const std::int64_t first = n * t / threads;
            const std::int64_t last = n * (t + 1) / threads;
            pool.emplace_back([&, t, first, last] {
                const auto chunk = run_scores(domain, config, point, first, last, &tallies[t]);
                std::copy(chunk.begin(), chunk.end(), scores.begin() + first);
            });
        }
        for (auto& th : pool) th.join();
    }
    const auto t1 = std::chrono::steady_clock::now();

    WalkTally tally;
    for (const auto& t : tallies) tally += t;

    Estimate est;
    est.n_total = n;
    est.n_survived = tally.absorbed;
    est.n_killed = tally.killed;
    est.n_truncated = tally.truncated;
    est.n_cutoff = tally.cutoff;
    est.total_steps = tally.steps;
    est.wall_time_s = std::chrono::duration<double>(t1 - t0).count();

    est.mean = pairwise_sum(scores) / static_cast<double>(n);
    if (n > 1) {
        std::vector<double> sq(scores.size());
        for (std::size_t i = 0; i < scores.size(); ++i) {
            const double dev = scores[i] - est.mean;
            sq[i] = dev * dev;
        }
        const double sample_var = pairwise_sum(sq) / static_cast<double>(n - 1);
        est.std_error = std::sqrt(sample_var / static_cast<double>(n));
    }
    return est;
}

DeltaBiasReport delta_bias_check(const Domain& domain, const SolverConfig& config, const Vec3& point) {
    SolverConfig coarse_cfg = config;
    coarse_cfg.seed = derive_seed(config.seed, 1);
    SolverConfig fine_cfg = config;
    fine_cfg.delta = config.delta / 10.0;
    fine_cfg.seed = derive_seed(config.seed, 2);

    DeltaBiasReport report;
    report.coarse = estimate(domain, coarse_cfg, point);
    report.fine = estimate(domain, fine_cfg, point);
    report.difference = report.coarse.mean - report.fine.mean;
    report.combined_std_error = std::hypot(report.coarse.std_error, report.fine.std_error);
    return report;
}

namespace {

MethodBench bench_method(const Domain& domain, SolverConfig config, const Vec3& point, int runs) {
    config.threads = 1;  // timing contract: single-threaded walk loop
    std::vector<double> means(static_cast<std::size_t>(runs));
    std::vector<double> times(static_cast<std::size_t>(runs));
    const std::uint64_t method_salt = config.method == Method::OldWeighted ? 1 : 0;
    for (int j = 0; j < runs; ++j) {
        SolverConfig run_cfg = config;
        run_cfg.seed = derive_seed(config.seed, 2 * static_cast<std::uint64_t>(j) + method_salt);
        const Estimate est = estimate(domain, run_cfg, point);
        means[static_cast<std::size_t>(j)] = est.mean;
        times[static_cast<std::size_t>(j)] = est.wall_time_s;
    }

    MethodBench bench;
    bench.method = config.method;
    bench.cpu_time_per_run_s = pairwise_sum(times) / runs;
    bench.mean_of_run_means = pairwise_sum(means) / runs;
    double ss = 0.0;
    for (const double m : means) {
        const double dev = m - bench.mean_of_run_means;
        ss += dev * dev;
    }
    bench.variance_of_run_means = ss / (runs - 1);
    bench.laboriousness = bench.cpu_time_per_run_s * bench.variance_of_run_means;
    return bench;
}

}  // namespace

BenchReport laboriousness(const Domain& domain, const SolverConfig& config_new,
                          const SolverConfig& config_old, const Vec3& point, int runs) {
    if (runs < 2) throw std::invalid_argument("laboriousness: need at least 2 runs for a variance");
    if (config_new.method != Method::NewSurvival || config_old.method != Method::OldWeighted)
        throw std::invalid_argument("laboriousness: configs must select the survival and weighted methods");
    if (config_new.kappa != config_old.kappa || config_new.delta != config_old.delta ||
        config_new.n_walkers != config_old.n_walkers)
        throw std::invalid_argument("laboriousness: configs must share kappa, delta and n_walkers");

    BenchReport report;
    report.runs = runs;
    report.n_per_run = config_new.n_walkers;
    report.old_method = bench_method(domain, config_old, point, runs);
    report.new_method = bench_method(domain, config_new, point, runs);
    return report;
}

}  // namespace pbwos
