#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "pbwos/geometry.hpp"
#include "pbwos/walker.hpp"

namespace pbwos {

/// Statistical summary of one batch of walks from a single start point.
struct Estimate {
    double mean = 0.0;        ///< sum of per-walk scores divided by n_total
    double std_error = 0.0;   ///< sample std deviation of per-walk scores / sqrt(n_total)
    std::int64_t n_total = 0;
    std::int64_t n_survived = 0;   ///< walks absorbed in the delta-layer
    std::int64_t n_killed = 0;
    std::int64_t n_truncated = 0;  ///< max_steps hits; nonzero means the guard fired
    std::int64_t n_cutoff = 0;
    std::int64_t total_steps = 0;
    double wall_time_s = 0.0;
};

/// Termination counters accumulated over a batch of walks.
struct WalkTally {
    std::int64_t absorbed = 0;
    std::int64_t killed = 0;
    std::int64_t truncated = 0;
    std::int64_t cutoff = 0;
    std::int64_t steps = 0;

    WalkTally& operator+=(const WalkTally& o) {
        absorbed += o.absorbed;
        killed += o.killed;
        truncated += o.truncated;
        cutoff += o.cutoff;
        steps += o.steps;
        return *this;
    }
};

/// Per-walk scores for walker indices [first, last), in index order. Walker i
/// always consumes stream (config.seed, i), so disjoint ranges concatenate to
/// the full batch bit-identically.
std::vector<double> run_scores(const Domain& domain, const SolverConfig& config, const Vec3& point,
                               std::int64_t first, std::int64_t last, WalkTally* tally = nullptr);

/// Deterministic pairwise reduction; depends only on the values and their
/// order, never on batch or thread partitioning.
double pairwise_sum(std::span<const double> values);

/// Runs config.n_walkers walks from `point` and aggregates them. Results are
/// bit-identical for any config.threads.
Estimate estimate(const Domain& domain, const SolverConfig& config, const Vec3& point);

/// Absorption-layer bias diagnostic: the same estimate at delta and delta/10
/// with independent seeds. The difference measures the delta-layer error.
struct DeltaBiasReport {
    Estimate coarse;  ///< at config.delta
    Estimate fine;    ///< at config.delta / 10
    double difference = 0.0;          ///< coarse.mean - fine.mean
    double combined_std_error = 0.0;  ///< sqrt(se_coarse^2 + se_fine^2)
};

DeltaBiasReport delta_bias_check(const Domain& domain, const SolverConfig& config, const Vec3& point);

/// One method's row of the efficiency comparison.
struct MethodBench {
    Method method = Method::NewSurvival;
    double cpu_time_per_run_s = 0.0;      ///< mean wall time of the single-threaded walk loop
    double variance_of_run_means = 0.0;   ///< across-run sample variance of the run means
    double laboriousness = 0.0;           ///< cpu_time_per_run_s * variance_of_run_means
    double mean_of_run_means = 0.0;
};

struct BenchReport {
    MethodBench old_method;
    MethodBench new_method;
    int runs = 0;
    std::int64_t n_per_run = 0;
};

/// Efficiency (laboriousness) comparison: `runs` independent single-threaded
/// runs per method, each of n_walkers walks. Both configs must target the
/// same kappa, delta and walker count; runs must be at least 2.
BenchReport laboriousness(const Domain& domain, const SolverConfig& config_new,
                          const SolverConfig& config_old, const Vec3& point, int runs);

}  // namespace pbwos
