#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>

#include "pbwos/geometry.hpp"
#include "pbwos/rng.hpp"
#include "pbwos/vec3.hpp"

namespace pbwos {

enum class Method { NewSurvival, OldWeighted };

/// Everything a single solve needs besides the geometry and the start point.
struct SolverConfig {
    double kappa = 1.0;                   ///< inverse Debye length, >= 0
    double delta = 1e-4;                  ///< absorption-layer thickness, > 0
    std::int64_t n_walkers = 100000;      ///< walkers per estimate
    std::uint64_t seed = 0;               ///< master seed; walker i uses stream (seed, i)
    Method method = Method::NewSurvival;
    std::int64_t max_steps = 1000000;     ///< safety guard per walk
    std::optional<double> cutoff_distance;  ///< old method on open domains only
    int threads = 1;                      ///< walker-level parallelism; no effect on results
};

/// In-flight walker. `weight` stays 1 under the survival method; the weighted
/// method multiplies it by the survival probability of each sphere jumped.
struct WalkerState {
    Vec3 position;
    std::int64_t steps = 0;
    double weight = 1.0;
};

enum class WalkTermination {
    Absorbed,   ///< reached the absorption layer; scores the boundary value
    Killed,     ///< removed by the survival draw (survival method only)
    Truncated,  ///< hit the max_steps guard; diagnostic failure, scores 0
    CutOff      ///< exceeded the weighted method's cutoff distance; scores 0
};

/// Terminal record of one walk. `steps` counts WOS steps begun, so for the
/// survival method it equals the number of survival draws; for an absorbed
/// walk it is the number of sphere jumps taken. `boundary_point` is
/// meaningful only when kind == Absorbed.
struct WalkOutcome {
    WalkTermination kind = WalkTermination::Absorbed;
    Vec3 boundary_point;
    std::int64_t steps = 0;
    double weight = 0.0;
};

/// Probability dk/sinh(dk) that a walker jumping a sphere of radius d is not
/// removed. Equals 1 when kappa = 0, strictly decreasing in d*kappa, and
/// evaluates without overflow for arbitrarily large d*kappa.
double survival_probability(double d, double kappa);

/// Validates field invariants and the config/domain pairing. Throws
/// std::invalid_argument on the non-terminating survival setup (kappa = 0 on
/// an open domain), a missing or misplaced cutoff, or out-of-range fields.
void validate_config(const Domain& domain, const SolverConfig& config);

/// One WOS move: jump from state.position to a uniform point on the largest
/// boundary-touching sphere around it. Consumes exactly two uniforms.
/// Throws std::logic_error when called inside the absorption layer.
template <class Rng>
WalkerState wos_step(const Domain& domain, const WalkerState& state, double delta, Rng& rng) {
    const double d = domain.distance_to_boundary(state.position);
    if (d < delta) throw std::logic_error("wos_step: position inside the absorption layer");
    WalkerState next = state;
    next.position = state.position + d * sample_unit_sphere(rng);
    next.steps = state.steps + 1;
    return next;
}

namespace detail {

inline void check_start(const Domain& domain, const SolverConfig& config, const Vec3& start) {
    validate_config(domain, config);
    if (domain.signed_distance(start) < 0.0)
        throw std::domain_error("run_walk: start point is outside the domain");
}

}  // namespace detail

/// Survival-probability walk. Each step draws the survival uniform eta first
/// and the two direction uniforms after; the walker is removed when eta
/// exceeds the survival probability of the sphere about to be jumped.
/// Absorption in the delta-layer scores the boundary value with weight 1.
template <class Rng>
WalkOutcome run_walk_new(const Domain& domain, const SolverConfig& config, const Vec3& start, Rng& rng) {
    if (config.method != Method::NewSurvival)
        throw std::invalid_argument("run_walk_new: config selects a different method");
    detail::check_start(domain, config, start);

    Vec3 pos = start;
    std::int64_t steps = 0;
    while (true) {
        const double d = domain.signed_distance(pos);
        if (d < config.delta) return {WalkTermination::Absorbed, domain.project(pos), steps, 1.0};
        if (steps >= config.max_steps) return {WalkTermination::Truncated, {}, steps, 0.0};
        ++steps;  // a step begins: survival draw, then the move
        const double eta = rng.uniform();
        if (eta > survival_probability(d, config.kappa))
            return {WalkTermination::Killed, {}, steps, 0.0};
        pos = pos + d * sample_unit_sphere(rng);
    }
}

/// Weighted walk: no removal; the weight picks up the survival probability of
/// every sphere jumped. On open domains the walk is cut off (scored 0) once
/// its distance to the boundary exceeds config.cutoff_distance, which biases
/// the estimate by the discarded tail.
template <class Rng>
WalkOutcome run_walk_old(const Domain& domain, const SolverConfig& config, const Vec3& start, Rng& rng) {
    if (config.method != Method::OldWeighted)
        throw std::invalid_argument("run_walk_old: config selects a different method");
    detail::check_start(domain, config, start);
    if (config.cutoff_distance && *config.cutoff_distance <= domain.signed_distance(start))
        throw std::invalid_argument("run_walk_old: cutoff_distance must exceed the start's boundary distance");

    Vec3 pos = start;
    std::int64_t steps = 0;
    double weight = 1.0;
    while (true) {
        const double d = domain.signed_distance(pos);
        if (d < config.delta) return {WalkTermination::Absorbed, domain.project(pos), steps, weight};
        if (config.cutoff_distance && d > *config.cutoff_distance)
            return {WalkTermination::CutOff, {}, steps, 0.0};
        if (steps >= config.max_steps) return {WalkTermination::Truncated, {}, steps, 0.0};
        ++steps;
        weight *= survival_probability(d, config.kappa);
        pos = pos + d * sample_unit_sphere(rng);
    }
}

/// Dispatches on config.method.
template <class Rng>
WalkOutcome run_walk(const Domain& domain, const SolverConfig& config, const Vec3& start, Rng& rng) {
    return config.method == Method::NewSurvival ? run_walk_new(domain, config, start, rng)
                                                : run_walk_old(domain, config, start, rng);
}

}  // namespace pbwos
