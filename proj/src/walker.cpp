#include "pbwos/walker.hpp"

#include <cmath>
#include <stdexcept>

namespace pbwos {

double survival_probability(double d, double kappa) {
    if (!(d > 0.0) || !std::isfinite(d))
        throw std::invalid_argument("survival_probability: d must be positive");
    if (!(kappa >= 0.0) || !std::isfinite(kappa))
        throw std::invalid_argument("survival_probability: kappa must be non-negative");
    const double x = d * kappa;
    if (x < 1e-4) {
        // sinh cancellation region: x/sinh(x) = 1 - x^2/6 + 7x^4/360 + O(x^6)
        const double x2 = x * x;
        return 1.0 - x2 / 6.0 + 7.0 * x2 * x2 / 360.0;
    }
    if (x > 700.0) {
        // sinh(x) would overflow; x/sinh(x) -> 2x e^{-x}
        return std::exp(std::log(2.0 * x) - x);
    }
    return x / std::sinh(x);
}

void validate_config(const Domain& domain, const SolverConfig& config) {
    if (!(config.delta > 0.0) || !std::isfinite(config.delta))
        throw std::invalid_argument("config: delta must be positive");
    if (!(config.kappa >= 0.0) || !std::isfinite(config.kappa))
        throw std::invalid_argument("config: kappa must be non-negative");
    if (config.n_walkers < 1) throw std::invalid_argument("config: n_walkers must be positive");
    if (config.max_steps < 1) throw std::invalid_argument("config: max_steps must be positive");
    if (config.threads < 1) throw std::invalid_argument("config: threads must be positive");

    if (config.method == Method::NewSurvival) {
        if (config.cutoff_distance)
            throw std::invalid_argument("config: cutoff_distance applies to the weighted method only");
        if (config.kappa == 0.0 && domain.is_open())
            throw std::invalid_argument(
                "config: kappa = 0 on an open domain never terminates under the survival method");
    } else {
        if (domain.is_open() && !config.cutoff_distance)
            throw std::invalid_argument("config: the weighted method needs cutoff_distance on an open domain");
        if (config.cutoff_distance) {
            if (!domain.is_open())
                throw std::invalid_argument("config: cutoff_distance applies to open domains only");
            if (!(*config.cutoff_distance > config.delta) || !std::isfinite(*config.cutoff_distance))
                throw std::invalid_argument("config: cutoff_distance must exceed delta");
        }
    }
}

}  // namespace pbwos
