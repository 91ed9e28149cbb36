#include "sqz/phase_limits.hpp"

#include "sqz/constants.hpp"
#include "sqz/errors.hpp"

#include <cmath>

namespace sqz
{
double fringe_power_fraction(double phi)
{
    const double s = std::sin(0.5 * phi);
    return s * s;
}

double signal_slope(double phi, double n_mean)
{
    detail::require(n_mean > 0.0, "mean photon number must be positive");
    return n_mean * std::sin(0.5 * phi) * std::cos(0.5 * phi);
}

double min_phase(const PhaseBoundQuery &q)
{
    detail::require(std::isfinite(q.n_mean) && q.n_mean > 0.0, "mean photon number must be positive");
    detail::require(std::isfinite(q.r) && q.r >= 0.0, "squeeze parameter must be >= 0");
    const bool lossy = q.strategy == PhaseStrategy::coherent_loss || q.strategy == PhaseStrategy::csv_loss ||
                       q.strategy == PhaseStrategy::optimal_loss;
    if (lossy)
        detail::require(q.eta > 0.0 && q.eta <= 1.0, "detection efficiency must lie in (0, 1]");

    const double n = q.n_mean;
    switch (q.strategy) {
    case PhaseStrategy::coherent:
        return 1.0 / std::sqrt(n);
    case PhaseStrategy::csv:
        return std::exp(-q.r) / std::sqrt(n);
    case PhaseStrategy::heisenberg_single_shot:
        return constants::pi / n;
    case PhaseStrategy::coherent_loss:
        return std::sqrt(1.0 / (q.eta * n));
    case PhaseStrategy::csv_loss:
        return std::sqrt((q.eta * std::exp(-2.0 * q.r) + 1.0 - q.eta) / (q.eta * n));
    case PhaseStrategy::optimal_loss:
        if (q.eta >= 1.0)
            throw DomainError("loss-limited optimal bound requires 0 < eta < 1");
        return std::sqrt((1.0 - q.eta) / (q.eta * n));
    }
    throw InvalidArgument("unknown phase strategy");
}

double csv_optimality_ratio(double eta, double r)
{
    detail::require(std::isfinite(r) && r >= 0.0, "squeeze parameter must be >= 0");
    if (!(eta > 0.0 && eta < 1.0))
        throw DomainError("optimality ratio requires 0 < eta < 1");
    return std::sqrt((eta * std::exp(-2.0 * r) + 1.0 - eta) / (1.0 - eta));
}

} // namespace sqz
