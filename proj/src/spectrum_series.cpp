#include "sqz/spectrum_series.hpp"

#include "sqz/errors.hpp"

#include <cmath>

namespace sqz
{
std::string_view units_name(SpectrumUnits units)
{
    switch (units) {
    case SpectrumUnits::meters_per_rt_hz:
        return "m/sqrt(Hz)";
    case SpectrumUnits::strain_per_rt_hz:
        return "1/sqrt(Hz)";
    case SpectrumUnits::dimensionless:
        return "dimensionless";
    }
    return "unknown";
}

void SpectrumSeries::validate() const
{
    detail::require(f_hz.size() == values.size(), "spectrum grid and values differ in length");
    for (std::size_t i = 1; i < f_hz.size(); ++i)
        detail::require(f_hz[i] > f_hz[i - 1], "spectrum grid must be strictly increasing");
    for (double v : values)
        detail::require(std::isfinite(v) && v >= 0.0, "spectrum values must be finite and non-negative");
}

std::vector<double> frequency_grid(double f_min, double f_max, std::size_t points, bool log_spacing)
{
    detail::require(points >= 1, "frequency grid must contain at least one point");
    detail::require(std::isfinite(f_min) && std::isfinite(f_max), "frequency bounds must be finite");
    detail::require(f_min >= 0.0, "frequencies must be non-negative");
    detail::require(points == 1 ? f_max >= f_min : f_max > f_min, "f_max must exceed f_min");
    if (log_spacing)
        detail::require(f_min > 0.0, "log-spaced grid needs f_min > 0");

    std::vector<double> grid(points);
    if (points == 1) {
        grid[0] = f_min;
        return grid;
    }
    const double denom = static_cast<double>(points - 1);
    for (std::size_t i = 0; i < points; ++i) {
        const double u = static_cast<double>(i) / denom;
        grid[i] = log_spacing ? f_min * std::pow(f_max / f_min, u) : f_min + (f_max - f_min) * u;
    }
    grid.back() = f_max;
    return grid;
}

} // namespace sqz
