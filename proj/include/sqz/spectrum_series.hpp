#ifndef SQZ_SPECTRUM_SERIES_HPP
#define SQZ_SPECTRUM_SERIES_HPP

#include <cstddef>
#include <string_view>
#include <vector>

namespace sqz
{
enum class SpectrumUnits
{
    meters_per_rt_hz,   // displacement ASD
    strain_per_rt_hz,   // strain ASD
    dimensionless,      // ratios and vacuum-normalized powers
};

std::string_view units_name(SpectrumUnits units);

// Frequency grid with one value per point.
struct SpectrumSeries
{
    std::vector<double> f_hz;
    std::vector<double> values;
    SpectrumUnits units = SpectrumUnits::dimensionless;

    // Throws InvalidArgument unless the grid is strictly increasing and every
    // value is finite and non-negative.
    void validate() const;
};

// points >= 1; log spacing requires f_min > 0.
std::vector<double> frequency_grid(double f_min, double f_max, std::size_t points, bool log_spacing);

} // namespace sqz

#endif // SQZ_SPECTRUM_SERIES_HPP
