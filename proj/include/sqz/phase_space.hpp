#ifndef SQZ_PHASE_SPACE_HPP
#define SQZ_PHASE_SPACE_HPP

#include "sqz/gaussian_state.hpp"

#include <cstddef>
#include <vector>

namespace sqz
{
// Wigner function sampled on a uniform grid; values(i, j) belongs to
// (x_axis[i], y_axis[j]).
struct WignerGrid
{
    std::vector<double> x_axis;
    std::vector<double> y_axis;
    Eigen::MatrixXd values;
    std::size_t mode = 0;

    // Riemann sum over the grid cells.
    double integral() const;
};

inline constexpr std::size_t kDefaultWignerPoints = 257;
inline constexpr double kDefaultWignerSpan = 6.0;  // standard deviations per axis

// Bivariate Gaussian density of one mode, normalized to unit integral in
// vacuum-normalized coordinates.
double wigner_value(const GaussianState &state, std::size_t mode, double x, double y);

// Grid centred on the mode mean, spanning +/- span_sigmas standard deviations
// of each axis' own marginal.
WignerGrid wigner_grid(const GaussianState &state,
                       std::size_t mode,
                       std::size_t points = kDefaultWignerPoints,
                       double span_sigmas = kDefaultWignerSpan);

// Density of the quadrature X cos(vartheta) + Y sin(vartheta).
double marginal_density(const GaussianState &state, std::size_t mode, double vartheta, double value);

// Squeeze factor in dB relative to the vacuum (positive means squeezed).
double db_from_variance(double variance);
double variance_from_db(double db);

double squeeze_parameter_from_db(double db);
double db_from_squeeze_parameter(double r);

} // namespace sqz

#endif // SQZ_PHASE_SPACE_HPP
