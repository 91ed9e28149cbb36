#include "sqz/phase_space.hpp"

#include "sqz/constants.hpp"
#include "sqz/errors.hpp"

#include <cmath>

namespace sqz
{
namespace
{
std::vector<double> uniform_axis(double centre, double half_width, std::size_t points)
{
    std::vector<double> axis(points);
    const double step = 2.0 * half_width / static_cast<double>(points - 1);
    for (std::size_t i = 0; i < points; ++i)
        axis[i] = centre - half_width + step * static_cast<double>(i);
    return axis;
}
} // namespace

double WignerGrid::integral() const
{
    if (x_axis.size() < 2 || y_axis.size() < 2)
        return 0.0;
    const double dx = x_axis[1] - x_axis[0];
    const double dy = y_axis[1] - y_axis[0];
    return values.sum() * dx * dy;
}

double wigner_value(const GaussianState &state, std::size_t mode, double x, double y)
{
    const Matrix2 v = state.block(mode);
    const Vector2 d = Vector2(x, y) - state.mode_mean(mode);
    const double det = v.determinant();
    const double quad = d.dot(v.inverse() * d);
    return std::exp(-0.5 * quad) / (constants::two_pi * std::sqrt(det));
}

WignerGrid wigner_grid(const GaussianState &state, std::size_t mode, std::size_t points, double span_sigmas)
{
    detail::require(points >= 3, "wigner grid needs at least 3 points per axis");
    detail::require(span_sigmas > 0.0, "wigner grid span must be positive");

    const Matrix2 v = state.block(mode);
    const Vector2 m = state.mode_mean(mode);

    WignerGrid grid;
    grid.mode = mode;
    grid.x_axis = uniform_axis(m(0), span_sigmas * std::sqrt(v(0, 0)), points);
    grid.y_axis = uniform_axis(m(1), span_sigmas * std::sqrt(v(1, 1)), points);

    const Matrix2 inv = v.inverse();
    const double norm = 1.0 / (constants::two_pi * std::sqrt(v.determinant()));
    grid.values.resize(static_cast<Eigen::Index>(points), static_cast<Eigen::Index>(points));
    for (std::size_t i = 0; i < points; ++i) {
        for (std::size_t j = 0; j < points; ++j) {
            const Vector2 d(grid.x_axis[i] - m(0), grid.y_axis[j] - m(1));
            grid.values(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
                norm * std::exp(-0.5 * d.dot(inv * d));
        }
    }
    return grid;
}

double marginal_density(const GaussianState &state, std::size_t mode, double vartheta, double value)
{
    const double var = quadrature_variance(state, mode, vartheta);
    const double mu = quadrature_mean(state, mode, vartheta);
    const double d = value - mu;
    return std::exp(-0.5 * d * d / var) / std::sqrt(constants::two_pi * var);
}

double db_from_variance(double variance)
{
    detail::require(variance > 0.0 && std::isfinite(variance), "variance must be positive and finite");
    return -10.0 * std::log10(variance);
}

double variance_from_db(double db)
{
    detail::require(std::isfinite(db), "dB value must be finite");
    return std::pow(10.0, -db / 10.0);
}

double squeeze_parameter_from_db(double db)
{
    return -0.5 * std::log(variance_from_db(db));
}

double db_from_squeeze_parameter(double r)
{
    detail::require(std::isfinite(r), "squeeze parameter must be finite");
    return 20.0 * r / std::log(10.0);
}

} // namespace sqz
