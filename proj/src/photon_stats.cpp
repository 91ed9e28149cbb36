#include "sqz/photon_stats.hpp"

#include "sqz/constants.hpp"
#include "sqz/errors.hpp"

#include <cmath>
#include <limits>

namespace sqz
{
namespace
{
void check_params(double r, double theta)
{
    detail::require(std::isfinite(r) && r >= 0.0, "squeeze parameter r must be >= 0");
    detail::require(std::isfinite(theta), "squeeze phase must be finite");
}

double finite_probability(double p)
{
    if (!std::isfinite(p))
        throw NumericRangeError("photon probability left the representable range");
    return p;
}

// P(2m) for the squeezed vacuum; odd numbers vanish.
double squeezed_vacuum_pmf(double r, long n)
{
    if (n % 2 != 0)
        return 0.0;
    const double m = static_cast<double>(n / 2);
    const double t = std::tanh(r);
    if (n == 0)
        return 1.0 / std::cosh(r);
    const double log_p = std::lgamma(2.0 * m + 1.0) - 2.0 * std::lgamma(m + 1.0) - m * std::log(4.0) +
                         2.0 * m * std::log(t) - std::log(std::cosh(r));
    return std::exp(log_p);
}

// Fills probs[0..n_max] for alpha != 0, r > 0 using the scaled Hermite
// recurrence h_n = H_n(z) (tanh(r)/2)^{n/2} / sqrt(n!), which obeys
//   h_{n+1} = (2 w h_n - tanh(r) sqrt(n) h_{n-1}) / sqrt(n+1),
//   w = (alpha cosh r + alpha* e^{i theta} sinh r) e^{-i theta/2} / (2 cosh r).
// A running log scale keeps the magnitudes representable for large n.
std::vector<double> displaced_squeezed_pmf(std::complex<double> alpha, double r, double theta, std::size_t n_max)
{
    using cd = std::complex<double>;
    const double ch = std::cosh(r);
    const double sh = std::sinh(r);
    const double th = std::tanh(r);
    const cd phase = std::polar(1.0, theta);
    const cd gamma = alpha * ch + std::conj(alpha) * phase * sh;
    const cd w = gamma * std::polar(1.0, -0.5 * theta) / (2.0 * ch);

    const double log_prefactor =
        -std::norm(alpha) - (std::conj(alpha) * std::conj(alpha) * phase).real() * th - std::log(ch);

    std::vector<double> probs(n_max + 1, 0.0);
    cd h_prev(0.0, 0.0);
    cd h_cur(1.0, 0.0);
    double log_scale = 0.0;

    constexpr double kHigh = 1e150;
    constexpr double kLow = 1e-150;

    for (std::size_t n = 0; n <= n_max; ++n) {
        const double mag = std::abs(h_cur);
        probs[n] = mag == 0.0 ? 0.0 : std::exp(log_prefactor + 2.0 * (std::log(mag) + log_scale));
        finite_probability(probs[n]);

        const double dn = static_cast<double>(n);
        const cd h_next = (2.0 * w * h_cur - th * std::sqrt(dn) * h_prev) / std::sqrt(dn + 1.0);
        h_prev = h_cur;
        h_cur = h_next;

        const double big = std::max(std::abs(h_prev), std::abs(h_cur));
        if (!std::isfinite(big))
            throw NumericRangeError("Hermite recurrence overflowed");
        if (big > kHigh || (big > 0.0 && big < kLow)) {
            h_prev /= big;
            h_cur /= big;
            log_scale += std::log(big);
        }
    }
    return probs;
}
} // namespace

double PhotonDistribution::mean() const
{
    double acc = 0.0;
    for (std::size_t n = 0; n < probs.size(); ++n)
        acc += static_cast<double>(n) * probs[n];
    return acc;
}

double PhotonDistribution::variance() const
{
    const double mu = mean();
    double acc = 0.0;
    for (std::size_t n = 0; n < probs.size(); ++n) {
        const double d = static_cast<double>(n) - mu;
        acc += d * d * probs[n];
    }
    return acc;
}

double poisson_pmf(double mean, long n)
{
    detail::require(std::isfinite(mean) && mean >= 0.0, "Poisson mean must be >= 0");
    detail::require(n >= 0, "photon number must be >= 0");
    if (mean == 0.0)
        return n == 0 ? 1.0 : 0.0;
    const double dn = static_cast<double>(n);
    return std::exp(dn * std::log(mean) - mean - std::lgamma(dn + 1.0));
}

double photon_pmf(std::complex<double> alpha, double r, double theta, long n)
{
    check_params(r, theta);
    detail::require(n >= 0, "photon number must be >= 0");
    if (r == 0.0)
        return poisson_pmf(std::norm(alpha), n);
    if (alpha == std::complex<double>(0.0, 0.0))
        return finite_probability(squeezed_vacuum_pmf(r, n));
    return displaced_squeezed_pmf(alpha, r, theta, static_cast<std::size_t>(n)).back();
}

double mean_photon_number(std::complex<double> alpha, double r)
{
    detail::require(std::isfinite(r) && r >= 0.0, "squeeze parameter r must be >= 0");
    return std::exp(-2.0 * r) / 4.0 + std::exp(2.0 * r) / 4.0 - 0.5 + std::norm(alpha);
}

double photon_number_variance(std::complex<double> alpha, double r, double theta)
{
    check_params(r, theta);
    const double sh = std::sinh(r);
    const double ch = std::cosh(r);
    const double phi = std::arg(alpha);
    return std::norm(alpha) * (std::cosh(2.0 * r) - std::sinh(2.0 * r) * std::cos(theta - 2.0 * phi)) +
           2.0 * sh * sh * ch * ch;
}

PhotonDistribution pmf_table(std::complex<double> alpha, double r, double theta, std::size_t n_max)
{
    check_params(r, theta);
    PhotonDistribution dist;
    dist.n_max = n_max;
    dist.mean_analytic = mean_photon_number(alpha, r);

    if (r == 0.0 || alpha == std::complex<double>(0.0, 0.0)) {
        dist.probs.resize(n_max + 1);
        for (std::size_t n = 0; n <= n_max; ++n)
            dist.probs[n] = photon_pmf(alpha, r, theta, static_cast<long>(n));
    } else {
        dist.probs = displaced_squeezed_pmf(alpha, r, theta, n_max);
    }

    for (double p : dist.probs)
        dist.mass += p;
    return dist;
}

double gaussian_photon_approximation(double mean, double variance, double n)
{
    detail::require(variance > 0.0, "variance must be positive");
    const double d = n - mean;
    return std::exp(-0.5 * d * d / variance) / std::sqrt(constants::two_pi * variance);
}

} // namespace sqz
