#ifndef SQZ_PHOTON_STATS_HPP
#define SQZ_PHOTON_STATS_HPP

#include <complex>
#include <cstddef>
#include <vector>

namespace sqz
{
// Photon-number statistics of the pure displaced squeezed state
// |alpha, r, theta> = D(alpha) S(r, theta) |0>, with the squeeze operator
// S(r, theta) = exp[(r e^{-i theta} a^2 - r e^{i theta} a^dag^2) / 2].
// Note that theta here is the phase of the squeeze operator, not the
// phase-space squeeze angle used by SqueezeSpec.

struct PhotonDistribution
{
    std::size_t n_max = 0;
    std::vector<double> probs;   // P(0) ... P(n_max)
    double mean_analytic = 0.0;  // sinh^2 r + |alpha|^2
    double mass = 0.0;           // sum of probs

    double mean() const;
    double variance() const;
    // True when the truncation leaves at most 1e-6 of the probability mass.
    bool well_truncated() const { return mass >= 1.0 - 1e-6; }
};

double poisson_pmf(double mean, long n);

double photon_pmf(std::complex<double> alpha, double r, double theta, long n);

double mean_photon_number(std::complex<double> alpha, double r);

// Closed-form photon-number variance of |alpha, r, theta>.
double photon_number_variance(std::complex<double> alpha, double r, double theta);

PhotonDistribution pmf_table(std::complex<double> alpha, double r, double theta, std::size_t n_max);

// Normal approximation to a photon-number distribution with the given moments,
// adequate for strongly displaced states (n >> 1).
double gaussian_photon_approximation(double mean, double variance, double n);

} // namespace sqz

#endif // SQZ_PHOTON_STATS_HPP
