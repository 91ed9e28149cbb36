#include "sqz/noise_budget.hpp"

#include "sqz/constants.hpp"
#include "sqz/errors.hpp"
#include "sqz/phase_space.hpp"

#include <cmath>
#include <complex>
#include <numbers>

namespace sqz
{
using constants::c;
using constants::hbar;

namespace
{
void require_positive(double v, const char *what)
{
    detail::require(std::isfinite(v) && v > 0.0, std::string(what) + " must be positive and finite");
}

void require_sideband(double omega_sideband)
{
    detail::require(std::isfinite(omega_sideband) && omega_sideband >= 0.0,
                    "sideband frequency must be finite and non-negative");
}

void require_nonzero_sideband(double omega_sideband, const char *what)
{
    require_sideband(omega_sideband);
    if (omega_sideband == 0.0)
        throw DomainError(std::string(what) + " is singular at zero sideband frequency");
}

double normalize(const InterferometerConfig &config, double asd, Normalization norm)
{
    return norm == Normalization::strain ? asd / config.arm_length_m() : asd;
}

double cavity_factor(const InterferometerConfig &config, double omega_sideband)
{
    return config.arm_cavity() ? h_fp(config, omega_sideband) : 1.0;
}

double reduce_half_turn(double angle)
{
    // Map to (-pi/2, pi/2].
    double a = std::remainder(angle, std::numbers::pi);
    if (a <= -0.5 * std::numbers::pi)
        a += std::numbers::pi;
    return a;
}

double output_phase_variance(const Injection &injection, double k)
{
    if (std::holds_alternative<NoInjection>(injection))
        return ponderomotive_transform(Matrix2::Identity(), k)(1, 1);

    if (const auto *fixed = std::get_if<FixedSqueeze>(&injection))
        return ponderomotive_transform(lossy_squeezed_vacuum(fixed->spec).block(0), k)(1, 1);

    const auto &opt = std::get<OptimalFrequencyDependent>(injection);
    const GaussianState in = squeezed_vacuum(SqueezeSpec(opt.r, optimal_input_angle(k)));
    return ponderomotive_transform(in.block(0), k)(1, 1);
}
} // namespace

InterferometerConfig::InterferometerConfig(double power_w,
                                           double wavelength_m,
                                           double arm_length_m,
                                           double mirror_mass_kg,
                                           std::optional<ArmCavity> arm_cavity,
                                           std::optional<Pendulum> pendulum)
    : power_w_(power_w),
      wavelength_m_(wavelength_m),
      arm_length_m_(arm_length_m),
      mirror_mass_kg_(mirror_mass_kg),
      arm_cavity_(arm_cavity),
      pendulum_(pendulum)
{
    require_positive(power_w, "power");
    require_positive(wavelength_m, "wavelength");
    require_positive(arm_length_m, "arm length");
    require_positive(mirror_mass_kg, "mirror mass");
    if (arm_cavity_)
        detail::require(arm_cavity_->t_fp > 0.0 && arm_cavity_->t_fp <= 1.0,
                        "arm-cavity transmission T_FP must lie in (0, 1]");
    if (pendulum_) {
        require_positive(pendulum_->omega_m, "pendulum resonance");
        require_positive(pendulum_->q, "pendulum quality factor");
    }
}

double InterferometerConfig::omega() const
{
    return constants::two_pi * c / wavelength_m_;
}

double InterferometerConfig::reduced_mass() const
{
    return 0.5 * mirror_mass_kg_;
}

double InterferometerConfig::gamma_fp() const
{
    if (!arm_cavity_)
        throw InvalidArgument("configuration has no arm cavity");
    return c * arm_cavity_->t_fp / (4.0 * arm_length_m_);
}

double shot_asd(const InterferometerConfig &config, double omega_sideband, Normalization norm)
{
    require_sideband(omega_sideband);
    const double base = std::sqrt(hbar * c * c / (2.0 * config.omega() * config.power_w()));
    return normalize(config, base * cavity_factor(config, omega_sideband), norm);
}

double h_fp(const InterferometerConfig &config, double omega_sideband)
{
    require_sideband(omega_sideband);
    const double gamma = config.gamma_fp();
    const double l = config.arm_length_m();
    return std::sqrt(l * l * (gamma * gamma + omega_sideband * omega_sideband) / (c * c));
}

double mechanical_susceptibility(const InterferometerConfig &config, double omega_sideband)
{
    require_sideband(omega_sideband);
    if (!config.pendulum())
        throw InvalidArgument("pendulum susceptibility needs pendulum parameters");
    const auto &p = *config.pendulum();
    const std::complex<double> denom(p.omega_m * p.omega_m - omega_sideband * omega_sideband,
                                     omega_sideband * p.omega_m / p.q);
    return 1.0 / (config.mirror_mass_kg() * std::abs(denom));
}

double rpn_asd(const InterferometerConfig &config,
               double omega_sideband,
               Normalization norm,
               Susceptibility susceptibility)
{
    const double omega = config.omega();
    const double power = config.power_w();
    double asd = 0.0;
    if (susceptibility == Susceptibility::free_mass) {
        require_nonzero_sideband(omega_sideband, "free-mass radiation pressure noise");
        const double m = config.reduced_mass();
        const double w2 = omega_sideband * omega_sideband;
        asd = std::sqrt(2.0 * hbar * omega * power / (c * c * m * m * w2 * w2));
    } else {
        asd = mechanical_susceptibility(config, omega_sideband) * std::sqrt(8.0 * hbar * omega * power / (c * c));
    }
    return normalize(config, asd * cavity_factor(config, omega_sideband), norm);
}

double sql_asd(const InterferometerConfig &config, double omega_sideband, SqlVariant variant, Normalization norm)
{
    require_nonzero_sideband(omega_sideband, "standard quantum limit");
    const double base = hbar / (config.reduced_mass() * omega_sideband * omega_sideband);
    double psd = 2.0 * base;
    if (variant == SqlVariant::with_arm_cavities) {
        const double h = h_fp(config, omega_sideband);
        psd = base * (1.0 / h + h);
    }
    return normalize(config, std::sqrt(psd), norm);
}

double kappa(const InterferometerConfig &config, double omega_sideband)
{
    require_nonzero_sideband(omega_sideband, "coupling parameter k");
    return 2.0 * config.omega() * config.power_w() /
           (config.reduced_mass() * c * c * omega_sideband * omega_sideband);
}

double omega_sql(const InterferometerConfig &config)
{
    return std::sqrt(2.0 * config.omega() * config.power_w() / (config.reduced_mass() * c * c));
}

double total_quantum_noise_asd(const InterferometerConfig &config,
                               double omega_sideband,
                               const Injection &injection,
                               Normalization norm)
{
    const SqlVariant variant = config.arm_cavity() ? SqlVariant::with_arm_cavities : SqlVariant::free_mass;
    const double sql = sql_asd(config, omega_sideband, variant, Normalization::displacement);
    const double k = kappa(config, omega_sideband);
    const double var_y = output_phase_variance(injection, k);
    return normalize(config, std::sqrt(0.5 * sql * sql * var_y / k), norm);
}

double shot_rpn_sum_asd(const InterferometerConfig &config,
                        double omega_sideband,
                        Normalization norm,
                        Susceptibility susceptibility)
{
    const double s = shot_asd(config, omega_sideband, norm);
    const double r = rpn_asd(config, omega_sideband, norm, susceptibility);
    return std::hypot(s, r);
}

Matrix2 ponderomotive_transform(const Matrix2 &cov, double k)
{
    detail::require(std::isfinite(k) && k >= 0.0, "coupling k must be >= 0");
    Matrix2 coupling;
    coupling << 1.0, -k, 0.0, 1.0;
    Matrix2 out = coupling.transpose() * cov * coupling;
    return 0.5 * (out + out.transpose());
}

double optimal_input_angle(double k)
{
    detail::require(k >= 0.0, "coupling k must be >= 0");
    if (std::isinf(k))
        return 0.0;
    return std::atan2(1.0, k);
}

PonderomotiveSqueezing ponderomotive_squeezing_db(double k)
{
    const auto min = minimal_variance_quadrature(ponderomotive_transform(Matrix2::Identity(), k));
    return {db_from_variance(min.var_min), reduce_half_turn(min.theta_min - 0.5 * std::numbers::pi)};
}

double readout_variance_vs_lo_angle(const Matrix2 &cov_out, double zeta)
{
    return quadrature_variance(cov_out, zeta);
}

double readout_signal_transfer(double zeta)
{
    return std::sin(zeta);
}

double readout_snr(const Matrix2 &cov_out, double zeta)
{
    const double s = readout_signal_transfer(zeta);
    return s * s / readout_variance_vs_lo_angle(cov_out, zeta);
}

double filter_cavity_rotation(const FilterCavitySpec &spec, double omega_sideband)
{
    detail::require(std::isfinite(omega_sideband), "sideband frequency must be finite");
    double total = 0.0;
    for (const auto &cav : spec.cavities) {
        detail::require(cav.half_bandwidth_hz > 0.0, "filter cavity half bandwidth must be positive");
        const double delta = constants::two_pi * cav.detuning_hz;
        const double gamma = constants::two_pi * cav.half_bandwidth_hz;
        const auto phase = [&](double w) { return -2.0 * std::atan((w - delta) / gamma); };
        total += 0.5 * (phase(omega_sideband) + phase(-omega_sideband));
    }
    return reduce_half_turn(total);
}

double intracavity_squeeze_limit(double r1)
{
    detail::require(r1 > 0.0 && r1 <= 1.0, "amplitude reflectivity r1 must lie in (0, 1]");
    const double factor = (1.0 + r1) * (1.0 + r1) / (r1 * r1);
    if (!std::isfinite(factor))
        throw NumericRangeError("intra-cavity squeeze factor diverges as r1 -> 0");
    return 10.0 * std::log10(factor);
}

OpoSpectrum opo_squeezing_spectrum(double pump_ratio_x, double gamma, double eta_total, double omega_sideband)
{
    detail::require(std::isfinite(pump_ratio_x) && pump_ratio_x >= 0.0, "pump parameter x must be >= 0");
    if (pump_ratio_x >= 1.0)
        throw DomainError("OPO model is valid only below threshold (x < 1)");
    require_positive(gamma, "OPO decay rate");
    detail::require(eta_total >= 0.0 && eta_total <= 1.0, "efficiency must lie in [0, 1]");
    detail::require(std::isfinite(omega_sideband), "sideband frequency must be finite");

    const double x = pump_ratio_x;
    const double w = omega_sideband / gamma;
    const double gain = 4.0 * x * eta_total;
    return {1.0 - gain / ((1.0 + x) * (1.0 + x) + w * w), 1.0 + gain / ((1.0 - x) * (1.0 - x) + w * w)};
}

std::vector<NoiseBudgetRow> noise_budget_table(const InterferometerConfig &config,
                                               const std::vector<double> &f_hz,
                                               const Injection &injection,
                                               Normalization norm)
{
    detail::require(!f_hz.empty(), "frequency grid is empty");
    const Susceptibility sus = config.pendulum() ? Susceptibility::pendulum : Susceptibility::free_mass;
    const SqlVariant variant = config.arm_cavity() ? SqlVariant::with_arm_cavities : SqlVariant::free_mass;

    std::vector<NoiseBudgetRow> rows;
    rows.reserve(f_hz.size());
    for (double f : f_hz) {
        detail::require(f > 0.0, "noise budget frequencies must be positive");
        const double w = constants::two_pi * f;
        NoiseBudgetRow row;
        row.f_hz = f;
        row.shot = shot_asd(config, w, norm);
        row.rpn = rpn_asd(config, w, norm, sus);
        row.sql = sql_asd(config, w, variant, norm);
        row.total = total_quantum_noise_asd(config, w, NoInjection{}, norm);
        row.total_injected = total_quantum_noise_asd(config, w, injection, norm);
        rows.push_back(row);
    }
    return rows;
}

SpectrumUnits units_for(Normalization norm)
{
    return norm == Normalization::strain ? SpectrumUnits::strain_per_rt_hz : SpectrumUnits::meters_per_rt_hz;
}

} // namespace sqz
