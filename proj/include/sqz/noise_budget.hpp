#ifndef SQZ_NOISE_BUDGET_HPP
#define SQZ_NOISE_BUDGET_HPP

#include "sqz/gaussian_state.hpp"
#include "sqz/spectrum_series.hpp"

#include <optional>
#include <variant>
#include <vector>

namespace sqz
{
// Quantum noise of a simple Michelson interferometer with optional
// Fabry-Perot arm cavities. Sideband frequencies are angular (rad/s) unless
// a name says _hz.

struct ArmCavity
{
    double t_fp = 0.0;  // input-mirror power transmission, (0, 1]
};

struct Pendulum
{
    double omega_m = 0.0;  // resonance, rad/s
    double q = 0.0;        // quality factor
};

class InterferometerConfig
{
public:
    InterferometerConfig(double power_w,
                         double wavelength_m,
                         double arm_length_m,
                         double mirror_mass_kg,
                         std::optional<ArmCavity> arm_cavity = std::nullopt,
                         std::optional<Pendulum> pendulum = std::nullopt);

    double power_w() const { return power_w_; }
    double wavelength_m() const { return wavelength_m_; }
    double arm_length_m() const { return arm_length_m_; }
    double mirror_mass_kg() const { return mirror_mass_kg_; }
    const std::optional<ArmCavity> &arm_cavity() const { return arm_cavity_; }
    const std::optional<Pendulum> &pendulum() const { return pendulum_; }

    double omega() const;          // optical angular frequency 2 pi c / lambda
    double reduced_mass() const;   // M / 2
    double gamma_fp() const;       // c T_FP / (4 L); requires an arm cavity

private:
    double power_w_;
    double wavelength_m_;
    double arm_length_m_;
    double mirror_mass_kg_;
    std::optional<ArmCavity> arm_cavity_;
    std::optional<Pendulum> pendulum_;
};

enum class Normalization
{
    displacement,
    strain,
};

enum class Susceptibility
{
    free_mass,
    pendulum,
};

enum class SqlVariant
{
    free_mass,
    with_arm_cavities,
};

struct NoInjection
{
};

// Frequency-independent squeezed vacuum injected into the dark port.
struct FixedSqueeze
{
    SqueezeSpec spec;
};

// Squeezed vacuum whose angle follows optimal_input_angle(k(Omega)).
struct OptimalFrequencyDependent
{
    double r = 0.0;
};

using Injection = std::variant<NoInjection, FixedSqueeze, OptimalFrequencyDependent>;

double shot_asd(const InterferometerConfig &config, double omega_sideband, Normalization norm);

double h_fp(const InterferometerConfig &config, double omega_sideband);

// Mechanical susceptibility of one suspended mirror of mass M.
double mechanical_susceptibility(const InterferometerConfig &config, double omega_sideband);

double rpn_asd(const InterferometerConfig &config,
               double omega_sideband,
               Normalization norm,
               Susceptibility susceptibility);

double sql_asd(const InterferometerConfig &config,
               double omega_sideband,
               SqlVariant variant,
               Normalization norm = Normalization::displacement);

double kappa(const InterferometerConfig &config, double omega_sideband);
double omega_sql(const InterferometerConfig &config);

// SQL-factored total noise, sqrt(S_SQL / 2 * Var_Y(out) / k), where Var_Y(out)
// is the phase-quadrature variance after the ponderomotive transform of the
// injected state. Without injection this is sqrt(S_SQL/2 (1/k + k)).
double total_quantum_noise_asd(const InterferometerConfig &config,
                               double omega_sideband,
                               const Injection &injection,
                               Normalization norm = Normalization::displacement);

// Uncorrelated sum sqrt(shot^2 + rpn^2) of the individual contributions.
double shot_rpn_sum_asd(const InterferometerConfig &config,
                        double omega_sideband,
                        Normalization norm,
                        Susceptibility susceptibility);

// Input-output coupling K^T V K with K = [[1, -k], [0, 1]].
Matrix2 ponderomotive_transform(const Matrix2 &cov, double k);

// Injection squeeze angle (SqueezeSpec convention) that minimizes the output
// phase-quadrature variance: atan2(1, k), giving 45 degrees at k = 1.
double optimal_input_angle(double k);

struct PonderomotiveSqueezing
{
    double db = 0.0;
    // Local-oscillator angle, relative to the phase quadrature, at which the
    // squeezing appears; in (-pi/2, pi/2].
    double angle = 0.0;
};

PonderomotiveSqueezing ponderomotive_squeezing_db(double k);

double readout_variance_vs_lo_angle(const Matrix2 &cov_out, double zeta);
// Projection of a phase-quadrature signal onto the homodyne angle zeta.
double readout_signal_transfer(double zeta);
double readout_snr(const Matrix2 &cov_out, double zeta);

struct FilterCavity
{
    double detuning_hz = 0.0;
    double half_bandwidth_hz = 0.0;
};

struct FilterCavitySpec
{
    std::vector<FilterCavity> cavities;
};

// Rotation of the squeeze ellipse after reflection off lossless single-ended
// detuned cavities: half the sum of the upper and lower sideband reflection
// phases, accumulated over all cavities and reduced to (-pi/2, pi/2].
double filter_cavity_rotation(const FilterCavitySpec &spec, double omega_sideband);

// Largest intra-cavity squeeze factor (1 + r1)^2 / r1^2, in dB.
double intracavity_squeeze_limit(double r1);

struct OpoSpectrum
{
    double squeezed = 1.0;
    double antisqueezed = 1.0;
};

// Below-threshold OPO output variances at sideband omega_sideband for pump
// parameter x = sqrt(P / P_threshold), cavity decay rate gamma and total
// detection efficiency eta_total.
OpoSpectrum opo_squeezing_spectrum(double pump_ratio_x, double gamma, double eta_total, double omega_sideband);

struct NoiseBudgetRow
{
    double f_hz = 0.0;
    double shot = 0.0;
    double rpn = 0.0;
    double sql = 0.0;
    double total = 0.0;
    double total_injected = 0.0;
};

// Evaluates all curves on a frequency grid in Hz. The RPN column uses the
// pendulum susceptibility when the config carries one.
std::vector<NoiseBudgetRow> noise_budget_table(const InterferometerConfig &config,
                                               const std::vector<double> &f_hz,
                                               const Injection &injection,
                                               Normalization norm);

SpectrumUnits units_for(Normalization norm);

} // namespace sqz

#endif // SQZ_NOISE_BUDGET_HPP
