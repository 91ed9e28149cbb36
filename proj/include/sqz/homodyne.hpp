#ifndef SQZ_HOMODYNE_HPP
#define SQZ_HOMODYNE_HPP

#include "sqz/gaussian_state.hpp"
#include "sqz/spectrum_series.hpp"

#include <cstddef>
#include <cstdint>
#include <numbers>
#include <string>
#include <vector>

namespace sqz
{
// Balanced homodyne detection in the strong local-oscillator limit: every
// sample is one draw of the quadrature selected by the LO phase. Samples are
// i.i.d. per measuring interval and reproducible from (inputs, seed).

struct LoPhaseSchedule
{
    double start = 0.0;  // radians
    double end = 0.0;    // equal to start for a constant phase

    bool constant() const { return start == end; }
    double at(std::size_t i, std::size_t n) const;
};

struct HomodyneTrace
{
    std::vector<double> samples;
    double sample_rate_hz = 1.0;
    LoPhaseSchedule lo_phase;
    std::string source;
    std::uint64_t seed = 0;

    double mean() const;
    double variance() const;  // unbiased sample variance
};

HomodyneTrace sample_quadratures(const GaussianState &state,
                                 std::size_t mode,
                                 double vartheta,
                                 std::size_t n_samples,
                                 std::uint64_t seed,
                                 double sample_rate_hz = 1.0);

// Rolling-window noise level of a trace taken while the LO phase is ramped.
struct ScanTrace
{
    std::vector<double> phase_rad;      // LO phase at each window centre
    std::vector<double> level_db;       // 10 log10(window variance), vacuum = 0 dB
    std::vector<double> analytic_db;    // expected level at the window centre
    HomodyneTrace raw;
};

ScanTrace scanned_phase_trace(const GaussianState &state,
                              std::size_t mode,
                              const LoPhaseSchedule &ramp,
                              std::size_t n_samples,
                              std::size_t window,
                              std::uint64_t seed);

// Sinusoidal phase signal in white (squeezed) shot noise.
HomodyneTrace simulate_michelson_output(double signal_amp,
                                        double signal_freq_hz,
                                        double squeeze_db,
                                        double duration_s,
                                        double sample_rate_hz,
                                        std::uint64_t seed);

// Known-phase (sine) matched filter output in units of its noise standard
// deviation, for white noise of the given variance.
double matched_filter_statistic(const HomodyneTrace &trace, double freq_hz, double noise_variance);

// Lock-in estimate of a tone a sin(2 pi f t) + b cos(2 pi f t).
struct ToneEstimate
{
    double sin_amplitude = 0.0;
    double cos_amplitude = 0.0;
    double sigma = 0.0;  // standard error of each component for white noise

    double amplitude() const;
};

ToneEstimate estimate_tone(const HomodyneTrace &trace, double freq_hz);

// Averaged periodogram with Hann-windowed, non-overlapping segments of
// length sample_rate / rbw. Values are single-sided PSD normalized to the
// vacuum (shot-noise) level, so white noise of variance v reads v in every
// bin. DC and Nyquist bins are omitted.
struct AnalyzerSpectrum
{
    SpectrumSeries series;
    std::size_t averages = 0;
    std::size_t segment_length = 0;
    double rbw_hz = 0.0;

    // Absolute single-sided PSD (units^2 / Hz) of one bin.
    double absolute_psd(std::size_t bin, double sample_rate_hz) const;
};

AnalyzerSpectrum spectrum_analyzer(const HomodyneTrace &trace, double rbw_hz);

std::vector<double> to_db(const std::vector<double> &linear);

// White squeezed noise coloured by the below-threshold OPO spectrum
// (frequency-domain shaping of the squeezed-quadrature variance).
HomodyneTrace simulate_opo_trace(double pump_ratio_x,
                                 double gamma,
                                 double eta_total,
                                 std::size_t n_samples,
                                 double sample_rate_hz,
                                 std::uint64_t seed);

// Dual-quadrature readout with two squeezed sources entangled on a balanced
// beam splitter. One beam picks up the signal (phase quadrature) and a
// disturbance at an arbitrary phase-space angle; it is recombined with the
// reference beam and both outputs are read out in their squeezed quadrature.
struct QdmTone
{
    double amplitude = 0.0;  // displacement in vacuum standard deviations
    double freq_hz = 0.0;
    double angle = 0.5 * std::numbers::pi;  // phase-space direction; signal is along Y
};

struct QdmScenario
{
    QdmTone signal;
    QdmTone disturbance;
    double squeeze_db_a = 10.0;  // source read out in the phase quadrature
    double squeeze_db_b = 10.0;  // source read out in the amplitude quadrature
    double efficiency = 0.85;    // power efficiency applied to both entangled beams
    std::size_t n_samples = 1 << 18;
    double sample_rate_hz = 1.0e6;
};

struct QdmReadout
{
    HomodyneTrace trace_a;  // phase-quadrature readout
    HomodyneTrace trace_b;  // amplitude-quadrature readout
    std::vector<bool> veto_mask;
    double floor_a = 1.0;   // analytic readout variances (vacuum = 1)
    double floor_b = 1.0;
};

QdmReadout qdm_dual_readout(const QdmScenario &scenario, std::uint64_t seed);

struct VetoMask
{
    std::vector<double> f_hz;
    std::vector<bool> flagged;
    std::vector<double> level;  // trace_b spectrum relative to its own floor

    std::size_t count() const;
};

// Flags spectrum bins of trace_b whose excess over the median floor exceeds
// threshold_sigma standard errors of the averaged periodogram.
VetoMask qdm_veto(const QdmReadout &readout, double threshold_sigma, double rbw_hz);

} // namespace sqz

#endif // SQZ_HOMODYNE_HPP
