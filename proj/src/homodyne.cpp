#include "sqz/homodyne.hpp"

#include "sqz/constants.hpp"
#include "sqz/errors.hpp"
#include "sqz/noise_budget.hpp"
#include "sqz/phase_space.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <memory>
#include <numeric>
#include <random>

namespace sqz
{
namespace
{
using detail::require;
using constants::two_pi;

// Owns an FFTW plan together with its aligned buffers.
class RealFft
{
public:
    explicit RealFft(std::size_t n)
        : n_(n),
          in_(fftw_alloc_real(n)),
          out_(fftw_alloc_complex(n / 2 + 1))
    {
        if (!in_ || !out_)
            throw std::bad_alloc();
        plan_ = fftw_plan_dft_r2c_1d(static_cast<int>(n), in_.get(), out_.get(), FFTW_ESTIMATE);
        if (!plan_)
            throw NumericRangeError("FFT plan creation failed");
    }
    ~RealFft() { fftw_destroy_plan(plan_); }
    RealFft(const RealFft &) = delete;
    RealFft &operator=(const RealFft &) = delete;

    double *input() { return in_.get(); }
    const fftw_complex *output() const { return out_.get(); }
    void execute() { fftw_execute(plan_); }
    std::size_t size() const { return n_; }

private:
    struct Free
    {
        void operator()(void *p) const { fftw_free(p); }
    };
    std::size_t n_;
    std::unique_ptr<double, Free> in_;
    std::unique_ptr<fftw_complex, Free> out_;
    fftw_plan plan_ = nullptr;
};

class InverseRealFft
{
public:
    explicit InverseRealFft(std::size_t n)
        : n_(n),
          in_(fftw_alloc_complex(n / 2 + 1)),
          out_(fftw_alloc_real(n))
    {
        if (!in_ || !out_)
            throw std::bad_alloc();
        plan_ = fftw_plan_dft_c2r_1d(static_cast<int>(n), in_.get(), out_.get(), FFTW_ESTIMATE);
        if (!plan_)
            throw NumericRangeError("FFT plan creation failed");
    }
    ~InverseRealFft() { fftw_destroy_plan(plan_); }
    InverseRealFft(const InverseRealFft &) = delete;
    InverseRealFft &operator=(const InverseRealFft &) = delete;

    fftw_complex *input() { return in_.get(); }
    const double *output() const { return out_.get(); }
    void execute() { fftw_execute(plan_); }

private:
    struct Free
    {
        void operator()(void *p) const { fftw_free(p); }
    };
    std::size_t n_;
    std::unique_ptr<fftw_complex, Free> in_;
    std::unique_ptr<double, Free> out_;
    fftw_plan plan_ = nullptr;
};

std::vector<double> white_noise(std::size_t n, double variance, std::mt19937_64 &rng)
{
    std::normal_distribution<double> gauss(0.0, std::sqrt(variance));
    std::vector<double> out(n);
    for (auto &x : out)
        x = gauss(rng);
    return out;
}

double mean_of(const std::vector<double> &v, std::size_t first, std::size_t count)
{
    const auto b = v.begin() + static_cast<std::ptrdiff_t>(first);
    return std::accumulate(b, b + static_cast<std::ptrdiff_t>(count), 0.0) / static_cast<double>(count);
}

double variance_of(const std::vector<double> &v, std::size_t first, std::size_t count)
{
    require(count >= 2, "variance needs at least two samples");
    const double m = mean_of(v, first, count);
    double acc = 0.0;
    for (std::size_t i = first; i < first + count; ++i)
        acc += (v[i] - m) * (v[i] - m);
    return acc / static_cast<double>(count - 1);
}

void require_rate(double fs)
{
    require(std::isfinite(fs) && fs > 0.0, "sample rate must be positive");
}

double median(std::vector<double> v)
{
    require(!v.empty(), "median of an empty set");
    const auto mid = v.begin() + static_cast<std::ptrdiff_t>(v.size() / 2);
    std::nth_element(v.begin(), mid, v.end());
    if (v.size() % 2 == 1)
        return *mid;
    const double hi = *mid;
    const double lo = *std::max_element(v.begin(), mid);
    return 0.5 * (lo + hi);
}

} // namespace

double LoPhaseSchedule::at(std::size_t i, std::size_t n) const
{
    if (constant() || n <= 1)
        return start;
    return start + (end - start) * static_cast<double>(i) / static_cast<double>(n - 1);
}

double HomodyneTrace::mean() const
{
    require(!samples.empty(), "empty trace");
    return mean_of(samples, 0, samples.size());
}

double HomodyneTrace::variance() const
{
    return variance_of(samples, 0, samples.size());
}

HomodyneTrace sample_quadratures(const GaussianState &state,
                                 std::size_t mode,
                                 double vartheta,
                                 std::size_t n_samples,
                                 std::uint64_t seed,
                                 double sample_rate_hz)
{
    require(n_samples >= 1, "n_samples must be at least 1");
    require_rate(sample_rate_hz);
    require(mode < state.n_modes(), "mode index out of range");

    const double mu = quadrature_mean(state, mode, vartheta);
    const double var = quadrature_variance(state, mode, vartheta);

    std::mt19937_64 rng(seed);
    HomodyneTrace trace;
    trace.samples = white_noise(n_samples, var, rng);
    for (auto &x : trace.samples)
        x += mu;
    trace.sample_rate_hz = sample_rate_hz;
    trace.lo_phase = {vartheta, vartheta};
    trace.source = "gaussian mode " + std::to_string(mode);
    trace.seed = seed;
    return trace;
}

ScanTrace scanned_phase_trace(const GaussianState &state,
                              std::size_t mode,
                              const LoPhaseSchedule &ramp,
                              std::size_t n_samples,
                              std::size_t window,
                              std::uint64_t seed)
{
    require(mode < state.n_modes(), "mode index out of range");
    require(window >= 2, "window must hold at least two samples");
    require(window <= n_samples, "window larger than trace");
    require(std::isfinite(ramp.start) && std::isfinite(ramp.end), "ramp endpoints must be finite");

    const Matrix2 block = state.block(mode);
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);

    ScanTrace out;
    out.raw.samples.resize(n_samples);
    std::vector<double> expected(n_samples);
    for (std::size_t i = 0; i < n_samples; ++i)
    {
        const double phase = ramp.at(i, n_samples);
        expected[i] = quadrature_variance(block, phase);
        out.raw.samples[i] = quadrature_mean(state, mode, phase) + std::sqrt(expected[i]) * gauss(rng);
    }
    out.raw.lo_phase = ramp;
    out.raw.source = "gaussian mode " + std::to_string(mode) + " (phase scan)";
    out.raw.seed = seed;

    // Non-overlapping windows; the analytic level is the window-averaged variance.
    for (std::size_t first = 0; first + window <= n_samples; first += window)
    {
        out.phase_rad.push_back(ramp.at(first + window / 2, n_samples));
        out.level_db.push_back(10.0 * std::log10(variance_of(out.raw.samples, first, window)));
        out.analytic_db.push_back(10.0 * std::log10(mean_of(expected, first, window)));
    }
    return out;
}

HomodyneTrace simulate_michelson_output(double signal_amp,
                                        double signal_freq_hz,
                                        double squeeze_db,
                                        double duration_s,
                                        double sample_rate_hz,
                                        std::uint64_t seed)
{
    require_rate(sample_rate_hz);
    require(std::isfinite(signal_amp), "signal amplitude must be finite");
    require(signal_freq_hz >= 0.0 && signal_freq_hz < 0.5 * sample_rate_hz,
            "signal frequency must lie below the Nyquist frequency");
    require(std::isfinite(squeeze_db), "squeeze level must be finite");
    require(duration_s > 0.0 && std::isfinite(duration_s), "duration must be positive");

    const auto n = static_cast<std::size_t>(std::llround(duration_s * sample_rate_hz));
    require(n >= 1, "duration shorter than one sample");

    std::mt19937_64 rng(seed);
    HomodyneTrace trace;
    trace.samples = white_noise(n, variance_from_db(squeeze_db), rng);
    for (std::size_t i = 0; i < n; ++i)
        trace.samples[i] += signal_amp * std::sin(two_pi * signal_freq_hz * static_cast<double>(i) / sample_rate_hz);
    trace.sample_rate_hz = sample_rate_hz;
    trace.lo_phase = {0.5 * constants::pi, 0.5 * constants::pi};
    trace.source = "michelson dark port";
    trace.seed = seed;
    return trace;
}

double matched_filter_statistic(const HomodyneTrace &trace, double freq_hz, double noise_variance)
{
    require(!trace.samples.empty(), "empty trace");
    require(noise_variance > 0.0, "noise variance must be positive");
    double corr = 0.0;
    double energy = 0.0;
    for (std::size_t i = 0; i < trace.samples.size(); ++i)
    {
        const double s = std::sin(two_pi * freq_hz * static_cast<double>(i) / trace.sample_rate_hz);
        corr += trace.samples[i] * s;
        energy += s * s;
    }
    require(energy > 0.0, "template has no energy at this frequency");
    return corr / std::sqrt(noise_variance * energy);
}

double ToneEstimate::amplitude() const
{
    return std::hypot(sin_amplitude, cos_amplitude);
}

ToneEstimate estimate_tone(const HomodyneTrace &trace, double freq_hz)
{
    const std::size_t n = trace.samples.size();
    require(n >= 4, "trace too short for a tone estimate");
    require(freq_hz > 0.0 && freq_hz < 0.5 * trace.sample_rate_hz, "tone frequency must lie inside (0, Nyquist)");

    // Least squares on the two quadratures.
    double ss = 0.0, cc = 0.0, sc = 0.0, xs = 0.0, xc = 0.0;
    for (std::size_t i = 0; i < n; ++i)
    {
        const double ph = two_pi * freq_hz * static_cast<double>(i) / trace.sample_rate_hz;
        const double s = std::sin(ph);
        const double c = std::cos(ph);
        ss += s * s;
        cc += c * c;
        sc += s * c;
        xs += trace.samples[i] * s;
        xc += trace.samples[i] * c;
    }
    const double det = ss * cc - sc * sc;
    require(det > 0.0, "tone frequency not resolvable with this trace");

    ToneEstimate est;
    est.sin_amplitude = (xs * cc - xc * sc) / det;
    est.cos_amplitude = (xc * ss - xs * sc) / det;

    double resid = 0.0;
    for (std::size_t i = 0; i < n; ++i)
    {
        const double ph = two_pi * freq_hz * static_cast<double>(i) / trace.sample_rate_hz;
        const double e = trace.samples[i] - est.sin_amplitude * std::sin(ph) - est.cos_amplitude * std::cos(ph);
        resid += e * e;
    }
    const double noise_var = resid / static_cast<double>(n - 2);
    est.sigma = std::sqrt(noise_var * 2.0 / static_cast<double>(n));
    return est;
}

double AnalyzerSpectrum::absolute_psd(std::size_t bin, double sample_rate_hz) const
{
    require(bin < series.values.size(), "bin index out of range");
    require_rate(sample_rate_hz);
    return series.values[bin] * 2.0 / sample_rate_hz;
}

AnalyzerSpectrum spectrum_analyzer(const HomodyneTrace &trace, double rbw_hz)
{
    const double fs = trace.sample_rate_hz;
    require_rate(fs);
    require(std::isfinite(rbw_hz) && rbw_hz > 0.0, "resolution bandwidth must be positive");
    require(rbw_hz <= 0.25 * fs, "resolution bandwidth must not exceed a quarter of the sample rate");

    const auto len = static_cast<std::size_t>(std::llround(fs / rbw_hz));
    require(len <= trace.samples.size(), "resolution bandwidth too small for the trace length");

    std::vector<double> window(len);
    double w_sq = 0.0;
    for (std::size_t i = 0; i < len; ++i)
    {
        window[i] = 0.5 - 0.5 * std::cos(two_pi * static_cast<double>(i) / static_cast<double>(len));
        w_sq += window[i] * window[i];
    }

    const std::size_t n_bins = (len + 1) / 2 - 1;  // skip DC and Nyquist
    const std::size_t segments = trace.samples.size() / len;
    std::vector<double> acc(n_bins, 0.0);

    RealFft fft(len);
    for (std::size_t s = 0; s < segments; ++s)
    {
        const double *seg = trace.samples.data() + s * len;
        for (std::size_t i = 0; i < len; ++i)
            fft.input()[i] = seg[i] * window[i];
        fft.execute();
        for (std::size_t k = 0; k < n_bins; ++k)
        {
            const auto &z = fft.output()[k + 1];
            acc[k] += z[0] * z[0] + z[1] * z[1];
        }
    }

    AnalyzerSpectrum out;
    out.averages = segments;
    out.segment_length = len;
    out.rbw_hz = fs / static_cast<double>(len);
    out.series.units = SpectrumUnits::dimensionless;
    out.series.f_hz.resize(n_bins);
    out.series.values.resize(n_bins);
    for (std::size_t k = 0; k < n_bins; ++k)
    {
        out.series.f_hz[k] = static_cast<double>(k + 1) * out.rbw_hz;
        out.series.values[k] = acc[k] / (w_sq * static_cast<double>(segments));
    }
    return out;
}

std::vector<double> to_db(const std::vector<double> &linear)
{
    std::vector<double> out(linear.size());
    std::transform(linear.begin(), linear.end(), out.begin(), [](double v) { return -db_from_variance(v); });
    return out;
}

HomodyneTrace simulate_opo_trace(double pump_ratio_x,
                                 double gamma,
                                 double eta_total,
                                 std::size_t n_samples,
                                 double sample_rate_hz,
                                 std::uint64_t seed)
{
    require_rate(sample_rate_hz);
    require(n_samples >= 2, "n_samples must be at least 2");
    // Validates the model parameters before any work.
    (void)opo_squeezing_spectrum(pump_ratio_x, gamma, eta_total, 0.0);

    std::mt19937_64 rng(seed);
    const std::vector<double> white = white_noise(n_samples, 1.0, rng);

    RealFft fwd(n_samples);
    std::copy(white.begin(), white.end(), fwd.input());
    fwd.execute();

    InverseRealFft inv(n_samples);
    const std::size_t n_half = n_samples / 2 + 1;
    for (std::size_t k = 0; k < n_half; ++k)
    {
        const double f = static_cast<double>(k) * sample_rate_hz / static_cast<double>(n_samples);
        const double gain = std::sqrt(opo_squeezing_spectrum(pump_ratio_x, gamma, eta_total, two_pi * f).squeezed);
        inv.input()[k][0] = fwd.output()[k][0] * gain;
        inv.input()[k][1] = fwd.output()[k][1] * gain;
    }
    inv.execute();

    HomodyneTrace trace;
    trace.samples.resize(n_samples);
    const double norm = 1.0 / static_cast<double>(n_samples);
    for (std::size_t i = 0; i < n_samples; ++i)
        trace.samples[i] = inv.output()[i] * norm;
    trace.sample_rate_hz = sample_rate_hz;
    trace.source = "opo squeezed quadrature";
    trace.seed = seed;
    return trace;
}

QdmReadout qdm_dual_readout(const QdmScenario &sc, std::uint64_t seed)
{
    require(sc.n_samples >= 2, "n_samples must be at least 2");
    require_rate(sc.sample_rate_hz);
    require(sc.efficiency >= 0.0 && sc.efficiency <= 1.0, "efficiency must lie in [0, 1]");
    for (const QdmTone *t : {&sc.signal, &sc.disturbance})
    {
        require(std::isfinite(t->amplitude) && std::isfinite(t->angle), "tone parameters must be finite");
        require(t->freq_hz >= 0.0 && t->freq_hz < 0.5 * sc.sample_rate_hz, "tone frequency must lie below Nyquist");
    }

    // Mode 0 is squeezed in X, mode 1 in Y; the first splitter entangles them.
    const GaussianState src = tensor(squeezed_vacuum(SqueezeSpec::from_db(sc.squeeze_db_b, 0.0)),
                                     squeezed_vacuum(SqueezeSpec::from_db(sc.squeeze_db_a, 0.5 * constants::pi)));
    GaussianState epr = beam_splitter(src, 0, 1, 0.5);
    epr = apply_loss(apply_loss(epr, 0, sc.efficiency), 1, sc.efficiency);

    // Recombination returns the Y-squeezed field on output 0 and the X-squeezed
    // one on output 1. Readouts: Y of output 0, X of output 1.
    auto readouts = [](const GaussianState &s) {
        const GaussianState out = beam_splitter(s, 0, 1, 0.5);
        return Vector2(out.mean()(1), out.mean()(2));
    };
    const GaussianState noise_state = beam_splitter(epr, 0, 1, 0.5);
    Matrix2 cov;
    cov << noise_state.cov()(1, 1), noise_state.cov()(1, 2),
           noise_state.cov()(2, 1), noise_state.cov()(2, 2);

    // Linear response of the two readouts to a displacement of beam A.
    Eigen::Matrix2d transfer;
    transfer.col(0) = readouts(displace(epr, 0, 1.0, 0.0));
    transfer.col(1) = readouts(displace(epr, 0, 0.0, 1.0));

    const Eigen::LLT<Matrix2> chol(cov);
    if (chol.info() != Eigen::Success)
        throw NumericRangeError("readout covariance is not positive definite");
    const Matrix2 l = chol.matrixL();

    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);

    QdmReadout out;
    out.trace_a.samples.resize(sc.n_samples);
    out.trace_b.samples.resize(sc.n_samples);
    for (std::size_t i = 0; i < sc.n_samples; ++i)
    {
        const double t = static_cast<double>(i) / sc.sample_rate_hz;
        Vector2 d = Vector2::Zero();
        for (const QdmTone *tone : {&sc.signal, &sc.disturbance})
        {
            const double a = tone->amplitude * std::sin(two_pi * tone->freq_hz * t);
            d += a * Vector2(std::cos(tone->angle), std::sin(tone->angle));
        }
        const Vector2 z(gauss(rng), gauss(rng));
        const Vector2 y = transfer * d + l * z;
        out.trace_a.samples[i] = y(0);
        out.trace_b.samples[i] = y(1);
    }

    for (HomodyneTrace *tr : {&out.trace_a, &out.trace_b})
    {
        tr->sample_rate_hz = sc.sample_rate_hz;
        tr->seed = seed;
    }
    out.trace_a.lo_phase = {0.5 * constants::pi, 0.5 * constants::pi};
    out.trace_a.source = "qdm phase readout";
    out.trace_b.source = "qdm amplitude readout";
    out.floor_a = cov(0, 0);
    out.floor_b = cov(1, 1);
    return out;
}

std::size_t VetoMask::count() const
{
    return static_cast<std::size_t>(std::count(flagged.begin(), flagged.end(), true));
}

VetoMask qdm_veto(const QdmReadout &readout, double threshold_sigma, double rbw_hz)
{
    require(std::isfinite(threshold_sigma) && threshold_sigma > 0.0, "veto threshold must be positive");
    const AnalyzerSpectrum spec = spectrum_analyzer(readout.trace_b, rbw_hz);
    require(!spec.series.values.empty(), "spectrum has no bins");

    const double floor = median(spec.series.values);
    require(floor > 0.0, "trace_b spectrum floor is zero");
    const double rel_sigma = 1.0 / std::sqrt(static_cast<double>(spec.averages));

    VetoMask mask;
    mask.f_hz = spec.series.f_hz;
    mask.level.resize(spec.series.values.size());
    mask.flagged.resize(spec.series.values.size());
    for (std::size_t k = 0; k < spec.series.values.size(); ++k)
    {
        mask.level[k] = spec.series.values[k] / floor;
        mask.flagged[k] = (mask.level[k] - 1.0) > threshold_sigma * rel_sigma;
    }
    return mask;
}

} // namespace sqz
