#ifndef SQZ_PHASE_LIMITS_HPP
#define SQZ_PHASE_LIMITS_HPP

namespace sqz
{
// Michelson fringe: fraction of the input power leaving the signal port at
// differential phase phi (phi = 0 is the dark fringe).
double fringe_power_fraction(double phi);

// d n_out / d phi for n_mean photons per measuring interval.
double signal_slope(double phi, double n_mean);

enum class PhaseStrategy
{
    coherent,                // 1 / sqrt(n)
    csv,                     // e^{-r} / sqrt(n)
    heisenberg_single_shot,  // pi / n
    coherent_loss,           // sqrt(1 / (eta n))
    csv_loss,                // sqrt((eta e^{-2r} + 1 - eta) / (eta n))
    optimal_loss,            // sqrt((1 - eta) / (eta n)), 0 < eta < 1
};

// Repetitions of the measurement are folded into n_mean by the caller.
struct PhaseBoundQuery
{
    double n_mean = 0.0;
    double eta = 1.0;
    double r = 0.0;
    PhaseStrategy strategy = PhaseStrategy::coherent;
};

double min_phase(const PhaseBoundQuery &query);

// Ratio of the lossy squeezed-light bound to the loss-limited optimum.
double csv_optimality_ratio(double eta, double r);

} // namespace sqz

#endif // SQZ_PHASE_LIMITS_HPP
