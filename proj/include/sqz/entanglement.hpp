#ifndef SQZ_ENTANGLEMENT_HPP
#define SQZ_ENTANGLEMENT_HPP

#include "sqz/gaussian_state.hpp"

namespace sqz
{
using Matrix4 = Eigen::Matrix4d;

// Vacuum-normalized 4x4 covariance of parties A and B in the ordering
// X_A, Y_A, X_B, Y_B. Stored as a validated two-mode GaussianState so that
// symmetry and physicality are checked once, on construction.
class BipartiteCovariance
{
public:
    explicit BipartiteCovariance(const Matrix4 &cov);
    explicit BipartiteCovariance(const GaussianState &two_mode);

    const Matrix4 &cov() const { return cov_; }
    GaussianState state() const;
    BipartiteCovariance swapped() const;

private:
    Matrix4 cov_;
};

// Duan sum Var(X_A -+ X_B)/2 + Var(Y_A +- Y_B)/2. Both sign assignments are
// evaluated and the smaller total is returned; values below 2 certify
// inseparability, two uncorrelated vacua give exactly 2.
double duan_value(const BipartiteCovariance &bp);

// Reid EPR parameter: product of the conditional variances of B's X and Y
// given the corresponding measurement on A. Values below 1 demonstrate
// EPR steering of B by A; two vacua give exactly 1.
double reid_epr(const BipartiteCovariance &bp);

// Overlap two single-mode states on a balanced beam splitter.
BipartiteCovariance assemble_bipartite(const GaussianState &state_a,
                                       const GaussianState &state_b,
                                       double relative_phase = 0.0);

} // namespace sqz

#endif // SQZ_ENTANGLEMENT_HPP
