#ifndef SQZ_GAUSSIAN_STATE_HPP
#define SQZ_GAUSSIAN_STATE_HPP

#include <Eigen/Dense>

#include <cstddef>
#include <utility>
#include <vector>

namespace sqz
{
using Matrix2 = Eigen::Matrix2d;
using Vector2 = Eigen::Vector2d;

// Conventions used throughout the library:
//
//  * Quadratures are ordered X1, Y1, X2, Y2, ... so mode k occupies rows and
//    columns 2k and 2k+1 of the covariance matrix.
//  * Covariances are normalized to the vacuum: the vacuum covariance is the
//    identity and the uncertainty bound reads "symplectic eigenvalues >= 1".
//    Multiply by 1/4 for the convention in which the vacuum variance is 1/4
//    (see to_quarter_convention).
//  * Rotating a mode by phi maps V -> R^T V R and mean -> R^T mean with
//    R(phi) = [[cos phi, -sin phi], [sin phi, cos phi]]. A pure squeezed state
//    with squeeze angle theta is diag(e^{-2r}, e^{2r}) rotated by theta, so its
//    lowest-variance quadrature sits at -theta (mod pi).
//  * The quadrature at measurement angle vartheta is X cos(vartheta) + Y sin(vartheta).

inline constexpr double kSymmetryTolerance = 1e-12;
inline constexpr double kPhysicalTolerance = 1e-9;

// Squeezing strength and orientation of a source, plus its total efficiency.
// 1 - eta^2 is the relative energy loss applied to the state.
class SqueezeSpec
{
public:
    SqueezeSpec(double r, double theta, double eta = 1.0);

    static SqueezeSpec from_db(double db, double theta, double eta = 1.0);

    double r() const { return r_; }
    double theta() const { return theta_; }  // reduced to [0, pi)
    double eta() const { return eta_; }

private:
    double r_;
    double theta_;
    double eta_;
};

// Mean vector and covariance matrix of an n-mode Gaussian state.
// Construction validates symmetry and the uncertainty bound.
class GaussianState
{
public:
    GaussianState(Eigen::VectorXd mean, Eigen::MatrixXd cov);

    std::size_t n_modes() const { return static_cast<std::size_t>(mean_.size() / 2); }
    const Eigen::VectorXd &mean() const { return mean_; }
    const Eigen::MatrixXd &cov() const { return cov_; }

    Matrix2 block(std::size_t mode) const;
    Vector2 mode_mean(std::size_t mode) const;

    // Single-mode reduction (partial trace over the other modes).
    GaussianState reduced(std::size_t mode) const;
    // Reduction onto an ordered subset of modes.
    GaussianState reduced(const std::vector<std::size_t> &modes) const;

    bool is_pure(double tol = kPhysicalTolerance) const;

private:
    Eigen::VectorXd mean_;
    Eigen::MatrixXd cov_;
};

Matrix2 rotation_matrix(double phi);

// Sorted (ascending) symplectic eigenvalues, one per mode.
std::vector<double> symplectic_eigenvalues(const Eigen::MatrixXd &cov);

// Tensor product: block-diagonal covariance, concatenated means.
GaussianState tensor(const GaussianState &a, const GaussianState &b);

GaussianState vacuum_state(std::size_t n_modes);
GaussianState squeezed_vacuum(const SqueezeSpec &spec);
// Squeezed vacuum followed by the spec's efficiency as a loss channel.
GaussianState lossy_squeezed_vacuum(const SqueezeSpec &spec);
GaussianState coherent_state(double dx, double dy);

GaussianState rotate(const GaussianState &state, std::size_t mode, double phi);
GaussianState displace(const GaussianState &state, std::size_t mode, double dx, double dy);

// Pure-loss channel on one mode: V' = eta_sq V + (1 - eta_sq) I, mean' = sqrt(eta_sq) mean.
GaussianState apply_loss(const GaussianState &state, std::size_t mode, double eta_sq);

// Passive two-mode mixer. Mode b is first phase-rotated by relative_phase,
// then (a, b) -> (t a + s b, -s a + t b) with t = sqrt(T), s = sqrt(1 - T),
// applied identically to the X and Y quadratures.
GaussianState beam_splitter(const GaussianState &state,
                            std::size_t mode_a,
                            std::size_t mode_b,
                            double transmissivity,
                            double relative_phase = 0.0);

double quadrature_variance(const GaussianState &state, std::size_t mode, double vartheta);
double quadrature_variance(const Matrix2 &block, double vartheta);
double quadrature_mean(const GaussianState &state, std::size_t mode, double vartheta);

struct MinimalQuadrature
{
    double theta_min = 0.0;  // [0, pi)
    double var_min = 0.0;
};

MinimalQuadrature minimal_variance_quadrature(const Matrix2 &block);
MinimalQuadrature minimal_variance_quadrature(const GaussianState &state, std::size_t mode);

// Vacuum-normalized matrix -> convention with vacuum variance 1/4.
Eigen::MatrixXd to_quarter_convention(const Eigen::MatrixXd &cov);
Eigen::MatrixXd from_quarter_convention(const Eigen::MatrixXd &cov);

} // namespace sqz

#endif // SQZ_GAUSSIAN_STATE_HPP
