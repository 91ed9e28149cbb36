#include "sqz/gaussian_state.hpp"

#include "sqz/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace sqz
{
namespace
{
double reduce_angle(double theta)
{
    double t = std::fmod(theta, std::numbers::pi);
    if (t < 0.0)
        t += std::numbers::pi;
    if (t >= std::numbers::pi)
        t = 0.0;
    return t;
}

void require_mode(const GaussianState &state, std::size_t mode)
{
    if (mode >= state.n_modes())
        throw InvalidArgument("mode index " + std::to_string(mode) + " out of range for " +
                              std::to_string(state.n_modes()) + "-mode state");
}

Eigen::MatrixXd symplectic_form(Eigen::Index n_modes)
{
    Eigen::MatrixXd omega = Eigen::MatrixXd::Zero(2 * n_modes, 2 * n_modes);
    for (Eigen::Index k = 0; k < n_modes; ++k) {
        omega(2 * k, 2 * k + 1) = 1.0;
        omega(2 * k + 1, 2 * k) = -1.0;
    }
    return omega;
}

// x' = M x, V' = M V M^T.
GaussianState transform(const GaussianState &state, const Eigen::MatrixXd &m)
{
    Eigen::MatrixXd cov = m * state.cov() * m.transpose();
    cov = 0.5 * (cov + cov.transpose()).eval();
    return GaussianState(m * state.mean(), std::move(cov));
}

Eigen::MatrixXd mode_rotation(std::size_t n_modes, std::size_t mode, double phi)
{
    Eigen::MatrixXd m = Eigen::MatrixXd::Identity(2 * n_modes, 2 * n_modes);
    m.block<2, 2>(2 * mode, 2 * mode) = rotation_matrix(phi).transpose();
    return m;
}
} // namespace

SqueezeSpec::SqueezeSpec(double r, double theta, double eta)
    : r_(r), theta_(reduce_angle(theta)), eta_(eta)
{
    detail::require(std::isfinite(r) && r >= 0.0, "squeeze parameter r must be >= 0");
    detail::require(std::isfinite(theta), "squeeze angle must be finite");
    detail::require(eta >= 0.0 && eta <= 1.0, "efficiency eta must lie in [0, 1]");
}

SqueezeSpec SqueezeSpec::from_db(double db, double theta, double eta)
{
    detail::require(std::isfinite(db) && db >= 0.0, "squeeze factor in dB must be >= 0");
    return SqueezeSpec(db * std::log(10.0) / 20.0, theta, eta);
}

GaussianState::GaussianState(Eigen::VectorXd mean, Eigen::MatrixXd cov)
    : mean_(std::move(mean)), cov_(std::move(cov))
{
    const Eigen::Index dim = mean_.size();
    detail::require(dim >= 2 && dim % 2 == 0, "mean vector must have even, non-zero length");
    detail::require(cov_.rows() == dim && cov_.cols() == dim,
                    "covariance must be square and match the mean vector");
    detail::require(mean_.allFinite() && cov_.allFinite(), "state entries must be finite");

    const double scale = std::max(1.0, cov_.cwiseAbs().maxCoeff());
    const double asym = (cov_ - cov_.transpose()).cwiseAbs().maxCoeff();
    detail::require(asym <= kSymmetryTolerance * scale, "covariance matrix is not symmetric");
    cov_ = 0.5 * (cov_ + cov_.transpose()).eval();

    const auto nu = symplectic_eigenvalues(cov_);
    detail::require(nu.front() >= 1.0 - kPhysicalTolerance,
                    "covariance violates the uncertainty bound (symplectic eigenvalue " +
                        std::to_string(nu.front()) + " < 1)");
}

Matrix2 GaussianState::block(std::size_t mode) const
{
    require_mode(*this, mode);
    return cov_.block<2, 2>(2 * mode, 2 * mode);
}

Vector2 GaussianState::mode_mean(std::size_t mode) const
{
    require_mode(*this, mode);
    return mean_.segment<2>(2 * mode);
}

GaussianState GaussianState::reduced(std::size_t mode) const
{
    return reduced(std::vector<std::size_t>{mode});
}

GaussianState GaussianState::reduced(const std::vector<std::size_t> &modes) const
{
    detail::require(!modes.empty(), "reduction needs at least one mode");
    const auto n = static_cast<Eigen::Index>(modes.size());
    Eigen::VectorXd m(2 * n);
    Eigen::MatrixXd v(2 * n, 2 * n);
    for (Eigen::Index i = 0; i < n; ++i) {
        require_mode(*this, modes[i]);
        m.segment<2>(2 * i) = mean_.segment<2>(2 * modes[i]);
        for (Eigen::Index j = 0; j < n; ++j)
            v.block<2, 2>(2 * i, 2 * j) = cov_.block<2, 2>(2 * modes[i], 2 * modes[j]);
    }
    return GaussianState(std::move(m), std::move(v));
}

bool GaussianState::is_pure(double tol) const
{
    const auto nu = symplectic_eigenvalues(cov_);
    return std::all_of(nu.begin(), nu.end(), [tol](double x) { return std::abs(x - 1.0) <= tol; });
}

Matrix2 rotation_matrix(double phi)
{
    const double c = std::cos(phi);
    const double s = std::sin(phi);
    Matrix2 r;
    r << c, -s, s, c;
    return r;
}

std::vector<double> symplectic_eigenvalues(const Eigen::MatrixXd &cov)
{
    const Eigen::Index dim = cov.rows();
    detail::require(dim >= 2 && dim % 2 == 0 && cov.cols() == dim, "covariance must be 2n x 2n");

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(cov);
    if (es.info() != Eigen::Success || es.eigenvalues().minCoeff() <= 0.0)
        throw InvalidArgument("covariance matrix is not positive definite");
    const Eigen::MatrixXd root =
        es.eigenvectors() * es.eigenvalues().cwiseSqrt().asDiagonal() * es.eigenvectors().transpose();

    // root * Omega * root is antisymmetric; -(.)^2 is PSD with eigenvalues nu^2 (each twice).
    const Eigen::MatrixXd a = root * symplectic_form(dim / 2) * root;
    const Eigen::MatrixXd g = -(a * a);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> gs(0.5 * (g + g.transpose()), Eigen::EigenvaluesOnly);
    std::vector<double> nu;
    nu.reserve(static_cast<std::size_t>(dim / 2));
    for (Eigen::Index i = 0; i < dim; i += 2) {
        const double pair = 0.5 * (gs.eigenvalues()(i) + gs.eigenvalues()(i + 1));
        nu.push_back(std::sqrt(std::max(pair, 0.0)));
    }
    std::sort(nu.begin(), nu.end());
    return nu;
}

GaussianState tensor(const GaussianState &a, const GaussianState &b)
{
    const Eigen::Index na = a.mean().size();
    const Eigen::Index nb = b.mean().size();
    Eigen::VectorXd m(na + nb);
    m << a.mean(), b.mean();
    Eigen::MatrixXd v = Eigen::MatrixXd::Zero(na + nb, na + nb);
    v.topLeftCorner(na, na) = a.cov();
    v.bottomRightCorner(nb, nb) = b.cov();
    return GaussianState(std::move(m), std::move(v));
}

GaussianState vacuum_state(std::size_t n_modes)
{
    detail::require(n_modes >= 1, "vacuum_state needs at least one mode");
    const auto dim = static_cast<Eigen::Index>(2 * n_modes);
    return GaussianState(Eigen::VectorXd::Zero(dim), Eigen::MatrixXd::Identity(dim, dim));
}

GaussianState squeezed_vacuum(const SqueezeSpec &spec)
{
    detail::require(spec.eta() == 1.0,
                    "squeezed_vacuum builds the pure state; use lossy_squeezed_vacuum for eta < 1");
    Eigen::MatrixXd v = Eigen::MatrixXd::Zero(2, 2);
    v(0, 0) = std::exp(-2.0 * spec.r());
    v(1, 1) = std::exp(2.0 * spec.r());
    return rotate(GaussianState(Eigen::VectorXd::Zero(2), std::move(v)), 0, spec.theta());
}

GaussianState lossy_squeezed_vacuum(const SqueezeSpec &spec)
{
    const GaussianState pure = squeezed_vacuum(SqueezeSpec(spec.r(), spec.theta()));
    return apply_loss(pure, 0, spec.eta() * spec.eta());
}

GaussianState coherent_state(double dx, double dy)
{
    return displace(vacuum_state(1), 0, dx, dy);
}

GaussianState rotate(const GaussianState &state, std::size_t mode, double phi)
{
    require_mode(state, mode);
    return transform(state, mode_rotation(state.n_modes(), mode, phi));
}

GaussianState displace(const GaussianState &state, std::size_t mode, double dx, double dy)
{
    require_mode(state, mode);
    detail::require(std::isfinite(dx) && std::isfinite(dy), "displacement must be finite");
    Eigen::VectorXd m = state.mean();
    m(2 * mode) += dx;
    m(2 * mode + 1) += dy;
    return GaussianState(std::move(m), state.cov());
}

GaussianState apply_loss(const GaussianState &state, std::size_t mode, double eta_sq)
{
    require_mode(state, mode);
    detail::require(eta_sq >= 0.0 && eta_sq <= 1.0, "loss transmissivity eta^2 must lie in [0, 1]");

    const auto i = static_cast<Eigen::Index>(2 * mode);
    const double t = std::sqrt(eta_sq);
    const Eigen::Index dim = state.cov().rows();

    Eigen::MatrixXd m = Eigen::MatrixXd::Identity(dim, dim);
    m(i, i) = t;
    m(i + 1, i + 1) = t;
    Eigen::MatrixXd v = m * state.cov() * m;
    v.block<2, 2>(i, i) += (1.0 - eta_sq) * Matrix2::Identity();
    v = 0.5 * (v + v.transpose()).eval();
    return GaussianState(m * state.mean(), std::move(v));
}

GaussianState beam_splitter(const GaussianState &state,
                            std::size_t mode_a,
                            std::size_t mode_b,
                            double transmissivity,
                            double relative_phase)
{
    require_mode(state, mode_a);
    require_mode(state, mode_b);
    detail::require(mode_a != mode_b, "beam splitter needs two distinct modes");
    detail::require(transmissivity >= 0.0 && transmissivity <= 1.0,
                    "beam splitter transmissivity must lie in [0, 1]");

    const std::size_t n = state.n_modes();
    const double t = std::sqrt(transmissivity);
    const double s = std::sqrt(1.0 - transmissivity);
    const auto a = static_cast<Eigen::Index>(2 * mode_a);
    const auto b = static_cast<Eigen::Index>(2 * mode_b);

    Eigen::MatrixXd mix = Eigen::MatrixXd::Identity(2 * n, 2 * n);
    mix.block<2, 2>(a, a) = t * Matrix2::Identity();
    mix.block<2, 2>(a, b) = s * Matrix2::Identity();
    mix.block<2, 2>(b, a) = -s * Matrix2::Identity();
    mix.block<2, 2>(b, b) = t * Matrix2::Identity();

    return transform(state, mix * mode_rotation(n, mode_b, relative_phase));
}

double quadrature_variance(const Matrix2 &block, double vartheta)
{
    const double c = std::cos(vartheta);
    const double s = std::sin(vartheta);
    return c * c * block(0, 0) + 2.0 * s * c * block(0, 1) + s * s * block(1, 1);
}

double quadrature_variance(const GaussianState &state, std::size_t mode, double vartheta)
{
    return quadrature_variance(state.block(mode), vartheta);
}

double quadrature_mean(const GaussianState &state, std::size_t mode, double vartheta)
{
    const Vector2 m = state.mode_mean(mode);
    return std::cos(vartheta) * m(0) + std::sin(vartheta) * m(1);
}

MinimalQuadrature minimal_variance_quadrature(const Matrix2 &block)
{
    const double a = block(0, 0);
    const double b = 0.5 * (block(0, 1) + block(1, 0));
    const double d = block(1, 1);
    const double half_diff = 0.5 * (a - d);
    const double radius = std::hypot(half_diff, b);
    const double scale = std::max({std::abs(a), std::abs(d), 1.0});

    if (radius <= 1e-12 * scale)
        return {0.0, 0.5 * (a + d)};

    // Major axis at 0.5 * atan2(2b, a - d); the minor axis is perpendicular.
    const double major = 0.5 * std::atan2(2.0 * b, a - d);
    return {reduce_angle(major + 0.5 * std::numbers::pi), 0.5 * (a + d) - radius};
}

MinimalQuadrature minimal_variance_quadrature(const GaussianState &state, std::size_t mode)
{
    return minimal_variance_quadrature(state.block(mode));
}

Eigen::MatrixXd to_quarter_convention(const Eigen::MatrixXd &cov)
{
    return 0.25 * cov;
}

Eigen::MatrixXd from_quarter_convention(const Eigen::MatrixXd &cov)
{
    return 4.0 * cov;
}

} // namespace sqz
