#include "sqz/entanglement.hpp"

#include "sqz/errors.hpp"

#include <algorithm>

namespace sqz
{
namespace
{
Matrix4 validated(const Matrix4 &cov)
{
    // Construction of the state performs the symmetry and uncertainty checks.
    const GaussianState s(Eigen::VectorXd::Zero(4), Eigen::MatrixXd(cov));
    return s.cov();
}
} // namespace

BipartiteCovariance::BipartiteCovariance(const Matrix4 &cov)
    : cov_(validated(cov))
{
}

BipartiteCovariance::BipartiteCovariance(const GaussianState &two_mode)
{
    detail::require(two_mode.n_modes() == 2, "bipartite covariance needs a two-mode state");
    cov_ = two_mode.cov();
}

GaussianState BipartiteCovariance::state() const
{
    return GaussianState(Eigen::VectorXd::Zero(4), Eigen::MatrixXd(cov_));
}

BipartiteCovariance BipartiteCovariance::swapped() const
{
    Eigen::PermutationMatrix<4> p;
    p.indices() << 2, 3, 0, 1;
    return BipartiteCovariance(Matrix4(p * cov_ * p.transpose()));
}

double duan_value(const BipartiteCovariance &bp)
{
    const Matrix4 &v = bp.cov();
    const double x_minus = v(0, 0) + v(2, 2) - 2.0 * v(0, 2);
    const double x_plus = v(0, 0) + v(2, 2) + 2.0 * v(0, 2);
    const double y_minus = v(1, 1) + v(3, 3) - 2.0 * v(1, 3);
    const double y_plus = v(1, 1) + v(3, 3) + 2.0 * v(1, 3);
    // Joint vacuum variance is 2 in these units.
    return 0.5 * std::min(x_minus + y_plus, x_plus + y_minus);
}

double reid_epr(const BipartiteCovariance &bp)
{
    const Matrix4 &v = bp.cov();
    if (v(0, 0) <= 0.0 || v(1, 1) <= 0.0)
        throw DomainError("Reid parameter needs positive conditioning variances on party A");
    const double cond_x = v(2, 2) - v(0, 2) * v(0, 2) / v(0, 0);
    const double cond_y = v(3, 3) - v(1, 3) * v(1, 3) / v(1, 1);
    return cond_x * cond_y;
}

BipartiteCovariance assemble_bipartite(const GaussianState &state_a,
                                       const GaussianState &state_b,
                                       double relative_phase)
{
    detail::require(state_a.n_modes() == 1 && state_b.n_modes() == 1,
                    "assemble_bipartite expects two single-mode states");
    return BipartiteCovariance(beam_splitter(tensor(state_a, state_b), 0, 1, 0.5, relative_phase));
}

} // namespace sqz
