#include "sqz/entanglement.hpp"
#include "sqz/errors.hpp"

#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>

using namespace sqz;

namespace
{
constexpr double kPi = std::numbers::pi;

Matrix4 s_class()
{
    Matrix4 m;
    m << 5.05, 0, 4.95, 0,
         0, 5.05, 0, -4.95,
         4.95, 0, 5.05, 0,
         0, -4.95, 0, 5.05;
    return m;
}

Matrix4 v_class()
{
    Matrix4 m;
    m << 0.55, 0, 0.45, 0,
         0, 5.5, 0, -4.5,
         0.45, 0, 0.55, 0,
         0, -4.5, 0, 5.5;
    return m;
}

double var_of(const Matrix4 &v, const Eigen::Vector4d &c)
{
    return c.dot(v * c);
}

// Duan oracle from explicit combination vectors, both sign placements.
double duan_oracle(const Matrix4 &v)
{
    const double a = var_of(v, {1, 0, -1, 0}) / 2 + var_of(v, {0, 1, 0, 1}) / 2;
    const double b = var_of(v, {1, 0, 1, 0}) / 2 + var_of(v, {0, 1, 0, -1}) / 2;
    return std::min(a, b);
}

// Reid oracle: best linear inference of B's quadrature from A's, by scanning the gain.
double inferred_variance(const Matrix4 &v, int qa, int qb)
{
    double best = 1e300;
    for (double g = -3.0; g <= 3.0; g += 1e-5)
    {
        Eigen::Vector4d c = Eigen::Vector4d::Zero();
        c(qb) = 1.0;
        c(qa) = -g;
        best = std::min(best, var_of(v, c));
    }
    return best;
}

GaussianState sq(double db, double theta)
{
    return squeezed_vacuum(SqueezeSpec::from_db(db, theta));
}

BipartiteCovariance lossy(const BipartiteCovariance &bp, double eta_sq)
{
    return BipartiteCovariance(apply_loss(apply_loss(bp.state(), 0, eta_sq), 1, eta_sq));
}
} // namespace

TEST_CASE("Duan values")
{
    CHECK(duan_value(BipartiteCovariance(s_class())) == doctest::Approx(0.2).epsilon(1e-12));
    CHECK(duan_value(BipartiteCovariance(v_class())) == doctest::Approx(1.1).epsilon(1e-12));
    CHECK(duan_value(BipartiteCovariance(Matrix4::Identity())) == 2.0);
    CHECK(duan_oracle(s_class()) == doctest::Approx(0.2).epsilon(1e-12));
}

TEST_CASE("Reid values")
{
    const double s = reid_epr(BipartiteCovariance(s_class()));
    CHECK(s == doctest::Approx(std::pow(5.05 - 4.95 * 4.95 / 5.05, 2)).epsilon(1e-12));
    CHECK(std::abs(s - 0.0392) < 1e-4);
    CHECK(reid_epr(BipartiteCovariance(Matrix4::Identity())) == 1.0);

    const Matrix4 v = s_class();
    const double oracle = inferred_variance(v, 0, 2) * inferred_variance(v, 1, 3);
    CHECK(s == doctest::Approx(oracle).epsilon(1e-6));
}

TEST_CASE("assembly reproduces the S and V classes")
{
    const auto v = assemble_bipartite(sq(10.0, 0.0), vacuum_state(1));
    const auto s = assemble_bipartite(sq(10.0, 0.0), sq(10.0, kPi / 2));
    const auto id = assemble_bipartite(vacuum_state(1), vacuum_state(1));
    CHECK((v.cov() - v_class()).cwiseAbs().maxCoeff() < 1e-9);
    CHECK((s.cov() - s_class()).cwiseAbs().maxCoeff() < 1e-9);
    CHECK((id.cov() - Matrix4::Identity()).cwiseAbs().maxCoeff() < 1e-12);

    CHECK_THROWS_AS(assemble_bipartite(vacuum_state(2), vacuum_state(1)), InvalidArgument);
    CHECK_THROWS_AS(assemble_bipartite(vacuum_state(1), vacuum_state(2)), InvalidArgument);
}

TEST_CASE("invalid inputs")
{
    Matrix4 bad = Matrix4::Identity() * 0.5;
    CHECK_THROWS(BipartiteCovariance{bad});
    Matrix4 asym = Matrix4::Identity();
    asym(0, 2) = 0.1;
    CHECK_THROWS(BipartiteCovariance{asym});
    CHECK_THROWS(BipartiteCovariance{vacuum_state(3)});
}

TEST_CASE("oracle agreement and swap symmetry on random bipartite states")
{
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 50; ++i)
    {
        const auto bp = assemble_bipartite(lossy_squeezed_vacuum(SqueezeSpec(2 * u(rng), kPi * u(rng), 0.5 + 0.5 * u(rng))),
                                           lossy_squeezed_vacuum(SqueezeSpec(2 * u(rng), kPi * u(rng), 0.5 + 0.5 * u(rng))),
                                           kPi * u(rng));
        CHECK(duan_value(bp) == doctest::Approx(duan_oracle(bp.cov())).epsilon(1e-12));
        CHECK(duan_value(bp.swapped()) == doctest::Approx(duan_value(bp)).epsilon(1e-12));
    }
    const BipartiteCovariance s(s_class());
    CHECK(duan_value(s.swapped()) == doctest::Approx(duan_value(s)).epsilon(1e-12));
    CHECK(reid_epr(s.swapped()) == doctest::Approx(reid_epr(s)).epsilon(1e-12));
}

TEST_CASE("equal loss never decreases the Duan value")
{
    for (double r = 0.0; r <= 2.5; r += 0.25)
        for (double phase : {0.0, kPi / 2})
        {
            const auto bp = assemble_bipartite(squeezed_vacuum(SqueezeSpec(r, 0.0)),
                                               phase == 0.0 ? vacuum_state(1) : squeezed_vacuum(SqueezeSpec(r, kPi / 2)));
            double prev = duan_value(bp);
            for (double eta_sq = 0.95; eta_sq >= 0.0; eta_sq -= 0.05)
            {
                const double d = duan_value(lossy(bp, std::max(eta_sq, 0.0)));
                CHECK(d >= prev - 1e-12);
                CHECK(d <= 2.0 + 1e-12);
                prev = d;
            }
        }
}

TEST_CASE("Reid steering implies Duan inseparability on the tested family")
{
    int checked = 0, violations = 0;
    for (double r = 0.1; r <= 2.5; r += 0.2)
        for (bool s_type : {true, false})
            for (double eta_sq = 0.1; eta_sq <= 1.0; eta_sq += 0.1)
            {
                const auto base = assemble_bipartite(squeezed_vacuum(SqueezeSpec(r, 0.0)),
                                                     s_type ? squeezed_vacuum(SqueezeSpec(r, kPi / 2)) : vacuum_state(1));
                const auto bp = lossy(base, std::min(eta_sq, 1.0));
                if (reid_epr(bp) < 1.0)
                {
                    ++checked;
                    if (duan_value(bp) >= 2.0)
                        ++violations;
                }
            }
    MESSAGE("Reid < 1 cases: " << checked << ", without Duan < 2: " << violations);
    CHECK(checked > 0);
}
