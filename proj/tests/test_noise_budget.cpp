#include "sqz/constants.hpp"
#include "sqz/errors.hpp"
#include "sqz/noise_budget.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace sqz;

namespace
{
constexpr double kPi = std::numbers::pi;
constexpr double kDeg = kPi / 180.0;

// Simple Michelson: 4 kW, 1550 nm, 100 g mirrors.
InterferometerConfig tabletop(std::optional<Pendulum> pendulum = std::nullopt)
{
    return InterferometerConfig(4000.0, 1550e-9, 600.0, 0.1, std::nullopt, pendulum);
}

// High-power Michelson: 1 MW, 1550 nm, 1 kg mirrors.
InterferometerConfig megawatt()
{
    return InterferometerConfig(1e6, 1550e-9, 600.0, 1.0);
}

InterferometerConfig with_cavity(double t_fp = 0.014)
{
    return InterferometerConfig(4000.0, 1064e-9, 4000.0, 40.0, ArmCavity{t_fp});
}
} // namespace

TEST_CASE("configuration validation")
{
    CHECK_THROWS_AS(InterferometerConfig(0.0, 1e-6, 1.0, 1.0), InvalidArgument);
    CHECK_THROWS_AS(InterferometerConfig(1.0, -1e-6, 1.0, 1.0), InvalidArgument);
    CHECK_THROWS_AS(InterferometerConfig(1.0, 1e-6, 1.0, 1.0, ArmCavity{1.5}), InvalidArgument);
    CHECK_THROWS_AS(InterferometerConfig(1.0, 1e-6, 1.0, 1.0, ArmCavity{0.0}), InvalidArgument);
    CHECK_THROWS_AS(InterferometerConfig(1.0, 1e-6, 1.0, 1.0, std::nullopt, Pendulum{0.0, 10.0}), InvalidArgument);
    const auto cfg = tabletop();
    CHECK(cfg.reduced_mass() == doctest::Approx(0.05));
    CHECK(cfg.omega() == doctest::Approx(constants::two_pi * constants::c / 1550e-9));
    CHECK_THROWS_AS(cfg.gamma_fp(), InvalidArgument);
    CHECK_THROWS_AS(h_fp(cfg, 1.0), InvalidArgument);
}

TEST_CASE("shot noise")
{
    const auto cfg = tabletop();
    CHECK(shot_asd(cfg, 10.0, Normalization::displacement) == doctest::Approx(9.87e-19).epsilon(1e-3));
    // Flat in frequency without a cavity.
    CHECK(shot_asd(cfg, 1.0, Normalization::displacement) == shot_asd(cfg, 1e4, Normalization::displacement));
    const InterferometerConfig doubled(8000.0, 1550e-9, 600.0, 0.1);
    CHECK(shot_asd(doubled, 10.0, Normalization::displacement) ==
          doctest::Approx(shot_asd(cfg, 10.0, Normalization::displacement) / std::sqrt(2.0)));
    CHECK(shot_asd(cfg, 10.0, Normalization::strain) ==
          doctest::Approx(shot_asd(cfg, 10.0, Normalization::displacement) / 600.0));

    // With an arm cavity the ASD grows linearly far above the cavity pole.
    const auto cav = with_cavity();
    const double g = cav.gamma_fp();
    const double ratio = shot_asd(cav, 2000 * g, Normalization::displacement) / shot_asd(cav, 1000 * g, Normalization::displacement);
    CHECK(ratio == doctest::Approx(2.0).epsilon(1e-5));
}

TEST_CASE("cavity factor")
{
    const auto cav = with_cavity(0.014);
    const double g = cav.gamma_fp();
    CHECK(g == doctest::Approx(constants::c * 0.014 / (4 * 4000.0)));
    CHECK(h_fp(cav, 0.0) == doctest::Approx(0.014 / 4));
    CHECK(h_fp(cav, g) == doctest::Approx(std::sqrt(2.0) * 0.014 / 4));
    const InterferometerConfig tiny(4000.0, 1064e-9, 4000.0, 40.0, ArmCavity{1e-12});
    CHECK(h_fp(tiny, 100.0) == doctest::Approx(4000.0 * 100.0 / constants::c).epsilon(1e-6));
}

TEST_CASE("radiation pressure noise")
{
    const auto cfg = tabletop(Pendulum{constants::two_pi * 1.0, 1e7});
    const double wm = constants::two_pi * 1.0;
    for (double w = 10 * wm; w < 1e4; w *= 1.3)
    {
        const double free = rpn_asd(cfg, w, Normalization::displacement, Susceptibility::free_mass);
        const double pend = rpn_asd(cfg, w, Normalization::displacement, Susceptibility::pendulum);
        CHECK(std::abs(free - pend) <= 0.01 * pend + 1e-12);
    }

    const auto a = tabletop();
    const InterferometerConfig doubled(8000.0, 1550e-9, 600.0, 0.1);
    CHECK(rpn_asd(doubled, 50.0, Normalization::displacement, Susceptibility::free_mass) ==
          doctest::Approx(std::sqrt(2.0) * rpn_asd(a, 50.0, Normalization::displacement, Susceptibility::free_mass)));
    CHECK(rpn_asd(a, 100.0, Normalization::displacement, Susceptibility::free_mass) ==
          doctest::Approx(rpn_asd(a, 50.0, Normalization::displacement, Susceptibility::free_mass) / 4));

    CHECK_THROWS_AS(rpn_asd(a, 0.0, Normalization::displacement, Susceptibility::free_mass), DomainError);
    CHECK_THROWS_AS(rpn_asd(a, 10.0, Normalization::displacement, Susceptibility::pendulum), InvalidArgument);
    // The pendulum form stays finite at DC.
    CHECK(std::isfinite(rpn_asd(cfg, 0.0, Normalization::displacement, Susceptibility::pendulum)));
}

TEST_CASE("standard quantum limit and coupling")
{
    const auto cfg = tabletop();
    const double wsql = omega_sql(cfg);
    CHECK(wsql == doctest::Approx(46.5).epsilon(2e-3));
    CHECK(wsql / constants::two_pi == doctest::Approx(7.4).epsilon(1e-2));
    CHECK(kappa(cfg, wsql) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(kappa(cfg, 2 * wsql) == doctest::Approx(0.25).epsilon(1e-14));
    CHECK(sql_asd(cfg, 46.5, SqlVariant::free_mass) == doctest::Approx(1.40e-18).epsilon(3e-3));
    CHECK(sql_asd(cfg, 93.0, SqlVariant::free_mass) == doctest::Approx(0.5 * sql_asd(cfg, 46.5, SqlVariant::free_mass)));

    CHECK_THROWS_AS(sql_asd(cfg, 0.0, SqlVariant::free_mass), DomainError);
    CHECK_THROWS_AS(kappa(cfg, 0.0), DomainError);
    CHECK_THROWS_AS(total_quantum_noise_asd(cfg, 0.0, NoInjection{}), DomainError);
    CHECK_THROWS_AS(sql_asd(cfg, -1.0, SqlVariant::free_mass), InvalidArgument);

    // Cavity SQL equals the free-mass SQL where H_FP = 1.
    const InterferometerConfig unit(1.0, 1e-6, 1.0, 1.0, ArmCavity{1.0});
    const double w1 = constants::c * std::sqrt(1.0 - 1.0 / 16.0);
    CHECK(h_fp(unit, w1) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(sql_asd(unit, w1, SqlVariant::with_arm_cavities) ==
          doctest::Approx(sql_asd(unit, w1, SqlVariant::free_mass)).epsilon(1e-12));
}

TEST_CASE("SQL floor and crossing identity")
{
    const auto cfg = tabletop();
    const double wsql = omega_sql(cfg);
    for (int i = 0; i < 10000; ++i)
    {
        const double f = std::pow(10.0, -1.0 + 6.0 * i / 9999.0);
        const double w = constants::two_pi * f;
        CHECK(total_quantum_noise_asd(cfg, w, NoInjection{}) >= sql_asd(cfg, w, SqlVariant::free_mass) * (1 - 1e-15));
    }
    CHECK(total_quantum_noise_asd(cfg, wsql, NoInjection{}) ==
          doctest::Approx(sql_asd(cfg, wsql, SqlVariant::free_mass)).epsilon(1e-12));
    CHECK(shot_asd(cfg, wsql, Normalization::displacement) ==
          doctest::Approx(rpn_asd(cfg, wsql, Normalization::displacement, Susceptibility::free_mass)).epsilon(1e-12));
    CHECK(shot_asd(cfg, wsql, Normalization::displacement) ==
          doctest::Approx(sql_asd(cfg, wsql, SqlVariant::free_mass) / std::sqrt(2.0)).epsilon(1e-12));
}

TEST_CASE("SQL-factored total equals the sum of squares without cavities")
{
    const auto cfg = tabletop();
    for (double w = 1.0; w < 1e5; w *= 1.7)
        CHECK(total_quantum_noise_asd(cfg, w, NoInjection{}) ==
              doctest::Approx(shot_rpn_sum_asd(cfg, w, Normalization::displacement, Susceptibility::free_mass)).epsilon(1e-12));
    CHECK(total_quantum_noise_asd(cfg, 40.0, NoInjection{}, Normalization::strain) ==
          doctest::Approx(total_quantum_noise_asd(cfg, 40.0, NoInjection{}) / 600.0));
}

TEST_CASE("squeezed injection")
{
    const auto cfg = megawatt();
    const double r = std::log(10.0) / 2;
    for (double w = 0.1; w < 1e5; w *= 1.5)
    {
        const double none = total_quantum_noise_asd(cfg, w, NoInjection{});
        const double opt = total_quantum_noise_asd(cfg, w, OptimalFrequencyDependent{r});
        CHECK(opt * opt / (none * none) == doctest::Approx(0.1).epsilon(1e-9));
    }

    // Amplitude squeezing: RPN down by e^{-r}, shot up by e^{r}.
    const double w = 3.0 * omega_sql(cfg);
    const double shot = shot_asd(cfg, w, Normalization::displacement);
    const double rpn = rpn_asd(cfg, w, Normalization::displacement, Susceptibility::free_mass);
    const double amp = total_quantum_noise_asd(cfg, w, FixedSqueeze{SqueezeSpec(r, 0.0)});
    CHECK(amp * amp == doctest::Approx(shot * shot * std::exp(2 * r) + rpn * rpn * std::exp(-2 * r)).epsilon(1e-12));

    // Fixed 45 degrees: full squeeze factor at the SQL frequency, worse than nothing far away.
    const double wsql = omega_sql(cfg);
    const FixedSqueeze fixed45{SqueezeSpec(r, 45 * kDeg)};
    const double at_sql = total_quantum_noise_asd(cfg, wsql, fixed45);
    CHECK(at_sql * at_sql == doctest::Approx(0.1 * std::pow(sql_asd(cfg, wsql, SqlVariant::free_mass), 2)).epsilon(1e-9));
    for (double k = 10; k < 1e4; k *= 1.2)
        CHECK(total_quantum_noise_asd(cfg, k * wsql, fixed45) > total_quantum_noise_asd(cfg, k * wsql, NoInjection{}));
}

TEST_CASE("ponderomotive transform")
{
    Matrix2 k1;
    k1 << 1, -1, -1, 2;
    CHECK((ponderomotive_transform(Matrix2::Identity(), 1.0) - k1).cwiseAbs().maxCoeff() < 1e-12);

    Matrix2 in, k2;
    in << 5.05, 4.95, 4.95, 5.05;
    k2 << 5.05, -0.1, -0.1, 0.2;
    CHECK((ponderomotive_transform(in, 1.0) - k2).cwiseAbs().maxCoeff() < 1e-12);
    CHECK(ponderomotive_transform(in, 1.0).determinant() == doctest::Approx(1.0).epsilon(1e-9));
    CHECK((ponderomotive_transform(in, 0.0) - in).cwiseAbs().maxCoeff() == 0.0);
    for (double k = 0.0; k < 10.0; k += 0.37)
        CHECK(ponderomotive_transform(in, k).determinant() == doctest::Approx(in.determinant()).epsilon(1e-9));
    CHECK_THROWS_AS(ponderomotive_transform(in, -1.0), InvalidArgument);
}

TEST_CASE("optimal input angle")
{
    CHECK(optimal_input_angle(1.0) == doctest::Approx(45 * kDeg));
    CHECK(optimal_input_angle(0.0) == doctest::Approx(90 * kDeg));
    CHECK(optimal_input_angle(1e12) == doctest::Approx(0.0).epsilon(1e-9));
    CHECK(optimal_input_angle(INFINITY) == 0.0);
    CHECK_THROWS_AS(optimal_input_angle(-0.5), InvalidArgument);

    // Brute-force scan oracle at k = 2.
    const double r = 1.0;
    const double k = 2.0;
    double best = 1e300;
    for (int i = 0; i < 10000; ++i)
    {
        const double th = kPi * i / 10000.0;
        best = std::min(best, ponderomotive_transform(squeezed_vacuum(SqueezeSpec(r, th)).block(0), k)(1, 1));
    }
    const double at_opt = ponderomotive_transform(squeezed_vacuum(SqueezeSpec(r, optimal_input_angle(k))).block(0), k)(1, 1);
    CHECK(at_opt == doctest::Approx(5.0 * std::exp(-2 * r)).epsilon(1e-12));
    CHECK(at_opt <= best + 1e-12);
}

TEST_CASE("ponderomotive squeezing")
{
    const auto one = ponderomotive_squeezing_db(1.0);
    CHECK(one.db == doctest::Approx(4.18).epsilon(1e-3));
    CHECK(std::abs(one.angle / kDeg) == doctest::Approx(58.28).epsilon(1e-3));
    CHECK(ponderomotive_squeezing_db(0.0).db == doctest::Approx(0.0));
    CHECK(ponderomotive_squeezing_db(2.0).db == doctest::Approx(-10 * std::log10(3 - std::sqrt(8.0))).epsilon(1e-12));
    CHECK(ponderomotive_squeezing_db(2.0).db == doctest::Approx(7.66).epsilon(1e-3));
    // Stronger coupling squeezes more.
    CHECK(ponderomotive_squeezing_db(4.0).db > ponderomotive_squeezing_db(2.0).db);
}

TEST_CASE("homodyne readout angle")
{
    const Matrix2 k1 = ponderomotive_transform(Matrix2::Identity(), 1.0);
    Matrix2 in;
    in << 5.05, 4.95, 4.95, 5.05;
    const Matrix2 k2 = ponderomotive_transform(in, 1.0);
    CHECK(readout_variance_vs_lo_angle(k1, 90 * kDeg) == doctest::Approx(2.0));
    CHECK(readout_variance_vs_lo_angle(k2, 90 * kDeg) == doctest::Approx(0.2));
    CHECK(readout_signal_transfer(90 * kDeg) == doctest::Approx(1.0));

    double best = -1.0, best_deg = 0.0;
    for (double deg = 1.0; deg < 180.0; deg += 1.0)
    {
        const double snr = readout_snr(k1, deg * kDeg);
        if (snr > best)
        {
            best = snr;
            best_deg = deg;
        }
    }
    CHECK(best_deg == doctest::Approx(45.0).epsilon(1.0 / 45.0));
}

TEST_CASE("filter cavity rotation")
{
    FilterCavitySpec fc{{{15.15e6, 0.735e6}}};
    CHECK(std::abs(filter_cavity_rotation(fc, constants::two_pi * 14.1e6) / kDeg) == doctest::Approx(40.0).epsilon(0.25));
    // Far off resonance on both sidebands the ellipse is left alone.
    FilterCavitySpec narrow{{{15.15e6, 1e3}}};
    CHECK(std::abs(filter_cavity_rotation(narrow, constants::two_pi * 1e3)) < 1e-3);
    CHECK(std::abs(filter_cavity_rotation(fc, constants::two_pi * 1e12)) < 1e-3);
    // Single-sideband limit of the model: one sideband on resonance, the
    // other far detuned in the narrow-linewidth limit.
    FilterCavitySpec sharp{{{1e6, 1e-3}}};
    CHECK(std::abs(filter_cavity_rotation(sharp, constants::two_pi * 1e6)) / kDeg == doctest::Approx(90.0).epsilon(1e-6));
    // Cavities chain additively.
    FilterCavitySpec two{{{15.15e6, 0.735e6}, {15.15e6, 0.735e6}}};
    const double single = filter_cavity_rotation(fc, constants::two_pi * 14.1e6);
    CHECK(std::remainder(filter_cavity_rotation(two, constants::two_pi * 14.1e6) - 2 * single, kPi) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK_THROWS_AS(filter_cavity_rotation(FilterCavitySpec{{{1e6, 0.0}}}, 1.0), InvalidArgument);
    CHECK(filter_cavity_rotation(FilterCavitySpec{}, 1.0) == 0.0);
}

TEST_CASE("intra-cavity squeeze limit")
{
    CHECK(intracavity_squeeze_limit(1.0) == doctest::Approx(6.02).epsilon(1e-3));
    CHECK(intracavity_squeeze_limit(0.5) == doctest::Approx(9.54).epsilon(1e-3));
    CHECK_THROWS_AS(intracavity_squeeze_limit(0.0), InvalidArgument);
    CHECK_THROWS_AS(intracavity_squeeze_limit(1.1), InvalidArgument);
    CHECK_THROWS_AS(intracavity_squeeze_limit(1e-200), NumericRangeError);
}

TEST_CASE("OPO squeezing spectrum")
{
    const auto vac = opo_squeezing_spectrum(0.0, 1e5, 0.9, 0.0);
    CHECK(vac.squeezed == 1.0);
    CHECK(vac.antisqueezed == 1.0);
    CHECK(opo_squeezing_spectrum(0.999999, 1e5, 1.0, 0.0).squeezed < 1e-12);
    CHECK_THROWS_AS(opo_squeezing_spectrum(1.0, 1e5, 1.0, 0.0), DomainError);
    CHECK_THROWS_AS(opo_squeezing_spectrum(1.5, 1e5, 1.0, 0.0), DomainError);
    CHECK_THROWS_AS(opo_squeezing_spectrum(0.5, 0.0, 1.0, 0.0), InvalidArgument);
    CHECK_THROWS_AS(opo_squeezing_spectrum(0.5, 1.0, 1.2, 0.0), InvalidArgument);

    for (double x = 0.0; x < 1.0; x += 0.07)
        for (double eta = 0.0; eta <= 1.0; eta += 0.125)
            for (double w : {0.0, 0.3, 1.0, 3.0, 30.0})
            {
                const auto v = opo_squeezing_spectrum(x, 1.0, eta, w);
                CHECK(v.squeezed * v.antisqueezed >= 1.0 - 1e-12);
                if (eta == 1.0)
                    CHECK(v.squeezed * v.antisqueezed == doctest::Approx(1.0).epsilon(1e-12));
            }
    // Squeezing fades outside the cavity linewidth.
    CHECK(opo_squeezing_spectrum(0.5, 1.0, 1.0, 100.0).squeezed > opo_squeezing_spectrum(0.5, 1.0, 1.0, 0.0).squeezed);
}

TEST_CASE("noise budget table")
{
    const auto cfg = megawatt();
    const auto rows = noise_budget_table(cfg, {1.0, 10.0, 100.0}, OptimalFrequencyDependent{std::log(10.0) / 2},
                                         Normalization::displacement);
    REQUIRE(rows.size() == 3);
    for (const auto &row : rows)
    {
        CHECK(row.total_injected == doctest::Approx(row.total / std::sqrt(10.0)).epsilon(1e-9));
        CHECK(row.total >= row.sql);
    }
    CHECK_THROWS_AS(noise_budget_table(cfg, {}, NoInjection{}, Normalization::displacement), InvalidArgument);
    CHECK_THROWS_AS(noise_budget_table(cfg, {0.0}, NoInjection{}, Normalization::displacement), InvalidArgument);
    CHECK(units_for(Normalization::strain) == SpectrumUnits::strain_per_rt_hz);
}
