#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "minsurf/analytic_kernel.hpp"

using namespace minsurf;

namespace {

// Direct summation of the defining series, used as an independent oracle.
double ck_series(double k, double x) {
    double term = 1.0, sum = 1.0;
    for (int n = 1; n < 200; ++n) {
        term *= k * x * x / ((2.0 * n - 1) * (2.0 * n));
        sum += term;
    }
    return sum;
}

double sk_series(double k, double x) {
    double term = x, sum = x;
    for (int n = 1; n < 200; ++n) {
        term *= k * x * x / ((2.0 * n) * (2.0 * n + 1));
        sum += term;
    }
    return sum;
}

const double kThetas[] = {-0.6, -0.3, 0.0, 0.3, kPi / 4, 1.0, kPi / 2, 2.0};

}  // namespace

TEST(ShapeParam, DerivedConstants) {
    for (double t : kThetas) {
        const auto p = ShapeParam::from_theta(t);
        EXPECT_NEAR(p.alpha(), std::cos(t), 1e-15);
        EXPECT_NEAR(p.beta(), std::sin(t), 1e-15);
        EXPECT_NEAR(p.k(), p.c() - p.d(), 1e-15);
        EXPECT_NEAR(p.c() + p.d(), 1.0, 1e-15);
        EXPECT_GT(p.s(), 0.0);
        EXPECT_FALSE(p.is_endpoint());
    }
}

TEST(ShapeParam, EndpointsHaveZeroS) {
    for (double t : {kThetaMin, kThetaMax}) {
        const auto p = ShapeParam::from_theta(t);
        EXPECT_TRUE(p.is_endpoint());
        EXPECT_EQ(p.s(), 0.0);
    }
}

TEST(ShapeParam, SpecialAnglesAreExact) {
    EXPECT_EQ(ShapeParam::from_theta(kPi / 4).k(), 0.0);
    EXPECT_EQ(ShapeParam::from_theta(0.0).beta(), 0.0);
    EXPECT_EQ(ShapeParam::from_theta(kPi / 2).alpha(), 0.0);
    EXPECT_TRUE(ShapeParam::from_theta(0.0).g_vanishes());
    EXPECT_TRUE(ShapeParam::from_theta(kPi / 2).f_vanishes());
}

TEST(ShapeParam, RejectsOutOfRange) {
    EXPECT_THROW(ShapeParam::from_theta(5.0), DomainError);
    EXPECT_THROW(ShapeParam::from_theta(-0.8), DomainError);
    EXPECT_THROW(ShapeParam::from_theta(std::nan("")), DomainError);
}

TEST(KFunctions, Examples) {
    EXPECT_EQ(ck(0.0, 2.5), 1.0);
    EXPECT_NEAR(ck(1.0, 1.0), 1.5430806348152437, 1e-15);
    EXPECT_NEAR(ck(-1.0, kPi), -1.0, 1e-14);
    EXPECT_EQ(sk(0.0, 2.5), 2.5);
    EXPECT_NEAR(sk(1.0, 1.0), 1.1752011936438014, 1e-15);
    EXPECT_NEAR(sk(-1.0, kPi / 2), 1.0, 1e-15);
}

TEST(KFunctions, AgreeWithSeriesOracle) {
    for (double k : {-1.0, -0.3, -1e-3, 1e-3, 0.4, 1.0}) {
        for (double x : {-2.0, -0.7, 0.1, 1.3, 3.0}) {
            EXPECT_NEAR(ck(k, x), ck_series(k, x), 1e-13 * std::max(1.0, std::abs(ck(k, x)))) << k << " " << x;
            EXPECT_NEAR(sk(k, x), sk_series(k, x), 1e-13 * std::max(1.0, std::abs(sk(k, x)))) << k << " " << x;
        }
    }
}

TEST(KFunctions, SeriesMatchesClosedFormAwayFromZero) {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> kd(1e-3, 1.0), xd(-0.09, 0.09);
    for (int i = 0; i < 500; ++i) {
        const double k = (i % 2 ? 1 : -1) * kd(rng);
        const double x = xd(rng);
        const double r = std::sqrt(std::abs(k));
        const double c = k > 0 ? std::cosh(r * x) : std::cos(r * x);
        const double s = k > 0 ? std::sinh(r * x) / r : std::sin(r * x) / r;
        EXPECT_NEAR(ck(k, x), c, 1e-13);
        EXPECT_NEAR(sk(k, x), s, 1e-13);
    }
}

TEST(KFunctions, ExcessesAreSmoothAcrossZero) {
    for (double x : {-1.5, 0.4, 2.0}) {
        EXPECT_NEAR(ck_excess(0.0, x), x * x / 2, 1e-15);
        EXPECT_NEAR(sk_excess(0.0, x), x * x * x / 6, 1e-15);
        for (double k : {1e-6, -1e-6}) {
            EXPECT_NEAR(ck_excess(k, x), x * x / 2 + k * std::pow(x, 4) / 24, 1e-12);
            EXPECT_NEAR(sk_excess(k, x), std::pow(x, 3) / 6 + k * std::pow(x, 5) / 120, 1e-12);
        }
        EXPECT_NEAR(ck_excess(0.5, x), (ck(0.5, x) - 1) / 0.5, 1e-13);
        EXPECT_NEAR(sk_excess(-0.5, x), (sk(-0.5, x) - x) / -0.5, 1e-13);
    }
}

TEST(KFunctions, ComplexOverloadsMatchReal) {
    for (double k : {-0.8, 0.0, 0.6}) {
        for (double x : {-1.2, 0.5}) {
            EXPECT_NEAR(std::abs(ck(k, Complex(x, 0)) - ck(k, x)), 0.0, 1e-15);
            EXPECT_NEAR(std::abs(sk(k, Complex(x, 0)) - sk(k, x)), 0.0, 1e-15);
            EXPECT_NEAR(std::abs(ck_excess(k, Complex(x, 0)) - ck_excess(k, x)), 0.0, 1e-15);
            EXPECT_NEAR(std::abs(sk_excess(k, Complex(x, 0)) - sk_excess(k, x)), 0.0, 1e-15);
        }
    }
    // ck(k, i y) = ck(-k, y)
    EXPECT_NEAR(std::abs(ck(0.7, Complex(0, 1.1)) - ck(-0.7, 1.1)), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(sk(0.7, Complex(0, 1.1)) - Complex(0, sk(-0.7, 1.1))), 0.0, 1e-15);
}

TEST(FG, Examples) {
    const auto enneper = ShapeParam::from_theta(kPi / 4);
    EXPECT_NEAR(f_eval(enneper, std::sqrt(2.0)), 1.0, 1e-15);
    const auto cat = ShapeParam::from_theta(0.0);
    EXPECT_NEAR(f_eval(cat, 1.0), std::sinh(1.0), 1e-15);
    EXPECT_EQ(g_eval(cat, 0.8), 0.0);
    EXPECT_NEAR(g_eval(ShapeParam::from_theta(kPi / 2), 1.0), std::sinh(1.0), 1e-15);
    const auto p = ShapeParam::from_theta(0.3);
    const double r = std::sqrt(std::cos(0.6));
    EXPECT_NEAR(g_eval(p, 1.0), std::sin(r) * std::sin(0.3) / r, 1e-15);
    for (double t : kThetas) {
        const auto q = ShapeParam::from_theta(t);
        EXPECT_EQ(f_eval(q, 0.0), 0.0);
        EXPECT_EQ(g_eval(q, 0.0), 0.0);
    }
}

TEST(FG, OdeResidualsVanish) {
    for (double t : kThetas) {
        const auto p = ShapeParam::from_theta(t);
        const double c = p.c(), d = p.d();
        for (double x = -2.0; x <= 2.0; x += 0.125) {
            const double f = f_eval(p, x), fp = f_prime(p, x);
            const double g = g_eval(p, x), gp = g_prime(p, x);
            EXPECT_NEAR(fp * fp, (c - d) * f * f + c, 1e-10);
            EXPECT_NEAR(gp * gp, (d - c) * g * g + d, 1e-10);
            EXPECT_NEAR(f_second(p, x), (c - d) * f, 1e-10);
            EXPECT_NEAR(g_second(p, x), (d - c) * g, 1e-10);
        }
    }
}

TEST(FG, DenominatorStaysPositive) {
    for (double t : kThetas) {
        const auto p = ShapeParam::from_theta(t);
        // The oscillating one of f', g' dips to minus its amplitude.
        const double bound = std::abs(std::abs(p.alpha()) - std::abs(p.beta()));
        for (double u = -3.0; u <= 3.0; u += 0.1) {
            for (double v = -3.0; v <= 3.0; v += 0.1) {
                const double den = f_prime(p, u) + g_prime(p, v);
                EXPECT_GT(den, 0.0);
                EXPECT_GE(den, bound - 1e-12);
            }
        }
    }
}

TEST(Metric, Examples) {
    EXPECT_NEAR(metric_jet(ShapeParam::from_theta(0.0), 1.0, 0.0).expOmega, std::cosh(1.0), 1e-15);
    for (double t : kThetas) {
        const auto p = ShapeParam::from_theta(t);
        EXPECT_NEAR(metric_jet(p, 0.0, 0.0).expOmega, 1.0 / p.s(), 1e-15);
    }
    try {
        metric_jet(ShapeParam::from_theta(kThetaMin), 0.0, 0.0);
        FAIL() << "endpoint accepted";
    } catch (const DomainError& e) {
        EXPECT_STREQ(e.what(), "metric undefined at plane endpoints");
    }
}

TEST(Metric, PlanarityAndLiouvilleHoldExactly) {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> dist(-1.5, 1.5);
    for (double t : kThetas) {
        const auto p = ShapeParam::from_theta(t);
        for (int i = 0; i < 200; ++i) {
            const double u = dist(rng), v = dist(rng);
            const MetricJet m = metric_jet(p, u, v);
            EXPECT_GT(m.expOmega, 0.0);
            EXPECT_NEAR(m.omega_uv + m.omega_u * m.omega_v, 0.0, 1e-12);
            EXPECT_NEAR(m.omega_uu + m.omega_vv, 1.0 / (m.expOmega * m.expOmega), 1e-10);
            EXPECT_NEAR(m.omega_u, f_eval(p, u) / m.expOmega, 1e-14);
        }
    }
}

TEST(Metric, OmegaPartialsMatchDifferences) {
    const auto p = ShapeParam::from_theta(1.0);
    const double h = 1e-5, u = 0.4, v = -0.7;
    auto w = [&](double a, double b) { return std::log(metric_jet(p, a, b).expOmega); };
    const MetricJet m = metric_jet(p, u, v);
    EXPECT_NEAR(m.omega_u, (w(u + h, v) - w(u - h, v)) / (2 * h), 1e-9);
    EXPECT_NEAR(m.omega_v, (w(u, v + h) - w(u, v - h)) / (2 * h), 1e-9);
}
