#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "fixtures.hpp"
#include "hng/core.hpp"
#include "hng/quadrature.hpp"

using namespace hng;
using Catch::Approx;

TEST_CASE("parameter validation rejects degenerate configurations") {
    PhysicalParams pp;  // all zero
    REQUIRE_THROWS_AS(pp.validate(), std::invalid_argument);
    pp.alpha = 1e-6;
    REQUIRE_NOTHROW(pp.validate());
    pp.beta = -0.1;
    REQUIRE_THROWS_AS(pp.validate(), std::invalid_argument);

    KernelParams kp;
    kp.theta = 1.0;
    REQUIRE_THROWS_AS(kp.validate(), std::invalid_argument);
    kp.theta = 0.9;
    kp.zeta = 1.1;
    kp.sigma_e = 1.0;
    REQUIRE_NOTHROW(kp.validate(6));
    kp.rho = -0.5;  // outside (-1/(6-1), 1)
    REQUIRE_THROWS_AS(kp.validate(6), std::invalid_argument);
}

TEST_CASE("variance filter follows the recursion and clamps degenerate paths") {
    PhysicalParams pp = fixtures::physical_opt();
    const double h1 = pp.unconditional_variance();

    SECTION("zero-shock day") {
        const double ret = pp.r + (pp.lambda - 0.5) * h1;
        auto res = filter_physical_variance(pp, {ret}, h1);
        REQUIRE(res.z[0] == Approx(0.0).margin(1e-14));
        REQUIRE(res.h[1] == Approx(pp.omega + pp.beta * h1 + pp.alpha * pp.gamma * pp.gamma * h1));
    }

    SECTION("physical persistence matches the benchmark value") {
        REQUIRE(pp.persistence_p() == Approx(0.955).margin(5e-4));
    }

    SECTION("variance floor engages when parameters cannot sustain positivity") {
        PhysicalParams tiny;
        tiny.omega = 0.0;
        tiny.beta = 0.0;
        tiny.alpha = 1e-16;
        tiny.gamma = 0.0;
        tiny.lambda = 0.5;
        std::vector<double> rets(5, tiny.r);
        auto res = filter_physical_variance(tiny, rets, 1e-4);
        REQUIRE(res.clamp_count > 0);
        for (double h : res.h) REQUIRE(h >= kVarianceFloor);
    }

    SECTION("errors carry the offending day") {
        std::vector<double> rets = {0.0, std::nan(""), 0.0};
        REQUIRE_THROWS_WITH(filter_physical_variance(pp, rets, h1),
                            Catch::Matchers::ContainsSubstring("day 1"));
    }
}

TEST_CASE("risk-neutral day coefficients satisfy the mapping identities") {
    PhysicalParams pp = fixtures::physical_opt();

    SECTION("eta = 1 recovers physical-form coefficients with shifted leverage") {
        QDayParams q = q_day_params(pp, 1.0, 1.0);
        REQUIRE(q.omega_star == Approx(pp.omega));
        REQUIRE(q.beta_star == Approx(pp.beta));
        REQUIRE(q.alpha_star == Approx(pp.alpha));
        REQUIRE(q.gamma_star == Approx(pp.gamma + pp.lambda));
    }

    SECTION("constant eta matches the time-invariant identities") {
        const double eta = 1.094;
        QDayParams q = q_day_params(pp, eta, eta);
        REQUIRE(q.omega_star == Approx(pp.omega * eta));
        REQUIRE(q.beta_star == Approx(pp.beta));
        REQUIRE(q.alpha_star == Approx(pp.alpha * eta * eta));
    }

    SECTION("persistence proxy beta_tilde is close to the exact Q persistence") {
        const double eta = 1.094;
        QDayParams q = q_day_params(pp, eta, eta);
        const double exact = q.beta_star + q.alpha_star * q.gamma_star * q.gamma_star;
        REQUIRE(pp.beta_tilde() == Approx(0.962).margin(5e-4));
        REQUIRE(exact == Approx(0.963).margin(1.5e-3));
        REQUIRE(exact > pp.beta_tilde());  // the dropped (eta-1)/2 term is positive here
    }

    SECTION("non-positive eta is rejected") {
        REQUIRE_THROWS_AS(q_day_params(pp, 0.0, 1.0), std::invalid_argument);
        REQUIRE_THROWS_AS(q_day_params(pp, 1.0, -1.0), std::invalid_argument);
    }
}

TEST_CASE("kernel coefficients and the eta round trip") {
    PhysicalParams pp = fixtures::physical_opt();

    SECTION("eta = 1 gives xi = 0 and phi = -lambda") {
        KernelCoeffs k = kernel_coeffs(pp, 1.0);
        REQUIRE(k.xi == Approx(0.0).margin(1e-15));
        REQUIRE(k.phi == Approx(-pp.lambda));
    }

    SECTION("large-eta asymptote of xi") {
        KernelCoeffs k = kernel_coeffs(pp, 1e9);
        REQUIRE(k.xi == Approx(1.0 / (2.0 * pp.alpha)).epsilon(1e-6));
    }

    SECTION("benchmark value and round trip") {
        const double eta = 1.094;
        KernelCoeffs k = kernel_coeffs(pp, eta);
        REQUIRE(k.xi == Approx((0.094 / 1.094) / (2.0 * 5.740e-6)).epsilon(1e-10));
        REQUIRE(eta_from_xi(pp, k.xi) == Approx(eta).epsilon(1e-14));
    }

    SECTION("sign law: sign(xi) = sign(eta - 1)") {
        std::mt19937_64 gen(11);
        std::uniform_real_distribution<double> u(0.05, 3.0);
        for (int i = 0; i < 200; ++i) {
            const double eta = u(gen);
            const double xi = kernel_coeffs(pp, eta).xi;
            if (eta > 1.0) REQUIRE(xi > 0.0);
            if (eta < 1.0) REQUIRE(xi < 0.0);
        }
    }

    SECTION("alpha = 0 is a domain error") {
        PhysicalParams bad = pp;
        bad.alpha = 0.0;
        REQUIRE_THROWS_AS(kernel_coeffs(bad, 1.1), std::invalid_argument);
    }
}

TEST_CASE("log pricing kernel is quadratic with curvature sign equal to xi") {
    PhysicalParams pp = fixtures::physical_opt();
    const double h = 1e-4;

    REQUIRE(log_kernel_quadratic(pp, 0.0, h, 0.0) == Approx(0.0).margin(1e-16));

    const double x = 0.01;
    for (double xi : {-2000.0, 3000.0}) {
        const double up = log_kernel_quadratic(pp, xi, h, x);
        const double mid = log_kernel_quadratic(pp, xi, h, 0.0);
        const double dn = log_kernel_quadratic(pp, xi, h, -x);
        const double curvature = up - 2.0 * mid + dn;
        REQUIRE(curvature * xi > 0.0);
        // parity: even part is the quadratic, odd part the -lambda x term
        REQUIRE(up - dn == Approx(-2.0 * pp.lambda * x).epsilon(1e-12));
    }
}

TEST_CASE("news impact curve asymmetry") {
    PhysicalParams pp = fixtures::physical_opt();
    const double h_star = 1.4e-4;

    REQUIRE(news_impact_curve(pp, 1.2, 1.1, h_star, 0.0) == 0.0);

    const double z = 1.3;
    for (double eta : {0.73, 1.69}) {
        const double lhs = news_impact_curve(pp, eta, eta, h_star, -z) -
                           news_impact_curve(pp, eta, eta, h_star, z);
        REQUIRE(lhs == Approx(4.0 * pp.alpha * pp.gamma * eta * std::sqrt(h_star) * z).epsilon(1e-12));
    }

    // left arm steeper at the higher risk ratio
    const double low = news_impact_curve(pp, 0.73, 0.73, h_star, -2.0);
    const double high = news_impact_curve(pp, 1.69, 1.69, h_star, -2.0);
    REQUIRE(high > low);
}

TEST_CASE("measure change maps a physical shock to a standard normal under Q") {
    PhysicalParams pp = fixtures::physical_opt();
    const double h = 1.3e-4;
    for (double eta : {0.73, 1.0, 1.69}) {
        // E^Q[f(z_t)] = E^P[f(nu(z))]; with f = z*-moments the quadrature must
        // reproduce standard-normal moments exactly.
        const double m1 = normal_expectation([&](double y) {
            const double z = p_shock_from_q(y, eta, h, pp.lambda);
            return q_shock_from_p(z, eta, h, pp.lambda);
        });
        const double m2 = normal_expectation([&](double y) {
            const double z = p_shock_from_q(y, eta, h, pp.lambda);
            const double zs = q_shock_from_p(z, eta, h, pp.lambda);
            return zs * zs;
        });
        REQUIRE(m1 == Approx(0.0).margin(1e-12));
        REQUIRE(m2 == Approx(1.0).epsilon(1e-12));
    }
}
