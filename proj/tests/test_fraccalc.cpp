#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "confbvp/fraccalc.hpp"
#include "confbvp/fracpoly.hpp"
#include "confbvp/numerics.hpp"
#include "testutil.hpp"

#include <cmath>
#include <random>

using namespace confbvp;

TEST_CASE("conformable derivative of t^a is the constant a") {
    for (double a : {0.3, 0.5, 0.9, 1.0}) {
        ScalarFn f = [a](double t) { return std::pow(t, a); };
        CHECK(conf_diff_closed(f, Order{a}, 0.5) == doctest::Approx(a).epsilon(1e-9));
    }
}

TEST_CASE("conformable derivative of a constant vanishes") {
    ScalarFn f = [](double) { return 3.25; };
    CHECK(conf_diff_closed(f, Order{0.5}, 0.3) == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("order one reduces to the classical derivative") {
    ScalarFn f = [](double t) { return t * t; };
    CHECK(conf_diff_closed(f, Order{1.0}, 0.4) == doctest::Approx(0.8).epsilon(1e-10));
}

TEST_CASE("closed form with supplied derivative") {
    ScalarFn f = [](double t) { return std::sin(t); };
    ScalarFn fp = [](double t) { return std::cos(t); };
    const double expected = std::pow(0.6, 0.3) * std::cos(0.6);
    CHECK(conf_diff_closed(f, fp, Order{0.7}, 0.6) == doctest::Approx(expected).epsilon(1e-14));
}

TEST_CASE("negative t is a domain error") {
    ScalarFn f = [](double t) { return t; };
    CHECK_THROWS_AS(conf_diff_closed(f, Order{0.5}, -0.1), std::domain_error);
    CHECK_THROWS_AS(conf_diff_limit(f, Order{0.5}, 0.0, 1e-6), std::domain_error);
}

TEST_CASE("limit-definition quotient matches the closed form") {
    ScalarFn id = [](double t) { return t; };
    CHECK(conf_diff_limit(id, Order{1.0}, 0.5, 1e-6) == doctest::Approx(1.0).epsilon(1e-5));

    ScalarFn root = [](double t) { return std::sqrt(t); };
    CHECK(conf_diff_limit(root, Order{0.5}, 0.25, 1e-6) == doctest::Approx(0.5).epsilon(1e-4));

    ScalarFn sine = [](double t) { return std::sin(t); };
    const double expected = std::pow(0.6, 0.3) * std::cos(0.6);
    CHECK(conf_diff_limit(sine, Order{0.7}, 0.6, 1e-6) == doctest::Approx(expected).epsilon(1e-4));
}

TEST_CASE("limit vs closed form over random polynomials") {
    std::mt19937_64 rng(101);
    for (int rep = 0; rep < 200; ++rep) {
        FracPoly p = testutil::random_cubic(rng);
        const double a = testutil::uniform(rng, 0.3, 1.0);
        const double t = testutil::uniform(rng, 0.1, 0.9);
        ScalarFn f = p.as_fn();
        const double lim = conf_diff_limit(f, Order{a}, t, 1e-6);
        const double closed = conf_diff_closed(f, Order{a}, t);
        CHECK(std::abs(lim - closed) <= 1e-4);
    }
}

TEST_CASE("linearity of the closed-form derivative") {
    std::mt19937_64 rng(102);
    for (int rep = 0; rep < 50; ++rep) {
        FracPoly p = testutil::random_cubic(rng);
        FracPoly q = testutil::random_cubic(rng);
        const double ca = testutil::uniform(rng, -2, 2), cb = testutil::uniform(rng, -2, 2);
        const double a = testutil::uniform(rng, 0.3, 1.0);
        const double t = testutil::uniform(rng, 0.1, 0.9);
        ScalarFn combo = [&](double x) { return ca * p.eval(x) + cb * q.eval(x); };
        const double lhs = conf_diff_closed(combo, Order{a}, t);
        const double rhs = ca * conf_diff_closed(p.as_fn(), Order{a}, t) +
                           cb * conf_diff_closed(q.as_fn(), Order{a}, t);
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-10));
    }
}

TEST_CASE("weighted integral removes the endpoint singularity") {
    ScalarFn one = [](double) { return 1.0; };
    CHECK(conf_integral(one, Order{0.5}, 0.0, 1.0) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(conf_integral(one, Order{1.0}, 0.0, 1.0) == doctest::Approx(1.0).epsilon(1e-13));
    ScalarFn id = [](double s) { return s; };
    CHECK(conf_integral(id, Order{0.5}, 0.0, 1.0) == doctest::Approx(2.0 / 3).epsilon(1e-12));
}

TEST_CASE("integral argument errors") {
    ScalarFn one = [](double) { return 1.0; };
    CHECK_THROWS_AS(conf_integral(one, Order{0.5}, 0.7, 0.2), std::invalid_argument);
    CHECK_THROWS_AS(conf_integral(one, Order{0.5}, 0.0, 1.0, QuadratureRule{0, 8}),
                    std::invalid_argument);
}

TEST_CASE("fundamental pairing: differentiating the integral returns h") {
    for (double a : {0.4, 0.7, 1.0}) {
        ScalarFn h = [](double s) { return 1.0 + 0.5 * s - s * s; };
        ScalarFn F = [a, h](double t) { return conf_integral(h, Order{a}, 0.0, t); };
        std::vector<double> ords{a};
        for (double t : num::linspace(0.1, 0.9, 9)) {
            CHECK(iterated_conf_diff(F, ords, t) == doctest::Approx(h(t)).epsilon(1e-6));
        }
    }
}

TEST_CASE("iterated derivative: classical second derivative") {
    ScalarFn sq = [](double t) { return t * t; };
    std::vector<double> ords{1.0, 1.0};
    CHECK(iterated_conf_diff(sq, ords, 0.5) == doctest::Approx(2.0).epsilon(1e-7));
}

TEST_CASE("iterated derivative: D^a of t^a/a is one") {
    const double a = 0.6;
    ScalarFn f = [a](double t) { return std::pow(t, a) / a; };
    std::vector<double> ords{a};
    CHECK(iterated_conf_diff(f, ords, 0.5) == doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("iterated derivative annihilates t^a after the first level") {
    const double a = 0.45, b = 0.85;
    ScalarFn f = [a](double t) { return std::pow(t, a); };
    std::vector<double> ords{a, b};
    for (double t : {0.2, 0.5, 0.8}) {
        CHECK(iterated_conf_diff(f, ords, t) == doctest::Approx(0.0).epsilon(1e-7));
    }
}

TEST_CASE("iterated derivative matches the exact fractional-polynomial value") {
    std::mt19937_64 rng(103);
    for (int rep = 0; rep < 25; ++rep) {
        // Build x with solution-like powers and differentiate through 4 levels.
        const double a = testutil::uniform(rng, 0.3, 1.0);
        const double b = testutil::uniform(rng, 0.3, 1.0);
        const double c = testutil::uniform(rng, 0.3, 1.0);
        const double d = testutil::uniform(rng, 0.3, 1.0);
        FracPoly x({{testutil::uniform(rng, -1, 1), a},
                    {testutil::uniform(rng, -1, 1), a + b},
                    {testutil::uniform(rng, -1, 1), a + b + c},
                    {testutil::uniform(rng, -1, 1), a + b + c + d}});
        std::vector<double> ords{a, b, c, d};
        FracPoly exact = x;
        for (double o : ords) exact = exact.conf_diff(o);
        const double t = testutil::uniform(rng, 0.06, 0.94);
        CHECK(std::abs(iterated_conf_diff(x.as_fn(), ords, t) - exact.eval(t)) <= 1e-4);
    }
}

TEST_CASE("stencil margin is enforced") {
    ScalarFn f = [](double t) { return t; };
    std::vector<double> ords{0.5};
    CHECK_THROWS_AS(iterated_conf_diff(f, ords, 1e-5), StencilError);
    CHECK_THROWS_AS(iterated_conf_diff(f, ords, 1.0 - 1e-5), StencilError);
}

TEST_CASE("limit convention at t = 0") {
    // D^a f(0) is the one-sided limit; for f = t^a it equals a everywhere.
    const double a = 0.5;
    ScalarFn f = [a](double t) { return std::pow(t, a); };
    CHECK(conf_diff_closed(f, Order{a}, 0.0) == doctest::Approx(a).epsilon(1e-6));
}

TEST_CASE("order outside (0,1] is rejected") {
    CHECK_THROWS_AS(Order{0.0}, std::domain_error);
    CHECK_THROWS_AS(Order{1.2}, std::domain_error);
    CHECK_THROWS_AS(Order{-0.5}, std::domain_error);
}
