#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "confbvp/numerics.hpp"
#include "confbvp/solver.hpp"
#include "confbvp/verify.hpp"
#include "testutil.hpp"

#include <cmath>
#include <random>

using namespace confbvp;

namespace {
const ScalarFn kOne = [](double) { return 1.0; };

GridFunction wrap_dense(const FracPoly& p) {
    GridFunction g;
    g.mesh = num::linspace(0.0, 1.0, 17);
    for (double t : g.mesh) g.values.push_back(p.eval(t));
    g.dense = p.as_fn();
    return g;
}
} // namespace

TEST_CASE("operator expansion into classical derivatives") {
    // D^b D^a x = (1-a) t^(1-a-b) x' + t^(2-a-b) x''
    const double a = 0.6, b = 0.8;
    auto p = conformable_to_classical(std::vector<double>{a, b});
    REQUIRE(p.size() == 3);
    CHECK(p[0].empty());
    REQUIRE(p[1].terms().size() == 1);
    CHECK(p[1].terms()[0].coef == doctest::Approx(1.0 - a).epsilon(1e-15));
    CHECK(p[1].terms()[0].power == doctest::Approx(1.0 - a - b).epsilon(1e-15));
    REQUIRE(p[2].terms().size() == 1);
    CHECK(p[2].terms()[0].coef == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(p[2].terms()[0].power == doctest::Approx(2.0 - a - b).epsilon(1e-15));
}

TEST_CASE("expansion evaluates iterated derivatives at t = 1 exactly") {
    std::mt19937_64 rng(501);
    for (int rep = 0; rep < 20; ++rep) {
        const double a = testutil::uniform(rng, 0.3, 1.0);
        const double b = testutil::uniform(rng, 0.3, 1.0);
        const double c = testutil::uniform(rng, 0.3, 1.0);
        FracPoly x({{testutil::uniform(rng, -1, 1), a},
                    {testutil::uniform(rng, -1, 1), a + b},
                    {testutil::uniform(rng, -1, 1), a + b + c},
                    {testutil::uniform(rng, -1, 1), 0.0}});
        std::vector<double> ords{a, b, c};
        FracPoly exact = x;
        for (double o : ords) exact = exact.conf_diff(o);
        CHECK(std::abs(iterated_diff_at_one(x.as_fn(), ords) - exact.eval(1.0)) <= 1e-6);
    }
}

TEST_CASE("ladder extrapolation recovers the limit of a power expansion") {
    // g(t) = 0 + 2 t^0.4 - t^1.3 has limit 0; a shifted copy has limit 0.37
    ScalarFn g1 = [](double t) { return 2.0 * std::pow(t, 0.4) - std::pow(t, 1.3); };
    CHECK(std::abs(limit_at_zero(g1, {0.4, 1.3})) <= 1e-10);
    ScalarFn g2 = [](double t) { return 0.37 + 2.0 * std::pow(t, 0.4) - std::pow(t, 1.3); };
    CHECK(limit_at_zero(g2, {0.4, 1.3}) == doctest::Approx(0.37).epsilon(1e-9));
}

TEST_CASE("residual check passes on solver output and is zero for the zero pair") {
    auto spec = KernelSpec::conjugate2(Order{1.0}, Order{1.0});
    GridFunction x = solve_linear(spec, kOne, num::linspace(0.0, 1.0, 17));
    auto rep = verify_residual(x, kOne, spec);
    CHECK(rep.pass);
    CHECK(rep.magnitude <= 1e-5);

    GridFunction zero = wrap_dense(FracPoly{});
    ScalarFn zfn = [](double) { return 0.0; };
    auto zrep = verify_residual(zero, zfn, spec);
    CHECK(zrep.magnitude <= 1e-12);
}

TEST_CASE("residual check flags a perturbed solution at fractional orders") {
    auto spec = KernelSpec::conjugate2(Order{0.5}, Order{0.5});
    GridFunction x = solve_linear(spec, kOne, num::linspace(0.0, 1.0, 17));
    ScalarFn base = x.dense;
    x.dense = [base](double t) { return base(t) + 0.01 * t; };
    auto rep = verify_residual(x, kOne, spec);
    CHECK_FALSE(rep.pass);
    CHECK(rep.magnitude > 1e-4);
}

TEST_CASE("boundary check passes on solver output for every family") {
    std::mt19937_64 rng(502);
    for (int fam = 0; fam < 6; ++fam) {
        KernelSpec spec = testutil::random_family_spec(rng, fam);
        FracPoly h = testutil::random_cubic(rng);
        GridFunction x = solve_linear(spec, h.as_fn(), num::linspace(0.0, 1.0, 17),
                                      coarse_solve_options());
        auto rep = verify_bcs(x, spec);
        CHECK(rep.pass);
        CHECK(rep.magnitude <= 1e-4);
    }
}

TEST_CASE("boundary check flags a known non-solution of the right-focal problem") {
    // x = t^a/a has x(0) = 0 but D^a x = 1 at t = 1
    const double a = 0.5;
    auto spec = KernelSpec::right_focal2(Order{a}, Order{0.5});
    GridFunction x = wrap_dense(FracPoly::monomial(1.0 / a, a));
    auto rep = verify_bcs(x, spec);
    CHECK_FALSE(rep.pass);
    CHECK(rep.magnitude == doctest::Approx(1.0).epsilon(1e-5));
    CHECK(rep.worst_t == 1.0);
}

TEST_CASE("boundary check is exact for the zero function") {
    GridFunction zero = wrap_dense(FracPoly{});
    auto spec = KernelSpec::lidstone4(Order{0.7}, Order{0.6});
    auto rep = verify_bcs(zero, spec);
    CHECK(rep.magnitude <= 1e-12);
}

TEST_CASE("positivity scan per family") {
    CHECK(check_positivity(KernelSpec::lidstone4(Order{1.0}, Order{1.0}), 101).pass);
    CHECK(check_positivity(KernelSpec::right_focal3(Order{0.5}, Order{0.5}, Order{0.5}, 0.5), 101)
              .pass); // threshold is 0.25
    auto cant = KernelSpec::cantilever4(Order{0.8}, Order{0.4}, Order{0.6}, Order{0.9});
    auto rep = check_positivity(cant, 101);
    CHECK(rep.pass);
    std::mt19937_64 rng(503);
    for (int fam = 0; fam < 6; ++fam)
        CHECK(check_positivity(testutil::random_family_spec(rng, fam), 51).pass);
}

TEST_CASE("positivity scan catches a below-threshold tau") {
    auto spec = KernelSpec::right_focal3(Order{1.0}, Order{1.0}, Order{1.0}, 0.4);
    auto rep = check_positivity(spec, 101);
    CHECK_FALSE(rep.pass);
}

TEST_CASE("lidstone symmetry scan and the broken general-gamma variant") {
    CHECK(check_symmetry_lidstone(Order{1.0}, Order{1.0}, 101).magnitude <= 1e-12);
    CHECK(check_symmetry_lidstone(Order{0.5}, Order{1.0}, 101).pass);
    // reconstruction with gamma != alpha is not symmetric and must be caught
    const Order a{0.5}, b{0.8}, c{0.9};
    KernelFn skew = [&](double t, double s) {
        auto [bs, ds] = lidstone_coeffs(s, a, b, c);
        double u = bs * std::pow(t, a.value()) +
                   ds * std::pow(t, a.value() + b.value() + c.value());
        if (s <= t) u += cauchy4(t, s, a, b, c);
        return u;
    };
    auto rep = check_symmetry_lidstone(a, b, 51, 1e-12, skew);
    CHECK_FALSE(rep.pass);
    CHECK(rep.magnitude > 1e-3);
}

TEST_CASE("classical reduction checker") {
    CHECK(check_classical_reduction(KernelSpec::conjugate2(Order{1.0}, Order{1.0})).pass);
    CHECK(check_classical_reduction(KernelSpec::cantilever4(Order{1.0}, Order{1.0}, Order{1.0},
                                                            Order{1.0}))
              .pass);
    CHECK_THROWS_AS(check_classical_reduction(KernelSpec::conjugate2(Order{0.5}, Order{1.0})),
                    std::invalid_argument);
}

TEST_CASE("report serialization format") {
    VerifyReport rep;
    rep.property = "positivity";
    rep.pass = false;
    rep.worst_t = 0.5;
    rep.worst_s = 0.25;
    rep.magnitude = 1.5e-3;
    rep.tolerance = 1e-12;
    CHECK(rep.to_line() == "positivity\tfail\tt=0.5,s=0.25\t0.0015\t9.9999999999999998e-13");
    rep.worst_s.reset();
    rep.pass = true;
    CHECK(rep.to_line().substr(0, 21) == "positivity\tpass\tt=0.5");
}

TEST_CASE("family suite passes clean and flags injected faults") {
    auto spec = KernelSpec::conjugate2(Order{0.6}, Order{0.8});
    auto clean = run_family_suite(spec);
    for (const auto& r : clean) CHECK(r.pass);

    auto flipped = run_family_suite(spec, 1e-4, FaultInjection::SignFlip);
    bool any_fail = false;
    for (const auto& r : flipped) any_fail = any_fail || !r.pass;
    CHECK(any_fail);

    auto perturbed = run_family_suite(spec, 1e-4, FaultInjection::PerturbSolution);
    any_fail = false;
    for (const auto& r : perturbed) any_fail = any_fail || !r.pass;
    CHECK(any_fail);
}

TEST_CASE("family suite covers the fourth-order families") {
    for (auto spec : {KernelSpec::cantilever4(Order{0.7}, Order{0.8}, Order{0.9}, Order{0.6}),
                      KernelSpec::lidstone4(Order{0.8}, Order{0.7})}) {
        auto reports = run_family_suite(spec);
        CHECK(reports.size() >= 4);
        for (const auto& r : reports) CHECK(r.pass);
    }
}

TEST_CASE("dense evaluator is required for differentiation-based checks") {
    GridFunction samples;
    samples.mesh = num::linspace(0.0, 1.0, 9);
    samples.values.assign(9, 0.0);
    auto spec = KernelSpec::conjugate2(Order{0.5}, Order{0.5});
    CHECK_THROWS_AS(verify_residual(samples, kOne, spec), std::invalid_argument);
    std::vector<double> ords{0.5};
    CHECK_THROWS_AS(iterated_conf_diff(samples, ords, 0.5), std::invalid_argument);
}

TEST_CASE("grid functions with a dense evaluator differentiate directly") {
    GridFunction g = wrap_dense(FracPoly::monomial(2.0, 0.5));
    std::vector<double> ords{0.5};
    CHECK(iterated_conf_diff(g, ords, 0.4) == doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("residual mesh must stay inside the stencil margin") {
    auto spec = KernelSpec::conjugate2(Order{1.0}, Order{1.0});
    GridFunction x = solve_linear(spec, kOne, num::linspace(0.0, 1.0, 9));
    CHECK_THROWS_AS(verify_residual(x, kOne, spec, {1e-9}), std::invalid_argument);
}
