#include <doctest.h>

#include <cmath>

#include "kolmo/emit.hpp"
#include "kolmo/errors.hpp"
#include "kolmo/portrait.hpp"

#include "../support/models.hpp"
#include "../support/oracles.hpp"

using namespace kolmo;

TEST_CASE("integrator against the exact solution on the xi2 axis") {
    // on xi1 = 0 with P = 0: y' = y (a + y), y(t) = a y0 e^{at} / (a + y0 - y0 e^{at})
    const auto m = kt::ma();
    const ParamPoint mu{0.01, -0.02};
    const double a = mu.mu2, y0 = 0.01, t = 100.0;
    const auto tr = integrate(m, mu, {0.0, y0}, t);
    REQUIRE(tr.terminal == Trajectory::Terminal::TimeLimit);
    const double ea = std::exp(a * t);
    const double exact = a * y0 * ea / (a + y0 - y0 * ea);
    CHECK(tr.samples.back().t == doctest::Approx(t));
    CHECK(tr.samples.back().xi.xi2 == doctest::Approx(exact).epsilon(1e-6));
    for (const auto& s : tr.samples) CHECK(s.xi.xi1 == 0.0);
}

TEST_CASE("trajectory edge cases") {
    const auto m = kt::ma();
    const ParamPoint mu{0.0004, 0.02};
    const auto eqs = classified_equilibria(m, mu);
    IntegrateOptions opts;
    for (const auto& e : eqs) opts.known.push_back(e.eq);
    const auto e11 = eqs[1].eq;
    const auto tr = integrate(m, mu, e11.point, 10.0, opts);
    CHECK(tr.terminal == Trajectory::Terminal::ConvergedToEquilibrium);
    CHECK(*tr.converged_to == EquilibriumId::E11);
    CHECK_THROWS_AS(integrate(m, mu, {NAN, 0.0}, 1.0), ValidationError);
    CHECK_THROWS_AS(integrate(m, mu, {0.1, 0.1}, 0.0), ValidationError);
}

TEST_CASE("seed near an attracting E12 converges to it") {
    const auto m = kt::ma();
    const ParamPoint mu{0.000215, 0.01};  // R20plus
    const auto eqs = classified_equilibria(m, mu);
    IntegrateOptions opts;
    const ClassifiedEquilibrium* e12 = nullptr;
    for (const auto& e : eqs) {
        opts.known.push_back(e.eq);
        if (e.eq.id == EquilibriumId::E12) e12 = &e;
    }
    REQUIRE(e12);
    REQUIRE(e12->cls.is_attractor());
    const auto tr = integrate(m, mu, {e12->eq.point.xi1 + 1e-5, 1e-5}, 1e7, opts);
    CHECK(tr.terminal == Trajectory::Terminal::ConvergedToEquilibrium);
    CHECK(*tr.converged_to == EquilibriumId::E12);
}

TEST_CASE("linearization consistency near a hyperbolic attractor") {
    const auto m = kt::ma();
    const ParamPoint mu{-0.005, -0.005};  // O is an attractor
    const auto j = jacobian(m, mu, {0.0, 0.0});
    for (double ang = 0.1; ang < 1.5; ang += 0.2) {
        const StatePoint x{1e-4 * std::cos(ang), 1e-4 * std::sin(ang)};
        const auto f = eval_field(m, mu, x);
        CHECK(dot(f, to_vec(x)) < 0);  // inward
        const auto lin = j.apply(to_vec(x));
        CHECK(f[0] == doctest::Approx(lin[0]).epsilon(0.05));
    }
}

TEST_CASE("portrait in a region where O is the only attractor") {
    const auto m = kt::ma();
    const ParamPoint mu{-0.005, -0.005};
    PortraitSpec spec;
    spec.window = {0.0, 0.05, 0.0, 0.004};
    spec.t_max = 1e6;
    const auto p = phase_portrait(m, mu, spec);
    int interior = 0;
    for (std::size_t k = 0; k < p.seeds.size(); ++k) {
        const auto& s = p.seeds[k];
        if (s.xi1 <= 0 || s.xi2 <= 0) continue;
        const auto& tr = p.trajectories[k];
        if (tr.terminal != Trajectory::Terminal::ConvergedToEquilibrium) continue;
        ++interior;
        CHECK(*tr.converged_to == EquilibriumId::O);
    }
    CHECK(interior > 0);
}

TEST_CASE("portrait determinism, serial agreement and forward invariance") {
    const auto m = kt::mh();
    const ParamPoint mu{0.0005, -0.01};
    PortraitSpec spec;
    spec.window = {0.0, 0.05, 0.0, 0.05};
    spec.t_max = 2e4;
    const auto a = phase_portrait(m, mu, spec);
    const auto b = phase_portrait_serial(m, mu, spec);
    CHECK(portrait_csv(a) == portrait_csv(b));
    CHECK(portrait_svg(a, spec.window) == portrait_svg(b, spec.window));
    for (const auto& tr : a.trajectories)
        for (const auto& s : tr.samples) {
            CHECK(s.xi.xi1 >= -1e-10);
            CHECK(s.xi.xi2 >= -1e-10);
        }
}

TEST_CASE("degenerate window gives equilibria only") {
    PortraitSpec spec;
    spec.window = {0.1, 0.1, 0.0, 0.1};
    const auto p = phase_portrait(kt::ma(), {0.0004, 0.02}, spec);
    CHECK(p.trajectories.empty());
    CHECK(p.nulls.f1.empty());
    CHECK(!p.equilibria.empty());
    spec.window = {-0.1, 0.1, 0.0, 0.1};
    CHECK_THROWS_AS(phase_portrait(kt::ma(), {0.0004, 0.02}, spec), ValidationError);
}

TEST_CASE("nullclines") {
    const auto m = kt::ma();
    const ParamPoint mu{0.0004, 0.02};
    const auto n = nullclines(m, mu, {0.0, 0.1, 0.0, 0.1}, 128);
    bool hit_small = false, hit_large = false;
    for (const auto& line : n.f1)
        for (const auto& q : line) {
            if (q.xi1 == 0.0) continue;  // the axis
            const auto c = kt::coeffs(m, mu);
            const double g1 = mu.mu1 - c.th * q.xi1 + c.ga * q.xi2 - c.M * q.xi1 * q.xi2 + c.N * q.xi1 * q.xi1;
            CHECK(std::abs(g1) <= 1e-9);
            if (std::abs(q.xi2) < 1e-9) {
                hit_small |= std::abs(q.xi1 - 0.00764) < 1e-5;
                hit_large |= std::abs(q.xi1 - 0.05236) < 1e-5;
            }
        }
    CHECK(hit_small);
    CHECK(hit_large);
    const auto none = nullclines(m, mu, {0.5, 0.6, 0.9, 1.0}, 16);
    CHECK(none.f1.empty());
    CHECK(none.f2.empty());
}
