#include <doctest.h>

#include <random>

#include "kolmo/classify.hpp"
#include "kolmo/curves.hpp"
#include "kolmo/errors.hpp"
#include "kolmo/sotomayor.hpp"

#include "../support/models.hpp"
#include "../support/oracles.hpp"

using namespace kolmo;

TEST_CASE("curve residuals and points") {
    const auto ma = kt::ma();
    CHECK(curve_residual(ma, CurveId::DeltaPlus, {0.000225, 0.01}) == doctest::Approx(0.0).scale(1e-18));
    const auto dp = curve_point(ma, CurveId::DeltaPlus, 0.01);
    CHECK(dp.mu.mu1 == doctest::Approx(0.000225).epsilon(1e-12));
    CHECK(dp.mu.mu2 == 0.01);

    const auto t3 = curve_point(ma, CurveId::T3, 0.01);
    CHECK(std::abs(t3.mu.mu1 - 0.0002) <= 1e-6);
    CHECK(std::abs(t3.residual) <= 1e-10);
    CHECK(std::abs(equilibrium_E3(ma, t3.mu).point.xi2) <= 1e-10);

    const auto h = curve_point(kt::mh(), CurveId::H, -0.01);
    CHECK(h.mu.mu1 == doctest::Approx(3e-4).epsilon(0.05));

    // H1 for MB: mu2 = mu1 / (gamma - 1) at lowest order
    const auto mb = kt::mb();
    const double on = std::abs(curve_residual(mb, CurveId::H1, {0.01, -0.005}));
    const double off = std::abs(curve_residual(mb, CurveId::H1, {0.01, 0.005}));
    CHECK(on < 0.05 * off);
}

TEST_CASE("curve errors") {
    CHECK_THROWS_AS(curve_point(kt::mb(), CurveId::H, -0.01), CaseError);
    CHECK_THROWS_AS(curve_point(kt::ma(), CurveId::T4, 0.01), CaseError);
    CHECK_THROWS_AS(curve_point(kt::ma(), CurveId::H, -0.01), SideConditionError);
    CHECK_THROWS_AS(curve_point(kt::ma(), CurveId::T2, -0.01), SideConditionError);
    CHECK_THROWS_AS(curve_point(kt::ma(), CurveId::DeltaPlus, 0.2), DomainError);
    CHECK(curve_from_string("T3") == CurveId::T3);
    CHECK(!curve_from_string("T9").has_value());
}

TEST_CASE("region labels") {
    using T = RegionLabel::Tag;
    const auto ma = kt::ma();
    CHECK(region_of(ma, {-0.01, 0.005}).tag == T::R10minus);
    CHECK(region_of(ma, {0.0004, 0.02}).tag == T::R20minus);
    CHECK(region_of(ma, {0.000215, 0.01}).tag == T::R20plus);
    CHECK(region_of(ma, {0.01, 0.001}).tag == T::R00);
    CHECK(region_of(ma, {0.09, 0.09}).tag == T::Outside);
    const auto on = region_of(ma, curve_point(ma, CurveId::T3, 0.01).mu);
    CHECK(on.tag == T::OnCurve);
    CHECK(to_string(on) == "OnCurve:T3");
    CHECK(region_of(kt::mb(), {-0.02, -0.01}).tag == T::Q);
    CHECK(region_of(kt::mb(), {0.02, 0.01}).tag == T::QComplement);
}

TEST_CASE("saddle-node certificate on Delta") {
    const auto ma = kt::ma();
    const ParamPoint mu = curve_point(ma, CurveId::DeltaPlus, 0.01).mu;
    const auto r = sotomayor_check(ma, mu, {3 * mu.mu2 / 2, 0.0}, 1);
    CHECK(r.verdict == SotomayorReport::Verdict::SaddleNode);
    CHECK(r.C1 * r.C3 > 0);  // sign(N)
    CHECK(std::abs(r.zero_eigenvalue) <= 1e-8);
    const Mat2 j = jacobian(ma, mu, {3 * mu.mu2 / 2, 0.0});
    CHECK(max_norm(j.apply(r.v)) <= 1e-8);
    CHECK(max_norm(j.transposed().apply(r.w)) <= 1e-8);
    CHECK(std::hypot(r.v[0], r.v[1]) == doctest::Approx(1.0));
}

TEST_CASE("transcritical certificate on T3 at the colliding axis point") {
    const auto ma = kt::ma();
    const ParamPoint mu = curve_point(ma, CurveId::T3, 0.01).mu;
    const auto site = certificate_site(ma, CurveId::T3, mu);
    // 2N - delta theta2 < 0: E3 meets E12
    CHECK(site.id == EquilibriumId::E12);
    const auto r = sotomayor_check(ma, mu, site.xi0, site.bif_param);
    CHECK(r.verdict == SotomayorReport::Verdict::Transcritical);
    const auto e11 = axis1_equilibria(ma, mu).first;
    CHECK_THROWS_AS(sotomayor_check(ma, mu, e11.point, 1), NotSingular);
}

TEST_CASE("axis certificate at O: C2 = 1, C3 = -2 theta2 mu2") {
    for (const auto& f : kt::g_families()) {
        for (double mu2 : {-0.02, 0.01}) {
            const auto r = sotomayor_check(f.model, {0.0, mu2}, {0.0, 0.0}, 1);
            CHECK(r.verdict == SotomayorReport::Verdict::Transcritical);
            CHECK(r.C1 == 0.0);
            CHECK(r.C2 == doctest::Approx(1.0));
            CHECK(r.C3 == doctest::Approx(-2.0 * f.model.theta.coeff(0, 1) * mu2));
        }
    }
    CHECK_THROWS_AS(sotomayor_check(kt::ma(), {0.0, 0.0}, {0.0, 0.0}, 1), DoubleZero);
    CHECK_THROWS_AS(sotomayor_check(kt::ma(), {0.0, 0.01}, {0.0, 0.0}, 3), ValidationError);
}

TEST_CASE("Hopf point of MH") {
    const auto mh = kt::mh();
    const auto cq = char_quantities_E3(mh, {0.0003, -0.01});
    CHECK(std::abs(cq.p) <= 5e-5);
    CHECK(cq.L > 0);

    const auto h = hopf_check(mh, curve_point(mh, CurveId::H, -0.01).mu);
    CHECK(h.omega == doctest::Approx(0.001).epsilon(0.02));
    CHECK(h.dp_dbif == doctest::Approx(0.5).epsilon(0.05));
    CHECK(std::isfinite(h.l1));
    const auto h2 = hopf_check(mh, curve_point(mh, CurveId::H, -0.005).mu);
    CHECK((h2.l1 > 0) == (h.l1 > 0));
    const auto [e, cls] = classify_equilibrium(mh, curve_point(mh, CurveId::H, -0.01).mu, h.e3);
    CHECK(cls.tag == StabilityClass::Tag::NonHyperbolic);
    CHECK(cls.zero_count == 2);

    CHECK_THROWS_AS(hopf_check(mh, {0.001, -0.01}), NotOnHopfCurve);
}

TEST_CASE("no Hopf point of E3 in Q for CaseB with theta < 0") {
    const auto mb = kt::mb();
    std::mt19937_64 rng(21);
    std::uniform_real_distribution<double> u(-0.05, 0.05);
    int inside = 0;
    for (int k = 0; k < 2000 && inside < 200; ++k) {
        const ParamPoint mu{u(rng), u(rng)};
        if (!in_nontrivial_E3_region(mb, mu)) continue;
        ++inside;
        CHECK_THROWS_AS(hopf_check(mb, mu), NotOnHopfCurve);
    }
    CHECK(inside == 200);
}
