#include <doctest.h>

#include <random>
#include <vector>

#include "kolmo/classify.hpp"
#include "kolmo/equilibria.hpp"
#include "kolmo/errors.hpp"

#include "../support/models.hpp"
#include "../support/oracles.hpp"

using namespace kolmo;

TEST_CASE("derived constants") {
    const auto a = derived_constants(kt::ma());
    // delta=1, theta2=3, gamma=-1, N=1
    CHECK(a.sigma1 == doctest::Approx(-2.0));
    CHECK(a.k3 == doctest::Approx(-1.5));
    CHECK(a.twoN_minus_delta_theta2 == doctest::Approx(-1.0));
    const auto b = derived_constants(kt::case_b(-1.0, -1.0, 1.0, 2.0));
    CHECK(b.sigma2 == doctest::Approx(-3.0));
}

TEST_CASE("axis equilibria against the quadratic formula and Vieta") {
    std::mt19937_64 rng(10);
    std::uniform_real_distribution<double> u(-0.05, 0.05);
    for (int k = 0; k < 200; ++k) {
        const auto m = kt::random_model(rng, true);
        const ParamPoint mu{u(rng), u(rng)};
        const auto [e11, e12] = axis1_equilibria(m, mu);
        const auto [r11, r12] = kt::axis_roots(m, mu);
        if (std::isnan(r11)) {
            CHECK(e11.status == Status::Absent);
            continue;
        }
        const auto c = kt::coeffs(m, mu);
        CHECK(e11.point.xi1 == doctest::Approx(r11).epsilon(1e-12).scale(1e-12));
        CHECK(e12.point.xi1 == doctest::Approx(r12).epsilon(1e-12).scale(1e-12));
        CHECK(e11.point.xi1 + e12.point.xi1 == doctest::Approx(c.th / c.N).epsilon(1e-10).scale(1e-14));
        CHECK(e11.point.xi1 * e12.point.xi1 == doctest::Approx(mu.mu1 / c.N).epsilon(1e-10).scale(1e-16));
        CHECK(e11.point.xi2 == 0.0);
    }
}

TEST_CASE("refined equilibria are zeros of the field") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(-0.04, 0.04);
    int no_e3 = 0;
    for (int k = 0; k < 200; ++k) {
        const bool a = k % 2 == 0;
        const auto m = kt::random_model(rng, a);
        const ParamPoint mu{u(rng), u(rng)};
        std::vector<Equilibrium> eqs;
        try {
            eqs = all_equilibria(m, mu);
        } catch (const ConvergenceError&) {
            // E3 can leave the plane when |mu| is not small against gamma delta
            ++no_e3;
            continue;
        }
        for (const auto& e : eqs) {
            if (e.status == Status::Absent) continue;
            const auto f = kt::field(m, mu, e.point.xi1, e.point.xi2);
            CHECK(std::max(std::abs(f[0]), std::abs(f[1])) <= 1e-12);
        }
        const auto e2 = equilibrium_E2(m, mu);
        const auto c = kt::coeffs(m, mu);
        // mu2 + y + P y^2 = 0, root through the origin
        const auto [y1, y2] = kt::quad_roots(c.P, 1.0, mu.mu2);
        const double y = std::abs(y1 + mu.mu2) < std::abs(y2 + mu.mu2) ? y1 : y2;
        CHECK(std::abs(e2.point.xi2 - y) <= 1e-11);
    }
    CHECK(no_e3 < 20);
}

TEST_CASE("E3 lowest terms approximates the refined point") {
    for (const auto& m : {kt::ma(), kt::mh(), kt::mb()}) {
        for (double r : {0.004, 0.002, 0.001}) {
            const ParamPoint mu{r, -0.7 * r};
            const auto e = equilibrium_E3(m, mu);
            const auto l = e3_lowest_terms(m, mu);
            const double scale = std::max(std::abs(e.point.xi1), std::abs(e.point.xi2));
            CHECK(std::abs(e.point.xi1 - l.xi1) <= 0.2 * scale + 1e-12);
            CHECK(std::abs(e.point.xi2 - l.xi2) <= 0.2 * scale + 1e-12);
            CHECK(e.provenance.kind == Provenance::Kind::NewtonRefined);
        }
    }
}

TEST_CASE("properness predicates") {
    CHECK(properness({0.1, 0.0}) == Status::Proper);
    CHECK(properness({0.1, -1e-11}) == Status::Proper);
    CHECK(properness({0.1, -1e-6}) == Status::Virtual);
    CHECK(properness({NAN, 0.0}) == Status::Absent);
}

TEST_CASE("analyze example: MA at (-0.01, 0)") {
    const auto m = kt::ma();
    const ParamPoint mu{-0.01, 0.0};
    const auto [e11, e12] = axis1_equilibria(m, mu);
    CHECK(e11.point.xi1 == doctest::Approx(0.1).epsilon(1e-12));
    CHECK(e11.status == Status::Proper);
    CHECK(e12.status == Status::Virtual);
    CHECK(classify_equilibrium(m, mu, e11).second.tag == StabilityClass::Tag::Saddle);
}

TEST_CASE("eigen2 against the characteristic polynomial") {
    std::mt19937_64 rng(12);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int k = 0; k < 500; ++k) {
        Mat2 j;
        j.m = {{{u(rng), u(rng)}, {u(rng), u(rng)}}};
        const auto e = eigen2(j);
        const double tr = j.trace(), det = j.det();
        if (e.kind == EigenReport::Kind::RealPair) {
            CHECK(e.lambda1 >= e.lambda2);
            CHECK(e.lambda1 + e.lambda2 == doctest::Approx(tr).scale(1.0));
            CHECK(e.lambda1 * e.lambda2 == doctest::Approx(det).scale(1.0));
        } else {
            CHECK(e.omega > 0);
            CHECK(2 * e.p() == doctest::Approx(tr).scale(1.0));
            CHECK(e.p() * e.p() + e.omega * e.omega == doctest::Approx(det).scale(1.0));
        }
    }
    // triangular: diagonal exactly
    Mat2 t;
    t.m = {{{0.01, 0.3}, {0.0, -1e-9}}};
    const auto e = eigen2(t);
    CHECK(e.lambda1 == 0.01);
    CHECK(e.lambda2 == -1e-9);
}

TEST_CASE("stability classes") {
    auto cls = [](double a, double b, double c, double d) {
        Mat2 j;
        j.m = {{{a, b}, {c, d}}};
        return stability_of(j, eigen2(j));
    };
    using T = StabilityClass::Tag;
    CHECK(cls(-1, 0, 0, -2).tag == T::AttractorNode);
    CHECK(cls(1, 0, 0, 2).tag == T::RepellerNode);
    CHECK(cls(1, 0, 0, -2).tag == T::Saddle);
    CHECK(cls(-0.1, -1, 1, -0.1).tag == T::AttractorFocus);
    CHECK(cls(0.1, -1, 1, 0.1).tag == T::RepellerFocus);
    const auto nh = cls(0, 0, 0, -1);
    CHECK(nh.tag == T::NonHyperbolic);
    CHECK(nh.zero_count == 1);
    CHECK(nh.nonzero_sign == -1);
    CHECK(cls(0, -1, 1, 0).zero_count == 2);
}

namespace {

// x' = J x + B(x,x)/2 + C(x,x,x)/6 from the canonical-form coefficients
void canonical_tensors(const kt::Canonical& c, Mat2& j, Hessian2& h, Third2& t) {
    j.m = {{{0.0, -c.w}, {c.w, 0.0}}};
    h[0].m = {{{c.Fxx, c.Fxy}, {c.Fxy, c.Fyy}}};
    h[1].m = {{{c.Gxx, c.Gxy}, {c.Gxy, c.Gyy}}};
    t[0][0].m = {{{c.Fxxx, c.Fxxy}, {c.Fxxy, c.Fxyy}}};
    t[0][1].m = {{{c.Fxxy, c.Fxyy}, {c.Fxyy, c.Fyyy}}};
    t[1][0].m = {{{c.Gxxx, c.Gxxy}, {c.Gxxy, c.Gxyy}}};
    t[1][1].m = {{{c.Gxxy, c.Gxyy}, {c.Gxyy, c.Gyyy}}};
}

}  // namespace

TEST_CASE("first Lyapunov coefficient matches the canonical focus formula") {
    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (int k = 0; k < 200; ++k) {
        kt::Canonical c{0.2 + std::abs(u(rng)), u(rng), u(rng), u(rng), u(rng), u(rng), u(rng),
                        u(rng), u(rng), u(rng), u(rng), u(rng), u(rng), u(rng), u(rng)};
        Mat2 j;
        Hessian2 h;
        Third2 t;
        canonical_tensors(c, j, h, t);
        const double a = kt::gh_focus_coefficient(c);
        const double l1 = first_lyapunov(j, h, t);
        CHECK(l1 == doctest::Approx(2.0 * a / c.w).epsilon(1e-10).scale(1e-12));
    }
}

TEST_CASE("sign of l1 is invariant under linear changes of coordinates") {
    std::mt19937_64 rng(14);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (int k = 0; k < 100; ++k) {
        kt::Canonical c{0.5 + std::abs(u(rng)), u(rng), u(rng), u(rng), u(rng), u(rng), u(rng),
                        u(rng), u(rng), u(rng), u(rng), u(rng), u(rng), u(rng), u(rng)};
        Mat2 j;
        Hessian2 h;
        Third2 t;
        canonical_tensors(c, j, h, t);
        const double l1 = first_lyapunov(j, h, t);
        if (std::abs(l1) < 1e-6) continue;
        // x = A z: z' = A^-1 J A z + A^-1 B(Az, Az)/2 + ...
        Mat2 a;
        a.m = {{{1.0 + 0.3 * u(rng), 0.4 * u(rng)}, {0.4 * u(rng), 1.0 + 0.3 * u(rng)}}};
        const double det = a.det();
        if (std::abs(det) < 0.2) continue;
        Mat2 ai;
        ai.m = {{{a(1, 1) / det, -a(0, 1) / det}, {-a(1, 0) / det, a(0, 0) / det}}};
        Mat2 j2{};
        Hessian2 h2{};
        Third2 t2{};
        for (int i = 0; i < 2; ++i)
            for (int p = 0; p < 2; ++p) {
                double s = 0.0;
                for (int q = 0; q < 2; ++q)
                    for (int r = 0; r < 2; ++r) s += ai(i, q) * j(q, r) * a(r, p);
                j2.m[i][p] = s;
            }
        for (int i = 0; i < 2; ++i)
            for (int p = 0; p < 2; ++p)
                for (int q = 0; q < 2; ++q) {
                    double s2 = 0.0;
                    for (int o = 0; o < 2; ++o)
                        for (int b = 0; b < 2; ++b)
                            for (int d = 0; d < 2; ++d) s2 += ai(i, o) * h[o](b, d) * a(b, p) * a(d, q);
                    h2[i].m[p][q] = s2;
                    for (int r = 0; r < 2; ++r) {
                        double s3 = 0.0;
                        for (int o = 0; o < 2; ++o)
                            for (int b = 0; b < 2; ++b)
                                for (int d = 0; d < 2; ++d)
                                    for (int e = 0; e < 2; ++e)
                                        s3 += ai(i, o) * t[o][b](d, e) * a(b, p) * a(d, q) * a(e, r);
                        t2[i][p].m[q][r] = s3;
                    }
                }
        const double l1b = first_lyapunov(j2, h2, t2);
        CHECK((l1b > 0) == (l1 > 0));
    }
}
