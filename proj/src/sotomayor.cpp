#include "kolmo/sotomayor.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "kolmo/classify.hpp"
#include "kolmo/errors.hpp"
#include "kolmo/roots.hpp"

namespace kolmo {

namespace {

Vec2 unit_positive(Vec2 x) {
    const double n = std::hypot(x[0], x[1]);
    x = {x[0] / n, x[1] / n};
    const double big = std::abs(x[0]) >= std::abs(x[1]) ? x[0] : x[1];
    if (big < 0.0) x = {-x[0], -x[1]};
    return x;
}

Vec2 larger(const Vec2& a, const Vec2& b) {
    return std::hypot(a[0], a[1]) >= std::hypot(b[0], b[1]) ? a : b;
}

}  // namespace

std::string_view to_string(SotomayorReport::Verdict v) {
    switch (v) {
        case SotomayorReport::Verdict::SaddleNode: return "SaddleNode";
        case SotomayorReport::Verdict::Transcritical: return "Transcritical";
        case SotomayorReport::Verdict::Inconclusive: return "Inconclusive";
    }
    return "?";
}

SotomayorReport sotomayor_check(const SystemModel& model, const ParamPoint& mu0,
                                const StatePoint& xi0, int bif_param, const Tolerances& tols) {
    if (bif_param != 1 && bif_param != 2)
        throw ValidationError("bifurcation parameter must be 1 or 2");
    check_domain(model, mu0);
    const LocalField field(model, mu0);
    const Mat2 j = field.jacobian(xi0);
    const EigenReport e = eigen2(j);
    if (e.kind == EigenReport::Kind::ComplexPair)
        throw NotSingular("Jacobian has a complex pair, no zero eigenvalue");
    const bool z1 = std::abs(e.lambda1) <= tols.zero_eig;
    const bool z2 = std::abs(e.lambda2) <= tols.zero_eig;
    if (z1 && z2) throw DoubleZero("both eigenvalues vanish at the test point");
    if (!z1 && !z2)
        throw NotSingular("no eigenvalue within " + std::to_string(tols.zero_eig) + " of zero (" +
                          std::to_string(e.lambda1) + ", " + std::to_string(e.lambda2) + ")");

    SotomayorReport r;
    r.zero_eigenvalue = z1 ? e.lambda1 : e.lambda2;
    Mat2 a = j;
    a(0, 0) -= r.zero_eigenvalue;
    a(1, 1) -= r.zero_eigenvalue;
    // adjugate columns span ker(a), rows span ker(a^T)
    r.v = unit_positive(larger({a(1, 1), -a(1, 0)}, {-a(0, 1), a(0, 0)}));
    r.w = unit_positive(larger({a(1, 1), -a(0, 1)}, {-a(1, 0), a(0, 0)}));

    r.C1 = dot(r.w, field.d_mu(xi0, bif_param));
    r.C2 = dot(r.w, field.d_mu_jacobian(xi0, bif_param).apply(r.v));
    r.C3 = dot(r.w, field.second_directional(xi0, r.v));

    const double scale = std::max(1.0, j.max_abs());
    r.tol = tols.sotomayor * scale;
    const bool c1 = std::abs(r.C1) > r.tol, c2 = std::abs(r.C2) > r.tol,
               c3 = std::abs(r.C3) > r.tol;
    if (c1 && c3)
        r.verdict = SotomayorReport::Verdict::SaddleNode;
    else if (!c1 && c2 && c3)
        r.verdict = SotomayorReport::Verdict::Transcritical;
    else
        r.verdict = SotomayorReport::Verdict::Inconclusive;
    return r;
}

HopfReport hopf_check(const SystemModel& model, const ParamPoint& mu0, const Tolerances& tols) {
    HopfReport h;
    h.e3 = equilibrium_E3(model, mu0, tols);
    const LocalField field(model, mu0);
    const StatePoint& x = h.e3.point;
    const Mat2 j = field.jacobian(x);
    h.p = 0.5 * j.trace();
    if (std::abs(h.p) > tols.hopf_p)
        throw NotOnHopfCurve("|p| = " + std::to_string(std::abs(h.p)) + " at E3");
    if (!(j.det() > 0.0)) throw NotOnHopfCurve("det <= 0 at E3, no complex pair");
    h.omega = std::sqrt(j.det() - h.p * h.p);

    // E3 moves with mu1: d xi / d mu1 = -J^-1 f_mu1
    const Hessian2 hs = field.hessian(x);
    const Vec2 grad_tr{hs[0](0, 0) + hs[1](0, 1), hs[0](0, 1) + hs[1](1, 1)};
    const Vec2 fmu = field.d_mu(x, 1);
    const Vec2 dxi = solve2(j, {-fmu[0], -fmu[1]});
    h.dp_dbif = 0.5 * (dot(grad_tr, dxi) + field.d_mu_jacobian(x, 1).trace());

    h.l1 = first_lyapunov(j, hs, field.third());
    return h;
}

CertificateSite certificate_site(const SystemModel& model, CurveId curve, const ParamPoint& mu0,
                                 const Tolerances& tols) {
    CertificateSite site;
    switch (curve) {
        case CurveId::DeltaPlus:
        case CurveId::DeltaMinus: {
            const LocalField field(model, mu0);
            site.xi0 = {field.theta() / (2.0 * field.bigN()), 0.0};
            site.id = EquilibriumId::E11;
            break;
        }
        case CurveId::T2:
            site.xi0 = equilibrium_E2(model, mu0, tols).point;
            site.id = EquilibriumId::E2;
            break;
        case CurveId::T3: {
            const auto e3 = equilibrium_E3(model, mu0, tols).point;
            const auto [e11, e12] = axis1_equilibria(model, mu0, tols);
            if (e11.status == Status::Absent) throw NumericalError("E11/E12 absent on T3");
            const bool first = std::abs(e11.point.xi1 - e3.xi1) <= std::abs(e12.point.xi1 - e3.xi1);
            site.xi0 = first ? e11.point : e12.point;
            site.id = first ? EquilibriumId::E11 : EquilibriumId::E12;
            break;
        }
        case CurveId::T4:
            site.xi0 = equilibrium_E1(model, mu0, tols).point;
            site.id = EquilibriumId::E1;
            site.bif_param = 2;
            break;
        case CurveId::Xplus:
        case CurveId::Xminus:
            site.bif_param = 2;
            break;
        case CurveId::Yplus:
        case CurveId::Yminus: break;
        case CurveId::H:
        case CurveId::H1:
            throw ValidationError("Hopf curves carry a Hopf certificate, not a Sotomayor one");
    }
    return site;
}

}  // namespace kolmo
