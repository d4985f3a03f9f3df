#include "kolmo/classify.hpp"

#include <array>
#include <cmath>

#include "kolmo/errors.hpp"

namespace kolmo {

namespace {

using cd = std::complex<double>;
using CVec = std::array<cd, 2>;

cd inner(const CVec& p, const CVec& q) { return std::conj(p[0]) * q[0] + std::conj(p[1]) * q[1]; }

CVec bilinear(const Hessian2& h, const CVec& x, const CVec& y) {
    CVec r{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k) r[i] += h[i](j, k) * x[j] * y[k];
    return r;
}

CVec trilinear(const Third2& t, const CVec& x, const CVec& y, const CVec& z) {
    CVec r{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                for (int l = 0; l < 2; ++l) r[i] += t[i][j](k, l) * x[j] * y[k] * z[l];
    return r;
}

// (a - s I) x = b for complex shift s
CVec csolve(const Mat2& a, cd s, const CVec& b) {
    const cd a00 = a(0, 0) - s, a11 = a(1, 1) - s;
    const cd d = a00 * a11 - a(0, 1) * a(1, 0);
    if (std::abs(d) == 0.0) throw NumericalError("singular complex system in l1");
    return {(b[0] * a11 - a(0, 1) * b[1]) / d, (a00 * b[1] - b[0] * a(1, 0)) / d};
}

// null vector of (a - s I), from whichever row is larger
CVec null_vector(const Mat2& a, cd s) {
    const cd r00 = a(0, 0) - s, r01 = a(0, 1);
    const cd r10 = a(1, 0), r11 = a(1, 1) - s;
    if (std::abs(r00) + std::abs(r01) >= std::abs(r10) + std::abs(r11)) return {r01, -r00};
    return {-r11, r10};
}

}  // namespace

std::pair<std::complex<double>, std::complex<double>> EigenReport::eigenvalues() const {
    if (kind == Kind::RealPair) return {{lambda1, 0.0}, {lambda2, 0.0}};
    return {{p(), omega}, {p(), -omega}};
}

std::string to_string(const StabilityClass& c) {
    using T = StabilityClass::Tag;
    switch (c.tag) {
        case T::Saddle: return "saddle";
        case T::AttractorNode: return "attractor-node";
        case T::AttractorFocus: return "attractor-focus";
        case T::RepellerNode: return "repeller-node";
        case T::RepellerFocus: return "repeller-focus";
        case T::NonHyperbolic:
            return "nonhyperbolic(" + std::to_string(c.zero_count) + "," +
                   std::to_string(c.nonzero_sign) + ")";
    }
    return "?";
}

EigenReport eigen2(const Mat2& j) {
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c)
            if (!std::isfinite(j(r, c))) throw NonFinite("non-finite Jacobian entry");
    EigenReport e;
    e.trace = j.trace();
    e.det = j.det();
    const double p = 0.5 * e.trace;
    const double half = 0.5 * (j(0, 0) - j(1, 1));
    const double disc = half * half + j(0, 1) * j(1, 0);
    if (disc >= 0.0) {
        e.kind = EigenReport::Kind::RealPair;
        const double s = std::sqrt(disc);
        if (j(0, 1) * j(1, 0) == 0.0) {
            // triangular: the diagonal is exact
            e.lambda1 = std::max(j(0, 0), j(1, 1));
            e.lambda2 = std::min(j(0, 0), j(1, 1));
        } else {
            const double big = p >= 0.0 ? p + s : p - s;
            const double other = big != 0.0 ? e.det / big : 0.0;
            e.lambda1 = std::max(big, other);
            e.lambda2 = std::min(big, other);
        }
    } else {
        e.kind = EigenReport::Kind::ComplexPair;
        e.omega = std::sqrt(-disc);
    }
    return e;
}

StabilityClass stability_of(const Mat2& j, const EigenReport& e, const Tolerances& tols) {
    using T = StabilityClass::Tag;
    const double scale = j.frobenius();
    const double tol_det = tols.det * scale * scale;
    const double tol_p = tols.p * scale;
    const double p = e.p();
    auto sgn = [](double x) { return (x > 0.0) - (x < 0.0); };

    if (e.det < -tol_det) return {T::Saddle, 0, 0};
    if (std::abs(e.det) <= tol_det) {
        if (std::abs(p) <= tol_p) return {T::NonHyperbolic, 2, 0};
        return {T::NonHyperbolic, 1, sgn(e.trace)};
    }
    if (std::abs(p) <= tol_p) return {T::NonHyperbolic, 2, 0};
    const bool focus = p * p - e.det < -tol_det;
    if (p < 0.0) return {focus ? T::AttractorFocus : T::AttractorNode, 0, 0};
    return {focus ? T::RepellerFocus : T::RepellerNode, 0, 0};
}

std::pair<EigenReport, StabilityClass> classify_equilibrium(const SystemModel& model,
                                                            const ParamPoint& mu,
                                                            const Equilibrium& eq,
                                                            const Tolerances& tols) {
    if (eq.status == Status::Absent)
        throw DomainError("cannot classify absent equilibrium " + std::string(to_string(eq.id)));
    if (eq.provenance.residual > 1e-10)
        throw ConvergenceError("equilibrium " + std::string(to_string(eq.id)) + " is not refined",
                               eq.provenance.residual);
    const Mat2 j = jacobian(model, mu, eq.point);
    const EigenReport e = eigen2(j);
    return {e, stability_of(j, e, tols)};
}

CharQuantities char_quantities_E3(const SystemModel& model, const ParamPoint& mu,
                                  const Tolerances& tols) {
    CharQuantities q;
    q.e3 = equilibrium_E3(model, mu, tols);
    const LocalField field(model, mu);
    const Mat2 j = field.jacobian(q.e3.point);
    q.p = 0.5 * j.trace();
    q.L = j.det();
    const double x = q.e3.point.xi1, y = q.e3.point.xi2;
    q.p_pin = 0.5 * (y - field.theta() * x + 2.0 * field.bigN() * x * x -
                     field.bigM() * x * y + 2.0 * field.bigP() * y * y);
    if (std::abs(q.p - q.p_pin) > 1e-9)
        throw NumericalError("trace identity at E3 violated: p = " + std::to_string(q.p) +
                             ", closed form " + std::to_string(q.p_pin));
    return q;
}

double first_lyapunov(const Mat2& j, const Hessian2& h, const Third2& t) {
    const double p = 0.5 * j.trace();
    const double rad = j.det() - p * p;
    if (!(j.det() > 0.0) || !(rad > 0.0))
        throw NotOnHopfCurve("Jacobian has no complex pair (det " + std::to_string(j.det()) + ")");
    const double omega = std::sqrt(rad);
    const cd lam(p, omega);

    CVec q = null_vector(j, lam);
    const double nq = std::sqrt(std::norm(q[0]) + std::norm(q[1]));
    q = {q[0] / nq, q[1] / nq};
    CVec pv = null_vector(j.transposed(), std::conj(lam));
    const cd pq = inner(pv, q);
    pv = {pv[0] / std::conj(pq), pv[1] / std::conj(pq)};

    const CVec qb{std::conj(q[0]), std::conj(q[1])};
    const CVec b_qqb = bilinear(h, q, qb);
    const CVec b_qq = bilinear(h, q, q);
    const CVec s1 = csolve(j, 0.0, b_qqb);
    CVec s2 = csolve(j, cd(0.0, 2.0 * omega), b_qq);
    s2 = {-s2[0], -s2[1]};  // (2 i omega - J)^-1

    const cd c = inner(pv, trilinear(t, q, q, qb)) - 2.0 * inner(pv, bilinear(h, q, s1)) +
                 inner(pv, bilinear(h, qb, s2));
    return c.real() / (2.0 * omega);
}

double lyapunov1_numeric(const SystemModel& model, const ParamPoint& mu_hopf,
                         const Tolerances& tols) {
    const Equilibrium e3 = equilibrium_E3(model, mu_hopf, tols);
    const LocalField field(model, mu_hopf);
    const Mat2 j = field.jacobian(e3.point);
    const double p = 0.5 * j.trace();
    if (std::abs(p) > tols.hopf_p)
        throw NotOnHopfCurve("|p| = " + std::to_string(std::abs(p)) + " at E3 exceeds " +
                             std::to_string(tols.hopf_p));
    return first_lyapunov(j, field.hessian(e3.point), field.third());
}

}  // namespace kolmo
