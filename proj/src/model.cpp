#include "kolmo/model.hpp"

#include <cmath>
#include <string>

#include "kolmo/errors.hpp"

namespace kolmo {

std::string_view to_string(DegeneracyCase c) {
    switch (c) {
        case DegeneracyCase::CaseA: return "CaseA";
        case DegeneracyCase::CaseB: return "CaseB";
        case DegeneracyCase::NonDegenerate: return "NonDegenerate";
        case DegeneracyCase::DoublyDegenerate: return "DoublyDegenerate";
    }
    return "?";
}

void validate(const SystemModel& model) {
    if (!(model.gamma.at_origin() < 0.0))
        throw ValidationError("gamma(0) must be negative, got " +
                              std::to_string(model.gamma.at_origin()));
    if (!(model.radius > 0.0) || !std::isfinite(model.radius))
        throw ValidationError("validity radius must be positive and finite");
}

DegeneracyCase classify_case(const SystemModel& model) {
    validate(model);
    const bool theta_zero = model.theta.at_origin() == 0.0;
    const bool delta_zero = model.delta.at_origin() == 0.0;
    if (theta_zero && delta_zero) return DegeneracyCase::DoublyDegenerate;
    if (theta_zero) return DegeneracyCase::CaseA;
    if (delta_zero) return DegeneracyCase::CaseB;
    return DegeneracyCase::NonDegenerate;
}

DegeneracyCase require_analysable(const SystemModel& model) {
    const auto c = classify_case(model);
    if (c == DegeneracyCase::DoublyDegenerate)
        throw CaseError("theta(0) = delta(0) = 0 is not analysable (E3 is not locally unique)");
    if (c == DegeneracyCase::NonDegenerate)
        throw CaseError("theta(0) delta(0) != 0: the non-degenerate family is not handled");
    return c;
}

void check_domain(const SystemModel& model, const ParamPoint& mu) {
    if (!std::isfinite(mu.mu1) || !std::isfinite(mu.mu2))
        throw DomainError("non-finite parameter point");
    if (mu.norm() > model.radius * (1.0 + 1e-12))
        throw DomainError("|mu| = " + std::to_string(mu.norm()) + " exceeds validity radius " +
                          std::to_string(model.radius));
}

LocalField::LocalField(const SystemModel& model, const ParamPoint& mu)
    : mu_(mu),
      theta_(model.theta.jet(mu)),
      gamma_(model.gamma.jet(mu)),
      delta_(model.delta.jet(mu)),
      M_(model.bigM.jet(mu)),
      N_(model.bigN.jet(mu)),
      S_(model.bigS.jet(mu)),
      P_(model.bigP.jet(mu)) {}

Vec2 LocalField::cofactors(const StatePoint& p) const {
    const double x = p.xi1, y = p.xi2;
    return {mu_.mu1 - theta_.value * x + gamma_.value * y - M_.value * x * y + N_.value * x * x,
            mu_.mu2 - delta_.value * x + y + S_.value * x * x + P_.value * y * y};
}

Mat2 LocalField::cofactor_jacobian(const StatePoint& p) const {
    const double x = p.xi1, y = p.xi2;
    Mat2 j;
    j(0, 0) = -theta_.value - M_.value * y + 2.0 * N_.value * x;
    j(0, 1) = gamma_.value - M_.value * x;
    j(1, 0) = -delta_.value + 2.0 * S_.value * x;
    j(1, 1) = 1.0 + 2.0 * P_.value * y;
    return j;
}

Vec2 LocalField::f(const StatePoint& p) const {
    const Vec2 g = cofactors(p);
    return {p.xi1 * g[0], p.xi2 * g[1]};
}

Mat2 LocalField::jacobian(const StatePoint& p) const {
    const Vec2 g = cofactors(p);
    const Mat2 dg = cofactor_jacobian(p);
    Mat2 j;
    j(0, 0) = g[0] + p.xi1 * dg(0, 0);
    j(0, 1) = p.xi1 * dg(0, 1);
    j(1, 0) = p.xi2 * dg(1, 0);
    j(1, 1) = g[1] + p.xi2 * dg(1, 1);
    return j;
}

Hessian2 LocalField::hessian(const StatePoint& p) const {
    const double x = p.xi1, y = p.xi2;
    Hessian2 h{};
    h[0](0, 0) = -2.0 * theta_.value - 2.0 * M_.value * y + 6.0 * N_.value * x;
    h[0](0, 1) = h[0](1, 0) = gamma_.value - 2.0 * M_.value * x;
    h[0](1, 1) = 0.0;
    h[1](0, 0) = 2.0 * S_.value * y;
    h[1](0, 1) = h[1](1, 0) = -delta_.value + 2.0 * S_.value * x;
    h[1](1, 1) = 2.0 + 6.0 * P_.value * y;
    return h;
}

Third2 LocalField::third() const {
    Third2 t{};
    // f1 = ... - M x^2 y + N x^3
    t[0][0](0, 0) = 6.0 * N_.value;
    t[0][0](0, 1) = t[0][0](1, 0) = t[0][1](0, 0) = -2.0 * M_.value;
    // f2 = ... + S x^2 y + P y^3
    t[1][0](0, 1) = t[1][0](1, 0) = t[1][1](0, 0) = 2.0 * S_.value;
    t[1][1](1, 1) = 6.0 * P_.value;
    return t;
}

Vec2 LocalField::second_directional(const StatePoint& p, const Vec2& v) const {
    const Hessian2 h = hessian(p);
    return {dot(v, h[0].apply(v)), dot(v, h[1].apply(v))};
}

namespace {

double partial(const PolyJet& j, int which) { return which == 1 ? j.d1 : j.d2; }

void check_which(int which) {
    if (which != 1 && which != 2) throw ValidationError("parameter index must be 1 or 2");
}

}  // namespace

Vec2 LocalField::d_mu(const StatePoint& p, int which) const {
    check_which(which);
    const double x = p.xi1, y = p.xi2;
    const double th = partial(theta_, which), ga = partial(gamma_, which),
                 de = partial(delta_, which), m = partial(M_, which), n = partial(N_, which),
                 s = partial(S_, which), pp = partial(P_, which);
    const double e1 = which == 1 ? 1.0 : 0.0;
    const double e2 = which == 2 ? 1.0 : 0.0;
    return {x * (e1 - th * x + ga * y - m * x * y + n * x * x),
            y * (e2 - de * x + s * x * x + pp * y * y)};
}

Mat2 LocalField::d_mu_jacobian(const StatePoint& p, int which) const {
    check_which(which);
    const double x = p.xi1, y = p.xi2;
    const double th = partial(theta_, which), ga = partial(gamma_, which),
                 de = partial(delta_, which), m = partial(M_, which), n = partial(N_, which),
                 s = partial(S_, which), pp = partial(P_, which);
    const double e1 = which == 1 ? 1.0 : 0.0;
    const double e2 = which == 2 ? 1.0 : 0.0;
    Mat2 j;
    j(0, 0) = e1 - 2.0 * th * x + ga * y - 2.0 * m * x * y + 3.0 * n * x * x;
    j(0, 1) = ga * x - m * x * x;
    j(1, 0) = -de * y + 2.0 * s * x * y;
    j(1, 1) = e2 - de * x + s * x * x + 3.0 * pp * y * y;
    return j;
}

namespace {

Vec2 finite_or_throw(const Vec2& v) {
    if (!std::isfinite(v[0]) || !std::isfinite(v[1])) throw NonFinite("field evaluation overflowed");
    return v;
}

}  // namespace

Vec2 eval_field(const SystemModel& model, const ParamPoint& mu, const StatePoint& xi) {
    check_domain(model, mu);
    return finite_or_throw(LocalField(model, mu).f(xi));
}

Mat2 jacobian(const SystemModel& model, const ParamPoint& mu, const StatePoint& xi) {
    check_domain(model, mu);
    const Mat2 j = LocalField(model, mu).jacobian(xi);
    finite_or_throw({j(0, 0), j(0, 1)});
    finite_or_throw({j(1, 0), j(1, 1)});
    return j;
}

Vec2 second_directional(const SystemModel& model, const ParamPoint& mu, const StatePoint& xi,
                        const Vec2& v) {
    check_domain(model, mu);
    return finite_or_throw(LocalField(model, mu).second_directional(xi, v));
}

Vec2 d_mu(const SystemModel& model, const ParamPoint& mu, const StatePoint& xi, int which) {
    check_domain(model, mu);
    return finite_or_throw(LocalField(model, mu).d_mu(xi, which));
}

}  // namespace kolmo
