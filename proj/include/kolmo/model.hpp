#pragma once

#include <array>
#include <string_view>

#include "kolmo/poly.hpp"
#include "kolmo/types.hpp"

namespace kolmo {

/// The two-parameter planar Kolmogorov family
///
///   xi1' = xi1 (mu1 - theta xi1 + gamma xi2 - M xi1 xi2 + N xi1^2)
///   xi2' = xi2 (mu2 - delta xi1 + xi2 + S xi1^2 + P xi2^2)
///
/// where every coefficient is an exact polynomial in (mu1, mu2).
/// Requires gamma(0) < 0; see validate().
struct SystemModel {
    BivariatePoly theta;
    BivariatePoly gamma;
    BivariatePoly delta;
    BivariatePoly bigM;
    BivariatePoly bigN;
    BivariatePoly bigS;
    BivariatePoly bigP;
    double radius = 0.1;

    friend bool operator==(const SystemModel&, const SystemModel&) = default;
};

enum class DegeneracyCase { CaseA, CaseB, NonDegenerate, DoublyDegenerate };

std::string_view to_string(DegeneracyCase c);

/// Throws ValidationError unless gamma(0) < 0 and radius > 0.
void validate(const SystemModel& model);

/// Exact zero tests on the stored constants theta(0), delta(0).
/// Throws ValidationError if gamma(0) >= 0.
DegeneracyCase classify_case(const SystemModel& model);

/// Throws CaseError unless the model is CaseA or CaseB.
DegeneracyCase require_analysable(const SystemModel& model);

/// Throws DomainError when |mu| exceeds the validity radius.
void check_domain(const SystemModel& model, const ParamPoint& mu);

/// Second xi-derivatives: h[i][j][k] = d^2 f_i / d xi_j d xi_k.
using Hessian2 = std::array<Mat2, 2>;
/// Third xi-derivatives: t[i][j][k][l].
using Third2 = std::array<std::array<Mat2, 2>, 2>;

/// The field frozen at one parameter value. All coefficient polynomials (and their
/// mu-gradients) are evaluated once, so repeated state queries are cheap. No domain
/// checks here; the free functions below add them.
class LocalField {
public:
    LocalField(const SystemModel& model, const ParamPoint& mu);

    const ParamPoint& mu() const { return mu_; }

    Vec2 f(const StatePoint& xi) const;
    Mat2 jacobian(const StatePoint& xi) const;
    Hessian2 hessian(const StatePoint& xi) const;
    Third2 third() const;
    Vec2 second_directional(const StatePoint& xi, const Vec2& v) const;

    /// d f / d mu_which at fixed xi.
    Vec2 d_mu(const StatePoint& xi, int which) const;
    /// State Jacobian of d f / d mu_which.
    Mat2 d_mu_jacobian(const StatePoint& xi, int which) const;

    /// Cofactors g with f_i = xi_i g_i.
    Vec2 cofactors(const StatePoint& xi) const;
    /// Jacobian of the cofactors; the equations for interior equilibria.
    Mat2 cofactor_jacobian(const StatePoint& xi) const;

    double theta() const { return theta_.value; }
    double gamma() const { return gamma_.value; }
    double delta() const { return delta_.value; }
    double bigM() const { return M_.value; }
    double bigN() const { return N_.value; }
    double bigS() const { return S_.value; }
    double bigP() const { return P_.value; }

private:
    ParamPoint mu_;
    PolyJet theta_, gamma_, delta_, M_, N_, S_, P_;
};

Vec2 eval_field(const SystemModel& model, const ParamPoint& mu, const StatePoint& xi);
Mat2 jacobian(const SystemModel& model, const ParamPoint& mu, const StatePoint& xi);
Vec2 second_directional(const SystemModel& model, const ParamPoint& mu, const StatePoint& xi,
                        const Vec2& v);
Vec2 d_mu(const SystemModel& model, const ParamPoint& mu, const StatePoint& xi, int which);

}  // namespace kolmo
