#include "kolmo/equilibria.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "kolmo/errors.hpp"
#include "kolmo/roots.hpp"

namespace kolmo {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kEps = std::numeric_limits<double>::epsilon();

DegeneracyCase need_case(const SystemModel& model, DegeneracyCase want, const char* what) {
    const auto c = require_analysable(model);
    if (c != want)
        throw CaseError(std::string(what) + " requires " + std::string(to_string(want)) +
                        ", model is " + std::string(to_string(c)));
    return c;
}

Equilibrium make(EquilibriumId id, StatePoint p, Provenance prov, double axis_tie) {
    return {id, p, properness(p, axis_tie), prov};
}

}  // namespace

std::string_view to_string(EquilibriumId id) {
    switch (id) {
        case EquilibriumId::O: return "O";
        case EquilibriumId::E1: return "E1";
        case EquilibriumId::E2: return "E2";
        case EquilibriumId::E11: return "E11";
        case EquilibriumId::E12: return "E12";
        case EquilibriumId::E3: return "E3";
    }
    return "?";
}

std::string_view to_string(Status s) {
    switch (s) {
        case Status::Proper: return "proper";
        case Status::Virtual: return "virtual";
        case Status::Absent: return "absent";
    }
    return "?";
}

DerivedConstants derived_constants(const SystemModel& model) {
    const auto c = require_analysable(model);
    DerivedConstants d;
    const double ga = model.gamma.at_origin();
    const double n = model.bigN.at_origin();
    if (c == DegeneracyCase::CaseA) {
        const double de = model.delta.at_origin();
        const double th2 = model.theta.coeff(0, 1);
        d.sigma1 = (de * th2 - n) / (ga * de * de);
        d.twoN_minus_delta_theta2 = 2.0 * n - de * th2;
        d.k3 = -(n - de * th2 - ga * d.twoN_minus_delta_theta2) / (2.0 * ga * de * de);
    } else {
        const double th = model.theta.at_origin();
        const double de1 = model.delta.coeff(1, 0);
        d.sigma2 = (th * de1 - model.bigS.at_origin()) / (th * th);
    }
    return d;
}

Status properness(const StatePoint& p, double axis_tie) {
    if (!std::isfinite(p.xi1) || !std::isfinite(p.xi2)) return Status::Absent;
    return (p.xi1 >= -axis_tie && p.xi2 >= -axis_tie) ? Status::Proper : Status::Virtual;
}

double discriminant(const SystemModel& model, const ParamPoint& mu) {
    need_case(model, DegeneracyCase::CaseA, "discriminant");
    check_domain(model, mu);
    const double th = model.theta(mu);
    return th * th - 4.0 * model.bigN(mu) * mu.mu1;
}

std::pair<Equilibrium, Equilibrium> axis1_equilibria(const SystemModel& model,
                                                     const ParamPoint& mu,
                                                     const Tolerances& tols) {
    need_case(model, DegeneracyCase::CaseA, "axis1_equilibria");
    check_domain(model, mu);
    const double th = model.theta(mu);
    const double n = model.bigN(mu);
    if (n == 0.0) throw DomainError("N(mu) vanishes; the axis quadratic degenerates");
    double disc = th * th - 4.0 * n * mu.mu1;
    // roundoff level of the subtraction
    if (disc < 0.0 && -disc <= 4.0 * kEps * (th * th + std::abs(4.0 * n * mu.mu1))) disc = 0.0;

    if (disc < 0.0) {
        const Equilibrium absent{EquilibriumId::E11, {kNaN, 0.0}, Status::Absent, {}};
        Equilibrium e12 = absent;
        e12.id = EquilibriumId::E12;
        return {absent, e12};
    }

    const double sq = std::sqrt(disc);
    double x11 = 0.0, x12 = 0.0;
    if (th >= 0.0) {
        const double q = 0.5 * (th + sq);
        if (q != 0.0) {
            x11 = q / n;
            x12 = mu.mu1 / q;
        }
    } else {
        const double q = 0.5 * (th - sq);
        x12 = q / n;
        x11 = mu.mu1 / q;
    }
    auto res = [&](double x) { return std::abs(x * (mu.mu1 - th * x + n * x * x)); };
    return {make(EquilibriumId::E11, {x11, 0.0}, {Provenance::Kind::Exact, res(x11)}, tols.axis_tie),
            make(EquilibriumId::E12, {x12, 0.0}, {Provenance::Kind::Exact, res(x12)}, tols.axis_tie)};
}

Equilibrium equilibrium_O() {
    return {EquilibriumId::O, {0.0, 0.0}, Status::Proper, {Provenance::Kind::Exact, 0.0}};
}

Equilibrium equilibrium_E2(const SystemModel& model, const ParamPoint& mu, const Tolerances& tols) {
    check_domain(model, mu);
    const double p = model.bigP(mu);
    auto g = [&](double y) {
        return std::pair{mu.mu2 + y + p * y * y, 1.0 + 2.0 * p * y};
    };
    const auto r = scalar_newton(g, -mu.mu2, tols.newton);
    return make(EquilibriumId::E2, {0.0, r.x},
                {Provenance::Kind::NewtonRefined, std::abs(r.x) * r.residual}, tols.axis_tie);
}

Equilibrium equilibrium_E1(const SystemModel& model, const ParamPoint& mu, const Tolerances& tols) {
    need_case(model, DegeneracyCase::CaseB, "equilibrium_E1");
    check_domain(model, mu);
    const double th = model.theta(mu);
    const double n = model.bigN(mu);
    auto g = [&](double x) {
        return std::pair{mu.mu1 - th * x + n * x * x, -th + 2.0 * n * x};
    };
    const auto r = scalar_newton(g, mu.mu1 / model.theta.at_origin(), tols.newton);
    return make(EquilibriumId::E1, {r.x, 0.0},
                {Provenance::Kind::NewtonRefined, std::abs(r.x) * r.residual}, tols.axis_tie);
}

StatePoint e3_lowest_terms(const SystemModel& model, const ParamPoint& mu) {
    const auto c = require_analysable(model);
    const auto d = derived_constants(model);
    const double ga = model.gamma.at_origin();
    if (c == DegeneracyCase::CaseA) {
        const double de = model.delta.at_origin();
        return {-(mu.mu1 - ga * mu.mu2) / (ga * de),
                -(mu.mu1 - ga * d.sigma1 * mu.mu2 * mu.mu2) / ga};
    }
    const double th = model.theta.at_origin();
    return {(mu.mu1 - ga * mu.mu2) / th, -mu.mu2 + d.sigma2 * mu.mu1 * mu.mu1};
}

Equilibrium equilibrium_E3(const SystemModel& model, const ParamPoint& mu, const Tolerances& tols) {
    require_analysable(model);
    check_domain(model, mu);
    const LocalField field(model, mu);
    auto eval = [&](const Vec2& x, Vec2& fx, Mat2& jx) {
        fx = field.cofactors(to_state(x));
        jx = field.cofactor_jacobian(to_state(x));
    };
    NewtonOptions opts;
    opts.tol = tols.newton;
    const auto r = newton2(eval, to_vec(e3_lowest_terms(model, mu)), opts);
    const StatePoint p = to_state(r.x);
    const double field_res = max_norm(field.f(p));
    return make(EquilibriumId::E3, p, {Provenance::Kind::NewtonRefined, field_res}, tols.axis_tie);
}

std::vector<EquilibriumId> case_ids(DegeneracyCase c) {
    using E = EquilibriumId;
    if (c == DegeneracyCase::CaseA) return {E::O, E::E11, E::E12, E::E2, E::E3};
    if (c == DegeneracyCase::CaseB) return {E::O, E::E1, E::E2, E::E3};
    throw CaseError("no equilibrium inventory for " + std::string(to_string(c)));
}

std::vector<Equilibrium> all_equilibria(const SystemModel& model, const ParamPoint& mu,
                                        const Tolerances& tols) {
    const auto c = require_analysable(model);
    std::vector<Equilibrium> out;
    out.push_back(equilibrium_O());
    if (c == DegeneracyCase::CaseA) {
        auto [e11, e12] = axis1_equilibria(model, mu, tols);
        out.push_back(e11);
        out.push_back(e12);
    } else {
        out.push_back(equilibrium_E1(model, mu, tols));
    }
    out.push_back(equilibrium_E2(model, mu, tols));
    out.push_back(equilibrium_E3(model, mu, tols));
    return out;
}

}  // namespace kolmo
