#include "kolmo/curves.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "kolmo/classify.hpp"
#include "kolmo/errors.hpp"
#include "kolmo/roots.hpp"

namespace kolmo {

namespace {

constexpr std::array<std::pair<CurveId, std::string_view>, 11> kNames{{
    {CurveId::DeltaPlus, "DeltaPlus"},
    {CurveId::DeltaMinus, "DeltaMinus"},
    {CurveId::T2, "T2"},
    {CurveId::T3, "T3"},
    {CurveId::T4, "T4"},
    {CurveId::H, "H"},
    {CurveId::H1, "H1"},
    {CurveId::Xplus, "Xplus"},
    {CurveId::Xminus, "Xminus"},
    {CurveId::Yplus, "Yplus"},
    {CurveId::Yminus, "Yminus"},
}};

bool case_a_only(CurveId id) {
    return id == CurveId::DeltaPlus || id == CurveId::DeltaMinus || id == CurveId::T3 ||
           id == CurveId::H;
}

bool case_b_only(CurveId id) { return id == CurveId::T4 || id == CurveId::H1; }

void require_curve(const SystemModel& model, CurveId id) {
    const auto c = require_analysable(model);
    if ((c == DegeneracyCase::CaseA && case_b_only(id)) ||
        (c == DegeneracyCase::CaseB && case_a_only(id)))
        throw CaseError("curve " + std::string(to_string(id)) + " is not defined in " +
                        std::string(to_string(c)));
    if (id == CurveId::H && !(model.delta.at_origin() < 0.0))
        throw SideConditionError("H exists only when delta(0) < 0");
    if (id == CurveId::H1 && !(model.theta.at_origin() < 0.0))
        throw SideConditionError("H1 exists only when theta(0) < 0");
}

double residual_unchecked(const SystemModel& model, CurveId id, const ParamPoint& mu,
                          const Tolerances& tols) {
    switch (id) {
        case CurveId::DeltaPlus:
        case CurveId::DeltaMinus: {
            const double th = model.theta(mu);
            return th * th - 4.0 * model.bigN(mu) * mu.mu1;
        }
        case CurveId::T2: return equilibrium_E3(model, mu, tols).point.xi1;
        case CurveId::T3:
        case CurveId::T4: return equilibrium_E3(model, mu, tols).point.xi2;
        case CurveId::H:
        case CurveId::H1: {
            const auto e3 = equilibrium_E3(model, mu, tols);
            return 0.5 * LocalField(model, mu).jacobian(e3.point).trace();
        }
        case CurveId::Xplus:
        case CurveId::Xminus: return mu.mu2;
        case CurveId::Yplus:
        case CurveId::Yminus: return mu.mu1;
    }
    return 0.0;
}

ParamPoint at(CurveId id, double s, double t) {
    return parameterized_by_mu2(id) ? ParamPoint{t, s} : ParamPoint{s, t};
}

}  // namespace

std::string_view to_string(CurveId id) {
    for (const auto& [k, name] : kNames)
        if (k == id) return name;
    return "?";
}

std::optional<CurveId> curve_from_string(std::string_view s) {
    for (const auto& [k, name] : kNames)
        if (name == s) return k;
    return std::nullopt;
}

std::string to_string(const RegionLabel& r) {
    using T = RegionLabel::Tag;
    switch (r.tag) {
        case T::R00: return "R00";
        case T::R10minus: return "R10minus";
        case T::R10plus: return "R10plus";
        case T::R20minus: return "R20minus";
        case T::R20plus: return "R20plus";
        case T::OnCurve: return "OnCurve:" + std::string(to_string(r.curve));
        case T::Q: return "Q";
        case T::QComplement: return "QComplement";
        case T::Outside: return "Outside";
    }
    return "?";
}

std::vector<CurveId> case_curves(const SystemModel& model) {
    using C = CurveId;
    const auto c = require_analysable(model);
    std::vector<CurveId> out;
    if (c == DegeneracyCase::CaseA) {
        out = {C::DeltaPlus, C::DeltaMinus, C::T2, C::T3};
        if (model.delta.at_origin() < 0.0) out.push_back(C::H);
    } else {
        out = {C::T2, C::T4};
        if (model.theta.at_origin() < 0.0) out.push_back(C::H1);
    }
    for (C id : {C::Xplus, C::Xminus, C::Yplus, C::Yminus}) out.push_back(id);
    return out;
}

bool parameterized_by_mu2(CurveId id) {
    switch (id) {
        case CurveId::DeltaPlus:
        case CurveId::DeltaMinus:
        case CurveId::T3:
        case CurveId::H:
        case CurveId::Yplus:
        case CurveId::Yminus: return true;
        default: return false;
    }
}

bool side_condition_holds(const SystemModel& model, CurveId id, const ParamPoint& mu) {
    switch (id) {
        case CurveId::DeltaPlus: return mu.mu2 > 0.0;
        case CurveId::DeltaMinus: return mu.mu2 < 0.0;
        case CurveId::T2: return mu.mu1 > 0.0;
        case CurveId::T3: return model.delta.at_origin() * mu.mu2 > 0.0;
        case CurveId::T4: return model.theta.at_origin() * mu.mu1 > 0.0;
        case CurveId::H: return mu.mu2 < 0.0;
        case CurveId::H1: return true;
        case CurveId::Xplus: return mu.mu1 > 0.0;
        case CurveId::Xminus: return mu.mu1 < 0.0;
        case CurveId::Yplus: return mu.mu2 > 0.0;
        case CurveId::Yminus: return mu.mu2 < 0.0;
    }
    return false;
}

double curve_residual(const SystemModel& model, CurveId id, const ParamPoint& mu,
                      const Tolerances& tols) {
    require_curve(model, id);
    check_domain(model, mu);
    if (!side_condition_holds(model, id, mu))
        throw SideConditionError("half-plane condition of " + std::string(to_string(id)) +
                                 " fails at the given point");
    return residual_unchecked(model, id, mu, tols);
}

double curve_lowest_terms(const SystemModel& model, CurveId id, double s) {
    require_curve(model, id);
    const double ga = model.gamma.at_origin();
    switch (id) {
        case CurveId::DeltaPlus:
        case CurveId::DeltaMinus: {
            const double th2 = model.theta.coeff(0, 1);
            return th2 * th2 * s * s / (4.0 * model.bigN.at_origin());
        }
        case CurveId::T2: return s / ga;
        case CurveId::T3: return ga * derived_constants(model).sigma1 * s * s;
        case CurveId::H: return 2.0 * ga * derived_constants(model).k3 * s * s;
        case CurveId::T4: return derived_constants(model).sigma2 * s * s;
        case CurveId::H1: return s / (ga - 1.0);
        default: return 0.0;
    }
}

CurveSample curve_point(const SystemModel& model, CurveId id, double s, const Tolerances& tols) {
    require_curve(model, id);
    const double center = curve_lowest_terms(model, id, s);
    if (!side_condition_holds(model, id, at(id, s, center)))
        throw SideConditionError("parameter s = " + std::to_string(s) + " violates the half-plane of " +
                                 std::string(to_string(id)));
    const double r = model.radius;
    if (std::abs(s) >= r) throw DomainError("curve parameter outside the validity radius");
    const double lim = std::sqrt(r * r - s * s) * (1.0 - 1e-12);

    switch (id) {
        case CurveId::Xplus:
        case CurveId::Xminus:
        case CurveId::Yplus:
        case CurveId::Yminus: return {at(id, s, 0.0), 0.0, id};
        default: break;
    }

    auto f = [&](double t) { return residual_unchecked(model, id, at(id, s, t), tols); };
    const double width = std::max({1e-3 * std::abs(center), 1e-6 * s * s, 1e-300});
    const auto root = root_near(f, center, width, -lim, lim);
    const ParamPoint mu = at(id, s, root.x);
    const double res = f(root.x);
    if (std::abs(res) > tols.on_curve)
        throw ConvergenceError("curve point on " + std::string(to_string(id)) +
                                   " did not reach the residual tolerance",
                               res);
    return {mu, res, id};
}

RegionLabel region_of(const SystemModel& model, const ParamPoint& mu, const Tolerances& tols) {
    using T = RegionLabel::Tag;
    const auto c = require_analysable(model);
    if (!std::isfinite(mu.mu1) || !std::isfinite(mu.mu2))
        throw DomainError("non-finite parameter point");
    if (mu.norm() > model.radius * (1.0 + 1e-12)) return {T::Outside, CurveId::DeltaPlus};

    const Equilibrium e3 = equilibrium_E3(model, mu, tols);
    const LocalField field(model, mu);

    for (CurveId id : case_curves(model)) {
        if (!side_condition_holds(model, id, mu)) continue;
        double res = 0.0;
        switch (id) {
            case CurveId::T2: res = e3.point.xi1; break;
            case CurveId::T3:
            case CurveId::T4: res = e3.point.xi2; break;
            case CurveId::H:
            case CurveId::H1: res = 0.5 * field.jacobian(e3.point).trace(); break;
            default: res = residual_unchecked(model, id, mu, tols); break;
        }
        if (std::abs(res) <= tols.on_curve) return {T::OnCurve, id};
    }

    if (c == DegeneracyCase::CaseB) {
        const bool q = e3.point.xi1 > 0.0 && e3.point.xi2 > 0.0;
        return {q ? T::Q : T::QComplement, CurveId::DeltaPlus};
    }

    const double th = field.theta();
    const double n = field.bigN();
    const double disc = th * th - 4.0 * n * mu.mu1;
    const bool right_of_t3 = e3.point.xi2 > 0.0;
    if (disc > 0.0 && mu.mu1 * n < 0.0) {
        const bool plus = right_of_t3 && field.delta() * mu.mu2 > 0.0;
        return {plus ? T::R10plus : T::R10minus, CurveId::DeltaPlus};
    }
    if (disc > 0.0 && mu.mu1 * n > 0.0 && th * n > 0.0)
        return {right_of_t3 ? T::R20plus : T::R20minus, CurveId::DeltaPlus};
    return {T::R00, CurveId::DeltaPlus};
}

bool in_nontrivial_E3_region(const SystemModel& model, const ParamPoint& mu,
                             const Tolerances& tols) {
    const auto e3 = equilibrium_E3(model, mu, tols);
    return e3.point.xi1 > 0.0 && e3.point.xi2 > 0.0;
}

}  // namespace kolmo
