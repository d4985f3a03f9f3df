#pragma once

#include <string_view>

#include "kolmo/curves.hpp"
#include "kolmo/equilibria.hpp"
#include "kolmo/model.hpp"
#include "kolmo/tolerances.hpp"

namespace kolmo {

struct SotomayorReport {
    enum class Verdict { SaddleNode, Transcritical, Inconclusive };

    double zero_eigenvalue = 0.0;
    Vec2 v{};  ///< right null vector, unit length, largest component positive
    Vec2 w{};  ///< left null vector, same normalization
    double C1 = 0.0;
    double C2 = 0.0;
    double C3 = 0.0;
    double tol = 0.0;  ///< threshold actually applied to |C_i|
    Verdict verdict = Verdict::Inconclusive;
};

std::string_view to_string(SotomayorReport::Verdict v);

/// C1 = w.f_mu, C2 = w.(D f_mu v), C3 = w.D^2 f(v, v) at (xi0, mu0) with mu_{bif_param}
/// as the bifurcation parameter. Throws NotSingular, DoubleZero.
SotomayorReport sotomayor_check(const SystemModel& model, const ParamPoint& mu0,
                                const StatePoint& xi0, int bif_param, const Tolerances& tols = {});

struct HopfReport {
    double omega = 0.0;
    double p = 0.0;        ///< real part at the test point
    double dp_dbif = 0.0;  ///< d p / d mu1 along the E3 branch
    double l1 = 0.0;
    Equilibrium e3;
};

/// Throws NotOnHopfCurve unless |p(E3)| <= tols.hopf_p and det > 0.
HopfReport hopf_check(const SystemModel& model, const ParamPoint& mu0, const Tolerances& tols = {});

/// The equilibrium at which the curve's certificate is taken, and the bifurcation
/// parameter used there: Delta -> double root, T2 -> E2, T3 -> E11/E12 nearest E3,
/// T4 -> E1, axes -> O. mu2 is the parameter on X and T4, mu1 elsewhere.
struct CertificateSite {
    StatePoint xi0;
    EquilibriumId id = EquilibriumId::O;
    int bif_param = 1;
};

CertificateSite certificate_site(const SystemModel& model, CurveId curve, const ParamPoint& mu0,
                                 const Tolerances& tols = {});

}  // namespace kolmo
