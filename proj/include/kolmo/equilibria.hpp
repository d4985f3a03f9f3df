#pragma once

#include <string_view>
#include <utility>
#include <vector>

#include "kolmo/model.hpp"
#include "kolmo/tolerances.hpp"

namespace kolmo {

enum class EquilibriumId { O, E1, E2, E11, E12, E3 };

std::string_view to_string(EquilibriumId id);

enum class Status { Proper, Virtual, Absent };

std::string_view to_string(Status s);

struct Provenance {
    enum class Kind { Exact, LowestTerms, NewtonRefined };
    Kind kind = Kind::Exact;
    double residual = 0.0;
};

struct Equilibrium {
    EquilibriumId id = EquilibriumId::O;
    StatePoint point;
    Status status = Status::Proper;
    Provenance provenance;
};

/// Constants built from the constant and degree-1 coefficients of the model.
struct DerivedConstants {
    double sigma1 = 0.0;                   ///< CaseA: (delta theta2 - N) / (gamma delta^2)
    double sigma2 = 0.0;                   ///< CaseB: (theta delta1 - S) / theta^2
    double k3 = 0.0;                       ///< CaseA: coefficient of mu2^2 in p at E3
    double twoN_minus_delta_theta2 = 0.0;  ///< CaseA: 2N - delta theta2
};

/// Throws CaseError for the wrong case.
DerivedConstants derived_constants(const SystemModel& model);

/// Proper iff both coordinates >= -axis_tie.
Status properness(const StatePoint& p, double axis_tie = Tolerances{}.axis_tie);

/// theta(mu)^2 - 4 N(mu) mu1. CaseA only.
double discriminant(const SystemModel& model, const ParamPoint& mu);

/// Both roots of N(mu) xi^2 - theta(mu) xi + mu1 = 0 on the xi1-axis:
/// E11 = (theta + sqrt(Delta)) / 2N, E12 = (theta - sqrt(Delta)) / 2N. Absent when Delta < 0.
std::pair<Equilibrium, Equilibrium> axis1_equilibria(const SystemModel& model,
                                                     const ParamPoint& mu,
                                                     const Tolerances& tols = {});

Equilibrium equilibrium_O();

/// Root of mu2 + xi2 + P(mu) xi2^2 = 0 through the origin, Newton from -mu2.
Equilibrium equilibrium_E2(const SystemModel& model, const ParamPoint& mu,
                           const Tolerances& tols = {});

/// Interior equilibrium: Newton on the cofactor system from the case's lowest-order seed.
Equilibrium equilibrium_E3(const SystemModel& model, const ParamPoint& mu,
                           const Tolerances& tols = {});

/// CaseB axis equilibrium near the origin, Newton from mu1 / theta(0).
Equilibrium equilibrium_E1(const SystemModel& model, const ParamPoint& mu,
                           const Tolerances& tols = {});

/// Lowest-order approximation of E3 (the Newton seed).
StatePoint e3_lowest_terms(const SystemModel& model, const ParamPoint& mu);

/// The equilibria relevant for the model's case, in the fixed order
/// O, E11, E12, E2, E3 (CaseA) or O, E1, E2, E3 (CaseB).
std::vector<Equilibrium> all_equilibria(const SystemModel& model, const ParamPoint& mu,
                                        const Tolerances& tols = {});

/// Ids in the order used by all_equilibria.
std::vector<EquilibriumId> case_ids(DegeneracyCase c);

}  // namespace kolmo
