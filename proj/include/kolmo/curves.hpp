#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kolmo/equilibria.hpp"
#include "kolmo/model.hpp"
#include "kolmo/tolerances.hpp"

namespace kolmo {

enum class CurveId { DeltaPlus, DeltaMinus, T2, T3, T4, H, H1, Xplus, Xminus, Yplus, Yminus };

std::string_view to_string(CurveId id);
std::optional<CurveId> curve_from_string(std::string_view s);

struct CurveSample {
    ParamPoint mu;
    double residual = 0.0;
    CurveId defining = CurveId::DeltaPlus;
};

struct RegionLabel {
    enum class Tag { R00, R10minus, R10plus, R20minus, R20plus, OnCurve, Q, QComplement, Outside };

    Tag tag = Tag::Outside;
    CurveId curve = CurveId::DeltaPlus;  ///< meaningful for OnCurve only

    friend bool operator==(const RegionLabel&, const RegionLabel&) = default;
};

std::string to_string(const RegionLabel& r);

/// Curves defined for the model's case. H needs delta(0) < 0, H1 needs theta(0) < 0.
std::vector<CurveId> case_curves(const SystemModel& model);

/// Half-plane constraint of the curve at mu (e.g. delta mu2 > 0 on T3).
bool side_condition_holds(const SystemModel& model, CurveId id, const ParamPoint& mu);

/// Exact defining function: theta^2 - 4 N mu1 (Delta), xi1(E3) (T2), xi2(E3) (T3, T4),
/// p(E3) (H, H1), mu2 (X), mu1 (Y). Throws CaseError, SideConditionError.
double curve_residual(const SystemModel& model, CurveId id, const ParamPoint& mu,
                      const Tolerances& tols = {});

/// Parameter of a curve point: mu2 for Delta, T3, H and Y; mu1 for T2, T4, H1 and X.
bool parameterized_by_mu2(CurveId id);

/// Point on the curve with parameter s, located by 1-D root finding on curve_residual
/// around the lowest-order formula. Throws BracketError, SideConditionError, CaseError.
CurveSample curve_point(const SystemModel& model, CurveId id, double s, const Tolerances& tols = {});

/// Lowest-order value of the free coordinate at parameter s.
double curve_lowest_terms(const SystemModel& model, CurveId id, double s);

RegionLabel region_of(const SystemModel& model, const ParamPoint& mu, const Tolerances& tols = {});

/// Refined E3 lies strictly inside the open quadrant (the set R in CaseA, Q in CaseB).
bool in_nontrivial_E3_region(const SystemModel& model, const ParamPoint& mu,
                             const Tolerances& tols = {});

}  // namespace kolmo
