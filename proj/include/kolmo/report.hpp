#pragma once

#include <set>
#include <string>
#include <vector>

#include "kolmo/classify.hpp"
#include "kolmo/curves.hpp"
#include "kolmo/equilibria.hpp"
#include "kolmo/model.hpp"
#include "kolmo/tolerances.hpp"

namespace kolmo {

struct ParamWindow {
    double mu1_lo = 0.0, mu1_hi = 0.0;
    double mu2_lo = 0.0, mu2_hi = 0.0;
};

struct CellEntry {
    EquilibriumId id = EquilibriumId::O;
    Status status = Status::Absent;
    StatePoint point;
    bool classified = false;  ///< eigen and cls valid
    EigenReport eigen;
    StabilityClass cls;
    std::string error;  ///< non-empty if the equilibrium could not be computed
};

struct SweepCell {
    ParamPoint mu;
    bool region_ok = false;
    RegionLabel region;
    std::vector<CellEntry> inventory;  ///< one entry per case id, in case order
    std::string error;                 ///< first failure in the cell, if any
};

struct SweepGrid {
    ParamWindow window;
    int resolution = 0;
    DegeneracyCase dcase = DegeneracyCase::CaseA;
    std::vector<SweepCell> cells;  ///< index j * resolution + i, mu1 along i
};

/// Equilibria, classes and region at one parameter point. Numerical failures are
/// recorded in the cell, never thrown.
SweepCell analyze_point(const SystemModel& model, const ParamPoint& mu, const Tolerances& tols = {});

/// Cell centers mu1 = lo + (i + 1/2) d. The window corners must lie in the validity disk.
/// Cells are independent and computed with OpenMP; threads = 0 uses the runtime default.
SweepGrid sweep(const SystemModel& model, const ParamWindow& window, int resolution,
                const Tolerances& tols = {}, int threads = 0);

/// Single-threaded reference of sweep.
SweepGrid sweep_serial(const SystemModel& model, const ParamWindow& window, int resolution,
                       const Tolerances& tols = {});

/// s saddle, a attractor, r repeller, u nonhyperbolic, - virtual/absent/failed.
char class_code(const CellEntry& e);

/// Codes in case order, e.g. "rss--" for (O, E11, E12, E2, E3).
std::string class_tuple(const SweepCell& cell);

/// Tuples that may occur for hyperbolic cells: the 22 columns of the CaseA tables, or the
/// CaseB set obtained from the lowest-order eigenvalues of O, E1, E2, E3.
const std::set<std::string>& admissible_tuples(DegeneracyCase c);

/// In the admissible set, or contains 'u'.
bool tuple_admissible(DegeneracyCase c, const std::string& tuple);

struct CurveOverlay {
    CurveId id = CurveId::DeltaPlus;
    std::vector<std::vector<ParamPoint>> pieces;
};

/// curve_point samples of every case curve inside the window, split where sampling fails.
std::vector<CurveOverlay> curve_overlays(const SystemModel& model, const ParamWindow& window,
                                         int samples = 96, const Tolerances& tols = {});

}  // namespace kolmo
