#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "kolmo/classify.hpp"
#include "kolmo/equilibria.hpp"
#include "kolmo/model.hpp"

namespace kolmo {

struct TrajectorySample {
    double t = 0.0;
    StatePoint xi;
};

struct Trajectory {
    enum class Terminal { TimeLimit, EscapedRadius, ConvergedToEquilibrium, HitAxis };

    std::vector<TrajectorySample> samples;
    Terminal terminal = Terminal::TimeLimit;
    std::optional<EquilibriumId> converged_to;
    /// Started strictly inside the quadrant and came within 1e-12 of an axis. Not terminal:
    /// the axes are invariant, so this only flags an under-resolved approach.
    bool hit_axis = false;
    int rejected_steps = 0;
};

std::string_view to_string(Trajectory::Terminal t);

struct IntegrateOptions {
    double rtol = 1e-8;
    double atol = 1e-10;
    double h0 = 1e-3;
    double h_min = 1e-14;
    double escape_radius = 1.0;
    double converge_f = 1e-10;     ///< |f|_inf at convergence
    double converge_dist = 1e-6;   ///< distance to a known equilibrium at convergence
    long max_steps = 2'000'000;
    /// Equilibria tested for convergence (typically the proper ones at mu).
    std::vector<Equilibrium> known;
};

/// Dormand-Prince 5(4) with max-norm error control. Steps that would carry a
/// non-negative coordinate below zero are rejected. Throws StepUnderflow.
Trajectory integrate(const SystemModel& model, const ParamPoint& mu, const StatePoint& xi0,
                     double t_max, const IntegrateOptions& opts = {});

struct Window {
    double x0 = 0.0, x1 = 0.0;
    double y0 = 0.0, y1 = 0.0;

    bool degenerate() const { return !(x1 > x0) || !(y1 > y0); }
};

using Polyline = std::vector<StatePoint>;

struct Nullclines {
    std::vector<Polyline> f1;  ///< zero set of xi1' (axis xi1 = 0 included)
    std::vector<Polyline> f2;  ///< zero set of xi2' (axis xi2 = 0 included)
};

/// Marching squares on the cofactors g1, g2 with secant-polished vertices; the axes are
/// added analytically. resolution >= 16 cells per side.
Nullclines nullclines(const SystemModel& model, const ParamPoint& mu, const Window& window,
                      int resolution);

struct PortraitSpec {
    Window window{0.0, 0.1, 0.0, 0.1};
    int seeds_per_side = 6;
    double t_max = 1e5;
    double escape_radius = 1.0;
    int nullcline_resolution = 128;
    int threads = 0;  ///< 0 = OpenMP default
    Tolerances tols;
};

struct ClassifiedEquilibrium {
    Equilibrium eq;
    EigenReport eigen;
    StabilityClass cls;
};

struct Portrait {
    std::vector<StatePoint> seeds;
    std::vector<Trajectory> trajectories;  ///< same order as seeds
    Nullclines nulls;
    std::vector<ClassifiedEquilibrium> equilibria;  ///< proper ones, case order
};

/// Seeds: seeds_per_side on each window edge, then 8 around each proper equilibrium
/// inside the window. Throws ValidationError for a window outside the quadrant.
std::vector<StatePoint> portrait_seeds(const PortraitSpec& spec,
                                       const std::vector<ClassifiedEquilibrium>& eqs);

/// Trajectories run in parallel (OpenMP), assembled by seed index.
Portrait phase_portrait(const SystemModel& model, const ParamPoint& mu, const PortraitSpec& spec);

/// Single-threaded reference of phase_portrait.
Portrait phase_portrait_serial(const SystemModel& model, const ParamPoint& mu,
                               const PortraitSpec& spec);

/// Proper equilibria with their classification.
std::vector<ClassifiedEquilibrium> classified_equilibria(const SystemModel& model,
                                                         const ParamPoint& mu,
                                                         const Tolerances& tols = {});

}  // namespace kolmo
