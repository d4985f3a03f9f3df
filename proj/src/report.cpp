#include "kolmo/report.hpp"

#include <cmath>
#include <exception>

#include "kolmo/errors.hpp"
#include "parallel.hpp"

namespace kolmo {

namespace {

Equilibrium compute(const SystemModel& model, const ParamPoint& mu, EquilibriumId id,
                    const Tolerances& tols) {
    switch (id) {
        case EquilibriumId::O: return equilibrium_O();
        case EquilibriumId::E1: return equilibrium_E1(model, mu, tols);
        case EquilibriumId::E2: return equilibrium_E2(model, mu, tols);
        case EquilibriumId::E11: return axis1_equilibria(model, mu, tols).first;
        case EquilibriumId::E12: return axis1_equilibria(model, mu, tols).second;
        case EquilibriumId::E3: return equilibrium_E3(model, mu, tols);
    }
    return equilibrium_O();
}

void check_window(const SystemModel& model, const ParamWindow& w, int resolution) {
    if (resolution < 0 || resolution > 2048)
        throw ValidationError("resolution must be between 0 and 2048");
    if (!(w.mu1_hi >= w.mu1_lo) || !(w.mu2_hi >= w.mu2_lo))
        throw ValidationError("window bounds must be ordered lo <= hi");
    for (double a : {w.mu1_lo, w.mu1_hi})
        for (double b : {w.mu2_lo, w.mu2_hi}) check_domain(model, {a, b});
}

SweepGrid empty_grid(const SystemModel& model, const ParamWindow& window, int resolution) {
    SweepGrid g;
    g.window = window;
    g.resolution = resolution;
    g.dcase = require_analysable(model);
    g.cells.resize(static_cast<std::size_t>(resolution) * resolution);
    return g;
}

ParamPoint cell_center(const ParamWindow& w, int resolution, long index) {
    const long i = index % resolution, j = index / resolution;
    const double d1 = (w.mu1_hi - w.mu1_lo) / resolution;
    const double d2 = (w.mu2_hi - w.mu2_lo) / resolution;
    return {w.mu1_lo + (i + 0.5) * d1, w.mu2_lo + (j + 0.5) * d2};
}

// frozen from the lowest-order CaseB eigenvalues over all four sign patterns of (theta, sigma2)
const std::set<std::string> kCaseB{"a-s-", "ars-", "assr", "r---", "ra-s", "rs--", "s---",
                                   "s-r-", "s-sr", "sars", "sas-", "sr--", "ss-r", "ssr-"};

const std::set<std::string> kCaseA{
    "s--s-", "s--rs", "r---s", "rrs-s", "rss--", "ss---", "as-s-", "rsa-s", "r----", "sr---", "ar-s-",
    "sras-", "ssasr", "s--sr", "s--r-", "srssa", "srssr", "s--sa", "sr--s", "ssas-", "rrs--", "as-sr"};

}  // namespace

SweepCell analyze_point(const SystemModel& model, const ParamPoint& mu, const Tolerances& tols) {
    const auto c = require_analysable(model);
    check_domain(model, mu);
    SweepCell cell;
    cell.mu = mu;
    for (EquilibriumId id : case_ids(c)) {
        CellEntry entry;
        entry.id = id;
        try {
            const Equilibrium e = compute(model, mu, id, tols);
            entry.status = e.status;
            entry.point = e.point;
            if (e.status != Status::Absent) {
                const auto [eig, cls] = classify_equilibrium(model, mu, e, tols);
                entry.eigen = eig;
                entry.cls = cls;
                entry.classified = true;
            }
        } catch (const NumericalError& err) {
            entry.status = Status::Absent;
            entry.error = err.what();
            if (cell.error.empty()) cell.error = std::string(to_string(id)) + ": " + err.what();
        }
        cell.inventory.push_back(std::move(entry));
    }
    try {
        cell.region = region_of(model, mu, tols);
        cell.region_ok = true;
    } catch (const NumericalError& err) {
        if (cell.error.empty()) cell.error = std::string("region: ") + err.what();
    }
    return cell;
}

SweepGrid sweep(const SystemModel& model, const ParamWindow& window, int resolution,
                const Tolerances& tols, int threads) {
    check_window(model, window, resolution);
    SweepGrid g = empty_grid(model, window, resolution);
    const long n = static_cast<long>(g.cells.size());
    std::vector<std::exception_ptr> errors(g.cells.size());
    const int workers = detail::worker_count(threads);
#pragma omp parallel for schedule(dynamic, 16) num_threads(workers)
    for (long k = 0; k < n; ++k) {
        try {
            g.cells[k] = analyze_point(model, cell_center(window, resolution, k), tols);
        } catch (...) {
            errors[k] = std::current_exception();
        }
    }
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
    return g;
}

SweepGrid sweep_serial(const SystemModel& model, const ParamWindow& window, int resolution,
                       const Tolerances& tols) {
    check_window(model, window, resolution);
    SweepGrid g = empty_grid(model, window, resolution);
    for (long k = 0; k < static_cast<long>(g.cells.size()); ++k)
        g.cells[k] = analyze_point(model, cell_center(window, resolution, k), tols);
    return g;
}

char class_code(const CellEntry& e) {
    if (!e.classified || e.status != Status::Proper) return '-';
    using T = StabilityClass::Tag;
    switch (e.cls.tag) {
        case T::Saddle: return 's';
        case T::AttractorNode:
        case T::AttractorFocus: return 'a';
        case T::RepellerNode:
        case T::RepellerFocus: return 'r';
        case T::NonHyperbolic: return 'u';
    }
    return '-';
}

std::string class_tuple(const SweepCell& cell) {
    std::string t;
    for (const auto& e : cell.inventory) t.push_back(class_code(e));
    return t;
}

const std::set<std::string>& admissible_tuples(DegeneracyCase c) {
    if (c == DegeneracyCase::CaseA) return kCaseA;
    if (c == DegeneracyCase::CaseB) return kCaseB;
    throw CaseError("no tuple table for " + std::string(to_string(c)));
}

bool tuple_admissible(DegeneracyCase c, const std::string& tuple) {
    return tuple.find('u') != std::string::npos || admissible_tuples(c).count(tuple) > 0;
}

std::vector<CurveOverlay> curve_overlays(const SystemModel& model, const ParamWindow& window,
                                         int samples, const Tolerances& tols) {
    std::vector<CurveOverlay> out;
    if (samples < 1) return out;
    for (CurveId id : case_curves(model)) {
        CurveOverlay ov;
        ov.id = id;
        const bool by2 = parameterized_by_mu2(id);
        const double lo = by2 ? window.mu2_lo : window.mu1_lo;
        const double hi = by2 ? window.mu2_hi : window.mu1_hi;
        std::vector<ParamPoint> piece;
        auto flush = [&] {
            if (piece.size() >= 2) ov.pieces.push_back(piece);
            piece.clear();
        };
        for (int k = 0; k <= samples; ++k) {
            const double s = lo + (hi - lo) * k / samples;
            try {
                const auto cp = curve_point(model, id, s, tols);
                const bool inside = cp.mu.mu1 >= window.mu1_lo && cp.mu.mu1 <= window.mu1_hi &&
                                    cp.mu.mu2 >= window.mu2_lo && cp.mu.mu2 <= window.mu2_hi;
                if (inside)
                    piece.push_back(cp.mu);
                else
                    flush();
            } catch (const Error&) {
                flush();
            }
        }
        flush();
        if (!ov.pieces.empty()) out.push_back(std::move(ov));
    }
    return out;
}

}  // namespace kolmo
