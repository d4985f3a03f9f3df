#include "kolmo/portrait.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <numbers>
#include <unordered_map>

#include "kolmo/errors.hpp"
#include "kolmo/roots.hpp"
#include "parallel.hpp"

namespace kolmo {

namespace {

// Dormand-Prince 5(4) tableau
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                 a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                 a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784,
                 b6 = 11.0 / 84;
// b - b*, fifth minus fourth order weights
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920, e5 = -17253.0 / 339200,
                 e6 = 22.0 / 525, e7 = -1.0 / 40;

Vec2 axpy(const Vec2& y, double h, std::initializer_list<std::pair<double, const Vec2*>> terms) {
    Vec2 r = y;
    for (const auto& [c, k] : terms) {
        r[0] += h * c * (*k)[0];
        r[1] += h * c * (*k)[1];
    }
    return r;
}

bool near_known(const StatePoint& p, const IntegrateOptions& opts, EquilibriumId& id) {
    for (const auto& e : opts.known) {
        if (e.status == Status::Absent) continue;
        if (std::hypot(p.xi1 - e.point.xi1, p.xi2 - e.point.xi2) <= opts.converge_dist) {
            id = e.id;
            return true;
        }
    }
    return false;
}

}  // namespace

std::string_view to_string(Trajectory::Terminal t) {
    switch (t) {
        case Trajectory::Terminal::TimeLimit: return "TimeLimit";
        case Trajectory::Terminal::EscapedRadius: return "EscapedRadius";
        case Trajectory::Terminal::ConvergedToEquilibrium: return "ConvergedToEquilibrium";
        case Trajectory::Terminal::HitAxis: return "HitAxis";
    }
    return "?";
}

Trajectory integrate(const SystemModel& model, const ParamPoint& mu, const StatePoint& xi0,
                     double t_max, const IntegrateOptions& opts) {
    if (!std::isfinite(xi0.xi1) || !std::isfinite(xi0.xi2))
        throw ValidationError("initial state must be finite");
    if (!(t_max > 0.0)) throw ValidationError("t_max must be positive");
    check_domain(model, mu);
    const LocalField field(model, mu);
    auto rhs = [&](const Vec2& y) { return field.f(to_state(y)); };

    Trajectory tr;
    Vec2 y = to_vec(xi0);
    double t = 0.0;
    double h = std::min(opts.h0, t_max);
    const bool interior = xi0.xi1 > 0.0 && xi0.xi2 > 0.0;
    tr.samples.push_back({t, xi0});

    Vec2 k1 = rhs(y);
    EquilibriumId id{};
    auto converged = [&](const Vec2& f, const Vec2& state) {
        return max_norm(f) <= opts.converge_f && near_known(to_state(state), opts, id);
    };
    if (converged(k1, y)) {
        tr.terminal = Trajectory::Terminal::ConvergedToEquilibrium;
        tr.converged_to = id;
        return tr;
    }

    for (long step = 0; step < opts.max_steps; ++step) {
        if (t >= t_max) {
            tr.terminal = Trajectory::Terminal::TimeLimit;
            return tr;
        }
        h = std::min(h, t_max - t);
        if (h < opts.h_min) throw StepUnderflow("step size fell below " + std::to_string(opts.h_min));

        const Vec2 k2 = rhs(axpy(y, h, {{a21, &k1}}));
        const Vec2 k3 = rhs(axpy(y, h, {{a31, &k1}, {a32, &k2}}));
        const Vec2 k4 = rhs(axpy(y, h, {{a41, &k1}, {a42, &k2}, {a43, &k3}}));
        const Vec2 k5 = rhs(axpy(y, h, {{a51, &k1}, {a52, &k2}, {a53, &k3}, {a54, &k4}}));
        const Vec2 k6 = rhs(axpy(y, h, {{a61, &k1}, {a62, &k2}, {a63, &k3}, {a64, &k4}, {a65, &k5}}));
        const Vec2 yn = axpy(y, h, {{b1, &k1}, {b3, &k3}, {b4, &k4}, {b5, &k5}, {b6, &k6}});
        const Vec2 k7 = rhs(yn);

        double err = 0.0;
        for (int i = 0; i < 2; ++i) {
            const double ei = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] + e6 * k6[i] +
                                   e7 * k7[i]);
            const double sc = opts.atol + opts.rtol * std::max(std::abs(y[i]), std::abs(yn[i]));
            err = std::max(err, std::abs(ei) / sc);
        }
        const bool finite = std::isfinite(yn[0]) && std::isfinite(yn[1]) && std::isfinite(err);
        const bool crossed = (y[0] >= 0.0 && yn[0] < 0.0) || (y[1] >= 0.0 && yn[1] < 0.0);
        if (!finite || crossed || err > 1.0) {
            ++tr.rejected_steps;
            const double shrink = finite && !crossed ? std::max(0.2, 0.9 * std::pow(err, -0.2)) : 0.5;
            h *= shrink;
            continue;
        }

        t += h;
        y = yn;
        k1 = k7;
        tr.samples.push_back({t, to_state(y)});
        if (interior && (y[0] <= 1e-12 || y[1] <= 1e-12)) tr.hit_axis = true;

        if (converged(k1, y)) {
            tr.terminal = Trajectory::Terminal::ConvergedToEquilibrium;
            tr.converged_to = id;
            return tr;
        }
        if (max_norm(y) > opts.escape_radius) {
            tr.terminal = Trajectory::Terminal::EscapedRadius;
            return tr;
        }
        const double grow = err == 0.0 ? 5.0 : std::min(5.0, std::max(0.2, 0.9 * std::pow(err, -0.2)));
        h *= grow;
    }
    tr.terminal = Trajectory::Terminal::TimeLimit;
    return tr;
}

namespace {

struct Grid {
    Window w;
    int n;
    double dx, dy;

    double x(int i) const { return i == n ? w.x1 : w.x0 + i * dx; }
    double y(int j) const { return j == n ? w.y1 : w.y0 + j * dy; }
    int vid(int i, int j) const { return j * (n + 1) + i; }
};

// Zero set of one cofactor component by marching squares.
std::vector<Polyline> contour(const Grid& g, const std::function<double(double, double)>& fn) {
    const int n = g.n;
    std::vector<double> v(static_cast<std::size_t>((n + 1) * (n + 1)));
    for (int j = 0; j <= n; ++j)
        for (int i = 0; i <= n; ++i) v[g.vid(i, j)] = fn(g.x(i), g.y(j));

    std::unordered_map<long, StatePoint> cache;
    // horizontal edge (i,j)-(i+1,j) -> 2 vid, vertical (i,j)-(i,j+1) -> 2 vid + 1
    auto edge_point = [&](long key) -> StatePoint {
        if (auto it = cache.find(key); it != cache.end()) return it->second;
        const int vid = static_cast<int>(key / 2);
        const int i = vid % (n + 1), j = vid / (n + 1);
        StatePoint p;
        if (key % 2 == 0) {
            const double y = g.y(j);
            auto f = [&](double x) { return fn(x, y); };
            p = {bracketed_root(f, g.x(i), g.x(i + 1)).x, y};
        } else {
            const double x = g.x(i);
            auto f = [&](double y) { return fn(x, y); };
            p = {x, bracketed_root(f, g.y(j), g.y(j + 1)).x};
        }
        cache.emplace(key, p);
        return p;
    };

    std::vector<std::pair<long, long>> segs;
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) {
            const double v00 = v[g.vid(i, j)], v10 = v[g.vid(i + 1, j)];
            const double v11 = v[g.vid(i + 1, j + 1)], v01 = v[g.vid(i, j + 1)];
            const int idx = (v00 > 0) | ((v10 > 0) << 1) | ((v11 > 0) << 2) | ((v01 > 0) << 3);
            if (idx == 0 || idx == 15) continue;
            const long bottom = 2L * g.vid(i, j), top = 2L * g.vid(i, j + 1);
            const long left = 2L * g.vid(i, j) + 1, right = 2L * g.vid(i + 1, j) + 1;
            const double center = 0.25 * (v00 + v10 + v11 + v01);
            switch (idx) {
                case 1: case 14: segs.push_back({left, bottom}); break;
                case 2: case 13: segs.push_back({bottom, right}); break;
                case 3: case 12: segs.push_back({left, right}); break;
                case 4: case 11: segs.push_back({right, top}); break;
                case 6: case 9: segs.push_back({bottom, top}); break;
                case 7: case 8: segs.push_back({left, top}); break;
                case 5:
                    if (center > 0) {
                        segs.push_back({left, top});
                        segs.push_back({bottom, right});
                    } else {
                        segs.push_back({left, bottom});
                        segs.push_back({right, top});
                    }
                    break;
                case 10:
                    if (center > 0) {
                        segs.push_back({left, bottom});
                        segs.push_back({right, top});
                    } else {
                        segs.push_back({left, top});
                        segs.push_back({bottom, right});
                    }
                    break;
                default: break;
            }
        }
    }

    // chain segments through shared edges
    std::unordered_map<long, std::vector<std::size_t>> at_edge;
    for (std::size_t s = 0; s < segs.size(); ++s) {
        at_edge[segs[s].first].push_back(s);
        at_edge[segs[s].second].push_back(s);
    }
    std::vector<bool> used(segs.size(), false);
    std::vector<Polyline> out;
    auto walk = [&](std::size_t s0, long start) {
        Polyline line{edge_point(start)};
        long cur = start;
        std::size_t s = s0;
        while (true) {
            used[s] = true;
            cur = segs[s].first == cur ? segs[s].second : segs[s].first;
            line.push_back(edge_point(cur));
            std::size_t next = segs.size();
            for (std::size_t cand : at_edge[cur])
                if (!used[cand]) {
                    next = cand;
                    break;
                }
            if (next == segs.size()) break;
            s = next;
        }
        out.push_back(std::move(line));
    };
    // open chains start at an end with a single segment; ordering by segment index
    for (std::size_t s = 0; s < segs.size(); ++s) {
        if (used[s]) continue;
        if (at_edge[segs[s].first].size() == 1) walk(s, segs[s].first);
        else if (at_edge[segs[s].second].size() == 1) walk(s, segs[s].second);
    }
    for (std::size_t s = 0; s < segs.size(); ++s)
        if (!used[s]) walk(s, segs[s].first);
    return out;
}

}  // namespace

Nullclines nullclines(const SystemModel& model, const ParamPoint& mu, const Window& window,
                      int resolution) {
    if (resolution < 16) throw ValidationError("nullcline resolution must be at least 16");
    check_domain(model, mu);
    Nullclines out;
    if (window.degenerate()) return out;
    const LocalField field(model, mu);
    if (window.x0 <= 0.0 && 0.0 <= window.x1) out.f1.push_back({{0.0, window.y0}, {0.0, window.y1}});
    if (window.y0 <= 0.0 && 0.0 <= window.y1) out.f2.push_back({{window.x0, 0.0}, {window.x1, 0.0}});

    const Grid g{window, resolution, (window.x1 - window.x0) / resolution,
                 (window.y1 - window.y0) / resolution};
    auto g1 = [&](double x, double y) { return field.cofactors({x, y})[0]; };
    auto g2 = [&](double x, double y) { return field.cofactors({x, y})[1]; };
    for (auto& l : contour(g, g1)) out.f1.push_back(std::move(l));
    for (auto& l : contour(g, g2)) out.f2.push_back(std::move(l));
    return out;
}

std::vector<ClassifiedEquilibrium> classified_equilibria(const SystemModel& model,
                                                         const ParamPoint& mu,
                                                         const Tolerances& tols) {
    std::vector<ClassifiedEquilibrium> out;
    for (const auto& e : all_equilibria(model, mu, tols)) {
        if (e.status != Status::Proper) continue;
        const auto [eig, cls] = classify_equilibrium(model, mu, e, tols);
        out.push_back({e, eig, cls});
    }
    return out;
}

std::vector<StatePoint> portrait_seeds(const PortraitSpec& spec,
                                       const std::vector<ClassifiedEquilibrium>& eqs) {
    const Window& w = spec.window;
    if (w.x0 < 0.0 || w.y0 < 0.0) throw ValidationError("portrait window must lie in the first quadrant");
    if (spec.seeds_per_side < 1) throw ValidationError("seeds_per_side must be at least 1");
    std::vector<StatePoint> seeds;
    if (w.degenerate()) return seeds;
    const int n = spec.seeds_per_side;
    for (int k = 0; k < n; ++k) {
        const double f = (k + 0.5) / n;
        const double x = w.x0 + f * (w.x1 - w.x0), y = w.y0 + f * (w.y1 - w.y0);
        seeds.push_back({x, w.y0});
        seeds.push_back({w.x1, y});
        seeds.push_back({x, w.y1});
        seeds.push_back({w.x0, y});
    }
    const double r = 0.02 * std::min(w.x1 - w.x0, w.y1 - w.y0);
    for (const auto& ce : eqs) {
        const StatePoint& p = ce.eq.point;
        if (p.xi1 < w.x0 || p.xi1 > w.x1 || p.xi2 < w.y0 || p.xi2 > w.y1) continue;
        for (int k = 0; k < 8; ++k) {
            const double a = k * std::numbers::pi / 4.0;
            const StatePoint s{p.xi1 + r * std::cos(a), p.xi2 + r * std::sin(a)};
            if (s.xi1 >= 0.0 && s.xi2 >= 0.0) seeds.push_back(s);
        }
    }
    return seeds;
}

namespace {

Portrait prepare(const SystemModel& model, const ParamPoint& mu, const PortraitSpec& spec,
                 IntegrateOptions& opts) {
    Portrait p;
    p.equilibria = classified_equilibria(model, mu, spec.tols);
    p.seeds = portrait_seeds(spec, p.equilibria);
    p.trajectories.resize(p.seeds.size());
    if (!spec.window.degenerate())
        p.nulls = nullclines(model, mu, spec.window, spec.nullcline_resolution);
    opts.escape_radius = spec.escape_radius;
    for (const auto& ce : p.equilibria) opts.known.push_back(ce.eq);
    return p;
}

}  // namespace

Portrait phase_portrait(const SystemModel& model, const ParamPoint& mu, const PortraitSpec& spec) {
    IntegrateOptions opts;
    Portrait p = prepare(model, mu, spec, opts);
    const long n = static_cast<long>(p.seeds.size());
    std::vector<std::exception_ptr> errors(p.seeds.size());
    const int threads = detail::worker_count(spec.threads);
#pragma omp parallel for schedule(dynamic) num_threads(threads)
    for (long i = 0; i < n; ++i) {
        try {
            p.trajectories[i] = integrate(model, mu, p.seeds[i], spec.t_max, opts);
        } catch (...) {
            errors[i] = std::current_exception();
        }
    }
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
    return p;
}

Portrait phase_portrait_serial(const SystemModel& model, const ParamPoint& mu,
                               const PortraitSpec& spec) {
    IntegrateOptions opts;
    Portrait p = prepare(model, mu, spec, opts);
    for (std::size_t i = 0; i < p.seeds.size(); ++i)
        p.trajectories[i] = integrate(model, mu, p.seeds[i], spec.t_max, opts);
    return p;
}

}  // namespace kolmo
