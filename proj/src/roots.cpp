#include "kolmo/roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <tuple>

#include "kolmo/errors.hpp"

namespace kolmo {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

bool opposite(double a, double b) { return (a < 0.0 && b > 0.0) || (a > 0.0 && b < 0.0); }

}  // namespace

ScalarRoot scalar_newton(const std::function<std::pair<double, double>(double)>& fdf, double x0,
                         double tol, int max_iter) {
    double x = x0;
    auto [f, df] = fdf(x);
    for (int it = 0; it < max_iter; ++it) {
        if (std::abs(f) <= tol) return {x, std::abs(f), it};
        if (df == 0.0 || !std::isfinite(df))
            throw ConvergenceError("scalar Newton hit a zero derivative", std::abs(f));
        const double step = f / df;
        x -= step;
        std::tie(f, df) = fdf(x);
        if (!std::isfinite(f)) throw ConvergenceError("scalar Newton diverged", f);
        // Stalled at roundoff level: accept if within tolerance after the final step.
        if (std::abs(step) <= 4.0 * kEps * std::abs(x)) {
            if (std::abs(f) <= tol) return {x, std::abs(f), it + 1};
        }
    }
    if (std::abs(f) <= tol) return {x, std::abs(f), max_iter};
    throw ConvergenceError("scalar Newton did not converge in " + std::to_string(max_iter) +
                               " iterations",
                           std::abs(f));
}

Vec2 solve2(const Mat2& a, const Vec2& b) {
    const double d = a.det();
    if (d == 0.0 || !std::isfinite(d)) throw NumericalError("singular 2x2 system");
    return {(b[0] * a(1, 1) - a(0, 1) * b[1]) / d, (a(0, 0) * b[1] - b[0] * a(1, 0)) / d};
}

NewtonResult newton2(const std::function<void(const Vec2&, Vec2&, Mat2&)>& eval, Vec2 x0,
                     const NewtonOptions& opts) {
    Vec2 x = x0;
    Vec2 fx{};
    Mat2 jx;
    eval(x, fx, jx);
    double res = max_norm(fx);
    for (int it = 0; it < opts.max_iter; ++it) {
        if (res <= opts.tol) return {x, res, it};
        Vec2 step;
        try {
            step = solve2(jx, fx);
        } catch (const NumericalError&) {
            throw ConvergenceError("Newton Jacobian became singular", res);
        }
        double lambda = 1.0;
        Vec2 trial{};
        Vec2 ft{};
        Mat2 jt;
        double rt = std::numeric_limits<double>::infinity();
        for (int h = 0; h <= opts.max_halvings; ++h) {
            trial = {x[0] - lambda * step[0], x[1] - lambda * step[1]};
            eval(trial, ft, jt);
            rt = max_norm(ft);
            if (std::isfinite(rt) && rt < res) break;
            lambda *= 0.5;
        }
        if (!(std::isfinite(rt) && rt < res)) {
            // No decrease even with damping: we are at the roundoff floor.
            if (res <= opts.tol) return {x, res, it};
            throw ConvergenceError("damped Newton failed to decrease the residual", res);
        }
        x = trial;
        fx = ft;
        jx = jt;
        res = rt;
    }
    if (res <= opts.tol) return {x, res, opts.max_iter};
    throw ConvergenceError("Newton did not converge in " + std::to_string(opts.max_iter) +
                               " iterations",
                           res);
}

ScalarRoot bracketed_root(const std::function<double(double)>& f, double lo, double hi) {
    double a = lo, b = hi;
    double fa = f(a), fb = f(b);
    if (fa == 0.0) return {a, 0.0, 0};
    if (fb == 0.0) return {b, 0.0, 0};
    if (!opposite(fa, fb)) throw BracketError("endpoints do not bracket a root");

    int it = 0;
    // Bisection until the bracket is a small fraction of its scale.
    const double coarse = 1e-6 * std::max(std::abs(a), std::abs(b));
    for (; it < 200 && std::abs(b - a) > coarse; ++it) {
        const double m = 0.5 * (a + b);
        const double fm = f(m);
        if (fm == 0.0) return {m, 0.0, it + 1};
        if (opposite(fa, fm)) {
            b = m;
            fb = fm;
        } else {
            a = m;
            fa = fm;
        }
    }
    // Illinois regula falsi; keeps the bracket, converges superlinearly.
    for (; it < 400; ++it) {
        const double width = std::abs(b - a);
        if (width <= 4.0 * kEps * std::max(std::abs(a), std::abs(b)) ||
            width <= std::numeric_limits<double>::min())
            break;
        double c = (a * fb - b * fa) / (fb - fa);
        if (!(c > std::min(a, b) && c < std::max(a, b))) c = 0.5 * (a + b);
        const double fc = f(c);
        if (fc == 0.0) return {c, 0.0, it + 1};
        if (opposite(fb, fc)) {
            a = b;
            fa = fb;
            b = c;
            fb = fc;
        } else {
            b = c;
            fb = fc;
            fa *= 0.5;
        }
    }
    // fa may have been scaled by Illinois; re-evaluate for honest reporting.
    const double ra = std::abs(f(a)), rb = std::abs(fb);
    return ra < rb ? ScalarRoot{a, ra, it} : ScalarRoot{b, rb, it};
}

ScalarRoot root_near(const std::function<double(double)>& f, double center, double width,
                     double limit_lo, double limit_hi) {
    center = std::clamp(center, limit_lo, limit_hi);
    const double fc = f(center);
    if (fc == 0.0) return {center, 0.0, 0};
    double w = std::max(width, 1e-300);
    for (int k = 0; k < 200; ++k) {
        const double lo = std::max(limit_lo, center - w);
        const double hi = std::min(limit_hi, center + w);
        // Nearest side first: both sides are checked at the same radius.
        const double flo = f(lo);
        if (opposite(fc, flo) || flo == 0.0) return bracketed_root(f, lo, center);
        const double fhi = f(hi);
        if (opposite(fc, fhi) || fhi == 0.0) return bracketed_root(f, center, hi);
        if (lo == limit_lo && hi == limit_hi) break;
        w *= 2.0;
    }
    throw BracketError("no sign change found within the validity window");
}

}  // namespace kolmo
