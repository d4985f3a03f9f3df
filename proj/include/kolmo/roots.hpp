#pragma once

#include <functional>
#include <utility>

#include "kolmo/types.hpp"

namespace kolmo {

struct ScalarRoot {
    double x = 0.0;
    double residual = 0.0;
    int iterations = 0;
};

/// Newton on a scalar function; `fdf` returns (f, f'). Throws ConvergenceError.
ScalarRoot scalar_newton(const std::function<std::pair<double, double>(double)>& fdf, double x0,
                         double tol, int max_iter = 50);

struct NewtonResult {
    Vec2 x{};
    double residual = 0.0;  ///< max-norm of the residual at x
    int iterations = 0;
};

struct NewtonOptions {
    double tol = 1e-12;      ///< required max-norm residual
    int max_iter = 50;
    int max_halvings = 20;   ///< step damping when the residual does not decrease
};

/// Damped Newton for a 2x2 system; `eval` fills (F(x), DF(x)). Throws ConvergenceError.
NewtonResult newton2(const std::function<void(const Vec2&, Vec2&, Mat2&)>& eval, Vec2 x0,
                     const NewtonOptions& opts = {});

/// Root of f on [lo, hi] with f(lo), f(hi) of opposite sign (or zero): bisection until
/// the bracket is small, then Illinois-safeguarded secant steps. Throws BracketError if
/// the endpoints do not bracket a sign change.
ScalarRoot bracketed_root(const std::function<double(double)>& f, double lo, double hi);

/// Expands [center - w, center + w] symmetrically (w doubling) inside [limit_lo, limit_hi]
/// until a sign change against f(center) appears, then solves with bracketed_root.
ScalarRoot root_near(const std::function<double(double)>& f, double center, double width,
                     double limit_lo, double limit_hi);

/// Solves the 2x2 system a x = b by Cramer's rule. Throws NumericalError if singular.
Vec2 solve2(const Mat2& a, const Vec2& b);

}  // namespace kolmo
