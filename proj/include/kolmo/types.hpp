#pragma once

#include <array>
#include <cmath>

namespace kolmo {

struct ParamPoint {
    double mu1 = 0.0;
    double mu2 = 0.0;

    double norm() const { return std::hypot(mu1, mu2); }
    friend bool operator==(const ParamPoint&, const ParamPoint&) = default;
};

struct StatePoint {
    double xi1 = 0.0;
    double xi2 = 0.0;

    /// Closed first quadrant.
    bool in_quadrant() const { return xi1 >= 0.0 && xi2 >= 0.0; }
    friend bool operator==(const StatePoint&, const StatePoint&) = default;
};

using Vec2 = std::array<double, 2>;

/// Row-major 2x2 matrix, m[i][j] = d f_i / d xi_j for Jacobians.
struct Mat2 {
    std::array<std::array<double, 2>, 2> m{};

    double operator()(int i, int j) const { return m[i][j]; }
    double& operator()(int i, int j) { return m[i][j]; }

    double trace() const { return m[0][0] + m[1][1]; }
    double det() const { return m[0][0] * m[1][1] - m[0][1] * m[1][0]; }

    Vec2 apply(const Vec2& v) const {
        return {m[0][0] * v[0] + m[0][1] * v[1], m[1][0] * v[0] + m[1][1] * v[1]};
    }

    Mat2 transposed() const {
        Mat2 t;
        t.m = {{{m[0][0], m[1][0]}, {m[0][1], m[1][1]}}};
        return t;
    }

    double max_abs() const {
        double r = 0.0;
        for (const auto& row : m)
            for (double x : row) r = std::max(r, std::abs(x));
        return r;
    }

    double frobenius() const {
        return std::sqrt(m[0][0] * m[0][0] + m[0][1] * m[0][1] + m[1][0] * m[1][0] +
                         m[1][1] * m[1][1]);
    }

    static Mat2 diag(double a, double b) {
        Mat2 r;
        r.m = {{{a, 0.0}, {0.0, b}}};
        return r;
    }

    friend bool operator==(const Mat2&, const Mat2&) = default;
};

inline double dot(const Vec2& a, const Vec2& b) { return a[0] * b[0] + a[1] * b[1]; }

inline double max_norm(const Vec2& v) { return std::max(std::abs(v[0]), std::abs(v[1])); }

inline StatePoint to_state(const Vec2& v) { return {v[0], v[1]}; }
inline Vec2 to_vec(const StatePoint& p) { return {p.xi1, p.xi2}; }

}  // namespace kolmo
