#include "kolmo/poly.hpp"

#include <cmath>
#include <string>

#include "kolmo/errors.hpp"

namespace kolmo {

BivariatePoly::BivariatePoly(int max_degree) : max_degree_(max_degree) {
    if (max_degree < 0 || max_degree > kMaxDegree)
        throw ValidationError("polynomial degree " + std::to_string(max_degree) +
                              " outside [0, " + std::to_string(kMaxDegree) + "]");
    const auto n = static_cast<std::size_t>(max_degree + 1);
    c_.assign(n * (n + 1) / 2, 0.0);
}

BivariatePoly BivariatePoly::constant(double c, int max_degree) {
    BivariatePoly p(max_degree);
    p.set(0, 0, c);
    return p;
}

// Row i holds c_{i,0..d-i}; rows are packed back to back.
std::size_t BivariatePoly::index(int i, int j) const {
    const auto d = static_cast<std::size_t>(max_degree_);
    const auto ii = static_cast<std::size_t>(i);
    return ii * (d + 1) - ii * (ii - 1) / 2 + static_cast<std::size_t>(j);
}

double BivariatePoly::coeff(int i, int j) const {
    if (i < 0 || j < 0 || i + j > max_degree_) return 0.0;
    return c_[index(i, j)];
}

void BivariatePoly::set(int i, int j, double value) {
    if (i < 0 || j < 0 || i + j > max_degree_)
        throw ValidationError("monomial (" + std::to_string(i) + "," + std::to_string(j) +
                              ") exceeds degree " + std::to_string(max_degree_));
    if (!std::isfinite(value)) throw ValidationError("non-finite polynomial coefficient");
    c_[index(i, j)] = value;
}

std::map<std::pair<int, int>, double> BivariatePoly::nonzero() const {
    std::map<std::pair<int, int>, double> out;
    for (int i = 0; i <= max_degree_; ++i)
        for (int j = 0; i + j <= max_degree_; ++j)
            if (const double v = c_[index(i, j)]; v != 0.0) out.emplace(std::pair{i, j}, v);
    return out;
}

double BivariatePoly::operator()(double mu1, double mu2) const {
    double outer = 0.0;
    for (int i = max_degree_; i >= 0; --i) {
        double inner = 0.0;
        for (int j = max_degree_ - i; j >= 0; --j) inner = inner * mu2 + c_[index(i, j)];
        outer = outer * mu1 + inner;
    }
    return outer;
}

PolyJet BivariatePoly::jet(const ParamPoint& mu) const {
    // Horner with simultaneous derivative, in both nesting levels.
    double v = 0.0, dv1 = 0.0, dv2 = 0.0;
    for (int i = max_degree_; i >= 0; --i) {
        double r = 0.0, dr = 0.0;
        for (int j = max_degree_ - i; j >= 0; --j) {
            dr = dr * mu.mu2 + r;
            r = r * mu.mu2 + c_[index(i, j)];
        }
        dv1 = dv1 * mu.mu1 + v;
        v = v * mu.mu1 + r;
        dv2 = dv2 * mu.mu1 + dr;
    }
    return {v, dv1, dv2};
}

}  // namespace kolmo
