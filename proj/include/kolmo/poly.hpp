#pragma once

#include <map>
#include <utility>
#include <vector>

#include "kolmo/types.hpp"

namespace kolmo {

/// Value of a bivariate polynomial together with its two first partials.
struct PolyJet {
    double value = 0.0;
    double d1 = 0.0;  ///< d/dmu1
    double d2 = 0.0;  ///< d/dmu2
};

/// Truncated Taylor polynomial sum c_ij mu1^i mu2^j over i + j <= max_degree.
///
/// Storage is dense and triangular. Evaluation is exact polynomial arithmetic:
/// Horner in mu2 for each power of mu1, then Horner in mu1.
class BivariatePoly {
public:
    static constexpr int kMaxDegree = 12;
    static constexpr int kDefaultDegree = 3;

    explicit BivariatePoly(int max_degree = kDefaultDegree);

    /// Constant polynomial.
    static BivariatePoly constant(double c, int max_degree = kDefaultDegree);

    int max_degree() const { return max_degree_; }

    double coeff(int i, int j) const;
    void set(int i, int j, double value);

    /// Nonzero coefficients keyed by (i, j).
    std::map<std::pair<int, int>, double> nonzero() const;

    double operator()(double mu1, double mu2) const;
    double operator()(const ParamPoint& mu) const { return (*this)(mu.mu1, mu.mu2); }

    PolyJet jet(const ParamPoint& mu) const;

    /// Constant term c00.
    double at_origin() const { return coeff(0, 0); }

    friend bool operator==(const BivariatePoly&, const BivariatePoly&) = default;

private:
    std::size_t index(int i, int j) const;

    int max_degree_;
    std::vector<double> c_;
};

}  // namespace kolmo
