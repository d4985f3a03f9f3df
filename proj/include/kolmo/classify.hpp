#pragma once

#include <complex>
#include <string>
#include <utility>

#include "kolmo/equilibria.hpp"
#include "kolmo/model.hpp"
#include "kolmo/tolerances.hpp"

namespace kolmo {

struct EigenReport {
    enum class Kind { RealPair, ComplexPair };

    double trace = 0.0;
    double det = 0.0;
    Kind kind = Kind::RealPair;
    double lambda1 = 0.0;  ///< RealPair, lambda1 >= lambda2
    double lambda2 = 0.0;
    double omega = 0.0;    ///< ComplexPair, > 0

    double p() const { return 0.5 * trace; }
    double L() const { return det; }

    /// (lambda1, lambda2) or (p + i omega, p - i omega).
    std::pair<std::complex<double>, std::complex<double>> eigenvalues() const;
};

struct StabilityClass {
    enum class Tag { Saddle, AttractorNode, AttractorFocus, RepellerNode, RepellerFocus, NonHyperbolic };

    Tag tag = Tag::NonHyperbolic;
    int zero_count = 0;    ///< NonHyperbolic: eigenvalues with zero real part (1 or 2)
    int nonzero_sign = 0;  ///< NonHyperbolic: sign of the remaining eigenvalue, 0 if none

    bool is_attractor() const { return tag == Tag::AttractorNode || tag == Tag::AttractorFocus; }
    bool is_repeller() const { return tag == Tag::RepellerNode || tag == Tag::RepellerFocus; }
    bool hyperbolic() const { return tag != Tag::NonHyperbolic; }

    friend bool operator==(const StabilityClass&, const StabilityClass&) = default;
};

std::string to_string(const StabilityClass& c);

/// Eigenvalues of a 2x2 matrix from trace and the cancellation-free discriminant
/// ((a - d)/2)^2 + bc. Throws NonFinite.
EigenReport eigen2(const Mat2& j);

/// Hyperbolicity decision with tolerances relative to |J|_F (det) and |J|_F (p).
StabilityClass stability_of(const Mat2& j, const EigenReport& e, const Tolerances& tols = {});

/// Eigen-analysis of the exact Jacobian at eq. Throws DomainError for an absent
/// equilibrium and ConvergenceError if its residual exceeds 1e-10.
std::pair<EigenReport, StabilityClass> classify_equilibrium(const SystemModel& model,
                                                            const ParamPoint& mu,
                                                            const Equilibrium& eq,
                                                            const Tolerances& tols = {});

struct CharQuantities {
    double p = 0.0;      ///< trace / 2 at refined E3
    double L = 0.0;      ///< det at refined E3
    double p_pin = 0.0;  ///< p recomputed from the closed expression in the E3 coordinates
    Equilibrium e3;
};

/// Throws NumericalError if |p - p_pin| > 1e-9.
CharQuantities char_quantities_E3(const SystemModel& model, const ParamPoint& mu,
                                  const Tolerances& tols = {});

/// First Lyapunov coefficient of x' = J x + B(x,x)/2 + C(x,x,x)/6 at a
/// Hopf point, with q, p complex eigenvectors normalized <q,q> = 1 and <p,q> = 1.
/// Throws NotOnHopfCurve unless det(J) > 0.
double first_lyapunov(const Mat2& j, const Hessian2& h, const Third2& t);

/// l1 at the refined E3. Throws NotOnHopfCurve if |p| > tols.hopf_p or det <= 0.
double lyapunov1_numeric(const SystemModel& model, const ParamPoint& mu_hopf,
                         const Tolerances& tols = {});

}  // namespace kolmo
