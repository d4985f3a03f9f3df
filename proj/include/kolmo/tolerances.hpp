#pragma once

namespace kolmo {

/// Every numeric threshold used by the analyses, with their defaults.
struct Tolerances {
    double det = 1e-9;          ///< hyperbolicity on det, relative to |J|^2
    double p = 1e-9;            ///< hyperbolicity on trace/2, relative to |J|
    double newton = 1e-12;      ///< max-norm residual required of refined equilibria
    double axis_tie = 1e-10;    ///< |xi_i| below this counts as on the axis (Proper)
    double on_curve = 1e-10;    ///< |curve residual| below this labels OnCurve
    double zero_eig = 1e-8;     ///< eigenvalue treated as zero by the Sotomayor checks
    double sotomayor = 1e-8;    ///< threshold on C1, C2, C3 (times the Jacobian scale)
    double hopf_p = 1e-8;       ///< |p| allowed at a point claimed to be on the Hopf curve
};

}  // namespace kolmo
