#pragma once

#include <string>
#include <vector>

#include "kolmo/curves.hpp"
#include "kolmo/model.hpp"
#include "kolmo/tolerances.hpp"

namespace kolmo {

struct VerifyRow {
    CurveId curve = CurveId::DeltaPlus;
    double s = 0.0;
    ParamPoint mu;
    std::string verdict;  ///< SaddleNode, Transcritical, Hopf, ... or the error text
    double C1 = 0.0, C2 = 0.0, C3 = 0.0;  ///< Hopf rows: omega, dp/dmu1, l1
    bool pass = false;
    std::string note;
};

/// Certificates at s in {+-0.02, +-0.01, +-0.005} (where the half-plane allows) on every
/// case curve: saddle-node with sign(C1 C3) = sign(N(0)) on Delta, transcritical on
/// T2, T3, T4 and the axes (with C2 = 1, C3 = -2 theta2 mu2 on Y in CaseA), Hopf
/// transversality on H, and H1 disjoint from Q.
std::vector<VerifyRow> verify_model(const SystemModel& model, const Tolerances& tols = {});

std::string verify_text(const std::vector<VerifyRow>& rows);

}  // namespace kolmo
