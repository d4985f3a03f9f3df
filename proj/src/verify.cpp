#include "kolmo/verify.hpp"

#include <cmath>
#include <sstream>

#include "kolmo/emit.hpp"
#include "kolmo/errors.hpp"
#include "kolmo/sotomayor.hpp"

namespace kolmo {

namespace {

int sgn(double x) { return (x > 0.0) - (x < 0.0); }

void certificate_row(const SystemModel& model, VerifyRow& row, const Tolerances& tols) {
    const auto c = require_analysable(model);
    const auto site = certificate_site(model, row.curve, row.mu, tols);
    int bif = site.bif_param;
    if (row.curve == CurveId::T3 && model.delta.coeff(1, 0) == 0.0) {
        bif = 2;
        row.note = "mu2 as parameter (delta1 = 0)";
    }
    const auto r = sotomayor_check(model, row.mu, site.xi0, bif, tols);
    row.verdict = std::string(to_string(r.verdict));
    row.C1 = r.C1;
    row.C2 = r.C2;
    row.C3 = r.C3;
    const bool sn = row.curve == CurveId::DeltaPlus || row.curve == CurveId::DeltaMinus;
    if (sn) {
        const auto [e11, e12] = axis1_equilibria(model, row.mu, tols);
        const double gap = std::abs(e11.point.xi1 - e12.point.xi1);
        const bool signs = sgn(r.C1 * r.C3) == sgn(model.bigN.at_origin());
        row.pass = r.verdict == SotomayorReport::Verdict::SaddleNode && signs && gap <= 1e-6;
        row.note = "sign(C1 C3) " + std::string(signs ? "= " : "!= ") + "sign(N)";
        return;
    }
    const double big = 10.0 * r.tol;
    row.pass = r.verdict == SotomayorReport::Verdict::Transcritical && std::abs(r.C1) <= r.tol &&
               std::abs(r.C2) >= big && std::abs(r.C3) >= big;
    const bool y_axis = row.curve == CurveId::Yplus || row.curve == CurveId::Yminus;
    if (y_axis && c == DegeneracyCase::CaseA) {
        const double c3 = -2.0 * model.theta.coeff(0, 1) * row.mu.mu2;
        const bool ok = std::abs(r.C2 - 1.0) <= 0.01 && std::abs(r.C3 - c3) <= 0.01 * std::abs(c3);
        row.pass = row.pass && ok;
        row.note = "C2 = 1, C3 = -2 theta2 mu2 = " + format_double(c3) + (ok ? "" : " (mismatch)");
    }
}

void hopf_row(const SystemModel& model, VerifyRow& row, const Tolerances& tols) {
    const auto h = hopf_check(model, row.mu, tols);
    row.verdict = "Hopf";
    row.C1 = h.omega;
    row.C2 = h.dp_dbif;
    row.C3 = h.l1;
    row.pass = h.omega > 0.0 && std::abs(h.dp_dbif) > tols.sotomayor && std::isfinite(h.l1);
    row.note = std::string("omega, dp/dmu1, l1; ") +
               (h.l1 < 0.0 ? "supercritical" : h.l1 > 0.0 ? "subcritical" : "degenerate");
}

}  // namespace

std::vector<VerifyRow> verify_model(const SystemModel& model, const Tolerances& tols) {
    std::vector<VerifyRow> rows;
    const double svals[] = {-0.02, -0.01, -0.005, 0.005, 0.01, 0.02};
    for (CurveId id : case_curves(model)) {
        if (id == CurveId::H1) {
            VerifyRow row;
            row.curve = id;
            row.verdict = "NoHopfInQ";
            long hits = 0, samples = 0;
            const double lim = 0.9 * model.radius;
            for (double s = -lim; s <= lim; s += 1e-3) {
                try {
                    const auto cp = curve_point(model, id, s, tols);
                    ++samples;
                    if (in_nontrivial_E3_region(model, cp.mu, tols)) ++hits;
                } catch (const Error&) {
                }
            }
            row.pass = samples > 0 && hits == 0;
            row.note = std::to_string(samples) + " samples on H1, " + std::to_string(hits) + " in Q";
            rows.push_back(row);
            continue;
        }
        for (double s : svals) {
            VerifyRow row;
            row.curve = id;
            row.s = s;
            try {
                const double center = curve_lowest_terms(model, id, s);
                const ParamPoint probe = parameterized_by_mu2(id) ? ParamPoint{center, s}
                                                                  : ParamPoint{s, center};
                if (!side_condition_holds(model, id, probe) || std::abs(s) >= model.radius) continue;
                row.mu = curve_point(model, id, s, tols).mu;
                if (id == CurveId::H)
                    hopf_row(model, row, tols);
                else
                    certificate_row(model, row, tols);
            } catch (const Error& e) {
                row.verdict = "error";
                row.note = e.what();
                row.pass = false;
            }
            rows.push_back(row);
        }
    }
    return rows;
}

std::string verify_text(const std::vector<VerifyRow>& rows) {
    std::ostringstream os;
    os << "curve s mu1 mu2 verdict C1 C2 C3 result note\n";
    for (const auto& r : rows)
        os << to_string(r.curve) << " " << format_double(r.s) << " " << format_double(r.mu.mu1)
           << " " << format_double(r.mu.mu2) << " " << r.verdict << " " << format_double(r.C1)
           << " " << format_double(r.C2) << " " << format_double(r.C3) << " "
           << (r.pass ? "PASS" : "FAIL") << (r.note.empty() ? "" : " " + r.note) << "\n";
    return os.str();
}

}  // namespace kolmo
