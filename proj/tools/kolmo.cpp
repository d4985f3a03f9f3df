#include <cmath>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "kolmo/emit.hpp"
#include "kolmo/errors.hpp"
#include "kolmo/model_io.hpp"
#include "kolmo/portrait.hpp"
#include "kolmo/report.hpp"
#include "kolmo/verify.hpp"

using namespace kolmo;

namespace {

struct Options {
    std::string model_path;
    std::string out = "-";
    std::string format;
    int threads = 0;
    double radius = NAN;
    std::vector<double> mu;
    std::vector<double> window;
    int resolution = -1;
    int seeds = 6;
    double t_max = 1e5;
    Tolerances tols;
};

void log_tolerances(const Tolerances& t) {
    std::cerr << "tolerances: det=" << format_double(t.det) << " p=" << format_double(t.p)
              << " newton=" << format_double(t.newton) << " axis=" << format_double(t.axis_tie)
              << " curve=" << format_double(t.on_curve) << " zero-eig=" << format_double(t.zero_eig)
              << " sotomayor=" << format_double(t.sotomayor) << " hopf=" << format_double(t.hopf_p)
              << "\n";
}

SystemModel model_of(const Options& o) {
    if (o.model_path.empty()) throw ValidationError("--model is required");
    SystemModel m = load_model(o.model_path);
    if (!std::isnan(o.radius)) {
        if (!(o.radius > 0.0)) throw ValidationError("--radius must be positive");
        m.radius = o.radius;
    }
    validate(m);
    return m;
}

ParamPoint mu_of(const Options& o) {
    if (o.mu.size() != 2) throw ValidationError("--mu A B is required");
    return {o.mu[0], o.mu[1]};
}

Format format_of(const Options& o, Format fallback) {
    return o.format.empty() ? fallback : parse_format(o.format);
}

int cmd_case(const Options& o) {
    const SystemModel m = model_of(o);
    write_output(o.out, std::string(to_string(classify_case(m))) + "\n");
    return 0;
}

int cmd_analyze(const Options& o) {
    const SystemModel m = model_of(o);
    const DegeneracyCase c = require_analysable(m);
    const ParamPoint mu = mu_of(o);
    check_domain(m, mu);
    const SweepCell cell = analyze_point(m, mu, o.tols);
    write_output(o.out, analyze_document(cell, c, format_of(o, Format::Text)));
    return cell.error.empty() ? 0 : 3;
}

int cmd_curves(const Options& o) {
    const SystemModel m = model_of(o);
    require_analysable(m);
    const int n = o.resolution < 0 ? 41 : o.resolution;
    if (n < 2) throw ValidationError("--resolution must be at least 2 for curves");
    const double lim = 0.9 * m.radius;
    std::vector<CurveSample> out;
    for (CurveId id : case_curves(m)) {
        for (int k = 0; k < n; ++k) {
            const double s = -lim + 2.0 * lim * k / (n - 1);
            try {
                out.push_back(curve_point(m, id, s, o.tols));
            } catch (const SideConditionError&) {
            } catch (const DomainError&) {
            } catch (const NumericalError& e) {
                std::cerr << to_string(id) << " s=" << format_double(s) << ": " << e.what() << "\n";
            }
        }
    }
    write_output(o.out, curves_csv(out));
    return 0;
}

int cmd_sweep(const Options& o) {
    const SystemModel m = model_of(o);
    require_analysable(m);
    ParamWindow w{-0.01, 0.01, -0.01, 0.01};
    if (!o.window.empty()) {
        if (o.window.size() != 4) throw ValidationError("--window takes 4 values");
        w = {o.window[0], o.window[1], o.window[2], o.window[3]};
    }
    const int res = o.resolution < 0 ? 64 : o.resolution;
    const Format f = format_of(o, Format::Csv);
    const SweepGrid g = sweep(m, w, res, o.tols, o.threads);
    std::vector<CurveOverlay> overlays;
    if (f == Format::Svg) overlays = curve_overlays(m, w, 96, o.tols);
    write_output(o.out, emit_sweep(g, overlays, f));
    return 0;
}

int cmd_portrait(const Options& o) {
    const SystemModel m = model_of(o);
    require_analysable(m);
    const ParamPoint mu = mu_of(o);
    check_domain(m, mu);
    PortraitSpec spec;
    spec.window = {0.0, 0.2, 0.0, 0.2};
    if (!o.window.empty()) {
        if (o.window.size() != 4) throw ValidationError("--window takes 4 values");
        spec.window = {o.window[0], o.window[1], o.window[2], o.window[3]};
    }
    if (o.resolution >= 0) spec.nullcline_resolution = o.resolution;
    spec.seeds_per_side = o.seeds;
    spec.t_max = o.t_max;
    spec.threads = o.threads;
    spec.tols = o.tols;
    const Portrait p = phase_portrait(m, mu, spec);
    write_output(o.out, emit_portrait(p, spec.window, format_of(o, Format::Csv)));
    return 0;
}

int cmd_verify(const Options& o) {
    const SystemModel m = model_of(o);
    require_analysable(m);
    const auto rows = verify_model(m, o.tols);
    write_output(o.out, verify_text(rows));
    for (const auto& r : rows)
        if (!r.pass) return 1;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Local bifurcation analysis of planar Kolmogorov systems"};
    app.get_formatter()->column_width(34);
    app.require_subcommand(1);
    app.fallthrough();
    Options o;

    app.add_option("--model", o.model_path, "model file (JSON)");
    app.add_option("--out", o.out, "output path, - for stdout");
    app.add_option("--format", o.format, "csv, svg or text");
    app.add_option("--threads", o.threads, "worker cap, 0 = default")->check(CLI::NonNegativeNumber);
    app.add_option("--radius", o.radius, "override the validity radius");
    app.add_option("--tol-det", o.tols.det, "hyperbolicity threshold on det")->capture_default_str();
    app.add_option("--tol-p", o.tols.p, "hyperbolicity threshold on trace/2")->capture_default_str();
    app.add_option("--tol-newton", o.tols.newton, "residual for refined equilibria")->capture_default_str();
    app.add_option("--tol-axis", o.tols.axis_tie, "axis tie threshold")->capture_default_str();
    app.add_option("--tol-curve", o.tols.on_curve, "on-curve residual")->capture_default_str();
    app.add_option("--tol-zero-eig", o.tols.zero_eig, "zero eigenvalue threshold")->capture_default_str();
    app.add_option("--tol-sotomayor", o.tols.sotomayor, "Sotomayor coefficient threshold")->capture_default_str();
    app.add_option("--tol-hopf", o.tols.hopf_p, "|p| allowed on the Hopf curve")->capture_default_str();

    auto* c_case = app.add_subcommand("case", "print the degeneracy case");
    auto* c_analyze = app.add_subcommand("analyze", "equilibria and classes at one mu");
    c_analyze->add_option("--mu", o.mu, "mu1 mu2")->expected(2);
    auto* c_curves = app.add_subcommand("curves", "CSV samples of every case curve");
    c_curves->add_option("--resolution", o.resolution, "samples per curve");
    auto* c_sweep = app.add_subcommand("sweep", "parameter-plane sweep");
    c_sweep->add_option("--window", o.window, "mu1_lo mu1_hi mu2_lo mu2_hi")->expected(4);
    c_sweep->add_option("--resolution", o.resolution, "cells per side");
    auto* c_portrait = app.add_subcommand("portrait", "phase portrait at one mu");
    c_portrait->add_option("--mu", o.mu, "mu1 mu2")->expected(2);
    c_portrait->add_option("--window", o.window, "x0 x1 y0 y1")->expected(4);
    c_portrait->add_option("--resolution", o.resolution, "nullcline grid cells per side");
    c_portrait->add_option("--seeds", o.seeds, "seeds per window side");
    c_portrait->add_option("--t-max", o.t_max, "integration horizon");
    auto* c_verify = app.add_subcommand("verify", "Sotomayor and Hopf checks on all curves");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        log_tolerances(o.tols);
        if (c_case->parsed()) return cmd_case(o);
        if (c_analyze->parsed()) return cmd_analyze(o);
        if (c_curves->parsed()) return cmd_curves(o);
        if (c_sweep->parsed()) return cmd_sweep(o);
        if (c_portrait->parsed()) return cmd_portrait(o);
        if (c_verify->parsed()) return cmd_verify(o);
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const NumericalError& e) {
        std::cerr << "numerical error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
