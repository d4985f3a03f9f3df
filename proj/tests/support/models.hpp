#pragma once

#include <random>
#include <string>
#include <vector>

#include "kolmo/model.hpp"

namespace kt {

using kolmo::BivariatePoly;
using kolmo::SystemModel;

inline BivariatePoly cst(double c) { return BivariatePoly::constant(c); }

inline BivariatePoly lin(double c00, double c10, double c01) {
    BivariatePoly p;
    p.set(0, 0, c00);
    p.set(1, 0, c10);
    p.set(0, 1, c01);
    return p;
}

// CaseA family: theta = theta2 mu2, delta = delta0 + delta1 mu1
inline SystemModel case_a(double theta2, double gamma, double delta0, double delta1, double n,
                          double s = 0.0, double m = 0.0, double p = 0.0) {
    SystemModel md;
    md.theta = lin(0.0, 0.0, theta2);
    md.gamma = cst(gamma);
    md.delta = lin(delta0, delta1, 0.0);
    md.bigN = cst(n);
    md.bigS = cst(s);
    md.bigM = cst(m);
    md.bigP = cst(p);
    return md;
}

// CaseB family: delta = delta1 mu1
inline SystemModel case_b(double theta0, double gamma, double delta1, double s = 0.0,
                          double n = 0.0, double p = 0.0) {
    SystemModel md;
    md.theta = cst(theta0);
    md.gamma = cst(gamma);
    md.delta = lin(0.0, delta1, 0.0);
    md.bigN = cst(n);
    md.bigS = cst(s);
    md.bigP = cst(p);
    return md;
}

inline SystemModel ma() { return case_a(3.0, -1.0, 1.0, 1.0, 1.0); }
inline SystemModel ma_mirror() { return case_a(-3.0, -1.0, 1.0, 1.0, 1.0); }
inline SystemModel mh() { return case_a(-3.0, -1.0, -1.0, 0.0, 1.0); }
inline SystemModel mb() { return case_b(-1.0, -1.0, 1.0); }

struct Family {
    std::string name;
    SystemModel model;
};

// N > 0 throughout; sigma1 < 0 for G1..G5, > 0 for G6..G9
inline std::vector<Family> g_families() {
    return {
        {"G1", case_a(1.5, -1.0, 1.0, 1.0, 1.0)},
        {"G2", ma()},
        {"G3", case_a(-1.5, -1.0, -1.0, 1.0, 1.0)},
        {"G4", case_a(-3.0, -0.1, -1.0, 1.0, 1.0)},
        {"G5", case_a(-3.0, -1.0, -1.0, 1.0, 1.0)},
        {"G6", case_a(0.5, -1.0, 1.0, 1.0, 1.0)},
        {"G7", case_a(-1.0, -1.0, 1.0, 1.0, 1.0)},
        {"G8", case_a(1.0, -1.0, -1.0, 1.0, 1.0)},
        {"G9", case_a(-0.5, -1.0, -1.0, 1.0, 1.0)},
    };
}

// sign(theta) x sign(sigma2), sigma2 = (theta delta1 - S) / theta^2
inline std::vector<Family> f_families() {
    return {
        {"F1", case_b(1.0, -1.0, 1.0, 0.0)},
        {"F2", case_b(1.0, -1.0, 1.0, 2.0)},
        {"F3", case_b(-1.0, -1.0, 1.0, -2.0)},
        {"F4", mb()},
    };
}

inline BivariatePoly random_poly(std::mt19937_64& rng, double c00, int degree = 2) {
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    BivariatePoly p;
    for (int i = 0; i <= degree; ++i)
        for (int j = 0; i + j <= degree; ++j) p.set(i, j, u(rng));
    p.set(0, 0, c00);
    return p;
}

// Random model of the given case (true = CaseA). Leading constants are kept away from 0.
inline SystemModel random_model(std::mt19937_64& rng, bool case_a_model) {
    std::uniform_real_distribution<double> mag(0.3, 2.0);
    std::bernoulli_distribution coin(0.5);
    auto signed_mag = [&] { return coin(rng) ? mag(rng) : -mag(rng); };
    SystemModel m;
    m.gamma = random_poly(rng, -mag(rng));
    m.bigM = random_poly(rng, signed_mag());
    m.bigS = random_poly(rng, signed_mag());
    m.bigP = random_poly(rng, signed_mag());
    if (case_a_model) {
        m.theta = random_poly(rng, 0.0);
        m.delta = random_poly(rng, signed_mag());
        m.bigN = random_poly(rng, signed_mag());
        if (std::abs(m.theta.coeff(0, 1)) < 0.3) m.theta.set(0, 1, 1.0);
    } else {
        m.theta = random_poly(rng, signed_mag());
        m.delta = random_poly(rng, 0.0);
        m.bigN = random_poly(rng, signed_mag());
    }
    return m;
}

}  // namespace kt
