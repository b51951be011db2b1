#pragma once

// Benchmark parameter sets shared across the test suites. The *_opt set is an
// options-fitted calibration, *_vix a VIX-fitted one, and hng_opt a
// constant-eta calibration; all use omega = 0 and a daily rate of 1e-4.

#include <random>

#include "hng/core.hpp"

namespace fixtures {

inline hng::PhysicalParams physical_opt() {
    hng::PhysicalParams pp;
    pp.omega = 0.0;
    pp.beta = 0.507;
    pp.alpha = 5.740e-6;
    pp.gamma = 279.41;
    pp.lambda = 2.193;
    pp.r = 1e-4;
    return pp;
}

inline hng::KernelParams kernel_opt() {
    hng::KernelParams kp;
    kp.theta = 0.996;
    kp.zeta = 1.094;
    kp.sigma = 0.042;
    kp.sigma_e = 1.892;
    kp.rho = 0.148;
    return kp;
}

inline hng::PhysicalParams physical_vix() {
    hng::PhysicalParams pp;
    pp.omega = 0.0;
    pp.beta = 0.805;
    pp.alpha = 4.140e-6;
    pp.gamma = 193.29;
    pp.lambda = 2.390;
    pp.r = 1e-4;
    return pp;
}

inline hng::KernelParams kernel_vix() {
    hng::KernelParams kp;
    kp.theta = 0.983;
    kp.zeta = 1.299;
    kp.sigma = 0.089;
    kp.sigma_e = 1.007;
    kp.rho = 0.0;
    return kp;
}

inline hng::PhysicalParams physical_hng_opt() {
    hng::PhysicalParams pp;
    pp.omega = 0.0;
    pp.beta = 0.631;
    pp.alpha = 1.429e-6;
    pp.gamma = 499.99;
    pp.lambda = 2.280;
    pp.r = 1e-4;
    return pp;
}

inline hng::KernelParams kernel_hng_opt() {
    hng::KernelParams kp;
    kp.theta = 0.0;
    kp.zeta = 1.227;
    kp.sigma = 0.0;
    kp.sigma_e = 4.084;
    kp.rho = 0.0;
    return kp;
}

/// Draw an admissible random parameter/state configuration for property tests.
struct RandomDraw {
    hng::PhysicalParams pp;
    hng::KernelParams kp;
    double eta_t;
    double h_star;
};

inline RandomDraw random_admissible(std::mt19937_64& gen) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    RandomDraw d;
    d.pp.omega = u(gen) < 0.5 ? 0.0 : 1e-7 * u(gen);
    d.pp.beta = 0.2 + 0.7 * u(gen);
    d.pp.alpha = 5e-7 + 8e-6 * u(gen);
    double btilde;
    do {
        const double gl = 50.0 + 350.0 * u(gen);
        d.pp.gamma = gl - 2.0;
        d.pp.lambda = 2.0;
        btilde = d.pp.beta + d.pp.alpha * gl * gl;
    } while (btilde >= 0.999);
    d.pp.r = 1e-4;
    d.kp.theta = u(gen) < 0.1 ? 0.0 : -0.2 + 1.19 * u(gen);
    if (d.kp.theta >= 0.999) d.kp.theta = 0.998;
    d.kp.zeta = 0.7 + 0.8 * u(gen);
    d.kp.sigma = 0.1 * u(gen);
    d.kp.sigma_e = 0.5 + 2.0 * u(gen);
    d.kp.rho = 0.3 * u(gen);
    d.eta_t = 0.4 + 1.6 * u(gen);
    d.h_star = (0.3 + 3.0 * u(gen)) * 1e-4;
    return d;
}

}  // namespace fixtures
