#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "hng/black_scholes.hpp"
#include "hng/core.hpp"
#include "hng/quadrature.hpp"
#include "hng/vix.hpp"

namespace hng {

/// A European call quoted in daily units: M trading days to maturity, daily rate.
struct EuropeanCall {
    double spot = 0.0;
    double strike = 0.0;
    int maturity_days = 0;
    double rate = 0.0;  // daily

    void validate() const {
        if (!(spot > 0.0) || !(strike > 0.0))
            throw std::invalid_argument("EuropeanCall: spot and strike must be > 0");
        if (maturity_days < 1) throw std::invalid_argument("EuropeanCall: maturity_days must be >= 1");
    }
};

/// Maximum supported maturity in trading days (six months).
inline constexpr int kMaxMaturityDays = 126;

/**
 * @brief A path of the variance risk ratio relevant for pricing at time t:
 * current holds the filtered eta_t, future[j-1] holds eta_{t+j}.
 *
 * Day-j risk-neutral coefficients are built from consecutive pairs
 * (eta_{t+j}, eta_{t+j-1}); the first pair uses the filtered eta_t.
 */
struct EtaPath {
    double current = 1.0;
    std::vector<double> future;

    [[nodiscard]] double at(std::size_t j) const {  // eta_{t+j}, j = 0 is current
        return j == 0 ? current : future.at(j - 1);
    }
};

/// Expected future path E_t[eta_{t+j}] = zeta + theta^j (eta_t - zeta), j = 1..M.
inline std::vector<double> expected_eta_path(const KernelParams& kp, double eta_t, int M) {
    if (M < 1) throw std::invalid_argument("expected_eta_path: M must be >= 1");
    std::vector<double> path(static_cast<std::size_t>(M));
    const double d = eta_t - kp.zeta;
    double tj = 1.0;
    for (int j = 1; j <= M; ++j) {
        tj *= kp.theta;
        path[static_cast<std::size_t>(j - 1)] = kp.zeta + tj * d;
    }
    return path;
}

/// Affine MGF coefficients for cumulative returns: g*(s) = exp(A + B h*_{t+1}).
struct MgfCoeffs {
    std::complex<double> a_coef{0.0, 0.0};
    std::complex<double> b_coef{0.0, 0.0};
    int m = 0;
};

/**
 * @brief Backward MGF recursion of the cumulative-return generating function
 * under a predetermined eta path.
 *
 * A(s,1) = s r, B(s,1) = (s^2 - s)/2, and for m = 1..M-1 the step uses the
 * Q-day coefficients built from (eta_{t+j}, eta_{t+j-1}) with j = M - m.
 * Each step requires Re(1 - 2 alpha* B) > 0 (the per-day Gaussian integral
 * exists); a violation raises a pricing error naming the offending step.
 */
inline MgfCoeffs mgf_coeffs(const PhysicalParams& pp, const EtaPath& path, std::complex<double> s, int M) {
    if (M < 1) throw std::invalid_argument("mgf_coeffs: M must be >= 1");
    if (static_cast<int>(path.future.size()) < M - 1)
        throw std::invalid_argument("mgf_coeffs: eta path too short for maturity");
    std::complex<double> A = s * pp.r;
    std::complex<double> B = 0.5 * (s * s - s);
    for (int m = 1; m <= M - 1; ++m) {
        const int j = M - m;
        const double eta_j = path.at(static_cast<std::size_t>(j));
        const double eta_jm1 = path.at(static_cast<std::size_t>(j - 1));
        const QDayParams q = q_day_params(pp, eta_j, eta_jm1);
        const std::complex<double> w = 1.0 - 2.0 * q.alpha_star * B;
        if (!(w.real() > 0.0))
            throw std::runtime_error("mgf_coeffs: recursion singularity (Re(1-2a*B) <= 0) at step m=" +
                                     std::to_string(m));
        const std::complex<double> sg = s - q.gamma_star;
        const std::complex<double> A_next = A + s * pp.r + B * q.omega_star - 0.5 * std::log(w);
        const std::complex<double> B_next =
            s * (q.gamma_star - 0.5) - 0.5 * q.gamma_star * q.gamma_star + q.beta_star * B + sg * sg / (2.0 * w);
        A = A_next;
        B = B_next;
    }
    return MgfCoeffs{A, B, M};
}

/// g*(s) = exp(A + B h*_{t+1}).
inline std::complex<double> mgf_value(const MgfCoeffs& c, double h_star_next) {
    return std::exp(c.a_coef + c.b_coef * h_star_next);
}

/// Call price plus the Fourier-inversion probabilities (for diagnostics).
struct CallPriceDetail {
    double price = 0.0;
    double p1 = 0.0;
    double p2 = 0.0;
};

/// Integration-variable scale matching the characteristic-function decay:
/// phi = x / scale keeps the effective integrand resolvable by a fixed-node
/// Laguerre rule across maturities and moneyness. Depends only on the
/// contract and variance level, not on the node count.
inline double fourier_scale(int maturity_days, double h_star_next, double log_moneyness) {
    const double sd = std::sqrt(std::max(maturity_days * h_star_next, 1e-10));
    return std::max(sd, std::abs(log_moneyness) / 3.0);
}

/**
 * @brief Fourier-inversion call price under a predetermined eta path.
 *
 * C = S P1 - K e^{-rM} P2 with the half-line integrals evaluated by
 * n_nodes Gauss-Laguerre quadrature with exponential compensation, after
 * rescaling the integration variable by fourier_scale.
 */
inline CallPriceDetail price_call_predetermined_detail(const PhysicalParams& pp, const EuropeanCall& call,
                                                       const EtaPath& path, double h_star_next,
                                                       int n_nodes = kDefaultQuadNodes) {
    call.validate();
    const int M = call.maturity_days;
    const QuadratureRule& rule = laguerre_rule(n_nodes);
    const double log_moneyness = std::log(call.spot / call.strike);
    const double disc = std::exp(-pp.r * M);
    const double scale = fourier_scale(M, h_star_next, log_moneyness);
    double i1 = 0.0, i2 = 0.0;
    for (std::size_t k = 0; k < rule.x.size(); ++k) {
        const double phi = rule.x[k] / scale;
        const std::complex<double> iphi(0.0, phi);
        const std::complex<double> g1 = mgf_value(mgf_coeffs(pp, path, iphi + 1.0, M), h_star_next);
        const std::complex<double> g2 = mgf_value(mgf_coeffs(pp, path, iphi, M), h_star_next);
        const std::complex<double> rot = std::exp(iphi * log_moneyness);
        const double wgt = rule.w[k] * std::exp(rule.x[k]) / scale;
        i1 += wgt * (rot * g1 / iphi).real();
        i2 += wgt * (rot * g2 / iphi).real();
    }
    CallPriceDetail out;
    out.p1 = 0.5 + disc / M_PI * i1;
    out.p2 = 0.5 + i2 / M_PI;
    out.price = call.spot * out.p1 - call.strike * disc * out.p2;
    return out;
}

inline double price_call_predetermined(const PhysicalParams& pp, const EuropeanCall& call, const EtaPath& path,
                                       double h_star_next, int n_nodes = kDefaultQuadNodes) {
    return price_call_predetermined_detail(pp, call, path, h_star_next, n_nodes).price;
}

/// Certainty-equivalent variance compensation psi = a2 sigma^2 / a3.
inline double compensation_psi(const VixTerms& terms, double sigma2) {
    if (!(terms.a3 > 0.0)) throw std::invalid_argument("compensation_psi: a3 must be > 0");
    return terms.a2 * sigma2 / terms.a3;
}

/// d psi / d eta_t (a2 does not depend on eta).
inline double compensation_psi_deta(const PhysicalParams& pp, const KernelParams& kp, const VixTerms& terms,
                                    double eta_t, double sigma2, int M) {
    return -terms.a2 * sigma2 * da3_deta(pp, kp, eta_t, M) / (terms.a3 * terms.a3);
}

/**
 * @brief Approximate call price under stochastic eta: the predetermined
 * formula evaluated at the expected eta path and the compensated variance
 * h* + a2 sigma^2 / a3.
 */
inline double price_call_stochastic(const PhysicalParams& pp, const KernelParams& kp, const EuropeanCall& call,
                                    double eta_t, double h_star_next, double sigma2,
                                    int n_nodes = kDefaultQuadNodes) {
    const int M = call.maturity_days;
    EtaPath path;
    path.current = eta_t;
    path.future = expected_eta_path(kp, eta_t, M);
    const VixTerms terms = vix_terms_closed(pp, kp, eta_t, M);
    const double h_tilde = h_star_next + compensation_psi(terms, sigma2);
    return price_call_predetermined(pp, call, path, h_tilde, n_nodes);
}

/// Annualized Black-Scholes implied volatility of a call quoted in daily units.
inline double bs_implied_vol(double price, const EuropeanCall& call) {
    const double T = call.maturity_days / 252.0;
    return bs_implied_vol_call(price, call.spot, call.strike, T, call.rate * 252.0);
}

/// Black-Scholes vega (per unit annualized vol) of a call quoted in daily units.
inline double bs_vega(const EuropeanCall& call, double iv_annual) {
    const double T = call.maturity_days / 252.0;
    return bs_vega_annual(call.spot, call.strike, T, call.rate * 252.0, iv_annual);
}

}  // namespace hng
