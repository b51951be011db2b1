#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace hng {

/**
 * @brief Parameters of the Heston-Nandi GARCH model under the physical measure.
 *
 * Return dynamics:
 *   R_{t+1} = r + (lambda - 1/2) h_{t+1} + sqrt(h_{t+1}) z_{t+1},  z ~ N(0,1)
 *   h_{t+1} = omega + beta h_t + alpha (z_t - gamma sqrt(h_t))^2
 *
 * All variances are daily; r is the daily log risk-free rate.
 */
struct PhysicalParams {
    double omega = 0.0;   // variance intercept (>= 0)
    double beta = 0.0;    // variance persistence
    double alpha = 0.0;   // ARCH scale (> 0 for the eta <-> xi map)
    double gamma = 0.0;   // leverage
    double lambda = 0.0;  // equity risk premium (per unit variance)
    double r = 0.0;       // daily risk-free rate

    /// beta + alpha gamma^2, the physical persistence.
    [[nodiscard]] double persistence_p() const noexcept { return beta + alpha * gamma * gamma; }

    /// beta + alpha (gamma + lambda)^2, the persistence proxy used in VIX pricing.
    [[nodiscard]] double beta_tilde() const noexcept {
        const double gl = gamma + lambda;
        return beta + alpha * gl * gl;
    }

    /// Unconditional physical variance (omega + alpha) / (1 - beta - alpha gamma^2).
    [[nodiscard]] double unconditional_variance() const {
        const double pi_p = persistence_p();
        if (pi_p >= 1.0)
            throw std::invalid_argument("PhysicalParams: persistence >= 1, no unconditional variance");
        return (omega + alpha) / (1.0 - pi_p);
    }

    void validate() const {
        if (!(alpha > 0.0)) throw std::invalid_argument("PhysicalParams: alpha must be > 0");
        if (omega < 0.0 || beta < 0.0) throw std::invalid_argument("PhysicalParams: omega, beta must be >= 0");
        if (!(omega + alpha > 0.0)) throw std::invalid_argument("PhysicalParams: omega + alpha must be > 0");
    }
};

/**
 * @brief Dynamics of the variance risk ratio eta and the pricing-error law.
 *
 * eta_t = (1 - theta) zeta + theta eta_{t-1} + sigma s_{t-1}, with scaled
 * score innovations s. Pricing errors are N(0, sigma_e^2 Omega_N) with
 * equicorrelation rho.
 */
struct KernelParams {
    double theta = 0.0;    // AR(1) persistence of eta, |theta| < 1
    double zeta = 1.0;     // unconditional mean of eta (> 0)
    double sigma = 0.0;    // score innovation scale (>= 0)
    double sigma_e = 1.0;  // pricing-error std dev (implied-vol points)
    double rho = 0.0;      // common pricing-error correlation

    void validate(std::size_t n_max = 1) const {
        if (!(std::abs(theta) < 1.0)) throw std::invalid_argument("KernelParams: |theta| must be < 1");
        if (!(zeta > 0.0)) throw std::invalid_argument("KernelParams: zeta must be > 0");
        if (sigma < 0.0) throw std::invalid_argument("KernelParams: sigma must be >= 0");
        if (!(sigma_e > 0.0)) throw std::invalid_argument("KernelParams: sigma_e must be > 0");
        const double lo = n_max > 1 ? -1.0 / (static_cast<double>(n_max) - 1.0) : -1.0;
        if (!(rho > lo && rho < 1.0))
            throw std::invalid_argument("KernelParams: rho outside (" + std::to_string(lo) + ", 1)");
    }
};

/// Per-day filter output. h_star_next = eta * h_next exactly.
struct FilterState {
    double h_next = 0.0;       // physical conditional variance h_{t+1}
    double eta = 1.0;          // variance risk ratio eta_t
    double h_star_next = 0.0;  // risk-neutral conditional variance h*_{t+1}
    double score = 0.0;        // scaled score s_t
    double z = 0.0;            // standardized return shock z_t
};

/// Per-day risk-neutral GARCH coefficients.
struct QDayParams {
    double omega_star = 0.0;
    double beta_star = 0.0;
    double alpha_star = 0.0;
    double gamma_star = 0.0;
};

/// Pricing-kernel risk loadings.
struct KernelCoeffs {
    double xi = 0.0;   // variance risk aversion
    double phi = 0.0;  // equity risk coefficient
};

/// Floor applied to degenerate conditional variances during filtering.
inline constexpr double kVarianceFloor = 1e-12;

/// Floor applied to eta when the AR(1)/score update drives it non-positive.
inline constexpr double kEtaFloor = 0.05;

/// Result of filtering a return series: h has size T+1 (h[0] = h_init,
/// h[t] is the variance conditioning return t), z has size T.
struct VarianceFilterResult {
    std::vector<double> h;
    std::vector<double> z;
    std::size_t clamp_count = 0;  // days where h hit kVarianceFloor
};

/**
 * @brief Run the physical-measure HNG variance recursion over a return series.
 *
 * h_{t+1} = omega + beta h_t + alpha (z_t - gamma sqrt(h_t))^2 with
 * z_t = (R_t - r - (lambda - 1/2) h_t) / sqrt(h_t).
 *
 * Variances that fall below kVarianceFloor are clamped and counted.
 * Throws on non-finite returns or a non-positive starting variance.
 */
inline VarianceFilterResult filter_physical_variance(const PhysicalParams& pp,
                                                     const std::vector<double>& returns,
                                                     double h_init) {
    if (!(h_init > 0.0)) throw std::invalid_argument("filter_physical_variance: h_init must be > 0");
    VarianceFilterResult out;
    out.h.reserve(returns.size() + 1);
    out.z.reserve(returns.size());
    out.h.push_back(h_init);
    double h = h_init;
    for (std::size_t t = 0; t < returns.size(); ++t) {
        const double ret = returns[t];
        if (!std::isfinite(ret))
            throw std::runtime_error("filter_physical_variance: non-finite return at day " + std::to_string(t));
        const double sq = std::sqrt(h);
        const double z = (ret - pp.r - (pp.lambda - 0.5) * h) / sq;
        double h_next = pp.omega + pp.beta * h + pp.alpha * (z - pp.gamma * sq) * (z - pp.gamma * sq);
        if (!(h_next > kVarianceFloor)) {
            if (!std::isfinite(h_next))
                throw std::runtime_error("filter_physical_variance: non-finite variance at day " + std::to_string(t));
            h_next = kVarianceFloor;
            ++out.clamp_count;
        }
        out.z.push_back(z);
        out.h.push_back(h_next);
        h = h_next;
    }
    return out;
}

/// Risk-neutral GARCH coefficients for one day given (eta_t, eta_{t-1}).
inline QDayParams q_day_params(const PhysicalParams& pp, double eta_t, double eta_prev) {
    if (!(eta_t > 0.0) || !(eta_prev > 0.0))
        throw std::invalid_argument("q_day_params: eta must be > 0");
    QDayParams q;
    q.omega_star = pp.omega * eta_t;
    q.beta_star = pp.beta * eta_t / eta_prev;
    q.alpha_star = pp.alpha * eta_t * eta_prev;
    q.gamma_star = (pp.gamma + pp.lambda - 0.5) / eta_t + 0.5;
    return q;
}

/// Pricing-kernel loadings implied by eta_t.
inline KernelCoeffs kernel_coeffs(const PhysicalParams& pp, double eta_t) {
    if (!(pp.alpha > 0.0)) throw std::invalid_argument("kernel_coeffs: alpha must be > 0");
    if (!(eta_t > 0.0)) throw std::invalid_argument("kernel_coeffs: eta must be > 0");
    KernelCoeffs k;
    k.xi = (eta_t - 1.0) / (2.0 * pp.alpha * eta_t);
    k.phi = (eta_t - 1.0) / eta_t * (pp.gamma - 0.5) - pp.lambda / eta_t;
    return k;
}

/// eta recovered from xi: 1 / (1 - 2 alpha xi).
inline double eta_from_xi(const PhysicalParams& pp, double xi) {
    const double denom = 1.0 - 2.0 * pp.alpha * xi;
    if (!(denom > 0.0)) throw std::invalid_argument("eta_from_xi: 1 - 2 alpha xi must be > 0");
    return 1.0 / denom;
}

/**
 * @brief Log pricing-kernel contribution, up to the additive kappa_0 + kappa_1 h_t terms.
 *
 * Returns -lambda (R - r) + xi alpha (R - r)^2 / h_t. The optional kappa
 * terms require delta/pi inputs the model never estimates; callers that have
 * them can add kappa_0 + kappa_1 h_t.
 */
inline double log_kernel_quadratic(const PhysicalParams& pp, double xi, double h_t, double excess_return) {
    if (!(h_t > 0.0)) throw std::invalid_argument("log_kernel_quadratic: h_t must be > 0");
    return -pp.lambda * excess_return + xi * pp.alpha * excess_return * excess_return / h_t;
}

/// News impact curve under Q: alpha eta_t eta_{t-1} z*^2 - 2 alpha gamma eta_t sqrt(h*_t) z*.
inline double news_impact_curve(const PhysicalParams& pp, double eta_t, double eta_prev,
                                double h_star_t, double z_star) {
    if (!(h_star_t > 0.0)) throw std::invalid_argument("news_impact_curve: h_star_t must be > 0");
    return pp.alpha * eta_t * eta_prev * z_star * z_star -
           2.0 * pp.alpha * pp.gamma * eta_t * std::sqrt(h_star_t) * z_star;
}

/// Map the physical shock z to the risk-neutral shock z* for a day whose
/// measure change is governed by eta (i.e. var^Q(z) = eta), with h the
/// physical variance of that day's return and lambda the equity premium:
/// z* = (z + (lambda + eta/2 - 1/2) sqrt(h)) / sqrt(eta).
inline double q_shock_from_p(double z, double eta, double h, double lambda) {
    return (z + (lambda + 0.5 * eta - 0.5) * std::sqrt(h)) / std::sqrt(eta);
}

/// Inverse of q_shock_from_p: the physical shock implied by a Q shock z*.
inline double p_shock_from_q(double z_star, double eta, double h, double lambda) {
    return std::sqrt(eta) * z_star - (lambda + 0.5 * eta - 0.5) * std::sqrt(h);
}

}  // namespace hng
