#pragma once

#include <cmath>
#include <stdexcept>
#include <utility>

#include "hng/core.hpp"

namespace hng {

/// Annualizing factor for the VIX, 100 sqrt(252).
inline const double kVixAnnualizer = 100.0 * std::sqrt(252.0);

/**
 * @brief Decomposition of M sum E_t[h*_{t+k}] = a1 + a2 sigma^2 + a3 h*_{t+1}.
 *
 * a1 and a2 collect the double sum over expected eta cross-products, a3 the
 * multiplier of the current risk-neutral variance. beta_tilde is
 * beta + alpha (gamma + lambda)^2.
 */
struct VixTerms {
    double a1 = 0.0;
    double a2 = 0.0;
    double a3 = 1.0;
    double beta_tilde = 0.0;
};

/// Annualized VIX value for an M trading-day horizon.
struct VixQuote {
    double value = 0.0;
    int maturity_days = 0;
    double annualizer = 0.0;
};

/**
 * @brief Conditional AR(1) moments of eta.
 *
 * Returns (E_t[eta_{t+k}], E_t[(eta_{t+k} - zeta)^2]) where
 * E_t[eta_{t+k} - zeta] = theta^k (eta_t - zeta) and
 * E_t[(eta_{t+k} - zeta)^2] = theta^{2k} (eta_t - zeta)^2
 *                             + sigma^2 (1 - theta^{2k}) / (1 - theta^2).
 */
inline std::pair<double, double> ar1_moments(const KernelParams& kp, double eta_t, int k) {
    if (!(std::abs(kp.theta) < 1.0)) throw std::invalid_argument("ar1_moments: |theta| must be < 1");
    if (k < 0) throw std::invalid_argument("ar1_moments: k must be >= 0");
    const double d = eta_t - kp.zeta;
    const double tk = std::pow(kp.theta, k);
    const double t2k = tk * tk;
    const double mean = kp.zeta + tk * d;
    const double cvar = t2k * d * d + kp.sigma * kp.sigma * (1.0 - t2k) / (1.0 - kp.theta * kp.theta);
    return {mean, cvar};
}

namespace detail {

// (g(x) - g(y)) / (x - y) with g(x) = sum_{i=1}^{M-1} x^i, evaluated by the
// exact recurrence h_{i+1} = x h_i + y^i; equals g'(x) in the limit y -> x.
inline double geom_diff_quotient(double x, double y, int M) {
    double acc = 0.0, h = 1.0, ypow = 1.0;
    for (int i = 1; i <= M - 1; ++i) {
        acc += h;
        ypow *= y;
        h = x * h + ypow;
    }
    return acc;
}

// sum_{i=1}^{M-1} x^i (1 - y^i) / (1 - y) = (g(x) - g(xy)) / (1 - y),
// via the partial-geometric recurrence P_{i+1} = 1 + y P_i.
inline double geom_weighted_partial(double x, double y, int M) {
    double acc = 0.0, P = 1.0, xpow = x;
    for (int i = 1; i <= M - 1; ++i) {
        acc += xpow * P;
        P = 1.0 + y * P;
        xpow *= x;
    }
    return acc;
}

// P_M(x) = sum_{j=0}^{M-1} x^j.
inline double geom_partial_sum(double x, int M) {
    double acc = 0.0;
    for (int j = M - 1; j >= 0; --j) acc = 1.0 + x * acc;
    return acc;
}

// a2(M): alpha sum_{a=2}^{M-1} sum_{c=1}^{a-1} b^{a-1-c} theta^{a-c}
//        (1-theta^{2c})/(1-theta^2), cancellation-free for theta near 1.
inline double a2_recurrence(double alpha, double b, double theta, int M) {
    double acc = 0.0;
    double p = 1.0;  // sum_{j=0}^{c-1} theta^{2j} at c = a-1's running value
    double u = 0.0;  // inner sum for current a
    const double th2 = theta * theta;
    for (int a = 2; a <= M - 1; ++a) {
        // u_a = b*theta*u_{a-1} + theta*p_{a-1}, with p_c built alongside
        u = b * theta * u + theta * p;
        p = 1.0 + th2 * p;
        acc += u;
    }
    return alpha * acc;
}

inline VixTerms vix_terms_closed_impl(const PhysicalParams& pp, const KernelParams& kp,
                                      double eta_t, int M, double beta_tilde) {
    if (M < 1) throw std::invalid_argument("vix_terms: M must be >= 1");
    if (!(eta_t > 0.0)) throw std::invalid_argument("vix_terms: eta must be > 0");
    if (!(std::abs(kp.theta) < 1.0)) throw std::invalid_argument("vix_terms: |theta| must be < 1");
    const double b = beta_tilde;
    const double th = kp.theta;
    const double z = kp.zeta;
    const double d = eta_t - z;
    VixTerms terms;
    terms.beta_tilde = b;
    const double wz = pp.omega + pp.alpha * z;
    terms.a1 = wz * d * geom_weighted_partial(th, b, M)                   // (g(th)-g(b th))/(1-b) weight
             + z * wz * geom_weighted_partial(1.0, b, M)                  // (g(1)-g(b))/(1-b) weight
             + pp.alpha * z * d * geom_diff_quotient(th, b, M)            // (g(th)-g(b))/(th-b)
             + pp.alpha * d * d * th * geom_diff_quotient(th * th, b * th, M);  // (g(th^2)-g(b th))/(th-b)
    terms.a2 = a2_recurrence(pp.alpha, b, th, M);
    const double pbt = geom_partial_sum(b * th, M);
    const double pb = geom_partial_sum(b, M);
    terms.a3 = pbt + (pb - pbt) * z / eta_t;
    return terms;
}

}  // namespace detail

/**
 * @brief Closed-form VIX decomposition terms (Theorem 2 expressions).
 *
 * Removable singularities (theta = beta_tilde, beta_tilde = 1, ...) are
 * handled exactly: the geometric-sum ratios are evaluated by their defining
 * recurrences, which coincide with the analytic limits.
 */
inline VixTerms vix_terms_closed(const PhysicalParams& pp, const KernelParams& kp, double eta_t, int M) {
    return detail::vix_terms_closed_impl(pp, kp, eta_t, M, pp.beta_tilde());
}

/**
 * @brief Direct O(M^2) evaluation of the double sum defining a1, a2 and of a3.
 *
 * This is the normative definition the closed form must reproduce. Uses the
 * AR(1) cross moment E_t[eta_a eta_c] = theta^{a-c} E_t[eta_c^2]
 * + zeta (1 - theta^{a-c}) E_t[eta_c] for a >= c.
 */
inline VixTerms vix_terms_bruteforce(const PhysicalParams& pp, const KernelParams& kp, double eta_t, int M) {
    if (M < 1) throw std::invalid_argument("vix_terms_bruteforce: M must be >= 1");
    if (!(eta_t > 0.0)) throw std::invalid_argument("vix_terms_bruteforce: eta must be > 0");
    const double th = kp.theta;
    const double z = kp.zeta;
    const double d = eta_t - z;
    const double b = pp.beta_tilde();
    const double th2 = th * th;
    VixTerms terms;
    terms.beta_tilde = b;

    auto mean_at = [&](int j) { return z + std::pow(th, j) * d; };
    double a1 = 0.0, a2 = 0.0;
    for (int k = 2; k <= M; ++k) {
        for (int i = 2; i <= k; ++i) {
            const int a = k - 1;
            const int c = i - 2;
            const double bpow = std::pow(b, k - i);
            const double mu_a = mean_at(a);
            double cross0;   // sigma^2-free part of E[eta_{t+a} eta_{t+c}]
            double cross_s = 0.0;  // coefficient of sigma^2
            if (c == 0) {
                cross0 = eta_t * mu_a;
            } else {
                const double mu_c = mean_at(c);
                const double tac = std::pow(th, a - c);
                const double m2_free = std::pow(th, 2 * c) * d * d + 2.0 * z * mu_c - z * z;
                cross0 = tac * m2_free + z * (1.0 - tac) * mu_c;
                cross_s = tac * (1.0 - std::pow(th2, c)) / (1.0 - th2);
            }
            a1 += bpow * (pp.omega * mu_a + pp.alpha * cross0);
            a2 += bpow * pp.alpha * cross_s;
        }
    }
    terms.a1 = a1;
    terms.a2 = a2;
    double a3 = 0.0;
    for (int k = 1; k <= M; ++k) a3 += std::pow(b, k - 1) * mean_at(k - 1);
    terms.a3 = a3 / eta_t;
    return terms;
}

/// VIX = A sqrt((a1 + a2 sigma^2 + a3 h*) / M). Throws if the radicand is negative.
inline VixQuote vix_price_from_terms(const VixTerms& terms, double h_star_next, int M, double sigma2) {
    const double radicand = terms.a1 + terms.a2 * sigma2 + terms.a3 * h_star_next;
    if (!(radicand >= 0.0))
        throw std::runtime_error("vix_price: negative radicand (parameters outside admissible region)");
    VixQuote q;
    q.maturity_days = M;
    q.annualizer = kVixAnnualizer;
    q.value = kVixAnnualizer * std::sqrt(radicand / static_cast<double>(M));
    return q;
}

inline VixQuote vix_price(const PhysicalParams& pp, const KernelParams& kp, double eta_t,
                          double h_star_next, int M, double sigma2) {
    return vix_price_from_terms(vix_terms_closed(pp, kp, eta_t, M), h_star_next, M, sigma2);
}

/// d a1 / d eta_t at fixed M (derivative of the closed-form a1).
inline double da1_deta(const PhysicalParams& pp, const KernelParams& kp, double eta_t, int M) {
    const double b = pp.beta_tilde();
    const double th = kp.theta;
    const double z = kp.zeta;
    const double d = eta_t - z;
    return (pp.omega + pp.alpha * z) * detail::geom_weighted_partial(th, b, M)
         + pp.alpha * z * detail::geom_diff_quotient(th, b, M)
         + 2.0 * pp.alpha * d * th * detail::geom_diff_quotient(th * th, b * th, M);
}

/// d a3 / d eta_t = -[(1-b^M)/(1-b) - (1-(b theta)^M)/(1-b theta)] zeta / eta^2.
inline double da3_deta(const PhysicalParams& pp, const KernelParams& kp, double eta_t, int M) {
    const double b = pp.beta_tilde();
    const double pbt = detail::geom_partial_sum(b * kp.theta, M);
    const double pb = detail::geom_partial_sum(b, M);
    return -(pb - pbt) * kp.zeta / (eta_t * eta_t);
}

/**
 * @brief Lemma A.1 bound for the beta_tilde substitution error.
 *
 * Returns the VIX evaluated with beta_tilde replaced by its extreme values
 * beta + alpha (gamma + lambda + (eta_{L,H} - 1)/2)^2 over eta in
 * [eta_low, eta_high]; the approximation error is bounded by their spread.
 */
inline std::pair<double, double> delta_bound(const PhysicalParams& pp, const KernelParams& kp,
                                             double eta_low, double eta_high, double eta_t,
                                             double h_star_next, int M, double sigma2) {
    if (!(eta_low > 0.0) || !(eta_high >= eta_low))
        throw std::invalid_argument("delta_bound: need 0 < eta_low <= eta_high");
    auto delta_at = [&](double eta_edge) {
        const double gle = pp.gamma + pp.lambda + 0.5 * (eta_edge - 1.0);
        const double bt = pp.beta + pp.alpha * gle * gle;
        const VixTerms t = detail::vix_terms_closed_impl(pp, kp, eta_t, M, bt);
        const double radicand = t.a1 + t.a2 * sigma2 + t.a3 * h_star_next;
        return kVixAnnualizer * std::sqrt(std::max(0.0, radicand) / static_cast<double>(M));
    };
    return {delta_at(eta_low), delta_at(eta_high)};
}

}  // namespace hng
