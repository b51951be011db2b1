#pragma once

#include <cmath>
#include <stdexcept>

namespace hng {

inline double norm_cdf(double x) { return 0.5 * std::erfc(-x * M_SQRT1_2); }

inline double norm_pdf(double x) { return 0.3989422804014327 * std::exp(-0.5 * x * x); }

/// Black-Scholes call price; T in years, r and sigma annualized.
inline double bs_call(double S, double K, double T, double r, double sigma) {
    if (T <= 0.0) return std::max(0.0, S - K);
    if (sigma <= 0.0) return std::max(0.0, S - K * std::exp(-r * T));
    const double st = sigma * std::sqrt(T);
    const double d1 = (std::log(S / K) + (r + 0.5 * sigma * sigma) * T) / st;
    const double d2 = d1 - st;
    return S * norm_cdf(d1) - K * std::exp(-r * T) * norm_cdf(d2);
}

inline double bs_put(double S, double K, double T, double r, double sigma) {
    return bs_call(S, K, T, r, sigma) - S + K * std::exp(-r * T);
}

/// dC/dsigma, always >= 0.
inline double bs_vega_annual(double S, double K, double T, double r, double sigma) {
    if (T <= 0.0) return 0.0;
    const double st = sigma * std::sqrt(T);
    const double d1 = (std::log(S / K) + (r + 0.5 * sigma * sigma) * T) / st;
    return S * std::sqrt(T) * norm_pdf(d1);
}

inline double bs_delta_call(double S, double K, double T, double r, double sigma) {
    if (T <= 0.0) return S > K ? 1.0 : 0.0;
    const double st = sigma * std::sqrt(T);
    const double d1 = (std::log(S / K) + (r + 0.5 * sigma * sigma) * T) / st;
    return norm_cdf(d1);
}

/**
 * @brief Implied volatility of a call by safeguarded Newton iteration.
 *
 * Converges to 1e-10 absolute in vol. Throws if the price is outside the
 * no-arbitrage band [max(0, S - K e^{-rT}), S].
 */
inline double bs_implied_vol_call(double price, double S, double K, double T, double r) {
    const double lower = std::max(0.0, S - K * std::exp(-r * T));
    if (!(price >= lower - 1e-12 * S) || !(price <= S * (1.0 + 1e-12)))
        throw std::runtime_error("bs_implied_vol: price outside no-arbitrage band");
    if (T <= 0.0) throw std::invalid_argument("bs_implied_vol: T must be > 0");
    double lo = 1e-9, hi = 5.0;
    while (bs_call(S, K, T, r, hi) < price && hi < 50.0) hi *= 2.0;
    double sigma = 0.2;
    for (int it = 0; it < 100; ++it) {
        const double f = bs_call(S, K, T, r, sigma) - price;
        if (f > 0.0) hi = sigma; else lo = sigma;
        const double v = bs_vega_annual(S, K, T, r, sigma);
        double next = sigma - f / v;
        if (!(next > lo && next < hi) || !std::isfinite(next)) next = 0.5 * (lo + hi);
        if (std::abs(next - sigma) < 1e-12) return next;
        sigma = next;
    }
    return sigma;
}

}  // namespace hng
