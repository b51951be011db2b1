#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace hng {

/// A one-dimensional quadrature rule: sum_i w[i] f(x[i]).
struct QuadratureRule {
    std::vector<double> x;
    std::vector<double> w;
};

/// Default node count used throughout pricing and score integration.
inline constexpr int kDefaultQuadNodes = 32;

/**
 * @brief Gauss-Hermite rule for integrals of the form int e^{-x^2} f(x) dx.
 *
 * Nodes are roots of the physicists' Hermite polynomial H_n, found by Newton
 * iteration on the orthonormal recurrence (stable for large n).
 */
inline QuadratureRule gauss_hermite(int n) {
    if (n < 1) throw std::invalid_argument("gauss_hermite: n must be >= 1");
    QuadratureRule rule;
    rule.x.assign(static_cast<std::size_t>(n), 0.0);
    rule.w.assign(static_cast<std::size_t>(n), 0.0);
    const double pim4 = 0.7511255444649425;  // pi^{-1/4}
    const int m = (n + 1) / 2;
    double z = 0.0;
    for (int i = 0; i < m; ++i) {
        if (i == 0) {
            z = std::sqrt(2.0 * n + 1.0) - 1.85575 * std::pow(2.0 * n + 1.0, -1.0 / 6.0);
        } else if (i == 1) {
            z -= 1.14 * std::pow(static_cast<double>(n), 0.426) / z;
        } else if (i == 2) {
            z = 1.86 * z - 0.86 * rule.x[0];
        } else if (i == 3) {
            z = 1.91 * z - 0.91 * rule.x[1];
        } else {
            z = 2.0 * z - rule.x[static_cast<std::size_t>(i) - 2];
        }
        double pp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p1 = pim4;
            double p2 = 0.0;
            for (int j = 0; j < n; ++j) {
                const double p3 = p2;
                p2 = p1;
                p1 = z * std::sqrt(2.0 / (j + 1.0)) * p2 - std::sqrt(static_cast<double>(j) / (j + 1.0)) * p3;
            }
            pp = std::sqrt(2.0 * n) * p2;
            const double z1 = z;
            z = z1 - p1 / pp;
            if (std::abs(z - z1) <= 1e-15 * std::max(1.0, std::abs(z))) break;
        }
        rule.x[static_cast<std::size_t>(i)] = z;
        rule.x[static_cast<std::size_t>(n - 1 - i)] = -z;
        rule.w[static_cast<std::size_t>(i)] = 2.0 / (pp * pp);
        rule.w[static_cast<std::size_t>(n - 1 - i)] = rule.w[static_cast<std::size_t>(i)];
    }
    return rule;
}

/**
 * @brief Gauss-Laguerre rule for integrals of the form int_0^inf e^{-x} f(x) dx.
 *
 * For int_0^inf f(x) dx, evaluate sum_i w[i] e^{x[i]} f(x[i]); the
 * exponential compensation is left to the caller.
 */
inline QuadratureRule gauss_laguerre(int n) {
    if (n < 1) throw std::invalid_argument("gauss_laguerre: n must be >= 1");
    QuadratureRule rule;
    rule.x.assign(static_cast<std::size_t>(n), 0.0);
    rule.w.assign(static_cast<std::size_t>(n), 0.0);
    double z = 0.0;
    for (int i = 0; i < n; ++i) {
        if (i == 0) {
            z = 3.0 / (1.0 + 2.4 * n);
        } else if (i == 1) {
            z += 15.0 / (1.0 + 2.5 * n);
        } else {
            const double ai = i - 1.0;
            z += (1.0 + 2.55 * ai) / (1.9 * ai + 1.0) * (z - rule.x[static_cast<std::size_t>(i) - 2]);
        }
        double pp = 0.0;
        double p2 = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p1 = 1.0;
            p2 = 0.0;
            for (int j = 0; j < n; ++j) {
                const double p3 = p2;
                p2 = p1;
                p1 = ((2.0 * j + 1.0 - z) * p2 - j * p3) / (j + 1.0);
            }
            pp = n * (p1 - p2) / z;
            const double z1 = z;
            z = z1 - p1 / pp;
            if (std::abs(z - z1) <= 1e-14 * std::max(1.0, std::abs(z))) break;
        }
        rule.x[static_cast<std::size_t>(i)] = z;
        rule.w[static_cast<std::size_t>(i)] = -1.0 / (pp * n * p2);
    }
    return rule;
}

/**
 * @brief Gauss-Legendre rule on [-1, 1], by Newton iteration on P_n.
 */
inline QuadratureRule gauss_legendre(int n) {
    if (n < 1) throw std::invalid_argument("gauss_legendre: n must be >= 1");
    QuadratureRule rule;
    rule.x.assign(static_cast<std::size_t>(n), 0.0);
    rule.w.assign(static_cast<std::size_t>(n), 0.0);
    const int m = (n + 1) / 2;
    for (int i = 0; i < m; ++i) {
        double z = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p1 = 1.0, p2 = 0.0;
            for (int j = 0; j < n; ++j) {
                const double p3 = p2;
                p2 = p1;
                p1 = ((2.0 * j + 1.0) * z * p2 - j * p3) / (j + 1.0);
            }
            pp = n * (z * p1 - p2) / (z * z - 1.0);
            const double z1 = z;
            z = z1 - p1 / pp;
            if (std::abs(z - z1) < 1e-15) break;
        }
        rule.x[static_cast<std::size_t>(i)] = -z;
        rule.x[static_cast<std::size_t>(n - 1 - i)] = z;
        rule.w[static_cast<std::size_t>(i)] = 2.0 / ((1.0 - z * z) * pp * pp);
        rule.w[static_cast<std::size_t>(n - 1 - i)] = rule.w[static_cast<std::size_t>(i)];
    }
    return rule;
}

/// Shared, lazily built rules for the default node counts.
inline const QuadratureRule& hermite_rule(int n = kDefaultQuadNodes) {
    static thread_local std::vector<QuadratureRule> cache(129);
    static thread_local std::vector<bool> built(129, false);
    if (n < 1 || n > 128) throw std::invalid_argument("hermite_rule: n out of range");
    if (!built[static_cast<std::size_t>(n)]) {
        cache[static_cast<std::size_t>(n)] = gauss_hermite(n);
        built[static_cast<std::size_t>(n)] = true;
    }
    return cache[static_cast<std::size_t>(n)];
}

inline const QuadratureRule& laguerre_rule(int n = kDefaultQuadNodes) {
    static thread_local std::vector<QuadratureRule> cache(129);
    static thread_local std::vector<bool> built(129, false);
    if (n < 1 || n > 128) throw std::invalid_argument("laguerre_rule: n out of range");
    if (!built[static_cast<std::size_t>(n)]) {
        cache[static_cast<std::size_t>(n)] = gauss_laguerre(n);
        built[static_cast<std::size_t>(n)] = true;
    }
    return cache[static_cast<std::size_t>(n)];
}

/// E[f(z)] for z ~ N(0,1), via n-node Gauss-Hermite: (1/sqrt(pi)) sum h_i f(sqrt(2) x_i).
template <typename F>
double normal_expectation(F&& f, int n = kDefaultQuadNodes) {
    const QuadratureRule& rule = hermite_rule(n);
    double acc = 0.0;
    const double sqrt2 = std::sqrt(2.0);
    for (std::size_t i = 0; i < rule.x.size(); ++i) acc += rule.w[i] * f(sqrt2 * rule.x[i]);
    return acc / std::sqrt(M_PI);
}

}  // namespace hng
