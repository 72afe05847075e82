// SPDX-License-Identifier: Apache-2.0

// Reference implementations used only by tests. They share no code with the
// library: exact integer arithmetic, direct factorials and numerical
// quadrature.

#pragma once

#include <cmath>
#include <algorithm>
#include <cstdint>
#include <limits>
#include <vector>

#include <boost/math/quadrature/exp_sinh.hpp>

namespace oracle {

inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;  // exact at every step
    return r;
}

// Two-sided Fisher p for [[a,b],[c,d]] by enumerating the top-left cell.
// Table weights are the integers C(r0,x)*C(r1,c0-x); the relative tie slack
// of 1e-7 is applied in integer arithmetic. Valid for N <= 60 or so.
inline double fisher_enumeration(std::uint64_t a, std::uint64_t b, std::uint64_t c, std::uint64_t d) {
    const std::uint64_t r0 = a + b, r1 = c + d, c0 = a + c, n = a + b + c + d;
    auto weight = [&](std::uint64_t x) { return binomial(r0, x) * binomial(r1, c0 - x); };
    const std::uint64_t observed = weight(a);
    const std::uint64_t lo = c0 > r1 ? c0 - r1 : 0;
    const std::uint64_t hi = std::min(r0, c0);
    std::uint64_t mass = 0;
    for (std::uint64_t x = lo; x <= hi; ++x) {
        const std::uint64_t w = weight(x);
        if (w * 10'000'000 <= observed * 10'000'001) mass += w;
    }
    const long double p = static_cast<long double>(mass) / static_cast<long double>(binomial(n, c0));
    return static_cast<double>(std::min<long double>(1.0L, p));
}

inline long double factorial(std::uint64_t n) {
    long double f = 1.0L;
    for (std::uint64_t i = 2; i <= n; ++i) f *= static_cast<long double>(i);
    return f;
}

// log P(table) under fixed margins from direct factorials (N <= 20 is exact).
inline double table_log_probability(const std::vector<std::vector<std::uint64_t>> &t) {
    std::vector<std::uint64_t> rows(t.size(), 0), cols(t.at(0).size(), 0);
    std::uint64_t n = 0;
    for (std::size_t i = 0; i < t.size(); ++i) {
        for (std::size_t j = 0; j < t[i].size(); ++j) {
            rows[i] += t[i][j];
            cols[j] += t[i][j];
            n += t[i][j];
        }
    }
    long double num = 1.0L, den = factorial(n);
    for (auto r : rows) num *= factorial(r);
    for (auto c : cols) num *= factorial(c);
    for (const auto &row : t) {
        for (auto o : row) den *= factorial(o);
    }
    return static_cast<double>(std::log(num / den));
}

// Chi-square upper tail by integrating the density over [stat, inf).
inline double chi_square_tail_quadrature(double stat, double dof) {
    const double k = dof / 2.0;
    const double log_norm = k * std::log(2.0) + std::lgamma(k);
    auto density = [&](double u) {
        const double t = stat + u;
        return std::exp((k - 1.0) * std::log(t) - t / 2.0 - log_norm);
    };
    boost::math::quadrature::exp_sinh<double> integrator;
    return integrator.integrate(density, 0.0, std::numeric_limits<double>::infinity());
}

}  // namespace oracle
