// SPDX-License-Identifier: Apache-2.0

#include "qassert/special_functions.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "qassert/errors.hpp"

namespace qassert {

namespace {

constexpr int kMaxIterations = 500;
constexpr double kEpsilon = 1e-16;
constexpr double kTiny = 1e-300;

void check_domain(double a, double x) {
    if (!(a > 0.0) || !std::isfinite(a)) throw ArgumentError("incomplete gamma requires a > 0, got " + std::to_string(a));
    if (!(x >= 0.0)) throw ArgumentError("incomplete gamma requires x >= 0, got " + std::to_string(x));
}

// exp(a log x - x - lgamma(a)), the common prefactor of both expansions.
double prefactor(double a, double x) {
    return std::exp(a * std::log(x) - x - std::lgamma(a));
}

// P(a, x) by its power series; valid and fast for x < a + 1.
double lower_series(double a, double x) {
    double ap = a;
    double term = 1.0 / a;
    double sum = term;
    for (int n = 0; n < kMaxIterations; ++n) {
        ap += 1.0;
        term *= x / ap;
        sum += term;
        if (std::abs(term) < std::abs(sum) * kEpsilon) return sum * prefactor(a, x);
    }
    throw NumericalError("incomplete gamma series did not converge for a=" + std::to_string(a) + ", x=" + std::to_string(x));
}

// Q(a, x) by its continued fraction (modified Lentz); valid for x >= a + 1.
double upper_fraction(double a, double x) {
    double b = x + 1.0 - a;
    double c = 1.0 / kTiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i <= kMaxIterations; ++i) {
        const double an = -i * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < kTiny) d = kTiny;
        c = b + an / c;
        if (std::abs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        const double delta = d * c;
        h *= delta;
        if (std::abs(delta - 1.0) < kEpsilon) return h * prefactor(a, x);
    }
    throw NumericalError("incomplete gamma continued fraction did not converge for a=" + std::to_string(a) +
                         ", x=" + std::to_string(x));
}

}  // namespace

double log_factorial(std::uint64_t n) { return std::lgamma(static_cast<double>(n) + 1.0); }

std::vector<double> log_factorial_table(std::uint64_t n) {
    std::vector<double> table(n + 1);
    for (std::uint64_t k = 0; k <= n; ++k) table[k] = log_factorial(k);
    return table;
}

double upper_regularized_gamma(double a, double x) {
    check_domain(a, x);
    if (x == 0.0) return 1.0;
    if (std::isinf(x)) return 0.0;
    double q = x < a + 1.0 ? 1.0 - lower_series(a, x) : upper_fraction(a, x);
    return std::fmin(1.0, std::fmax(0.0, q));
}

double lower_regularized_gamma(double a, double x) {
    check_domain(a, x);
    if (x == 0.0) return 0.0;
    if (std::isinf(x)) return 1.0;
    double p = x < a + 1.0 ? lower_series(a, x) : 1.0 - upper_fraction(a, x);
    return std::fmin(1.0, std::fmax(0.0, p));
}

double chi_square_survival(double statistic, double dof) {
    if (!(dof > 0.0)) throw ArgumentError("chi-square needs positive degrees of freedom");
    if (!(statistic >= 0.0)) throw ArgumentError("chi-square statistic must be nonnegative");
    return upper_regularized_gamma(dof / 2.0, statistic / 2.0);
}

}  // namespace qassert
