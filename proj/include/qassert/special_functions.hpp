// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <vector>

namespace qassert {

/// log(n!) via log-gamma.
double log_factorial(std::uint64_t n);

/// log(0!) ... log(n!) as a lookup table.
std::vector<double> log_factorial_table(std::uint64_t n);

/// Upper regularized incomplete gamma Q(a, x) = Gamma(a, x) / Gamma(a).
///
/// Uses the power series of P(a, x) for x < a + 1 and a Lentz continued
/// fraction for Q otherwise. Requires a > 0 and x >= 0 (ArgumentError);
/// throws NumericalError if either expansion fails to converge within
/// 500 iterations. Absolute error is below 1e-10.
double upper_regularized_gamma(double a, double x);

/// P(a, x) = 1 - Q(a, x), computed without cancellation on the series side.
double lower_regularized_gamma(double a, double x);

/// Survival function of the chi-square distribution: Q(dof / 2, stat / 2).
double chi_square_survival(double statistic, double dof);

}  // namespace qassert
