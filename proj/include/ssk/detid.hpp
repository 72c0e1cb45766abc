#pragma once

// Residual verifiers for the three determinant identities behind the
// coefficient reduction: the Cauchy determinant, its bordered (first row of
// ones) variant, and the partial-product ratio determinant. Each returns
// the relative gap between the direct determinant and the closed product
// formula; an optional condition-number estimate of the matrix is written
// alongside so that large residuals can be told apart from ill conditioning.

#include <vector>

namespace ssk::detid {

// det{ 1/(x_k + y_l) } vs prod_{k<l}(x_k-x_l)(y_k-y_l) / prod_{k,l}(x_k+y_l).
// Throws std::domain_error on exact coincidences or x_k + y_l = 0.
double cauchy_residual(const std::vector<double>& x, const std::vector<double>& y,
                       double* condition = nullptr);

// First row of ones over rows 1/(x_k + b_a):
// det vs prod_{k<l}(x_k-x_l) prod_{a<b}(b_a-b_b) / prod_{k,a}(x_k+b_a).
// b has length n-1 for x of length n.
double bordered_cauchy_residual(const std::vector<double>& x,
                                const std::vector<double>& b,
                                double* condition = nullptr);

// Rows of partial products prod_{i<=a}(x_k+a_i)/(x_k+b_i), a = 0..n-1:
// det vs prod_{k<l}(x_k-x_l) prod_{a<=b}(a_a-b_b) / prod_{k,b}(x_k+b_b).
// a and b have length n-1.
double krattenthaler_residual(const std::vector<double>& x,
                              const std::vector<double>& a,
                              const std::vector<double>& b,
                              double* condition = nullptr);

} // namespace ssk::detid
