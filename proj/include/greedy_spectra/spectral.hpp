#pragma once

#include "greedy_spectra/bigint.hpp"
#include "greedy_spectra/tree.hpp"
#include "greedy_spectra/walks.hpp"

#include <vector>

namespace greedy_spectra {

/// Adjacency eigenvalues, sorted descending, each within `tol` of the exact value.
struct Spectrum {
  std::vector<double> values;
  double tol = 0.0;

  double sum_of_powers(int k) const;
};

/// f(x) = sum_k a_k x^k truncated at K = coefficients.size() - 1.
class PowerSeriesFunctional {
 public:
  /// With `nonneg_even`, throws Error{InvalidBounds} if some even-index
  /// coefficient is negative.
  explicit PowerSeriesFunctional(std::vector<double> coefficients, bool nonneg_even = false);

  /// exp truncated at K.
  static PowerSeriesFunctional exponential(int order);
  static PowerSeriesFunctional monomial(int power);

  const std::vector<double>& coefficients() const noexcept { return coefficients_; }
  bool nonneg_even() const noexcept { return nonneg_even_; }
  int order() const noexcept { return static_cast<int>(coefficients_.size()) - 1; }

 private:
  std::vector<double> coefficients_;
  bool nonneg_even_;
};

using IntPolynomial = std::vector<BigInt>;  // constant term first

/// Dense symmetric adjacency matrix, row-major.
std::vector<double> adjacency_matrix(const Tree& t);

/// Cyclic Jacobi on the adjacency matrix. Throws Error{NonConvergence} after
/// the sweep cap.
Spectrum eigenvalues(const Tree& t, double tol);

/// Truncation order K of the exponential series such that
/// n * Δ^(K+1) / (K+1)! * e^Δ < tol.
int estrada_truncation_order(int n, int max_degree, double tol);

/// sum_k M_k / k! over k <= K, with exact moments.
double estrada_from_moments(const MomentVector& moments);

/// Sum of e^λ over the spectrum, cross-checked against the truncated moment
/// series. Throws Error{MethodDisagreement} when they differ by more than 10*tol.
double estrada_index(const Tree& t, double tol);

/// sum_k a_k M_k(T) with exact moments, converted to floating point at the end.
double evaluate_functional(const Tree& t, const PowerSeriesFunctional& f);

/// Largest eigenvalue by power iteration on A + I from the all-ones vector,
/// stopped when the residual norm falls below tol. Also checks that
/// M_2l^(1/2l) decreases towards it. Throws Error{NonConvergence}.
double spectral_radius(const Tree& t, double tol);

/// Exact characteristic polynomial det(xI - A) from the rooted recurrence
/// P(v) = x * prod P(c) - sum_c Q(c) * prod_{c' != c} P(c'), Q(v) = prod P(c).
IntPolynomial characteristic_polynomial(const Tree& t);

/// Horner evaluation.
long double evaluate_char_poly(const IntPolynomial& coefficients, long double x);

}  // namespace greedy_spectra
