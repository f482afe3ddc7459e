#include "greedy_spectra/spectral.hpp"

#include "greedy_spectra/error.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <string>

namespace greedy_spectra {

double Spectrum::sum_of_powers(int k) const {
  // Ascending magnitude keeps cancellation between ±λ pairs small.
  std::vector<double> terms;
  terms.reserve(values.size());
  for (double x : values) terms.push_back(std::pow(x, k));
  std::sort(terms.begin(), terms.end(), [](double a, double b) { return std::fabs(a) < std::fabs(b); });
  long double sum = 0.0L;
  for (double x : terms) sum += x;
  return static_cast<double>(sum);
}

PowerSeriesFunctional::PowerSeriesFunctional(std::vector<double> coefficients, bool nonneg_even)
    : coefficients_(std::move(coefficients)), nonneg_even_(nonneg_even) {
  if (coefficients_.empty()) throw Error(ErrorCode::InvalidBounds, "a functional needs at least a_0");
  for (double a : coefficients_) {
    if (!std::isfinite(a)) throw Error(ErrorCode::InvalidBounds, "coefficients must be finite");
  }
  if (nonneg_even_) {
    for (std::size_t k = 0; k < coefficients_.size(); k += 2) {
      if (coefficients_[k] < 0.0) {
        throw Error(ErrorCode::InvalidBounds, "coefficient a_" + std::to_string(k) + " is negative");
      }
    }
  }
}

PowerSeriesFunctional PowerSeriesFunctional::exponential(int order) {
  std::vector<double> a(static_cast<std::size_t>(order) + 1);
  double term = 1.0;
  for (int k = 0; k <= order; ++k) {
    if (k > 0) term /= k;
    a[static_cast<std::size_t>(k)] = term;
  }
  return PowerSeriesFunctional(std::move(a), true);
}

PowerSeriesFunctional PowerSeriesFunctional::monomial(int power) {
  std::vector<double> a(static_cast<std::size_t>(power) + 1, 0.0);
  a.back() = 1.0;
  return PowerSeriesFunctional(std::move(a), true);
}

std::vector<double> adjacency_matrix(const Tree& t) {
  const auto n = static_cast<std::size_t>(t.size());
  std::vector<double> a(n * n, 0.0);
  for (const auto& [u, v] : t.edges()) {
    a[static_cast<std::size_t>(u) * n + static_cast<std::size_t>(v)] = 1.0;
    a[static_cast<std::size_t>(v) * n + static_cast<std::size_t>(u)] = 1.0;
  }
  return a;
}

Spectrum eigenvalues(const Tree& t, double tol) {
  if (!(tol > 0.0)) throw Error(ErrorCode::InvalidBounds, "tolerance must be positive");
  const auto n = static_cast<std::size_t>(t.size());
  std::vector<double> a = adjacency_matrix(t);
  auto at = [&](std::size_t i, std::size_t j) -> double& { return a[i * n + j]; };

  constexpr int kMaxSweeps = 100;
  bool converged = false;
  for (int sweep = 0; sweep <= kMaxSweeps; ++sweep) {
    // Each diagonal entry is within the off-diagonal Frobenius norm of an eigenvalue.
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) off += 2.0 * at(p, q) * at(p, q);
    }
    if (std::sqrt(off) <= tol) {
      converged = true;
      break;
    }
    if (sweep == kMaxSweeps) break;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = at(p, q);
        if (apq == 0.0) continue;
        const double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
        const double tan = (theta >= 0.0 ? 1.0 : -1.0) / (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(tan * tan + 1.0);
        const double s = tan * c;
        for (std::size_t k = 0; k < n; ++k) {
          if (k == p || k == q) continue;
          const double akp = at(k, p);
          const double akq = at(k, q);
          at(k, p) = at(p, k) = c * akp - s * akq;
          at(k, q) = at(q, k) = s * akp + c * akq;
        }
        at(p, p) -= tan * apq;
        at(q, q) += tan * apq;
        at(p, q) = at(q, p) = 0.0;
      }
    }
  }
  if (!converged) throw Error(ErrorCode::NonConvergence, "Jacobi sweeps exceeded the cap");
  Spectrum s;
  s.tol = tol;
  s.values.reserve(n);
  for (std::size_t i = 0; i < n; ++i) s.values.push_back(at(i, i));
  std::sort(s.values.begin(), s.values.end(), std::greater<>());
  return s;
}

int estrada_truncation_order(int n, int max_degree, double tol) {
  if (max_degree <= 0) return 0;
  const double log_tol = std::log(tol);
  const double log_delta = std::log(static_cast<double>(max_degree));
  for (int k = 0;; ++k) {
    const double log_tail =
        std::log(static_cast<double>(n)) + (k + 1) * log_delta - std::lgamma(k + 2.0) + max_degree;
    if (log_tail < log_tol) return k;
  }
}

double estrada_from_moments(const MomentVector& moments) {
  long double sum = 0.0L;
  for (std::size_t k = 0; k < moments.size(); ++k) {
    if (moments[k] == 0) continue;
    sum += std::exp(static_cast<long double>(log_of(moments[k])) - std::lgamma(static_cast<long double>(k) + 1.0L));
  }
  return static_cast<double>(sum);
}

double estrada_index(const Tree& t, double tol) {
  if (!(tol > 0.0)) throw Error(ErrorCode::InvalidBounds, "tolerance must be positive");
  const Spectrum spectrum = eigenvalues(t, std::min(tol, 1e-13));
  std::vector<double> terms;
  for (double x : spectrum.values) terms.push_back(std::exp(x));
  std::sort(terms.begin(), terms.end());
  long double by_spectrum = 0.0L;
  for (double x : terms) by_spectrum += x;

  const int order = estrada_truncation_order(t.size(), t.max_degree(), tol);
  const double by_moments = estrada_from_moments(spectral_moments_up_to(t, order));
  if (std::fabs(static_cast<double>(by_spectrum) - by_moments) > 10.0 * tol) {
    throw Error(ErrorCode::MethodDisagreement, "spectral sum " + std::to_string(static_cast<double>(by_spectrum)) +
                                                   " vs moment series " + std::to_string(by_moments));
  }
  return static_cast<double>(by_spectrum);
}

double evaluate_functional(const Tree& t, const PowerSeriesFunctional& f) {
  const MomentVector m = spectral_moments_up_to(t, f.order());
  long double sum = 0.0L;
  for (std::size_t k = 0; k < m.size(); ++k) {
    const double a = f.coefficients()[k];
    if (a == 0.0 || m[k] == 0) continue;
    sum += static_cast<long double>(a) * to_long_double(m[k]);
  }
  return static_cast<double>(sum);
}

double spectral_radius(const Tree& t, double tol) {
  if (!(tol > 0.0)) throw Error(ErrorCode::InvalidBounds, "tolerance must be positive");
  const auto n = static_cast<std::size_t>(t.size());
  // Shifting by I separates ρ+1 from 1-ρ, which power iteration on a bipartite
  // A alone cannot do.
  std::vector<double> x(n, 1.0 / std::sqrt(static_cast<double>(n)));
  constexpr long kMaxIterations = 1'000'000;
  double rho = 0.0;
  bool converged = false;
  for (long it = 0; it < kMaxIterations; ++it) {
    std::vector<double> y(x);
    for (Vertex v = 0; v < t.size(); ++v) {
      for (Vertex w : t.neighbors(v)) y[static_cast<std::size_t>(v)] += x[static_cast<std::size_t>(w)];
    }
    double mu = 0.0;
    for (std::size_t i = 0; i < n; ++i) mu += x[i] * y[i];
    double residual = 0.0;
    double norm = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double r = y[i] - mu * x[i];
      residual += r * r;
      norm += y[i] * y[i];
    }
    rho = mu - 1.0;
    if (std::sqrt(residual) <= tol) {
      converged = true;
      break;
    }
    norm = std::sqrt(norm);
    for (std::size_t i = 0; i < n; ++i) x[i] = y[i] / norm;
  }
  if (!converged) throw Error(ErrorCode::NonConvergence, "power iteration exceeded the iteration cap");

  // ||λ||_{2l} = M_2l^(1/2l) is non-increasing in l and bounded below by ρ.
  if (n >= 2) {
    constexpr int kMaxHalfOrder = 8;
    const MomentVector m = spectral_moments_up_to(t, 2 * kMaxHalfOrder);
    double previous = std::numeric_limits<double>::infinity();
    const double slack = tol + 1e-12 * std::max(1.0, rho);
    for (int l = 1; l <= kMaxHalfOrder; ++l) {
      const double root = std::exp(log_of(m[static_cast<std::size_t>(2 * l)]) / (2.0 * l));
      const double upper = std::pow(static_cast<double>(n), 1.0 / (2.0 * l)) * rho;
      if (root < rho - slack || root > upper + slack || root > previous + slack) {
        throw Error(ErrorCode::MethodDisagreement,
                    "moment root " + std::to_string(root) + " at 2l=" + std::to_string(2 * l) +
                        " is inconsistent with spectral radius " + std::to_string(rho));
      }
      previous = root;
    }
  }
  return rho;
}

namespace {

IntPolynomial multiply(const IntPolynomial& a, const IntPolynomial& b) {
  IntPolynomial out(a.size() + b.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

void subtract_in_place(IntPolynomial& a, const IntPolynomial& b) {
  if (a.size() < b.size()) a.resize(b.size(), BigInt(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
}

IntPolynomial shift_by_x(const IntPolynomial& a) {
  IntPolynomial out(a.size() + 1, BigInt(0));
  for (std::size_t i = 0; i < a.size(); ++i) out[i + 1] = a[i];
  return out;
}

}  // namespace

IntPolynomial characteristic_polynomial(const Tree& t) {
  const auto n = static_cast<std::size_t>(t.size());
  // BFS order from vertex 0; process in reverse so children precede parents.
  std::vector<Vertex> order{0};
  std::vector<Vertex> parent(n, -1);
  std::vector<bool> seen(n, false);
  seen[0] = true;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (Vertex y : t.neighbors(order[i])) {
      if (!seen[static_cast<std::size_t>(y)]) {
        seen[static_cast<std::size_t>(y)] = true;
        parent[static_cast<std::size_t>(y)] = order[i];
        order.push_back(y);
      }
    }
  }
  std::vector<IntPolynomial> p(n);  // char poly of the subtree at v
  std::vector<IntPolynomial> q(n);  // char poly of that subtree minus v
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const Vertex v = *it;
    std::vector<Vertex> kids;
    for (Vertex y : t.neighbors(v)) {
      if (y != parent[static_cast<std::size_t>(v)]) kids.push_back(y);
    }
    const std::size_t d = kids.size();
    std::vector<IntPolynomial> prefix(d + 1, IntPolynomial{BigInt(1)});
    std::vector<IntPolynomial> suffix(d + 1, IntPolynomial{BigInt(1)});
    for (std::size_t i = 0; i < d; ++i) prefix[i + 1] = multiply(prefix[i], p[static_cast<std::size_t>(kids[i])]);
    for (std::size_t i = d; i-- > 0;) suffix[i] = multiply(suffix[i + 1], p[static_cast<std::size_t>(kids[i])]);
    IntPolynomial result = shift_by_x(prefix[d]);
    for (std::size_t i = 0; i < d; ++i) {
      subtract_in_place(result, multiply(q[static_cast<std::size_t>(kids[i])], multiply(prefix[i], suffix[i + 1])));
    }
    q[static_cast<std::size_t>(v)] = prefix[d];
    p[static_cast<std::size_t>(v)] = std::move(result);
  }
  IntPolynomial out = std::move(p[0]);
  out.resize(n + 1, BigInt(0));
  return out;
}

long double evaluate_char_poly(const IntPolynomial& coefficients, long double x) {
  long double acc = 0.0L;
  for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) acc = acc * x + to_long_double(*it);
  return acc;
}

}  // namespace greedy_spectra
