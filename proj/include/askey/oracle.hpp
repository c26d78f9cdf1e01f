#pragma once

// Independent ground truth for recurrence coefficients: moments of the
// orthogonality measures, the Chebyshev algorithm (moments -> coefficients),
// the discretized Stieltjes procedure for finite measures, and direct Gram
// matrices of polynomial tables.

#include "askey/errors.hpp"
#include "askey/families.hpp"
#include "askey/hypergeometric.hpp"
#include "askey/precision.hpp"
#include "askey/recurrence.hpp"

#include <algorithm>
#include <cstddef>
#include <iosfwd>
#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace askey {

template <class Real = double>
class DiscreteMeasure {
 public:
  DiscreteMeasure(std::vector<Real> points, std::vector<Real> weights)
      : points_(std::move(points)), weights_(std::move(weights)) {
    if (points_.size() != weights_.size()) {
      throw DomainError("discrete measure: " + std::to_string(points_.size()) + " points but " +
                        std::to_string(weights_.size()) + " weights");
    }
    if (points_.empty()) throw DomainError("discrete measure: no support points");
    for (std::size_t i = 0; i < weights_.size(); ++i) {
      if (!(weights_[i] > 0) || !is_finite(weights_[i])) {
        throw DomainError("discrete measure: weight #" + std::to_string(i) + " = " +
                          number_string(weights_[i]) + " is not positive");
      }
      if (!is_finite(points_[i])) {
        throw DomainError("discrete measure: point #" + std::to_string(i) + " is not finite");
      }
    }
    std::vector<Real> sorted = points_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw DomainError("discrete measure: support points are not distinct");
    }
  }

  std::size_t size() const noexcept { return points_.size(); }
  const std::vector<Real>& points() const noexcept { return points_; }
  const std::vector<Real>& weights() const noexcept { return weights_; }

  DiscreteMeasure scaled(const Real& factor) const {
    std::vector<Real> w = weights_;
    for (auto& v : w) v *= factor;
    return DiscreteMeasure(points_, std::move(w));
  }

 private:
  std::vector<Real> points_;
  std::vector<Real> weights_;
};

enum class MomentSource { Analytic, Quadrature, DiscreteSum };

/// Normalized moments m_k = int x^k dmu / int dmu, k = 0..k_max.
template <class Real = double>
struct MomentSequence {
  std::vector<Real> moments;
  MomentSource source = MomentSource::Analytic;
  /// Number of support points when the measure is finite.
  std::optional<std::size_t> support_size;
};

template <class Real>
MomentSequence<Real> hermite_moments(std::size_t k_max) {
  // m_{k+2} = m_k (k+1)/2 for e^{-x^2}
  std::vector<Real> m(k_max + 1, Real(0));
  m[0] = Real(1);
  for (std::size_t k = 0; k + 2 <= k_max; k += 2) {
    m[k + 2] = m[k] * Real(static_cast<double>(k + 1)) / Real(2);
  }
  return {std::move(m), MomentSource::Analytic, std::nullopt};
}

template <class Real>
MomentSequence<Real> laguerre_moments(const Real& alpha, std::size_t k_max) {
  detail::require_gt(alpha, -1.0, "laguerre weight", "alpha");
  // m_k = (alpha+1)_k for x^alpha e^{-x}
  std::vector<Real> m(k_max + 1, Real(1));
  for (std::size_t k = 1; k <= k_max; ++k) {
    m[k] = m[k - 1] * (alpha + Real(static_cast<double>(k)));
  }
  return {std::move(m), MomentSource::Analytic, std::nullopt};
}

template <class Real>
MomentSequence<Real> jacobi_moments(const Real& alpha, const Real& beta, std::size_t k_max) {
  detail::require_gt(alpha, -1.0, "jacobi weight", "alpha");
  detail::require_gt(beta, -1.0, "jacobi weight", "beta");
  // Integrating d/dx[(1-x)^{a+1} (1+x)^{b+1} x^k] over (-1,1) gives
  // (k + a + b + 2) m_{k+1} = k m_{k-1} + (b - a) m_k.
  const Real s2 = alpha + beta + Real(2);
  std::vector<Real> m(k_max + 1, Real(0));
  m[0] = Real(1);
  for (std::size_t k = 0; k < k_max; ++k) {
    const Real kk(static_cast<double>(k));
    Real next = (beta - alpha) * m[k];
    if (k >= 1) next += kk * m[k - 1];
    m[k + 1] = next / (kk + s2);
  }
  return {std::move(m), MomentSource::Analytic, std::nullopt};
}

template <class Real>
MomentSequence<Real> discrete_moments(const DiscreteMeasure<Real>& mu, std::size_t k_max) {
  std::vector<Real> m(k_max + 1, Real(0));
  Real mass(0);
  for (std::size_t i = 0; i < mu.size(); ++i) {
    Real term = mu.weights()[i];
    mass += term;
    for (std::size_t k = 0; k <= k_max; ++k) {
      m[k] += term;
      term *= mu.points()[i];
    }
  }
  for (auto& v : m) v /= mass;
  return {std::move(m), MomentSource::DiscreteSum, mu.size()};
}

/// Hahn weight (alpha+1)_x (beta+1)_{N-x} / (x! (N-x)!) on {0, ..., N}; N integer.
template <class Real>
DiscreteMeasure<Real> hahn_measure(const HahnParams<Real>& p) {
  detail::require_gt(p.alpha, -1.0, "hahn weight", "alpha");
  detail::require_gt(p.beta, -1.0, "hahn weight", "beta");
  const double nd = to_double(p.n_big);
  const auto big = static_cast<std::size_t>(nd);
  if (nd < 0 || static_cast<double>(big) != nd) {
    throw DomainError("hahn weight: N = " + number_string(p.n_big) +
                      " must be a nonnegative integer");
  }
  std::vector<Real> x, w;
  for (std::size_t k = 0; k <= big; ++k) {
    const Real left = pochhammer(p.alpha + Real(1), k) / pochhammer(Real(1), k);
    const Real right = pochhammer(p.beta + Real(1), big - k) / pochhammer(Real(1), big - k);
    x.push_back(Real(static_cast<double>(k)));
    w.push_back(left * right);
  }
  return DiscreteMeasure<Real>(std::move(x), std::move(w));
}

/// Binomial(N, p) weight on {0, ..., N}; N integer.
template <class Real>
DiscreteMeasure<Real> krawtchouk_measure(const KrawtchoukParams<Real>& p) {
  const double nd = to_double(p.n_big);
  const auto big = static_cast<std::size_t>(nd);
  if (nd < 0 || static_cast<double>(big) != nd) {
    throw DomainError("krawtchouk weight: N = " + number_string(p.n_big) +
                      " must be a nonnegative integer");
  }
  if (!(p.p > 0 && p.p < 1)) throw DomainError("krawtchouk weight: p must lie in (0, 1)");
  std::vector<Real> x, w;
  Real term(1);  // binom(N,k) (p/(1-p))^k
  const Real ratio = p.p / (Real(1) - p.p);
  for (std::size_t k = 0; k <= big; ++k) {
    x.push_back(Real(static_cast<double>(k)));
    w.push_back(term);
    term = term * Real(static_cast<double>(big - k)) / Real(static_cast<double>(k + 1)) * ratio;
  }
  return DiscreteMeasure<Real>(std::move(x), std::move(w));
}

namespace detail {

/// Truncates an infinite discrete weight given by w_{x+1} = ratio(x) w_x
/// once the tail is negligible for moments up to order 2 * n_max + 2.
template <class Real, class Ratio>
DiscreteMeasure<Real> truncated_measure(Ratio&& ratio, std::size_t n_max) {
  using std::pow;
  const Real eps = std::numeric_limits<Real>::epsilon();
  const Real tail_eps = eps * eps;
  const int power = static_cast<int>(2 * n_max + 2);
  std::vector<Real> x, w;
  Real term(1);
  Real mass(0);
  constexpr std::size_t kMaxPoints = 200000;
  for (std::size_t k = 0; k < kMaxPoints; ++k) {
    const Real xk(static_cast<double>(k));
    x.push_back(xk);
    w.push_back(term);
    mass += term;
    const Real r = ratio(xk);
    if (r < Real(1) && term * pow(xk + Real(1), power) < tail_eps * mass) break;
    term *= r;
  }
  return DiscreteMeasure<Real>(std::move(x), std::move(w));
}

}  // namespace detail

/// Meixner weight (beta)_x c^x / x!, truncated where the tail no longer
/// affects moments used by degrees up to n_max.
template <class Real>
DiscreteMeasure<Real> meixner_measure(const MeixnerParams<Real>& p, std::size_t n_max) {
  detail::require_gt(p.beta, 0.0, "meixner weight", "beta");
  if (!(p.c > 0 && p.c < 1)) throw DomainError("meixner weight: c must lie in (0, 1)");
  return detail::truncated_measure<Real>(
      [&](const Real& x) { return (p.beta + x) * p.c / (x + Real(1)); }, n_max);
}

/// Poisson weight a^x / x!, truncated as for Meixner.
template <class Real>
DiscreteMeasure<Real> charlier_measure(const CharlierParams<Real>& p, std::size_t n_max) {
  detail::require_gt(p.a, 0.0, "charlier weight", "a");
  return detail::truncated_measure<Real>([&](const Real& x) { return p.a / (x + Real(1)); },
                                         n_max);
}

/// Moments of a family's orthogonality weight. Racah has no weight-based
/// oracle here and throws DomainError.
template <class Real>
MomentSequence<Real> moments_of(const Family<Real>& family, std::size_t k_max) {
  const std::size_t n_max = k_max / 2;
  return std::visit(
      [&](const auto& p) -> MomentSequence<Real> {
        using P = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<P, HermiteParams<Real>>) {
          return hermite_moments<Real>(k_max);
        } else if constexpr (std::is_same_v<P, LaguerreParams<Real>>) {
          return laguerre_moments(p.alpha, k_max);
        } else if constexpr (std::is_same_v<P, JacobiParams<Real>>) {
          return jacobi_moments(p.alpha, p.beta, k_max);
        } else if constexpr (std::is_same_v<P, HahnParams<Real>>) {
          return discrete_moments(hahn_measure(p), k_max);
        } else if constexpr (std::is_same_v<P, MeixnerParams<Real>>) {
          return discrete_moments(meixner_measure(p, n_max), k_max);
        } else if constexpr (std::is_same_v<P, KrawtchoukParams<Real>>) {
          return discrete_moments(krawtchouk_measure(p), k_max);
        } else if constexpr (std::is_same_v<P, CharlierParams<Real>>) {
          return discrete_moments(charlier_measure(p, n_max), k_max);
        } else {
          throw DomainError(
              "racah: no weight-based oracle is available; use the hypergeometric "
              "cross-check instead");
        }
      },
      family);
}

/// The discrete orthogonality measure of a family, or nullopt for families
/// with a continuous weight.
template <class Real>
std::optional<DiscreteMeasure<Real>> discrete_measure_of(const Family<Real>& family,
                                                         std::size_t n_max) {
  return std::visit(
      [&](const auto& p) -> std::optional<DiscreteMeasure<Real>> {
        using P = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<P, HahnParams<Real>>) {
          return hahn_measure(p);
        } else if constexpr (std::is_same_v<P, MeixnerParams<Real>>) {
          return meixner_measure(p, n_max);
        } else if constexpr (std::is_same_v<P, KrawtchoukParams<Real>>) {
          return krawtchouk_measure(p);
        } else if constexpr (std::is_same_v<P, CharlierParams<Real>>) {
          return charlier_measure(p, n_max);
        } else if constexpr (std::is_same_v<P, RacahParams<Real>>) {
          throw DomainError(
              "racah: no weight-based oracle is available; use the hypergeometric "
              "cross-check instead");
        } else {
          return std::nullopt;
        }
      },
      family);
}

/// Chebyshev algorithm: coefficients B_0..B_{n_max}, C_1..C_{n_max} from the
/// moments m_0..m_{2 n_max + 1}. Positivity of the running Hankel quantities
/// is checked; a finite support of size m admits degrees up to m - 1.
template <class Real>
RecurrenceCoefficients<Real> stieltjes(const MomentSequence<Real>& mom, std::size_t n_max) {
  const std::size_t n = n_max + 1;
  if (mom.moments.size() < 2 * n) {
    throw RangeError("stieltjes: degree " + std::to_string(n_max) + " needs " +
                     std::to_string(2 * n) + " moments, got " +
                     std::to_string(mom.moments.size()));
  }
  if (mom.support_size && n_max >= *mom.support_size) {
    throw MeasureDegeneracyError("stieltjes: a measure with " +
                                     std::to_string(*mom.support_size) +
                                     " support points has no orthogonal polynomial of degree " +
                                     std::to_string(*mom.support_size),
                                 *mom.support_size);
  }
  const std::size_t width = 2 * n;
  std::vector<Real> prev2(width, Real(0));
  std::vector<Real> prev(mom.moments.begin(), mom.moments.begin() + width);
  if (!(prev[0] > 0)) throw MeasureDegeneracyError("stieltjes: total mass is not positive", 0);

  std::vector<Real> a(n), b(n);
  a[0] = prev[1] / prev[0];
  b[0] = prev[0];
  for (std::size_t k = 1; k < n; ++k) {
    std::vector<Real> cur(width, Real(0));
    for (std::size_t l = k; l + k < width; ++l) {
      cur[l] = prev[l + 1] - a[k - 1] * prev[l] - b[k - 1] * prev2[l];
    }
    if (!(cur[k] > 0) || !is_finite(cur[k])) {
      throw MeasureDegeneracyError("stieltjes: moment matrix is not positive definite at order " +
                                       std::to_string(k),
                                   k);
    }
    a[k] = cur[k + 1] / cur[k] - prev[k] / prev[k - 1];
    b[k] = cur[k] / prev[k - 1];
    prev2 = std::move(prev);
    prev = std::move(cur);
  }
  return RecurrenceCoefficients<Real>(std::move(a), std::vector<Real>(b.begin() + 1, b.end()));
}

/// Discretized Stieltjes procedure on the support points.
template <class Real>
RecurrenceCoefficients<Real> stieltjes(const DiscreteMeasure<Real>& mu, std::size_t n_max) {
  if (n_max >= mu.size()) {
    throw MeasureDegeneracyError("stieltjes: a measure with " + std::to_string(mu.size()) +
                                     " support points has no orthogonal polynomial of degree " +
                                     std::to_string(mu.size()),
                                 mu.size());
  }
  const auto& x = mu.points();
  Real mass(0);
  for (const auto& w : mu.weights()) mass += w;
  std::vector<Real> w = mu.weights();
  for (auto& v : w) v /= mass;

  const std::size_t m = x.size();
  std::vector<Real> p_prev(m, Real(0)), p_cur(m, Real(1));
  std::vector<Real> b, c;
  Real norm_prev(1);
  for (std::size_t k = 0; k <= n_max; ++k) {
    Real norm(0), moment(0);
    for (std::size_t i = 0; i < m; ++i) {
      const Real sq = w[i] * p_cur[i] * p_cur[i];
      norm += sq;
      moment += sq * x[i];
    }
    if (!(norm > 0)) {
      throw MeasureDegeneracyError("stieltjes: zero norm at degree " + std::to_string(k), k);
    }
    const Real bk = moment / norm;
    const Real ck = k == 0 ? Real(0) : norm / norm_prev;
    b.push_back(bk);
    if (k >= 1) c.push_back(ck);
    for (std::size_t i = 0; i < m; ++i) {
      Real next = (x[i] - bk) * p_cur[i];
      if (k >= 1) next -= ck * p_prev[i];
      p_prev[i] = std::move(p_cur[i]);
      p_cur[i] = std::move(next);
    }
    norm_prev = norm;
  }
  return RecurrenceCoefficients<Real>(std::move(b), std::move(c));
}

template <class Real = double>
struct GramReport {
  /// normalized[i][j] = <p_i, p_j> / sqrt(<p_i, p_i> <p_j, p_j>)
  std::vector<std::vector<Real>> normalized;
  Real max_off_diagonal = Real(0);
};

namespace detail {

template <class Real>
GramReport<Real> normalize_gram(std::vector<std::vector<Real>> g) {
  using std::abs;
  using std::sqrt;
  GramReport<Real> report;
  const std::size_t n = g.size();
  report.normalized.assign(n, std::vector<Real>(n, Real(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Real scale = sqrt(abs(g[i][i] * g[j][j]));
      report.normalized[i][j] = g[i][j] / scale;
      if (i != j) {
        const Real off = abs(report.normalized[i][j]);
        if (off > report.max_off_diagonal || !is_finite(off)) report.max_off_diagonal = off;
      }
    }
  }
  return report;
}

}  // namespace detail

/// Gram matrix of p_0..p_degree against a finite measure, by direct sums.
template <class Real>
GramReport<Real> orthogonality_check(const MonicPolynomialTable<Real>& table,
                                     const DiscreteMeasure<Real>& mu, std::size_t degree) {
  const std::size_t n = degree + 1;
  std::vector<std::vector<Real>> values(n, std::vector<Real>(mu.size()));
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < mu.size(); ++i) values[k][i] = evaluate(table, k, mu.points()[i]);
  }
  std::vector<std::vector<Real>> g(n, std::vector<Real>(n, Real(0)));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a; b < n; ++b) {
      Real acc(0);
      for (std::size_t i = 0; i < mu.size(); ++i) acc += mu.weights()[i] * values[a][i] * values[b][i];
      g[a][b] = acc;
      g[b][a] = acc;
    }
  }
  return detail::normalize_gram(std::move(g));
}

/// Gram matrix of p_0..p_degree from moments: sum_k sum_l a_k b_l m_{k+l}.
template <class Real>
GramReport<Real> orthogonality_check(const MonicPolynomialTable<Real>& table,
                                     const MomentSequence<Real>& mom, std::size_t degree) {
  if (mom.moments.size() < 2 * degree + 1) {
    throw RangeError("orthogonality_check: degree " + std::to_string(degree) + " needs " +
                     std::to_string(2 * degree + 1) + " moments");
  }
  const std::size_t n = degree + 1;
  std::vector<std::vector<Real>> g(n, std::vector<Real>(n, Real(0)));
  for (std::size_t a = 0; a < n; ++a) {
    const auto pa = table.poly(a);
    for (std::size_t b = a; b < n; ++b) {
      const auto pb = table.poly(b);
      Real acc(0);
      for (std::size_t k = 0; k < pa.size(); ++k) {
        for (std::size_t l = 0; l < pb.size(); ++l) acc += pa[k] * pb[l] * mom.moments[k + l];
      }
      g[a][b] = acc;
      g[b][a] = acc;
    }
  }
  return detail::normalize_gram(std::move(g));
}

/// Oracle coefficients for a family: the discretized Stieltjes procedure for
/// discrete weights, the Chebyshev algorithm on analytic moments otherwise.
template <class Real>
RecurrenceCoefficients<Real> oracle_coeffs(const Family<Real>& family, std::size_t n_max) {
  if (auto mu = discrete_measure_of(family, n_max)) return stieltjes(*mu, n_max);
  return stieltjes(moments_of(family, 2 * n_max + 1), n_max);
}

/// Reads "point,weight" lines. Blank lines, lines starting with '#', and a
/// leading non-numeric header line are skipped.
DiscreteMeasure<double> read_discrete_measure_csv(std::istream& in);

}  // namespace askey
