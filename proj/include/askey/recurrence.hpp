#pragma once

// Monic orthogonal polynomial sequences defined by three-term recurrences
//
//   x p_n(x) = p_{n+1}(x) + B_n p_n(x) + C_n p_{n-1}(x),   n >= 1,
//   x p_0(x) = p_1(x) + B_0 p_0(x),                         p_0 = 1.
//
// Polynomials are kept both as monomial coefficient vectors (exact table
// arithmetic, convenient for comparisons at moderate degree) and as the
// recurrence data itself, which `evaluate` runs forward for stable point
// evaluation.

#include "askey/errors.hpp"
#include "askey/precision.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace askey {

/// The pair (B_n, C_n) for 0 <= n <= max_degree. C_n exists for n >= 1.
template <class Real = double>
class RecurrenceCoefficients {
 public:
  RecurrenceCoefficients() : b_{Real(0)} {}

  /// `b` holds B_0..B_M; `c` holds C_1..C_M, so `c.size() == b.size() - 1`.
  RecurrenceCoefficients(std::vector<Real> b, std::vector<Real> c)
      : b_(std::move(b)), c_(std::move(c)) {
    if (b_.empty()) {
      throw DomainError("recurrence coefficients need at least B_0");
    }
    if (c_.size() + 1 != b_.size()) {
      throw DomainError("recurrence coefficients: expected " +
                        std::to_string(b_.size() - 1) + " values C_1..C_M, got " +
                        std::to_string(c_.size()));
    }
  }

  std::size_t max_degree() const noexcept { return b_.size() - 1; }

  const Real& b(std::size_t n) const {
    if (n > max_degree()) {
      throw RangeError("B_" + std::to_string(n) + " requested, max degree is " +
                       std::to_string(max_degree()));
    }
    return b_[n];
  }

  const Real& c(std::size_t n) const {
    if (n == 0 || n > max_degree()) {
      throw RangeError("C_" + std::to_string(n) + " requested, valid range is 1.." +
                       std::to_string(max_degree()));
    }
    return c_[n - 1];
  }

  std::span<const Real> b_values() const noexcept { return b_; }
  /// C_1..C_M.
  std::span<const Real> c_values() const noexcept { return c_; }

  /// The leading part up to degree `max_degree`.
  RecurrenceCoefficients truncated(std::size_t degree) const {
    if (degree > max_degree()) {
      throw RangeError("cannot truncate to degree " + std::to_string(degree) +
                       " above max degree " + std::to_string(max_degree()));
    }
    return RecurrenceCoefficients(
        std::vector<Real>(b_.begin(), b_.begin() + degree + 1),
        std::vector<Real>(c_.begin(), c_.begin() + degree));
  }

  template <class Other>
  RecurrenceCoefficients<Other> cast() const {
    std::vector<Other> b, c;
    b.reserve(b_.size());
    c.reserve(c_.size());
    for (const auto& v : b_) b.push_back(convert<Other>(v));
    for (const auto& v : c_) c.push_back(convert<Other>(v));
    return RecurrenceCoefficients<Other>(std::move(b), std::move(c));
  }

  friend bool operator==(const RecurrenceCoefficients&,
                         const RecurrenceCoefficients&) = default;

 private:
  template <class Other>
  static Other convert(const Real& v) {
    if constexpr (std::is_same_v<Other, double>) {
      return to_double(v);
    } else {
      return Other(v);
    }
  }

  std::vector<Real> b_;
  std::vector<Real> c_;
};

/// p_0..p_M in the monomial basis (index = power of x), together with the
/// recurrence data that produced them.
template <class Real = double>
class MonicPolynomialTable {
 public:
  MonicPolynomialTable(std::vector<std::vector<Real>> polys,
                       RecurrenceCoefficients<Real> coeffs)
      : polys_(std::move(polys)), coeffs_(std::move(coeffs)) {}

  std::size_t max_degree() const noexcept { return polys_.size() - 1; }

  std::span<const Real> poly(std::size_t n) const {
    if (n > max_degree()) {
      throw RangeError("p_" + std::to_string(n) + " requested, table holds up to p_" +
                       std::to_string(max_degree()));
    }
    return polys_[n];
  }

  const std::vector<std::vector<Real>>& polys() const noexcept { return polys_; }
  const RecurrenceCoefficients<Real>& coefficients() const noexcept { return coeffs_; }

 private:
  std::vector<std::vector<Real>> polys_;
  RecurrenceCoefficients<Real> coeffs_;
};

/// The affine change of variable q_n(x) = rho^n p_n(x / rho - sigma).
template <class Real = double>
class RescaleMap {
 public:
  RescaleMap(Real rho, Real sigma) : rho_(std::move(rho)), sigma_(std::move(sigma)) {
    if (!(rho_ > 0) || !is_finite(rho_)) {
      throw DomainError("rescale map needs a finite rho > 0, got rho = " +
                        number_string(rho_));
    }
    if (!is_finite(sigma_)) {
      throw DomainError("rescale map needs a finite sigma");
    }
  }

  const Real& rho() const noexcept { return rho_; }
  const Real& sigma() const noexcept { return sigma_; }

  /// The map undoing this one: (1/rho, -rho sigma).
  RescaleMap inverse() const { return RescaleMap(Real(1) / rho_, -rho_ * sigma_); }

 private:
  Real rho_;
  Real sigma_;
};

template <class Real>
MonicPolynomialTable<Real> generate_polynomials(const RecurrenceCoefficients<Real>& coeffs,
                                                std::size_t max_degree) {
  if (max_degree > coeffs.max_degree()) {
    throw RangeError("degree " + std::to_string(max_degree) +
                     " exceeds available recurrence coefficients (max degree " +
                     std::to_string(coeffs.max_degree()) + ")");
  }
  std::vector<std::vector<Real>> polys;
  polys.reserve(max_degree + 1);
  polys.push_back({Real(1)});
  for (std::size_t n = 0; n < max_degree; ++n) {
    const auto& pn = polys[n];
    std::vector<Real> next(n + 2, Real(0));
    // x p_n
    for (std::size_t k = 0; k <= n; ++k) next[k + 1] = pn[k];
    // - B_n p_n
    const Real& bn = coeffs.b(n);
    for (std::size_t k = 0; k <= n; ++k) next[k] -= bn * pn[k];
    // - C_n p_{n-1}; the n = 0 step has no C-term
    if (n >= 1) {
      const Real& cn = coeffs.c(n);
      const auto& pm = polys[n - 1];
      for (std::size_t k = 0; k < n; ++k) next[k] -= cn * pm[k];
    }
    polys.push_back(std::move(next));
  }
  return MonicPolynomialTable<Real>(std::move(polys), coeffs.truncated(max_degree));
}

/// p_n(x) by running the recurrence forward.
template <class Real>
Real evaluate(const MonicPolynomialTable<Real>& table, std::size_t n, const Real& x) {
  if (n > table.max_degree()) {
    throw RangeError("p_" + std::to_string(n) + " requested, table holds up to p_" +
                     std::to_string(table.max_degree()));
  }
  const auto& coeffs = table.coefficients();
  Real prev(0);
  Real cur(1);
  for (std::size_t k = 0; k < n; ++k) {
    Real next = (x - coeffs.b(k)) * cur;
    if (k >= 1) next -= coeffs.c(k) * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

/// Horner evaluation of a monomial coefficient vector.
template <class Real>
Real evaluate_monomial(std::span<const Real> poly, const Real& x) {
  Real acc(0);
  for (std::size_t k = poly.size(); k-- > 0;) acc = acc * x + poly[k];
  return acc;
}

/// Coefficients of q_n(x) = rho^n p_n(x / rho - sigma):
/// B'_n = rho (B_n + sigma), C'_n = rho^2 C_n.
template <class Real>
RecurrenceCoefficients<Real> rescale_coefficients(const RecurrenceCoefficients<Real>& coeffs,
                                                  const RescaleMap<Real>& map) {
  const Real& rho = map.rho();
  const Real rho2 = rho * rho;
  std::vector<Real> b, c;
  b.reserve(coeffs.max_degree() + 1);
  c.reserve(coeffs.max_degree());
  for (const auto& bn : coeffs.b_values()) b.push_back(rho * (bn + map.sigma()));
  for (const auto& cn : coeffs.c_values()) c.push_back(rho2 * cn);
  return RecurrenceCoefficients<Real>(std::move(b), std::move(c));
}

/// Coefficients of (-1)^n p_n(-x).
template <class Real>
RecurrenceCoefficients<Real> reflect_coefficients(const RecurrenceCoefficients<Real>& coeffs) {
  std::vector<Real> b(coeffs.b_values().begin(), coeffs.b_values().end());
  for (auto& v : b) v = -v;
  return RecurrenceCoefficients<Real>(
      std::move(b), std::vector<Real>(coeffs.c_values().begin(), coeffs.c_values().end()));
}

struct FavardReport {
  bool valid = true;
  std::optional<std::size_t> first_failing;
  std::string reason;
};

/// Valid iff every B_n is finite and every C_n is finite and strictly positive.
template <class Real>
FavardReport favard_check(const RecurrenceCoefficients<Real>& coeffs) {
  for (std::size_t n = 0; n <= coeffs.max_degree(); ++n) {
    if (!is_finite(coeffs.b(n))) {
      return {false, n, "B_" + std::to_string(n) + " is not finite"};
    }
    if (n >= 1) {
      const Real& cn = coeffs.c(n);
      if (!is_finite(cn)) return {false, n, "C_" + std::to_string(n) + " is not finite"};
      if (!(cn > 0)) {
        return {false, n,
                "C_" + std::to_string(n) + " = " + number_string(cn) +
                    " is not positive"};
      }
    }
  }
  return {};
}

}  // namespace askey
