#pragma once

// Terminating hypergeometric series
//
//   pFq[-n, a_1..a_r; b_1..b_q; z] = sum_{k=0}^{n} (-n)_k prod (a_i)_k / prod (b_j)_k  z^k / k!
//
// and the monic Jacobi, Hahn and Racah polynomials obtained by expanding
// their series representations.

#include "askey/errors.hpp"
#include "askey/precision.hpp"

#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace askey {

/// Rising factorial a (a+1) ... (a+k-1); 1 for k = 0.
template <class Real>
Real pochhammer(const Real& a, std::size_t k) {
  Real acc(1);
  for (std::size_t j = 0; j < k; ++j) acc *= a + Real(j);
  return acc;
}

/// A series terminated by the numerator parameter -degree. `numerator`
/// lists the remaining numerator parameters.
template <class Real = double>
struct TerminatingHypergeometric {
  std::size_t degree = 0;
  std::vector<Real> numerator;
  std::vector<Real> denominator;
  Real argument = Real(1);
};

namespace detail {

template <class Real>
std::optional<long> nonpositive_integer(const Real& b) {
  using std::floor;
  if (b > 0) return std::nullopt;
  const Real r = floor(b + Real(0.5));
  if (r == b) return static_cast<long>(-to_double(r));
  return std::nullopt;
}

/// Throws if (b)_k vanishes for some k <= degree.
template <class Real>
void check_denominators(const std::vector<Real>& denominator, std::size_t degree) {
  for (std::size_t j = 0; j < denominator.size(); ++j) {
    if (auto m = nonpositive_integer(denominator[j]);
        m && static_cast<std::size_t>(*m) < degree) {
      throw DomainError("hypergeometric denominator parameter #" + std::to_string(j) +
                        " = " + number_string(denominator[j]) +
                        " produces a pole at series index " + std::to_string(*m + 1) +
                        " (degree " + std::to_string(degree) + ")");
    }
  }
}

/// Series coefficients c_k = (-n)_k prod (a_i)_k / (prod (b_j)_k k!), z excluded.
template <class Real>
std::vector<Real> series_coefficients(const TerminatingHypergeometric<Real>& h) {
  check_denominators(h.denominator, h.degree);
  const std::size_t n = h.degree;
  std::vector<Real> c;
  c.reserve(n + 1);
  Real term(1);
  c.push_back(term);
  for (std::size_t k = 0; k < n; ++k) {
    const Real kk(static_cast<double>(k));
    Real num = kk - Real(static_cast<double>(n));
    for (const auto& a : h.numerator) num *= a + kk;
    Real den = kk + Real(1);
    for (const auto& b : h.denominator) den *= b + kk;
    term = term * num / den;
    c.push_back(term);
  }
  return c;
}

// Polynomial helpers in the monomial basis.
template <class Real>
std::vector<Real> multiply_linear(const std::vector<Real>& p, const Real& c0, const Real& c1) {
  // p(t) * (c0 + c1 t)
  std::vector<Real> out(p.size() + 1, Real(0));
  for (std::size_t k = 0; k < p.size(); ++k) {
    out[k] += c0 * p[k];
    out[k + 1] += c1 * p[k];
  }
  return out;
}

template <class Real>
void add_scaled(std::vector<Real>& acc, const std::vector<Real>& p, const Real& s) {
  if (acc.size() < p.size()) acc.resize(p.size(), Real(0));
  for (std::size_t k = 0; k < p.size(); ++k) acc[k] += s * p[k];
}

}  // namespace detail

/// Sum of the degree+1 terms via running term ratios.
template <class Real>
Real eval_terminating(const TerminatingHypergeometric<Real>& h) {
  const auto c = detail::series_coefficients(h);
  Real sum(0);
  Real zk(1);
  for (std::size_t k = 0; k < c.size(); ++k) {
    sum += c[k] * zk;
    zk *= h.argument;
  }
  return sum;
}

enum class HypergeometricFamily { Jacobi, Hahn, Racah };

/// Parameters for `monic_from_hypergeometric`. Jacobi uses (alpha, beta);
/// Hahn uses (alpha, beta, n_big); Racah uses all four with gamma = -n_big - 1.
template <class Real = double>
struct HypergeometricParams {
  Real alpha = Real(0);
  Real beta = Real(0);
  Real delta = Real(0);
  Real n_big = Real(0);
};

/// The monic polynomial proportional to the family's series form.
///
/// Jacobi: 2F1[-n, n+a+b+1; a+1; (1-x)/2], a polynomial in x.
/// Hahn:   3F2[-n, n+a+b+1, -x; a+1, -N; 1], a polynomial in x.
/// Racah:  4F3[-n, n+a+b+1, -x, x+g+d+1; a+1, b+d+1, g+1; 1], g = -N-1,
///         returned as a polynomial in the lattice variable y = x(x+g+d+1).
template <class Real>
std::vector<Real> monic_from_hypergeometric(HypergeometricFamily family,
                                            const HypergeometricParams<Real>& p,
                                            std::size_t n) {
  const Real& a = p.alpha;
  const Real& b = p.beta;
  const Real n_real(static_cast<double>(n));
  TerminatingHypergeometric<Real> h;
  h.degree = n;
  h.numerator = {n_real + a + b + Real(1)};
  h.argument = Real(1);

  if (family != HypergeometricFamily::Jacobi &&
      !(n_real <= p.n_big)) {
    throw DomainError("degree " + std::to_string(n) + " exceeds N = " +
                      number_string(p.n_big));
  }

  std::vector<Real> result;
  switch (family) {
    case HypergeometricFamily::Jacobi: {
      h.denominator = {a + Real(1)};
      const auto c = detail::series_coefficients(h);
      std::vector<Real> power{Real(1)};  // ((1-x)/2)^k
      for (std::size_t k = 0; k <= n; ++k) {
        detail::add_scaled(result, power, c[k]);
        power = detail::multiply_linear(power, Real(0.5), Real(-0.5));
      }
      break;
    }
    case HypergeometricFamily::Hahn: {
      h.denominator = {a + Real(1), -p.n_big};
      const auto c = detail::series_coefficients(h);
      // (-x)_k = prod_{j<k} (j - x)
      std::vector<Real> rising{Real(1)};
      for (std::size_t k = 0; k <= n; ++k) {
        detail::add_scaled(result, rising, c[k]);
        rising = detail::multiply_linear(rising, Real(static_cast<double>(k)), Real(-1));
      }
      break;
    }
    case HypergeometricFamily::Racah: {
      const Real gamma = -p.n_big - Real(1);
      const Real shift = gamma + p.delta + Real(1);
      h.denominator = {a + Real(1), b + p.delta + Real(1), gamma + Real(1)};
      const auto c = detail::series_coefficients(h);
      // (-x)_k (x+shift)_k = prod_{j<k} (j (j+shift) - y)
      std::vector<Real> lattice{Real(1)};
      for (std::size_t k = 0; k <= n; ++k) {
        detail::add_scaled(result, lattice, c[k]);
        const Real j(static_cast<double>(k));
        lattice = detail::multiply_linear(lattice, j * (j + shift), Real(-1));
      }
      break;
    }
  }
  result.resize(n + 1, Real(0));
  const Real lead = result[n];
  if (lead == 0 || !is_finite(lead)) {
    throw DomainError("hypergeometric form of degree " + std::to_string(n) +
                      " has zero leading coefficient for these parameters");
  }
  for (auto& v : result) v /= lead;
  result[n] = Real(1);
  return result;
}

}  // namespace askey
