#pragma once

// Closed-form monic recurrence coefficients for the families of the Askey
// chart that occur as boundary limits of the Racah polynomials.
//
// Hermite, Laguerre, Jacobi and Racah use the formulas derived from their
// weights and series forms. Hahn, Meixner, Krawtchouk and Charlier use the
// standard monic recurrences; each is checked against the moment oracle in
// the test suite.

#include "askey/errors.hpp"
#include "askey/precision.hpp"
#include "askey/recurrence.hpp"

#include <cstddef>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace askey {

template <class Real = double>
struct HermiteParams {
  friend bool operator==(const HermiteParams&, const HermiteParams&) = default;
};

template <class Real = double>
struct LaguerreParams {
  Real alpha = Real(0);
  friend bool operator==(const LaguerreParams&, const LaguerreParams&) = default;
};

template <class Real = double>
struct JacobiParams {
  Real alpha = Real(0);
  Real beta = Real(0);
  friend bool operator==(const JacobiParams&, const JacobiParams&) = default;
};

/// Racah parameters with gamma fixed to -N-1.
template <class Real = double>
struct RacahParams {
  Real alpha = Real(0);
  Real beta = Real(0);
  Real delta = Real(0);
  Real n_big = Real(1);
  friend bool operator==(const RacahParams&, const RacahParams&) = default;
};

template <class Real = double>
struct HahnParams {
  Real alpha = Real(0);
  Real beta = Real(0);
  Real n_big = Real(1);
  friend bool operator==(const HahnParams&, const HahnParams&) = default;
};

template <class Real = double>
struct MeixnerParams {
  Real beta = Real(1);
  Real c = Real(0.5);
  friend bool operator==(const MeixnerParams&, const MeixnerParams&) = default;
};

template <class Real = double>
struct KrawtchoukParams {
  Real p = Real(0.5);
  Real n_big = Real(1);
  friend bool operator==(const KrawtchoukParams&, const KrawtchoukParams&) = default;
};

template <class Real = double>
struct CharlierParams {
  Real a = Real(1);
  friend bool operator==(const CharlierParams&, const CharlierParams&) = default;
};

enum class FamilyTag { Hermite, Laguerre, Jacobi, Racah, Hahn, Meixner, Krawtchouk, Charlier };

template <class Real = double>
using Family = std::variant<HermiteParams<Real>, LaguerreParams<Real>, JacobiParams<Real>,
                            RacahParams<Real>, HahnParams<Real>, MeixnerParams<Real>,
                            KrawtchoukParams<Real>, CharlierParams<Real>>;

/// Family descriptor in binary64, as parsed from its canonical text form.
using FamilyId = Family<double>;

template <class Real>
FamilyTag family_tag(const Family<Real>& f) {
  return static_cast<FamilyTag>(f.index());
}

std::string_view family_name(FamilyTag tag);

/// "hermite", "laguerre:alpha=2", "jacobi:alpha=2,beta=3",
/// "racah:alpha=1,beta=2,delta=12,N=8", "hahn:alpha=0,beta=0,N=2",
/// "meixner:beta=1,c=0.5", "krawtchouk:p=0.3,N=10", "charlier:a=2".
FamilyId parse_family(std::string_view text);
std::string format_family(const FamilyId& family);

/// Canonical text of a family held at any precision (parameters rounded to
/// binary64 for display).
template <class Real>
std::string format_family(const Family<Real>& family);

template <class To, class From>
Family<To> cast_family(const Family<From>& f);

namespace detail {

template <class Real>
Real n_of(std::size_t n) {
  return Real(static_cast<double>(n));
}

template <class Real>
void require_gt(const Real& v, double bound, const char* family, const char* name) {
  if (!(v > Real(bound)) || !is_finite(v)) {
    throw DomainError(std::string(family) + ": " + name + " = " + number_string(v) +
                      " must be > " + number_string(bound));
  }
}

template <class Real>
void require_degree_within(std::size_t max_degree, const Real& n_big, const char* family) {
  if (!(n_of<Real>(max_degree) <= n_big)) {
    throw ValidityError(std::string(family) + ": degree " + std::to_string(max_degree) +
                            " exceeds N = " + number_string(n_big),
                        max_degree);
  }
}

template <class Real, class F>
RecurrenceCoefficients<Real> build(std::size_t max_degree, F&& coeff) {
  std::vector<Real> b, c;
  b.reserve(max_degree + 1);
  c.reserve(max_degree);
  for (std::size_t n = 0; n <= max_degree; ++n) {
    auto [bn, cn] = coeff(n);
    b.push_back(std::move(bn));
    if (n >= 1) c.push_back(std::move(cn));
  }
  return RecurrenceCoefficients<Real>(std::move(b), std::move(c));
}

}  // namespace detail

template <class Real = double>
RecurrenceCoefficients<Real> hermite_coeffs(std::size_t max_degree) {
  return detail::build<Real>(max_degree, [](std::size_t n) {
    return std::pair{Real(0), detail::n_of<Real>(n) / Real(2)};
  });
}

template <class Real>
RecurrenceCoefficients<Real> laguerre_coeffs(const Real& alpha, std::size_t max_degree) {
  detail::require_gt(alpha, -1.0, "laguerre", "alpha");
  return detail::build<Real>(max_degree, [&](std::size_t n) {
    const Real nn = detail::n_of<Real>(n);
    return std::pair{Real(2) * nn + alpha + Real(1), nn * (nn + alpha)};
  });
}

/// Jacobi (weight (1-x)^alpha (1+x)^beta on (-1,1)) at unit scale. B_0 and
/// C_1 use the forms with the common factors cancelled so that
/// alpha + beta in {0, -1} is handled.
template <class Real>
std::pair<Real, Real> jacobi_coefficient(const Real& alpha, const Real& beta, std::size_t n) {
  const Real s = alpha + beta;
  const Real nn = detail::n_of<Real>(n);
  if (n == 0) return {(beta - alpha) / (s + Real(2)), Real(0)};
  const Real two_n_s = Real(2) * nn + s;
  const Real b = (beta * beta - alpha * alpha) / (two_n_s * (two_n_s + Real(2)));
  Real c;
  if (n == 1) {
    c = Real(4) * (Real(1) + alpha) * (Real(1) + beta) /
        ((s + Real(2)) * (s + Real(2)) * (s + Real(3)));
  } else {
    c = Real(4) * nn * (nn + alpha) * (nn + beta) * (nn + s) /
        ((two_n_s - Real(1)) * two_n_s * two_n_s * (two_n_s + Real(1)));
  }
  return {b, c};
}

template <class Real>
RecurrenceCoefficients<Real> jacobi_coeffs(const JacobiParams<Real>& p, std::size_t max_degree) {
  detail::require_gt(p.alpha, -1.0, "jacobi", "alpha");
  detail::require_gt(p.beta, -1.0, "jacobi", "beta");
  return detail::build<Real>(max_degree,
                             [&](std::size_t n) { return jacobi_coefficient(p.alpha, p.beta, n); });
}

/// Racah coefficients in the lattice variable, evaluated by formula for any
/// degree. Past n = N the values are no longer a positive system; use
/// `racah_coeffs` for the checked version.
template <class Real>
std::pair<Real, Real> racah_coefficient(const RacahParams<Real>& p, std::size_t n) {
  const Real& a = p.alpha;
  const Real& b = p.beta;
  const Real& d = p.delta;
  const Real& big = p.n_big;
  const Real s = a + b;
  const Real nn = detail::n_of<Real>(n);
  const Real one(1);
  if (n == 0) {
    return {(a + one) * (b + d + one) * big / (s + Real(2)), Real(0)};
  }
  const Real m = Real(2) * nn + s;
  const Real t1 = (nn + s + one) * (nn + a + one) * (nn + b + d + one) * (big - nn) /
                  ((m + one) * (m + Real(2)));
  const Real t2 = nn * (nn + b) * (d - a - nn) * (nn + big + s + one) / (m * (m + one));
  const Real numerator = nn * (nn + a) * (nn + b) * (nn + b + d) * (d - a - nn) *
                         (nn + big + s + one) * (big + one - nn);
  Real c;
  if (n == 1) {
    // (n + s) / (2n + s - 1) = 1
    c = numerator / (m * m * (m + one));
  } else {
    c = numerator * (nn + s) / ((m - one) * m * m * (m + one));
  }
  return {t1 + t2, c};
}

template <class Real>
RecurrenceCoefficients<Real> racah_coeffs_unchecked(const RacahParams<Real>& p,
                                                    std::size_t max_degree) {
  return detail::build<Real>(max_degree,
                             [&](std::size_t n) { return racah_coefficient(p, n); });
}

/// Throws ValidityError naming the first degree with a non-positive C_n, or
/// when max_degree exceeds N.
template <class Real>
RecurrenceCoefficients<Real> racah_coeffs(const RacahParams<Real>& p, std::size_t max_degree) {
  if (!(p.n_big > 0)) {
    throw DomainError("racah: N = " + number_string(p.n_big) + " must be > 0");
  }
  detail::require_degree_within(max_degree, p.n_big, "racah");
  auto coeffs = racah_coeffs_unchecked(p, max_degree);
  if (auto report = favard_check(coeffs); !report.valid) {
    throw ValidityError("racah: Favard positivity fails: " + report.reason,
                        *report.first_failing);
  }
  return coeffs;
}

/// Monic Hahn polynomials orthogonal for (alpha+1)_x (beta+1)_{N-x} / (x! (N-x)!)
/// on {0, ..., N}.
template <class Real>
RecurrenceCoefficients<Real> hahn_coeffs(const HahnParams<Real>& p, std::size_t max_degree) {
  detail::require_gt(p.alpha, -1.0, "hahn", "alpha");
  detail::require_gt(p.beta, -1.0, "hahn", "beta");
  detail::require_gt(p.n_big, 0.0, "hahn", "N");
  detail::require_degree_within(max_degree, p.n_big, "hahn");
  const Real s = p.alpha + p.beta;
  const Real one(1);
  auto up = [&](std::size_t n) {
    const Real nn = detail::n_of<Real>(n);
    if (n == 0) return (p.alpha + one) * p.n_big / (s + Real(2));
    const Real m = Real(2) * nn + s;
    return (nn + s + one) * (nn + p.alpha + one) * (p.n_big - nn) / ((m + one) * (m + Real(2)));
  };
  auto down = [&](std::size_t n) {
    if (n == 0) return Real(0);
    const Real nn = detail::n_of<Real>(n);
    const Real m = Real(2) * nn + s;
    return nn * (nn + s + p.n_big + one) * (nn + p.beta) / (m * (m + one));
  };
  return detail::build<Real>(max_degree, [&](std::size_t n) {
    const Real dn = down(n);
    return std::pair{up(n) + dn, n == 0 ? Real(0) : up(n - 1) * dn};
  });
}

/// Monic Meixner polynomials for the weight (beta)_x c^x / x! on {0, 1, ...}.
template <class Real>
RecurrenceCoefficients<Real> meixner_coeffs(const MeixnerParams<Real>& p, std::size_t max_degree) {
  detail::require_gt(p.beta, 0.0, "meixner", "beta");
  if (!(p.c > 0 && p.c < 1)) {
    throw DomainError("meixner: c = " + number_string(p.c) + " must lie in (0, 1)");
  }
  const Real one(1);
  const Real q = one - p.c;
  return detail::build<Real>(max_degree, [&](std::size_t n) {
    const Real nn = detail::n_of<Real>(n);
    return std::pair{(nn + (nn + p.beta) * p.c) / q, nn * (nn + p.beta - one) * p.c / (q * q)};
  });
}

/// Monic Krawtchouk polynomials for the binomial weight on {0, ..., N}.
template <class Real>
RecurrenceCoefficients<Real> krawtchouk_coeffs(const KrawtchoukParams<Real>& p,
                                               std::size_t max_degree) {
  if (!(p.p > 0 && p.p < 1)) {
    throw DomainError("krawtchouk: p = " + number_string(p.p) + " must lie in (0, 1)");
  }
  detail::require_gt(p.n_big, 0.0, "krawtchouk", "N");
  detail::require_degree_within(max_degree, p.n_big, "krawtchouk");
  const Real one(1);
  return detail::build<Real>(max_degree, [&](std::size_t n) {
    const Real nn = detail::n_of<Real>(n);
    return std::pair{p.p * (p.n_big - nn) + nn * (one - p.p),
                     nn * p.p * (one - p.p) * (p.n_big + one - nn)};
  });
}

/// Monic Charlier polynomials for the Poisson weight a^x / x!.
template <class Real>
RecurrenceCoefficients<Real> charlier_coeffs(const CharlierParams<Real>& p, std::size_t max_degree) {
  detail::require_gt(p.a, 0.0, "charlier", "a");
  return detail::build<Real>(max_degree, [&](std::size_t n) {
    const Real nn = detail::n_of<Real>(n);
    return std::pair{nn + p.a, nn * p.a};
  });
}

template <class Real>
RecurrenceCoefficients<Real> family_coeffs(const Family<Real>& family, std::size_t max_degree) {
  return std::visit(
      [&](const auto& p) -> RecurrenceCoefficients<Real> {
        using P = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<P, HermiteParams<Real>>) {
          return hermite_coeffs<Real>(max_degree);
        } else if constexpr (std::is_same_v<P, LaguerreParams<Real>>) {
          return laguerre_coeffs(p.alpha, max_degree);
        } else if constexpr (std::is_same_v<P, JacobiParams<Real>>) {
          return jacobi_coeffs(p, max_degree);
        } else if constexpr (std::is_same_v<P, RacahParams<Real>>) {
          return racah_coeffs(p, max_degree);
        } else if constexpr (std::is_same_v<P, HahnParams<Real>>) {
          return hahn_coeffs(p, max_degree);
        } else if constexpr (std::is_same_v<P, MeixnerParams<Real>>) {
          return meixner_coeffs(p, max_degree);
        } else if constexpr (std::is_same_v<P, KrawtchoukParams<Real>>) {
          return krawtchouk_coeffs(p, max_degree);
        } else {
          return charlier_coeffs(p, max_degree);
        }
      },
      family);
}

template <class To, class From>
Family<To> cast_family(const Family<From>& f) {
  auto c = [](const From& v) {
    if constexpr (std::is_same_v<To, double>) {
      return to_double(v);
    } else {
      return To(v);
    }
  };
  return std::visit(
      [&](const auto& p) -> Family<To> {
        using P = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<P, HermiteParams<From>>) {
          return HermiteParams<To>{};
        } else if constexpr (std::is_same_v<P, LaguerreParams<From>>) {
          return LaguerreParams<To>{c(p.alpha)};
        } else if constexpr (std::is_same_v<P, JacobiParams<From>>) {
          return JacobiParams<To>{c(p.alpha), c(p.beta)};
        } else if constexpr (std::is_same_v<P, RacahParams<From>>) {
          return RacahParams<To>{c(p.alpha), c(p.beta), c(p.delta), c(p.n_big)};
        } else if constexpr (std::is_same_v<P, HahnParams<From>>) {
          return HahnParams<To>{c(p.alpha), c(p.beta), c(p.n_big)};
        } else if constexpr (std::is_same_v<P, MeixnerParams<From>>) {
          return MeixnerParams<To>{c(p.beta), c(p.c)};
        } else if constexpr (std::is_same_v<P, KrawtchoukParams<From>>) {
          return KrawtchoukParams<To>{c(p.p), c(p.n_big)};
        } else {
          return CharlierParams<To>{c(p.a)};
        }
      },
      f);
}

template <class Real>
std::string format_family(const Family<Real>& family) {
  if constexpr (std::is_same_v<Real, double>) {
    return format_family(static_cast<const FamilyId&>(family));
  } else {
    return format_family(cast_family<double>(family));
  }
}

}  // namespace askey
