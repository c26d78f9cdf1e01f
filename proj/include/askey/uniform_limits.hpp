#pragma once

// Uniformly rescaled Jacobi and Racah recurrence coefficients as functions of
// inverse parameters on the closed nonnegative orthant.
//
// Jacobi. For p_n(x) = rho^n P_n^{(alpha,beta)}(x/rho - sigma) with
//   rho = (alpha+beta)^{3/2} / (alpha beta)^{1/2},  sigma = (alpha-beta)/(alpha+beta)
// the coefficients in a = 1/alpha, b = 1/beta, u = 1/(alpha+beta) = ab/(a+b) are
//   C_n = 4n (1+na)(1+nb)(1+nu) / ((1+(2n-1)u)(1+2nu)^2(1+(2n+1)u))
//   B_n = (b-a)/(a+b)^{1/2} (4n+2+4n(n+1)u) / ((1+2nu)(1+(2n+2)u)).
//
// Racah. With gamma = -N-1, beta = b alpha, delta = (b d nu + 1) alpha,
// N = b nu and
//   rho^2 = (alpha+beta)^3 / (alpha beta (beta+delta)(N+alpha+beta)(delta-alpha) N)
//   sigma = -N (alpha+1)(beta+delta+1) / (alpha+beta+2),
// the coefficients in a = 1/alpha, b = 1/b, d = 1/d, v = 1/nu are
//   u = ab/(1+b)            = 1/(alpha+beta)
//   w = abv/(a+v+bv)        = 1/(N+alpha+beta)
//   e = abdv/(1+dv+bdv)     = 1/(beta+delta),   abdv = 1/(delta-alpha),  bv = 1/N
//   C_n = n (1+na)(1+nab)(1+ne)(1-n abdv)(1-(n-1)bv)(1+(n+1)w)(1+nu)
//         / ((1+(2n-1)u)(1+2nu)^2(1+(2n+1)u))
//   B_n = -n (1+(n+1)u) / ((1+2u)(1+2nu)(1+(2n+2)u)) * P(n) / sqrt(E)
//   E = (1+b)(a+v+bv)(1+dv+bdv)
//   P(n) = P0 + n P1 + n^2 P2 with
//     P0 = 2a(b-1) + v(b-1)(abd+2ab+ad+b+1) + bdv^2(a+1)(b+1)(2ab+b+1)
//     P1 = 2abdv^2(ab+b+1)(2ab+b+1)
//     P2 = 2a^2 b^2 d v^2 (2ab+b+1).
// Every denominator is >= 1 except a+v+bv, which vanishes only on a = v = 0;
// there w and P/sqrt(E) are bounded by multiples of min(a, v) and
// sqrt(a+v) respectively, and both are evaluated as 0. A sympy script that
// rederives these forms lives in docs/derivation/.

#include "askey/errors.hpp"
#include "askey/families.hpp"
#include "askey/precision.hpp"
#include "askey/recurrence.hpp"

#include <array>
#include <cmath>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace askey {

template <class Real = double>
struct JacobiInverseParams {
  Real inv_alpha = Real(0);
  Real inv_beta = Real(0);
};

template <class Real = double>
struct InverseParams {
  Real inv_alpha = Real(0);
  Real inv_b = Real(0);
  Real inv_d = Real(0);
  Real inv_nu = Real(0);

  friend bool operator==(const InverseParams&, const InverseParams&) = default;
};

namespace detail {

template <class Real>
void require_inverse(const Real& v, const char* name) {
  if (!(v >= 0) || !is_finite(v)) {
    throw DomainError(std::string(name) + " = " + number_string(v) +
                      " must be finite and >= 0");
  }
}

}  // namespace detail

template <class Real>
void validate(const JacobiInverseParams<Real>& p) {
  detail::require_inverse(p.inv_alpha, "inv_alpha");
  detail::require_inverse(p.inv_beta, "inv_beta");
}

template <class Real>
void validate(const InverseParams<Real>& p) {
  detail::require_inverse(p.inv_alpha, "inv_alpha");
  detail::require_inverse(p.inv_b, "inv_b");
  detail::require_inverse(p.inv_d, "inv_d");
  detail::require_inverse(p.inv_nu, "inv_nu");
}

// ---------------------------------------------------------------------------
// Jacobi

template <class Real>
std::pair<Real, Real> jacobi_uniform_coefficient(const JacobiInverseParams<Real>& p,
                                                 std::size_t n) {
  using std::sqrt;
  validate(p);
  const Real& a = p.inv_alpha;
  const Real& b = p.inv_beta;
  const Real one(1);
  const Real nn(static_cast<double>(n));
  const Real sum = a + b;
  const Real u = sum == 0 ? Real(0) : a * b / sum;
  const Real prefactor = sum == 0 ? Real(0) : (b - a) / sqrt(sum);
  const Real two_nu = Real(2) * nn * u;
  const Real bn = prefactor * (Real(4) * nn + Real(2) + Real(4) * nn * (nn + one) * u) /
                  ((one + two_nu) * (one + two_nu + Real(2) * u));
  Real cn(0);
  if (n >= 1) {
    cn = Real(4) * nn * (one + nn * a) * (one + nn * b) * (one + nn * u) /
         ((one + two_nu - u) * (one + two_nu) * (one + two_nu) * (one + two_nu + u));
  }
  return {bn, cn};
}

template <class Real>
RecurrenceCoefficients<Real> jacobi_uniform_coeffs(const JacobiInverseParams<Real>& p,
                                                   std::size_t max_degree) {
  return detail::build<Real>(max_degree,
                             [&](std::size_t n) { return jacobi_uniform_coefficient(p, n); });
}

/// The scale and shift that make the Jacobi coefficients uniform; interior
/// points only.
template <class Real>
RescaleMap<Real> jacobi_uniform_map(const JacobiParams<Real>& p) {
  using std::sqrt;
  const Real s = p.alpha + p.beta;
  return RescaleMap<Real>(s * sqrt(s) / sqrt(p.alpha * p.beta), (p.alpha - p.beta) / s);
}

/// Direct evaluation through alpha = 1/inv_alpha, beta = 1/inv_beta and the
/// unit-scale Jacobi coefficients. Interior points only.
template <class Real>
RecurrenceCoefficients<Real> jacobi_uniform_direct(const JacobiInverseParams<Real>& p,
                                                   std::size_t max_degree) {
  if (!(p.inv_alpha > 0) || !(p.inv_beta > 0)) {
    throw DomainError("direct Jacobi evaluation needs interior inverse parameters");
  }
  const JacobiParams<Real> params{Real(1) / p.inv_alpha, Real(1) / p.inv_beta};
  return rescale_coefficients(jacobi_coeffs(params, max_degree), jacobi_uniform_map(params));
}

// ---------------------------------------------------------------------------
// Racah

/// N = 1/(inv_b inv_nu) when both are positive.
template <class Real>
std::optional<Real> finite_n_big(const InverseParams<Real>& p) {
  if (p.inv_b > 0 && p.inv_nu > 0) return Real(1) / (p.inv_b * p.inv_nu);
  return std::nullopt;
}

template <class Real>
std::pair<Real, Real> racah_uniform_coefficient(const InverseParams<Real>& p, std::size_t n) {
  using std::sqrt;
  validate(p);
  const Real& a = p.inv_alpha;
  const Real& b = p.inv_b;
  const Real& d = p.inv_d;
  const Real& v = p.inv_nu;
  const Real one(1), two(2);
  const Real nn(static_cast<double>(n));

  const Real ab = a * b;
  const Real bv = b * v;
  const Real abdv = ab * d * v;
  const Real dv_sum = one + d * v + b * d * v;  // (beta+delta) abdv / ... >= 1
  const Real u = ab / (one + b);
  const Real av_sum = a + v + bv;
  const Real w = av_sum == 0 ? Real(0) : ab * v / av_sum;
  const Real e = abdv / dv_sum;

  const Real two_nu = two * nn * u;
  Real cn(0);
  if (n >= 1) {
    cn = nn * (one + nn * a) * (one + nn * ab) * (one + nn * e) * (one - nn * abdv) *
         (one - (nn - one) * bv) * (one + (nn + one) * w) * (one + nn * u) /
         ((one + two_nu - u) * (one + two_nu) * (one + two_nu) * (one + two_nu + u));
  }

  Real bn(0);
  if (n >= 1 && av_sum != 0) {
    const Real k = two * ab + b + one;
    const Real p0 = two * a * (b - one) + v * (b - one) * (ab * d + two * ab + a * d + b + one) +
                    b * d * v * v * (a + one) * (b + one) * k;
    const Real p1 = two * ab * d * v * v * (ab + b + one) * k;
    const Real p2 = two * ab * ab * d * v * v * k;
    const Real poly = p0 + nn * (p1 + nn * p2);
    const Real energy = (one + b) * av_sum * dv_sum;
    bn = -nn * (one + (nn + one) * u) /
         ((one + two * u) * (one + two_nu) * (one + two_nu + two * u)) * poly / sqrt(energy);
  }
  return {bn, cn};
}

/// Coefficients up to max_degree. Where N is finite (inv_b, inv_nu > 0)
/// degrees above N are refused with a ValidityError.
template <class Real>
RecurrenceCoefficients<Real> racah_uniform_coeffs(const InverseParams<Real>& p,
                                                  std::size_t max_degree) {
  validate(p);
  if (auto big = finite_n_big(p)) {
    const Real slack = Real(1) + Real(64) * std::numeric_limits<Real>::epsilon();
    if (Real(static_cast<double>(max_degree)) > *big * slack) {
      throw ValidityError("degree " + std::to_string(max_degree) + " exceeds N = " +
                              number_string(*big) + " on this stratum",
                          max_degree);
    }
  }
  return detail::build<Real>(max_degree,
                             [&](std::size_t n) { return racah_uniform_coefficient(p, n); });
}

/// (alpha, beta, delta, N) of an interior point.
template <class Real>
RacahParams<Real> racah_params_from_inverse(const InverseParams<Real>& p) {
  if (!(p.inv_alpha > 0 && p.inv_b > 0 && p.inv_d > 0 && p.inv_nu > 0)) {
    throw DomainError("Racah parameters need all inverse parameters > 0");
  }
  const Real one(1);
  const Real alpha = one / p.inv_alpha;
  const Real b = one / p.inv_b;
  const Real d = one / p.inv_d;
  const Real nu = one / p.inv_nu;
  return {alpha, b * alpha, (b * d * nu + one) * alpha, b * nu};
}

/// The scale and shift that make the Racah coefficients uniform.
template <class Real>
RescaleMap<Real> racah_uniform_map(const RacahParams<Real>& p) {
  using std::sqrt;
  const Real s = p.alpha + p.beta;
  const Real rho2 = s * s * s /
                    (p.alpha * p.beta * (p.beta + p.delta) * (p.n_big + s) *
                     (p.delta - p.alpha) * p.n_big);
  const Real sigma =
      -p.n_big * (p.alpha + Real(1)) * (p.beta + p.delta + Real(1)) / (s + Real(2));
  return RescaleMap<Real>(sqrt(rho2), sigma);
}

/// Direct evaluation: substitute back to (alpha, beta, delta, N), take the
/// unit-scale Racah coefficients and apply the uniform map. Interior only.
template <class Real>
RecurrenceCoefficients<Real> racah_uniform_direct(const InverseParams<Real>& p,
                                                  std::size_t max_degree) {
  const auto params = racah_params_from_inverse(p);
  return rescale_coefficients(racah_coeffs_unchecked(params, max_degree),
                              racah_uniform_map(params));
}

// ---------------------------------------------------------------------------
// Boundary strata

/// Bit set of inverse parameters fixed to zero.
enum InfiniteParam : unsigned {
  kAlphaInfinite = 1u,
  kBInfinite = 2u,
  kDInfinite = 4u,
  kNuInfinite = 8u,
};

struct SpecializationRow {
  unsigned zero_set = 0;
  FamilyTag target = FamilyTag::Racah;

  int dimension() const noexcept { return 4 - __builtin_popcount(zero_set); }
  /// "interior" for the open orthant, otherwise e.g. "d,nu=inf".
  std::string name() const;

  friend bool operator==(const SpecializationRow&, const SpecializationRow&) = default;
};

/// The sixteen strata in table order: dimension 4, then 3, 2, 1, 0.
std::span<const SpecializationRow> theorem_rows();

/// Accepts "interior" or a comma separated subset of {alpha, b, d, nu}
/// followed by "=inf", in any order.
std::optional<SpecializationRow> find_row(std::string_view name);

unsigned parse_zero_set(std::string_view name);

template <class Real>
InverseParams<Real> restrict_to_stratum(InverseParams<Real> p, unsigned zero_set) {
  if (zero_set & kAlphaInfinite) p.inv_alpha = Real(0);
  if (zero_set & kBInfinite) p.inv_b = Real(0);
  if (zero_set & kDInfinite) p.inv_d = Real(0);
  if (zero_set & kNuInfinite) p.inv_nu = Real(0);
  return p;
}

/// Interior sample point used for every row unless overridden:
/// (1/alpha, 1/b, 1/d, 1/nu) = (1/4, 1/2, 1/2, 1/8), giving N = 16.
template <class Real = double>
InverseParams<Real> default_sample_point() {
  return {Real(0.25), Real(0.5), Real(0.5), Real(0.125)};
}

/// The target family (with parameters) that the uniform Racah coefficients
/// reduce to on the row's stratum at `point`. Coordinates in the zero set
/// are ignored.
///
///   d=inf                 Hahn(alpha, beta, N)
///   nu=inf, d,nu=inf      Jacobi(alpha, beta), reflected
///   b=inf, d,b=inf        Meixner(alpha+1, c), c = a(1+dv)/(a+v)  (1/c when c > 1)
///   alpha=inf, d,alpha    Krawtchouk(p, N), p = X/(1+X), X = b(1 + dv(1+b))
///   nu,b=inf, d,nu,b      Laguerre(alpha)
///   b,alpha=inf, d,b,alpha Charlier(nu + d)
///   remaining strata      Hermite
/// in terms of alpha = 1/a, beta = 1/(ab), N = 1/(bv) with (a, b, d, v) the
/// inverse parameters.
template <class Real>
Family<Real> boundary_target(const SpecializationRow& row, const InverseParams<Real>& point) {
  const auto p = restrict_to_stratum(point, row.zero_set);
  validate(p);
  const Real one(1);
  const Real& a = p.inv_alpha;
  const Real& b = p.inv_b;
  const Real& d = p.inv_d;
  const Real& v = p.inv_nu;
  auto positive = [&](const Real& x, const char* name) {
    if (!(x > 0)) {
      throw DomainError("row " + row.name() + " needs " + name + " > 0 at the sample point");
    }
  };
  switch (row.target) {
    case FamilyTag::Racah:
      return racah_params_from_inverse(p);
    case FamilyTag::Hahn:
      positive(a, "inv_alpha");
      positive(b, "inv_b");
      positive(v, "inv_nu");
      return HahnParams<Real>{one / a, one / (a * b), one / (b * v)};
    case FamilyTag::Jacobi:
      positive(a, "inv_alpha");
      positive(b, "inv_b");
      return JacobiParams<Real>{one / a, one / (a * b)};
    case FamilyTag::Meixner: {
      positive(a, "inv_alpha");
      positive(v, "inv_nu");
      Real c = a * (one + d * v) / (a + v);
      if (c == one) {
        throw DomainError("row " + row.name() + ": Meixner parameter c = 1 is degenerate");
      }
      if (c > one) c = one / c;
      return MeixnerParams<Real>{one / a + one, c};
    }
    case FamilyTag::Krawtchouk: {
      positive(b, "inv_b");
      positive(v, "inv_nu");
      const Real x = b * (one + d * v * (one + b));
      return KrawtchoukParams<Real>{x / (one + x), one / (b * v)};
    }
    case FamilyTag::Laguerre:
      positive(a, "inv_alpha");
      return LaguerreParams<Real>{one / a};
    case FamilyTag::Charlier:
      positive(v, "inv_nu");
      return CharlierParams<Real>{one / v + d};
    case FamilyTag::Hermite:
      return HermiteParams<Real>{};
  }
  throw DomainError("unknown row target");
}

// ---------------------------------------------------------------------------
// Identification

inline constexpr double kDefaultIdentificationTolerance = 1e-8;

template <class Real = double>
struct Identification {
  RescaleMap<Real> map;
  /// The coefficients match the candidate after x -> -x.
  bool reflected = false;
  Real residual;
  bool matched = false;
};

/// Deviation of (B_n, C_n) from the fitted rescaled candidate. C_n is
/// compared relatively; B_n relative to max(|B_n|, |B^_n|, sqrt(C_n)),
/// C_n being the natural squared length scale of the recurrence at degree n.
template <class Real>
Real identification_residual(const RecurrenceCoefficients<Real>& coeffs,
                             const RecurrenceCoefficients<Real>& fitted, std::size_t n_max) {
  using std::abs;
  using std::max;
  using std::sqrt;
  Real residual(0);
  for (std::size_t n = 0; n <= n_max; ++n) {
    const Real& bn = coeffs.b(n);
    const Real& bf = fitted.b(n);
    const Real length = sqrt(abs(coeffs.c(n == 0 ? 1 : n)));
    const Real bscale = max(max(abs(bn), abs(bf)), length);
    Real dev = abs(bn - bf) / bscale;
    if (!is_finite(dev)) return dev;
    residual = max(residual, dev);
    if (n >= 1) {
      const Real& cn = coeffs.c(n);
      const Real& cf = fitted.c(n);
      dev = abs(cn - cf) / max(abs(cn), abs(cf));
      if (!is_finite(dev)) return dev;
      residual = max(residual, dev);
    }
  }
  return residual;
}

/// Fits q_n(x) = rho^n p_n(+-x/rho - sigma) of the candidate family to the
/// given coefficients: rho > 0 from C_1, sigma from B_0, then the remaining
/// degrees up to n_max are checked. Both orientations are tried and the
/// smaller residual kept. `matched` is residual < tolerance.
template <class Real>
Identification<Real> identify_rescaled_family(const RecurrenceCoefficients<Real>& coeffs,
                                              const Family<Real>& candidate, std::size_t n_max,
                                              const Real& tolerance) {
  using std::sqrt;
  if (n_max < 1) throw DomainError("identification needs n_max >= 1");
  if (n_max > coeffs.max_degree()) {
    throw RangeError("identification up to degree " + std::to_string(n_max) +
                     " but coefficients stop at " + std::to_string(coeffs.max_degree()));
  }
  const auto cand = family_coeffs(candidate, n_max);
  if (!(coeffs.c(1) > 0) || !(cand.c(1) > 0)) {
    throw DomainError("identification needs C_1 > 0 for both coefficient sets");
  }
  const Real rho = sqrt(coeffs.c(1) / cand.c(1));
  std::optional<Identification<Real>> best;
  for (bool reflected : {false, true}) {
    const auto oriented = reflected ? reflect_coefficients(cand) : cand;
    const Real sigma = coeffs.b(0) / rho - oriented.b(0);
    RescaleMap<Real> map(rho, sigma);
    const auto fitted = rescale_coefficients(oriented, map);
    Real residual = identification_residual(coeffs.truncated(n_max), fitted, n_max);
    if (!best || residual < best->residual) {
      best = Identification<Real>{map, reflected, residual, residual < tolerance};
    }
  }
  return *best;
}

// ---------------------------------------------------------------------------
// Theorem table

template <class Real = double>
struct RowResult {
  SpecializationRow row;
  InverseParams<Real> point;
  std::optional<Family<Real>> candidate;
  std::optional<Identification<Real>> fit;
  std::string error;

  bool passed() const { return fit && fit->matched; }
};

template <class Real = double>
struct TheoremTableReport {
  std::vector<RowResult<Real>> rows;
  std::size_t n_max = 0;
  double tolerance = kDefaultIdentificationTolerance;

  bool all_passed() const {
    for (const auto& r : rows) {
      if (!r.passed()) return false;
    }
    return !rows.empty();
  }
};

/// Raised by `require_all_rows` for the first failing row.
class RowIdentificationFailure : public std::runtime_error {
 public:
  RowIdentificationFailure(const SpecializationRow& row, const std::string& detail)
      : std::runtime_error("row " + row.name() + " (" +
                           std::string(family_name(row.target)) + "): " + detail),
        row_(row) {}
  const SpecializationRow& row() const noexcept { return row_; }

 private:
  SpecializationRow row_;
};

template <class Real>
RowResult<Real> identify_row(const SpecializationRow& row, const InverseParams<Real>& sample,
                             std::size_t n_max, const Real& tolerance) {
  RowResult<Real> result{row, restrict_to_stratum(sample, row.zero_set), {}, {}, {}};
  try {
    result.candidate = boundary_target(row, result.point);
    const auto coeffs = racah_uniform_coeffs(result.point, n_max);
    result.fit = identify_rescaled_family(coeffs, *result.candidate, n_max, tolerance);
  } catch (const std::exception& ex) {
    result.error = ex.what();
  }
  return result;
}

/// Identifies every selected row at its sample point. `sample_for_row`
/// returns the interior point whose restriction to the row's stratum is
/// used. Rows are evaluated independently; output order is table order.
template <class Real>
TheoremTableReport<Real> theorem_table(
    std::size_t n_max, const std::function<InverseParams<Real>(const SpecializationRow&)>&
                           sample_for_row,
    const Real& tolerance, std::optional<unsigned> only_zero_set = std::nullopt) {
  TheoremTableReport<Real> report;
  report.n_max = n_max;
  report.tolerance = to_double(tolerance);
  for (const auto& row : theorem_rows()) {
    if (only_zero_set && row.zero_set != *only_zero_set) continue;
    report.rows.push_back(identify_row(row, sample_for_row(row), n_max, tolerance));
  }
  return report;
}

template <class Real>
TheoremTableReport<Real> theorem_table(std::size_t n_max, const InverseParams<Real>& sample,
                                       const Real& tolerance,
                                       std::optional<unsigned> only_zero_set = std::nullopt) {
  return theorem_table<Real>(
      n_max, [&](const SpecializationRow&) { return sample; }, tolerance, only_zero_set);
}

template <class Real>
void require_all_rows(const TheoremTableReport<Real>& report) {
  for (const auto& r : report.rows) {
    if (r.passed()) continue;
    if (!r.error.empty()) throw RowIdentificationFailure(r.row, r.error);
    throw RowIdentificationFailure(
        r.row, "residual " + number_string(r.fit->residual) + " is not below tolerance " +
                   number_string(report.tolerance));
  }
}

// ---------------------------------------------------------------------------
// Convergence scans

template <class Real = double>
struct ScanStep {
  Real t;
  Real deviation;    // max over n of max(|dB_n|, |dC_n|)
  Real b_deviation;  // max over n of |dB_n|
  Real c_deviation;  // max over n of |dC_n|
  std::optional<Real> order;
};

/// A one-parameter family of coefficient sets reaching `boundary` as t -> 0.
template <class Real = double>
struct LimitPath {
  std::string name;
  std::string parameter;  // meaning of t
  std::function<RecurrenceCoefficients<Real>(const Real& t, std::size_t n_max)> coeffs;
  std::function<RecurrenceCoefficients<Real>(std::size_t n_max)> boundary;
};

template <class Real>
std::vector<ScanStep<Real>> convergence_scan(const LimitPath<Real>& path,
                                            std::span<const Real> ts, std::size_t n_max) {
  using std::abs;
  using std::log;
  using std::max;
  const auto limit = path.boundary(n_max);
  std::vector<ScanStep<Real>> steps;
  steps.reserve(ts.size());
  for (const auto& t : ts) {
    const auto coeffs = path.coeffs(t, n_max);
    Real db(0), dc(0);
    for (std::size_t n = 0; n <= n_max; ++n) {
      db = max(db, abs(coeffs.b(n) - limit.b(n)));
      if (n >= 1) dc = max(dc, abs(coeffs.c(n) - limit.c(n)));
    }
    ScanStep<Real> step{t, max(db, dc), db, dc, std::nullopt};
    if (!steps.empty()) {
      const auto& prev = steps.back();
      if (prev.deviation > 0 && step.deviation > 0 && prev.t != t) {
        step.order = log(prev.deviation / step.deviation) / log(prev.t / t);
      }
    }
    steps.push_back(std::move(step));
  }
  return steps;
}

/// t_k = 10^{-k}, k = first..first+steps-1.
template <class Real>
std::vector<Real> decade_steps(std::size_t steps, int first = 1) {
  using std::pow;
  std::vector<Real> ts;
  for (std::size_t k = 0; k < steps; ++k) {
    ts.push_back(pow(Real(10), -(first + static_cast<int>(k))));
  }
  return ts;
}

/// Parameter held fixed by the Jacobi->Laguerre preset.
inline constexpr double kJacobiLaguerreAlpha = 1.0;
/// Parameter held fixed by the Laguerre rescaling presets.
inline constexpr double kLaguerreAxisAlpha = 2.0;

/// Named limit paths.
///
///   jacobi-symmetric-to-hermite  alpha^{n/2} p_n^{(alpha,alpha)}(x/alpha^{1/2}), t = 1/alpha
///   jacobi-to-laguerre           (-beta/2)^n p_n^{(1,beta)}(1-2x/beta), t = 1/beta
///   laguerre-to-hermite          (2 alpha)^{-n/2} l_n^alpha((2 alpha)^{1/2} x + alpha), t = 1/alpha
///   jacobi-uniform-diagonal      uniform Jacobi at (t, t) -> (0, 0)
///   jacobi-uniform-alpha-axis    uniform Jacobi at (1/2, t) -> (1/2, 0)
///   row:<row name>               uniform Racah with the row's zero set at t
///                                (other coordinates at the default sample point)
std::vector<std::string> preset_names();

template <class Real>
LimitPath<Real> limit_preset(std::string_view name);

}  // namespace askey

#include "askey/detail/limit_presets.hpp"
