#pragma once

// Definitions of the named limit paths declared in uniform_limits.hpp.

#include <string>
#include <string_view>

namespace askey {

template <class Real>
LimitPath<Real> limit_preset(std::string_view name) {
  using std::sqrt;
  const Real one(1);
  LimitPath<Real> path;
  path.name = std::string(name);

  if (name == "jacobi-symmetric-to-hermite") {
    path.parameter = "1/alpha";
    path.coeffs = [one](const Real& t, std::size_t n_max) {
      const Real alpha = one / t;
      return rescale_coefficients(jacobi_coeffs(JacobiParams<Real>{alpha, alpha}, n_max),
                                  RescaleMap<Real>(sqrt(alpha), Real(0)));
    };
    path.boundary = [](std::size_t n_max) { return hermite_coeffs<Real>(n_max); };
  } else if (name == "jacobi-to-laguerre") {
    // P^{(1,beta)}(1 - 2x/beta) written with the reflected Jacobi pair
    // (beta, 1) so that the scale stays positive.
    path.parameter = "1/beta";
    path.coeffs = [one](const Real& t, std::size_t n_max) {
      const Real beta = one / t;
      const JacobiParams<Real> p{beta, Real(kJacobiLaguerreAlpha)};
      return rescale_coefficients(jacobi_coeffs(p, n_max), RescaleMap<Real>(beta / 2, one));
    };
    path.boundary = [](std::size_t n_max) {
      return laguerre_coeffs(Real(kJacobiLaguerreAlpha), n_max);
    };
  } else if (name == "laguerre-to-hermite") {
    path.parameter = "1/alpha";
    path.coeffs = [one](const Real& t, std::size_t n_max) {
      const Real alpha = one / t;
      return rescale_coefficients(laguerre_coeffs(alpha, n_max),
                                  RescaleMap<Real>(one / sqrt(2 * alpha), -alpha));
    };
    path.boundary = [](std::size_t n_max) { return hermite_coeffs<Real>(n_max); };
  } else if (name == "jacobi-uniform-diagonal") {
    path.parameter = "inv_alpha = inv_beta";
    path.coeffs = [](const Real& t, std::size_t n_max) {
      return jacobi_uniform_coeffs(JacobiInverseParams<Real>{t, t}, n_max);
    };
    path.boundary = [](std::size_t n_max) {
      return jacobi_uniform_coeffs(JacobiInverseParams<Real>{}, n_max);
    };
  } else if (name == "jacobi-uniform-alpha-axis") {
    path.parameter = "inv_beta";
    path.coeffs = [](const Real& t, std::size_t n_max) {
      return jacobi_uniform_coeffs(JacobiInverseParams<Real>{Real(0.5), t}, n_max);
    };
    path.boundary = [](std::size_t n_max) {
      return jacobi_uniform_coeffs(JacobiInverseParams<Real>{Real(0.5), Real(0)}, n_max);
    };
  } else if (name.substr(0, 4) == "row:") {
    const auto row = find_row(name.substr(4));
    if (!row) throw ParseError("unknown row '" + std::string(name.substr(4)) + "'");
    const unsigned zs = row->zero_set;
    path.parameter = "zeroed inverse parameters";
    path.coeffs = [zs](const Real& t, std::size_t n_max) {
      auto p = default_sample_point<Real>();
      if (zs & kAlphaInfinite) p.inv_alpha = t;
      if (zs & kBInfinite) p.inv_b = t;
      if (zs & kDInfinite) p.inv_d = t;
      if (zs & kNuInfinite) p.inv_nu = t;
      return racah_uniform_coeffs(p, n_max);
    };
    path.boundary = [zs](std::size_t n_max) {
      return racah_uniform_coeffs(restrict_to_stratum(default_sample_point<Real>(), zs), n_max);
    };
  } else {
    throw ParseError("unknown limit preset '" + std::string(name) + "'");
  }
  return path;
}

}  // namespace askey
