#include "askey/properties.hpp"

#include "askey/families.hpp"
#include "askey/recurrence.hpp"
#include "askey/uniform_limits.hpp"

#include <cmath>
#include <functional>

namespace askey {

namespace {

using Coeffs = RecurrenceCoefficients<double>;

// A Favard-valid coefficient set: a closed-form family or free random data
// with |B_n| <= 1, C_n in [0.05, 1]. `unit_scale` leaves out the uniformly
// rescaled Jacobi sets, whose C_n grow like 4n.
Coeffs random_coeffs(SplitMix64& rng, std::size_t degree, bool unit_scale = false) {
  std::size_t kind = rng.below(4);
  if (unit_scale && kind == 2) kind = 3;
  switch (kind) {
    case 0:
      return hermite_coeffs<double>(degree);
    case 1:
      return jacobi_coeffs(JacobiParams<>{rng.uniform(-0.9, 3), rng.uniform(-0.9, 3)}, degree);
    case 2:
      return jacobi_uniform_coeffs(
          JacobiInverseParams<>{rng.uniform(0, 2), rng.uniform(0, 2)}, degree);
    default: {
      std::vector<double> b, c;
      for (std::size_t n = 0; n <= degree; ++n) b.push_back(rng.uniform(-1, 1));
      for (std::size_t n = 1; n <= degree; ++n) c.push_back(rng.uniform(0.05, 1));
      return Coeffs(std::move(b), std::move(c));
    }
  }
}

RescaleMap<double> random_map(SplitMix64& rng) {
  return RescaleMap<double>(std::exp(rng.uniform(std::log(0.1), std::log(10.0))),
                            rng.uniform(-5, 5));
}

void record(PropertyResult& r, double ratio, const std::string& what) {
  ++r.cases;
  if (!(ratio <= 1)) {
    if (r.failures++ == 0) r.example = what;
  }
  if (!(ratio <= r.worst)) r.worst = ratio;
}

using Check = std::function<void(SplitMix64&, PropertyResult&, std::size_t)>;

void monicity(SplitMix64& rng, PropertyResult& r, std::size_t k) {
  const std::size_t degree = rng.below(13);
  const auto table = generate_polynomials(random_coeffs(rng, degree), degree);
  double bad = 0;
  for (std::size_t n = 0; n <= degree; ++n) {
    const auto p = table.poly(n);
    if (p.size() != n + 1 || p[n] != 1.0) bad = 2;
  }
  record(r, bad, "case " + std::to_string(k));
}

void recurrence_residual(SplitMix64& rng, PropertyResult& r, std::size_t k) {
  const std::size_t degree = 1 + rng.below(10);
  // the bound is absolute, so the data must be of unit scale
  const auto coeffs = random_coeffs(rng, degree, true);
  const auto table = generate_polynomials(coeffs, degree);
  const double x = rng.uniform(-5, 5);
  double ratio = 0;
  for (std::size_t n = 0; n + 1 <= degree; ++n) {
    const double pn = evaluate_monomial(table.poly(n), x);
    const double pn1 = evaluate_monomial(table.poly(n + 1), x);
    double res = x * pn - pn1 - coeffs.b(n) * pn;
    if (n >= 1) res -= coeffs.c(n) * evaluate_monomial(table.poly(n - 1), x);
    const double allowed = 1e-10 * std::pow(1 + std::abs(x), static_cast<double>(n + 1));
    ratio = std::max(ratio, std::abs(res) / allowed);
  }
  record(r, ratio, "case " + std::to_string(k) + " x=" + number_string(x));
}

void rescale_roundtrip(SplitMix64& rng, PropertyResult& r, std::size_t k) {
  const std::size_t degree = rng.below(13);
  const auto coeffs = random_coeffs(rng, degree);
  const auto map = random_map(rng);
  const auto back = rescale_coefficients(rescale_coefficients(coeffs, map), map.inverse());
  double ratio = 0;
  for (std::size_t n = 0; n <= degree; ++n) {
    const double scale = std::max({std::abs(coeffs.b(n)), std::abs(map.sigma()), 1e-300});
    ratio = std::max(ratio, std::abs(back.b(n) - coeffs.b(n)) / scale / 1e-13);
    if (n >= 1) {
      ratio = std::max(ratio, std::abs(back.c(n) - coeffs.c(n)) / coeffs.c(n) / 1e-13);
    }
  }
  record(r, ratio, "case " + std::to_string(k));
}

void rescale_commutation(SplitMix64& rng, PropertyResult& r, std::size_t k) {
  const std::size_t degree = rng.below(11);
  const auto coeffs = random_coeffs(rng, degree);
  const auto map = random_map(rng);
  const auto base = generate_polynomials(coeffs, degree);
  const auto scaled = generate_polynomials(rescale_coefficients(coeffs, map), degree);
  double ratio = 0;
  for (int i = 0; i <= 8; ++i) {
    // grid in the rescaled variable around the shifted support
    const double y = map.rho() * (-2.0 + 0.5 * i + map.sigma());
    for (std::size_t n = 0; n <= degree; ++n) {
      const double direct = evaluate(scaled, n, y);
      const double via = std::pow(map.rho(), static_cast<double>(n)) *
                         evaluate(base, n, y / map.rho() - map.sigma());
      // |q_n| can vanish at a zero; measure against the size of its terms
      const double z = std::abs(y / map.rho() - map.sigma());
      double mag = 0, mag_scaled = 0;
      for (std::size_t j = 0; j <= n; ++j) {
        const double e = static_cast<double>(j);
        mag += std::abs(base.poly(n)[j]) * std::pow(z, e);
        mag_scaled += std::abs(scaled.poly(n)[j]) * std::pow(std::abs(y), e);
      }
      mag = std::max({std::abs(direct), std::abs(via), mag_scaled,
                      std::pow(map.rho(), static_cast<double>(n)) * mag});
      ratio = std::max(ratio, std::abs(direct - via) / mag / 1e-10);
    }
  }
  record(r, ratio, "case " + std::to_string(k));
}

void favard_preservation(SplitMix64& rng, PropertyResult& r, std::size_t k) {
  const std::size_t degree = 1 + rng.below(12);
  const auto coeffs = random_coeffs(rng, degree);
  const auto map = random_map(rng);
  const bool before = favard_check(coeffs).valid;
  const bool after = favard_check(rescale_coefficients(coeffs, map)).valid;
  record(r, before == after ? 0.0 : 2.0, "case " + std::to_string(k));
}

void parity(SplitMix64& rng, PropertyResult& r, std::size_t k) {
  const std::size_t degree = rng.below(16);
  std::vector<double> b(degree + 1, 0.0), c;
  for (std::size_t n = 1; n <= degree; ++n) c.push_back(rng.uniform(0.01, 5));
  const auto table = generate_polynomials(Coeffs(std::move(b), std::move(c)), degree);
  double bad = 0;
  for (std::size_t n = 0; n <= degree; ++n) {
    const auto p = table.poly(n);
    for (std::size_t j = 0; j <= n; ++j) {
      if ((n - j) % 2 == 1 && p[j] != 0.0) bad = 2;
    }
  }
  record(r, bad, "case " + std::to_string(k));
}

void self_identification(SplitMix64& rng, PropertyResult& r, std::size_t k) {
  const std::size_t degree = 1 + rng.below(10);
  Family<double> cand;
  switch (rng.below(4)) {
    case 0: cand = HermiteParams<>{}; break;
    case 1: cand = LaguerreParams<>{rng.uniform(-0.5, 4)}; break;
    case 2: cand = JacobiParams<>{rng.uniform(-0.5, 4), rng.uniform(-0.5, 4)}; break;
    default: cand = CharlierParams<>{rng.uniform(0.2, 5)}; break;
  }
  const auto map = random_map(rng);
  const auto coeffs = rescale_coefficients(family_coeffs(cand, degree), map);
  const auto fit = identify_rescaled_family(coeffs, cand, degree, 1e-12);
  const double ratio = std::max(to_double(fit.residual) / 1e-12,
                                std::abs(fit.map.rho() - map.rho()) / map.rho() / 1e-12);
  record(r, fit.reflected && !std::holds_alternative<HermiteParams<>>(cand) ? 2.0 : ratio,
         "case " + std::to_string(k) + " " + format_family(cand));
}

}  // namespace

std::vector<PropertyResult> run_property_suite(std::uint64_t seed, std::size_t cases) {
  const std::vector<std::pair<std::string, Check>> checks{
      {"monicity", monicity},
      {"recurrence-residual", recurrence_residual},
      {"rescale-roundtrip", rescale_roundtrip},
      {"rescale-commutation", rescale_commutation},
      {"favard-preservation", favard_preservation},
      {"parity", parity},
      {"self-identification", self_identification},
  };
  std::vector<PropertyResult> out;
  for (std::size_t i = 0; i < checks.size(); ++i) {
    SplitMix64 rng(seed ^ (0x51ed27ULL * (i + 1)));
    PropertyResult r;
    r.name = checks[i].first;
    for (std::size_t k = 0; k < cases; ++k) checks[i].second(rng, r, k);
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace askey
