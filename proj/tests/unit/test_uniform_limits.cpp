#include <doctest.h>

#include "askey/properties.hpp"
#include "askey/uniform_limits.hpp"

#include <cmath>

using namespace askey;

namespace {

double rel(double a, double b) {
  return std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1e-300});
}

// max over n of |dB_n| / max(1, |B_n|) and |dC_n| / max(1, |C_n|)
template <class Real>
Real scaled_deviation(const RecurrenceCoefficients<Real>& x, const RecurrenceCoefficients<Real>& y,
                      std::size_t n_max) {
  using std::abs;
  Real d(0);
  for (std::size_t n = 0; n <= n_max; ++n) {
    d = std::max(d, abs(x.b(n) - y.b(n)) / std::max(Real(1), abs(y.b(n))));
    if (n) d = std::max(d, abs(x.c(n) - y.c(n)) / std::max(Real(1), abs(y.c(n))));
  }
  return d;
}

}  // namespace

TEST_CASE("jacobi uniform: vertex and diagonal") {
  const auto v = jacobi_uniform_coeffs(JacobiInverseParams<>{0.0, 0.0}, 12);
  for (std::size_t n = 0; n <= 12; ++n) {
    CHECK(v.b(n) == 0.0);
    if (n) CHECK(v.c(n) == 4.0 * n);
  }
  for (double t : {1e-6, 0.01, 0.3, 2.0, 50.0}) {
    const auto d = jacobi_uniform_coeffs(JacobiInverseParams<>{t, t}, 8);
    for (std::size_t n = 0; n <= 8; ++n) CHECK(d.b(n) == 0.0);
  }
}

TEST_CASE("jacobi uniform at (1/2, 1/2), n = 1") {
  // alpha = beta = 2: rho = 4, sigma = 0, C_1 = 16 * 4*3*3 / (6^2 * 7) = 16/7
  const auto u = jacobi_uniform_coeffs(JacobiInverseParams<>{0.5, 0.5}, 1);
  CHECK(u.c(1) == doctest::Approx(16.0 / 7).epsilon(1e-15));
  CHECK(u.b(1) == 0.0);
  const auto map = jacobi_uniform_map(JacobiParams<>{2.0, 2.0});
  CHECK(map.rho() == doctest::Approx(4.0));
  CHECK(map.sigma() == 0.0);
}

TEST_CASE("jacobi uniform agrees with the direct route") {
  SplitMix64 rng(7);
  for (int k = 0; k < 100; ++k) {
    const JacobiInverseParams<> p{rng.uniform(0.01, 3), rng.uniform(0.01, 3)};
    const auto u = jacobi_uniform_coeffs(p, 10);
    const auto d = jacobi_uniform_direct(p, 10);
    for (std::size_t n = 0; n <= 10; ++n) {
      CHECK(std::abs(u.b(n) - d.b(n)) <= 1e-12 * std::max(1.0, std::abs(d.b(n))));
      if (n) CHECK(rel(u.c(n), d.c(n)) < 1e-12);
    }
  }
}

TEST_CASE("inverse parameter validation") {
  CHECK_THROWS_AS(jacobi_uniform_coeffs(JacobiInverseParams<>{-0.1, 0.0}, 2), DomainError);
  CHECK_THROWS_AS(racah_uniform_coeffs(InverseParams<>{0.1, 0.1, -1e-9, 0.1}, 2), DomainError);
  CHECK_THROWS_AS(racah_uniform_coeffs(InverseParams<>{0.1, INFINITY, 0.1, 0.1}, 2),
                  DomainError);
}

TEST_CASE("racah uniform: degree budget on finite-N strata") {
  // N = 1/(0.5 * 0.25) = 8
  const InverseParams<> p{0.2, 0.5, 0.3, 0.25};
  CHECK_NOTHROW(racah_uniform_coeffs(p, 8));
  try {
    racah_uniform_coeffs(p, 9);
    FAIL("expected a validity error");
  } catch (const ValidityError& e) {
    CHECK(e.index() == 9);
  }
  // N is infinite once inv_b or inv_nu vanishes
  CHECK_NOTHROW(racah_uniform_coeffs(InverseParams<>{0.2, 0.0, 0.3, 0.25}, 40));
  CHECK_NOTHROW(racah_uniform_coeffs(InverseParams<>{0.2, 0.5, 0.3, 0.0}, 40));
}

TEST_CASE("racah uniform: vertex") {
  const auto r = racah_uniform_coeffs(InverseParams<>{}, 16);
  const auto j = jacobi_uniform_coeffs(JacobiInverseParams<>{}, 16);
  for (std::size_t n = 0; n <= 16; ++n) {
    CHECK(r.b(n) == j.b(n));
    // the Racah scaling is half the Jacobi one at the vertex
    if (n) CHECK(4.0 * r.c(n) == j.c(n));
    if (n) CHECK(r.c(n) == static_cast<double>(n));
  }
}

TEST_CASE("racah uniform: interior consistency on random points") {
  SplitMix64 rng(11);
  for (int k = 0; k < 100; ++k) {
    const InverseParams<> p{rng.uniform(0.01, 0.5), rng.uniform(0.01, 0.5),
                            rng.uniform(0.01, 0.5), rng.uniform(0.01, 0.5)};
    const auto big = *finite_n_big(p);
    const auto n_max = std::min<std::size_t>(8, static_cast<std::size_t>(std::floor(big)));
    const auto u = racah_uniform_coeffs(p, n_max);
    const auto d = racah_uniform_direct(p, n_max);
    for (std::size_t n = 0; n <= n_max; ++n) {
      CHECK(std::abs(u.b(n) - d.b(n)) <= 1e-9 * std::max(std::abs(d.b(n)), std::sqrt(d.c(std::max<std::size_t>(n, 1)))));
      if (n) CHECK(rel(u.c(n), d.c(n)) < 1e-9);
    }
  }
}

TEST_CASE("racah parameter substitution") {
  const auto p = racah_params_from_inverse(InverseParams<>{0.25, 0.5, 0.5, 0.125});
  CHECK(p.alpha == 4.0);
  CHECK(p.beta == 8.0);
  CHECK(p.delta == doctest::Approx(132.0));
  CHECK(p.n_big == 16.0);
  CHECK_THROWS_AS(racah_params_from_inverse(InverseParams<>{0.25, 0.0, 0.5, 0.125}), DomainError);
  // sigma is -B_0 of the unscaled family
  const auto map = racah_uniform_map(p);
  CHECK(map.sigma() == doctest::Approx(-racah_coeffs(p, 0).b(0)));
}

TEST_CASE("row table") {
  const auto rows = theorem_rows();
  REQUIRE(rows.size() == 16);
  std::vector<int> dims;
  for (const auto& r : rows) dims.push_back(r.dimension());
  CHECK(dims == std::vector<int>{4, 3, 3, 3, 3, 2, 2, 2, 2, 2, 2, 1, 1, 1, 1, 0});
  CHECK(rows[0].name() == "interior");
  CHECK(rows[1].name() == "d=inf");
  CHECK(rows[15].name() == "d,nu,b,alpha=inf");
  CHECK(find_row("alpha,b=inf")->target == FamilyTag::Charlier);
  CHECK(find_row("nu,alpha=inf")->target == FamilyTag::Hermite);
  CHECK(find_row("d=inf")->target == FamilyTag::Hahn);
  CHECK_FALSE(find_row("x=inf"));
  CHECK_FALSE(find_row("d,d=inf"));
  CHECK_FALSE(find_row("d"));
  for (const auto& r : rows) CHECK(find_row(r.name()) == r);
}

TEST_CASE("identification: self-consistency examples") {
  const auto h = rescale_coefficients(hermite_coeffs<double>(8), RescaleMap<>(2.0, 0.0));
  const auto fit = identify_rescaled_family(h, Family<double>{HermiteParams<>{}}, 8, 1e-8);
  CHECK(fit.matched);
  CHECK(fit.map.rho() == 2.0);
  CHECK(fit.map.sigma() == 0.0);
  CHECK(fit.residual == 0.0);

  const auto v = jacobi_uniform_coeffs(JacobiInverseParams<>{}, 8);
  const auto vh = identify_rescaled_family(v, Family<double>{HermiteParams<>{}}, 8, 1e-8);
  CHECK(vh.matched);
  CHECK(vh.map.rho() == doctest::Approx(2 * std::sqrt(2.0)).epsilon(1e-15));
  CHECK(vh.map.sigma() == 0.0);
}

TEST_CASE("identification: jacobi uniform axes are rescaled Laguerre") {
  for (double a : {0.05, 0.5, 2.0}) {
    const auto on_alpha = jacobi_uniform_coeffs(JacobiInverseParams<>{a, 0.0}, 10);
    const auto f1 = identify_rescaled_family(on_alpha, Family<double>{LaguerreParams<>{1 / a}}, 10, 1e-10);
    CHECK(f1.matched);
    const auto on_beta = jacobi_uniform_coeffs(JacobiInverseParams<>{0.0, a}, 10);
    const auto f2 = identify_rescaled_family(on_beta, Family<double>{LaguerreParams<>{1 / a}}, 10, 1e-10);
    CHECK(f2.matched);
    CHECK(f1.reflected != f2.reflected);
  }
}

TEST_CASE("identification rejects a wrong family and bad inputs") {
  const auto l = laguerre_coeffs(1.0, 6);
  const auto fit = identify_rescaled_family(l, Family<double>{HermiteParams<>{}}, 6, 1e-8);
  CHECK_FALSE(fit.matched);
  CHECK(fit.residual > 1e-3);
  const RecurrenceCoefficients<> flat({0.0, 0.0}, {0.0});
  CHECK_THROWS_AS(identify_rescaled_family(flat, Family<double>{HermiteParams<>{}}, 1, 1e-8),
                  DomainError);
  CHECK_THROWS_AS(identify_rescaled_family(l, Family<double>{HermiteParams<>{}}, 7, 1e-8),
                  RangeError);
}

TEST_CASE("theorem table") {
  const auto report = theorem_table(8, default_sample_point<double>(), 1e-8);
  REQUIRE(report.rows.size() == 16);
  for (const auto& r : report.rows) {
    INFO(r.row.name(), " ", r.error);
    CHECK(r.passed());
    CHECK(family_tag(*r.candidate) == r.row.target);
  }
  CHECK(report.all_passed());
  CHECK_NOTHROW(require_all_rows(report));

  const auto hahn = theorem_table(8, default_sample_point<double>(), 1e-8, parse_zero_set("d=inf"));
  REQUIRE(hahn.rows.size() == 1);
  CHECK(hahn.rows[0].row.target == FamilyTag::Hahn);
}

TEST_CASE("theorem table at tolerance 0 fails every row") {
  const auto report = theorem_table(8, default_sample_point<double>(), 0.0);
  // residual < 0 is impossible, including the rows that fit exactly
  std::size_t failed = 0;
  for (const auto& r : report.rows) failed += r.passed() ? 0 : 1;
  CHECK(failed == report.rows.size());
  try {
    require_all_rows(report);
    FAIL("expected a row failure");
  } catch (const RowIdentificationFailure& e) {
    CHECK(e.row().name() == "interior");
  }
}

TEST_CASE("theorem table at other sample points") {
  SplitMix64 rng(5);
  for (int k = 0; k < 20; ++k) {
    // keep N >= 8 and away from the Meixner c = 1 degeneracy
    InverseParams<> p{rng.uniform(0.05, 0.5), rng.uniform(0.05, 0.5), rng.uniform(0.05, 0.5),
                      rng.uniform(0.01, 0.1)};
    if (1 / (p.inv_b * p.inv_nu) < 8) continue;
    const auto report = theorem_table(8, p, 1e-8);
    for (const auto& r : report.rows) {
      INFO(r.row.name(), " ", r.error);
      CHECK(r.passed());
    }
  }
}

TEST_CASE("rows with inv_b and inv_nu zero at the sample point are refused") {
  const InverseParams<> p{0.25, 0.5, 0.5, 0.0};
  const auto report = theorem_table(8, p, 1e-8, parse_zero_set("d=inf"));
  CHECK_FALSE(report.rows[0].passed());
  CHECK_FALSE(report.rows[0].error.empty());
}

TEST_CASE("scan: constant path") {
  LimitPath<> path;
  path.coeffs = [](const double&, std::size_t n) { return hermite_coeffs<double>(n); };
  path.boundary = [](std::size_t n) { return hermite_coeffs<double>(n); };
  const auto ts = decade_steps<double>(4);
  for (const auto& s : convergence_scan(path, std::span<const double>(ts), 8)) {
    CHECK(s.deviation == 0.0);
    CHECK_FALSE(s.order);
  }
}

TEST_CASE("scan: laguerre to hermite C deviation is n^2/(2 alpha)") {
  ScopedPrecision prec(256);
  const auto path = limit_preset<mp_real>("laguerre-to-hermite");
  const auto ts = decade_steps<mp_real>(5);
  const auto steps = convergence_scan(path, std::span<const mp_real>(ts), 8);
  for (const auto& s : steps) {
    const mp_real expect = 64 * s.t / 2;  // n = 8, t = 1/alpha
    CHECK(to_double(abs(s.c_deviation - expect) / expect) < 1e-40);
  }
  // B_n = (2n+1) / sqrt(2 alpha): order one half
  CHECK(to_double(*steps.back().order) == doctest::Approx(0.5).epsilon(1e-9));
}

TEST_CASE("scan: symmetric jacobi to hermite approaches order 1") {
  const auto path = limit_preset<double>("jacobi-symmetric-to-hermite");
  const auto ts = decade_steps<double>(6);
  const auto steps = convergence_scan(path, std::span<const double>(ts), 8);
  CHECK(*steps.back().order == doctest::Approx(1.0).epsilon(1e-3));
  for (const auto& s : steps) CHECK(s.b_deviation == 0.0);
}

TEST_CASE("presets") {
  for (const auto& name : preset_names()) {
    const auto path = limit_preset<double>(name);
    const auto ts = decade_steps<double>(3, 2);
    const auto steps = convergence_scan(path, std::span<const double>(ts), 6);
    CHECK(steps.size() == 3);
    CHECK(steps[2].deviation <= steps[0].deviation);
  }
  CHECK_THROWS_AS(limit_preset<double>("nope"), ParseError);
  CHECK_THROWS_AS(limit_preset<double>("row:q=inf"), ParseError);
}

TEST_CASE("boundary continuity from every adjacent stratum") {
  ScopedPrecision prec(256);
  const auto sample = default_sample_point<mp_real>();
  const std::size_t n_max = 8;
  int order_one = 0, order_half = 0;
  for (const auto& row : theorem_rows()) {
    const auto limit = racah_uniform_coeffs(restrict_to_stratum(sample, row.zero_set), n_max);
    for (unsigned bit : {kAlphaInfinite, kBInfinite, kDInfinite, kNuInfinite}) {
      if (!(row.zero_set & bit)) continue;
      // the adjacent stratum frees `bit`; a and v both vanishing on the row
      // makes B_n depend on sqrt(inv_alpha + inv_nu)
      const unsigned av = kAlphaInfinite | kNuInfinite;
      const bool sqrt_rate = (row.zero_set & av) == av && (bit & av);
      auto at = [&](const mp_real& t) {
        auto p = restrict_to_stratum(sample, row.zero_set & ~bit);
        if (bit == kAlphaInfinite) p.inv_alpha = t;
        if (bit == kBInfinite) p.inv_b = t;
        if (bit == kDInfinite) p.inv_d = t;
        if (bit == kNuInfinite) p.inv_nu = t;
        return scaled_deviation(racah_uniform_coeffs(p, n_max), limit, n_max);
      };
      INFO(row.name(), " freeing bit ", bit);
      mp_real prev = at(mp_real("1e-3"));
      for (int k = 4; k <= 8; ++k) {
        const mp_real dev = at(pow(mp_real(10), -k));
        CHECK(dev <= prev);
        prev = dev;
      }
      if (sqrt_rate) {
        ++order_half;
        // 1e-6 needs the square of the order-one step size
        CHECK(to_double(at(mp_real("1e-16"))) < 1e-6);
        const double ratio = to_double(at(mp_real("1e-12")) / at(mp_real("1e-14")));
        CHECK(ratio == doctest::Approx(10.0).epsilon(1e-3));
      } else {
        ++order_one;
        CHECK(to_double(prev) < 1e-6);
      }
    }
  }
  CHECK(order_one + order_half == 32);
}

TEST_CASE("favard validity of the uniform coefficients") {
  SplitMix64 rng(3);
  for (int k = 0; k < 100; ++k) {
    InverseParams<> p{rng.uniform(0, 1), rng.uniform(0, 1), rng.uniform(0, 1), rng.uniform(0, 1)};
    // zero a random subset of coordinates
    const auto zs = static_cast<unsigned>(rng.below(16));
    p = restrict_to_stratum(p, zs);
    std::size_t n_max = 10;
    if (auto big = finite_n_big(p)) n_max = std::min<std::size_t>(n_max, static_cast<std::size_t>(*big));
    // delta - alpha > n
    if (p.inv_alpha * p.inv_b * p.inv_d * p.inv_nu * static_cast<double>(n_max) >= 1) continue;
    if (n_max == 0) continue;
    CHECK(favard_check(racah_uniform_coeffs(p, n_max)).valid);
  }
}
