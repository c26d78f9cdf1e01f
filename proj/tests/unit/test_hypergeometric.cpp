#include <doctest.h>

#include "askey/families.hpp"
#include "askey/hypergeometric.hpp"
#include "askey/properties.hpp"

#include <algorithm>
#include <cmath>

using namespace askey;

TEST_CASE("pochhammer") {
  CHECK(pochhammer(7.25, 0) == 1.0);
  CHECK(pochhammer(3.0, 2) == 12.0);
  CHECK(pochhammer(-2.0, 3) == 0.0);
  CHECK(pochhammer(0.5, 3) == 0.5 * 1.5 * 2.5);
}

TEST_CASE("degree zero series is 1") {
  TerminatingHypergeometric<> h{0, {3.0, 4.0}, {1.5, -7.0}, 1.0};
  CHECK(eval_terminating(h) == 1.0);
}

TEST_CASE("hahn Q_1 values") {
  // Q_1(x; a, b, N) = 3F2[-1, a+b+2, -x; a+1, -N; 1]
  auto q1 = [](double x, double a, double b, double n_big) {
    TerminatingHypergeometric<> h{1, {a + b + 2, -x}, {a + 1, -n_big}, 1.0};
    return eval_terminating(h);
  };
  CHECK(q1(0.0, 0.7, 1.3, 6.0) == 1.0);
  // 1 - x at a = b = 0, N = 2
  CHECK(q1(2.0, 0.0, 0.0, 2.0) == doctest::Approx(-1.0));
  CHECK(q1(1.0, 0.0, 0.0, 2.0) == doctest::Approx(0.0));
}

TEST_CASE("Q_n(0) = 1 for every n <= N") {
  for (std::size_t n = 0; n <= 7; ++n) {
    TerminatingHypergeometric<> h{n, {n + 0.5 + 1.5 + 1.0, -0.0}, {1.5, -7.0}, 1.0};
    CHECK(eval_terminating(h) == 1.0);
  }
}

TEST_CASE("denominator poles inside the range are rejected") {
  // (-2)_k vanishes at k = 3, so degree 3 divides by zero at the last term
  TerminatingHypergeometric<> h{4, {1.0}, {-2.0}, 0.5};
  CHECK_THROWS_AS(eval_terminating(h), DomainError);
  try {
    eval_terminating(h);
  } catch (const DomainError& e) {
    CHECK(std::string(e.what()).find("#0") != std::string::npos);
  }
  // b = -n is allowed: the series stops before the zero factor is reached
  TerminatingHypergeometric<> ok{2, {1.0}, {-2.0}, 0.5};
  CHECK_NOTHROW(eval_terminating(ok));
}

TEST_CASE("permutation invariance of the parameter lists") {
  SplitMix64 rng(20260214);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = rng.below(9);
    std::vector<double> num{rng.uniform(-3, 5), rng.uniform(-3, 5), rng.uniform(0.1, 5)};
    std::vector<double> den{rng.uniform(0.2, 4), rng.uniform(0.2, 4), rng.uniform(0.2, 4)};
    const double z = rng.uniform(-1, 1);
    const double base = eval_terminating(TerminatingHypergeometric<>{n, num, den, z});
    std::vector<double> pn = num, pd = den;
    std::sort(pn.begin(), pn.end());
    std::sort(pd.begin(), pd.end());
    do {
      std::rotate(pd.begin(), pd.begin() + 1, pd.end());
      const double v = eval_terminating(TerminatingHypergeometric<>{n, pn, pd, z});
      CHECK(std::abs(v - base) <= 1e-13 * std::max(1.0, std::abs(base)));
    } while (std::next_permutation(pn.begin(), pn.end()));
  }
}

TEST_CASE("monic forms: small cases by hand") {
  using HF = HypergeometricFamily;
  const auto legendre1 = monic_from_hypergeometric(HF::Jacobi, HypergeometricParams<>{}, 1);
  CHECK(legendre1[0] == doctest::Approx(0.0));
  CHECK(legendre1[1] == 1.0);
  const auto legendre2 = monic_from_hypergeometric(HF::Jacobi, HypergeometricParams<>{}, 2);
  CHECK(legendre2[0] == doctest::Approx(-1.0 / 3));
  CHECK(legendre2[1] == doctest::Approx(0.0));

  const auto hahn = monic_from_hypergeometric(HF::Hahn, HypergeometricParams<>{0, 0, 0, 2}, 1);
  CHECK(hahn[0] == doctest::Approx(-1.0));
  CHECK(hahn[1] == 1.0);

  const auto r0 =
      monic_from_hypergeometric(HF::Racah, HypergeometricParams<>{0.5, 1.5, 12, 8}, 0);
  REQUIRE(r0.size() == 1);
  CHECK(r0[0] == 1.0);
}

TEST_CASE("monic forms match the recurrence tables") {
  using HF = HypergeometricFamily;
  auto compare = [](const std::vector<double>& a, std::span<const double> b) {
    double scale = 0, worst = 0;
    for (double v : b) scale = std::max(scale, std::abs(v));
    for (std::size_t k = 0; k < a.size(); ++k) worst = std::max(worst, std::abs(a[k] - b[k]));
    return worst / scale;
  };
  SUBCASE("jacobi") {
    for (double a : {0.0, 0.5, 2.0}) {
      for (double b : {-0.5, 1.0, 3.0}) {
        const auto t = generate_polynomials(jacobi_coeffs(JacobiParams<>{a, b}, 8), 8);
        for (std::size_t n = 0; n <= 8; ++n) {
          const auto m = monic_from_hypergeometric(HF::Jacobi, HypergeometricParams<>{a, b}, n);
          CHECK(compare(m, t.poly(n)) < 1e-10);
        }
      }
    }
  }
  SUBCASE("hahn") {
    const HahnParams<> h{0.5, 2.0, 9.0};
    const auto t = generate_polynomials(hahn_coeffs(h, 9), 9);
    for (std::size_t n = 0; n <= 9; ++n) {
      const auto m = monic_from_hypergeometric(
          HF::Hahn, HypergeometricParams<>{h.alpha, h.beta, 0, h.n_big}, n);
      CHECK(compare(m, t.poly(n)) < 1e-10);
    }
  }
  SUBCASE("racah") {
    const RacahParams<> r{0.5, 1.5, 12.0, 8.0};
    const auto t = generate_polynomials(racah_coeffs(r, 8), 8);
    for (std::size_t n = 0; n <= 8; ++n) {
      const auto m = monic_from_hypergeometric(
          HF::Racah, HypergeometricParams<>{r.alpha, r.beta, r.delta, r.n_big}, n);
      CHECK(compare(m, t.poly(n)) < 1e-10);
    }
  }
}

TEST_CASE("degree beyond N is refused for Hahn and Racah") {
  using HF = HypergeometricFamily;
  CHECK_THROWS_AS(monic_from_hypergeometric(HF::Hahn, HypergeometricParams<>{0, 0, 0, 3}, 4),
                  DomainError);
  CHECK_THROWS_AS(
      monic_from_hypergeometric(HF::Racah, HypergeometricParams<>{0.5, 1.5, 12, 3}, 4),
      DomainError);
}

TEST_CASE("zero leading coefficient is a domain error") {
  // n + a + b + 1 = 0 kills every term beyond k = 0
  CHECK_THROWS_AS(monic_from_hypergeometric(HypergeometricFamily::Jacobi,
                                            HypergeometricParams<>{-0.5, -1.5}, 1),
                  DomainError);
}
