#include <doctest.h>

#include "askey/families.hpp"

#include <cmath>

using namespace askey;

TEST_CASE("hermite") {
  const auto h = hermite_coeffs<double>(4);
  CHECK(h.b(0) == 0.0);
  CHECK(h.b(1) == 0.0);
  CHECK(h.c(1) == 0.5);
  CHECK(h.b(4) == 0.0);
  CHECK(h.c(4) == 2.0);
}

TEST_CASE("laguerre") {
  const auto l0 = laguerre_coeffs(0.0, 3);
  CHECK(l0.b(0) == 1.0);
  CHECK(l0.b(1) == 3.0);
  CHECK(l0.c(1) == 1.0);
  CHECK(laguerre_coeffs(2.0, 3).c(2) == 8.0);
  CHECK_THROWS_AS(laguerre_coeffs(-2.0, 3), DomainError);
  CHECK_THROWS_AS(laguerre_coeffs(-1.0, 3), DomainError);
}

TEST_CASE("jacobi") {
  const auto legendre = jacobi_coeffs(JacobiParams<>{0.0, 0.0}, 5);
  CHECK(legendre.c(1) == doctest::Approx(1.0 / 3).epsilon(1e-15));
  // n^2 / (4n^2 - 1)
  CHECK(legendre.c(3) == doctest::Approx(9.0 / 35).epsilon(1e-15));
  for (std::size_t n = 0; n <= 5; ++n) CHECK(legendre.b(n) == 0.0);

  const auto sym = jacobi_coeffs(JacobiParams<>{3.5, 3.5}, 8);
  for (std::size_t n = 0; n <= 8; ++n) CHECK(sym.b(n) == 0.0);

  CHECK(jacobi_coeffs(JacobiParams<>{1.0, 0.0}, 0).b(0) == doctest::Approx(-1.0 / 3));
  CHECK_THROWS_AS(jacobi_coeffs(JacobiParams<>{-1.0, 0.0}, 2), DomainError);
  CHECK_THROWS_AS(jacobi_coeffs(JacobiParams<>{0.0, -3.0}, 2), DomainError);
}

TEST_CASE("jacobi: alpha + beta = -1 (n = 1 cancellation)") {
  // Chebyshev-like pair (-1/2, -1/2) gives C_1 = 1/2, C_n = 1/4 after
  const auto t = jacobi_coeffs(JacobiParams<>{-0.5, -0.5}, 4);
  CHECK(t.c(1) == doctest::Approx(0.5));
  CHECK(t.c(2) == doctest::Approx(0.25));
  CHECK(t.c(4) == doctest::Approx(0.25));
}

TEST_CASE("jacobi symmetry under alpha <-> beta") {
  for (double a : {-0.5, 0.0, 1.25, 4.0}) {
    for (double b : {-0.75, 0.5, 3.0}) {
      const auto x = jacobi_coeffs(JacobiParams<>{a, b}, 9);
      const auto y = jacobi_coeffs(JacobiParams<>{b, a}, 9);
      for (std::size_t n = 0; n <= 9; ++n) {
        CHECK(x.b(n) == -y.b(n));
        if (n) CHECK(x.c(n) == doctest::Approx(y.c(n)).epsilon(1e-15));
      }
    }
  }
}

TEST_CASE("racah") {
  const RacahParams<> p{1.0, 2.0, 20.0, 5.0};
  const auto r = racah_coeffs_unchecked(p, 6);
  CHECK(r.c(6) == 0.0);
  // (alpha+1)(beta+delta+1) N / (alpha+beta+2)
  CHECK(r.b(0) == doctest::Approx(2.0 * 23.0 * 5.0 / 5.0));
  CHECK_NOTHROW(racah_coeffs(p, 5));
  CHECK_THROWS_AS(racah_coeffs(p, 6), ValidityError);
  CHECK_THROWS_AS(racah_coeffs(RacahParams<>{1.0, 2.0, 20.0, -1.0}, 1), DomainError);
  try {
    // delta - alpha - n <= 0 from n = 2
    racah_coeffs(RacahParams<>{1.0, 2.0, 3.0, 8.0}, 6);
    FAIL("expected a validity error");
  } catch (const ValidityError& e) {
    CHECK(e.index() == 2);
  }
}

TEST_CASE("boundary families: low-order moments") {
  const auto hahn = hahn_coeffs(HahnParams<>{0.0, 0.0, 2.0}, 2);
  CHECK(hahn.b(0) == doctest::Approx(1.0));
  CHECK(hahn.c(1) == doctest::Approx(2.0 / 3));
  CHECK(charlier_coeffs(CharlierParams<>{2.5}, 0).b(0) == 2.5);
  CHECK(krawtchouk_coeffs(KrawtchoukParams<>{0.3, 10.0}, 0).b(0) == doctest::Approx(3.0));
  // negative binomial mean beta c / (1 - c)
  CHECK(meixner_coeffs(MeixnerParams<>{2.0, 0.25}, 0).b(0) == doctest::Approx(2.0 / 3));
}

TEST_CASE("boundary families: parameter checks") {
  CHECK_THROWS_AS(hahn_coeffs(HahnParams<>{0.0, 0.0, 3.0}, 4), ValidityError);
  CHECK_THROWS_AS(krawtchouk_coeffs(KrawtchoukParams<>{1.2, 3.0}, 2), DomainError);
  CHECK_THROWS_AS(meixner_coeffs(MeixnerParams<>{1.0, 1.0}, 2), DomainError);
  CHECK_THROWS_AS(charlier_coeffs(CharlierParams<>{0.0}, 2), DomainError);
}

TEST_CASE("family text round trip") {
  for (const char* text :
       {"hermite", "laguerre:alpha=0.5", "jacobi:alpha=2,beta=3",
        "racah:alpha=0.5,beta=1.5,delta=12,N=8", "hahn:alpha=1,beta=0,N=10",
        "meixner:beta=2,c=0.25", "krawtchouk:p=0.3,N=10", "charlier:a=1.5"}) {
    CHECK(format_family(parse_family(text)) == text);
  }
  // parameter order in the input does not matter
  CHECK(format_family(parse_family("jacobi:beta=3,alpha=2")) == "jacobi:alpha=2,beta=3");
}

TEST_CASE("family text errors") {
  CHECK_THROWS_AS(parse_family("legendre"), ParseError);
  CHECK_THROWS_AS(parse_family("jacobi:alpha=1"), ParseError);
  CHECK_THROWS_AS(parse_family("jacobi:alpha=1,beta=2,gamma=3"), ParseError);
  CHECK_THROWS_AS(parse_family("jacobi:alpha=1,alpha=2"), ParseError);
  CHECK_THROWS_AS(parse_family("laguerre:alpha=x"), ParseError);
  CHECK_THROWS_AS(parse_family("laguerre:alpha"), ParseError);
}

TEST_CASE("family dispatch and precision cast") {
  const auto f = parse_family("jacobi:alpha=2,beta=3");
  CHECK(family_tag(f) == FamilyTag::Jacobi);
  CHECK(family_name(FamilyTag::Krawtchouk) == "krawtchouk");
  ScopedPrecision prec(128);
  const auto mf = cast_family<mp_real>(f);
  const auto c = family_coeffs(mf, 4);
  const auto d = family_coeffs(f, 4);
  for (std::size_t n = 1; n <= 4; ++n) {
    CHECK(to_double(c.c(n)) == doctest::Approx(d.c(n)).epsilon(1e-15));
  }
}
