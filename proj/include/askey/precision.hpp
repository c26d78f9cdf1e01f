#pragma once

// Scalar types and working-precision control.
//
// Every numerical routine in the library is a template over its scalar type.
// `double` is the default; `mp_real` is an MPFR-backed type whose precision is
// chosen at run time, so cancellation-prone computations can be repeated at
// extended precision without recompiling.

#include <boost/math/special_functions/fpclassify.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <charconv>
#include <cmath>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>

namespace askey {

using mp_real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                              boost::multiprecision::et_off>;

inline constexpr int kBinary64Bits = 53;

/// Working precision in bits. 53 selects binary64.
struct Precision {
  int bits = kBinary64Bits;

  constexpr bool is_binary64() const noexcept { return bits == kBinary64Bits; }
};

inline Precision checked_precision(int bits) {
  if (bits < kBinary64Bits) {
    throw std::domain_error("precision_bits must be >= 53, got " +
                            std::to_string(bits));
  }
  return Precision{bits};
}

/// Sets the default MPFR precision for the lifetime of the object.
class ScopedPrecision {
 public:
  explicit ScopedPrecision(int bits) : saved_(mp_real::default_precision()) {
    mp_real::default_precision(digits10_for_bits(bits));
  }
  ~ScopedPrecision() { mp_real::default_precision(saved_); }

  ScopedPrecision(const ScopedPrecision&) = delete;
  ScopedPrecision& operator=(const ScopedPrecision&) = delete;

  static unsigned digits10_for_bits(int bits) {
    // ceil(bits * log10(2)), plus one guard digit
    return static_cast<unsigned>(std::ceil(bits * 0.30102999566398120)) + 1;
  }

 private:
  unsigned saved_;
};

/// Calls `f.template operator()<Real>()` with Real = double for 53 bits and
/// Real = mp_real (at the requested precision) otherwise.
template <class F>
decltype(auto) with_precision(Precision p, F&& f) {
  if (p.is_binary64()) {
    return std::forward<F>(f).template operator()<double>();
  }
  ScopedPrecision scope(p.bits);
  return std::forward<F>(f).template operator()<mp_real>();
}

template <class Real>
bool is_finite(const Real& x) {
  return (boost::math::isfinite)(x);
}

template <class Real>
double to_double(const Real& x) {
  if constexpr (std::is_same_v<Real, double>) {
    return x;
  } else {
    return x.template convert_to<double>();
  }
}

/// Shortest round-trip decimal form of a binary64 value.
inline std::string number_string(double x) {
  char buf[32];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
  if (ec != std::errc{}) return "nan";
  return std::string(buf, end);
}

template <class Real>
std::string number_string(const Real& x) {
  return number_string(to_double(x));
}

}  // namespace askey
