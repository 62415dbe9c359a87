#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace leeyang {

/// Ceiling applied by every precision policy. Defaults to 1 << 20 bits and
/// can be overridden through the LEEYANG_PRECISION_CAP environment variable.
std::uint32_t precision_cap();

/// A point of the circle R/Z stored as the fixed-point fraction
/// mantissa / 2^bits with 0 <= mantissa < 2^bits.
///
/// Addition and multiplication by integers are exact at the stored
/// precision, and reduction mod 1 is a mask of the low bits, so orbit
/// coordinates of toral maps never accumulate rounding error.
class HighPrecisionFraction {
 public:
  static constexpr std::uint32_t kMinBits = 64;

  explicit HighPrecisionFraction(std::uint32_t bits = kMinBits);

  /// Exact binary value of x mod 1.
  static HighPrecisionFraction from_double(double x, std::uint32_t bits = kMinBits);
  /// num/den mod 1, rounded toward zero at the requested precision.
  static HighPrecisionFraction from_rational(const mpz_class& num, const mpz_class& den,
                                             std::uint32_t bits);
  /// Evaluates a constant expression such as "1/sqrt(2)", "(sqrt(5)-1)/2",
  /// "0.25" or "2/3" with guard bits and keeps its fractional part.
  /// Supported: integers, decimals, + - * /, parentheses, sqrt(), pi.
  static HighPrecisionFraction parse(const std::string& expr, std::uint32_t bits);

  std::uint32_t bits() const noexcept { return bits_; }
  const mpz_class& mantissa() const noexcept { return mantissa_; }

  /// Same value with more fractional bits (zero padded). Lowering is refused.
  HighPrecisionFraction with_bits(std::uint32_t bits) const;

  HighPrecisionFraction operator+(const HighPrecisionFraction& other) const;
  HighPrecisionFraction operator-(const HighPrecisionFraction& other) const;
  HighPrecisionFraction operator*(const mpz_class& k) const;
  HighPrecisionFraction operator*(long k) const { return *this * mpz_class(k); }

  /// Rounded to nearest double.
  double to_double() const;
  /// cos(2 pi value), evaluated at 192 bits and rounded once.
  double cos_2pi() const;

  friend bool operator==(const HighPrecisionFraction& a, const HighPrecisionFraction& b) {
    return a.bits_ == b.bits_ && a.mantissa_ == b.mantissa_;
  }

 private:
  HighPrecisionFraction(mpz_class mantissa, std::uint32_t bits);
  void reduce();

  mpz_class mantissa_;
  std::uint32_t bits_;
};

}  // namespace leeyang
