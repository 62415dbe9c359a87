#include "leeyang/hp_fraction.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <string>
#include <utility>

#include "leeyang/error.hpp"

namespace leeyang {

namespace {

constexpr std::uint32_t kDefaultCap = 1u << 20;
constexpr std::uint32_t kGuardBits = 64;
constexpr mpfr_prec_t kCosineBits = 192;

/// Owning wrapper around an mpfr_t.
class Real {
 public:
  explicit Real(mpfr_prec_t prec) { mpfr_init2(v_, prec); }
  ~Real() { mpfr_clear(v_); }
  Real(const Real&) = delete;
  Real& operator=(const Real&) = delete;
  Real(Real&& other) noexcept {
    mpfr_init2(v_, mpfr_get_prec(other.v_));
    mpfr_swap(v_, other.v_);
  }

  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }
  mpfr_prec_t prec() const { return mpfr_get_prec(v_); }

 private:
  mpfr_t v_;
};

/// Recursive-descent evaluator for the small constant-expression language
/// accepted by HighPrecisionFraction::parse.
class ExprParser {
 public:
  ExprParser(const std::string& text, mpfr_prec_t prec) : text_(text), prec_(prec) {}

  Real run() {
    Real value = expr();
    skip_ws();
    if (pos_ != text_.size()) error("trailing characters");
    return value;
  }

 private:
  [[noreturn]] void error(const std::string& why) const {
    fail(ErrorKind::Config, "cannot parse constant '" + text_ + "': " + why);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Real expr() {
    Real lhs = term();
    for (;;) {
      if (accept('+')) {
        Real rhs = term();
        mpfr_add(lhs.get(), lhs.get(), rhs.get(), MPFR_RNDN);
      } else if (accept('-')) {
        Real rhs = term();
        mpfr_sub(lhs.get(), lhs.get(), rhs.get(), MPFR_RNDN);
      } else {
        return lhs;
      }
    }
  }

  Real term() {
    Real lhs = unary();
    for (;;) {
      if (accept('*')) {
        Real rhs = unary();
        mpfr_mul(lhs.get(), lhs.get(), rhs.get(), MPFR_RNDN);
      } else if (accept('/')) {
        Real rhs = unary();
        if (mpfr_zero_p(rhs.get())) error("division by zero");
        mpfr_div(lhs.get(), lhs.get(), rhs.get(), MPFR_RNDN);
      } else {
        return lhs;
      }
    }
  }

  Real unary() {
    if (accept('-')) {
      Real v = unary();
      mpfr_neg(v.get(), v.get(), MPFR_RNDN);
      return v;
    }
    if (accept('+')) return unary();
    return primary();
  }

  Real primary() {
    skip_ws();
    if (accept('(')) {
      Real v = expr();
      if (!accept(')')) error("expected ')'");
      return v;
    }
    if (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      std::string name = text_.substr(start, pos_ - start);
      if (name == "pi") {
        Real v(prec_);
        mpfr_const_pi(v.get(), MPFR_RNDN);
        return v;
      }
      if (name == "sqrt") {
        if (!accept('(')) error("expected '(' after sqrt");
        Real v = expr();
        if (!accept(')')) error("expected ')'");
        if (mpfr_sgn(v.get()) < 0) error("sqrt of a negative number");
        mpfr_sqrt(v.get(), v.get(), MPFR_RNDN);
        return v;
      }
      error("unknown identifier '" + name + "'");
    }
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.' ||
            text_[pos_] == 'e' || text_[pos_] == 'E' ||
            ((text_[pos_] == '-' || text_[pos_] == '+') && pos_ > start &&
             (text_[pos_ - 1] == 'e' || text_[pos_ - 1] == 'E')))) {
      ++pos_;
    }
    if (start == pos_) error("expected a number");
    Real v(prec_);
    // Decimal literals are rounded once at the working precision.
    if (mpfr_set_str(v.get(), text_.substr(start, pos_ - start).c_str(), 10, MPFR_RNDN) != 0) {
      error("bad number");
    }
    return v;
  }

  const std::string& text_;
  mpfr_prec_t prec_;
  std::size_t pos_ = 0;
};

mpz_class fraction_mantissa(mpfr_srcptr x, std::uint32_t bits) {
  Real tmp(mpfr_get_prec(x) + bits + 2);
  mpfr_frac(tmp.get(), x, MPFR_RNDN);
  if (mpfr_sgn(tmp.get()) < 0) mpfr_add_ui(tmp.get(), tmp.get(), 1, MPFR_RNDN);
  mpfr_mul_2ui(tmp.get(), tmp.get(), bits, MPFR_RNDN);
  mpz_class m;
  mpfr_get_z(m.get_mpz_t(), tmp.get(), MPFR_RNDZ);
  mpz_fdiv_r_2exp(m.get_mpz_t(), m.get_mpz_t(), bits);
  return m;
}

void check_bits(std::uint32_t bits) {
  require(bits >= HighPrecisionFraction::kMinBits, ErrorKind::Domain,
          "precision must be at least 64 bits");
  require(bits <= precision_cap(), ErrorKind::Resource,
          "requested precision " + std::to_string(bits) + " bits exceeds cap " +
              std::to_string(precision_cap()));
}

}  // namespace

std::uint32_t precision_cap() {
  if (const char* env = std::getenv("LEEYANG_PRECISION_CAP")) {
    char* end = nullptr;
    unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v >= HighPrecisionFraction::kMinBits &&
        v <= std::numeric_limits<std::uint32_t>::max()) {
      return static_cast<std::uint32_t>(v);
    }
  }
  return kDefaultCap;
}

HighPrecisionFraction::HighPrecisionFraction(std::uint32_t bits) : mantissa_(0), bits_(bits) {
  check_bits(bits);
}

HighPrecisionFraction::HighPrecisionFraction(mpz_class mantissa, std::uint32_t bits)
    : mantissa_(std::move(mantissa)), bits_(bits) {
  reduce();
}

void HighPrecisionFraction::reduce() {
  mpz_fdiv_r_2exp(mantissa_.get_mpz_t(), mantissa_.get_mpz_t(), bits_);
}

HighPrecisionFraction HighPrecisionFraction::from_double(double x, std::uint32_t bits) {
  check_bits(bits);
  require(std::isfinite(x), ErrorKind::Domain, "non-finite coordinate");
  Real v(64);
  mpfr_set_d(v.get(), x, MPFR_RNDN);
  return HighPrecisionFraction(fraction_mantissa(v.get(), bits), bits);
}

HighPrecisionFraction HighPrecisionFraction::from_rational(const mpz_class& num,
                                                           const mpz_class& den,
                                                           std::uint32_t bits) {
  check_bits(bits);
  require(den != 0, ErrorKind::Domain, "zero denominator");
  mpz_class scaled = num;
  mpz_mul_2exp(scaled.get_mpz_t(), scaled.get_mpz_t(), bits);
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), scaled.get_mpz_t(), den.get_mpz_t());
  return HighPrecisionFraction(q, bits);
}

HighPrecisionFraction HighPrecisionFraction::parse(const std::string& expr, std::uint32_t bits) {
  check_bits(bits);
  ExprParser parser(expr, static_cast<mpfr_prec_t>(bits) + kGuardBits);
  Real v = parser.run();
  require(mpfr_number_p(v.get()), ErrorKind::Domain, "constant '" + expr + "' is not finite");
  return HighPrecisionFraction(fraction_mantissa(v.get(), bits), bits);
}

HighPrecisionFraction HighPrecisionFraction::with_bits(std::uint32_t bits) const {
  require(bits >= bits_, ErrorKind::Domain, "with_bits cannot lower precision");
  check_bits(bits);
  mpz_class m = mantissa_;
  mpz_mul_2exp(m.get_mpz_t(), m.get_mpz_t(), bits - bits_);
  return HighPrecisionFraction(m, bits);
}

HighPrecisionFraction HighPrecisionFraction::operator+(const HighPrecisionFraction& other) const {
  if (bits_ != other.bits_) {
    std::uint32_t b = std::max(bits_, other.bits_);
    return with_bits(b) + other.with_bits(b);
  }
  return HighPrecisionFraction(mantissa_ + other.mantissa_, bits_);
}

HighPrecisionFraction HighPrecisionFraction::operator-(const HighPrecisionFraction& other) const {
  if (bits_ != other.bits_) {
    std::uint32_t b = std::max(bits_, other.bits_);
    return with_bits(b) - other.with_bits(b);
  }
  return HighPrecisionFraction(mantissa_ - other.mantissa_, bits_);
}

HighPrecisionFraction HighPrecisionFraction::operator*(const mpz_class& k) const {
  return HighPrecisionFraction(mantissa_ * k, bits_);
}

double HighPrecisionFraction::to_double() const {
  Real v(bits_ + 1);
  mpfr_set_z_2exp(v.get(), mantissa_.get_mpz_t(), -static_cast<mpfr_exp_t>(bits_), MPFR_RNDN);
  return mpfr_get_d(v.get(), MPFR_RNDN);
}

double HighPrecisionFraction::cos_2pi() const {
  // The value is exact; rounding it to the cosine precision costs at most
  // 2^-192 in the argument.
  Real y(kCosineBits);
  mpfr_set_z_2exp(y.get(), mantissa_.get_mpz_t(), -static_cast<mpfr_exp_t>(bits_), MPFR_RNDN);
  Real two_pi(kCosineBits);
  mpfr_const_pi(two_pi.get(), MPFR_RNDN);
  mpfr_mul_2ui(two_pi.get(), two_pi.get(), 1, MPFR_RNDN);
  mpfr_mul(y.get(), y.get(), two_pi.get(), MPFR_RNDN);
  mpfr_cos(y.get(), y.get(), MPFR_RNDN);
  return mpfr_get_d(y.get(), MPFR_RNDN);
}

}  // namespace leeyang
