#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace jc {

enum class Domain { rational, gaussian };

/// Exact element of Q(i): a pair of GMP rationals kept in lowest terms.
/// A value with zero imaginary part is a plain rational and compares equal
/// to it; the domain tag is derived, not stored.
class Coefficient {
 public:
  Coefficient() = default;
  Coefficient(long value) : re_(value) {}  // NOLINT(google-explicit-constructor)
  Coefficient(mpq_class re) : re_(std::move(re)) { re_.canonicalize(); }  // NOLINT
  Coefficient(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }

  static Coefficient imaginary_unit() { return Coefficient(mpq_class(0), mpq_class(1)); }
  static Coefficient fraction(long num, long den);

  /// Parses "p", "-p" or "p/q" into a canonical rational.
  static Coefficient parse_rational(std::string_view text);

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  Domain domain() const { return sgn(im_) == 0 ? Domain::rational : Domain::gaussian; }
  bool is_real() const { return sgn(im_) == 0; }
  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_one() const { return sgn(im_) == 0 && re_ == 1; }

  Coefficient conj() const { return Coefficient(re_, -im_); }
  /// |c|^2 as a rational.
  mpq_class norm2() const { return re_ * re_ + im_ * im_; }
  Coefficient real_part() const { return Coefficient(re_); }
  Coefficient imag_part() const { return Coefficient(im_); }

  double to_double() const;  // real part; callers check is_real()

  Coefficient& operator+=(const Coefficient& o);
  Coefficient& operator-=(const Coefficient& o);
  Coefficient& operator*=(const Coefficient& o);
  Coefficient& operator/=(const Coefficient& o);

  friend Coefficient operator+(Coefficient a, const Coefficient& b) { return a += b; }
  friend Coefficient operator-(Coefficient a, const Coefficient& b) { return a -= b; }
  friend Coefficient operator*(Coefficient a, const Coefficient& b) { return a *= b; }
  friend Coefficient operator/(Coefficient a, const Coefficient& b) { return a /= b; }
  Coefficient operator-() const { return Coefficient(-re_, -im_); }

  friend bool operator==(const Coefficient& a, const Coefficient& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  /// Integer power, exponent >= 0.
  Coefficient pow(unsigned exponent) const;

  /// Plain-text form accepted back by the expression parser: "3/2", "-i",
  /// "(1/2 + 3*i)".
  std::string to_string() const;

 private:
  mpq_class re_{0};
  mpq_class im_{0};
};

}  // namespace jc
