#include "jc/coefficient.hpp"

#include <stdexcept>

namespace jc {

Coefficient Coefficient::fraction(long num, long den) {
  if (den == 0) throw std::domain_error("zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return Coefficient(q);
}

Coefficient Coefficient::parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal '" + s + "'");
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
  q.canonicalize();
  return Coefficient(q);
}

double Coefficient::to_double() const { return re_.get_d(); }

Coefficient& Coefficient::operator+=(const Coefficient& o) {
  re_ += o.re_;
  if (sgn(o.im_) != 0) im_ += o.im_;
  return *this;
}

Coefficient& Coefficient::operator-=(const Coefficient& o) {
  re_ -= o.re_;
  if (sgn(o.im_) != 0) im_ -= o.im_;
  return *this;
}

Coefficient& Coefficient::operator*=(const Coefficient& o) {
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  mpq_class re = re_ * o.re_ - im_ * o.im_;
  mpq_class im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

Coefficient& Coefficient::operator/=(const Coefficient& o) {
  if (o.is_zero()) throw std::domain_error("division by zero coefficient");
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ /= o.re_;
    return *this;
  }
  mpq_class d = o.norm2();
  mpq_class re = (re_ * o.re_ + im_ * o.im_) / d;
  mpq_class im = (im_ * o.re_ - re_ * o.im_) / d;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

Coefficient Coefficient::pow(unsigned exponent) const {
  Coefficient result(1);
  Coefficient base = *this;
  while (exponent != 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent != 0) base *= base;
  }
  return result;
}

std::string Coefficient::to_string() const {
  if (sgn(im_) == 0) return re_.get_str();
  auto imag = [](const mpq_class& q) {
    if (q == 1) return std::string("i");
    if (q == -1) return std::string("-i");
    return q.get_str() + "*i";
  };
  if (sgn(re_) == 0) return imag(im_);
  std::string out = "(" + re_.get_str();
  if (sgn(im_) > 0) {
    out += " + " + imag(im_);
  } else {
    out += " - " + imag(mpq_class(-im_));
  }
  return out + ")";
}

}  // namespace jc
