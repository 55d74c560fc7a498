#include "ffd/ratfun.hpp"

#include <stdexcept>

namespace ffd {

RatFun::RatFun(const Rational& c) : num_(UniPoly::constant(c)), den_(UniPoly::constant(Rational(1))) {}

RatFun::RatFun(UniPoly num) : num_(std::move(num)), den_(UniPoly::constant(Rational(1))) {}

RatFun::RatFun(UniPoly num, UniPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
  normalize();
}

void RatFun::normalize() {
  if (num_.is_zero()) {
    den_ = UniPoly::constant(Rational(1));
    return;
  }
  if (!den_.is_constant()) {
    const UniPoly g = gcd(num_, den_);
    if (!g.is_constant()) {
      num_ = exact_div(num_, g);
      den_ = exact_div(den_, g);
    }
  }
  const Rational lead = den_.leading();
  if (lead != 1) {
    num_ *= Rational(1 / lead);
    den_ *= Rational(1 / lead);
  }
}

Rational RatFun::constant_value() const {
  if (!is_constant()) throw std::domain_error("rational function is not constant");
  return num_.coeff(0);
}

RatFun RatFun::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  return RatFun(den_, num_);
}

RatFun RatFun::operator-() const {
  RatFun out = *this;
  out.num_ = -out.num_;
  return out;
}

RatFun& RatFun::operator+=(const RatFun& rhs) {
  if (den_ == rhs.den_) {
    num_ += rhs.num_;
  } else {
    num_ = num_ * rhs.den_ + rhs.num_ * den_;
    den_ *= rhs.den_;
  }
  normalize();
  return *this;
}

RatFun& RatFun::operator-=(const RatFun& rhs) { return *this += -rhs; }

RatFun& RatFun::operator*=(const RatFun& rhs) {
  if (is_zero() || rhs.is_zero()) {
    *this = RatFun();
    return *this;
  }
  // Cross-cancel before multiplying to keep intermediate degrees small.
  const UniPoly g1 = gcd(num_, rhs.den_);
  const UniPoly g2 = gcd(rhs.num_, den_);
  num_ = exact_div(num_, g1) * exact_div(rhs.num_, g2);
  den_ = exact_div(den_, g2) * exact_div(rhs.den_, g1);
  const Rational lead = den_.leading();
  if (lead != 1) {
    num_ *= Rational(1 / lead);
    den_ *= Rational(1 / lead);
  }
  return *this;
}

RatFun& RatFun::operator/=(const RatFun& rhs) { return *this *= rhs.inverse(); }

std::string RatFun::to_string() const {
  if (den_.is_constant()) return num_.to_string();
  std::string n = num_.to_string();
  if (n.find_first_of(" -/*") != std::string::npos) n = "(" + n + ")";
  return n + "/(" + den_.to_string() + ")";
}

RatFun pow(const RatFun& base, long exponent) {
  if (exponent < 0) return pow(base.inverse(), -exponent);
  return RatFun(pow(base.num(), static_cast<unsigned>(exponent)), pow(base.den(), static_cast<unsigned>(exponent)));
}

}  // namespace ffd
