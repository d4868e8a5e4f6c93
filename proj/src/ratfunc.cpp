#include "spin7/ratfunc.hpp"

namespace spin7 {

RatFunc::RatFunc(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw ZeroDenominator("rational function with zero denominator");
  reduce();
}

void RatFunc::fix_units() {
  if (num_.is_zero()) {
    den_ = 1;
    return;
  }
  const int shift = -den_.min_exponent();
  if (shift != 0) {
    num_ = num_.shifted(shift);
    den_ = den_.shifted(shift);
  }
  if (den_.leading_coeff() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

void RatFunc::reduce() {
  if (num_.is_zero()) {
    den_ = 1;
    return;
  }
  if (!den_.is_unit()) {
    LaurentPoly g = gcd(num_, den_);
    if (!g.is_unit()) {
      num_ = div_exact(num_, g);
      den_ = div_exact(den_, g);
    }
  }
  fix_units();
}

std::optional<LaurentPoly> RatFunc::as_laurent() const {
  if (!is_laurent()) return std::nullopt;
  return num_;
}

RatFunc RatFunc::mirror() const {
  return RatFunc(num_.mirror(), den_.mirror());
}

RatFunc RatFunc::inverse() const {
  if (num_.is_zero()) throw ZeroDenominator("inverse of zero");
  RatFunc out(Raw{}, den_, num_);
  out.fix_units();
  return out;
}

mpq_class RatFunc::eval(const mpq_class& w) const {
  mpq_class d = den_.eval(w);
  if (d == 0) throw ZeroDenominator("denominator vanishes at W = " + w.get_str());
  return num_.eval(w) / d;
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  if (o.num_.is_zero()) return *this;
  if (num_.is_zero()) return *this = o;
  if (is_laurent() && o.is_laurent()) {
    num_ += o.num_;
    if (num_.is_zero()) den_ = 1;
    return *this;
  }
  if (den_ == o.den_) {
    num_ += o.num_;
    reduce();
    return *this;
  }
  // A Laurent summand cannot introduce a common factor with the other
  // (already reduced) denominator.
  if (is_laurent()) {
    num_ = num_ * o.den_ + o.num_;
    den_ = o.den_;
    fix_units();
    return *this;
  }
  if (o.is_laurent()) {
    num_ += o.num_ * den_;
    fix_units();
    return *this;
  }
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ = den_ * o.den_;
  reduce();
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  if (num_.is_zero() || o.num_.is_zero()) {
    num_ = LaurentPoly{};
    den_ = 1;
    return *this;
  }
  if (is_laurent() && o.is_laurent()) {
    num_ *= o.num_;
    return *this;
  }
  // Cross-cancel: (a/b)(c/d) with g1 = gcd(a, d), g2 = gcd(c, b).
  LaurentPoly a = num_, c = o.num_;
  LaurentPoly b = den_, d = o.den_;
  if (!d.is_unit()) {
    LaurentPoly g1 = gcd(a, d);
    if (!g1.is_unit()) {
      a = div_exact(a, g1);
      d = div_exact(d, g1);
    }
  }
  if (!b.is_unit()) {
    LaurentPoly g2 = gcd(c, b);
    if (!g2.is_unit()) {
      c = div_exact(c, g2);
      b = div_exact(b, g2);
    }
  }
  num_ = a * c;
  den_ = b * d;
  fix_units();
  return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) { return *this *= o.inverse(); }

RatFunc operator-(const RatFunc& a) {
  RatFunc out = a;
  out.num_ = -out.num_;
  return out;
}

std::string RatFunc::to_string() const {
  if (is_laurent()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

RatFunc normalize(const LaurentPoly& num, const LaurentPoly& den) { return RatFunc(num, den); }

RatFunc mirror(const RatFunc& a) { return a.mirror(); }

}  // namespace spin7
