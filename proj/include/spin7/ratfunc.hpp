#pragma once

#include "spin7/laurent.hpp"

#include <optional>
#include <stdexcept>
#include <string>

namespace spin7 {

class ZeroDenominator : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Element of Q(W) stored as a reduced quotient of two Laurent polynomials.
///
/// Canonical form: gcd(num, den) is a unit, den has minimal exponent 0 and a
/// positive leading coefficient. Two equal fractions are structurally equal.
class RatFunc {
 public:
  RatFunc() : den_(1) {}
  RatFunc(long c) : num_(c), den_(1) {}  // NOLINT
  RatFunc(LaurentPoly p) : num_(std::move(p)), den_(1) {}  // NOLINT
  RatFunc(LaurentPoly num, LaurentPoly den);

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  /// True iff the value lies in Z[W, W^-1].
  bool is_laurent() const { return den_ == LaurentPoly(1); }
  /// The Laurent polynomial value, or nullopt if a denominator remains.
  std::optional<LaurentPoly> as_laurent() const;

  RatFunc mirror() const;
  RatFunc inverse() const;
  mpq_class eval(const mpq_class& w) const;

  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o);

  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
  friend RatFunc operator-(const RatFunc& a);

  friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

  /// `num` alone when den = 1, otherwise `(num)/(den)`.
  std::string to_string() const;

 private:
  struct Raw {};
  RatFunc(Raw, LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {}
  void fix_units();
  void reduce();

  LaurentPoly num_;
  LaurentPoly den_;
};

/// Canonical reduced fraction num/den. Throws ZeroDenominator on den = 0.
RatFunc normalize(const LaurentPoly& num, const LaurentPoly& den);

RatFunc mirror(const RatFunc& a);

}  // namespace spin7
