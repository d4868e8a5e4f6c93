#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace spin7 {

/// Raised when an exact division leaves a remainder in Z[W, W^-1].
class NotDivisible : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Sparse Laurent polynomial in W with arbitrary-precision integer
/// coefficients. Zero coefficients are never stored.
class LaurentPoly {
 public:
  using Terms = std::map<int, mpz_class>;

  LaurentPoly() = default;
  LaurentPoly(long c);  // NOLINT: integers promote to constants
  LaurentPoly(const mpz_class& c);  // NOLINT
  explicit LaurentPoly(Terms terms);

  static LaurentPoly monomial(int exponent, const mpz_class& coeff = 1);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// True for +-W^k, the units of Z[W, W^-1].
  bool is_unit() const;
  std::size_t size() const { return terms_.size(); }

  /// Smallest / largest exponent. Undefined on zero.
  int min_exponent() const { return terms_.begin()->first; }
  int max_exponent() const { return terms_.rbegin()->first; }
  const mpz_class& leading_coeff() const { return terms_.rbegin()->second; }
  const mpz_class& trailing_coeff() const { return terms_.begin()->second; }

  mpz_class coeff(int exponent) const;
  /// gcd of all coefficients (non-negative; 0 for the zero polynomial).
  mpz_class content() const;

  LaurentPoly shifted(int by) const;
  LaurentPoly mirror() const;
  mpq_class eval(const mpq_class& w) const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  LaurentPoly& operator*=(const mpz_class& c);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(const LaurentPoly& a);

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

  /// Canonical text: ascending exponents, e.g. `-2*W^-1 + 1 + 3*W^4`.
  std::string to_string() const;
  static LaurentPoly parse(std::string_view text);

 private:
  void add_term(int exponent, const mpz_class& c);

  Terms terms_;
};

/// Shorthand for the monomial W^k.
inline LaurentPoly W(int k) { return LaurentPoly::monomial(k); }

LaurentPoly mirror(const LaurentPoly& a);
LaurentPoly pow(const LaurentPoly& a, unsigned n);

/// q with a = q * b, or throws NotDivisible. Throws std::domain_error on b = 0.
LaurentPoly div_exact(const LaurentPoly& a, const LaurentPoly& b);

/// q with a = q * b, or nullopt when b does not divide a.
std::optional<LaurentPoly> try_div_exact(const LaurentPoly& a, const LaurentPoly& b);

/// Greatest common divisor in Z[W, W^-1], normalized to minimal exponent 0
/// and positive leading coefficient. gcd(0, 0) = 0.
LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b);

}  // namespace spin7
