#pragma once

#include "spin7/laurent.hpp"

#include <gmpxx.h>

#include <limits>
#include <string>
#include <vector>

namespace spin7 {

/// Truncated power series in alpha with exact rational coefficients.
///
/// A series of order N carries coefficients of alpha^0..alpha^N and is
/// unknown beyond. Exact polynomials (constants, alpha-linear matrix entries)
/// use `kExact` as their order; mixing orders keeps the smaller one.
class AlphaSeries {
 public:
  static constexpr int kExact = std::numeric_limits<int>::max();

  AlphaSeries() = default;
  AlphaSeries(long c);  // NOLINT
  AlphaSeries(const mpq_class& c);  // NOLINT
  AlphaSeries(std::vector<mpq_class> coeffs, int order);

  /// The exact series c * alpha.
  static AlphaSeries alpha(const mpq_class& c = 1);

  int order() const { return order_; }
  bool is_exact() const { return order_ == kExact; }
  /// Coefficient of alpha^n (zero past the stored terms; n must be <= order).
  mpq_class coeff(int n) const;
  const std::vector<mpq_class>& coeffs() const { return coeffs_; }

  AlphaSeries truncated(int order) const;

  AlphaSeries& operator+=(const AlphaSeries& o);
  AlphaSeries& operator-=(const AlphaSeries& o);
  AlphaSeries& operator*=(const AlphaSeries& o);
  AlphaSeries& operator*=(const mpq_class& c);

  friend AlphaSeries operator+(AlphaSeries a, const AlphaSeries& b) { return a += b; }
  friend AlphaSeries operator-(AlphaSeries a, const AlphaSeries& b) { return a -= b; }
  friend AlphaSeries operator*(AlphaSeries a, const AlphaSeries& b) { return a *= b; }
  friend AlphaSeries operator-(const AlphaSeries& a);

  /// Equal on every coefficient up to the smaller of the two orders.
  friend bool operator==(const AlphaSeries& a, const AlphaSeries& b);

  std::string to_string() const;

 private:
  void trim();

  std::vector<mpq_class> coeffs_;
  int order_ = kExact;
};

/// Substitutes W = exp(-alpha/2) and expands to the given order:
/// W^k -> sum_{n <= order} (-k/2)^n alpha^n / n!.
AlphaSeries to_alpha_series(const LaurentPoly& a, int order);

}  // namespace spin7
