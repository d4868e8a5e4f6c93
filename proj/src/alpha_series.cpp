#include "spin7/alpha_series.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace spin7 {

AlphaSeries::AlphaSeries(long c) : AlphaSeries(mpq_class(c)) {}

AlphaSeries::AlphaSeries(const mpq_class& c) {
  if (c != 0) coeffs_.push_back(c);
}

AlphaSeries::AlphaSeries(std::vector<mpq_class> coeffs, int order) : coeffs_(std::move(coeffs)), order_(order) {
  if (order < 0) throw std::invalid_argument("AlphaSeries order must be non-negative");
  trim();
}

AlphaSeries AlphaSeries::alpha(const mpq_class& c) { return AlphaSeries({0, c}, kExact); }

void AlphaSeries::trim() {
  if (order_ != kExact && coeffs_.size() > static_cast<std::size_t>(order_) + 1) {
    coeffs_.resize(static_cast<std::size_t>(order_) + 1);
  }
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

mpq_class AlphaSeries::coeff(int n) const {
  if (n < 0 || n > order_) throw std::out_of_range("coefficient beyond truncation order");
  return static_cast<std::size_t>(n) < coeffs_.size() ? coeffs_[static_cast<std::size_t>(n)] : mpq_class(0);
}

AlphaSeries AlphaSeries::truncated(int order) const {
  return AlphaSeries(coeffs_, std::min(order, order_));
}

AlphaSeries& AlphaSeries::operator+=(const AlphaSeries& o) {
  order_ = std::min(order_, o.order_);
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

AlphaSeries& AlphaSeries::operator-=(const AlphaSeries& o) { return *this += -o; }

AlphaSeries& AlphaSeries::operator*=(const AlphaSeries& o) {
  const int order = std::min(order_, o.order_);
  std::vector<mpq_class> out;
  if (!coeffs_.empty() && !o.coeffs_.empty()) {
    std::size_t n = coeffs_.size() + o.coeffs_.size() - 1;
    if (order != kExact) n = std::min(n, static_cast<std::size_t>(order) + 1);
    out.resize(n);
    for (std::size_t i = 0; i < coeffs_.size() && i < n; ++i) {
      if (coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < o.coeffs_.size() && i + j < n; ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
    }
  }
  coeffs_ = std::move(out);
  order_ = order;
  trim();
  return *this;
}

AlphaSeries& AlphaSeries::operator*=(const mpq_class& c) {
  for (auto& v : coeffs_) v *= c;
  trim();
  return *this;
}

AlphaSeries operator-(const AlphaSeries& a) {
  AlphaSeries out = a;
  for (auto& v : out.coeffs_) v = -v;
  return out;
}

bool operator==(const AlphaSeries& a, const AlphaSeries& b) {
  const int order = std::min(a.order_, b.order_);
  const std::size_t n = std::max(a.coeffs_.size(), b.coeffs_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (order != AlphaSeries::kExact && i > static_cast<std::size_t>(order)) break;
    const mpq_class x = i < a.coeffs_.size() ? a.coeffs_[i] : mpq_class(0);
    const mpq_class y = i < b.coeffs_.size() ? b.coeffs_[i] : mpq_class(0);
    if (x != y) return false;
  }
  return true;
}

std::string AlphaSeries::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << coeffs_[i].get_str();
    if (i == 1) os << "*a";
    if (i > 1) os << "*a^" << i;
  }
  if (first) os << '0';
  if (order_ != kExact) os << " + O(a^" << order_ + 1 << ')';
  return os.str();
}

AlphaSeries to_alpha_series(const LaurentPoly& a, int order) {
  if (order < 0) throw std::invalid_argument("series order must be non-negative");
  std::vector<mpq_class> out(static_cast<std::size_t>(order) + 1);
  for (const auto& [k, c] : a.terms()) {
    mpq_class rate(mpz_class(-k), mpz_class(2));
    rate.canonicalize();
    mpq_class term = c;  // c * rate^n / n!
    for (int n = 0; n <= order; ++n) {
      if (n > 0) {
        term *= rate;
        term /= n;
      }
      out[static_cast<std::size_t>(n)] += term;
    }
  }
  return AlphaSeries(std::move(out), order);
}

}  // namespace spin7
