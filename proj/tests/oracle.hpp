#pragma once

// Independent dense Laurent arithmetic on int64 coefficients, used as an
// oracle against the library's sparse implementation. Shares no code with it.

#include "spin7/laurent.hpp"

#include <cstdint>
#include <map>
#include <random>
#include <vector>

namespace oracle {

struct Dense {
  int lo = 0;
  std::vector<long long> c;  // c[i] is the coefficient of W^(lo + i)
};

inline Dense mono(int k, long long v = 1) { return {k, {v}}; }

inline Dense from_pairs(std::initializer_list<std::pair<int, long long>> terms) {
  Dense out;
  if (terms.size() == 0) return out;
  int lo = terms.begin()->first, hi = lo;
  for (const auto& [k, v] : terms) {
    lo = std::min(lo, k);
    hi = std::max(hi, k);
  }
  out.lo = lo;
  out.c.assign(static_cast<std::size_t>(hi - lo + 1), 0);
  for (const auto& [k, v] : terms) out.c[static_cast<std::size_t>(k - lo)] += v;
  return out;
}

inline Dense mul(const Dense& a, const Dense& b) {
  if (a.c.empty() || b.c.empty()) return {};
  Dense out{a.lo + b.lo, std::vector<long long>(a.c.size() + b.c.size() - 1, 0)};
  for (std::size_t i = 0; i < a.c.size(); ++i)
    for (std::size_t j = 0; j < b.c.size(); ++j) out.c[i + j] += a.c[i] * b.c[j];
  return out;
}

inline Dense add(const Dense& a, const Dense& b, long long sb = 1) {
  if (a.c.empty() && b.c.empty()) return {};
  if (a.c.empty()) return add(Dense{b.lo, std::vector<long long>(b.c.size(), 0)}, b, sb);
  if (b.c.empty()) return a;
  const int lo = std::min(a.lo, b.lo);
  const int hi = std::max(a.lo + static_cast<int>(a.c.size()), b.lo + static_cast<int>(b.c.size()));
  Dense out{lo, std::vector<long long>(static_cast<std::size_t>(hi - lo), 0)};
  for (std::size_t i = 0; i < a.c.size(); ++i) out.c[static_cast<std::size_t>(a.lo - lo) + i] += a.c[i];
  for (std::size_t i = 0; i < b.c.size(); ++i) out.c[static_cast<std::size_t>(b.lo - lo) + i] += sb * b.c[i];
  return out;
}

inline Dense reflect(const Dense& a) {
  Dense out{-(a.lo + static_cast<int>(a.c.size()) - 1), std::vector<long long>(a.c.rbegin(), a.c.rend())};
  return out;
}

inline spin7::LaurentPoly to_lp(const Dense& a) {
  spin7::LaurentPoly::Terms t;
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i] != 0) t[a.lo + static_cast<int>(i)] = static_cast<long>(a.c[i]);
  }
  return spin7::LaurentPoly(t);
}

inline long long sum_coeffs(const Dense& a) {
  long long s = 0;
  for (auto x : a.c) s += x;
  return s;
}

// Random sparse Laurent polynomial with small coefficients.
inline Dense random_dense(std::mt19937_64& rng, int span = 12, int max_terms = 5, int max_coeff = 6) {
  std::uniform_int_distribution<int> nterms(0, max_terms);
  std::uniform_int_distribution<int> expo(-span, span);
  std::uniform_int_distribution<int> coef(-max_coeff, max_coeff);
  std::map<int, long long> m;
  const int n = nterms(rng);
  for (int i = 0; i < n; ++i) m[expo(rng)] += coef(rng);
  Dense out;
  if (m.empty()) return out;
  out.lo = m.begin()->first;
  out.c.assign(static_cast<std::size_t>(m.rbegin()->first - out.lo + 1), 0);
  for (const auto& [k, v] : m) out.c[static_cast<std::size_t>(k - out.lo)] = v;
  return out;
}

inline spin7::LaurentPoly random_lp(std::mt19937_64& rng, int span = 12, int max_terms = 5, int max_coeff = 6) {
  return to_lp(random_dense(rng, span, max_terms, max_coeff));
}

// Delta = W^-18 (1 + W^4)(1 + W^12)(1 + W^20), built densely.
inline Dense delta() {
  Dense p = mul(mul(from_pairs({{0, 1}, {4, 1}}), from_pairs({{0, 1}, {12, 1}})), from_pairs({{0, 1}, {20, 1}}));
  p.lo -= 18;
  return p;
}

}  // namespace oracle
