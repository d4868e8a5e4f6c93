#include "spin7/laurent.hpp"

#include <cctype>
#include <sstream>
#include <vector>

namespace spin7 {

namespace {

// Dense ordinary polynomial over Z, index = degree, no trailing zeros.
using Dense = std::vector<mpz_class>;

void trim(Dense& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int degree(const Dense& p) { return static_cast<int>(p.size()) - 1; }

Dense to_dense(const LaurentPoly& a) {
  Dense out;
  if (a.is_zero()) return out;
  const int base = a.min_exponent();
  out.resize(static_cast<std::size_t>(a.max_exponent() - base + 1));
  for (const auto& [e, c] : a.terms()) out[static_cast<std::size_t>(e - base)] = c;
  return out;
}

LaurentPoly from_dense(const Dense& p, int shift = 0) {
  LaurentPoly::Terms t;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] != 0) t.emplace(static_cast<int>(i) + shift, p[i]);
  }
  return LaurentPoly(std::move(t));
}

mpz_class dense_content(const Dense& p) {
  mpz_class g = 0;
  for (const auto& c : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

Dense primitive_part(Dense p) {
  trim(p);
  if (p.empty()) return p;
  mpz_class g = dense_content(p);
  if (p.back() < 0) g = -g;
  for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return p;
}

// lc(b)^k * a mod b, computed without leaving Z[x].
Dense pseudo_remainder(Dense a, const Dense& b) {
  const int db = degree(b);
  const mpz_class& lb = b.back();
  while (!a.empty() && degree(a) >= db) {
    const mpz_class la = a.back();
    const int shift = degree(a) - db;
    for (auto& c : a) c *= lb;
    for (int i = 0; i <= db; ++i) a[static_cast<std::size_t>(i + shift)] -= la * b[static_cast<std::size_t>(i)];
    trim(a);
  }
  return a;
}

// Exact long division in Z[x]; nullopt when b does not divide a.
std::optional<Dense> dense_div(Dense a, const Dense& b) {
  const int db = degree(b);
  if (degree(a) < db) {
    if (a.empty()) return Dense{};
    return std::nullopt;
  }
  Dense q(static_cast<std::size_t>(degree(a) - db + 1));
  const mpz_class& lb = b.back();
  mpz_class r;
  while (!a.empty() && degree(a) >= db) {
    if (!mpz_divisible_p(a.back().get_mpz_t(), lb.get_mpz_t())) return std::nullopt;
    mpz_divexact(r.get_mpz_t(), a.back().get_mpz_t(), lb.get_mpz_t());
    const int shift = degree(a) - db;
    q[static_cast<std::size_t>(shift)] = r;
    for (int i = 0; i <= db; ++i) a[static_cast<std::size_t>(i + shift)] -= r * b[static_cast<std::size_t>(i)];
    trim(a);
  }
  if (!a.empty()) return std::nullopt;
  return q;
}

}  // namespace

LaurentPoly::LaurentPoly(long c) {
  if (c != 0) terms_.emplace(0, c);
}

LaurentPoly::LaurentPoly(const mpz_class& c) {
  if (c != 0) terms_.emplace(0, c);
}

LaurentPoly::LaurentPoly(Terms terms) : terms_(std::move(terms)) {
  std::erase_if(terms_, [](const auto& kv) { return kv.second == 0; });
}

LaurentPoly LaurentPoly::monomial(int exponent, const mpz_class& coeff) {
  LaurentPoly p;
  if (coeff != 0) p.terms_.emplace(exponent, coeff);
  return p;
}

bool LaurentPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

bool LaurentPoly::is_unit() const {
  return terms_.size() == 1 && abs(terms_.begin()->second) == 1;
}

mpz_class LaurentPoly::coeff(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? mpz_class(0) : it->second;
}

mpz_class LaurentPoly::content() const {
  mpz_class g = 0;
  for (const auto& [e, c] : terms_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

LaurentPoly LaurentPoly::shifted(int by) const {
  if (by == 0) return *this;
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), e + by, c);
  return out;
}

LaurentPoly LaurentPoly::mirror() const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(-e, c);
  return out;
}

mpq_class LaurentPoly::eval(const mpq_class& w) const {
  if (w == 0) throw std::domain_error("LaurentPoly::eval at W = 0");
  mpq_class sum = 0;
  for (const auto& [e, c] : terms_) {
    mpq_class p = 1;
    mpq_class base = e >= 0 ? w : mpq_class(1 / w);
    for (int i = 0; i < (e >= 0 ? e : -e); ++i) p *= base;
    sum += c * p;
  }
  return sum;
}

void LaurentPoly::add_term(int exponent, const mpz_class& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  *this = *this * o;
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const mpz_class& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& [e, v] : terms_) v *= c;
  }
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.size() == 1) {
    LaurentPoly out = b.shifted(a.min_exponent());
    return out *= a.trailing_coeff();
  }
  if (b.size() == 1) {
    LaurentPoly out = a.shifted(b.min_exponent());
    return out *= b.trailing_coeff();
  }
  // Dense accumulation is much faster than repeated map insertion.
  const int lo = a.min_exponent() + b.min_exponent();
  const int hi = a.max_exponent() + b.max_exponent();
  Dense acc(static_cast<std::size_t>(hi - lo + 1));
  for (const auto& [ea, ca] : a.terms()) {
    for (const auto& [eb, cb] : b.terms()) {
      mpz_addmul(acc[static_cast<std::size_t>(ea + eb - lo)].get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    }
  }
  return from_dense(acc, lo);
}

LaurentPoly operator-(const LaurentPoly& a) {
  LaurentPoly out = a;
  return out *= mpz_class(-1);
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const bool neg = c < 0;
    const mpz_class mag = abs(c);
    if (first) {
      if (neg) os << '-';
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << mag.get_str();
    } else {
      if (mag != 1) os << mag.get_str() << '*';
      os << "W^" << e;
    }
  }
  return os.str();
}

LaurentPoly LaurentPoly::parse(std::string_view text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  }
  if (s.empty()) throw std::invalid_argument("empty polynomial text");
  LaurentPoly out;
  std::size_t i = 0;
  auto read_int = [&](std::string& digits) {
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) digits.push_back(s[i++]);
  };
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (i != 0) {
      throw std::invalid_argument("expected '+' or '-' in polynomial text: " + s);
    }
    std::string digits;
    read_int(digits);
    mpz_class c = digits.empty() ? mpz_class(1) : mpz_class(digits);
    int exponent = 0;
    if (i < s.size() && s[i] == '*') {
      if (digits.empty()) throw std::invalid_argument("dangling '*' in polynomial text: " + s);
      ++i;
      if (i >= s.size() || s[i] != 'W') throw std::invalid_argument("expected 'W' after '*': " + s);
    } else if (digits.empty() && (i >= s.size() || s[i] != 'W')) {
      throw std::invalid_argument("malformed term in polynomial text: " + s);
    }
    if (i < s.size() && s[i] == 'W') {
      ++i;
      exponent = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        int esign = 1;
        if (i < s.size() && s[i] == '-') {
          esign = -1;
          ++i;
        }
        std::string ed;
        read_int(ed);
        if (ed.empty()) throw std::invalid_argument("missing exponent: " + s);
        exponent = esign * std::stoi(ed);
      }
    }
    out.add_term(exponent, sign * c);
  }
  return out;
}

LaurentPoly mirror(const LaurentPoly& a) { return a.mirror(); }

LaurentPoly pow(const LaurentPoly& a, unsigned n) {
  LaurentPoly result = 1;
  LaurentPoly base = a;
  while (n != 0) {
    if (n & 1U) result *= base;
    n >>= 1U;
    if (n != 0) base *= base;
  }
  return result;
}

std::optional<LaurentPoly> try_div_exact(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
  if (a.is_zero()) return LaurentPoly{};
  if (b.size() == 1) {
    const mpz_class& c = b.trailing_coeff();
    LaurentPoly::Terms t;
    for (const auto& [e, v] : a.terms()) {
      if (!mpz_divisible_p(v.get_mpz_t(), c.get_mpz_t())) return std::nullopt;
      mpz_class r;
      mpz_divexact(r.get_mpz_t(), v.get_mpz_t(), c.get_mpz_t());
      t.emplace(e - b.min_exponent(), std::move(r));
    }
    return LaurentPoly(std::move(t));
  }
  auto q = dense_div(to_dense(a), to_dense(b));
  if (!q) return std::nullopt;
  return from_dense(*q, a.min_exponent() - b.min_exponent());
}

LaurentPoly div_exact(const LaurentPoly& a, const LaurentPoly& b) {
  auto q = try_div_exact(a, b);
  if (!q) throw NotDivisible("(" + a.to_string() + ") is not divisible by (" + b.to_string() + ")");
  return std::move(*q);
}

LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() && b.is_zero()) return {};
  if (a.is_zero()) return from_dense(primitive_part(to_dense(b))) * LaurentPoly(b.content());
  if (b.is_zero()) return from_dense(primitive_part(to_dense(a))) * LaurentPoly(a.content());

  mpz_class c;
  const mpz_class ca = a.content();
  const mpz_class cb = b.content();
  mpz_gcd(c.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());

  Dense x = primitive_part(to_dense(a));
  Dense y = primitive_part(to_dense(b));
  if (degree(x) < degree(y)) std::swap(x, y);
  while (!y.empty() && degree(y) > 0) {
    Dense r = primitive_part(pseudo_remainder(x, y));
    x = std::move(y);
    y = std::move(r);
  }
  // A nonzero constant remainder means the primitive parts are coprime.
  if (!y.empty()) x = Dense{1};
  LaurentPoly g = from_dense(primitive_part(std::move(x)));
  return g *= c;
}

}  // namespace spin7
