#include "spin7/generators.hpp"

#include <sstream>

namespace spin7 {

namespace {

using M = Matrix<RatFunc>;
using AM = Matrix<AlphaSeries>;

RatFunc frac(const LaurentPoly& num, const LaurentPoly& den) { return RatFunc(num, den); }

AlphaSeries a(long c) { return AlphaSeries::alpha(c); }

void check(std::vector<IdentityCheck>& out, std::string name, bool ok) { out.push_back({std::move(name), ok}); }

}  // namespace

LaurentPoly delta() { return W(-18) * (W(20) + 1) * (W(12) + 1) * (W(4) + 1); }

GeneratorSet raw_generators() {
  GeneratorSet g;

  const LaurentPoly q = 1 - W(4) + W(8);
  g.R12 = BlockMatrix(
      M{{W(21), -W(1) * q, -W(9) * q, W(-3)},
        {0, -W(1), -(1 - W(4)) * W(9), W(-3)},
        {0, 0, -W(9), W(-3)},
        {0, 0, 0, W(-3)}},
      M{{-W(1), -W(-11) * (W(20) - 1), -W(9)},
        {0, -W(9), -W(9)},
        {0, 0, W(-3)}},
      M{{-W(1), -W(1)},
        {0, W(-3)}},
      M{{W(-3)}});

  const LaurentPoly p = W(8) - W(4) + 1;
  g.R23 = BlockMatrix(
      M{{W(-3), 0, 0, 0},
        {W(9), -W(9), 0, 0},
        {W(-3), W(-3) * (W(4) - 1), -W(1), 0},
        {W(9), -W(9) * p, -W(13) * p, W(21)}},
      M{{W(-3), 0, 0},
        {W(9), -W(9), 0},
        {-W(9), W(-11) * (W(20) - 1), -W(1)}},
      M{{W(-3), 0},
        {-W(-3), -W(1)}},
      M{{W(-3)}});

  g.Delta = delta();
  const RatFunc prefactor = frac(g.Delta, (W(20) + 1) * (W(4) + 1));
  M top(4);
  top(0, 0) = (W(20) + 1) * (W(4) + 1);
  top(0, 1) = -(W(12) + 1);
  top(0, 2) = -W(4) * (W(16) + 1);
  top(0, 3) = frac(W(12), W(12) + 1);
  g.A12 = BlockMatrix(top * prefactor, M(3), M(2), M(1));

  g.phi = frac(g.Delta, 8);
  return g;
}

AlphaGeneratorSet raw_alpha_generators() {
  AlphaGeneratorSet g;
  g.r12 = AlphaBlockMatrix(
      AM{{a(21), a(10), a(8), 0},
         {0, a(1), a(-4), 0},
         {0, 0, a(9), a(6)},
         {0, 0, 0, a(-3)}},
      AM{{a(1), a(-20), a(-12)},
         {0, a(9), a(6)},
         {0, 0, a(-3)}},
      AM{{a(-3), a(-2)},
         {0, a(1)}},
      AM{{a(-3)}});
  g.s12 = AlphaBlockMatrix(
      AM{{1, 1, 1, 1},
         {0, -1, 0, -1},
         {0, 0, -1, -1},
         {0, 0, 0, 1}},
      AM{{-1, 0, 1},
         {0, -1, -1},
         {0, 0, 1}},
      AM{{1, 1},
         {0, -1}},
      AM{{1}});
  g.s23 = AlphaBlockMatrix(
      AM{{1, 0, 0, 0},
         {-1, -1, 0, 0},
         {-1, 0, -1, 0},
         {1, 1, 1, 1}},
      AM{{1, 0, 0},
         {-1, -1, 0},
         {1, 0, -1}},
      AM{{-1, 0},
         {1, 1}},
      AM{{1}});
  g.a12 = AlphaBlockMatrix(
      AM{{8, 4, 4, 1},
         {0, 0, 0, 0},
         {0, 0, 0, 0},
         {0, 0, 0, 0}},
      AM(3), AM(2), AM(1));
  return g;
}

std::array<std::vector<LaurentPoly>, 4> braid_generator_spectrum() {
  return {{{W(21), -W(1), -W(9), W(-3)}, {-W(1), -W(9), W(-3)}, {-W(1), W(-3)}, {W(-3)}}};
}

std::vector<RatFunc> poly_from_roots(const std::vector<LaurentPoly>& roots) {
  std::vector<RatFunc> p{1};
  for (const auto& r : roots) {
    // p * (x - r)
    std::vector<RatFunc> next(p.size() + 1);
    for (std::size_t i = 0; i < p.size(); ++i) {
      next[i + 1] += p[i];
      next[i] -= p[i] * RatFunc(r);
    }
    p = std::move(next);
  }
  return p;
}

std::vector<IdentityCheck> check_generators(const GeneratorSet& g) {
  std::vector<IdentityCheck> out;
  const auto I = BlockMatrix::identity();
  check(out, "R12 R23 R12 = R23 R12 R23", g.R12 * g.R23 * g.R12 == g.R23 * g.R12 * g.R23);
  check(out, "A12 R12 R23 A12 = A12", g.A12 * g.R12 * g.R23 * g.A12 == g.A12);
  check(out, "A12^2 = Delta A12", g.A12 * g.A12 == g.A12 * RatFunc(g.Delta));
  check(out, "R12 R12^-1 = I", g.R12 * g.R12inv == I && g.R12inv * g.R12 == I);
  check(out, "R23 R23^-1 = I", g.R23 * g.R23inv == I && g.R23inv * g.R23 == I);
  check(out, "phi = Delta / 8", g.phi * 8 == RatFunc(g.Delta));
  const auto spectrum = braid_generator_spectrum();
  for (std::size_t k = 0; k < 4; ++k) {
    const auto expected = poly_from_roots(spectrum[k]);
    const std::string size = std::to_string(BlockMatrix::kSizes[k]);
    check(out, "spectrum of R12 on block " + size, g.R12.charpoly(k) == expected);
    check(out, "spectrum of R23 on block " + size, g.R23.charpoly(k) == expected);
  }
  return out;
}

std::vector<IdentityCheck> check_alpha_generators(const AlphaGeneratorSet& g) {
  std::vector<IdentityCheck> out;
  const auto I = AlphaBlockMatrix::identity();
  const auto s = g.s12 * g.s23;
  check(out, "s12^2 = I", g.s12 * g.s12 == I);
  check(out, "s23^2 = I", g.s23 * g.s23 == I);
  check(out, "(s12 s23)^3 = I", s * s * s == I);
  check(out, "s12 r12 s12 = r12", g.s12 * g.r12 * g.s12 == g.r12);
  check(out, "a12^2 = 8 a12", g.a12 * g.a12 == g.a12 * AlphaSeries(8));
  check(out, "r12 a12 = 21 alpha a12", g.r12 * g.a12 == g.a12 * AlphaSeries::alpha(21));
  check(out, "a12 r12 = 21 alpha a12", g.a12 * g.r12 == g.a12 * AlphaSeries::alpha(21));
  return out;
}

namespace {

template <typename Checks>
void require_all(const Checks& checks, const char* what) {
  std::string failed;
  for (const auto& c : checks) {
    if (!c.passed) failed += (failed.empty() ? "" : "; ") + c.name;
  }
  if (!failed.empty()) throw ValidationFailed(std::string(what) + " failed validation: " + failed);
}

}  // namespace

GeneratorSet build_generators() {
  GeneratorSet g = raw_generators();
  g.R12inv = g.R12.inverse();
  g.R23inv = g.R23.inverse();
  require_all(check_generators(g), "W-picture generators");
  return g;
}

AlphaGeneratorSet build_alpha_generators() {
  AlphaGeneratorSet g = raw_alpha_generators();
  require_all(check_alpha_generators(g), "alpha-picture generators");
  return g;
}

RepTable build_rep_table() {
  return RepTable{{
      {"v", 7, 24},
      {"l", 21, 40},
      {"s", 8, 21},
      {"Gamma(0,0,2)", 35, 48},
      {"Gamma(1,0,1)", 48, 49},
      {"Gamma(0,1,1)", 112, 69},
      {"Gamma(0,0,3)", 112, 81},
  }};
}

const RepEntry& RepTable::at(const std::string& name) const {
  for (const auto& e : entries) {
    if (e.name == name) return e;
  }
  throw std::out_of_range("no representation named " + name);
}

std::array<int, 4> sym_square_casimirs(const RepTable& table) {
  return {0, table.at("l").casimir, table.at("v").casimir, table.at("Gamma(0,0,2)").casimir};
}

bool casimir_consistent(const AlphaGeneratorSet& g, const RepTable& table) {
  const int twice_s = 2 * table.at("s").casimir;
  const auto cs = sym_square_casimirs(table);
  const auto& r = g.r12.block(0);
  for (std::size_t i = 0; i < 4; ++i) {
    mpq_class half(twice_s - cs[i], 2);
    half.canonicalize();
    const AlphaSeries expected = AlphaSeries::alpha(half);
    if (!(r(i, i) == expected)) return false;
  }
  return true;
}

const GeneratorSet& generators() {
  static const GeneratorSet g = build_generators();
  return g;
}

const AlphaGeneratorSet& alpha_generators() {
  static const AlphaGeneratorSet g = build_alpha_generators();
  return g;
}

std::string dump_constants() {
  const GeneratorSet g = raw_generators();
  const AlphaGeneratorSet ag = raw_alpha_generators();
  std::ostringstream os;
  os << "Delta = " << g.Delta.to_string() << '\n';
  os << "phi = " << g.phi.to_string() << "\n\n";
  os << "R12\n" << g.R12.to_string() << '\n';
  os << "R23\n" << g.R23.to_string() << '\n';
  os << "A12\n" << g.A12.to_string() << '\n';
  os << "r12\n" << ag.r12.to_string() << '\n';
  os << "s12\n" << ag.s12.to_string() << '\n';
  os << "s23\n" << ag.s23.to_string() << '\n';
  os << "a12\n" << ag.a12.to_string() << '\n';
  os << "representation  dimension  casimir\n";
  for (const auto& e : build_rep_table().entries) {
    os << e.name << "  " << e.dimension << "  " << e.casimir << '\n';
  }
  return os.str();
}

std::uint64_t fnv1a64(std::string_view text) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace spin7
