#include "doctest.h"
#include "spin7/analysis.hpp"
#include "spin7/generators.hpp"

#include <fstream>
#include <sstream>

using namespace spin7;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  REQUIRE_MESSAGE(in, "cannot open " << path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

TEST_CASE("W-picture constants") {
  const auto& g = generators();
  CHECK(g.R12.block(3)(0, 0) == RatFunc(W(-3)));
  CHECK(g.R23.block(3)(0, 0) == RatFunc(W(-3)));
  for (std::size_t i = 1; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) CHECK(g.A12.block(0)(i, j).is_zero());
  CHECK(g.A12.block(1).is_zero());
  CHECK(g.Delta.eval(1) == 8);
  CHECK(g.phi == RatFunc(g.Delta, 8));
  for (const auto& c : check_generators(g)) CHECK_MESSAGE(c.passed, c.name);
}

TEST_CASE("alpha-picture constants") {
  const auto& ag = alpha_generators();
  const auto& b = ag.r12.block(0);
  CHECK(b(0, 0) == AlphaSeries::alpha(21));
  CHECK(b(1, 1) == AlphaSeries::alpha(1));
  CHECK(b(2, 2) == AlphaSeries::alpha(9));
  CHECK(b(3, 3) == AlphaSeries::alpha(-3));
  const auto& a = ag.a12.block(0);
  CHECK(a(0, 0) == AlphaSeries(8));
  CHECK(a(0, 1) == AlphaSeries(4));
  CHECK(a(0, 2) == AlphaSeries(4));
  CHECK(a(0, 3) == AlphaSeries(1));
  CHECK(ag.a12 * ag.a12 == ag.a12 * AlphaSeries(8));
  for (const auto& c : check_alpha_generators(ag)) CHECK_MESSAGE(c.passed, c.name);
}

TEST_CASE("tampered constants are rejected") {
  GeneratorSet g = raw_generators();
  g.R12.block(1)(0, 2) = RatFunc(-W(5));
  g.R12inv = g.R12.inverse();
  g.R23inv = g.R23.inverse();
  bool any_failed = false;
  for (const auto& c : check_generators(g)) any_failed = any_failed || !c.passed;
  CHECK(any_failed);

  AlphaGeneratorSet ag = raw_alpha_generators();
  ag.s12.block(2)(0, 1) = AlphaSeries(2);
  any_failed = false;
  for (const auto& c : check_alpha_generators(ag)) any_failed = any_failed || !c.passed;
  CHECK(any_failed);
}

TEST_CASE("representation table") {
  const RepTable t = build_rep_table();
  CHECK(t.at("Gamma(1,0,1)").dimension == 48);
  CHECK(t.at("Gamma(1,0,1)").casimir == 49);
  CHECK(t.at("s").dimension == 8);
  CHECK(t.at("s").casimir == 21);
  CHECK(t.at("v").dimension == 7);
  CHECK(t.at("l").casimir == 40);
  CHECK_THROWS(t.at("nonexistent"));
  CHECK(sym_square_casimirs(t) == std::array<int, 4>{0, 40, 24, 48});
  // Trivial summand: (2 * 21 - 0) / 2 = 21, the top entry of r12.
  CHECK((2 * t.at("s").casimir - sym_square_casimirs(t)[0]) / 2 == 21);
  CHECK(casimir_consistent(alpha_generators(), t));
}

TEST_CASE("constants rendering matches golden file and checksum") {
  const std::string dump = dump_constants();
  CHECK(dump == read_file(std::string(SPIN7_GOLDEN_DIR) + "/constants.txt"));
  CHECK(fnv1a64(dump) == 0x121da462fc6f8683ULL);
  CHECK(fnv1a64("") == 0xcbf29ce484222325ULL);
  CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cULL);
}
