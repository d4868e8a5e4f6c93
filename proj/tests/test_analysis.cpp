#include "doctest.h"
#include "oracle.hpp"
#include "spin7/analysis.hpp"

using namespace spin7;

TEST_CASE("skein coefficients") {
  const auto& g = generators();
  const auto c = derive_skein_coefficients(g);
  CHECK(c.c_crossinv == RatFunc(W(7)));
  CHECK(c.c_id == RatFunc(W(-2) * (1 + W(8) - W(12))));
  CHECK(c.c_clasp == RatFunc(W(4) * (W(24) - 1), 1 + W(4)));
  // (1 + W^4) divides W^24 - 1
  CHECK(c.c_clasp == RatFunc(W(4) * div_exact(W(24) - 1, 1 + W(4))));
  CHECK(c.c_cross == RatFunc(W(-3) - W(1) - W(9)));
  CHECK(c.c_cross * RatFunc(W(-24)) == RatFunc(-W(-15) * (1 + W(-8) - W(-12))));

  // The relation itself, recombined.
  const auto lhs = g.R12 * g.R12;
  const auto rhs = g.R12 * c.c_cross + BlockMatrix::identity() * c.c_id + g.R12inv * c.c_crossinv + g.A12 * c.c_clasp;
  CHECK(lhs == rhs);
}

TEST_CASE("mirror skein coefficients are the reflected ones") {
  const auto c = derive_skein_coefficients(generators());
  const auto m = derive_mirror_skein_coefficients(generators());
  CHECK(m.c_cross == c.c_cross.mirror());
  CHECK(m.c_id == c.c_id.mirror());
  CHECK(m.c_crossinv == c.c_crossinv.mirror());
  CHECK(m.c_clasp == c.c_clasp.mirror());
}

TEST_CASE("cubic satisfied by R23 off the size-4 block") {
  const auto c = derive_cubic_from_r23(generators());
  const auto s = derive_skein_coefficients(generators());
  CHECK(c[0] == s.c_cross);
  CHECK(c[1] == s.c_id);
  CHECK(c[2] == s.c_crossinv);
}

TEST_CASE("crossing change constants") {
  const auto k = crossing_change_constants();
  const auto d = oracle::from_pairs({{4, 1}, {0, -1}});
  CHECK(k.first == oracle::to_lp(oracle::mul(oracle::mono(-1), d)));
  CHECK(k.third == oracle::to_lp(oracle::mul(oracle::mono(-12), d)));
  CHECK(k.second ==
        oracle::to_lp(oracle::mul(oracle::mul(oracle::mono(-10), d), oracle::from_pairs({{12, 1}, {8, -1}, {0, -1}}))));
  CHECK(k.fourth.eval(1) == 0);
  CHECK(try_div_exact(k.fourth, (W(4) - 1) * (W(4) - 1)).has_value());
}

TEST_CASE("series consistency") {
  const auto& g = generators();
  const auto& ag = alpha_generators();

  // n = 1, order 0: traces of s12 equal traces of R12 at W = 1. Weighted by
  // the block dimensions (8, 48, 112, 112) they give tr(flip on s (x) s) = 8^2.
  const auto t = ag.s12.block_traces();
  const int expected[] = {0, -1, 0, 1};
  CHECK(8 * expected[0] + 48 * expected[1] + 112 * expected[2] + 112 * expected[3] == 64);
  for (std::size_t b = 0; b < 4; ++b) {
    CHECK(t[b] == AlphaSeries(expected[b]));
    CHECK(g.R12.block_traces()[b].eval(1) == expected[b]);
  }
  for (const auto& e : series_consistency_check(g, ag, 1, 0)) CHECK(e.equal);

  const auto full = series_consistency_check(g, ag, 6, 6);
  CHECK(full.size() == 24);
  for (const auto& e : full) CHECK_MESSAGE(e.equal, "n=" << e.power << " block " << e.block);

  CHECK_THROWS_AS(series_consistency_check(g, ag, 1, -1), std::invalid_argument);
}

TEST_CASE("series check detects a wrong sign convention") {
  // exp(+r12/2) s12 is the wrong rotation: its traces disagree from alpha^1 on.
  const auto& g = generators();
  AlphaGeneratorSet wrong = alpha_generators();
  wrong.r12 = wrong.r12 * AlphaSeries(-1);
  bool any_unequal = false;
  for (const auto& e : series_consistency_check(g, wrong, 3, 2)) any_unequal = any_unequal || !e.equal;
  CHECK(any_unequal);
}

TEST_CASE("exp series") {
  const auto z = AlphaBlockMatrix::zero();
  CHECK(exp_series(z, 4) == AlphaBlockMatrix::identity());
  // diag entry alpha: exp gives 1 + a + a^2/2 + a^3/6
  const auto e = exp_series(AlphaBlockMatrix::identity() * AlphaSeries::alpha(), 3);
  const auto& x = e.block(3)(0, 0);
  CHECK(x.order() == 3);
  CHECK(x.coeff(2) == mpq_class(1, 2));
  CHECK(x.coeff(3) == mpq_class(1, 6));
}

TEST_CASE("W = 1 degeneration") {
  const auto& g = generators();
  for (const auto& c : w1_degeneration_check(g)) CHECK_MESSAGE(c.passed, c.name);
  const auto r12 = eval_block_matrix(g.R12, 1);
  const auto r23 = eval_block_matrix(g.R23, 1);
  CHECK(r12 * r12 == RationalBlockMatrix::identity());
  CHECK(r23 * r23 == RationalBlockMatrix::identity());
  // Away from W = 1 the generators no longer square to the identity.
  const auto m = eval_block_matrix(g.R12, 2);
  CHECK_FALSE(m * m == RationalBlockMatrix::identity());
}
