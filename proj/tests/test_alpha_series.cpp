#include "doctest.h"
#include "oracle.hpp"
#include "spin7/alpha_series.hpp"
#include "spin7/generators.hpp"

#include <random>

using namespace spin7;

TEST_CASE("substitution W = exp(-alpha/2)") {
  const AlphaSeries one = to_alpha_series(W(0), 3);
  CHECK(one.order() == 3);
  for (int n = 0; n <= 3; ++n) CHECK(one.coeff(n) == (n == 0 ? 1 : 0));

  const AlphaSeries w = to_alpha_series(W(-21), 1);
  CHECK(w.coeff(0) == 1);
  CHECK(w.coeff(1) == mpq_class(21, 2));

  CHECK(to_alpha_series(delta(), 0).coeff(0) == 8);

  // W^2 = exp(-alpha): 1 - a + a^2/2 - a^3/6.
  const AlphaSeries e = to_alpha_series(W(2), 3);
  CHECK(e.coeff(2) == mpq_class(1, 2));
  CHECK(e.coeff(3) == mpq_class(-1, 6));
}

TEST_CASE("series arithmetic and truncation") {
  const AlphaSeries a = AlphaSeries::alpha(3);
  CHECK(a.is_exact());
  CHECK((a * a).coeff(2) == 9);
  const AlphaSeries t = (1 + a).truncated(1);
  CHECK(t.order() == 1);
  CHECK((t * t).order() == 1);
  CHECK((t * t).coeff(1) == 6);
  CHECK((t + a * a).order() == 1);
  // Equality ignores terms beyond the smaller order.
  CHECK(AlphaSeries({1, 2, 5}, 2).truncated(1) == AlphaSeries({1, 2, 7}, 2));
  CHECK_FALSE(AlphaSeries({1, 2}, 1) == AlphaSeries({1, 3}, 1));
}

TEST_CASE("property: substitution is a ring homomorphism") {
  std::mt19937_64 rng(606);
  for (int i = 0; i < 100; ++i) {
    const LaurentPoly p = oracle::random_lp(rng, 10, 4, 5);
    const LaurentPoly q = oracle::random_lp(rng, 10, 4, 5);
    const int order = 4;
    REQUIRE(to_alpha_series(p * q, order) == to_alpha_series(p, order) * to_alpha_series(q, order));
    REQUIRE(to_alpha_series(p + q, order) == to_alpha_series(p, order) + to_alpha_series(q, order));
    REQUIRE(to_alpha_series(p, 0).coeff(0) == p.eval(1));
  }
}
