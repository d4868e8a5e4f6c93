#include "doctest.h"
#include "oracle.hpp"
#include "spin7/invariant.hpp"
#include "spin7/verify.hpp"

#include <random>

using namespace spin7;

namespace {

LaurentPoly framed(const BraidWord& w, bool mirror = false) {
  return evaluate_link(LinkPresentation{{{w, mirror}}, Normalization::Framed});
}

const LaurentPoly& D() {
  static const LaurentPoly d = oracle::to_lp(oracle::delta());
  return d;
}

}  // namespace

TEST_CASE("Markov weights") {
  const auto& mw = markov_weights();
  CHECK(mw.kappa == -21);
  CHECK(mw.w[0] == RatFunc(D()));
  const int dims[] = {8, 48, 112, 112};
  for (std::size_t i = 0; i < 4; ++i) {
    REQUIRE(mw.w[i].is_laurent());
    CHECK(mw.w[i].eval(1) == dims[i]);
    CHECK(mw.w[i].mirror() == mw.w[i]);
  }
  const auto cube = oracle::to_lp(oracle::mul(oracle::mul(oracle::delta(), oracle::delta()), oracle::delta()));
  CHECK(mw.w[0] * 4 + mw.w[1] * 3 + mw.w[2] * 2 + mw.w[3] == RatFunc(cube));

  int accepted = 0;
  for (const auto& c : markov_weight_candidates(generators())) accepted += c.accepted() ? 1 : 0;
  CHECK(accepted == 1);
}

TEST_CASE("quantum trace on the constraint words") {
  const int k = markov_weights().kappa;
  CHECK(quantum_trace(BraidWord(3, {})) == RatFunc(pow(D(), 3)));
  CHECK(quantum_trace(BraidWord(3, {1, -2})) == RatFunc(D()));
  CHECK(quantum_trace(BraidWord(3, {1})) == RatFunc(D() * D() * W(k)));
  CHECK(quantum_trace(BraidWord(3, {-1})) == RatFunc(D() * D() * W(-k)));
  CHECK(quantum_trace(BraidWord(3, {1, 2})) == RatFunc(D() * W(2 * k)));
  CHECK(quantum_trace(BraidWord(3, {2})) == RatFunc(D() * D() * W(k)));
  CHECK(quantum_trace(BraidWord(2, {})) == RatFunc(D() * D()));
  CHECK(quantum_trace(BraidWord(1, {})) == RatFunc(D()));
}

TEST_CASE("reference links") {
  CHECK(framed(BraidWord(1, {})) == D());
  CHECK(framed(BraidWord(2, {1, -1})) == D() * D());

  const LaurentPoly hopf = D() * hopf_factor();
  CHECK(framed(BraidWord(2, {1, 1})) == hopf);
  CHECK(framed(BraidWord(3, {1, 1})) == D() * hopf);
  CHECK(hopf.eval(1) == 64);

  const LaurentPoly trefoil = D() * trefoil_factor();
  CHECK(framed(BraidWord(2, {1, 1, 1}), true) == trefoil);
  CHECK(framed(BraidWord(2, {-1, -1, -1})) == trefoil);
  CHECK(framed(BraidWord(2, {1, 1, 1})) == mirror(trefoil));
  CHECK(trefoil.eval(1) == 8);

  const LaurentPoly fig8 = D() * figure_eight_factor();
  CHECK(framed(BraidWord(3, {1, -2, 1, -2})) == fig8);
  CHECK(fig8 == mirror(fig8));

  for (const auto& ex : known_examples()) CHECK_MESSAGE(evaluate_link(ex.presentation) == ex.expected, ex.name);
}

TEST_CASE("identification up to mirror and framing") {
  const LaurentPoly trefoil = D() * trefoil_factor();
  auto id = identify(quantum_trace(BraidWord(3, {1, 1, 1})), D() * trefoil, 3, true);
  REQUIRE(id.has_value());
  CHECK(id->mirror);
  CHECK(id->k == 0);

  id = identify(RatFunc(trefoil * W(-42)), trefoil, 3, false);
  REQUIRE(id.has_value());
  CHECK(id->k == -2);
  CHECK_FALSE(identify(RatFunc(trefoil * W(1)), trefoil, 3, true).has_value());
  CHECK_FALSE(identify(RatFunc(mirror(trefoil)), trefoil, 3, false).has_value());

  const auto m = search_closures(D() * figure_eight_factor(), 4, 0);
  REQUIRE(m.has_value());
  CHECK(m->word.length() == 4);
  CHECK(framed(m->word, m->id.mirror) == D() * figure_eight_factor());
  CHECK_FALSE(search_closures(W(5), 2, 1).has_value());
}

TEST_CASE("global-writhe normalization") {
  const int k = markov_weights().kappa;
  const BraidWord w(3, {1, 1, 1, 2});
  const LaurentPoly f = evaluate_link({{{w, false}}, Normalization::Framed});
  const LaurentPoly gw = evaluate_link({{{w, false}}, Normalization::GlobalWrithe});
  CHECK(gw == f * W(-k * 4));
  const LaurentPoly gwm = evaluate_link({{{w, true}}, Normalization::GlobalWrithe});
  CHECK(gwm == mirror(gw));
}

TEST_CASE("result JSON") {
  const LaurentPoly p = 3 * W(-2) - W(5) + 7;
  CHECK(poly_from_json(poly_to_json(p)) == p);
  const auto j = result_to_json(D(), Normalization::Framed, -21);
  CHECK(j.at("kappa") == -21);
  CHECK(j.at("normalization") == "framed");
  CHECK(j.at("value").at("-18") == "1");
  CHECK(poly_from_json(j.at("value")) == D());
  CHECK(poly_from_json(nlohmann::json::parse(R"({"3": 2, "-1": "-5"})")) == 2 * W(3) - 5 * W(-1));
  CHECK_THROWS(poly_from_json(nlohmann::json::parse(R"({"x": 1})")));
  CHECK_THROWS(poly_from_json(nlohmann::json::parse(R"({"1": "abc"})")));
  CHECK_THROWS(poly_from_json(nlohmann::json::parse("[1]")));
}

TEST_CASE("property: mirror by letter inversion equals reflection of the value") {
  std::mt19937_64 rng(909);
  for (int i = 0; i < 60; ++i) {
    const BraidWord w = random_word(rng, i % 4 == 0 ? 2 : 3, 8);
    const LaurentPoly v = framed(w);
    REQUIRE(framed(w, true) == mirror(v));
    REQUIRE(framed(w.mirrored()) == mirror(v));
  }
}

TEST_CASE("property: conjugation invariance") {
  std::mt19937_64 rng(1010);
  for (int i = 0; i < 60; ++i) {
    const BraidWord w = random_word(rng, 3, 7);
    const BraidWord u = random_word(rng, 3, 4);
    REQUIRE(framed(u * w * u.inverse()) == framed(w));
  }
}

TEST_CASE("property: Markov stabilization multiplies by the kink factor") {
  std::mt19937_64 rng(1111);
  const int k = markov_weights().kappa;
  for (int i = 0; i < 60; ++i) {
    const BraidWord w = random_word(rng, 2, 8);
    const LaurentPoly v = framed(w);
    REQUIRE(framed(BraidWord(3, w.letters()) * BraidWord(3, {2})) == v * W(k));
    REQUIRE(framed(BraidWord(3, w.letters()) * BraidWord(3, {-2})) == v * W(-k));
    const LaurentPoly n = evaluate_link({{{w, false}}, Normalization::GlobalWrithe});
    REQUIRE(evaluate_link({{{BraidWord(3, w.letters()) * BraidWord(3, {-2}), false}}, Normalization::GlobalWrithe}) == n);
  }
}

TEST_CASE("property: disjoint unions multiply; W=1 value counts components") {
  std::mt19937_64 rng(1212);
  for (int i = 0; i < 60; ++i) {
    const BraidWord a = random_word(rng, 3, 6);
    const BraidWord b = random_word(rng, i % 2 ? 2 : 3, 6);
    const LinkPresentation lp{{{a, false}, {b, i % 3 == 0}}, Normalization::Framed};
    REQUIRE(evaluate_link(lp) == framed(a) * framed(b, i % 3 == 0));
    // At W = 1 every component contributes dim s = 8.
    mpz_class expected = 1;
    for (int c = 0; c < closure_components(a).components; ++c) expected *= 8;
    REQUIRE(framed(a).eval(1) == expected);
  }
}

TEST_CASE("amphichiral closures are mirror-symmetric") {
  // (s1 s2^-1)^n is conjugate to its mirror.
  for (int n = 1; n <= 4; ++n) {
    std::vector<int> l;
    for (int j = 0; j < n; ++j) {
      l.push_back(1);
      l.push_back(-2);
    }
    const LaurentPoly v = framed(BraidWord(3, l));
    CHECK(v == mirror(v));
  }
}
