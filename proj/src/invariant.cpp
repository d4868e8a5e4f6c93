#include "spin7/invariant.hpp"

#include <cstdlib>

namespace spin7 {

namespace {

constexpr int kFramingUnit = 21;

void check(std::vector<IdentityCheck>& out, std::string name, bool ok) { out.push_back({std::move(name), ok}); }

RatFunc weighted_trace(const BlockMatrix& m, const std::array<RatFunc, 4>& w) {
  const auto t = m.block_traces();
  RatFunc sum;
  for (std::size_t i = 0; i < 4; ++i) sum += w[i] * t[i];
  return sum;
}

bool mirror_invariant_laurent(const RatFunc& x) {
  auto p = x.as_laurent();
  return p && *p == p->mirror();
}

// Checks a candidate's weights against the invariants and the example table.
std::vector<IdentityCheck> check_candidate(const GeneratorSet& g, const std::array<RatFunc, 4>& w, int kappa) {
  std::vector<IdentityCheck> out;
  const LaurentPoly& D = g.Delta;

  bool laurent = true;
  for (const auto& x : w) laurent = laurent && x.is_laurent();
  check(out, "weights are Laurent polynomials", laurent);

  bool mirror_ok = true;
  for (const auto& x : w) mirror_ok = mirror_ok && mirror_invariant_laurent(x);
  check(out, "weights are mirror-invariant", mirror_ok);

  check(out, "w4 = Delta", w[0] == RatFunc(D));

  bool dims_ok = true;
  const std::array<int, 4> dims{8, 48, 112, 112};
  try {
    for (std::size_t i = 0; i < 4; ++i) dims_ok = dims_ok && w[i].eval(1) == dims[i];
  } catch (const ZeroDenominator&) {
    dims_ok = false;
  }
  check(out, "weights at W=1 are (8, 48, 112, 112)", dims_ok);

  RatFunc total;
  for (std::size_t i = 0; i < 4; ++i) total += w[i] * RatFunc(static_cast<long>(BlockMatrix::kSizes[i]));
  check(out, "4 w4 + 3 w3 + 2 w2 + w1 = Delta^3", total == RatFunc(pow(D, 3)));

  const MarkovWeights mw{w, kappa};
  check(out, "closure(s1 s2^-1) = Delta", quantum_trace(BraidWord(3, {1, -2}), g, mw) == RatFunc(D));

  for (const auto& ex : known_examples()) {
    const auto& c = ex.presentation.components.front();
    const BraidWord word = c.mirror ? c.braid.mirrored() : c.braid;
    const RatFunc v = quantum_trace(word, g, mw);
    check(out, "example " + ex.name + " reproduced", identify(v, ex.expected, 3, false).has_value());
  }
  return out;
}

}  // namespace

bool WeightCandidate::accepted() const {
  if (!weights) return false;
  for (const auto& c : checks) {
    if (!c.passed) return false;
  }
  return true;
}

std::vector<WeightCandidate> markov_weight_candidates(const GeneratorSet& g) {
  const LaurentPoly& D = g.Delta;
  const std::array<BlockMatrix, 4> constraints{BlockMatrix::identity(), g.R12, g.R12inv, g.R12 * g.R23};

  Matrix<RatFunc> traces(4);
  for (std::size_t r = 0; r < 4; ++r) {
    const auto t = constraints[r].block_traces();
    for (std::size_t c = 0; c < 4; ++c) traces(r, c) = t[c];
  }

  std::vector<WeightCandidate> out;
  for (int kappa : {kFramingUnit, -kFramingUnit}) {
    WeightCandidate cand;
    cand.kappa = kappa;
    const std::vector<RatFunc> rhs{pow(D, 3), pow(D, 2) * W(kappa), pow(D, 2) * W(-kappa), D * W(2 * kappa)};
    try {
      const auto x = solve(traces, rhs);
      cand.weights = std::array<RatFunc, 4>{x[0], x[1], x[2], x[3]};
      cand.checks = check_candidate(g, *cand.weights, kappa);
    } catch (const Singular&) {
      cand.checks.push_back({"trace system is nonsingular", false});
    }
    out.push_back(std::move(cand));
  }
  return out;
}

MarkovWeights derive_markov_weights(const GeneratorSet& g) {
  std::optional<MarkovWeights> found;
  int accepted = 0;
  for (const auto& cand : markov_weight_candidates(g)) {
    if (!cand.accepted()) continue;
    ++accepted;
    found = MarkovWeights{*cand.weights, cand.kappa};
  }
  if (accepted != 1) {
    throw NoConsistentSolution(accepted == 0 ? "no kink exponent yields consistent Markov weights"
                                             : "both kink exponents yield consistent Markov weights");
  }
  return *found;
}

const MarkovWeights& markov_weights() {
  static const MarkovWeights mw = derive_markov_weights(generators());
  return mw;
}

BlockMatrix braid_image(const BraidWord& w, const GeneratorSet& g) {
  BlockMatrix m = BlockMatrix::identity();
  for (int l : w.letters()) {
    switch (l) {
      case 1: m = m * g.R12; break;
      case -1: m = m * g.R12inv; break;
      case 2: m = m * g.R23; break;
      case -2: m = m * g.R23inv; break;
      default: throw GeneratorOutOfRange("letter " + std::to_string(l) + " outside B3");
    }
  }
  return m;
}

RatFunc quantum_trace(const BraidWord& w, const GeneratorSet& g, const MarkovWeights& mw) {
  RatFunc v = weighted_trace(braid_image(w, g), mw.w);
  const int idle = BraidWord::kMaxStrands - w.strands();
  if (idle > 0) v /= RatFunc(pow(g.Delta, static_cast<unsigned>(idle)));
  return v;
}

RatFunc quantum_trace(const BraidWord& w) { return quantum_trace(w, generators(), markov_weights()); }

LaurentPoly evaluate_closure(const BraidWord& w, bool mirror, Normalization n, const GeneratorSet& g,
                             const MarkovWeights& mw) {
  const BraidWord word = mirror ? w.mirrored() : w;
  RatFunc v = quantum_trace(word, g, mw);
  if (n == Normalization::GlobalWrithe) v *= RatFunc(W(-mw.kappa * exponent_sum(word)));
  auto p = v.as_laurent();
  if (!p) {
    throw IntegralityFailure("closure of '" + word.to_string() + "' does not reduce to Z[W, W^-1]: " + v.to_string());
  }
  return std::move(*p);
}

LaurentPoly evaluate_link(const LinkPresentation& lp, const GeneratorSet& g, const MarkovWeights& mw) {
  LaurentPoly value = 1;
  for (const auto& c : lp.components) value *= evaluate_closure(c.braid, c.mirror, lp.normalization, g, mw);
  return value;
}

LaurentPoly evaluate_link(const LinkPresentation& lp) { return evaluate_link(lp, generators(), markov_weights()); }

nlohmann::json poly_to_json(const LaurentPoly& p) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [e, c] : p.terms()) j[std::to_string(e)] = c.get_str();
  return j;
}

LaurentPoly poly_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw std::invalid_argument("polynomial JSON must be an object");
  LaurentPoly::Terms t;
  for (const auto& [key, val] : j.items()) {
    std::size_t used = 0;
    const int e = std::stoi(key, &used);
    if (used != key.size()) throw std::invalid_argument("bad exponent key '" + key + "'");
    mpz_class c;
    if (val.is_string()) {
      if (c.set_str(val.get<std::string>(), 10) != 0) throw std::invalid_argument("bad coefficient for W^" + key);
    } else if (val.is_number_integer()) {
      c = val.get<long>();
    } else {
      throw std::invalid_argument("bad coefficient for W^" + key);
    }
    t[e] += c;
  }
  return LaurentPoly(std::move(t));
}

nlohmann::json result_to_json(const LaurentPoly& value, Normalization n, int kappa) {
  return {{"value", poly_to_json(value)}, {"normalization", to_string(n)}, {"kappa", kappa}};
}

LaurentPoly hopf_factor() { return W(-24) * (1 + W(24)) * (1 + W(16)) * (1 + W(8)); }

LaurentPoly trefoil_factor() {
  return LaurentPoly::parse(
      "W^27 + W^19 - W^15 + W^11 - W^7 + 2*W^3 - 2*W^-1 + 2*W^-5"
      " - 2*W^-9 + 2*W^-13 - 2*W^-17 + 2*W^-21 - 2*W^-25 + W^-29 - 2*W^-33 + W^-37"
      " - W^-41 + W^-45");
}

LaurentPoly figure_eight_factor() {
  return LaurentPoly::parse(
      "W^48 - W^44 + 2*W^40 - 3*W^36 + 3*W^32 - 4*W^28 + 6*W^24"
      " - 6*W^20 + 7*W^16 - 8*W^12 + 8*W^8 - 9*W^4 + 9 - 9*W^-4 + 8*W^-8 - 8*W^-12 + 7*W^-16"
      " - 6*W^-20 + 6*W^-24 - 4*W^-28 + 3*W^-32 - 3*W^-36 + 2*W^-40 - W^-44 + W^-48");
}

std::vector<KnownExample> known_examples() {
  const LaurentPoly D = delta();
  auto single = [](BraidWord w, bool mirror) {
    return LinkPresentation{{LinkComponent{std::move(w), mirror}}, Normalization::Framed};
  };
  return {
      {"unknot", single(BraidWord(1, {}), false), D},
      {"hopf", single(BraidWord(2, {1, 1}), false), D * hopf_factor()},
      {"trefoil", single(BraidWord(2, {1, 1, 1}), true), D * trefoil_factor()},
      {"figure-eight", single(BraidWord(3, {1, -2, 1, -2}), false), D * figure_eight_factor()},
  };
}

std::optional<Identification> identify(const RatFunc& computed, const LaurentPoly& expected, int max_k,
                                       bool allow_mirror) {
  for (int m = 0; m < (allow_mirror ? 2 : 1); ++m) {
    const LaurentPoly base = m ? expected.mirror() : expected;
    for (int a = 0; a <= max_k; ++a) {
      for (int k : {a, -a}) {
        if (computed == RatFunc(base * W(kFramingUnit * k))) return Identification{m == 1, k};
        if (a == 0) break;
      }
    }
  }
  return std::nullopt;
}

std::optional<WordMatch> search_closures(const LaurentPoly& expected, int max_length, int max_k) {
  static constexpr std::array<int, 4> kLetters{1, -1, 2, -2};
  const auto& g = generators();
  const auto& mw = markov_weights();
  for (int len = 0; len <= max_length; ++len) {
    std::vector<int> idx(static_cast<std::size_t>(len), 0);
    while (true) {
      std::vector<int> letters;
      bool reduced = true;
      for (std::size_t i = 0; i < idx.size(); ++i) {
        letters.push_back(kLetters[static_cast<std::size_t>(idx[i])]);
        if (i > 0 && letters[i] == -letters[i - 1]) reduced = false;
      }
      if (reduced) {
        BraidWord w(3, letters);
        if (auto id = identify(quantum_trace(w, g, mw), expected, max_k, true)) return WordMatch{w, *id};
      }
      std::size_t pos = 0;
      while (pos < idx.size() && ++idx[pos] == 4) idx[pos++] = 0;
      if (pos == idx.size()) break;
    }
  }
  return std::nullopt;
}

}  // namespace spin7
