#pragma once

#include "spin7/braid.hpp"
#include "spin7/generators.hpp"

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace spin7 {

class NoConsistentSolution : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a link value fails to reduce to Z[W, W^-1].
class IntegralityFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Quantum dimensions weighting the block traces (blocks of size 4, 3, 2, 1)
/// and the framing exponent of a positive kink.
struct MarkovWeights {
  std::array<RatFunc, 4> w;
  int kappa = 0;
};

/// Outcome of the weight solve for one kink exponent.
struct WeightCandidate {
  int kappa = 0;
  std::optional<std::array<RatFunc, 4>> weights;  // empty if the system is singular
  std::vector<IdentityCheck> checks;
  bool accepted() const;
};

/// Solves the 4x4 trace system for kappa = +21 and kappa = -21 and checks
/// each solution against the weight invariants and the known example values.
std::vector<WeightCandidate> markov_weight_candidates(const GeneratorSet& g);

/// The unique accepted candidate. Throws NoConsistentSolution otherwise.
MarkovWeights derive_markov_weights(const GeneratorSet& g);

/// Weights derived from the shared generators, computed once.
const MarkovWeights& markov_weights();

/// Image of a braid word in the three-strand representation.
BlockMatrix braid_image(const BraidWord& w, const GeneratorSet& g);

/// Blackboard-framed closure value: sum_i w_i tr_i(image). Words on fewer
/// than three strands are embedded and the idle unknots divided out.
RatFunc quantum_trace(const BraidWord& w, const GeneratorSet& g, const MarkovWeights& mw);
RatFunc quantum_trace(const BraidWord& w);

/// Value of a single closure with the given mirror flag and normalization.
LaurentPoly evaluate_closure(const BraidWord& w, bool mirror, Normalization n, const GeneratorSet& g,
                             const MarkovWeights& mw);

/// Product over components. Throws IntegralityFailure if a value keeps a
/// denominator.
LaurentPoly evaluate_link(const LinkPresentation& lp, const GeneratorSet& g, const MarkovWeights& mw);
LaurentPoly evaluate_link(const LinkPresentation& lp);

/// Result JSON: {"value": {exp: coeff}, "normalization": ..., "kappa": ...}.
nlohmann::json result_to_json(const LaurentPoly& value, Normalization n, int kappa);

/// Exponent -> integer-string object.
nlohmann::json poly_to_json(const LaurentPoly& p);
LaurentPoly poly_from_json(const nlohmann::json& j);

struct KnownExample {
  std::string name;
  LinkPresentation presentation;
  LaurentPoly expected;
};

/// The four reference values: unknot, Hopf link, trefoil, figure-eight knot.
std::vector<KnownExample> known_examples();

/// Printed reference polynomials (the bracketed factors, without Delta).
LaurentPoly hopf_factor();      // W^-24 (1 + W^24)(1 + W^16)(1 + W^8)
LaurentPoly trefoil_factor();   // W^27 + W^19 - ... + W^-45
LaurentPoly figure_eight_factor();

/// How a computed value relates to a reference: computed equals
/// S^mirror(expected) * W^(21 k).
struct Identification {
  bool mirror = false;
  int k = 0;
};

std::optional<Identification> identify(const RatFunc& computed, const LaurentPoly& expected, int max_k,
                                       bool allow_mirror);

struct WordMatch {
  BraidWord word;
  Identification id;
};

/// First 3-strand word (shortest first) of length <= max_length whose framed
/// closure matches `expected` up to mirror and W^(21 k), |k| <= max_k.
std::optional<WordMatch> search_closures(const LaurentPoly& expected, int max_length, int max_k);

}  // namespace spin7
