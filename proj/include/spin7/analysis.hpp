#pragma once

#include "spin7/generators.hpp"

#include <array>
#include <string>
#include <vector>

namespace spin7 {

/// Unique solution of R12^2 = c_cross R12 + c_id I + c_crossinv R12^-1 + c_clasp A12.
struct SkeinCoefficients {
  RatFunc c_cross;
  RatFunc c_id;
  RatFunc c_crossinv;
  RatFunc c_clasp;
};

/// Throws NotInSpan / DependentBasis when the constants are inconsistent.
SkeinCoefficients derive_skein_coefficients(const GeneratorSet& g);

/// The same solve for the mirror relation, R12^-2 against (R12^-1, I, R12, A12).
SkeinCoefficients derive_mirror_skein_coefficients(const GeneratorSet& g);

/// Solve of R23^2 against (R23, I, R23^-1) on the blocks of size 3, 2, 1.
std::array<RatFunc, 3> derive_cubic_from_r23(const GeneratorSet& g);

/// Coefficients of the crossing-change relation whose diagrams are not
/// reproduced here; kept as reference data only.
struct CrossingChangeConstants {
  LaurentPoly first;   // W^-1 (W^4 - 1)
  LaurentPoly second;  // W^-10 (W^4 - 1)(W^12 - W^8 - 1)
  LaurentPoly third;   // W^-12 (W^4 - 1)
  LaurentPoly fourth;  // W^-27 (W^4 - 1)^2 (1 - W^28 + W^24 + 3 W^16 + W^12 + 2 W^8)
};
CrossingChangeConstants crossing_change_constants();

struct SeriesCheckEntry {
  int power;
  int block;
  int order;
  bool equal;
};

/// For n = 1..n_max and each block, compares the alpha expansion of
/// tr(R12^n) with tr((exp(-r12/2) s12)^n), both truncated at `order`.
std::vector<SeriesCheckEntry> series_consistency_check(const GeneratorSet& g, const AlphaGeneratorSet& ag, int n_max,
                                                       int order);

/// Truncated Taylor sum of exp(m) over alpha series. `m` must have no
/// alpha^0 part; terms up to m^order are kept.
AlphaBlockMatrix exp_series(const AlphaBlockMatrix& m, int order);

/// Named exact identity with its outcome.
struct CheckResult {
  std::string name;
  bool passed;
  std::string detail;
};

/// W = 1: R12^2 = I, R23^2 = I, (R12 R23)^3 = I, and R12 != I.
std::vector<CheckResult> w1_degeneration_check(const GeneratorSet& g);

/// Evaluates every entry of a block matrix at W = w.
RationalBlockMatrix eval_block_matrix(const BlockMatrix& m, const mpq_class& w);

}  // namespace spin7
