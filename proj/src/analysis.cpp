#include "spin7/analysis.hpp"

namespace spin7 {

SkeinCoefficients derive_skein_coefficients(const GeneratorSet& g) {
  const auto c = solve_span(g.R12 * g.R12, {g.R12, BlockMatrix::identity(), g.R12inv, g.A12});
  return {c[0], c[1], c[2], c[3]};
}

SkeinCoefficients derive_mirror_skein_coefficients(const GeneratorSet& g) {
  const auto c = solve_span(g.R12inv * g.R12inv, {g.R12inv, BlockMatrix::identity(), g.R12, g.A12});
  return {c[0], c[1], c[2], c[3]};
}

std::array<RatFunc, 3> derive_cubic_from_r23(const GeneratorSet& g) {
  const std::array<bool, 4> keep{false, true, true, true};
  const auto c = solve_span((g.R23 * g.R23).restricted(keep),
                            {g.R23.restricted(keep), BlockMatrix::identity().restricted(keep), g.R23inv.restricted(keep)});
  return {c[0], c[1], c[2]};
}

CrossingChangeConstants crossing_change_constants() {
  const LaurentPoly d = W(4) - 1;
  return {
      W(-1) * d,
      W(-10) * d * (W(12) - W(8) - 1),
      W(-12) * d,
      W(-27) * d * d * (1 - W(28) + W(24) + 3 * W(16) + W(12) + 2 * W(8)),
  };
}

AlphaBlockMatrix exp_series(const AlphaBlockMatrix& m, int order) {
  const auto truncate = [order](const AlphaSeries& x) { return x.truncated(order); };
  const AlphaBlockMatrix mt = m.map(truncate);
  AlphaBlockMatrix term = AlphaBlockMatrix::identity().map(truncate);
  AlphaBlockMatrix sum = term;
  for (int j = 1; j <= order; ++j) {
    term = term * mt;
    term *= AlphaSeries(mpq_class(1, j));
    sum += term;
  }
  return sum;
}

std::vector<SeriesCheckEntry> series_consistency_check(const GeneratorSet& g, const AlphaGeneratorSet& ag, int n_max,
                                                       int order) {
  if (order < 0) throw std::invalid_argument("series order must be non-negative");
  // alpha side: exp(-r12 / 2) s12, with r12 carrying its own factor of alpha.
  const AlphaBlockMatrix half_r = ag.r12 * AlphaSeries(mpq_class(-1, 2));
  const AlphaBlockMatrix rotated = exp_series(half_r, order) * ag.s12.map([order](const AlphaSeries& x) {
    return x.truncated(order);
  });

  std::vector<SeriesCheckEntry> out;
  BlockMatrix w_power = BlockMatrix::identity();
  AlphaBlockMatrix a_power = AlphaBlockMatrix::identity();
  for (int n = 1; n <= n_max; ++n) {
    w_power = w_power * g.R12;
    a_power = a_power * rotated;
    const auto wt = w_power.block_traces();
    const auto at = a_power.block_traces();
    for (std::size_t b = 0; b < 4; ++b) {
      const auto laurent = wt[b].as_laurent();
      const bool equal = laurent && to_alpha_series(*laurent, order) == at[b].truncated(order) &&
                         at[b].order() >= order;
      out.push_back({n, static_cast<int>(b), order, equal});
    }
  }
  return out;
}

RationalBlockMatrix eval_block_matrix(const BlockMatrix& m, const mpq_class& w) {
  return m.map([&w](const RatFunc& x) { return x.eval(w); });
}

std::vector<CheckResult> w1_degeneration_check(const GeneratorSet& g) {
  const RationalBlockMatrix r12 = eval_block_matrix(g.R12, 1);
  const RationalBlockMatrix r23 = eval_block_matrix(g.R23, 1);
  const auto I = RationalBlockMatrix::identity();
  const auto p = r12 * r23;
  return {
      {"R12^2 = I at W=1", r12 * r12 == I, ""},
      {"R23^2 = I at W=1", r23 * r23 == I, ""},
      {"(R12 R23)^3 = I at W=1", p * p * p == I, ""},
      {"R12 != I at W=1", !(r12 == I), ""},
  };
}

}  // namespace spin7
