#pragma once

// Explicit images of the three-strand generators under the spin7 weight
// system, in two pictures:
//  * the W-picture (W = exp(-alpha/2)) with braid generators R12, R23 and the
//    cap-cup A12, block-diagonal over M4 x M3 x M2 x M1;
//  * the alpha-picture with the chord r12, the symmetries s12, s23 and the
//    cap-cup a12.
// Both sets are validated against their defining identities on construction.

#include "spin7/block_matrix.hpp"

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace spin7 {

class ValidationFailed : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// (W^20 + 1)(W^12 + 1)(W^4 + 1) / W^18, the value of the unknot.
LaurentPoly delta();

struct GeneratorSet {
  BlockMatrix R12;
  BlockMatrix R23;
  BlockMatrix R12inv;
  BlockMatrix R23inv;
  BlockMatrix A12;
  LaurentPoly Delta;
  RatFunc phi;  // Delta / 8
};

struct AlphaGeneratorSet {
  AlphaBlockMatrix r12;
  AlphaBlockMatrix s12;
  AlphaBlockMatrix s23;
  AlphaBlockMatrix a12;
};

struct RepEntry {
  std::string name;
  int dimension;
  int casimir;
};

/// so7 irreducibles with dimension and Casimir eigenvalue (normalized to 40x
/// the Killing-form Casimir).
struct RepTable {
  std::vector<RepEntry> entries;

  const RepEntry& at(const std::string& name) const;
};

/// One named identity checked during construction.
struct IdentityCheck {
  std::string name;
  bool passed;
};

/// The matrices exactly as transcribed, without validation.
GeneratorSet raw_generators();
AlphaGeneratorSet raw_alpha_generators();

std::vector<IdentityCheck> check_generators(const GeneratorSet& g);
std::vector<IdentityCheck> check_alpha_generators(const AlphaGeneratorSet& g);

/// Transcribed generators with inverses computed; throws ValidationFailed if
/// any identity in check_generators fails.
GeneratorSet build_generators();
AlphaGeneratorSet build_alpha_generators();
RepTable build_rep_table();

/// Eigenvalues of R12 (and R23) on each block, as printed on the diagonals.
std::array<std::vector<LaurentPoly>, 4> braid_generator_spectrum();

/// Monic polynomial prod (x - root), coefficients ascending.
std::vector<RatFunc> poly_from_roots(const std::vector<LaurentPoly>& roots);

/// r12's size-4 diagonal equals alpha * (42 - c_X) / 2 over the summands X of
/// s (x) s, with 42 = 2 * casimir(s).
bool casimir_consistent(const AlphaGeneratorSet& g, const RepTable& table);

/// Shared instances, built once.
const GeneratorSet& generators();
const AlphaGeneratorSet& alpha_generators();

/// Summands of s (x) s in the order of the r12 size-4 diagonal:
/// trivial, l, v, Gamma(0,0,2). The trivial summand has Casimir 0.
std::array<int, 4> sym_square_casimirs(const RepTable& table);

/// Canonical text rendering of every stored constant.
std::string dump_constants();

/// 64-bit FNV-1a hash, used to pin the constants rendering.
std::uint64_t fnv1a64(std::string_view text);

}  // namespace spin7
