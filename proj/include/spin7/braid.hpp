#pragma once

#include "json.hpp"

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace spin7 {

class BadToken : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class GeneratorOutOfRange : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Braid word on at most three strands. Letters are +-i for sigma_i^{+-1}.
/// One strand is allowed for the trivial braid (its closure is the unknot).
class BraidWord {
 public:
  static constexpr int kMaxStrands = 3;

  BraidWord() = default;
  BraidWord(int strands, std::vector<int> letters);

  int strands() const { return strands_; }
  const std::vector<int>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  std::size_t length() const { return letters_.size(); }

  /// Every letter inverted, order kept: the braid of the mirror image.
  BraidWord mirrored() const;
  /// The group inverse (reversed order, inverted letters).
  BraidWord inverse() const;

  friend BraidWord operator*(const BraidWord& a, const BraidWord& b);
  friend bool operator==(const BraidWord& a, const BraidWord& b) = default;

  /// Space separated letters, e.g. "1 -2 1".
  std::string to_string() const;

 private:
  int strands_ = 3;
  std::vector<int> letters_;
};

/// Parses whitespace separated signed integers with 0 < |token| < strands.
BraidWord parse_braid(std::string_view text, int strands);

/// Closure structure of a braid word.
struct ClosureInfo {
  int components = 0;
  /// component_of_start[p]: closure component of the strand starting at p.
  std::vector<int> component_of_start;
  /// same_component[t]: letter t crosses two arcs of the same component.
  std::vector<bool> same_component;
};

/// Underlying permutation: perm[p] = end position of the strand starting at p.
std::vector<int> permutation(const BraidWord& w);
ClosureInfo closure_components(const BraidWord& w);

int exponent_sum(const BraidWord& w);
/// Sum of signs over self-crossings of closure components.
int self_writhe(const BraidWord& w);

enum class Normalization { Framed, GlobalWrithe };

std::string to_string(Normalization n);
Normalization parse_normalization(std::string_view text);

struct LinkComponent {
  BraidWord braid;
  bool mirror = false;
};

/// Disjoint union of braid closures.
struct LinkPresentation {
  std::vector<LinkComponent> components;
  Normalization normalization = Normalization::Framed;
};

/// `{"components":[{"braid":"1 1","strands":3,"mirror":false}],"normalization":"framed"}`
LinkPresentation link_from_json(const nlohmann::json& j);
nlohmann::json link_to_json(const LinkPresentation& lp);

}  // namespace spin7
