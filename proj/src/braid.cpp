#include "spin7/braid.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <numeric>
#include <sstream>

namespace spin7 {

BraidWord::BraidWord(int strands, std::vector<int> letters) : strands_(strands), letters_(std::move(letters)) {
  if (strands < 1 || strands > kMaxStrands) {
    throw GeneratorOutOfRange("strand count must be between 1 and 3, got " + std::to_string(strands));
  }
  for (int l : letters_) {
    if (l == 0 || std::abs(l) >= strands_) {
      throw GeneratorOutOfRange("generator " + std::to_string(l) + " out of range for " + std::to_string(strands_) +
                                " strands");
    }
  }
}

BraidWord BraidWord::mirrored() const {
  std::vector<int> out(letters_.size());
  std::transform(letters_.begin(), letters_.end(), out.begin(), [](int l) { return -l; });
  return BraidWord(strands_, std::move(out));
}

BraidWord BraidWord::inverse() const {
  std::vector<int> out(letters_.rbegin(), letters_.rend());
  for (int& l : out) l = -l;
  return BraidWord(strands_, std::move(out));
}

BraidWord operator*(const BraidWord& a, const BraidWord& b) {
  std::vector<int> out = a.letters_;
  out.insert(out.end(), b.letters_.begin(), b.letters_.end());
  return BraidWord(std::max(a.strands_, b.strands_), std::move(out));
}

std::string BraidWord::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < letters_.size(); ++i) os << (i ? " " : "") << letters_[i];
  return os.str();
}

BraidWord parse_braid(std::string_view text, int strands) {
  std::vector<int> letters;
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] == ' ' || text[i] == '\t' || text[i] == '\n' || text[i] == ',') {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < text.size() && text[j] != ' ' && text[j] != '\t' && text[j] != '\n' && text[j] != ',') ++j;
    const std::string_view tok = text.substr(i, j - i);
    std::string_view digits = tok;
    if (!digits.empty() && digits.front() == '+') digits.remove_prefix(1);
    int value = 0;
    auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (ec != std::errc{} || end != digits.data() + digits.size() || digits.empty()) {
      throw BadToken("bad braid token '" + std::string(tok) + "'");
    }
    letters.push_back(value);
    i = j;
  }
  return BraidWord(strands, std::move(letters));
}

std::vector<int> permutation(const BraidWord& w) {
  // slot[s] = start position of the strand currently at slot s.
  std::vector<int> slot(static_cast<std::size_t>(w.strands()));
  std::iota(slot.begin(), slot.end(), 0);
  for (int l : w.letters()) {
    const auto i = static_cast<std::size_t>(std::abs(l) - 1);
    std::swap(slot[i], slot[i + 1]);
  }
  std::vector<int> perm(slot.size());
  for (std::size_t s = 0; s < slot.size(); ++s) perm[static_cast<std::size_t>(slot[s])] = static_cast<int>(s);
  return perm;
}

ClosureInfo closure_components(const BraidWord& w) {
  const auto perm = permutation(w);
  ClosureInfo info;
  info.component_of_start.assign(perm.size(), -1);
  for (std::size_t p = 0; p < perm.size(); ++p) {
    if (info.component_of_start[p] >= 0) continue;
    for (auto q = p; info.component_of_start[q] < 0; q = static_cast<std::size_t>(perm[q])) {
      info.component_of_start[q] = info.components;
    }
    ++info.components;
  }

  std::vector<int> slot(perm.size());
  std::iota(slot.begin(), slot.end(), 0);
  info.same_component.reserve(w.length());
  for (int l : w.letters()) {
    const auto i = static_cast<std::size_t>(std::abs(l) - 1);
    const auto& comp = info.component_of_start;
    info.same_component.push_back(comp[static_cast<std::size_t>(slot[i])] ==
                                  comp[static_cast<std::size_t>(slot[i + 1])]);
    std::swap(slot[i], slot[i + 1]);
  }
  return info;
}

int exponent_sum(const BraidWord& w) {
  int sum = 0;
  for (int l : w.letters()) sum += l > 0 ? 1 : -1;
  return sum;
}

int self_writhe(const BraidWord& w) {
  const auto info = closure_components(w);
  int sum = 0;
  for (std::size_t t = 0; t < w.length(); ++t) {
    if (info.same_component[t]) sum += w.letters()[t] > 0 ? 1 : -1;
  }
  return sum;
}

std::string to_string(Normalization n) { return n == Normalization::Framed ? "framed" : "global-writhe"; }

Normalization parse_normalization(std::string_view text) {
  if (text == "framed") return Normalization::Framed;
  if (text == "global-writhe") return Normalization::GlobalWrithe;
  throw std::invalid_argument("unknown normalization '" + std::string(text) + "'");
}

LinkPresentation link_from_json(const nlohmann::json& j) {
  LinkPresentation lp;
  if (!j.is_object() || !j.contains("components") || !j.at("components").is_array()) {
    throw std::invalid_argument("link presentation needs a \"components\" array");
  }
  for (const auto& c : j.at("components")) {
    const int strands = c.value("strands", 3);
    lp.components.push_back({parse_braid(c.at("braid").get<std::string>(), strands), c.value("mirror", false)});
  }
  lp.normalization = parse_normalization(j.value("normalization", std::string("framed")));
  return lp;
}

nlohmann::json link_to_json(const LinkPresentation& lp) {
  nlohmann::json comps = nlohmann::json::array();
  for (const auto& c : lp.components) {
    comps.push_back({{"braid", c.braid.to_string()}, {"strands", c.braid.strands()}, {"mirror", c.mirror}});
  }
  return {{"components", comps}, {"normalization", to_string(lp.normalization)}};
}

}  // namespace spin7
