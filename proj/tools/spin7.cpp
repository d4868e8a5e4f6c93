// spin7: evaluate the so7 spinor link invariant on braid closures and run the
// verification suites.
//
//   spin7 eval --strands 3 --braid "1 -2 1 -2" [--mirror] [--normalization framed|global-writhe] [--format text|json]
//   spin7 eval --input link.json
//   spin7 verify [--suite all|prop1|prop2|skein|series|weights|examples] [--format text|json]
//   spin7 examples
//   spin7 dump-constants
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include "CLI11.hpp"
#include "json.hpp"
#include "spin7/generators.hpp"
#include "spin7/invariant.hpp"
#include "spin7/verify.hpp"

#include <fstream>
#include <iostream>

namespace {

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kUsage = 2;

struct EvalOptions {
  std::string braid;
  int strands = 3;
  bool mirror = false;
  std::string input;
  std::string normalization = "framed";
  std::string format = "text";
};

int run_eval(const EvalOptions& opt) {
  spin7::LinkPresentation lp;
  try {
    if (!opt.input.empty()) {
      std::ifstream in(opt.input);
      if (!in) {
        std::cerr << "error: cannot open " << opt.input << '\n';
        return kUsage;
      }
      lp = spin7::link_from_json(nlohmann::json::parse(in));
    } else {
      lp.components.push_back({spin7::parse_braid(opt.braid, opt.strands), opt.mirror});
      lp.normalization = spin7::parse_normalization(opt.normalization);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }

  const spin7::LaurentPoly value = spin7::evaluate_link(lp);
  if (opt.format == "json") {
    std::cout << spin7::result_to_json(value, lp.normalization, spin7::markov_weights().kappa).dump() << '\n';
  } else {
    std::cout << value.to_string() << '\n';
  }
  return kOk;
}

int run_verify(const std::string& suite, const std::string& format) {
  spin7::Suite s{};
  try {
    s = spin7::parse_suite(suite);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  const spin7::Report r = spin7::run_suite(s);
  if (format == "json") {
    std::cout << r.to_json().dump(2) << '\n';
  } else {
    std::cout << r.to_text();
  }
  return r.passed() ? kOk : kVerifyFailed;
}

int run_examples() {
  bool ok = true;
  for (const auto& ex : spin7::known_examples()) {
    const auto& c = ex.presentation.components.front();
    const spin7::LaurentPoly computed = spin7::evaluate_link(ex.presentation);
    const bool match = computed == ex.expected;
    ok = ok && match;
    std::cout << ex.name << "  (strands " << c.braid.strands() << ", braid \"" << c.braid.to_string() << '"'
              << (c.mirror ? ", mirror" : "") << ")\n"
              << "  reference: " << ex.expected.to_string() << '\n'
              << "  computed:  " << computed.to_string() << '\n'
              << "  " << (match ? "match" : "MISMATCH") << '\n';
  }
  return ok ? kOk : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"so7 spinor link invariant on braid closures"};
  app.require_subcommand(1);

  EvalOptions eval;
  auto* eval_cmd = app.add_subcommand("eval", "Evaluate the invariant of a braid closure or link file");
  eval_cmd->add_option("--braid", eval.braid, "Braid word, e.g. \"1 -2 1 -2\"");
  eval_cmd->add_option("--strands", eval.strands, "Number of strands (1-3)")->check(CLI::Range(1, 3));
  eval_cmd->add_flag("--mirror", eval.mirror, "Evaluate the mirror image");
  eval_cmd->add_option("--input", eval.input, "Link presentation JSON file");
  eval_cmd->add_option("--normalization", eval.normalization, "framed or global-writhe")
      ->check(CLI::IsMember({"framed", "global-writhe"}));
  eval_cmd->add_option("--format", eval.format, "text or json")->check(CLI::IsMember({"text", "json"}));

  std::string suite = "all";
  std::string verify_format = "text";
  auto* verify_cmd = app.add_subcommand("verify", "Run verification suites");
  verify_cmd->add_option("--suite", suite, "all, prop1, prop2, skein, series, weights or examples")
      ->check(CLI::IsMember({"all", "prop1", "prop2", "skein", "series", "weights", "examples"}));
  verify_cmd->add_option("--format", verify_format, "text or json")->check(CLI::IsMember({"text", "json"}));

  auto* examples_cmd = app.add_subcommand("examples", "Print reference values next to computed ones");
  auto* dump_cmd = app.add_subcommand("dump-constants", "Print every stored matrix");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*eval_cmd) return run_eval(eval);
    if (*verify_cmd) return run_verify(suite, verify_format);
    if (*examples_cmd) return run_examples();
    if (*dump_cmd) {
      std::cout << spin7::dump_constants();
      return kOk;
    }
  } catch (const spin7::IntegralityFailure& e) {
    std::cerr << "integrality failure: " << e.what() << '\n';
    return kVerifyFailed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kVerifyFailed;
  }
  return kUsage;
}
