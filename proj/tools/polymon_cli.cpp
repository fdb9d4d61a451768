// Command-line front end: element arithmetic, Green's relations,
// neighborhood membership and witnesses, extension-semigroup operations,
// and the verification suites. One JSON document per invocation on
// standard output.
//
// Exit codes: 0 success / suite passed, 1 suite failure, 2 usage or
// parse error.

#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "polymon/extension.hpp"
#include "polymon/green.hpp"
#include "polymon/json_io.hpp"
#include "polymon/parse.hpp"
#include "polymon/suites.hpp"
#include "polymon/topology.hpp"

namespace {

using nlohmann::json;
using namespace polymon;

struct Output {
  json doc;
  int exit_code = 0;
};

std::uint64_t default_seed() {
  if (const char* env = std::getenv("POLYMON_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      // fall through to the fixed default
    }
  }
  return 1;
}

std::size_t default_ball_radius(const WordSet& a_words) {
  std::size_t longest = 0;
  for (const Word& w : a_words) {
    longest = std::max(longest, w.size());
  }
  return longest + 4;
}

int run(int argc, char** argv) {
  CLI::App app{"exact arithmetic and verification for polycyclic monoids"};
  app.require_subcommand(1);

  Letter lambda = 2;
  bool pretty = false;
  std::uint64_t seed = default_seed();
  app.add_option("--lambda", lambda, "alphabet size (default 2)");
  app.add_flag("--pretty", pretty, "indent the JSON output");
  app.add_option("--seed", seed, "seed for sampled suites (default POLYMON_SEED or 1)");

  Output out;

  // nf <expr>
  std::string nf_expr;
  auto* nf = app.add_subcommand("nf", "normal form of a generator expression");
  nf->add_option("expr", nf_expr)->required();
  nf->callback([&] { out.doc = eval_expr(parse_expr(nf_expr, lambda)); });

  // mul <expr> <expr>
  std::string mul_lhs, mul_rhs;
  auto* mul = app.add_subcommand("mul", "product of two elements");
  mul->add_option("lhs", mul_lhs)->required();
  mul->add_option("rhs", mul_rhs)->required();
  mul->callback([&] {
    out.doc = multiply(eval_expr(parse_expr(mul_lhs, lambda)),
                       eval_expr(parse_expr(mul_rhs, lambda)));
  });

  // inv <expr>
  std::string inv_expr;
  auto* inv = app.add_subcommand("inv", "inverse of an element");
  inv->add_option("expr", inv_expr)->required();
  inv->callback([&] { out.doc = invert(eval_expr(parse_expr(inv_expr, lambda))); });

  // green <R|L|H|D> <expr> <expr>
  std::string green_rel, green_lhs, green_rhs;
  auto* green = app.add_subcommand("green", "Green relation test");
  green->add_option("relation", green_rel, "one of R, L, H, D")->required();
  green->add_option("lhs", green_lhs)->required();
  green->add_option("rhs", green_rhs)->required();
  green->callback([&] {
    const PElement x = eval_expr(parse_expr(green_lhs, lambda));
    const PElement y = eval_expr(parse_expr(green_rhs, lambda));
    bool related = false;
    if (green_rel == "R" || green_rel == "r") {
      related = green_r(x, y);
    } else if (green_rel == "L" || green_rel == "l") {
      related = green_l(x, y);
    } else if (green_rel == "H" || green_rel == "h") {
      related = green_h(x, y);
    } else if (green_rel == "D" || green_rel == "d") {
      related = green_d(x, y);
    } else {
      throw CLI::ValidationError("relation must be one of R, L, H, D");
    }
    out.doc = related;
  });

  // order <expr> <expr>
  std::string ord_lhs, ord_rhs;
  auto* order = app.add_subcommand("order", "natural partial order test");
  order->add_option("lhs", ord_lhs)->required();
  order->add_option("rhs", ord_rhs)->required();
  order->callback([&] {
    out.doc = nat_leq(eval_expr(parse_expr(ord_lhs, lambda)),
                      eval_expr(parse_expr(ord_rhs, lambda)));
  });

  // member --A <words> <expr>
  std::string member_a, member_expr;
  auto* member = app.add_subcommand("member", "membership in the basic neighborhood U_A(0)");
  member->add_option("--A", member_a, "comma-separated excluded words")->required();
  member->add_option("expr", member_expr)->required();
  member->callback([&] {
    const BasicNbhd nbhd{parse_word_set(member_a, lambda)};
    out.doc = nbhd.contains(eval_expr(parse_expr(member_expr, lambda)));
  });

  // witness <right|left|mul> --A <words> [expr]
  std::string witness_kind, witness_a, witness_expr;
  auto* witness = app.add_subcommand("witness", "continuity witness sets for U_A(0)");
  witness->add_option("kind", witness_kind, "right, left or mul")->required();
  witness->add_option("--A", witness_a, "comma-separated excluded words")->required();
  witness->add_option("expr", witness_expr, "translating element (right/left)");
  witness->callback([&] {
    const BasicNbhd nbhd{parse_word_set(witness_a, lambda)};
    if (witness_kind == "mul") {
      out.doc = multiplication_witness(nbhd);
      return;
    }
    if (witness_expr.empty()) {
      throw CLI::ValidationError("right/left witnesses need a translating element");
    }
    const PElement x = eval_expr(parse_expr(witness_expr, lambda));
    if (witness_kind == "right") {
      out.doc = right_translation_witness(x, nbhd);
    } else if (witness_kind == "left") {
      out.doc = left_translation_witness(x, nbhd);
    } else {
      throw CLI::ValidationError("kind must be right, left or mul");
    }
  });

  // coarse-check --A <words> --max-len N
  std::string coarse_a;
  std::size_t coarse_len = 0;
  auto* coarse = app.add_subcommand("coarse-check", "coarseness identity on a ball");
  coarse->add_option("--A", coarse_a, "comma-separated excluded words")->required();
  coarse->add_option("--max-len", coarse_len, "ball radius (default |A| longest + 4)");
  coarse->callback([&] {
    const WordSet a_words = parse_word_set(coarse_a, lambda);
    const std::size_t radius = coarse_len > 0 ? coarse_len : default_ball_radius(a_words);
    const CheckResult result = coarseness_identity_check(BasicNbhd{a_words}, radius);
    out.doc = result;
    out.exit_code = result.ok ? 0 : 1;
  });

  // chain --pre <word> --per <word> -n N [--A <words>]
  std::string chain_pre = "e", chain_per, chain_a;
  std::size_t chain_n = 0;
  auto* chain = app.add_subcommand("chain", "idempotent chain prefixes");
  chain->add_option("--pre", chain_pre, "preperiod word (default e)");
  chain->add_option("--per", chain_per, "period word")->required();
  chain->add_option("-n", chain_n, "prefix length")->required();
  chain->add_option("--A", chain_a, "count the intersection with U_A(0)");
  chain->callback([&] {
    const ChainSpec spec(parse_word(chain_pre, lambda), parse_word(chain_per, lambda));
    if (chain->count("--A") > 0) {
      out.doc = chain_intersection_check(BasicNbhd{parse_word_set(chain_a, lambda)},
                                         spec, chain_n);
    } else {
      const std::vector<PElement> prefix = chain_prefix(spec, chain_n);
      out.doc = json{{"chain", prefix}, {"omega_prefix", is_omega_chain_prefix(prefix)}};
    }
  });

  // ext-mul <s-literal> <s-literal>
  std::string ext_lhs, ext_rhs;
  auto* ext_mul = app.add_subcommand("ext-mul", "product in the extension monoid");
  ext_mul->add_option("lhs", ext_lhs)->required();
  ext_mul->add_option("rhs", ext_rhs)->required();
  ext_mul->callback([&] {
    out.doc = multiply(parse_s_literal(ext_lhs), parse_s_literal(ext_rhs));
  });

  // ext-member --center a,b -n N <s-literal>
  std::string extm_center, extm_elem;
  std::size_t extm_n = 1;
  auto* ext_member = app.add_subcommand("ext-member", "membership in U_n at a filter point");
  ext_member->add_option("--center", extm_center, "filter words a,b")->required();
  ext_member->add_option("-n", extm_n, "neighborhood index")->required();
  ext_member->add_option("elem", extm_elem)->required();
  ext_member->callback([&] {
    const std::size_t comma = extm_center.find(',');
    if (comma == std::string::npos) {
      throw ParseError("expected two comma-separated words", 0);
    }
    const FilterDesc center =
        normalize_filter(parse_word(extm_center.substr(0, comma), 2),
                         parse_word(extm_center.substr(comma + 1), 2));
    out.doc = SNbhd(center, extm_n).contains(parse_s_literal(extm_elem));
  });

  // iso-check --max-index N
  std::size_t iso_max = 50;
  auto* iso = app.add_subcommand("iso-check", "filter part against matrix units");
  iso->add_option("--max-index", iso_max, "verify index pairs below this bound");
  iso->callback([&] {
    const SuiteReport report = suites::matrix_unit_isomorphism(iso_max);
    out.doc = report;
    out.exit_code = report.passed() ? 0 : 1;
  });

  // check <suite>
  std::string check_name;
  std::size_t check_len = 0;
  std::size_t check_samples = 100000;
  auto* check = app.add_subcommand("check", "run a verification suite");
  check->add_option("suite", check_name,
                    "axioms, assoc, oracle, eunitary, congruence, topology, extension")
      ->required();
  check->add_option("--max-len", check_len, "ball radius override");
  check->add_option("--samples", check_samples, "sample count for assoc");
  check->callback([&] {
    SuiteReport report;
    if (check_name == "axioms") {
      report = suites::inverse_axioms(check_len > 0 ? check_len : 3);
    } else if (check_name == "assoc") {
      report = suites::associativity(check_samples, seed);
    } else if (check_name == "oracle") {
      report = suites::oracle_equivalence(check_len > 0 ? check_len : 3);
    } else if (check_name == "eunitary") {
      report = suites::zero_e_unitary(check_len > 0 ? check_len : 4);
    } else if (check_name == "congruence") {
      report = suites::congruence_collapse(check_len > 0 ? check_len : 2, 10, 4);
    } else if (check_name == "topology") {
      const std::size_t ball = check_len > 0 ? check_len : 6;
      report = suites::merge("topology", {suites::translation_witnesses(2, 3, 2, ball),
                                          suites::coarseness(2, 3, ball),
                                          suites::chain_intersections(2, 2, 3, 50)});
    } else if (check_name == "extension") {
      const std::size_t len = check_len > 0 ? check_len : 3;
      report = suites::merge("extension", {suites::extension_cases(6),
                                           suites::extension_limits(len, 1, 10),
                                           suites::extension_mul_continuity(len, 1, 6),
                                           suites::extension_hausdorff(len, 3, 5)});
    } else {
      throw CLI::ValidationError("unknown suite: " + check_name);
    }
    out.doc = report;
    out.exit_code = report.passed() ? 0 : 1;
  });

  for (CLI::App* sub : app.get_subcommands([](CLI::App*) { return true; })) {
    sub->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      return app.exit(e);  // --help
    }
    out.doc = json{{"error", e.what()}};
    std::cout << out.doc.dump(pretty ? 2 : -1) << "\n";
    return 2;
  } catch (const ParseError& e) {
    out.doc = json{{"error", e.what()}, {"position", e.position()}};
    std::cout << out.doc.dump(pretty ? 2 : -1) << "\n";
    return 2;
  } catch (const std::exception& e) {
    out.doc = json{{"error", e.what()}};
    std::cout << out.doc.dump(pretty ? 2 : -1) << "\n";
    return 2;
  }

  std::cout << out.doc.dump(pretty ? 2 : -1) << "\n";
  return out.exit_code;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
