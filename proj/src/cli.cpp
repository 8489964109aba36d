#include "ignatiev/cli.hpp"

#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "ignatiev/frame.hpp"
#include "ignatiev/logic.hpp"
#include "ignatiev/oracle.hpp"
#include "ignatiev/verify.hpp"
#include "parse_util.hpp"

namespace ign::cli {

namespace {

struct RelSpec {
  bool is_r = true;
  unsigned index = 0;
};

RelSpec parse_rel_spec(const std::string& text) {
  if (text.empty() || (text[0] != 'R' && text[0] != 'S'))
    throw ParseError("relation must be R<n> or S<n>", 0);
  RelSpec spec;
  spec.is_r = text[0] == 'R';
  detail::Cursor c{text, 1};
  std::uint64_t n = c.nat();
  c.expect_end();
  if (n > 0xffffffffULL) throw ParseError("relation index too large", 1);
  spec.index = static_cast<unsigned>(n);
  return spec;
}

int decide(bool yes, std::ostream& out) {
  out << (yes ? "yes" : "no") << '\n';
  return yes ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Ignatiev algebra calculator"};
  app.require_subcommand(1);

  std::string formula_text, formula_b_text, point_a_text, point_b_text;
  std::string seq_text, seq_g_text, rel_text;
  unsigned sigma_n = 0;

  auto* cmd_eval = app.add_subcommand("eval", "Evaluate a formula to a point");
  cmd_eval->add_option("formula", formula_text)->required();

  auto* cmd_entails = app.add_subcommand("entails", "Decide entailment between two formulas");
  cmd_entails->add_option("A", formula_text)->required();
  cmd_entails->add_option("B", formula_b_text)->required();

  auto* cmd_glb = app.add_subcommand("glb", "Greatest lower bound of two points");
  cmd_glb->add_option("p", point_a_text)->required();
  cmd_glb->add_option("q", point_b_text)->required();

  auto* cmd_sigma = app.add_subcommand("sigma", "Apply the sigma recursion to a sequence");
  cmd_sigma->add_option("n", sigma_n)->required();
  cmd_sigma->add_option("seq", seq_text)->required();

  auto* cmd_suitable = app.add_subcommand("suitable", "Check a raw sequence for suitability");
  cmd_suitable->add_option("seq", seq_text)->required();

  auto* cmd_rel = app.add_subcommand("rel", "Test a frame relation between two sequences");
  cmd_rel->add_option("relation", rel_text, "R<n> or S<n>")->required();
  cmd_rel->add_option("F", seq_text)->required();
  cmd_rel->add_option("G", seq_g_text)->required();

  auto* cmd_forces = app.add_subcommand("forces", "Test whether a filter forces a formula");
  cmd_forces->add_option("F", seq_text)->required();
  cmd_forces->add_option("formula", formula_text)->required();

  EnumerationBound bound;
  std::string suite = "all";
  auto* cmd_verify = app.add_subcommand("verify", "Run the exhaustive verification sweeps");
  cmd_verify->add_option("--height", bound.max_height, "Exponent tower height")
      ->default_val(3);
  cmd_verify->add_option("--terms", bound.max_terms, "Max CNF terms")->default_val(3);
  cmd_verify->add_option("--coeff", bound.max_coeff, "Max coefficient")->default_val(3);
  cmd_verify->add_option("--support", bound.max_support, "Max point support")->default_val(3);
  cmd_verify->add_option("--suite", suite, "glb, sigma, filters, semantics or all")
      ->default_val("all")
      ->check(CLI::IsMember({"glb", "sigma", "filters", "semantics", "all"}));

  std::vector<const char*> argv;
  argv.push_back("ign");
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return 2;
  }

  try {
    if (cmd_eval->parsed()) {
      out << format_point(eval(parse_formula(formula_text))) << '\n';
      return 0;
    }
    if (cmd_entails->parsed()) {
      return decide(entails(parse_formula(formula_text), parse_formula(formula_b_text)), out);
    }
    if (cmd_glb->parsed()) {
      out << format_point(glb(parse_point(point_a_text), parse_point(point_b_text))) << '\n';
      return 0;
    }
    if (cmd_sigma->parsed()) {
      out << format_sequence(sigma(sigma_n, parse_sequence(seq_text))) << '\n';
      return 0;
    }
    if (cmd_suitable->parsed()) {
      auto [prefix, tail] = parse_raw_sequence(seq_text);
      if (auto bad = suitability_violation(prefix, tail)) {
        out << "no " << *bad << '\n';
        return 1;
      }
      out << "yes\n";
      return 0;
    }
    if (cmd_rel->parsed()) {
      RelSpec spec = parse_rel_spec(rel_text);
      SuitableSequence f = parse_sequence(seq_text);
      SuitableSequence g = parse_sequence(seq_g_text);
      bool holds = spec.is_r ? rel_R(spec.index, f, g) : rel_S(spec.index, f, g);
      return decide(holds, out);
    }
    if (cmd_forces->parsed()) {
      return decide(forces(parse_sequence(seq_text), parse_formula(formula_text)), out);
    }
    if (cmd_verify->parsed()) {
      auto results = verify::run_suites(suite, bound);
      for (const auto& r : results) {
        if (r.passed) {
          out << "PASS " << r.name << " (" << r.cases << " cases, " << std::fixed
              << std::setprecision(2) << r.seconds << "s)\n";
        } else {
          out << "FAIL " << r.name << " " << r.detail << '\n';
        }
      }
      return verify::all_passed(results) ? 0 : 1;
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const ChainViolation& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const NotSuitable& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  err << "error: no subcommand\n";
  return 2;
}

}  // namespace ign::cli
