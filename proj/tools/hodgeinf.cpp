// Command-line front end: analyze, curve, jconst, selfcheck, compare.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hodgeinf/hodgeinf.hpp"

namespace {

enum Exit { ok = 0, bad_input = 1, inconsistent = 2, property_failure = 3 };

void print_report(const hodgeinf::ReportDocument& r, bool json, const std::string& report_path) {
  const std::string machine = hodgeinf::to_json(r).dump(2) + "\n";
  if (json)
    std::cout << machine;
  else
    std::cout << hodgeinf::render_text(r);
  if (!report_path.empty()) {
    std::ofstream out(report_path);
    if (!out) throw hodgeinf::ParseError("cannot write " + report_path);
    out << machine;
  }
}

void print_semicontinuity(const hodgeinf::SemicontinuityReport& rep) {
  std::vector<std::vector<std::string>> rows{{"interval", "s(f)", "s(def)", "ok", ""}};
  for (const auto& r : rep.rows)
    rows.push_back({r.interval(), std::to_string(r.s_f), std::to_string(r.s_def), r.ok ? "yes" : "no",
                    r.informational ? "informational" : ""});
  std::cout << hodgeinf::detail::render_columns(rows);
  std::cout << "semicontinuity on (k/d, k/d+1]: " << (rep.ok() ? "ok" : "VIOLATED") << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Equivariant Hodge numbers, spectral pairs and Seifert form at infinity of (*)-polynomials"};
  app.require_subcommand(1);

  std::string file, file_b, report_path;
  bool json = false;
  auto* analyze = app.add_subcommand("analyze", "Full report for one input document");
  analyze->add_option("file", file, "Input JSON document")->required();
  analyze->add_flag("--json", json, "Print the machine-readable report");
  analyze->add_option("--report", report_path, "Also write the JSON report to this path");

  std::vector<std::int64_t> multiplicities;
  auto* curve = app.add_subcommand("curve", "Plane curve case from the multiplicities of the linear factors");
  curve->add_option("--multiplicities", multiplicities, "alpha_1,...,alpha_m")->required()->delimiter(',');
  curve->add_flag("--json", json, "Print the machine-readable report");

  int jn = 0, jd = 0, jk = 0, js = 0;
  auto* jconst = app.add_subcommand("jconst", "Dimension of a graded piece of a smooth Jacobian ring");
  jconst->add_option("--n", jn)->required();
  jconst->add_option("--d", jd)->required();
  jconst->add_option("--k", jk)->required();
  jconst->add_option("--s", js)->required();

  auto* selfcheck = app.add_subcommand("selfcheck", "Run the internal consistency properties on one input");
  selfcheck->add_option("file", file, "Input JSON document")->required();

  auto* compare = app.add_subcommand("compare", "Spectrum semicontinuity of a special member against a deformation");
  compare->add_option("special", file, "Input for f")->required();
  compare->add_option("deformed", file_b, "Input for the deformation")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (analyze->parsed()) {
      print_report(hodgeinf::analyze(hodgeinf::load_spec(file)), json, report_path);
    } else if (curve->parsed()) {
      hodgeinf::CurveSpec c{multiplicities};
      c.validate();
      print_report(hodgeinf::analyze(c), json, "");
    } else if (jconst->parsed()) {
      std::cout << hodgeinf::j_constant(jn, jd, jk, js) << '\n';
    } else if (selfcheck->parsed()) {
      const auto rep = hodgeinf::selfcheck(hodgeinf::load_spec(file));
      std::cout << rep.str();
      if (!rep.passed()) return property_failure;
    } else if (compare->parsed()) {
      print_semicontinuity(hodgeinf::compare(hodgeinf::load_spec(file), hodgeinf::load_spec(file_b)));
    }
  } catch (const hodgeinf::InconsistentGlobalData& e) {
    std::cerr << "inconsistent global data: " << e.what() << '\n';
    return inconsistent;
  } catch (const hodgeinf::NegativeFormula& e) {
    std::cerr << "inconsistent data: " << e.what() << '\n';
    return inconsistent;
  } catch (const hodgeinf::AmbiguousResidue& e) {
    std::cerr << "property failure: " << e.what() << '\n';
    return property_failure;
  } catch (const hodgeinf::Error& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return bad_input;
  }
  return ok;
}
