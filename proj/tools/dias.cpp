#include "dias/commands.hpp"
#include "dias/kxy.hpp"

#include <CLI11.hpp>

#include <iostream>

namespace {

int emit(const dias::Report& report, bool machine) {
  std::cout << (machine ? dias::render_json(report) : dias::render_text(report));
  const auto verdict = report.verdict();
  if (verdict == dias::Verdict::Findings)
    std::cerr << "notice: report contains findings (tabled values the solver does not reproduce on entries "
                 "flagged as ambiguous)\n";
  return dias::exit_code(verdict);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact workbench for finite-dimensional dialgebras"};
  app.require_subcommand(1);
  bool machine = false;
  app.add_flag("--machine", machine, "Emit one JSON document instead of text");

  std::string input;
  std::string which = "der";
  std::string filter;
  std::size_t samples = 3;
  std::uint64_t seed = 7;
  int bound = dias::kxy::kDefaultBound;

  auto* verify = app.add_subcommand("verify", "Check the dialgebra axioms");
  auto* spaces = app.add_subcommand("spaces", "Basis of Der, Dider, Inn or DInn");
  auto* invariants = app.add_subcommand("invariants", "Annihilator, bar-center, halo and Leibniz bracket");
  auto* bider = app.add_subcommand("bider", "Biderivation algebra checks");
  auto* catalog = app.add_subcommand("catalog", "Reproduce the catalog tables");
  auto* kxy = app.add_subcommand("kxy", "Identities of the polynomial dialgebra K[x,y]");

  for (auto* sub : {verify, spaces, invariants, bider})
    sub->add_option("input", input, "Structure-constants file or catalog:<Name>[?key=value,...]")->required();
  spaces->add_option("--which", which, "Operator space")
      ->check(CLI::IsMember({"der", "dider", "inn", "dinn"}));
  catalog->add_option("filter", filter, "Keep entries whose name starts with this prefix");
  catalog->add_option("--samples", samples, "Parameter samples per Dias3_16 branch row")->check(CLI::PositiveNumber);
  for (auto* sub : {catalog, kxy}) sub->add_option("--seed", seed, "Sampling seed");
  kxy->add_option("--bound", bound, "Total-degree bound")->check(CLI::Range(3, 12));
  for (auto* sub : {verify, spaces, invariants, bider, catalog, kxy})
    sub->add_flag("--machine", machine, "Emit one JSON document instead of text");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*verify) return emit(dias::cmd_verify(input), machine);
    if (*spaces) {
      const dias::OperatorKind kind = which == "der"     ? dias::OperatorKind::Derivation
                                      : which == "dider" ? dias::OperatorKind::Diderivation
                                      : which == "inn"   ? dias::OperatorKind::InnerDerivation
                                                         : dias::OperatorKind::InnerDiderivation;
      return emit(dias::cmd_spaces(input, kind), machine);
    }
    if (*invariants) return emit(dias::cmd_invariants(input), machine);
    if (*bider) return emit(dias::cmd_bider(input), machine);
    if (*catalog) return emit(dias::cmd_catalog(filter, samples, seed), machine);
    if (*kxy) return emit(dias::cmd_kxy(bound, seed), machine);
  } catch (const dias::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
