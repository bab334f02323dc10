#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "otb/arrangement.hpp"
#include "otb/error.hpp"
#include "otb/report.hpp"

namespace {

int fail(int code, const std::string& kind, const std::string& message) {
  std::cerr << "otb: " << kind << ": " << message << "\n";
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Orlik-Terao algebras, Betti tables, resonance and nets of line arrangements"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string builtin, file, format = "text";
  auto* opt_builtin = app.add_option("--builtin", builtin, "builtin arrangement name");
  auto* opt_file = app.add_option("--arrangement", file, "arrangement JSON file");
  opt_builtin->excludes(opt_file);
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));

  otb::CommandOptions o;
  std::map<std::string, CLI::App*> subs;
  subs["info"] = app.add_subcommand("info", "lines, flats and Poincare polynomial");
  subs["flats"] = app.add_subcommand("flats", "rank-2 flats with incident lines");
  subs["poincare"] = app.add_subcommand("poincare", "Poincare polynomial");
  subs["circuits"] = app.add_subcommand("circuits", "circuits and their relations");
  subs["circuits"]->add_option("--max-size", o.max_circuit_size, "largest circuit size")->check(CLI::Range(2, 12));
  subs["ot-hilbert"] = app.add_subcommand("ot-hilbert", "Hilbert function of C(A) against the series");
  subs["ot-hilbert"]->add_option("--upto", o.upto, "top degree")->check(CLI::Range(0, 12));
  subs["betti"] = app.add_subcommand("betti", "graded Betti table of C(A)");
  subs["betti"]->add_flag("--verify-regularity", o.verify_regularity, "also compute strand 3");
  subs["divisor-da"] = app.add_subcommand("divisor-da", "sections of D_A");
  subs["h0"] = app.add_subcommand("h0", "sections of m E0 - sum a_p E_p");
  subs["h0"]->add_option("--m", o.m, "degree")->required();
  subs["h0"]->add_option("--mults", o.mults, "a_p per flat (comma-separated) or one value for all")->required();
  subs["net-search"] = app.add_subcommand("net-search", "multinets with k classes");
  subs["net-search"]->add_option("--k", o.k, "number of classes")->check(CLI::Range(3, 4));
  subs["net-search"]->add_option("--max-weight", o.max_weight, "largest line weight")->check(CLI::Range(1, 4));
  subs["resonance"] = app.add_subcommand("resonance", "components of the first resonance variety");
  subs["scroll-check"] = app.add_subcommand("scroll-check", "multiplication matrices of nets");
  subs["jacobian-check"] = app.add_subcommand("jacobian-check", "Jacobian ideal inside L and Hilbert-Burch minors");
  subs["gradient-degree"] = app.add_subcommand("gradient-degree", "degree of the gradient map");
  subs["report"] = app.add_subcommand("report", "all invariants");
  subs["report"]->add_flag("--all", o.all, "include Betti table, nets, resonance and scrolls");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  std::string command;
  for (const auto& [name, sub] : subs)
    if (sub->parsed()) command = name;

  try {
    if (builtin.empty() && file.empty()) throw otb::InputError("give --builtin NAME or --arrangement FILE");
    otb::Arrangement a = builtin.empty() ? otb::load_arrangement_file(file) : otb::builtin_arrangement(builtin);
    auto report = otb::run_command(command, a, o);
    if (format == "json")
      std::cout << report.dump(2) << "\n";
    else
      std::cout << otb::render_text(report);
  } catch (const otb::VerificationError& e) {
    return fail(2, "verification failed", e.what());
  } catch (const otb::InputError& e) {
    return fail(1, "input error", e.what());
  } catch (const std::exception& e) {
    return fail(2, "internal error", e.what());
  }
  return 0;
}
