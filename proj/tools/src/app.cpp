#include "app.hpp"

#include "commands.hpp"
#include "pdmsusy/errors.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace pdmsusy::cli {

namespace {

bool write_file(const std::string& path, const std::string& text, std::ostream& err) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f || !(f << text) || !f.flush()) {
    err << "error: cannot write '" << path << "'\n";
    return false;
  }
  return true;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Position-dependent-mass SUSY quantum mechanics toolkit", "pdmsusy-cli"};
  app.set_config("--config", "", "Read options from an INI file (command-line flags win)");
  app.require_subcommand(1);

  RunConfig cfg;
  std::string domain_text;
  std::string format_text = "csv";
  app.add_option("--mass", cfg.mass, "Mass profile M(z) in units of m0");
  app.add_option("--v0", cfg.v0, "Potential V0(z)");
  app.add_option("--w", cfg.w, "Superpotential W(z) for the identity checks");
  app.add_option("--ordering", cfg.ordering, "Named ordering: bdd, bastard, zk, likuhn (default zk)");
  app.add_option("--alpha", cfg.alpha, "Explicit ordering alpha (with --gamma)");
  app.add_option("--gamma", cfg.gamma, "Explicit ordering gamma (with --alpha)");
  app.add_option("--epsilon", cfg.epsilon, "Uniform energy shift");
  app.add_option("--lambda", cfg.lambda, "Morse decay parameter")->capture_default_str();
  app.add_option("--A", cfg.big_a, "Morse constant A")->capture_default_str();
  app.add_option("--C", cfg.c, "Morse integration constant C")->capture_default_str();
  app.add_option("--a", cfg.a, "Shape parameter of M = [(a + z^2)/(1 + z^2)]^2");
  app.add_option("--domain", domain_text, "Interval MIN:MAX (default -12:12)");
  app.add_option("--points", cfg.points, "Grid size");
  app.add_option("--levels", cfg.levels, "Number of eigenvalues")->capture_default_str();
  app.add_option("--tol", cfg.tolerance, "Verification tolerance");
  app.add_option("--zref", cfg.zref, "Reference point of the indefinite integrals")->capture_default_str();
  app.add_option("--probe", cfg.probe, "Point at which identities are also reported")->capture_default_str();
  app.add_option("--format", format_text, "Output format")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
  app.add_option("--output", cfg.output, "Output file (default standard output)");
  app.add_option("--vectors", cfg.vectors, "Eigenvector CSV file (spectrum)");

  const std::pair<const char*, const char*> commands[] = {
      {"potential", "Tabulate M, its derivatives, U and the effective potential"},
      {"identities", "Check the ordering-selection, duality and partner identities"},
      {"uniform-shift", "Uniform-shift family: spectra and ground states"},
      {"morse", "Morse-like family: f0 and W by quadrature and closed form"},
      {"spectrum", "Lowest eigenvalues of the effective Hamiltonian"},
  };
  for (const auto& [name, description] : commands) app.add_subcommand(name, description)->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }

  CommandResult result;
  try {
    cfg.command = app.get_subcommands().front()->get_name();
    if (!domain_text.empty()) cfg.domain = parse_domain(domain_text);
    cfg.format = format_text == "json" ? OutputFormat::json : OutputFormat::csv;
    result = run_command(cfg);
  } catch (const ConvergenceFailure& e) {
    err << "error: " << e.what() << "\n";
    return kExitVerificationFailed;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }

  const std::string text = cfg.format == OutputFormat::json ? render_json(cfg.command, result)
                                                            : render_csv(result.table);
  if (cfg.output) {
    if (!write_file(*cfg.output, text, err)) return kExitInputError;
  } else {
    out << text;
  }
  if (cfg.format == OutputFormat::csv) err << render_summary_lines(result.summary);
  if (result.vectors && cfg.vectors && !write_file(*cfg.vectors, render_csv(*result.vectors), err))
    return kExitInputError;

  if (!result.verified) {
    err << "verification failed\n";
    return kExitVerificationFailed;
  }
  return kExitOk;
}

}  // namespace pdmsusy::cli
