// Command-line surface: eval, appendix, fuzz, critical.
// Exit status: 0 = all checks pass, 1 = usage/input error, 2 = mathematical
// check failure.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "qconcav/campaign.hpp"
#include "qconcav/critical.hpp"
#include "qconcav/render.hpp"
#include "qconcav/state_io.hpp"

namespace {

using namespace qconcav;

bool write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return true;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) {
    std::cerr << "error: cannot write " << out_path << "\n";
    return false;
  }
  f << text;
  return bool(f);
}

DensityMatrix load_state(const std::string& bloch, const std::string& file, const char* which) {
  if (!bloch.empty() && !file.empty())
    throw std::invalid_argument(std::string("give either --bloch") + which + " or --state" +
                                which + ", not both");
  if (!bloch.empty()) return from_bloch(parse_bloch_triple(bloch));
  if (!file.empty()) return load_state_json(file);
  throw std::invalid_argument(std::string("state ") + which + " missing: use --bloch" + which +
                              " or --state" + which);
}

struct StateArgs {
  std::string bloch1, bloch2;
  std::string state1, state2;
  double x = 0.5;

  void attach(CLI::App* cmd, bool with_x = true) {
    cmd->add_option("--bloch1", bloch1, "first state as comma-separated Bloch triple");
    cmd->add_option("--bloch2", bloch2, "second state as comma-separated Bloch triple");
    cmd->add_option("--state1", state1, "first state as JSON file");
    cmd->add_option("--state2", state2, "second state as JSON file");
    if (with_x) cmd->add_option("--x", x, "mixture weight in (0, 1)")->required();
  }
};

int run_eval(const StateArgs& states, const std::string& format_name, double tolerance,
             const std::string& out) {
  std::optional<MixtureProblem> problem;
  OutputFormat format;
  try {
    format = parse_format(format_name);
    problem.emplace(states.x, load_state(states.bloch1, states.state1, "1"),
                    load_state(states.bloch2, states.state2, "2"));
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  try {
    const BoundReport report = full_report(*problem, tolerance);
    if (!write_output(render_report(report, format), out)) return 1;
    return report.all_ok() ? 0 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

int run_appendix(const std::string& format_name, double tolerance, const std::string& out) {
  OutputFormat format;
  try {
    format = parse_format(format_name);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  try {
    const std::vector<AppendixRow> rows = qconcav::run_appendix(tolerance);
    if (!write_output(render_appendix(rows, format), out)) return 1;
    for (const AppendixRow& r : rows)
      if (!r.outcome_ok || !r.report.all_ok()) return 2;
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

int run_fuzz(FuzzConfig cfg, const std::string& format_name, const std::string& out) {
  OutputFormat format;
  try {
    format = parse_format(format_name);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  cfg.keep_rows = format == OutputFormat::csv;
  try {
    const CampaignResult result = qconcav::run_fuzz(cfg);
    if (!write_output(render_campaign(result, format), out)) return 1;
    return result.ok() ? 0 : 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

int run_critical(const StateArgs& states, const std::string& format_name, double tolerance,
                 const std::string& out) {
  std::optional<MixtureProblem> problem;
  OutputFormat format;
  try {
    format = parse_format(format_name);
    problem.emplace(states.x, load_state(states.bloch1, states.state1, "1"),
                    load_state(states.bloch2, states.state2, "2"));
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  try {
    const CriticalParams cp = find_critical_params(*problem, tolerance);
    if (!write_output(render_critical(cp, format), out)) return 1;
    return 0;
  } catch (const DegenerateProblem& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"entropy concavity bounds: evaluate, reproduce, fuzz, locate"};
  app.require_subcommand(1);

  std::string format = "table";
  std::string out;
  app.add_option("--format", format, "output format: table, json or csv")
      ->capture_default_str();
  app.add_option("--out", out, "write output to this path instead of stdout");

  StateArgs eval_states;
  double eval_tol = 1e-9;
  CLI::App* eval_cmd = app.add_subcommand("eval", "evaluate all bounds for one mixture problem");
  eval_states.attach(eval_cmd);
  eval_cmd->add_option("--tolerance", eval_tol, "chain slack tolerance")->capture_default_str();

  double appendix_tol = 1e-9;
  CLI::App* appendix_cmd =
      app.add_subcommand("appendix", "reproduce the three published qubit examples");
  appendix_cmd->add_option("--tolerance", appendix_tol, "chain slack tolerance")
      ->capture_default_str();

  FuzzConfig fuzz_cfg;
  CLI::App* fuzz_cmd = app.add_subcommand("fuzz", "seeded campaign over random problems");
  fuzz_cmd->add_option("--dims", fuzz_cfg.dims, "dimensions to fuzz")
      ->delimiter(',')
      ->capture_default_str();
  fuzz_cmd->add_option("--trials", fuzz_cfg.trials_per_dim, "trials per dimension")
      ->capture_default_str();
  fuzz_cmd->add_option("--seed", fuzz_cfg.master_seed, "campaign master seed")
      ->capture_default_str();
  fuzz_cmd->add_option("--tolerance", fuzz_cfg.tolerance, "chain slack tolerance")
      ->capture_default_str();

  StateArgs critical_states;
  double critical_tol = 1e-6;
  CLI::App* critical_cmd =
      app.add_subcommand("critical", "bisect the critical Renyi parameters");
  critical_states.attach(critical_cmd);
  critical_cmd->add_option("--tolerance", critical_tol, "bisection bracket width")
      ->capture_default_str();

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

  if (eval_cmd->parsed()) return run_eval(eval_states, format, eval_tol, out);
  if (appendix_cmd->parsed()) return run_appendix(format, appendix_tol, out);
  if (fuzz_cmd->parsed()) return run_fuzz(fuzz_cfg, format, out);
  if (critical_cmd->parsed()) return run_critical(critical_states, format, critical_tol, out);
  return 1;
}
