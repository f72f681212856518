// ngdvqe: run optimizer traces on the built-in VQE problems.
//
//   ngdvqe run --problem h2 --optimizer ngd --lr 0.05 --iters 1000 --out h2_ngd.csv
//   ngdvqe run --config experiment.ini --optimizer gd
//   ngdvqe summarize --threshold -0.25 h2_gd.csv h2_ngd.csv
//
// Config files are INI; keys in a [run] section take the long option names.

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ngdvqe/error.hpp"
#include "ngdvqe/runner.hpp"

namespace {

int fail(const std::string& kind, const std::string& message, int code) {
  std::cerr << nlohmann::json{{"error", kind}, {"message", message}}.dump() << '\n';
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace ngdvqe;

  CLI::App app{"Normalized-gradient optimizers on statevector VQE problems"};
  app.require_subcommand(1);
  app.set_config("--config", "", "INI file; [run] keys mirror the long options");

  RunConfig cfg;
  std::string optimizer = "ngd";
  std::string entanglement = "linear";
  std::string hamiltonian;
  std::string out;
  std::size_t iters = 0;
  bool timing = false;
  bool no_grad_norm = false;

  CLI::App* run_cmd = app.add_subcommand("run", "Run one optimizer on one problem");
  run_cmd->configurable();
  run_cmd->add_option("--problem", cfg.problem.name, "narrow_gorge|h2|tfim|file|quadratic")
      ->capture_default_str();
  run_cmd->add_option("--optimizer", optimizer, "gd|momentum|nag|adam|ngd|nnag|ngdm")
      ->capture_default_str();
  run_cmd->add_option("--lr", cfg.optimizer.learning_rate, "Learning rate / NGD step length")
      ->capture_default_str();
  run_cmd->add_option("--iters", iters, "Gradient evaluations (0 = problem default)");
  run_cmd->add_option("--m", cfg.optimizer.history_length, "NGDm history length")
      ->capture_default_str();
  run_cmd->add_option("--k", cfg.optimizer.qp_lower_bound, "NGDm QP lower bound")
      ->capture_default_str();
  run_cmd->add_option("--beta", cfg.optimizer.momentum, "Momentum coefficient")
      ->capture_default_str();
  run_cmd->add_option("--beta1", cfg.optimizer.beta1)->capture_default_str();
  run_cmd->add_option("--beta2", cfg.optimizer.beta2)->capture_default_str();
  run_cmd->add_option("--adam-eps", cfg.optimizer.adam_epsilon)->capture_default_str();
  run_cmd->add_option("--tol", cfg.optimizer.norm_tolerance, "Vanishing-gradient threshold")
      ->capture_default_str();
  run_cmd->add_option("--qubits", cfg.problem.n_qubits)->capture_default_str();
  run_cmd->add_option("--depth", cfg.problem.depth, "RY depth for --problem file")
      ->capture_default_str();
  run_cmd->add_option("--entanglement", entanglement, "linear|full")->capture_default_str();
  run_cmd->add_option("--hamiltonian", hamiltonian, "Pauli-list file for --problem file");
  // Config files split comma lists into several values; join them back.
  run_cmd->add_option("--init", cfg.problem.init, "default|zeros|pi/2|random|v0,v1,...")
      ->delimiter(',')
      ->multi_option_policy(CLI::MultiOptionPolicy::Join)
      ->capture_default_str();
  run_cmd->add_option("--seed", cfg.seed, "Seed for --init random")->capture_default_str();
  run_cmd->add_option("--out", out, "CSV output path");
  run_cmd->add_flag("--timing", timing, "Fill the ms column with wall-clock time");
  run_cmd->add_flag("--no-grad-norm", no_grad_norm, "Write nan in grad_norm and skip the final gradient");

  std::vector<std::string> csv_paths;
  std::vector<double> thresholds;
  CLI::App* sum_cmd = app.add_subcommand("summarize", "Report final/best energies of CSV traces");
  sum_cmd->add_option("files", csv_paths)->required();
  sum_cmd->add_option("--threshold", thresholds, "Energy threshold; repeat or comma-separate")
      ->allow_extra_args(false)
      ->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return fail("UsageError", e.what(), e.get_exit_code() == 0 ? 2 : e.get_exit_code());
  }

  try {
    if (*run_cmd) {
      cfg.optimizer.algorithm = parse_algorithm(optimizer);
      cfg.problem.entanglement = parse_entanglement(entanglement);
      if (!hamiltonian.empty()) cfg.problem.hamiltonian = hamiltonian;
      if (!out.empty()) cfg.output = out;
      if (iters > 0) cfg.max_iterations = iters;
      cfg.record_time = timing;
      cfg.record_gradient_norm = !no_grad_norm;

      const RunResult r = run(cfg);
      nlohmann::json summary{
          {"status", r.status == RunStatus::Completed ? "completed" : "vanishing_gradient"},
          {"problem", cfg.problem.name},
          {"optimizer", optimizer},
          {"rows", r.trace.rows.size()},
          {"reference_energy", r.reference_energy},
      };
      if (!r.trace.rows.empty()) {
        summary["final_energy"] = r.trace.rows.back().energy;
        summary["evals"] = r.trace.rows.back().evals;
      }
      if (cfg.output) summary["out"] = cfg.output->string();
      std::cout << summary.dump() << '\n';
    } else if (*sum_cmd) {
      std::vector<LabeledTrace> traces;
      for (const auto& p : csv_paths) traces.push_back({p, read_csv(p)});
      std::cout << summarize(traces, thresholds);
    }
  } catch (const Error& e) {
    return fail(e.kind(), e.what(), 1);
  } catch (const std::exception& e) {
    return fail("InternalError", e.what(), 1);
  }
  return 0;
}
