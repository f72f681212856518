#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ngdvqe/ansatz.hpp"
#include "ngdvqe/benchmarks.hpp"
#include "ngdvqe/optimizers.hpp"

namespace ngdvqe {

struct ProblemConfig {
  /// narrow_gorge | h2 | tfim | file | quadratic
  std::string name = "h2";
  int n_qubits = 2;
  int depth = 1;
  Entanglement entanglement = Entanglement::Linear;
  std::optional<std::filesystem::path> hamiltonian;
  /// default | zeros | pi/2 | random | comma-separated values
  std::string init = "default";
};

struct RunConfig {
  ProblemConfig problem;
  OptimizerConfig optimizer;
  /// Falls back to the problem's default budget.
  std::optional<std::size_t> max_iterations;
  bool record_gradient_norm = true;
  /// Wall-clock column; off by default so that traces are reproducible.
  bool record_time = false;
  std::optional<std::filesystem::path> output;
  std::uint64_t seed = 0;
};

ProblemInstance make_problem(const ProblemConfig& config, std::uint64_t seed = 0);

struct TraceRow {
  std::size_t iter = 0;
  double energy = 0.0;
  double grad_norm = 0.0;
  double step_norm = 0.0;
  std::uint64_t evals = 0;
  double ms = 0.0;
  friend bool operator==(const TraceRow&, const TraceRow&) = default;
};

/// Row t holds f(theta_t), the norm of the gradient the optimizer evaluated
/// at iteration t (at the look-ahead point for NAG; the last row evaluates
/// the gradient at the final point), |theta_t - theta_{t-1}|, and the
/// cumulative evaluation count.
struct EnergyTrace {
  std::vector<TraceRow> rows;
  friend bool operator==(const EnergyTrace&, const EnergyTrace&) = default;
};

enum class RunStatus { Completed, VanishingGradient };

struct RunResult {
  EnergyTrace trace;
  RunStatus status = RunStatus::Completed;
  ParameterVector final_point;
  double reference_energy = 0.0;
};

/// Optimizes `problem` from its initial point. Stops after max_iterations
/// gradient evaluations or at a vanishing gradient (NGDm falls back to the
/// block anchor, which becomes the last row).
RunResult run(ProblemInstance problem, const OptimizerConfig& optimizer, std::size_t iterations,
              bool record_gradient_norm = true, bool record_time = false);

/// Builds the problem, runs it, and writes the CSV if an output path is set.
/// Module errors are rethrown with the run context prefixed.
RunResult run(const RunConfig& config);

/// First row index whose energy is <= threshold.
std::optional<std::size_t> iterations_to_threshold(const EnergyTrace& trace, double threshold);

/// Columns iter,energy,grad_norm,step_norm,evals,ms; reals in shortest
/// round-trip form.
std::string to_csv(const EnergyTrace& trace);
void write_csv(const EnergyTrace& trace, const std::filesystem::path& path);
EnergyTrace parse_csv(std::string_view text);
EnergyTrace read_csv(const std::filesystem::path& path);

struct LabeledTrace {
  std::string label;
  EnergyTrace trace;
};

/// One line per trace: final energy, best energy, and iterations to each
/// threshold ("-" if never reached).
std::string summarize(std::span<const LabeledTrace> traces, std::span<const double> thresholds);

}  // namespace ngdvqe
