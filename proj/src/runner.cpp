#include "ngdvqe/runner.hpp"

#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <system_error>

#include "ngdvqe/error.hpp"

namespace ngdvqe {

namespace {

constexpr const char* kCsvHeader = "iter,energy,grad_norm,step_norm,evals,ms";

ParameterVector parse_init(const std::string& init, Eigen::Index n, std::uint64_t seed) {
  if (init == "zeros") return ParameterVector::Zero(n);
  if (init == "pi/2") return ParameterVector::Constant(n, std::numbers::pi / 2);
  if (init == "random") {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> angle(0.0, 2 * std::numbers::pi);
    ParameterVector x(n);
    for (auto& v : x) v = angle(rng);
    return x;
  }
  std::vector<double> values;
  std::string_view rest = init;
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    std::string_view tok = rest.substr(0, comma);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size() || tok.empty()) {
      throw ParseError("bad init value '" + std::string(tok) +
                       "' (expected zeros, pi/2, random, or a comma-separated list)");
    }
    values.push_back(v);
    rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
  }
  if (static_cast<Eigen::Index>(values.size()) != n) {
    throw DimensionError("init has " + std::to_string(values.size()) + " values, problem has " +
                         std::to_string(n) + " parameters");
  }
  return Eigen::Map<const ParameterVector>(values.data(), n);
}

GradientOracle oracle_for(Objective& obj) {
  if (!obj.circuit() && obj.has_analytic_gradient()) {
    return [&obj](const ParameterVector& x) { return obj.analytic_gradient(x); };
  }
  return [&obj](const ParameterVector& x) { return parameter_shift_gradient(obj, x); };
}

std::string fmt(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

template <class T>
T parse_field(std::string_view s, std::size_t line) {
  T v{};
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw ParseError("line " + std::to_string(line) + ": bad field '" + std::string(s) + "'");
  }
  return v;
}

}  // namespace

ProblemInstance make_problem(const ProblemConfig& config, std::uint64_t seed) {
  std::optional<ProblemInstance> p;
  const std::string& name = config.name;
  if (name == "narrow_gorge") {
    p.emplace(narrow_gorge(config.n_qubits));
  } else if (name == "h2") {
    p.emplace(h2_toy());
  } else if (name == "tfim") {
    p.emplace(tfim(config.n_qubits, config.entanglement));
  } else if (name == "file") {
    if (!config.hamiltonian) throw InvalidArgument("problem 'file' needs a Hamiltonian path");
    AnsatzSpec spec = AnsatzSpec::ry(config.n_qubits, config.depth, config.entanglement);
    p.emplace(from_file(*config.hamiltonian, spec));
  } else if (name == "quadratic") {
    if (config.n_qubits < 1) throw InvalidArgument("quadratic needs dim >= 1");
    p.emplace(synthetic_quadratic(static_cast<std::size_t>(config.n_qubits),
                                  ParameterVector::Zero(config.n_qubits)));
  } else {
    throw InvalidArgument("unknown problem '" + name +
                          "' (expected narrow_gorge|h2|tfim|file|quadratic)");
  }
  if (config.init != "default") p->initial = parse_init(config.init, p->initial.size(), seed);
  return std::move(*p);
}

RunResult run(ProblemInstance problem, const OptimizerConfig& optimizer, std::size_t iterations,
              bool record_gradient_norm, bool record_time) {
  constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
  using Clock = std::chrono::steady_clock;
  const auto start = Clock::now();
  auto elapsed_ms = [&] {
    if (!record_time) return 0.0;
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  };

  Objective& obj = problem.objective;
  obj.reset_eval_count();
  Optimizer opt(optimizer, problem.initial);
  const GradientOracle oracle = oracle_for(obj);

  RunResult result;
  result.reference_energy = problem.reference_energy;
  ParameterVector prev = problem.initial;
  double anchor_grad_norm = kNaN;

  for (std::size_t t = 0; t <= iterations; ++t) {
    TraceRow row;
    row.iter = t;
    row.energy = obj.evaluate(opt.point());
    row.step_norm = t == 0 ? 0.0 : (opt.point() - prev).norm();
    row.grad_norm = kNaN;

    if (t < iterations) {
      prev = opt.point();
      const bool block_start = !opt.in_block();
      try {
        const double g = opt.step(oracle);
        if (record_gradient_norm) row.grad_norm = g;
        if (block_start) anchor_grad_norm = row.grad_norm;
      } catch (const VanishingGradient& e) {
        row.grad_norm = e.norm();
        row.evals = obj.eval_count();
        row.ms = elapsed_ms();
        result.trace.rows.push_back(row);
        result.status = RunStatus::VanishingGradient;
        if (opt.in_block()) {
          opt.abort();
          TraceRow back;
          back.iter = t + 1;
          back.energy = obj.evaluate(opt.point());
          back.step_norm = (opt.point() - prev).norm();
          back.grad_norm = anchor_grad_norm;
          back.evals = obj.eval_count();
          back.ms = elapsed_ms();
          result.trace.rows.push_back(back);
        }
        break;
      }
    } else if (record_gradient_norm) {
      row.grad_norm = oracle(opt.point()).norm();
    }
    row.evals = obj.eval_count();
    row.ms = elapsed_ms();
    result.trace.rows.push_back(row);
  }
  result.final_point = opt.point();
  return result;
}

RunResult run(const RunConfig& config) {
  const std::string context = "run problem=" + config.problem.name +
                              " optimizer=" + to_string(config.optimizer.algorithm);
  try {
    config.optimizer.validate();
    ProblemInstance problem = make_problem(config.problem, config.seed);
    const std::size_t iters = config.max_iterations.value_or(problem.default_iterations);
    RunResult result = run(std::move(problem), config.optimizer, iters,
                           config.record_gradient_norm, config.record_time);
    if (config.output) write_csv(result.trace, *config.output);
    return result;
  } catch (const Error& e) {
    throw RunError(context, e);
  }
}

std::optional<std::size_t> iterations_to_threshold(const EnergyTrace& trace, double threshold) {
  for (const auto& row : trace.rows) {
    if (row.energy <= threshold) return row.iter;
  }
  return std::nullopt;
}

std::string to_csv(const EnergyTrace& trace) {
  std::string out = kCsvHeader;
  out += '\n';
  for (const auto& r : trace.rows) {
    out += std::to_string(r.iter) + ',' + fmt(r.energy) + ',' + fmt(r.grad_norm) + ',' +
           fmt(r.step_norm) + ',' + std::to_string(r.evals) + ',' + fmt(r.ms) + '\n';
  }
  return out;
}

void write_csv(const EnergyTrace& trace, const std::filesystem::path& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open '" + path.string() + "' for writing");
  f << to_csv(trace);
  f.flush();
  if (!f) throw IoError("write to '" + path.string() + "' failed");
}

EnergyTrace parse_csv(std::string_view text) {
  EnergyTrace trace;
  std::size_t line_no = 0;
  bool header_seen = false;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!header_seen) {
      if (line != kCsvHeader) throw ParseError("missing CSV header '" + std::string(kCsvHeader) + "'");
      header_seen = true;
      continue;
    }
    if (line.empty()) continue;
    std::vector<std::string_view> f;
    std::size_t pos = 0;
    while (true) {
      const auto c = line.find(',', pos);
      f.push_back(line.substr(pos, c == std::string_view::npos ? c : c - pos));
      if (c == std::string_view::npos) break;
      pos = c + 1;
    }
    if (f.size() != 6) {
      throw ParseError("line " + std::to_string(line_no) + ": expected 6 fields, got " +
                       std::to_string(f.size()));
    }
    TraceRow r;
    r.iter = parse_field<std::size_t>(f[0], line_no);
    r.energy = parse_field<double>(f[1], line_no);
    r.grad_norm = parse_field<double>(f[2], line_no);
    r.step_norm = parse_field<double>(f[3], line_no);
    r.evals = parse_field<std::uint64_t>(f[4], line_no);
    r.ms = parse_field<double>(f[5], line_no);
    trace.rows.push_back(r);
  }
  if (!header_seen) throw ParseError("empty CSV");
  return trace;
}

EnergyTrace read_csv(const std::filesystem::path& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return parse_csv(ss.str());
}

std::string summarize(std::span<const LabeledTrace> traces, std::span<const double> thresholds) {
  std::ostringstream out;
  out << std::setprecision(8);
  for (const auto& [label, trace] : traces) {
    out << label << ": rows=" << trace.rows.size();
    if (trace.rows.empty()) {
      out << '\n';
      continue;
    }
    double best = trace.rows.front().energy;
    for (const auto& r : trace.rows) best = std::min(best, r.energy);
    out << " final=" << trace.rows.back().energy << " best=" << best;
    for (double th : thresholds) {
      out << " iters(<=" << th << ")=";
      if (auto it = iterations_to_threshold(trace, th)) {
        out << *it;
      } else {
        out << '-';
      }
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace ngdvqe
