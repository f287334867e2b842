// Copyright 2026 The hamca Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hamca/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hamca/conservation.hpp"
#include "hamca/continuum.hpp"
#include "hamca/dynamics.hpp"
#include "hamca/io.hpp"
#include "hamca/models.hpp"
#include "hamca/ontology.hpp"

namespace hamca::cli {

namespace {

// A CSV or trajectory destination; "-" or empty -> the fallback stream.
class Sink {
 public:
  Sink(const std::string& path, std::ostream* fallback) {
    if (path.empty() || path == "-") {
      stream_ = fallback;
      return;
    }
    file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
    if (!*file_) throw IoError("cannot open '" + path + "' for writing");
    stream_ = file_.get();
  }

  bool active() const { return stream_ != nullptr; }
  std::ostream& operator*() { return *stream_; }

  void finish() {
    if (!stream_) return;
    stream_->flush();
    if (!*stream_) throw IoError("write failed");
  }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* stream_ = nullptr;
};

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Literal, or "@path" naming a file holding the literal.
std::string literal_or_file(const std::string& text) {
  if (!text.empty() && text[0] == '@') return read_text(text.substr(1));
  return text;
}

GaussVector gauss_vector_arg(const std::string& field, const std::string& text,
                             Eigen::Index dim) {
  GaussVector v;
  try {
    v = parse_gauss_vector(literal_or_file(text));
  } catch (const ParseError& e) {
    throw ParseError(field, e.what());
  }
  if (v.size() != dim) {
    throw ParseError(field, "has " + std::to_string(v.size()) + " entries, model dim is " +
                                std::to_string(dim));
  }
  return v;
}

ComplexVector complex_vector_arg(const std::string& field, const std::string& text,
                                 Eigen::Index dim) {
  ComplexVector v;
  try {
    v = parse_complex_vector(literal_or_file(text));
  } catch (const ParseError& e) {
    throw ParseError(field, e.what());
  }
  if (v.size() != dim) {
    throw ParseError(field, "has " + std::to_string(v.size()) + " entries, model dim is " +
                                std::to_string(dim));
  }
  return v;
}

GaussVector random_gauss_vector(std::mt19937_64& rng, Eigen::Index dim, long range) {
  std::uniform_int_distribution<long> d(-range, range);
  GaussVector v(dim);
  for (Eigen::Index a = 0; a < dim; ++a) {
    const long re = d(rng);
    const long im = d(rng);
    v[a] = GaussInt(BigInt(re), BigInt(im));
  }
  return v;
}

ComplexVector random_complex_vector(std::mt19937_64& rng, Eigen::Index dim) {
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  ComplexVector v(dim);
  for (Eigen::Index a = 0; a < dim; ++a) {
    const double re = d(rng);
    const double im = d(rng);
    v[a] = {re, im};
  }
  return v;
}

std::string csv_row(std::initializer_list<std::string> cells) {
  std::string row;
  bool first = true;
  for (const std::string& c : cells) {
    if (!first) row += ',';
    row += c;
    first = false;
  }
  return row + '\n';
}

// ---------------------------------------------------------------- run

struct RunOptions {
  std::string model;
  std::string psi0;
  std::string psi1;
  long basis_pair = 0;
  bool coincident = false;
  long random_range = -1;
  std::uint64_t seed = 0;
  std::size_t steps = 0;
  double l = 1.0;
  std::string out;
  std::string probe;
};

int cmd_run(const RunOptions& o, std::ostream& out) {
  const HamiltonianSpec spec = resolve_model(o.model);
  const GaussMatrix h = build_hamiltonian(spec);
  if (!(o.l > 0)) throw ParseError("l", "must be positive");

  const int sources = (o.basis_pair != 0) + (o.random_range >= 0) + !o.psi0.empty();
  if (sources == 0) throw ParseError("psi0", "give --psi0, --basis-pair or --random-range");
  if (sources > 1) {
    throw ParseError("psi0", "--psi0, --basis-pair and --random-range are exclusive");
  }

  InitialPair initial;
  if (o.basis_pair != 0) {
    initial = InitialPair::neighbours(spec.dim, o.basis_pair);
  } else if (o.random_range >= 0) {
    std::mt19937_64 rng(o.seed);
    initial.psi0 = random_gauss_vector(rng, spec.dim, o.random_range);
    initial.psi1 =
        o.coincident ? initial.psi0 : random_gauss_vector(rng, spec.dim, o.random_range);
  } else {
    initial.psi0 = gauss_vector_arg("psi0", o.psi0, spec.dim);
    if (o.coincident) {
      initial.psi1 = initial.psi0;
    } else if (!o.psi1.empty()) {
      initial.psi1 = gauss_vector_arg("psi1", o.psi1, spec.dim);
    } else {
      throw ParseError("psi1", "give --psi1 or --coincident");
    }
  }
  if (is_zero(initial.psi0) && is_zero(initial.psi1)) {
    throw ParseError("psi0", "initial pair is identically zero");
  }

  // Without --out and --probe the trajectory goes to stdout.
  const bool to_stdout = o.out.empty() && o.probe.empty();
  Sink traj_sink(o.out, to_stdout ? &out : nullptr);
  Sink probe_sink(o.probe, nullptr);

  std::optional<TrajectoryWriter> writer;
  if (traj_sink.active()) writer.emplace(*traj_sink, spec, o.l);
  std::optional<ConservationMonitor> monitor;
  if (probe_sink.active()) {
    monitor.emplace(GaussMatrix::Identity(spec.dim, spec.dim), h);
    *probe_sink << "n,q1,L\n";
  }

  Stepper<GaussInt> stepper(h, initial.psi0, initial.psi1);
  if (writer) writer->write(0, initial.psi0);
  stepper.run(o.steps, [&](std::size_t n, const GaussVector& psi_n, const GaussVector& next) {
    if (writer) writer->write(n + 1, next);
    if (monitor) {
      const ConservationStep step = monitor->observe(n, psi_n, next);
      *probe_sink << csv_row({std::to_string(n), to_string(step.q), step.links.total.str()});
    }
  });
  traj_sink.finish();
  probe_sink.finish();

  if (!to_stdout) {
    out << "model " << spec.label << ", " << o.steps + 2 << " states";
    if (monitor && monitor->value()) out << ", q1 = " << to_string(*monitor->value());
    out << '\n';
  }
  return kOk;
}

// ---------------------------------------------------------------- check

struct CheckOptions {
  std::string trajectory;
  std::string observable = "identity";
  std::string report;
};

int cmd_check(const CheckOptions& o, std::ostream& out) {
  std::ifstream in(o.trajectory, std::ios::binary);
  if (!in) throw IoError("cannot open '" + o.trajectory + "' for reading");
  TrajectoryReader reader(in);
  const GaussMatrix h = build_hamiltonian(reader.model());
  ConservationMonitor monitor(resolve_observable(o.observable, h), h);
  const Eigen::Index m = reader.model().dim;

  Sink report(o.report, nullptr);
  if (report.active()) {
    std::string header = "n,q_G,L";
    for (Eigen::Index a = 1; a <= m; ++a) header += ",L_" + std::to_string(a);
    for (Eigen::Index a = 1; a <= m; ++a) header += ",w_" + std::to_string(a);
    *report << header << '\n';
  }

  std::vector<GaussVector> window;  // the last two states
  std::size_t states = 0;
  while (auto rec = reader.next()) {
    auto& [k, psi] = *rec;
    ++states;
    if (window.size() == 2) {
      if (!equal(psi, step_forward(window[0], window[1], h))) {
        throw RecursionViolation("state " + std::to_string(k) +
                                     " breaks psi_{n+1} = psi_{n-1} - i H psi_n",
                                 k);
      }
      window.erase(window.begin());
    }
    window.push_back(std::move(psi));
    if (window.size() < 2) continue;

    const std::size_t n = k - 1;
    const ConservationStep step = monitor.observe(n, window[0], window[1]);
    if (report.active()) {
      std::string row = std::to_string(n) + "," + to_string(step.q) + "," + step.links.total.str();
      for (const BigInt& la : step.links.per_alpha) row += "," + la.str();
      for (Eigen::Index a = 0; a < m; ++a) {
        row += ",";
        if (step.links.weights) row += (*step.links.weights)[static_cast<std::size_t>(a)].str();
      }
      *report << row << '\n';
    }
  }
  report.finish();
  if (states < 2) throw ParseError("trajectory", "needs at least two states");
  out << "q_G = " << to_string(*monitor.value()) << " over " << monitor.pairs_seen()
      << " pairs\n";
  return kOk;
}

// ---------------------------------------------------------------- cycle

struct CycleOptions {
  std::string model;
  std::string pair = "neighbours";
  std::size_t budget = 0;
  std::string report;
};

int cmd_cycle(const CycleOptions& o, std::ostream& out) {
  const HamiltonianSpec spec = resolve_model(o.model);
  const GaussMatrix h = build_hamiltonian(spec);
  const std::size_t budget = o.budget > 0 ? o.budget : default_cycle_budget(spec.dim);

  struct Selected {
    std::string label;
    InitialPair pair;
  };
  std::vector<Selected> pairs;
  auto index_after = [&](const std::string& prefix) {
    const std::string rest = o.pair.substr(prefix.size());
    try {
      std::size_t used = 0;
      const long k = std::stol(rest, &used);
      if (used != rest.size()) throw std::invalid_argument(rest);
      return static_cast<Eigen::Index>(k);
    } catch (const std::logic_error&) {
      throw ParseError("pair", "bad index in '" + o.pair + "'");
    }
  };
  if (o.pair == "neighbours") {
    for (Eigen::Index k = 1; k < spec.dim; ++k) {
      pairs.push_back({"k:" + std::to_string(k), InitialPair::neighbours(spec.dim, k)});
    }
  } else if (o.pair.rfind("k:", 0) == 0) {
    const Eigen::Index k = index_after("k:");
    pairs.push_back({o.pair, InitialPair::neighbours(spec.dim, k)});
  } else if (o.pair.rfind("template:", 0) == 0) {
    const Eigen::Index k = index_after("template:");
    pairs.push_back({o.pair, InitialPair::coincident(basis_state(spec.dim, k))});
  } else {
    throw ParseError("pair", "expected neighbours, k:<k> or template:<k>");
  }

  Sink report(o.report, nullptr);
  if (report.active()) *report << "pair,n,k,phase_re,phase_im\n";
  bool all_found = true;
  for (const Selected& sel : pairs) {
    const CycleReport r = find_period(sel.pair.psi0, sel.pair.psi1, h, budget);
    all_found = all_found && r.period.has_value();
    if (report.active()) {
      for (const Visit& v : r.visits) {
        if (v.component) {
          *report << csv_row({sel.label, std::to_string(v.n), std::to_string(v.component->index),
                              v.component->phase.real().str(), v.component->phase.imag().str()});
        } else {
          *report << csv_row({sel.label, std::to_string(v.n), "", "", ""});
        }
      }
    }
    out << "pair " << sel.label << ": period ";
    if (r.period) {
      out << *r.period;
    } else {
      out << "none within " << budget;
    }
    out << " (4m = " << r.claimed_period << "), ontological " << (r.ontological ? "yes" : "no")
        << ", L = " << r.link_number.str() << '\n';
  }
  report.finish();
  return all_found ? kOk : kBudgetExhausted;
}

// ---------------------------------------------------------------- continuum

struct ContinuumOptions {
  std::string model;
  std::string mode;
  std::string report;
  std::uint64_t seed = 1;
  std::size_t pairs = 100;
  std::size_t steps = 0;  // 0: mode default
  std::string singular = "extend";
  double tolerance = 1e-8;
  double l = 0.1;
  std::vector<int> windows{16, 32, 64};
  std::size_t points = 20;
  double sample_tolerance = 1e-10;
  std::vector<double> ls{0.2, 0.1, 0.05};
  double omega = 0.5;
  double t = 8.0;
  int window = 32;
  std::string psi0;
  std::string psi1;
  double horizon = 1.0;
  double ratio_min = 2.5;
  double ratio_max = 6.0;
  double exact_tolerance = 1e-10;
};

int continuum_closedform(const ContinuumOptions& o, const GaussMatrix& h, std::ostream& out,
                         Sink& report) {
  ClosedFormOptions cf;
  if (o.singular == "reject") {
    cf.singular = SingularModes::kReject;
  } else if (o.singular == "extend") {
    cf.singular = SingularModes::kContinuousExtension;
  } else {
    throw ParseError("singular", "expected reject or extend");
  }
  const std::size_t steps = o.steps > 0 ? o.steps : 100;
  const SpectralForm spectral = spectral_decompose(h);
  const ComplexMatrix hf = to_complex(h);
  std::mt19937_64 rng(o.seed);

  if (report.active()) *report << "pair,max_rel_deviation\n";
  double worst = 0;
  for (std::size_t p = 0; p < o.pairs; ++p) {
    const ComplexVector psi0 = random_complex_vector(rng, h.rows());
    const ComplexVector psi1 = random_complex_vector(rng, h.rows());
    const std::vector<ComplexVector> iter = evolve_float(psi0, psi1, hf, steps - 1);
    double dev = 0;
    for (std::size_t n = 0; n <= steps; ++n) {
      const ComplexVector c = closed_form(spectral, psi0, psi1, static_cast<long>(n), cf);
      const double scale = std::max(iter[n].cwiseAbs().maxCoeff(), 1e-300);
      dev = std::max(dev, (c - iter[n]).cwiseAbs().maxCoeff() / scale);
    }
    worst = std::max(worst, dev);
    if (report.active()) *report << csv_row({std::to_string(p), format_real(dev)});
  }
  out << "closedform: max relative deviation " << format_real(worst) << " (tolerance "
      << format_real(o.tolerance) << ")\n";
  return worst <= o.tolerance ? kOk : kToleranceNotMet;
}

int continuum_sinh(const ContinuumOptions& o, const GaussMatrix& h, std::ostream& out,
                   Sink& report) {
  if (o.windows.empty()) throw ParseError("windows", "no window sizes");
  const int w_max = *std::max_element(o.windows.begin(), o.windows.end());
  const std::size_t steps = o.steps > 0 ? o.steps : static_cast<std::size_t>(6 * w_max);
  std::mt19937_64 rng(o.seed);
  const Eigen::Index m = h.rows();
  const ComplexVector psi0 = o.psi0.empty() ? to_complex(random_gauss_vector(rng, m, 3))
                                            : complex_vector_arg("psi0", o.psi0, m);
  const ComplexVector psi1 = o.psi1.empty() ? to_complex(random_gauss_vector(rng, m, 3))
                                            : complex_vector_arg("psi1", o.psi1, m);
  const ComplexMatrix hf = to_complex(h);
  BandlimitedSignal signal{evolve_float(psi0, psi1, hf, steps), o.l, w_max};

  // Window centres that keep the largest window and its +-1 shifts inside.
  const double lo = w_max + 2;
  const double hi = static_cast<double>(signal.samples.size()) - w_max - 3;
  if (!(hi > lo)) throw ParseError("steps", "trajectory too short for the largest window");
  std::uniform_real_distribution<double> pick(lo, hi);

  if (report.active()) *report << "kind,t,window,residual,bound\n";
  bool ok = true;
  double worst_sample = 0;
  auto evaluate = [&](const char* kind, double u) {
    const double t = u * o.l;
    double previous = INFINITY;
    for (int w : o.windows) {
      signal.window = w;
      const double r = sinh_residual(signal, hf, t);
      const double b = sinh_residual_bound(signal, hf, t);
      if (report.active()) {
        *report << csv_row({kind, format_real(t), std::to_string(w), format_real(r),
                            format_real(b)});
      }
      if (r > b) ok = false;
      if (std::string(kind) == "offgrid") {
        if (!(r < previous)) ok = false;
        previous = r;
      } else {
        worst_sample = std::max(worst_sample, r);
      }
    }
  };
  for (std::size_t i = 0; i < o.points; ++i) {
    double u = pick(rng);
    if (u == std::floor(u)) u += 0.5;
    evaluate("offgrid", u);
  }
  for (double u : {std::floor(lo), std::floor((lo + hi) / 2), std::floor(hi)}) {
    evaluate("sample", u);
  }
  if (worst_sample > o.sample_tolerance) ok = false;
  out << "sinh: " << o.points << " off-grid points, max residual at samples "
      << format_real(worst_sample) << (ok ? ", tolerances met\n" : ", tolerances NOT met\n");
  return ok ? kOk : kToleranceNotMet;
}

int continuum_q1(const ContinuumOptions& o, const GaussMatrix& h, std::ostream& out,
                 Sink& report) {
  const Eigen::Index m = h.rows();
  ComplexVector psi0 = ComplexVector::Zero(m);
  psi0[0] = 1;
  if (!o.psi0.empty()) psi0 = complex_vector_arg("psi0", o.psi0, m);
  const SpectralForm spectral = spectral_decompose(h);
  const ComplexVector modes0 = spectral.eigenvectors.adjoint() * psi0;

  if (report.active()) {
    *report << "convention,l,value,two_term,remainder,max_deviation,tail_bound\n";
  }
  bool ok = true;
  for (Q1Convention conv : {Q1Convention::kPairwise, Q1Convention::kCosh}) {
    const char* name = conv == Q1Convention::kPairwise ? "pairwise" : "cosh";
    double previous = INFINITY;
    for (double l : o.ls) {
      if (!(l > 0)) throw ParseError("ls", "spacings must be positive");
      // Samples of exp(-i omega H t) psi0 at t = n l.
      const auto n_samples = static_cast<std::size_t>(std::ceil(2 * o.t / l)) + 1;
      BandlimitedSignal signal{{}, l, o.window};
      for (std::size_t n = 0; n < n_samples; ++n) {
        ComplexVector modes = modes0;
        for (Eigen::Index k = 0; k < m; ++k) {
          modes[k] *= std::polar(1.0, -o.omega * spectral.eigenvalues[k] *
                                          static_cast<double>(n) * l);
        }
        signal.samples.push_back(spectral.eigenvectors * modes);
      }
      const Q1Evaluation e = q1_continuum(signal, o.t, conv);
      std::vector<double> times;
      for (double off : {-2.63, -1.37, -0.5, 0.0, 0.25, 1.5, 2.41}) times.push_back(o.t + off * l);
      const Q1Constancy c = q1_constancy(signal, times, conv);
      if (report.active()) {
        *report << csv_row({name, format_real(l), format_real(e.value), format_real(e.two_term),
                            format_real(e.remainder), format_real(c.max_deviation),
                            format_real(c.tail_bound)});
      }
      const double r = std::abs(e.remainder);
      if (!(r < previous)) ok = false;
      if (c.max_deviation > c.tail_bound) ok = false;
      previous = r;
    }
  }
  out << "q1: " << (ok ? "remainders decrease and q1 is constant to the tail bound\n"
                       : "tolerances NOT met\n");
  return ok ? kOk : kToleranceNotMet;
}

int continuum_born(const ContinuumOptions& o, const GaussMatrix& h, std::ostream& out,
                   Sink& report) {
  const Eigen::Index m = h.rows();
  ComplexVector psi0;
  if (o.psi0.empty()) {
    if (m < 2) throw ParseError("psi0", "required for one-state models");
    psi0 = ComplexVector::Zero(m);
    psi0[0] = 0.8;
    psi0[1] = 0.6;
  } else {
    psi0 = complex_vector_arg("psi0", o.psi0, m);
  }
  BornOptions options;
  options.horizon = o.horizon;
  if (!o.psi1.empty()) options.psi1 = complex_vector_arg("psi1", o.psi1, m);
  const BornReport r = born_convergence(h, psi0, o.ls, options);

  if (report.active()) *report << "l,max_error,link_number,pairs\n";
  bool exact = true;
  for (const BornPoint& p : r.points) {
    if (report.active()) {
      *report << csv_row({format_real(p.l), format_real(p.max_error), format_real(p.link_number),
                          std::to_string(p.pairs)});
    }
    exact = exact && p.max_error <= o.exact_tolerance;
  }
  bool ok = exact;
  if (!exact) {
    ok = r.strictly_decreasing;
    for (double ratio : r.ratios) ok = ok && ratio >= o.ratio_min && ratio <= o.ratio_max;
  }
  if (exact) {
    out << "born: exact agreement at every l\n";
    return kOk;
  }
  out << "born: ratios";
  for (double ratio : r.ratios) out << ' ' << format_real(ratio);
  out << (ok ? ", tolerances met\n" : ", tolerances NOT met\n");
  return ok ? kOk : kToleranceNotMet;
}

int cmd_continuum(const ContinuumOptions& o, std::ostream& out) {
  const HamiltonianSpec spec = resolve_model(o.model);
  const GaussMatrix h = build_hamiltonian(spec);
  Sink report(o.report, nullptr);
  int status = kOk;
  if (o.mode == "closedform") {
    status = continuum_closedform(o, h, out, report);
  } else if (o.mode == "sinh") {
    status = continuum_sinh(o, h, out, report);
  } else if (o.mode == "q1") {
    status = continuum_q1(o, h, out, report);
  } else if (o.mode == "born") {
    status = continuum_born(o, h, out, report);
  } else {
    throw ParseError("mode", "expected closedform, sinh, q1 or born");
  }
  report.finish();
  return status;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Hamiltonian cellular automata: evolution, invariants, cycles and "
               "continuum checks",
               "hamca"};
  app.require_subcommand(1);

  RunOptions run_opts;
  CLI::App* run_cmd = app.add_subcommand("run", "Evolve an initial pair and write a trajectory");
  run_cmd->add_option("--model", run_opts.model, "Built-in label or model file")->required();
  run_cmd->add_option("--psi0", run_opts.psi0, "psi_0 as a literal (\"1+i,0\") or @file");
  run_cmd->add_option("--psi1", run_opts.psi1, "psi_1 as a literal or @file");
  run_cmd->add_option("--basis-pair", run_opts.basis_pair, "Start from (e_k, e_k+1)");
  run_cmd->add_flag("--coincident", run_opts.coincident, "Set psi_1 = psi_0");
  run_cmd->add_option("--random-range", run_opts.random_range,
                      "Random Gaussian-integer entries in [-R, R]");
  run_cmd->add_option("--seed", run_opts.seed, "Seed for --random-range");
  run_cmd->add_option("--steps", run_opts.steps, "Number of updates")->required();
  run_cmd->add_option("--l", run_opts.l, "Discreteness scale recorded in the file");
  run_cmd->add_option("--out", run_opts.out, "Trajectory path (stdout if omitted)");
  run_cmd->add_option("--probe", run_opts.probe,
                      "Stream n,q1,L to this CSV; the trajectory is only kept with --out");

  CheckOptions check_opts;
  CLI::App* check_cmd =
      app.add_subcommand("check", "Verify the recursion and conservation of q_G");
  check_cmd->add_option("--trajectory", check_opts.trajectory, "Trajectory file")->required();
  check_cmd->add_option("--G", check_opts.observable, "identity, H, or an observable file");
  check_cmd->add_option("--report", check_opts.report, "Per-pair CSV report");

  CycleOptions cycle_opts;
  CLI::App* cycle_cmd = app.add_subcommand("cycle", "Measure periods of basis-state orbits");
  cycle_cmd->add_option("--model", cycle_opts.model, "Built-in label or model file")->required();
  cycle_cmd->add_option("--pair", cycle_opts.pair, "neighbours, k:<k> or template:<k>");
  cycle_cmd->add_option("--budget", cycle_opts.budget, "Maximum number of updates");
  cycle_cmd->add_option("--report", cycle_opts.report, "Per-state CSV report");

  ContinuumOptions cont;
  CLI::App* cont_cmd = app.add_subcommand("continuum", "Floating-point continuum analyses");
  cont_cmd->add_option("--model", cont.model, "Built-in label or model file")->required();
  cont_cmd->add_option("--mode", cont.mode, "closedform, sinh, q1 or born")->required();
  cont_cmd->add_option("--report", cont.report, "CSV report");
  cont_cmd->add_option("--seed", cont.seed, "Seed for random initial states");
  cont_cmd->add_option("--pairs", cont.pairs, "closedform: random initial pairs");
  cont_cmd->add_option("--steps", cont.steps, "closedform, sinh: trajectory length");
  cont_cmd->add_option("--singular", cont.singular, "closedform: reject or extend");
  cont_cmd->add_option("--tolerance", cont.tolerance, "closedform: relative tolerance");
  cont_cmd->add_option("--l", cont.l, "sinh: sample spacing");
  cont_cmd->add_option("--windows", cont.windows, "sinh: window half-widths")->delimiter(',');
  cont_cmd->add_option("--points", cont.points, "sinh: off-grid evaluation points");
  cont_cmd->add_option("--sample-tolerance", cont.sample_tolerance,
                       "sinh: residual bound at sample points");
  cont_cmd->add_option("--ls", cont.ls, "q1, born: sample spacings")->delimiter(',');
  cont_cmd->add_option("--omega", cont.omega, "q1: frequency scale of the test signal");
  cont_cmd->add_option("--t", cont.t, "q1: evaluation time");
  cont_cmd->add_option("--window", cont.window, "q1: reconstruction half-width");
  cont_cmd->add_option("--psi0", cont.psi0, "Initial state (complex literal or @file)");
  cont_cmd->add_option("--psi1", cont.psi1, "sinh, born: explicit successor state");
  cont_cmd->add_option("--horizon", cont.horizon, "born: time span of compared pairs");
  cont_cmd->add_option("--ratio-min", cont.ratio_min, "born: lower ratio bound");
  cont_cmd->add_option("--ratio-max", cont.ratio_max, "born: upper ratio bound");
  cont_cmd->add_option("--exact-tolerance", cont.exact_tolerance,
                       "born: error counted as exact agreement");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsage;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    if (*run_cmd) return cmd_run(run_opts, out);
    if (*check_cmd) return cmd_check(check_opts, out);
    if (*cycle_cmd) return cmd_cycle(cycle_opts, out);
    if (*cont_cmd) return cmd_continuum(cont, out);
    return kUsage;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kIoError;
  } catch (const RecursionViolation& e) {
    err << "error: recursion violated at state " << e.step() << ": " << e.what() << '\n';
    return kRecursionViolation;
  } catch (const ConservationViolation& e) {
    err << "error: conservation violated at pair " << e.step() << ": " << e.what() << '\n';
    return kConservationViolation;
  } catch (const NonCommutingError& e) {
    err << "error: " << e.what() << '\n';
    return kNonCommuting;
  } catch (const SingularityError& e) {
    err << "error: " << e.what() << '\n';
    return kSingularity;
  } catch (const OntologicalRegimeError& e) {
    err << "error: " << e.what() << '\n';
    return kOntologicalRegime;
  } catch (const NumericalFailure& e) {
    err << "error: " << e.what() << '\n';
    return kNumericalFailure;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternalError;
  }
}

}  // namespace hamca::cli
