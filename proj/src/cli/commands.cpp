// Copyright 2026 The qsynth Authors
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


#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "qsynth/cli.hpp"
#include "qsynth/cost_model.hpp"
#include "qsynth/errors.hpp"
#include "qsynth/lamat.hpp"
#include "qsynth/synthesis.hpp"

namespace qsynth::cli {
namespace {

// Verification builds the full 2^n matrix, so it is on by default only up
// to this many qubits.
constexpr int kVerifyDefaultMax = 8;

struct SynthOptions {
  std::string method = "bqd";
  std::optional<int> level;
  std::string in;
  std::string out;
  std::optional<bool> verify;
  std::string format = "qasm";
  std::optional<double> tolerance;
  bool timing = false;
};

struct CountOptions {
  std::string method = "bqd";
  int n = 0;
  std::optional<int> l;
  bool all_levels = false;
};

struct RandomOptions {
  int n = 0;
  std::uint64_t seed = 0;
  std::string out;
};

std::string fmt_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

int qubits_of(std::size_t dim) {
  int n = 0;
  while ((std::size_t{1} << n) < dim) ++n;
  return n;
}

int cmd_synth(const SynthOptions& o, std::ostream& out, std::ostream& err) {
  SynthMethod method;
  if (o.method == "bqd") {
    method.kind = MethodKind::Bqd;
  } else if (o.method == "qsd") {
    method.kind = MethodKind::Qsd;
  } else if (o.method == "csd") {
    method.kind = MethodKind::CsdImproved;
  } else {
    throw UnsupportedError("unknown synthesis method '" + o.method + "'");
  }
  if (o.level && method.kind != MethodKind::Bqd) {
    throw RangeError("--level applies to the bqd method only");
  }
  if (o.tolerance && !(*o.tolerance > 0)) throw RangeError("--tolerance must be positive");

  const std::string text = read_file(o.in);
  // The header fixes the dimension; parse once without the unitarity check
  // to learn it, then again with the matching default tolerance.
  ComplexMatrix u;
  {
    const ComplexMatrix raw = parse_matrix(text, std::numeric_limits<double>::infinity());
    const double tol = o.tolerance ? *o.tolerance : default_tolerance(raw.dim());
    if (!is_unitary(raw, tol)) {
      throw ValidationError("matrix is not unitary: defect " + fmt_double(unitarity_defect(raw)) +
                            " exceeds tolerance " + fmt_double(tol));
    }
    // A relaxed tolerance admits inputs the synthesis routines would reject;
    // those are replaced by their nearest unitary.
    u = unitarity_defect(raw) <= boundary_tolerance(raw.dim()) ? raw : nearest_unitary(raw);
  }
  const int n = qubits_of(u.dim());
  if (method.kind == MethodKind::Bqd && n == 1 && o.level) {
    throw RangeError("a one-qubit input has no decomposition level");
  }
  if (method.kind == MethodKind::Bqd && n >= 2) {
    method.level = o.level ? *o.level : choose_level(n);
    if (method.level < 2 || method.level > n) {
      throw RangeError("level " + std::to_string(method.level) + " outside 2.." + std::to_string(n));
    }
  }

  const auto t0 = std::chrono::steady_clock::now();
  const Circuit c = synthesize(u, method);
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const GateCounts counts = count_gates(c);

  const bool verify = o.verify ? *o.verify : n <= kVerifyDefaultMax;
  std::optional<double> error;
  if (verify) error = phase_invariant_distance(circuit_matrix(c), u);

  const std::string level_str =
      method.level > 0 ? std::to_string(method.level) : std::string("-");
  std::ostringstream report;
  if (o.format == "csv") {
    report << "method,n,l,cnot,one_qubit,total,error\n"
           << method_name(method.kind) << ',' << n << ',' << level_str << ',' << counts.cnot
           << ',' << counts.one_qubit << ',' << counts.total << ','
           << (error ? fmt_double(*error) : std::string()) << '\n';
  } else {
    report << "method=" << method_name(method.kind) << " n=" << n << " level=" << level_str
           << " cnot=" << counts.cnot << " one_qubit=" << counts.one_qubit
           << " total=" << counts.total;
    if (error) report << " error=" << fmt_double(*error);
    if (o.timing) report << " seconds=" << fmt_double(seconds);
    report << '\n';
  }

  const double bound = internal_tolerance(u.dim()) * 10.0;
  if (error && *error > bound) {
    err << report.str();
    throw DecompositionError("reconstruction error exceeds " + fmt_double(bound), *error);
  }

  const std::string qasm = export_qasm(c);
  if (!o.out.empty()) {
    write_file_atomic(o.out, qasm);
    out << report.str();
  } else if (o.format == "qasm") {
    out << qasm;
    err << report.str();
  } else {
    out << report.str();
  }
  return kExitOk;
}

CostMethod parse_cost_method(const std::string& m) {
  if (m == "bqd") return CostMethod::Bqd;
  if (m == "csd") return CostMethod::CsdImproved;
  if (m == "csd-original") return CostMethod::CsdOriginal;
  if (m == "qsd-cited") return CostMethod::QsdCited;
  if (m == "qsd") return CostMethod::QsdConstructed;
  if (m == "lower-bound") return CostMethod::LowerBound;
  if (m == "barenco") return CostMethod::Barenco;
  if (m == "knill") return CostMethod::Knill;
  if (m == "qr") return CostMethod::QrDecomposition;
  throw UnsupportedError("unknown cost method '" + m + "'");
}

int cmd_count(const CountOptions& o, std::ostream& out) {
  const CostMethod m = parse_cost_method(o.method);
  if (m == CostMethod::Bqd) {
    if (o.n < 2) throw RangeError("-n must be at least 2");
    auto line = [&](int l) {
      out << "l=" << l << " cnot=" << cnot_count_bqd(o.n, l)
          << " one_qubit=" << onequbit_count_bqd(o.n, l) << '\n';
    };
    if (o.all_levels) {
      for (int l = 2; l <= o.n; ++l) line(l);
    } else {
      line(o.l ? *o.l : choose_level(o.n));
    }
    return kExitOk;
  }
  if (o.l || o.all_levels) throw RangeError("levels apply to the bqd method only");
  const std::int64_t cnot = comparison_counts({o.n, std::nullopt, m, GateMetric::Cnot});
  std::optional<std::int64_t> one_qubit;
  try {
    one_qubit = comparison_counts({o.n, std::nullopt, m, GateMetric::OneQubit});
  } catch (const UnsupportedError&) {
  }
  out << "cnot=" << cnot;
  if (one_qubit) out << " one_qubit=" << *one_qubit;
  out << '\n';
  return kExitOk;
}

int cmd_table(const std::string& which, bool best, std::ostream& out) {
  if (which == "lnn") {
    out << lnn_table_csv();
    return kExitOk;
  }
  const TableSet t = generate_tables(best);
  if (which == "1") {
    out << t.cnot_csv;
  } else if (which == "2") {
    out << t.one_qubit_csv;
  } else if (which == "3") {
    out << t.total_csv;
  } else {
    throw UnsupportedError("unknown table '" + which + "'");
  }
  return kExitOk;
}

int cmd_random(const RandomOptions& o, std::ostream& out) {
  const std::string text = format_matrix(haar_random_unitary(o.n, o.seed));
  if (o.out.empty()) {
    out << text;
  } else {
    write_file_atomic(o.out, text);
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Unitary to quantum circuit synthesis", "qsynth"};
  app.require_subcommand(1);

  SynthOptions so;
  auto* synth = app.add_subcommand("synth", "Synthesize a circuit from a matrix file");
  synth->add_option("--method", so.method, "bqd, qsd or csd")->capture_default_str();
  synth->add_option("--level", so.level, "BQD decomposition level (default ceil(2n/3))");
  synth->add_option("--in", so.in, "Input matrix file")->required();
  synth->add_option("--out", so.out, "QASM output path");
  synth->add_flag("--verify,!--no-verify", so.verify, "Check the circuit matrix against the input");
  synth->add_option("--format", so.format, "qasm, counts or csv")
      ->check(CLI::IsMember({"qasm", "counts", "csv"}))
      ->capture_default_str();
  synth->add_option("--tolerance", so.tolerance, "Unitarity tolerance for the input");
  synth->add_flag("--timing", so.timing, "Add wall-clock seconds to the report");

  CountOptions co;
  auto* count = app.add_subcommand("count", "Print gate-count formulas");
  count->add_option("--method", co.method)->capture_default_str();
  count->add_option("-n", co.n, "Qubit count")->required();
  count->add_option("-l", co.l, "BQD level");
  count->add_flag("--all-levels", co.all_levels, "Sweep every level 2..n");

  std::string which;
  bool best = false;
  auto* table = app.add_subcommand("table", "Print a cost table as CSV");
  table->add_option("which", which, "1, 2, 3 or lnn")->required();
  table->add_flag("--best", best, "Keep only the chosen level per n");

  RandomOptions ro;
  auto* random = app.add_subcommand("random", "Write a Haar-random unitary");
  random->add_option("-n", ro.n, "Qubit count")->required();
  random->add_option("--seed", ro.seed)->capture_default_str();
  random->add_option("--out", ro.out, "Output path (stdout if omitted)");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (*synth) return cmd_synth(so, out, err);
    if (*count) return cmd_count(co, out);
    if (*table) return cmd_table(which, best, out);
    if (*random) return cmd_random(ro, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const ValidationError& e) {
    err << "validation error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const RangeError& e) {
    err << "range error: " << e.what() << '\n';
    return kExitRange;
  } catch (const DimensionError& e) {
    err << "range error: " << e.what() << '\n';
    return kExitRange;
  } catch (const UnsupportedError& e) {
    err << "unsupported: " << e.what() << '\n';
    return kExitUnsupported;
  } catch (const IoError& e) {
    err << "i/o error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitFailure;
}

}  // namespace qsynth::cli
