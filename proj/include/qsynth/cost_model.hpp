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

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

namespace qsynth {

using Rational = boost::rational<std::int64_t>;

enum class CostMethod {
  Bqd,
  CsdImproved,
  CsdOriginal,
  QsdCited,        // closed form
  QsdConstructed,  // recursion realized by synth_qsd
  LowerBound,
  Barenco,         // asymptotic only
  Knill,           // asymptotic only
  QrDecomposition  // asymptotic only
};

enum class GateMetric { Cnot, OneQubit };

struct CostQuery {
  int n = 2;
  std::optional<int> l;
  CostMethod method = CostMethod::Bqd;
  GateMetric metric = GateMetric::Cnot;
};

// BQD counts at level l (2 <= l <= n); RangeError otherwise.
std::int64_t cnot_count_bqd(int n, int l);
std::int64_t onequbit_count_bqd(int n, int l);

// Counts at l = ceil(2n/3) from the single-expression forms.
std::pair<std::int64_t, std::int64_t> closed_form_counts(int n);

// Level minimizing CNOTs, ties broken by fewer one-qubit gates; l >= 3 for
// n >= 3.
int best_level(int n);

// Non-BQD methods. Asymptotic-only methods throw UnsupportedError; Bqd
// requires q.l and forwards to the functions above.
std::int64_t comparison_counts(const CostQuery& q);
// Big-O string for the asymptotic-only methods.
std::string asymptotic_formula(CostMethod m);

// Nearest-neighbour CNOT estimates.
Rational lnn_block_cost(int l, int s);
std::pair<Rational, Rational> lnn_mux_costs(int n);  // (block-diagonal U(2), Rz)
Rational lnn_diagonal_cost(int l);

struct LnnReport {
  int n = 0;
  int l = 0;
  Rational lnn_cnots;
  std::int64_t unconstrained_cnots = 0;
  double ratio = 0.0;
  bool within_bound = false;  // ratio <= 5/3 + 1e-9
};

// Aggregates the per-gate estimates over the BQD structure: 4^(n-l) leaves
// of 2^l - 1 multiplexors each (s = 1), one Ry and two Rz multiplexors per
// recursion node, and the terminal diagonal.
LnnReport lnn_inflation_report(int n, int l);

struct TableRow {
  int n = 0;
  int l = 0;  // 0 for the QSD row
  std::int64_t cnot = 0;
  std::int64_t one_qubit = 0;
  std::int64_t total() const { return cnot + one_qubit; }
};

// BQD rows for 4 <= n <= 12, 3 <= l <= n, then the QSD rows.
std::vector<TableRow> table_rows();

struct TableSet {
  std::string cnot_csv;
  std::string one_qubit_csv;
  std::string total_csv;
};

// CSV with header n,l,cnot,one_qubit,total; QSD rows carry l = qsd. The
// three tables share one schema, so each string carries every metric.
// `best_only` keeps the chosen level per n plus the QSD rows.
TableSet generate_tables(bool best_only = false);
std::string lnn_table_csv();

std::string to_string(const Rational& r);

}  // namespace qsynth
