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

#include "qsynth/cost_model.hpp"

#include <cmath>
#include <sstream>

#include "qsynth/errors.hpp"

namespace qsynth {
namespace {

Rational pow_r(std::int64_t base, int e) {
  std::int64_t v = 1;
  for (int i = 0; i < e; ++i) v *= base;
  return Rational(v);
}

std::int64_t pow_i(std::int64_t base, int e) {
  std::int64_t v = 1;
  for (int i = 0; i < e; ++i) v *= base;
  return v;
}

std::int64_t integral(const Rational& r, const char* what) {
  if (r.denominator() != 1) {
    throw DecompositionError(std::string(what) + " is not an integer: " + to_string(r), 0.0);
  }
  return r.numerator();
}

void check_level(int n, int l) {
  if (n < 2 || l < 2 || l > n) {
    throw RangeError("invalid (n, l) = (" + std::to_string(n) + ", " + std::to_string(l) + ")");
  }
}

int ceil_two_thirds(int n) { return (2 * n + 2) / 3; }

}  // namespace

std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::int64_t cnot_count_bqd(int n, int l) {
  check_level(n, l);
  const Rational v = pow_r(4, n) * (Rational(2) / (3 * pow_r(4, l)) + Rational(1, 2)) -
                     3 * pow_r(2, n - 1) + pow_r(2, l) - Rational(8, 3);
  return integral(v, "BQD CNOT count");
}

std::int64_t onequbit_count_bqd(int n, int l) {
  check_level(n, l);
  const Rational v =
      pow_r(4, n) * (Rational(-2) / (3 * pow_r(4, l)) + Rational(1) / pow_r(2, l) + Rational(1, 2)) -
      3 * pow_r(2, n - 1) + pow_r(2, l) - l - Rational(1, 3);
  return integral(v, "BQD one-qubit count");
}

std::pair<std::int64_t, std::int64_t> closed_form_counts(int n) {
  if (n < 2) throw RangeError("closed forms need n >= 2");
  const int l = ceil_two_thirds(n);
  const Rational c = Rational(1, 2) * pow_r(4, n) - Rational(3, 2) * pow_r(2, n) +
                     Rational(2, 3) * pow_r(4, n - l) + pow_r(2, l) - Rational(8, 3);
  const Rational o = Rational(1, 2) * pow_r(4, n) + pow_r(2, 2 * n - l) -
                     Rational(3, 2) * pow_r(2, n) - Rational(2, 3) * pow_r(4, n - l) +
                     pow_r(2, l) - l - Rational(1, 3);
  return {integral(c, "closed-form CNOT count"), integral(o, "closed-form one-qubit count")};
}

int best_level(int n) {
  if (n < 2) throw RangeError("best level needs n >= 2");
  const int lo = n >= 3 ? 3 : 2;
  int best = lo;
  for (int l = lo + 1; l <= n; ++l) {
    const auto c = cnot_count_bqd(n, l), bc = cnot_count_bqd(n, best);
    if (c < bc || (c == bc && onequbit_count_bqd(n, l) < onequbit_count_bqd(n, best))) best = l;
  }
  return best;
}

std::string asymptotic_formula(CostMethod m) {
  switch (m) {
    case CostMethod::Barenco: return "O(n^3 4^n)";
    case CostMethod::Knill: return "O(n 4^n)";
    case CostMethod::QrDecomposition: return "O(4^n)";
    default: return "";
  }
}

std::int64_t comparison_counts(const CostQuery& q) {
  const int n = q.n;
  if (n < 2) throw RangeError("cost queries need n >= 2");
  const bool cnot = q.metric == GateMetric::Cnot;
  switch (q.method) {
    case CostMethod::Bqd:
      if (!q.l) throw RangeError("BQD cost query needs a level");
      return cnot ? cnot_count_bqd(n, *q.l) : onequbit_count_bqd(n, *q.l);
    case CostMethod::CsdOriginal:
      if (!cnot) throw UnsupportedError("no one-qubit formula for the original CSD");
      return pow_i(4, n) - pow_i(2, n + 1);
    case CostMethod::CsdImproved:
      return integral(cnot ? Rational(1, 2) * pow_r(4, n) - Rational(1, 2) * pow_r(2, n) - 2
                           : Rational(1, 2) * pow_r(4, n) + Rational(1, 2) * pow_r(2, n) - n - 1,
                      "improved CSD count");
    case CostMethod::QsdCited:
      return integral(cnot ? Rational(23, 48) * pow_r(4, n) - Rational(3, 2) * pow_r(2, n) +
                                 Rational(4, 3)
                           : Rational(17, 24) * pow_r(4, n) - Rational(3, 2) * pow_r(2, n) -
                                 Rational(1, 3),
                      "QSD count");
    case CostMethod::QsdConstructed: {
      // Two-qubit base: 3 CNOTs and 7 one-qubit gates. Each level adds two
      // Rz multiplexors and one Ry multiplexor up to a diagonal; two
      // one-qubit gates per level are merged away.
      std::int64_t c = 3, o = 7;
      for (int i = 3; i <= n; ++i) {
        c = 4 * c + 3 * pow_i(2, i - 1) - 1;
        o = 4 * o + 3 * pow_i(2, i - 1) - 2;
      }
      return cnot ? c : o;
    }
    case CostMethod::LowerBound: {
      if (!cnot) throw UnsupportedError("no one-qubit lower bound");
      const std::int64_t num = pow_i(4, n) - 3 * n - 1;
      return (num + 3) / 4;
    }
    case CostMethod::Barenco:
    case CostMethod::Knill:
    case CostMethod::QrDecomposition:
      throw UnsupportedError("only an asymptotic bound " + asymptotic_formula(q.method) +
                             " is known for this method");
  }
  throw UnsupportedError("unknown cost method");
}

Rational lnn_block_cost(int l, int s) {
  if (l < 2) throw RangeError("block cost needs l >= 2");
  const int s_max = (l + 1) / 2;
  if (s < 1 || s > s_max) {
    throw RangeError("s = " + std::to_string(s) + " outside 1.." + std::to_string(s_max));
  }
  const Rational v = Rational(5, 6) * pow_r(2, l) + 2 * l - 6 * s -
                     (l % 2 == 0 ? Rational(1, 3) : Rational(5, 3));
  if (v < 0) {
    throw RangeError("block cost at (l, s) = (" + std::to_string(l) + ", " + std::to_string(s) +
                     ") is negative: " + to_string(v));
  }
  return v;
}

std::pair<Rational, Rational> lnn_mux_costs(int n) {
  if (n < 2) throw RangeError("multiplexor cost needs n >= 2");
  const bool even = n % 2 == 0;
  const Rational cb =
      Rational(5, 6) * pow_r(2, n) + 2 * n - (even ? Rational(19, 3) : Rational(23, 3));
  const Rational cr =
      Rational(5, 6) * pow_r(2, n) + 3 * n - (even ? Rational(22, 3) : Rational(23, 3));
  return {cb, cr};
}

Rational lnn_diagonal_cost(int l) {
  if (l < 2) throw RangeError("diagonal cost needs l >= 2");
  const Rational base = Rational(5, 3) * pow_r(2, l) + Rational(3, 2) * l * l;
  if (l % 2 == 0) return base - (Rational(35, 6) * l - Rational(41, 3));
  return base - (Rational(37, 6) * l - Rational(42, 3));
}

LnnReport lnn_inflation_report(int n, int l) {
  check_level(n, l);
  LnnReport r;
  r.n = n;
  r.l = l;
  Rational total = pow_r(4, n - l) * (pow_r(2, l) - 1) * lnn_block_cost(l, 1);
  for (int i = l + 1; i <= n; ++i) {
    auto [cb, cr] = lnn_mux_costs(i);
    total += pow_r(4, n - i) * (cb + 2 * cr);
  }
  total += lnn_diagonal_cost(l);
  r.lnn_cnots = total;
  r.unconstrained_cnots = cnot_count_bqd(n, l);
  r.ratio = boost::rational_cast<double>(total) / double(r.unconstrained_cnots);
  r.within_bound = r.ratio <= 5.0 / 3.0 + 1e-9;
  return r;
}

std::vector<TableRow> table_rows() {
  std::vector<TableRow> rows;
  for (int n = 4; n <= 12; ++n)
    for (int l = 3; l <= n; ++l) rows.push_back({n, l, cnot_count_bqd(n, l), onequbit_count_bqd(n, l)});
  for (int n = 4; n <= 12; ++n) {
    rows.push_back({n, 0, comparison_counts({n, std::nullopt, CostMethod::QsdCited, GateMetric::Cnot}),
                    comparison_counts({n, std::nullopt, CostMethod::QsdCited, GateMetric::OneQubit})});
  }
  return rows;
}

TableSet generate_tables(bool best_only) {
  std::ostringstream os;
  os << "n,l,cnot,one_qubit,total\n";
  for (const TableRow& r : table_rows()) {
    if (best_only && r.l != 0 && r.l != best_level(r.n)) continue;
    os << r.n << ',' << (r.l == 0 ? std::string("qsd") : std::to_string(r.l)) << ',' << r.cnot
       << ',' << r.one_qubit << ',' << r.total() << '\n';
  }
  const std::string csv = os.str();
  return {csv, csv, csv};
}

std::string lnn_table_csv() {
  std::ostringstream os;
  os << "# kind,parameters,cnots\n";
  for (int l = 3; l <= 12; ++l) {
    for (int s = 1; s <= (l + 1) / 2; ++s) {
      Rational v;
      try {
        v = lnn_block_cost(l, s);
      } catch (const RangeError&) {
        continue;  // negative estimate, not a cost
      }
      os << "block,l=" << l << ",s=" << s << ',' << to_string(v) << '\n';
    }
  }
  for (int n = 2; n <= 12; ++n) {
    auto [cb, cr] = lnn_mux_costs(n);
    os << "mux_u2,n=" << n << ',' << to_string(cb) << '\n';
    os << "mux_rz,n=" << n << ',' << to_string(cr) << '\n';
  }
  for (int l = 2; l <= 12; ++l) os << "delta,l=" << l << ',' << to_string(lnn_diagonal_cost(l)) << '\n';
  for (int n = 4; n <= 12; ++n) {
    for (int l = 3; l <= n; ++l) {
      const LnnReport r = lnn_inflation_report(n, l);
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.6f", r.ratio);
      os << "ratio,n=" << n << ",l=" << l << ',' << to_string(r.lnn_cnots) << ',' << buf << '\n';
    }
  }
  return os.str();
}

}  // namespace qsynth
