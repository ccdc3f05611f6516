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

// OpenQASM 2.0 subset writer and reader.
//
// Gate mapping (register index = wire - 1):
//   RZ(t)  -> rz(t)    with rz(t) = diag(e^{-it/2}, e^{it/2})
//   RY(t)  -> ry(-t)   textbook ry, which is our RY at the negated angle
//   RX(t)  -> rx(-t)
//   U2(d, a, b, l) -> u3(b, a + pi, l + pi), where
//       u3(t, p, m) = [[cos t/2, -e^{im} sin t/2], [e^{ip} sin t/2, e^{i(p+m)} cos t/2]]
//     and the leftover scalar e^{i(d - (a + l)/2)} is folded into the phase.
//   CNOT(c, t) -> cx q[c-1],q[t-1]
// The circuit's total global phase is written as a `// global_phase <radians>`
// comment; the reader restores it.

#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "qsynth/circuit.hpp"
#include "qsynth/errors.hpp"

namespace qsynth {
namespace {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

double parse_double(std::string_view s, std::size_t line) {
  s = trim(s);
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw ParseError("line " + std::to_string(line) + ": bad number '" + std::string(s) + "'");
  }
  return v;
}

int parse_qubit(std::string_view s, std::size_t line) {
  s = trim(s);
  if (s.size() < 4 || s.substr(0, 2) != "q[" || s.back() != ']') {
    throw ParseError("line " + std::to_string(line) + ": bad qubit operand '" +
                     std::string(s) + "'");
  }
  s = s.substr(2, s.size() - 3);
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || v < 0) {
    throw ParseError("line " + std::to_string(line) + ": bad qubit index");
  }
  return v + 1;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      out.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  return out;
}

}  // namespace

std::string export_qasm(const Circuit& c) {
  std::string body;
  double phase = c.global_phase();
  for (const Gate& g : c.gates()) {
    const std::string q = "q[" + std::to_string(g.target - 1) + "]";
    switch (g.kind) {
      case GateKind::RZ: body += "rz(" + fmt(g.angle) + ") " + q + ";\n"; break;
      case GateKind::RY: body += "ry(" + fmt(-g.angle) + ") " + q + ";\n"; break;
      case GateKind::RX: body += "rx(" + fmt(-g.angle) + ") " + q + ";\n"; break;
      case GateKind::U2: {
        const auto& p = g.params;
        body += "u3(" + fmt(p[2]) + "," + fmt(p[1] + M_PI) + "," + fmt(p[3] + M_PI) + ") " +
                q + ";\n";
        phase += p[0] - (p[1] + p[3]) / 2;
        break;
      }
      case GateKind::CNOT:
        body += "cx q[" + std::to_string(g.control - 1) + "]," + q + ";\n";
        break;
    }
  }
  std::string out = "OPENQASM 2.0;\n";
  out += "// global_phase " + fmt(phase) + "\n";
  out += "qreg q[" + std::to_string(c.n()) + "];\n";
  out += body;
  return out;
}

Circuit parse_qasm(std::string_view text) {
  std::vector<std::string_view> lines = split(text, '\n');
  int n = 0;
  double phase = 0.0;
  std::vector<Gate> gates;
  bool saw_header = false;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::size_t lineno = i + 1;
    std::string_view line = trim(lines[i]);
    if (line.empty()) continue;
    if (line.substr(0, 2) == "//") {
      std::string_view rest = trim(line.substr(2));
      constexpr std::string_view kTag = "global_phase";
      if (rest.substr(0, kTag.size()) == kTag) phase = parse_double(rest.substr(kTag.size()), lineno);
      continue;
    }
    if (line.back() != ';') throw ParseError("line " + std::to_string(lineno) + ": missing ';'");
    line = trim(line.substr(0, line.size() - 1));
    if (line.substr(0, 8) == "OPENQASM") {
      saw_header = true;
      continue;
    }
    if (line.substr(0, 5) == "qreg ") {
      n = parse_qubit(line.substr(5), lineno) - 1;
      if (n < 1) throw ParseError("empty register");
      continue;
    }
    if (n == 0) throw ParseError("line " + std::to_string(lineno) + ": gate before qreg");
    const std::size_t sp = line.find(' ');
    if (sp == std::string_view::npos) {
      throw ParseError("line " + std::to_string(lineno) + ": missing operands");
    }
    std::string_view head = line.substr(0, sp);
    std::string_view operands = line.substr(sp + 1);
    std::string_view name = head;
    std::vector<double> args;
    if (const std::size_t lp = head.find('('); lp != std::string_view::npos) {
      if (head.back() != ')') throw ParseError("line " + std::to_string(lineno) + ": unbalanced parentheses");
      name = head.substr(0, lp);
      for (std::string_view a : split(head.substr(lp + 1, head.size() - lp - 2), ',')) {
        args.push_back(parse_double(a, lineno));
      }
    }
    auto need_args = [&](std::size_t k) {
      if (args.size() != k) {
        throw ParseError("line " + std::to_string(lineno) + ": " + std::string(name) +
                         " expects " + std::to_string(k) + " parameter(s)");
      }
    };
    Gate g;
    if (name == "cx") {
      need_args(0);
      auto ops = split(operands, ',');
      if (ops.size() != 2) throw ParseError("line " + std::to_string(lineno) + ": cx needs two qubits");
      g = Gate::cnot(parse_qubit(ops[0], lineno), parse_qubit(ops[1], lineno));
    } else {
      const int q = parse_qubit(operands, lineno);
      if (name == "rz") {
        need_args(1);
        g = Gate::rz(q, args[0]);
      } else if (name == "ry") {
        need_args(1);
        g = Gate::ry(q, -args[0]);
      } else if (name == "rx") {
        need_args(1);
        g = Gate::rx(q, -args[0]);
      } else if (name == "u3") {
        need_args(3);
        ZyzResult z;
        z.beta = args[0];
        z.alpha = args[1] - M_PI;
        z.gamma_angle = args[2] - M_PI;
        z.delta = (z.alpha + z.gamma_angle) / 2;
        g = Gate::u2(q, z);
      } else {
        throw ParseError("line " + std::to_string(lineno) + ": unsupported gate '" +
                         std::string(name) + "'");
      }
    }
    try {
      validate_gate(g, n);
    } catch (const RangeError& e) {
      throw ParseError("line " + std::to_string(lineno) + ": " + e.what());
    }
    gates.push_back(g);
  }
  if (!saw_header) throw ParseError("missing OPENQASM header");
  if (n == 0) throw ParseError("missing qreg declaration");
  Circuit c(n);
  for (const Gate& g : gates) c.add(g);
  c.set_global_phase(phase);
  return c;
}

}  // namespace qsynth
