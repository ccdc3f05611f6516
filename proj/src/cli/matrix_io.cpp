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


#include <bit>
#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "qsynth/cli.hpp"
#include "qsynth/errors.hpp"
#include "qsynth/lamat.hpp"

namespace qsynth::cli {
namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double parse_double(std::string_view s, int line) {
  double v = 0.0;
  const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) {
    throw ParseError("line " + std::to_string(line) + ": bad number '" + std::string(s) + "'");
  }
  return v;
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace

std::string format_matrix(const ComplexMatrix& u) {
  std::string out = "unitary " + std::to_string(u.dim()) + "\n";
  char buf[64];
  for (std::size_t r = 0; r < u.dim(); ++r) {
    for (std::size_t c = 0; c < u.dim(); ++c) {
      std::snprintf(buf, sizeof buf, "%.17g,%.17g", u(r, c).real(), u(r, c).imag());
      if (c) out += ' ';
      out += buf;
    }
    out += '\n';
  }
  return out;
}

ComplexMatrix parse_matrix(std::string_view text, double tolerance) {
  std::size_t dim = 0;
  std::size_t row = 0;
  ComplexMatrix m;
  int line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = trim(text.substr(0, nl));
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    const auto fields = split_ws(line);
    if (dim == 0) {
      if (fields.size() != 2 || fields[0] != "unitary") {
        throw ParseError("line " + std::to_string(line_no) + ": expected 'unitary <dim>'");
      }
      const auto d = parse_double(fields[1], line_no);
      if (d < 2 || d != static_cast<double>(static_cast<std::size_t>(d)) ||
          !std::has_single_bit(static_cast<std::size_t>(d))) {
        throw ParseError("line " + std::to_string(line_no) + ": dimension must be a power of two >= 2");
      }
      dim = static_cast<std::size_t>(d);
      m = ComplexMatrix(dim);
      continue;
    }
    if (row == dim) throw ParseError("line " + std::to_string(line_no) + ": extra row");
    if (fields.size() != dim) {
      throw ParseError("line " + std::to_string(line_no) + ": expected " + std::to_string(dim) +
                       " entries, got " + std::to_string(fields.size()));
    }
    for (std::size_t c = 0; c < dim; ++c) {
      const auto comma = fields[c].find(',');
      if (comma == std::string_view::npos) {
        throw ParseError("line " + std::to_string(line_no) + ": entry '" + std::string(fields[c]) +
                         "' is not re,im");
      }
      m(row, c) = cplx(parse_double(fields[c].substr(0, comma), line_no),
                       parse_double(fields[c].substr(comma + 1), line_no));
    }
    ++row;
  }
  if (dim == 0) throw ParseError("missing 'unitary <dim>' header");
  if (row != dim) {
    throw ParseError("expected " + std::to_string(dim) + " rows, got " + std::to_string(row));
  }
  if (!is_unitary(m, tolerance)) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "matrix is not unitary: defect %.3e exceeds tolerance %.3e",
                  unitarity_defect(m), tolerance);
    throw ValidationError(buf);
  }
  return m;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw IoError("read failed for '" + path + "'");
  return ss.str();
}

void write_file_atomic(const std::string& path, const std::string& contents) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write '" + tmp.string() + "'");
    out << contents;
    out.flush();
    if (!out) {
      std::error_code ec;
      fs::remove(tmp, ec);
      throw IoError("write failed for '" + tmp.string() + "'");
    }
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw IoError("cannot rename into '" + path + "'");
  }
}

double default_tolerance(std::size_t dim) {
  if (const char* env = std::getenv("BQD_TOLERANCE")) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end != env && *end == '\0' && v > 0) return v;
    throw RangeError(std::string("BQD_TOLERANCE must be a positive number, got '") + env + "'");
  }
  return boundary_tolerance(dim);
}

}  // namespace qsynth::cli
