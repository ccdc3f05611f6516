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

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "qsynth/complex_matrix.hpp"

namespace qsynth::cli {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitParse = 2;
inline constexpr int kExitValidation = 3;
inline constexpr int kExitRange = 4;
inline constexpr int kExitUnsupported = 5;
inline constexpr int kExitIo = 6;

// Matrix text format:
//   unitary <dim>
//   <re,im> <re,im> ...   (dim rows of dim entries)
// Lines starting with '#' are ignored. Entries print with 17 significant
// digits, which round-trips doubles exactly.
std::string format_matrix(const ComplexMatrix& u);

// Throws ParseError on malformed text or a non power-of-two dim, and
// ValidationError if the matrix is not unitary within `tolerance`.
ComplexMatrix parse_matrix(std::string_view text, double tolerance);

std::string read_file(const std::string& path);
// Writes to a sibling temporary and renames it into place.
void write_file_atomic(const std::string& path, const std::string& contents);

// Default input tolerance for a matrix of this dimension; BQD_TOLERANCE
// overrides it when set.
double default_tolerance(std::size_t dim);

// Runs one command. args[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qsynth::cli
