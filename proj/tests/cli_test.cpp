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


#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "qsynth/circuit.hpp"
#include "qsynth/cli.hpp"
#include "qsynth/errors.hpp"
#include "qsynth/lamat.hpp"

namespace qsynth::cli {
namespace {

namespace fs = std::filesystem;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "qsynth");
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("qsynth_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

TEST(MatrixIoTest, RoundTripIsBitExact) {
  const ComplexMatrix u = haar_random_unitary(3, 1);
  const ComplexMatrix back = parse_matrix(format_matrix(u), 1e-8);
  EXPECT_EQ(back, u);
  EXPECT_TRUE(is_unitary(back, 1e-12));
}

TEST(MatrixIoTest, CommentsAndWhitespace) {
  const ComplexMatrix m = parse_matrix("# header comment\nunitary 2\n\n0,0  1,0\n# row\n1,0 0,0\n", 1e-8);
  EXPECT_EQ(m(0, 1), cplx(1.0));
  EXPECT_EQ(m(1, 0), cplx(1.0));
}

TEST(MatrixIoTest, Errors) {
  EXPECT_THROW(parse_matrix("unitary 3\n", 1e-8), ParseError);
  EXPECT_THROW(parse_matrix("matrix 2\n", 1e-8), ParseError);
  EXPECT_THROW(parse_matrix("unitary 2\n1,0 0,0\n", 1e-8), ParseError);
  EXPECT_THROW(parse_matrix("unitary 2\n1,0 0\n0,0 1,0\n", 1e-8), ParseError);
  EXPECT_THROW(parse_matrix("unitary 2\n1,0 x,0\n0,0 1,0\n", 1e-8), ParseError);
  EXPECT_THROW(parse_matrix("unitary 2\n1,0 1,0\n0,0 1,0\n", 1e-8), ValidationError);
}

TEST_F(CliTest, RandomIsDeterministicAndParses) {
  ASSERT_EQ(run_cli({"random", "-n", "3", "--seed", "1", "--out", path("a.mat")}).code, kExitOk);
  ASSERT_EQ(run_cli({"random", "-n", "3", "--seed", "1", "--out", path("b.mat")}).code, kExitOk);
  EXPECT_EQ(read_file(path("a.mat")), read_file(path("b.mat")));
  EXPECT_TRUE(is_unitary(parse_matrix(read_file(path("a.mat")), 1e-8), 1e-12));
  EXPECT_FALSE(fs::exists(path("a.mat.tmp")));
}

TEST_F(CliTest, RandomRejectsLargeRegister) {
  EXPECT_EQ(run_cli({"random", "-n", "13"}).code, kExitRange);
}

TEST_F(CliTest, RandomIoError) {
  EXPECT_EQ(run_cli({"random", "-n", "2", "--out", path("missing/dir/x.mat")}).code, kExitIo);
}

TEST_F(CliTest, SynthDefaultLevelReport) {
  ASSERT_EQ(run_cli({"random", "-n", "4", "--seed", "3", "--out", path("u4.mat")}).code, kExitOk);
  const Result r = run_cli({"synth", "--method", "bqd", "--in", path("u4.mat"), "--verify", "--format", "counts"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("level=3"), std::string::npos);
  EXPECT_NE(r.out.find("cnot=112"), std::string::npos);
  EXPECT_NE(r.out.find("one_qubit=138"), std::string::npos);
  const auto pos = r.out.find("error=");
  ASSERT_NE(pos, std::string::npos);
  EXPECT_LE(std::stod(r.out.substr(pos + 6)), 1e-8 * 4);
}

TEST_F(CliTest, SynthExplicitLevelWritesQasm) {
  ASSERT_EQ(run_cli({"random", "-n", "4", "--seed", "3", "--out", path("u4.mat")}).code, kExitOk);
  const Result r = run_cli({"synth", "--method", "bqd", "--level", "4", "--in", path("u4.mat"), "--out", path("o.qasm")});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("cnot=118"), std::string::npos);
  const Circuit c = parse_qasm(read_file(path("o.qasm")));
  EXPECT_EQ(count_gates(c).cnot, 118u);
  EXPECT_LE(phase_invariant_distance(circuit_matrix(c), parse_matrix(read_file(path("u4.mat")), 1e-8)), 1e-8 * 4);
}

TEST_F(CliTest, SynthIdentity) {
  std::ofstream(path("id.mat")) << format_matrix(ComplexMatrix::identity(8));
  const Result r = run_cli({"synth", "--method", "qsd", "--in", path("id.mat"), "--verify", "--format", "csv"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.out.rfind("method,n,l,cnot,one_qubit,total,error\nqsd,3,-,", 0), 0u);
  const auto comma = r.out.rfind(',');
  EXPECT_LE(std::stod(r.out.substr(comma + 1)), 1e-10);
}

TEST_F(CliTest, SynthIsDeterministic) {
  ASSERT_EQ(run_cli({"random", "-n", "3", "--seed", "9", "--out", path("u.mat")}).code, kExitOk);
  const Result a = run_cli({"synth", "--in", path("u.mat")});
  const Result b = run_cli({"synth", "--in", path("u.mat")});
  ASSERT_EQ(a.code, kExitOk);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.err, b.err);
}

TEST_F(CliTest, SynthExitCodes) {
  std::ofstream(path("bad.mat")) << "unitary 3\n";
  EXPECT_EQ(run_cli({"synth", "--in", path("bad.mat")}).code, kExitParse);
  std::ofstream(path("nu.mat")) << "unitary 2\n1,0 1,0\n0,0 1,0\n";
  EXPECT_EQ(run_cli({"synth", "--in", path("nu.mat")}).code, kExitValidation);
  ASSERT_EQ(run_cli({"random", "-n", "3", "--out", path("u.mat")}).code, kExitOk);
  EXPECT_EQ(run_cli({"synth", "--in", path("u.mat"), "--level", "5"}).code, kExitRange);
  EXPECT_EQ(run_cli({"synth", "--method", "qsd", "--level", "2", "--in", path("u.mat")}).code, kExitRange);
  EXPECT_EQ(run_cli({"synth", "--in", path("nope.mat")}).code, kExitIo);
  EXPECT_EQ(run_cli({"synth", "--in", path("u.mat"), "--out", path("missing/x.qasm")}).code, kExitIo);
  EXPECT_FALSE(fs::exists(path("missing")));
}

TEST_F(CliTest, ToleranceFlagAndEnvironment) {
  // Off by 1e-6 from unitary: rejected at the default tolerance.
  std::ofstream(path("near.mat")) << "unitary 4\n1.000001,0 0,0 0,0 0,0\n0,0 1,0 0,0 0,0\n"
                                    << "0,0 0,0 0,0 1,0\n0,0 0,0 1,0 0,0\n";
  EXPECT_EQ(run_cli({"synth", "--in", path("near.mat")}).code, kExitValidation);
  const Result relaxed = run_cli({"synth", "--in", path("near.mat"), "--tolerance", "1e-3", "--format", "counts"});
  EXPECT_EQ(relaxed.code, kExitOk) << relaxed.err;
  EXPECT_NE(relaxed.out.find("error="), std::string::npos);
  ::setenv("BQD_TOLERANCE", "1e-3", 1);
  const int code = run_cli({"synth", "--in", path("near.mat"), "--no-verify"}).code;
  ::unsetenv("BQD_TOLERANCE");
  EXPECT_EQ(code, kExitOk);
}

TEST_F(CliTest, SingleQubitInput) {
  ASSERT_EQ(run_cli({"random", "-n", "1", "--out", path("u1.mat")}).code, kExitOk);
  const Result r = run_cli({"synth", "--in", path("u1.mat"), "--format", "counts"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("level=- cnot=0"), std::string::npos);
  EXPECT_EQ(run_cli({"synth", "--in", path("u1.mat"), "--level", "2"}).code, kExitRange);
}

TEST(CliCountTest, Examples) {
  Result r = run_cli({"count", "--method", "bqd", "-n", "6", "--all-levels"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("l=4 cnot=1976"), std::string::npos);
  r = run_cli({"count", "--method", "qsd-cited", "-n", "3"});
  EXPECT_EQ(r.out.rfind("cnot=20", 0), 0u);
  r = run_cli({"count", "--method", "lower-bound", "-n", "10"});
  EXPECT_EQ(r.out, "cnot=262137\n");
  EXPECT_EQ(run_cli({"count", "--method", "barenco", "-n", "4"}).code, kExitUnsupported);
  EXPECT_EQ(run_cli({"count", "--method", "bogus", "-n", "4"}).code, kExitUnsupported);
  EXPECT_EQ(run_cli({"count", "--method", "bqd", "-n", "4", "-l", "5"}).code, kExitRange);
}

TEST(CliTableTest, Examples) {
  Result r = run_cli({"table", "3"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("\n4,4,118,131,249\n"), std::string::npos);
  r = run_cli({"table", "1"});
  EXPECT_NE(r.out.find("\n12,qsd,8032940,"), std::string::npos);
  r = run_cli({"table", "lnn"});
  EXPECT_NE(r.out.find("delta,l=4,41\n"), std::string::npos);
  EXPECT_EQ(run_cli({"table", "9"}).code, kExitUnsupported);
}

TEST(CliBinaryTest, ExitCodePropagates) {
  const std::string cmd = std::string(QSYNTH_TOOL_PATH) + " random -n 13 > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  ASSERT_TRUE(WIFEXITED(status));
  EXPECT_EQ(WEXITSTATUS(status), kExitRange);
}

}  // namespace
}  // namespace qsynth::cli
