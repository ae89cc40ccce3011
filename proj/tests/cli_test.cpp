// Copyright 2026 The Authors.
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

#include <fstream>
#include <sstream>
#include <string>

#include "genspike/cli.hpp"
#include "test_support.hpp"

namespace genspike::cli {
namespace {

struct Outcome {
  int code = -1;
  std::string out;
  std::string err;
};

template <class F>
Outcome capture(F&& f) {
  std::ostringstream out, err;
  Outcome r;
  r.code = f(out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

Input seed(const std::string& name) { return Input{"", name}; }

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = genspike::testing::scratch_dir("cli");
    ::setenv("GENSPIKE_COUNTEREXAMPLE_DIR", (dir_ / "cx").c_str(), 1);
  }
  void TearDown() override { ::unsetenv("GENSPIKE_COUNTEREXAMPLE_DIR"); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  void write(const std::string& name, const std::string& text) const {
    std::ofstream(path(name)) << text;
  }
  std::filesystem::path dir_;
};

TEST_F(CliTest, BuildToStdout) {
  const Outcome r = capture([](auto& o, auto& e) { return cmd_build(1, 2, 3, "", o, e); });
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.out.rfind("matroid v1\nn 6\nrank 2\n", 0), 0u);
  EXPECT_NE(r.out.find("spike s=1 t=2\n0 1\n2 3\n4 5\n"), std::string::npos);
  EXPECT_NE(r.out.find("step 1 op=quotient s=1 t=2 rank=2 blocker=free\n"), std::string::npos);
}

TEST_F(CliTest, BuildToFilesThenVerify) {
  const std::string prefix = path("s23");
  const Outcome b = capture([&](auto& o, auto& e) { return cmd_build(2, 3, 7, prefix, o, e); });
  ASSERT_EQ(b.code, kOk) << b.err;
  EXPECT_NE(b.out.find("built s=2 t=3 m=7 n=14 rank=6"), std::string::npos);

  const Outcome v = capture([&](auto& o, auto& e) {
    return cmd_verify(Input{prefix + ".mtx", ""}, prefix + ".cert", o, e);
  });
  EXPECT_EQ(v.code, kOk) << v.out << v.err;
  EXPECT_NE(v.out.find("check=certificate status=pass"), std::string::npos);
  EXPECT_NE(v.out.find("check=rank status=pass witness=- expected=6 actual=6"), std::string::npos);
  EXPECT_NE(v.out.find("check=connectivity status=pass witness=- expected=3"), std::string::npos);
  EXPECT_NE(v.out.find("check=coechidna-implication status=pass"), std::string::npos);
}

TEST_F(CliTest, BuildRejectsShortOrder) {
  const Outcome r = capture([](auto& o, auto& e) { return cmd_build(2, 2, 3, "", o, e); });
  EXPECT_EQ(r.code, kUsage);
  EXPECT_NE(r.err.find("order m >= s+t"), std::string::npos);
}

TEST_F(CliTest, CheckReportsWitness) {
  Outcome r = capture([](auto& o, auto& e) { return cmd_check(seed("k4"), 2, 4, 2, 4, o, e); });
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.out, "property=holds\n");
  r = capture([](auto& o, auto& e) { return cmd_check(seed("u2_4"), 1, 2, 2, 4, o, e); });
  EXPECT_EQ(r.code, kNegative);
  EXPECT_EQ(r.out, "property=fails kind=circuit witness=0\n");
  r = capture([](auto& o, auto& e) { return cmd_check(seed("u2_4"), 3, 2, 2, 4, o, e); });
  EXPECT_EQ(r.code, kUsage);
}

TEST_F(CliTest, RecognizeAndOracle) {
  Outcome r = capture([](auto& o, auto& e) { return cmd_recognize(seed("k4"), 2, 2, o, e); });
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.out, "spike s=2 t=2\n0 5\n1 4\n2 3\n");
  r = capture([](auto& o, auto& e) { return cmd_recognize(seed("u2_4"), 2, 2, o, e); });
  EXPECT_EQ(r.code, kNegative);
  EXPECT_EQ(r.out, "spike=none\n");

  r = capture([](auto& o, auto& e) { return cmd_oracle(seed("k4"), 2, 2, o, e); });
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.out, "partitions=15 certificates=1\nspike s=2 t=2\n0 5\n1 4\n2 3\n");
  r = capture([](auto& o, auto& e) { return cmd_oracle(seed("u1_14"), 1, 1, o, e); });
  EXPECT_EQ(r.code, kUsage);
}

TEST_F(CliTest, ParseErrorsExitTwo) {
  write("bad.mtx", "matroid v1\nn 3\ncircuits\n0 1\n0 2\nend\n");
  const Outcome r = capture([&](auto& o, auto& e) { return cmd_recognize(Input{path("bad.mtx"), ""}, 1, 1, o, e); });
  EXPECT_EQ(r.code, kUsage);
  EXPECT_NE(r.err.find("line 6"), std::string::npos);
  const Outcome missing = capture([&](auto& o, auto& e) { return cmd_recognize(Input{path("none.mtx"), ""}, 1, 1, o, e); });
  EXPECT_EQ(missing.code, kUsage);
}

TEST_F(CliTest, VerifyRejectsWrongCertificate) {
  write("k4.cert", "spike s=2 t=2\n0 1\n2 3\n4 5\n");
  Outcome r = capture([&](auto& o, auto& e) { return cmd_verify(seed("k4"), path("k4.cert"), o, e); });
  EXPECT_EQ(r.code, kNegative);
  EXPECT_EQ(r.out, "check=certificate status=fail witness=15\n");

  write("short.cert", "spike s=2 t=2\n0 5\n1 4\n");
  r = capture([&](auto& o, auto& e) { return cmd_verify(seed("k4"), path("short.cert"), o, e); });
  EXPECT_EQ(r.code, kUsage);

  write("good.cert", "spike s=2 t=2\n0 5\n1 4\n2 3\n");
  r = capture([&](auto& o, auto& e) { return cmd_verify(seed("k4"), path("good.cert"), o, e); });
  EXPECT_EQ(r.code, kOk) << r.out;
}

TEST_F(CliTest, TransformDualSwapsCertificate) {
  const std::string prefix = path("s12");
  ASSERT_EQ(capture([&](auto& o, auto& e) { return cmd_build(1, 2, 4, prefix, o, e); }).code, kOk);
  const Outcome r = capture([&](auto& o, auto& e) {
    return cmd_transform(Input{prefix + ".mtx", ""}, "dual", "", prefix + ".cert", "", o, e);
  });
  ASSERT_EQ(r.code, kOk);
  const std::string expected_cert = "spike s=2 t=1\n0 1\n2 3\n4 5\n6 7\n";
  EXPECT_NE(r.out.find("rank 5\n"), std::string::npos);
  EXPECT_NE(r.out.find(expected_cert), std::string::npos);
}

TEST_F(CliTest, TransformMinorsAndSpikeSteps) {
  Outcome r = capture([](auto& o, auto& e) { return cmd_transform(seed("u2_4"), "contract", "3", "", "", o, e); });
  ASSERT_EQ(r.code, kOk);
  EXPECT_EQ(parse_matroid(r.out), uniform(1, 3));
  r = capture([](auto& o, auto& e) { return cmd_transform(seed("u2_4"), "delete", "0,3", "", "", o, e); });
  ASSERT_EQ(r.code, kOk);
  EXPECT_EQ(parse_matroid(r.out), uniform(2, 2));
  r = capture([](auto& o, auto& e) { return cmd_transform(seed("u2_4"), "delete", "0,9", "", "", o, e); });
  EXPECT_EQ(r.code, kUsage);
  r = capture([](auto& o, auto& e) { return cmd_transform(seed("u2_4"), "spin", "", "", "", o, e); });
  EXPECT_EQ(r.code, kUsage);
  r = capture([](auto& o, auto& e) { return cmd_transform(seed("u2_4"), "quotient", "", "", "", o, e); });
  EXPECT_EQ(r.code, kUsage);

  const std::string prefix = path("s23");
  ASSERT_EQ(capture([&](auto& o, auto& e) { return cmd_build(2, 3, 6, prefix, o, e); }).code, kOk);
  const Input in{prefix + ".mtx", ""};
  r = capture([&](auto& o, auto& e) { return cmd_transform(in, "untip", "", prefix + ".cert", path("u"), o, e); });
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_EQ(load_certificate(path("u.cert")).s, 1);
  EXPECT_EQ(load_matroid(path("u.mtx")).rank(), 4);

  r = capture([&](auto& o, auto& e) { return cmd_transform(in, "tip", "", prefix + ".cert", "", o, e); });
  ASSERT_EQ(r.code, kOk);
  EXPECT_EQ(parse_matroid(r.out).size(), 13);

  r = capture([&](auto& o, auto& e) { return cmd_transform(in, "quotient", "", prefix + ".cert", "", o, e); });
  ASSERT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("spike s=2 t=4\n"), std::string::npos);

  r = capture([&](auto& o, auto& e) {
    return cmd_transform(Input{path("u.mtx"), ""}, "untip", "", path("u.cert"), "", o, e);
  });
  EXPECT_EQ(r.code, kUsage);
  EXPECT_NE(r.err.find("s >= 2"), std::string::npos);
}

TEST(ElementListTest, Parses) {
  EXPECT_EQ(parse_element_list("0,3,5", 6), mask_of({0, 3, 5}));
  EXPECT_EQ(parse_element_list("", 6), 0u);
  EXPECT_THROW(parse_element_list("0,,1", 6), ParameterError);
  EXPECT_THROW(parse_element_list("a", 6), ParameterError);
  EXPECT_THROW(parse_element_list("6", 6), ParameterError);
}

TEST(CorpusTest, Names) {
  EXPECT_EQ(corpus::by_name("u2_4"), uniform(2, 4));
  EXPECT_EQ(corpus::by_name("spike11_2"), direct_sum(uniform(1, 2), uniform(1, 2)));
  EXPECT_EQ(corpus::by_name("two-lines").rank(), 3);
  EXPECT_THROW(corpus::by_name("u2"), ParameterError);
  EXPECT_THROW(corpus::by_name("petersen"), ParameterError);
}

}  // namespace
}  // namespace genspike::cli
