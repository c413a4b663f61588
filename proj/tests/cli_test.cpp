// Copyright 2026 The hankelgf Authors
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

#include "hankelgf/cli.hpp"

#include <gtest/gtest.h>

#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

namespace hankelgf::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result Invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "hankelgf");
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

TEST(CliTest, Count) {
  EXPECT_EQ(Invoke({"count", "--field", "q=2", "--hankel-rank", "n=3", "r=2"}).out, "12\n");
  EXPECT_EQ(Invoke({"count", "--field", "q=2", "--coprime", "2,1,1"}).out, "12\n");
  EXPECT_EQ(Invoke({"count", "--field", "q=3", "--stratum", "n=2", "k=2"}).out, "18\n");
  EXPECT_EQ(Invoke({"count", "--field", "q=2", "--rank-at-most", "n=4", "r=2"}).out, "16\n");
  const Result j = Invoke({"count", "--field", "q=2", "--hankel-rank", "n=3", "r=2", "--format", "json"});
  EXPECT_EQ(j.code, kOk);
  EXPECT_EQ(nlohmann::json::parse(j.out).at("count"), 12);
}

TEST(CliTest, Expand) {
  const Result r = Invoke({"expand", "--field", "q=2", "--u", "coeffs:1,1,1", "--v", "coeffs:0,1", "--terms", "4"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.out, "1,1,0,1\n");
  EXPECT_EQ(Invoke({"expand", "--field", "q=2", "--u", "X^2+X+1", "--v", "X"}).out, "1,1,0,1\n");
}

TEST(CliTest, SigmaAndFiber) {
  const Result s = Invoke({"sigma", "--field", "q=2", "--f", "X^2+X+1", "--g", "X^2"});
  EXPECT_EQ(s.code, kOk);
  EXPECT_EQ(s.out.rfind("T:q=2;n=2;a=", 0), 0u);
  const std::string matrix = s.out.substr(0, s.out.size() - 1);
  const Result f = Invoke({"fiber", "--field", "q=2", "--matrix", matrix});
  EXPECT_EQ(f.code, kOk);
  const auto arr = nlohmann::json::parse(f.out);
  ASSERT_EQ(arr.size(), 2u);
  bool found = false;
  for (const auto& e : arr) found = found || (e.at("f") == "coeffs:1,1,1" && e.at("g") == "coeffs:0,0,1");
  EXPECT_TRUE(found);
}

TEST(CliTest, HankelMatrixRankDelta) {
  const Result r = Invoke({"hankel", "--matrix", "H:q=2;n=3;a=0,0,1,0,0"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.out, "rank=3 delta=3\n");
  EXPECT_EQ(Invoke({"hankel", "--matrix", "H:q=2;n=3;a=0,0,0,0,1"}).out, "rank=1 delta=0\n");
}

TEST(CliTest, Verify) {
  const Result r = Invoke({"verify", "--field", "q=2", "--sigma", "n=2", "--format", "json"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("\"fibers_uniform\":true"), std::string::npos);
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc.at("pairs"), 8);
  EXPECT_EQ(doc.at("images"), 4);
  EXPECT_EQ(doc.at("fiber_size"), 2);
  EXPECT_EQ(Invoke({"verify", "--field", "q=3", "--hankel", "n=2"}).code, kOk);
  EXPECT_EQ(Invoke({"verify", "--field", "q=2", "--coprime", "2,1,1"}).code, kOk);
}

TEST(CliTest, CensusSchema) {
  const Result r = Invoke({"census", "--field", "q=2", "--hankel", "n=2"});
  ASSERT_EQ(r.code, kOk);
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc.at("q"), 2);
  EXPECT_EQ(doc.at("n"), 2);
  EXPECT_EQ(doc.at("total"), 8);
  std::uint64_t sum = 0;
  for (const auto& c : doc.at("cells")) {
    EXPECT_TRUE(c.contains("rank") && c.contains("delta"));
    sum += c.at("count").get<std::uint64_t>();
  }
  EXPECT_EQ(sum, 8u);

  const auto cop = nlohmann::json::parse(Invoke({"census", "--field", "q=2", "--coprime", "1,1"}).out);
  EXPECT_EQ(cop.at("total"), 4);
  EXPECT_EQ(cop.at("cells").at(0).at("gcd_degree"), 0);
  EXPECT_EQ(cop.at("cells").at(0).at("count"), 2);
}

TEST(CliTest, DeterministicOutput) {
  const std::vector<std::string> args{"census", "--field", "q=3", "--hankel", "n=2", "--jobs", "3"};
  const Result a = Invoke(args);
  const Result b = Invoke(args);
  const Result c = Invoke({"census", "--field", "q=3", "--hankel", "n=2", "--jobs", "1"});
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out, c.out);
}

TEST(CliTest, InvalidInput) {
  EXPECT_EQ(Invoke({"count", "--field", "q=6", "--hankel-rank", "n=3", "r=2"}).code, kInvalidInput);
  const Result bad = Invoke({"expand", "--field", "q=2", "--u", "X^^2", "--v", "1"});
  EXPECT_EQ(bad.code, kInvalidInput);
  EXPECT_NE(bad.err.find("error"), std::string::npos);
  EXPECT_EQ(Invoke({"expand", "--field", "q=2", "--u", "X^2", "--v", "X^3"}).code, kInvalidInput);
  EXPECT_EQ(Invoke({"sigma", "--field", "q=2", "--f", "X^2", "--g", "X^2+X"}).code, kInvalidInput);
  EXPECT_EQ(Invoke({"fiber", "--field", "q=2", "--matrix", "H:q=2;n=2;a=0,0,0"}).code, kInvalidInput);
  EXPECT_EQ(Invoke({"count", "--field", "q=2"}).code, kInvalidInput);
  EXPECT_EQ(Invoke({"census", "--field", "q=5", "--hankel", "n=9", "--budget", "1000"}).code, kInvalidInput);
  EXPECT_EQ(Invoke({"frobnicate"}).code, kInvalidInput);
  EXPECT_EQ(Invoke({"count", "--field", "q=2", "--hankel-rank", "n=3", "r=2", "--format", "xml"}).code, kInvalidInput);
}

}  // namespace
}  // namespace hankelgf::cli
