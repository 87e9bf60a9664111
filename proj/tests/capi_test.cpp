// Copyright 2026 The galcheck Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <algorithm>
#include <cstring>
#include <memory>
#include <string>

#include "galcheck/galcheck.h"
#include "json.hpp"

namespace {

using nlohmann::json;

const std::string kFixtures = GALCHECK_FIXTURES;

struct StructureDeleter {
  void operator()(galcheck_structure* s) const { galcheck_structure_free(s); }
};
struct GameDeleter {
  void operator()(galcheck_game* g) const { galcheck_game_free(g); }
};
using StructurePtr = std::unique_ptr<galcheck_structure, StructureDeleter>;
using GamePtr = std::unique_ptr<galcheck_game, GameDeleter>;

std::string take(char* s) {
  std::string out = s ? s : "";
  galcheck_string_free(s);
  return out;
}

StructurePtr example2() {
  galcheck_structure* s = nullptr;
  EXPECT_EQ(galcheck_structure_load_file((kFixtures + "/example2_structure.json").c_str(), &s),
            GALCHECK_OK);
  return StructurePtr(s);
}

GamePtr example1() {
  galcheck_game* g = nullptr;
  EXPECT_EQ(galcheck_game_load_file((kFixtures + "/example1_game.json").c_str(), &g), GALCHECK_OK);
  return GamePtr(g);
}

TEST(CApi, Basics) {
  EXPECT_STREQ(galcheck_version(), "1.0.0");
  EXPECT_STREQ(galcheck_status_name(GALCHECK_E_SCHEMA), "schema error");
  galcheck_string_free(nullptr);
  galcheck_structure_free(nullptr);
  galcheck_game_free(nullptr);
}

TEST(CApi, Check) {
  auto s = example2();
  ASSERT_TRUE(s);
  EXPECT_EQ(galcheck_structure_state_count(s.get()), 5u);
  EXPECT_EQ(galcheck_structure_action_count(s.get()), 4u);
  char* out = nullptr;
  int all = -1;
  ASSERT_EQ(galcheck_check(s.get(), "@1", nullptr, 0, &out, &all), GALCHECK_OK);
  json r = json::parse(take(out));
  EXPECT_EQ(all, 1);
  EXPECT_EQ(r["sat"], json::array({"\xE2\x88\x85"}));

  galcheck_binding bind[] = {{"v1_star", "<A>"}, {"v2_star", "<R>"}};
  ASSERT_EQ(galcheck_check(s.get(), "onpath(h, O(v1_star, v2_star))", bind, 2, &out, &all),
            GALCHECK_OK);
  r = json::parse(take(out));
  EXPECT_EQ(r["sat"], json::array({"(A)", "(A,R)", "\xE2\x88\x85"}));

  EXPECT_EQ(galcheck_check(s.get(), "onpath(h, O(v1_star, v2_star))", bind, 1, &out, &all),
            GALCHECK_E_BINDING);
  EXPECT_NE(std::strstr(galcheck_last_error(), "v2_star"), nullptr) << galcheck_last_error();
  galcheck_binding extra[] = {{"v1_star", "<A>"}, {"v2_star", "<R>"}, {"zz", "<R>"}};
  EXPECT_EQ(galcheck_check(s.get(), "onpath(h, O(v1_star, v2_star))", extra, 3, &out, &all),
            GALCHECK_E_BINDING);
  galcheck_binding wrong[] = {{"v1_star", "<L>"}, {"v2_star", "<R>"}};
  EXPECT_EQ(galcheck_check(s.get(), "onpath(h, O(v1_star, v2_star))", wrong, 2, &out, &all),
            GALCHECK_E_BINDING);
  EXPECT_EQ(galcheck_check(s.get(), "AX (", nullptr, 0, &out, &all), GALCHECK_E_PARSE);
  EXPECT_EQ(galcheck_check(s.get(), "nosuch(h)", nullptr, 0, &out, &all),
            GALCHECK_E_UNKNOWN_IDENTIFIER);
  EXPECT_EQ(galcheck_check(nullptr, "@1", nullptr, 0, &out, &all), GALCHECK_E_INVALID_ARGUMENT);
}

TEST(CApi, LoadErrors) {
  galcheck_structure* s = nullptr;
  const char bad[] = "{\"sorts\": ";
  EXPECT_EQ(galcheck_structure_load(bad, sizeof bad - 1, &s), GALCHECK_E_PARSE);
  EXPECT_EQ(s, nullptr);
  EXPECT_EQ(galcheck_structure_load_file("/nonexistent/file.json", &s), GALCHECK_E_IO);
  const char schema[] = "{\"bogus\": 1}";
  EXPECT_EQ(galcheck_structure_load(schema, sizeof schema - 1, &s), GALCHECK_E_SCHEMA);
  EXPECT_GT(std::strlen(galcheck_last_error()), 0u);
}

TEST(CApi, Equilibria) {
  auto g = example1();
  ASSERT_TRUE(g);
  EXPECT_EQ(galcheck_game_profile_count(g.get()), 4u);
  char* out = nullptr;
  int agrees = 0;
  ASSERT_EQ(galcheck_equilibria(g.get(), GALCHECK_SPE, 1, &out, &agrees), GALCHECK_OK);
  json r = json::parse(take(out));
  EXPECT_EQ(agrees, 1);
  EXPECT_EQ(r["profiles"], json::array({json::array({"<A>", "<R>"})}));
  ASSERT_EQ(galcheck_equilibria(g.get(), GALCHECK_NE, 2, &out, &agrees), GALCHECK_OK);
  r = json::parse(take(out));
  EXPECT_EQ(r["count"], 2);

  galcheck_structure* s = nullptr;
  ASSERT_EQ(galcheck_game_to_structure(g.get(), &s), GALCHECK_OK);
  StructurePtr owned(s);
  ASSERT_EQ(galcheck_structure_dump(s, &out), GALCHECK_OK);
  std::string dumped = take(out);
  auto fixture = example2();
  ASSERT_EQ(galcheck_structure_dump(fixture.get(), &out), GALCHECK_OK);
  EXPECT_EQ(dumped, take(out));
}

TEST(CApi, Generators) {
  galcheck_structure* s = nullptr;
  ASSERT_EQ(galcheck_gen_tictactoe("minimax:9", "all", &s), GALCHECK_OK);
  StructurePtr owned(s);
  EXPECT_EQ(galcheck_structure_state_count(s), 185u);
  char* out = nullptr;
  int all = 0;
  ASSERT_EQ(galcheck_check(s, "AG !winO", nullptr, 0, &out, &all), GALCHECK_OK);
  galcheck_string_free(out);
  EXPECT_EQ(all, 1);
  EXPECT_EQ(galcheck_gen_tictactoe("sometimes", "all", &s), GALCHECK_E_INVALID_ARGUMENT);

  ASSERT_EQ(galcheck_gen_bimatrix(2, 3, 10, 42, &out), GALCHECK_OK);
  json b = json::parse(take(out));
  EXPECT_EQ(b["u1"], json::parse("[[6,0,1],[6,0,5]]"));
  EXPECT_EQ(galcheck_gen_bimatrix(0, 3, 10, 42, &out), GALCHECK_E_INVALID_ARGUMENT);

  ASSERT_EQ(galcheck_bench_bimatrix(2, 3, 2, 0, 5, &out), GALCHECK_OK);
  std::string csv = take(out);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 5);
  EXPECT_EQ(csv.rfind("experiment,m,n,payoff_bound,seed,equilibria,millis\r\n", 0), 0u);
  EXPECT_NE(csv.find("constant-2p,3,3,1,"), std::string::npos);
}

}  // namespace
