// Copyright 2026 The wlperm Authors
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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <map>
#include <string>

#include "doctest.h"
#include "wlperm/config.hpp"
#include "wlperm/error.hpp"

using namespace wlperm;

namespace {

EnvLookup fake_env(std::map<std::string, std::string> vars) {
  return [vars = std::move(vars)](const char* name) -> const char* {
    auto it = vars.find(name);
    return it == vars.end() ? nullptr : it->second.c_str();
  };
}

bool logged(const Config& c, const std::string& needle) {
  for (const std::string& line : c.log) {
    if (line.find(needle) != std::string::npos) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("defaults") {
  const Config c = resolve_config({}, fake_env({}));
  CHECK(c.seed == 1);
  CHECK(c.jobs == 1);
  CHECK(c.extension_cap == 16);
  CHECK(c.oracle_cap == 8);
  CHECK(c.enumeration_cap == 7);
  CHECK(logged(c, "seed: default"));
}

TEST_CASE("environment overrides defaults") {
  const Config c = resolve_config({}, fake_env({{"WLPERM_SEED", "42"}, {"WLPERM_JOBS", "3"}}));
  CHECK(c.seed == 42);
  CHECK(c.jobs == 3);
  CHECK(logged(c, "seed: WLPERM_SEED"));
}

TEST_CASE("flags override environment and say so") {
  ConfigFlags flags;
  flags.seed = 7;
  const Config c = resolve_config(flags, fake_env({{"WLPERM_SEED", "5"}}));
  CHECK(c.seed == 7);
  CHECK(logged(c, "flag value 7 overrides WLPERM_SEED=5"));
}

TEST_CASE("malformed values are rejected") {
  CHECK_THROWS_AS(resolve_config({}, fake_env({{"WLPERM_JOBS", "x"}})), InvalidArgument);
  CHECK_THROWS_AS(resolve_config({}, fake_env({{"WLPERM_CAP_EXT", "0"}})), InvalidArgument);
  ConfigFlags flags;
  flags.jobs = 0;
  CHECK_THROWS_AS(resolve_config(flags, fake_env({})), InvalidArgument);
}

TEST_CASE("json form") {
  const nlohmann::json j = to_json(resolve_config({}, fake_env({})));
  CHECK(j["caps"]["extension"] == 16);
  CHECK(j["seed"] == 1);
}
