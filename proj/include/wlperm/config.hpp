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

// Effective run configuration: flags > environment > defaults.

#ifndef WLPERM_CONFIG_HPP_
#define WLPERM_CONFIG_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace wlperm {

struct Config {
  std::uint64_t seed = 1;
  int jobs = 1;
  int extension_cap = 16;
  int oracle_cap = 8;
  int enumeration_cap = 7;
  // Where each value came from, plus override notices.
  std::vector<std::string> log;
};

struct ConfigFlags {
  std::optional<std::uint64_t> seed;
  std::optional<int> jobs;
  std::optional<int> extension_cap;
};

using EnvLookup = std::function<const char*(const char*)>;

// Reads WLPERM_SEED, WLPERM_JOBS and WLPERM_CAP_EXT through `env`.
// Throws InvalidArgument on malformed or out-of-range values.
Config resolve_config(const ConfigFlags& flags, const EnvLookup& env);
Config resolve_config(const ConfigFlags& flags);

nlohmann::json to_json(const Config& c);

}  // namespace wlperm

#endif  // WLPERM_CONFIG_HPP_
