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

#include "wlperm/config.hpp"

#include <charconv>
#include <cstdlib>
#include <string_view>

#include "wlperm/error.hpp"

namespace wlperm {

namespace {

template <typename T>
T parse_env(const char* name, std::string_view text, T lo, T hi) {
  T value{};
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || value < lo || value > hi) {
    throw InvalidArgument(std::string(name) + "=" + std::string(text) + " is not valid");
  }
  return value;
}

template <typename T>
void resolve(const char* key, const char* env_name, const std::optional<T>& flag,
             const EnvLookup& env, T lo, T hi, T& out, std::vector<std::string>& log) {
  const char* raw = env(env_name);
  std::optional<T> from_env;
  if (raw != nullptr && *raw != '\0') from_env = parse_env<T>(env_name, raw, lo, hi);
  if (flag) {
    if (*flag < lo || *flag > hi) {
      throw InvalidArgument(std::string("--") + key + " out of range");
    }
    out = *flag;
    log.push_back(std::string(key) + ": flag");
    if (from_env && *from_env != *flag) {
      log.push_back(std::string(key) + ": flag value " + std::to_string(*flag) + " overrides " +
                    env_name + "=" + raw);
    }
  } else if (from_env) {
    out = *from_env;
    log.push_back(std::string(key) + ": " + env_name);
  } else {
    log.push_back(std::string(key) + ": default");
  }
}

}  // namespace

Config resolve_config(const ConfigFlags& flags, const EnvLookup& env) {
  Config c;
  resolve<std::uint64_t>("seed", "WLPERM_SEED", flags.seed, env, 0, UINT64_MAX, c.seed, c.log);
  resolve<int>("jobs", "WLPERM_JOBS", flags.jobs, env, 1, 256, c.jobs, c.log);
  resolve<int>("cap-ext", "WLPERM_CAP_EXT", flags.extension_cap, env, 1, 64, c.extension_cap,
               c.log);
  return c;
}

Config resolve_config(const ConfigFlags& flags) {
  return resolve_config(flags, [](const char* name) { return std::getenv(name); });
}

nlohmann::json to_json(const Config& c) {
  return {{"seed", c.seed},
          {"jobs", c.jobs},
          {"caps",
           {{"extension", c.extension_cap},
            {"oracle", c.oracle_cap},
            {"enumeration", c.enumeration_cap}}},
          {"log", c.log}};
}

}  // namespace wlperm
