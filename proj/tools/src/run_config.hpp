// Copyright 2026 The dcegbs Authors
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


#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "dcegbs/compiler.hpp"
#include "dcegbs/io.hpp"
#include "dcegbs/physics.hpp"

namespace dcegbs::cli {

/// Command line values that take precedence over the config document.
struct Overrides {
    std::optional<std::uint64_t> seed;
    std::optional<std::filesystem::path> out;
    std::optional<std::size_t> samples;
    std::optional<int> cutoff;
    std::optional<bool> oracle;
};

/// One JSON document per run. Relative paths resolve against the directory
/// holding the config file.
struct RunConfig {
    std::filesystem::path source;
    Json document;  // effective document, overrides applied
    ResonatorPair resonator;
    std::uint64_t seed = 1;
    std::filesystem::path out_dir;
    std::string digest;

    /// Object stored under `name`, or an empty object.
    Json section(std::string_view name) const;
    std::filesystem::path resolve(const std::filesystem::path& p) const;

    bool has_instance() const { return document.contains("instance"); }
    /// Inline instance, {"file": path}, or {"generate": "haar" | "identity" | "real_orthogonal", ...}.
    TargetInstance instance() const;
    CompileOptions compile_options() const;
};

/// Throws Error(ParseError) or Error(InvalidConfig).
RunConfig load_run_config(const std::filesystem::path& path, const Overrides& overrides);

/// Reads `key` from `section`, falling back when absent.
template <class T>
T setting(const Json& section, std::string_view key, T fallback) {
    const auto it = section.find(key);
    if (it == section.end()) return fallback;
    return decode<T>(*it, key);
}

}  // namespace dcegbs::cli
