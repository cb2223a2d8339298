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
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "dcegbs/compiler.hpp"
#include "dcegbs/error.hpp"
#include "dcegbs/gaussian.hpp"
#include "dcegbs/physics.hpp"
#include "dcegbs/scattershot.hpp"

namespace dcegbs {

using Json = nlohmann::json;

// Complex numbers are [re, im]; matrices are arrays of rows.
void to_json(Json& j, const ResonatorPair& cfg);
void from_json(const Json& j, ResonatorPair& cfg);
void to_json(Json& j, const ModeRef& mode);
void from_json(const Json& j, ModeRef& mode);
void to_json(Json& j, const PumpPulse& pulse);
void from_json(const Json& j, PumpPulse& pulse);
void to_json(Json& j, const PumpSchedule& schedule);
void from_json(const Json& j, PumpSchedule& schedule);
void to_json(Json& j, const SqueezeSpec& s);
void from_json(const Json& j, SqueezeSpec& s);
void to_json(Json& j, const TargetInstance& instance);
void from_json(const Json& j, TargetInstance& instance);
void to_json(Json& j, const ScattershotRecord& rec);
void from_json(const Json& j, ScattershotRecord& rec);
void to_json(Json& j, const ExperimentEstimate& est);

Json complex_matrix_to_json(const ComplexMatrix& m);
ComplexMatrix complex_matrix_from_json(const Json& j);
Json real_matrix_to_json(const RealMatrix& m);
RealMatrix real_matrix_from_json(const Json& j);

/// Converts a JSON value, rethrowing any failure as Error(ParseError).
template <class T>
T decode(const Json& j, std::string_view what) {
    try {
        return j.get<T>();
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::ParseError, std::string(what) + ": " + e.what());
    }
}

/// Throws Error(ParseError) on unreadable or malformed files.
Json read_json_file(const std::filesystem::path& path);

/// Pretty JSON document with a trailing newline.
std::string dump_document(const Json& j);

/// One record per line.
std::string dump_records(const std::vector<ScattershotRecord>& records);

/// 64-bit FNV-1a of the compact serialization, as 16 hex digits.
std::string config_digest(const Json& j);

/// Fixed 17-significant-digit formatting for CSV cells.
std::string format_number(double x);

}  // namespace dcegbs
