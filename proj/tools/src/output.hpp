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

#include <filesystem>
#include <string>
#include <vector>

#include "dcegbs/gaussian.hpp"
#include "dcegbs/io.hpp"
#include "run_config.hpp"

namespace dcegbs::cli {

enum ExitCode : int { kPass = 0, kGateFailed = 1, kError = 2 };

/// Writes `content` to out_dir / name, creating the directory.
std::filesystem::path write_output(const RunConfig& cfg, const std::string& name, const std::string& content);

/// Report skeleton shared by every command.
Json report_header(const RunConfig& cfg, const std::string& command);

/// Pass/fail entry with measured value, tolerance and margin.
Json gate(const std::string& name, double measured, double tolerance, bool pass);

class CsvTable {
public:
    explicit CsvTable(std::vector<std::string> header);
    CsvTable& row(std::vector<std::string> cells);
    std::string str() const;

private:
    std::vector<std::string> header_;
    std::vector<std::vector<std::string>> rows_;
};

std::string cell(double x);
std::string cell(long long x);
/// Space separated counts, e.g. "1 0 1".
std::string cell(const FockPattern& pattern);

}  // namespace dcegbs::cli
