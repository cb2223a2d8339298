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


#include "output.hpp"

#include <fstream>

#include "dcegbs/error.hpp"

namespace dcegbs::cli {

std::filesystem::path write_output(const RunConfig& cfg, const std::string& name, const std::string& content) {
    std::filesystem::create_directories(cfg.out_dir);
    const auto path = cfg.out_dir / name;
    std::ofstream out(path, std::ios::binary);
    out << content;
    if (!out) throw Error(ErrorKind::InvalidConfig, "cannot write " + path.string());
    return path;
}

Json report_header(const RunConfig& cfg, const std::string& command) {
    return Json{{"command", command},
                {"config", cfg.source.string()},
                {"config_digest", cfg.digest},
                {"seed", cfg.seed},
                {"resonator", cfg.resonator}};
}

Json gate(const std::string& name, double measured, double tolerance, bool pass) {
    return Json{
        {"name", name}, {"measured", measured}, {"tolerance", tolerance}, {"margin", tolerance - measured}, {"pass", pass}};
}

CsvTable::CsvTable(std::vector<std::string> header) : header_(std::move(header)) {}

CsvTable& CsvTable::row(std::vector<std::string> cells) {
    rows_.push_back(std::move(cells));
    return *this;
}

std::string CsvTable::str() const {
    auto line = [](const std::vector<std::string>& cells) {
        std::string s;
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i) s += ',';
            s += cells[i];
        }
        return s + '\n';
    };
    std::string out = line(header_);
    for (const auto& r : rows_) out += line(r);
    return out;
}

std::string cell(double x) { return format_number(x); }

std::string cell(long long x) { return std::to_string(x); }

std::string cell(const FockPattern& pattern) {
    std::string s;
    for (std::size_t i = 0; i < pattern.size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(pattern[i]);
    }
    return s;
}

}  // namespace dcegbs::cli
