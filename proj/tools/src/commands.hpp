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

#include "run_config.hpp"

namespace dcegbs::cli {

// Each command writes its outputs under cfg.out_dir and returns an ExitCode.
int cmd_spectrum(const RunConfig& cfg);
int cmd_compile(const RunConfig& cfg);
int cmd_sample(const RunConfig& cfg);
int cmd_verify(const RunConfig& cfg);
int cmd_estimate(const RunConfig& cfg);

}  // namespace dcegbs::cli
