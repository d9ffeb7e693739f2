// Copyright 2026 The arrtwist Authors
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


#pragma once

#include <cstdint>
#include <string>

#include "arrtwist/driver/io.hpp"
#include "arrtwist/error.hpp"

namespace arrtwist::driver {

// 0 success, 1 input error, 2 refusal, 3 disagreement between paths.
int exit_code(ErrorClass c);

struct JobOutcome {
    json report;
    int exit_code = 0;
};

// Runs {"command": ..., ...}; never throws. Failures become
// {"error": {"code", "class", "message"}} with the matching exit code.
JobOutcome run_job(const json& job) noexcept;

struct SelftestOptions {
    int words = 1000;
    int towers = 100;
};

// Property gates on randomized inputs; the seed only drives the generators.
json selftest(std::uint64_t seed, const SelftestOptions& options = {});

std::string version_string();

}  // namespace arrtwist::driver
