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

#include <stdexcept>
#include <string>
#include <string_view>

namespace arrtwist {

enum class ErrorCode {
    InvalidInput,
    MixedRings,
    UnsupportedRing,
    NotInvertible,
    InvalidComplex,
    DegreeOutOfRange,
    InvalidCharacter,
    NotEssential,
    GirthTooSmall,
    NotGenericPosition,
    RelatorNotKilled,
    NotMeridianMarked,
    TowerInvalid,
    DegreeUnavailable,
    Disagreement,
};

// How a failure should surface to a caller: bad input, a refusal to answer
// a question the theory does not settle, or two computations that disagree.
enum class ErrorClass { Input, Refusal, Disagreement };

ErrorClass classify(ErrorCode code);
std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

  private:
    ErrorCode code_;
};

}  // namespace arrtwist
