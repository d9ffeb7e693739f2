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

#include "arrtwist/error.hpp"

namespace arrtwist {

ErrorClass classify(ErrorCode code) {
    switch (code) {
    case ErrorCode::GirthTooSmall:
    case ErrorCode::NotGenericPosition:
    case ErrorCode::NotEssential:
    case ErrorCode::DegreeUnavailable:
        return ErrorClass::Refusal;
    case ErrorCode::Disagreement:
        return ErrorClass::Disagreement;
    default:
        return ErrorClass::Input;
    }
}

std::string_view to_string(ErrorCode code) {
    switch (code) {
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::MixedRings: return "MixedRings";
    case ErrorCode::UnsupportedRing: return "UnsupportedRing";
    case ErrorCode::NotInvertible: return "NotInvertible";
    case ErrorCode::InvalidComplex: return "InvalidComplex";
    case ErrorCode::DegreeOutOfRange: return "DegreeOutOfRange";
    case ErrorCode::InvalidCharacter: return "InvalidCharacter";
    case ErrorCode::NotEssential: return "NotEssential";
    case ErrorCode::GirthTooSmall: return "GirthTooSmall";
    case ErrorCode::NotGenericPosition: return "NotGenericPosition";
    case ErrorCode::RelatorNotKilled: return "RelatorNotKilled";
    case ErrorCode::NotMeridianMarked: return "NotMeridianMarked";
    case ErrorCode::TowerInvalid: return "TowerInvalid";
    case ErrorCode::DegreeUnavailable: return "DegreeUnavailable";
    case ErrorCode::Disagreement: return "Disagreement";
    }
    return "Unknown";
}

}  // namespace arrtwist
