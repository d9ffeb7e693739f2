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

#include <string>
#include <vector>

#include "json.hpp"

#include "arrtwist/arrangement/arrangement.hpp"
#include "arrtwist/chain/complex.hpp"
#include "arrtwist/fox/presentation.hpp"
#include "arrtwist/milnor/milnor.hpp"
#include "arrtwist/tower/tower.hpp"

namespace arrtwist::driver {

using json = nlohmann::ordered_json;

inline constexpr int kArrangementFormat = 1;
inline constexpr int kPresentationFormat = 1;
inline constexpr int kTowerFormat = 1;
inline constexpr int kComplexFormat = 1;
inline constexpr int kSpectrumFormat = 1;
inline constexpr int kReportFormat = 1;

// Parses a JSON file; InvalidInput if it is missing or malformed.
json read_json_file(const std::string& path);
// An object is returned as is, a string is read as a file path.
json resolve(const json& value, const std::string& what);

// {"r": 3, "forms": [[1, 0, "1/2"], ...], "labels": [...]},
// {"generic": {"hyperplanes": m, "r": r}} or {"boolean": m}.
arrangement::Arrangement arrangement_from_json(const json& j);
json to_json(const arrangement::Arrangement& a);

// {"generators": 3 | ["a", "b", "c"], "relators": ["aba-1b-1"], "meridians": true}.
// With default single-letter names words use the compact syntax, otherwise
// space separated names.
fox::GroupPresentation presentation_from_json(const json& j);
json to_json(const fox::GroupPresentation& p);

// {"exponents": [d_l, ..., d_2], "names": {"level_3": [...]},
//  "monodromy": {"level_3": {"y1": ["x1", "x1 x2 x1-1"]}}, "weights": ...}.
// Exponents and weight lists run from the top level down.
tower::TowerSpec tower_from_json(const json& j);
json to_json(const tower::TowerSpec& tw);
// A list in top-down generator order or a map name -> weight.
tower::TowerCharacter tower_weights_from_json(const json& j, const tower::TowerSpec& tw);

// {"ring": "Z", "ranks": [r_0, ..., r_k], "boundaries": [d_1, ..., d_k]},
// each d_q a list of rows of integers or scalar strings.
chain::FreeChainComplex complex_from_json(const json& j);
json to_json(const chain::FreeChainComplex& c);

algebra::Scalar scalar_from_json(const json& j, const algebra::Ring& ring);
json to_json(const algebra::Matrix& m);
json to_json(const chain::HomologyGroup& h);
json to_json(const std::vector<chain::HomologyGroup>& groups);
json to_json(const arrangement::Flat& f, const arrangement::Arrangement& a);
json to_json(const milnor::MilnorSpectrum& s);
json to_json(const milnor::ObstructionReport& r);

}  // namespace arrtwist::driver
