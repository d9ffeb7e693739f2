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

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace arrtwist::fox {

struct Letter {
    int generator = 0;
    int exponent = 1;  // +1 or -1
    auto operator<=>(const Letter&) const = default;
};

// Freely reduced word in the generators x_0, x_1, ...
class FreeWord {
  public:
    FreeWord() = default;
    explicit FreeWord(const std::vector<Letter>& letters);

    static FreeWord generator(int g, int exponent = 1);

    const std::vector<Letter>& letters() const { return letters_; }
    std::size_t length() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    int max_generator() const;  // -1 for the empty word

    FreeWord inverse() const;
    FreeWord pow(long e) const;
    long exponent_sum(int g) const;

    friend FreeWord operator*(const FreeWord& a, const FreeWord& b);
    auto operator<=>(const FreeWord&) const = default;

    // Compact form with letters a, b, c, ... as in "aba-1b-1".
    std::string to_string() const;
    // Space separated names, as in "x1 x2 x1-1".
    std::string to_string(const std::vector<std::string>& names) const;

  private:
    std::vector<Letter> letters_;
};

// "aba-1b-1", "a^-1 b^2", "1" for the identity.
FreeWord parse_word(std::string_view text);
// "x1 x2 x1-1" with the given generator names; "" or "1" is the identity.
FreeWord parse_named_word(std::string_view text, const std::vector<std::string>& names);

// Endomorphism of F_n by the images of the generators.
using Endomorphism = std::vector<FreeWord>;

FreeWord substitute(const Endomorphism& f, const FreeWord& w);
// (f o g)(x) = f(g(x))
Endomorphism compose(const Endomorphism& f, const Endomorphism& g);
Endomorphism identity_endomorphism(std::size_t n);
bool is_identity(const Endomorphism& f);

// Inverse by Nielsen reduction of the image tuple; nullopt if the reduction
// does not reach a basis (f is then not an automorphism, or the search gave up).
std::optional<Endomorphism> invert_automorphism(const Endomorphism& f);

}  // namespace arrtwist::fox
