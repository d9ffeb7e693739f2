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

// Scalar expressions: "3/4", "t^-2 + 1", "z3^2", "(z3 + 1)*t - 2".

#include <cctype>
#include <string>

#include "arrtwist/algebra/scalar.hpp"
#include "arrtwist/error.hpp"

namespace arrtwist::algebra {

namespace {

class Parser {
  public:
    Parser(std::string_view text, const Ring& ring) : text_(text), ring_(ring) {}

    Scalar run() {
        Scalar v = expression();
        skip();
        if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return v;
    }

  private:
    [[noreturn]] void fail(const std::string& why) const {
        throw Error(ErrorCode::InvalidInput,
                    "cannot parse scalar '" + std::string(text_) + "': " + why);
    }

    void skip() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    char peek() {
        skip();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool starts_primary(char c) const {
        return std::isdigit(static_cast<unsigned char>(c)) || c == 't' || c == 'z' || c == '(';
    }

    Scalar expression() {
        Scalar acc = term();
        for (;;) {
            char c = peek();
            if (c == '+') {
                ++pos_;
                acc += term();
            } else if (c == '-') {
                ++pos_;
                acc -= term();
            } else {
                return acc;
            }
        }
    }

    Scalar term() {
        Scalar acc = unary();
        for (;;) {
            char c = peek();
            if (c == '*') {
                ++pos_;
                acc *= unary();
            } else if (c == '/') {
                ++pos_;
                acc = exact_quotient(acc, unary());
            } else if (starts_primary(c)) {
                acc *= power();
            } else {
                return acc;
            }
        }
    }

    Scalar unary() {
        char c = peek();
        if (c == '-') {
            ++pos_;
            return -unary();
        }
        if (c == '+') {
            ++pos_;
            return unary();
        }
        return power();
    }

    long exponent() {
        bool paren = false;
        if (peek() == '(') {
            ++pos_;
            paren = true;
        }
        bool negative = false;
        if (peek() == '-' || peek() == '+') negative = text_[pos_++] == '-';
        skip();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("exponent expected");
        long e = std::stol(std::string(text_.substr(start, pos_ - start)));
        if (paren) {
            if (peek() != ')') fail("')' expected");
            ++pos_;
        }
        return negative ? -e : e;
    }

    Scalar power() {
        Scalar base = primary();
        if (peek() == '^') {
            ++pos_;
            return base.pow(exponent());
        }
        return base;
    }

    Scalar primary() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            Scalar v = expression();
            if (peek() != ')') fail("')' expected");
            ++pos_;
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            return Scalar::from_integer(ring_, mpz_class(std::string(text_.substr(start, pos_ - start))));
        }
        if (c == 't') {
            ++pos_;
            return Scalar::t_power(ring_, 1);
        }
        if (c == 'z') {
            ++pos_;
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            if (start == pos_) fail("root of unity needs an order, as in z3");
            int d = std::stoi(std::string(text_.substr(start, pos_ - start)));
            if (ring_.base().kind() != RingKind::Cyclotomic || ring_.base().order() != d)
                fail("z" + std::to_string(d) + " does not live in " + ring_.name());
            return Scalar::zeta(ring_);
        }
        if (c == '\0') fail("unexpected end of input");
        fail("unexpected '" + std::string(1, c) + "'");
    }

    std::string_view text_;
    Ring ring_;
    std::size_t pos_ = 0;
};

}  // namespace

Scalar parse_scalar(std::string_view text, const Ring& ring) { return Parser(text, ring).run(); }

}  // namespace arrtwist::algebra
