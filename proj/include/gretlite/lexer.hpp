// Copyright 2026 The gretlite Authors
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
#include <string_view>
#include <vector>

#include "gretlite/error.hpp"

namespace gretlite {

// Shared tokenizer for queries, scripts, schema and graph files.
enum class TokenKind { kIdent, kInteger, kDouble, kString, kPunct, kEnd };

struct Token {
  TokenKind kind = TokenKind::kEnd;
  // Identifier name, punctuation spelling, or unescaped string contents.
  std::string text;
  std::int64_t integer = 0;
  double real = 0.0;
  SourcePos pos;
};

// `//` comments and whitespace are skipped. Multi-character operators are
// matched longest first, so `<==` never splits into `<=` `=`.
std::vector<Token> tokenize(std::string_view source);

class TokenStream {
 public:
  explicit TokenStream(std::vector<Token> tokens);

  const Token& peek(std::size_t ahead = 0) const;
  const Token& next();
  bool at_end() const { return peek().kind == TokenKind::kEnd; }

  bool is_punct(std::string_view p, std::size_t ahead = 0) const;
  bool is_ident(std::size_t ahead = 0) const;
  bool is_keyword(std::string_view word, std::size_t ahead = 0) const;

  bool accept_punct(std::string_view p);
  bool accept_keyword(std::string_view word);
  const Token& expect_punct(std::string_view p);
  const Token& expect_keyword(std::string_view word);
  const Token& expect_ident(std::string_view what);

  [[noreturn]] void fail(const std::string& message) const;
  [[noreturn]] void fail_at(const Token& tok, const std::string& message) const;

 private:
  std::vector<Token> tokens_;
  std::size_t cursor_ = 0;
};

std::string describe(const Token& tok);

}  // namespace gretlite
