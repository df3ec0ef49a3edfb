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

#include "gretlite/lexer.hpp"

#include <array>
#include <cctype>
#include <charconv>

namespace gretlite {

namespace {

constexpr std::array<std::string_view, 33> kPunctuation = {
    "<>--", "<==", "-->", "<--", "<->", "++", "->", ":=", "<=", ">=", "<>",
    "=",    "<",   ">",   "+",   "-",   "*",  "/",  "%",  "(",  ")",  "{",
    "}",    "[",   "]",   ",",   ";",   ":",  ".",  "?",  "!",  "|",  "$",
};

bool ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip_space();
      Token tok;
      tok.pos = pos_;
      if (i_ >= src_.size()) {
        tok.kind = TokenKind::kEnd;
        out.push_back(std::move(tok));
        return out;
      }
      char c = src_[i_];
      if (ident_start(c)) {
        std::size_t start = i_;
        while (i_ < src_.size() && ident_char(src_[i_])) advance();
        tok.kind = TokenKind::kIdent;
        tok.text = std::string(src_.substr(start, i_ - start));
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        lex_number(tok);
      } else if (c == '"') {
        lex_string(tok);
      } else {
        lex_punct(tok);
      }
      out.push_back(std::move(tok));
    }
  }

 private:
  void advance() {
    if (src_[i_] == '\n') {
      ++pos_.line;
      pos_.column = 1;
    } else {
      ++pos_.column;
    }
    ++i_;
  }

  void skip_space() {
    while (i_ < src_.size()) {
      char c = src_[i_];
      if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else if (c == '/' && i_ + 1 < src_.size() && src_[i_ + 1] == '/') {
        while (i_ < src_.size() && src_[i_] != '\n') advance();
      } else {
        return;
      }
    }
  }

  void lex_number(Token& tok) {
    std::size_t start = i_;
    bool real = false;
    while (i_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[i_]))) {
      advance();
    }
    if (i_ + 1 < src_.size() && src_[i_] == '.' &&
        std::isdigit(static_cast<unsigned char>(src_[i_ + 1]))) {
      real = true;
      advance();
      while (i_ < src_.size() &&
             std::isdigit(static_cast<unsigned char>(src_[i_]))) {
        advance();
      }
    }
    if (i_ < src_.size() && (src_[i_] == 'e' || src_[i_] == 'E')) {
      std::size_t j = i_ + 1;
      if (j < src_.size() && (src_[j] == '+' || src_[j] == '-')) ++j;
      if (j < src_.size() && std::isdigit(static_cast<unsigned char>(src_[j]))) {
        real = true;
        while (i_ < j) advance();
        while (i_ < src_.size() &&
               std::isdigit(static_cast<unsigned char>(src_[i_]))) {
          advance();
        }
      }
    }
    std::string_view text = src_.substr(start, i_ - start);
    tok.text = std::string(text);
    const char* first = text.data();
    const char* last = text.data() + text.size();
    if (real) {
      tok.kind = TokenKind::kDouble;
      auto [p, ec] = std::from_chars(first, last, tok.real);
      if (ec != std::errc()) {
        throw Error(ErrorCode::kSyntax, "malformed number '" + tok.text + "'",
                    tok.pos);
      }
    } else {
      tok.kind = TokenKind::kInteger;
      auto [p, ec] = std::from_chars(first, last, tok.integer);
      if (ec != std::errc()) {
        throw Error(ErrorCode::kSyntax,
                    "integer literal out of range '" + tok.text + "'", tok.pos);
      }
    }
  }

  void lex_string(Token& tok) {
    tok.kind = TokenKind::kString;
    advance();  // opening quote
    while (true) {
      if (i_ >= src_.size() || src_[i_] == '\n') {
        throw Error(ErrorCode::kSyntax, "unterminated string literal",
                    tok.pos);
      }
      char c = src_[i_];
      if (c == '"') {
        advance();
        return;
      }
      if (c == '\\') {
        advance();
        if (i_ >= src_.size()) {
          throw Error(ErrorCode::kSyntax, "unterminated string literal",
                      tok.pos);
        }
        char esc = src_[i_];
        switch (esc) {
          case 'n': tok.text += '\n'; break;
          case 't': tok.text += '\t'; break;
          case 'r': tok.text += '\r'; break;
          case '"': tok.text += '"'; break;
          case '\\': tok.text += '\\'; break;
          default:
            throw Error(ErrorCode::kSyntax,
                        std::string("unknown escape '\\") + esc + "'", pos_);
        }
        advance();
        continue;
      }
      tok.text += c;
      advance();
    }
  }

  void lex_punct(Token& tok) {
    for (auto p : kPunctuation) {
      if (src_.substr(i_, p.size()) == p) {
        tok.kind = TokenKind::kPunct;
        tok.text = std::string(p);
        for (std::size_t k = 0; k < p.size(); ++k) advance();
        return;
      }
    }
    throw Error(ErrorCode::kSyntax,
                std::string("unexpected character '") + src_[i_] + "'", pos_);
  }

  std::string_view src_;
  std::size_t i_ = 0;
  SourcePos pos_;
};

}  // namespace

std::vector<Token> tokenize(std::string_view source) {
  return Lexer(source).run();
}

std::string describe(const Token& tok) {
  switch (tok.kind) {
    case TokenKind::kEnd: return "end of input";
    case TokenKind::kString: return "string literal";
    case TokenKind::kIdent: return "'" + tok.text + "'";
    default: return "'" + tok.text + "'";
  }
}

TokenStream::TokenStream(std::vector<Token> tokens) : tokens_(std::move(tokens)) {
  if (tokens_.empty() || tokens_.back().kind != TokenKind::kEnd) {
    Token end;
    if (!tokens_.empty()) end.pos = tokens_.back().pos;
    tokens_.push_back(end);
  }
}

const Token& TokenStream::peek(std::size_t ahead) const {
  std::size_t i = std::min(cursor_ + ahead, tokens_.size() - 1);
  return tokens_[i];
}

const Token& TokenStream::next() {
  const Token& tok = tokens_[cursor_];
  if (cursor_ + 1 < tokens_.size()) ++cursor_;
  return tok;
}

bool TokenStream::is_punct(std::string_view p, std::size_t ahead) const {
  const Token& t = peek(ahead);
  return t.kind == TokenKind::kPunct && t.text == p;
}

bool TokenStream::is_ident(std::size_t ahead) const {
  return peek(ahead).kind == TokenKind::kIdent;
}

bool TokenStream::is_keyword(std::string_view word, std::size_t ahead) const {
  const Token& t = peek(ahead);
  return t.kind == TokenKind::kIdent && t.text == word;
}

bool TokenStream::accept_punct(std::string_view p) {
  if (!is_punct(p)) return false;
  next();
  return true;
}

bool TokenStream::accept_keyword(std::string_view word) {
  if (!is_keyword(word)) return false;
  next();
  return true;
}

const Token& TokenStream::expect_punct(std::string_view p) {
  if (!is_punct(p)) {
    fail("expected '" + std::string(p) + "', found " + describe(peek()));
  }
  return next();
}

const Token& TokenStream::expect_keyword(std::string_view word) {
  if (!is_keyword(word)) {
    fail("expected '" + std::string(word) + "', found " + describe(peek()));
  }
  return next();
}

const Token& TokenStream::expect_ident(std::string_view what) {
  if (!is_ident()) {
    fail("expected " + std::string(what) + ", found " + describe(peek()));
  }
  return next();
}

void TokenStream::fail(const std::string& message) const {
  fail_at(peek(), message);
}

void TokenStream::fail_at(const Token& tok, const std::string& message) const {
  throw Error(ErrorCode::kSyntax, message, tok.pos);
}

}  // namespace gretlite
