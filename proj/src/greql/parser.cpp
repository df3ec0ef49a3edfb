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

#include "gretlite/greql/parser.hpp"

#include <algorithm>
#include <array>

namespace gretlite::greql {

namespace {

constexpr std::array<std::string_view, 13> kReserved = {
    "from", "with", "report", "reportSet", "reportList", "reportMap", "end",
    "and",  "or",   "not",    "true",      "false",      "V",
};

class Parser {
 public:
  Parser(TokenStream& tokens, const ParseOptions& options)
      : tokens_(tokens), options_(options) {}

  ExprPtr expression() { return conditional(); }

 private:
  ExprPtr conditional() {
    ExprPtr cond = or_expr();
    if (!tokens_.is_punct("?")) return cond;
    SourcePos pos = tokens_.next().pos;
    ExprPtr then_branch = expression();
    tokens_.expect_punct(":");
    ExprPtr else_branch = expression();
    return make_expr(Conditional{std::move(cond), std::move(then_branch),
                                 std::move(else_branch)},
                     pos);
  }

  ExprPtr or_expr() {
    ExprPtr lhs = and_expr();
    while (tokens_.is_keyword("or")) {
      SourcePos pos = tokens_.next().pos;
      lhs = make_expr(Binary{BinaryOp::kOr, std::move(lhs), and_expr()}, pos);
    }
    return lhs;
  }

  ExprPtr and_expr() {
    ExprPtr lhs = not_expr();
    while (tokens_.is_keyword("and")) {
      SourcePos pos = tokens_.next().pos;
      lhs = make_expr(Binary{BinaryOp::kAnd, std::move(lhs), not_expr()}, pos);
    }
    return lhs;
  }

  ExprPtr not_expr() {
    if (tokens_.is_keyword("not")) {
      SourcePos pos = tokens_.next().pos;
      return make_expr(Unary{UnaryOp::kNot, not_expr()}, pos);
    }
    return comparison();
  }

  ExprPtr comparison() {
    ExprPtr lhs = concat();
    static constexpr std::array<std::pair<std::string_view, BinaryOp>, 6>
        kOps = {{{"=", BinaryOp::kEqual},
                 {"<>", BinaryOp::kNotEqual},
                 {"<=", BinaryOp::kLessEqual},
                 {">=", BinaryOp::kGreaterEqual},
                 {"<", BinaryOp::kLess},
                 {">", BinaryOp::kGreater}}};
    for (const auto& [spelling, op] : kOps) {
      if (tokens_.is_punct(spelling)) {
        SourcePos pos = tokens_.next().pos;
        return make_expr(Binary{op, std::move(lhs), concat()}, pos);
      }
    }
    return lhs;
  }

  ExprPtr concat() {
    ExprPtr lhs = additive();
    while (tokens_.is_punct("++")) {
      SourcePos pos = tokens_.next().pos;
      lhs = make_expr(Binary{BinaryOp::kConcat, std::move(lhs), additive()},
                      pos);
    }
    return lhs;
  }

  ExprPtr additive() {
    ExprPtr lhs = multiplicative();
    while (tokens_.is_punct("+") || tokens_.is_punct("-")) {
      const Token& op = tokens_.next();
      BinaryOp kind = op.text == "+" ? BinaryOp::kAdd : BinaryOp::kSubtract;
      lhs = make_expr(Binary{kind, std::move(lhs), multiplicative()}, op.pos);
    }
    return lhs;
  }

  ExprPtr multiplicative() {
    ExprPtr lhs = unary();
    while (tokens_.is_punct("*") || tokens_.is_punct("/") ||
           tokens_.is_punct("%")) {
      const Token& op = tokens_.next();
      BinaryOp kind = op.text == "*"   ? BinaryOp::kMultiply
                      : op.text == "/" ? BinaryOp::kDivide
                                       : BinaryOp::kModulo;
      lhs = make_expr(Binary{kind, std::move(lhs), unary()}, op.pos);
    }
    return lhs;
  }

  ExprPtr unary() {
    if (tokens_.is_punct("-")) {
      SourcePos pos = tokens_.next().pos;
      return make_expr(Unary{UnaryOp::kNegate, unary()}, pos);
    }
    return path();
  }

  bool at_step() const {
    return tokens_.is_punct("-->") || tokens_.is_punct("<--") ||
           tokens_.is_punct("<->") || tokens_.is_punct("<>--");
  }

  bool at_path_target() const {
    if (tokens_.is_punct("$") || tokens_.is_punct("(")) return true;
    return tokens_.is_ident() && !is_reserved_word(tokens_.peek().text);
  }

  ExprPtr path() {
    ExprPtr start = postfix();
    if (!at_step()) return start;
    SourcePos pos = tokens_.peek().pos;
    PathExpr p;
    p.start = std::move(start);
    while (at_step()) {
      const Token& tok = tokens_.next();
      PathStep step;
      if (tok.text == "-->") {
        step.direction = StepDirection::kForward;
      } else if (tok.text == "<--") {
        step.direction = StepDirection::kBackward;
      } else if (tok.text == "<->") {
        step.direction = StepDirection::kEither;
      } else {
        step.direction = StepDirection::kAggregation;
      }
      if (tokens_.accept_punct("{")) {
        do {
          step.edge_classes.push_back(
              tokens_.expect_ident("edge class name").text);
        } while (tokens_.accept_punct(","));
        tokens_.expect_punct("}");
      }
      p.steps.push_back(std::move(step));
    }
    if (at_path_target()) p.target = postfix();
    return make_expr(std::move(p), pos);
  }

  ExprPtr postfix() {
    ExprPtr base = primary();
    while (true) {
      if (tokens_.is_punct(".")) {
        SourcePos pos = tokens_.next().pos;
        std::string attr = tokens_.expect_ident("attribute name").text;
        base = make_expr(AttributeAccess{std::move(base), std::move(attr)}, pos);
      } else if (tokens_.is_punct("[")) {
        SourcePos pos = tokens_.next().pos;
        ExprPtr index = expression();
        tokens_.expect_punct("]");
        base = make_expr(Index{std::move(base), std::move(index)}, pos);
      } else {
        return base;
      }
    }
  }

  std::vector<TypeRestriction> type_list() {
    std::vector<TypeRestriction> types;
    tokens_.expect_punct("{");
    do {
      TypeRestriction t;
      t.name = tokens_.expect_ident("class name").text;
      t.exact = tokens_.accept_punct("!");
      types.push_back(std::move(t));
    } while (tokens_.accept_punct(","));
    tokens_.expect_punct("}");
    return types;
  }

  std::vector<ExprPtr> arguments() {
    std::vector<ExprPtr> args;
    tokens_.expect_punct("(");
    if (tokens_.accept_punct(")")) return args;
    do {
      args.push_back(expression());
    } while (tokens_.accept_punct(","));
    tokens_.expect_punct(")");
    return args;
  }

  ExprPtr primary() {
    const Token& tok = tokens_.peek();
    switch (tok.kind) {
      case TokenKind::kInteger:
        tokens_.next();
        return make_expr(Literal{Value(tok.integer)}, tok.pos);
      case TokenKind::kDouble:
        tokens_.next();
        return make_expr(Literal{Value(tok.real)}, tok.pos);
      case TokenKind::kString:
        tokens_.next();
        return make_expr(Literal{Value(tok.text)}, tok.pos);
      case TokenKind::kEnd:
        tokens_.fail("unexpected end of input, expected an expression");
      case TokenKind::kPunct:
        return punct_primary();
      case TokenKind::kIdent:
        break;
    }
    SourcePos pos = tok.pos;
    const std::string word = tok.text;
    if (word == "true" || word == "false") {
      tokens_.next();
      return make_expr(Literal{Value(word == "true")}, pos);
    }
    if (word == "from") return comprehension();
    if (word == "V" || word == "E") {
      tokens_.next();
      ElementSetExpr set;
      set.kind = word == "V" ? ElementKind::kVertex : ElementKind::kEdge;
      if (tokens_.is_punct("{")) set.types = type_list();
      return make_expr(std::move(set), pos);
    }
    if (is_reserved_word(word)) {
      tokens_.fail("unexpected keyword '" + word + "'");
    }
    tokens_.next();
    if (word == "map" && tokens_.is_punct("(")) return map_constructor(pos);
    if (tokens_.is_punct("{") || tokens_.is_punct("(")) {
      Call call;
      call.name = word;
      if (tokens_.is_punct("{")) call.type_args = type_list();
      call.args = arguments();
      return make_expr(std::move(call), pos);
    }
    check_bound(word, pos);
    return make_expr(VarRef{word}, pos);
  }

  ExprPtr punct_primary() {
    const Token& tok = tokens_.next();
    if (tok.text == "(") {
      ExprPtr inner = expression();
      tokens_.expect_punct(")");
      return inner;
    }
    if (tok.text == "$") {
      if (!options_.allow_dollar) {
        throw Error(ErrorCode::kUnboundVariable,
                    "'$' is only bound inside templates", tok.pos);
      }
      return make_expr(DollarRef{}, tok.pos);
    }
    tokens_.fail_at(tok, "unexpected " + describe(tok) + ", expected an expression");
  }

  ExprPtr map_constructor(SourcePos pos) {
    MapConstructor m;
    tokens_.expect_punct("(");
    if (!tokens_.accept_punct(")")) {
      do {
        ExprPtr key = expression();
        tokens_.expect_punct("->");
        ExprPtr value = expression();
        m.entries.emplace_back(std::move(key), std::move(value));
      } while (tokens_.accept_punct(","));
      tokens_.expect_punct(")");
    }
    return make_expr(std::move(m), pos);
  }

  ExprPtr comprehension() {
    SourcePos pos = tokens_.expect_keyword("from").pos;
    Comprehension c;
    std::size_t scope_mark = scope_.size();
    do {
      Declaration decl;
      do {
        const Token& name = tokens_.expect_ident("variable name");
        if (is_reserved_word(name.text)) {
          tokens_.fail_at(name, "'" + name.text + "' is a reserved word");
        }
        decl.names.push_back(name.text);
      } while (tokens_.accept_punct(","));
      tokens_.expect_punct(":");
      // Names become visible after their own domain.
      decl.domain = expression();
      for (const auto& n : decl.names) scope_.push_back(n);
      c.declarations.push_back(std::move(decl));
    } while (tokens_.accept_punct(","));

    if (tokens_.accept_keyword("with")) {
      if (tokens_.peek().kind == TokenKind::kIdent &&
          (tokens_.peek().text.starts_with("report"))) {
        tokens_.fail("expected a predicate after 'with'");
      }
      c.filter = expression();
    }

    const Token& kw = tokens_.peek();
    if (tokens_.accept_keyword("reportMap")) {
      c.kind = ReportKind::kMap;
      c.report.push_back(expression());
      tokens_.expect_punct("->");
      c.map_value = expression();
    } else if (tokens_.accept_keyword("reportSet")) {
      c.kind = ReportKind::kSet;
      report_list(c);
    } else if (tokens_.accept_keyword("report") ||
               tokens_.accept_keyword("reportList")) {
      c.kind = ReportKind::kList;
      report_list(c);
    } else {
      tokens_.fail_at(kw, "expected 'report', 'reportSet', 'reportList' or "
                          "'reportMap', found " + describe(kw));
    }
    tokens_.expect_keyword("end");
    scope_.resize(scope_mark);
    return make_expr(std::move(c), pos);
  }

  void report_list(Comprehension& c) {
    do {
      c.report.push_back(expression());
    } while (tokens_.accept_punct(","));
  }

  void check_bound(const std::string& name, SourcePos pos) const {
    if (std::find(scope_.begin(), scope_.end(), name) != scope_.end()) return;
    const auto& ext = options_.external_names;
    if (std::find(ext.begin(), ext.end(), name) != ext.end()) return;
    if (name.starts_with("img_") || name.starts_with("arch_")) return;
    throw Error(ErrorCode::kUnboundVariable,
                "unbound variable '" + name + "'", pos);
  }

  TokenStream& tokens_;
  const ParseOptions& options_;
  std::vector<std::string> scope_;
};

}  // namespace

bool is_reserved_word(std::string_view word) {
  return word == "E" ||
         std::find(kReserved.begin(), kReserved.end(), word) != kReserved.end();
}

ExprPtr parse_expression(TokenStream& tokens, const ParseOptions& options) {
  return Parser(tokens, options).expression();
}

Query parse_query(std::string_view text, const ParseOptions& options) {
  TokenStream tokens(tokenize(text));
  Query q;
  q.root = parse_expression(tokens, options);
  if (!tokens.at_end()) {
    tokens.fail("unexpected " + describe(tokens.peek()) + " after expression");
  }
  q.text = std::string(text);
  return q;
}

}  // namespace gretlite::greql
