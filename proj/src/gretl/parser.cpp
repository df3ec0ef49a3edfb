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

#include "gretlite/gretl/parser.hpp"

#include <algorithm>
#include <optional>
#include <unordered_map>

namespace gretlite::gretl {

bool Template::has_refs() const {
  return std::any_of(vertices.begin(), vertices.end(), [](const auto& v) {
    return v.kind == TemplateVertex::Kind::kRef;
  });
}

std::string_view op_name(const Statement& statement) {
  return std::visit(
      [](const auto& op) -> std::string_view {
        using T = std::decay_t<decltype(op)>;
        if constexpr (std::is_same_v<T, CreateVertices>) return "CreateVertices";
        if constexpr (std::is_same_v<T, CreateEdges>) return "CreateEdges";
        if constexpr (std::is_same_v<T, SetAttributes>) return "SetAttributes";
        if constexpr (std::is_same_v<T, CreateSubgraph>) return "CreateSubgraph";
        if constexpr (std::is_same_v<T, MatchReplace>) return "MatchReplace";
        if constexpr (std::is_same_v<T, Delete>) return "Delete";
        if constexpr (std::is_same_v<T, Assign>) return "Assign";
        if constexpr (std::is_same_v<T, Iteratively>) return "Iteratively";
      },
      statement.op);
}

void validate_template(const Template& pattern, bool allow_refs) {
  if (pattern.vertices.empty()) {
    throw Error(ErrorCode::kMalformedTemplate, "template has no vertices");
  }
  for (const auto& v : pattern.vertices) {
    if (v.kind == TemplateVertex::Kind::kRef && !allow_refs) {
      throw Error(ErrorCode::kMalformedTemplate,
                  "template vertex '" + v.alias +
                      "' references a match element; only MatchReplace "
                      "templates may contain references",
                  v.pos);
    }
    if (!v.expr) {
      throw Error(ErrorCode::kMalformedTemplate,
                  "template vertex '" + v.alias + "' has no archetype", v.pos);
    }
  }
  for (const auto& e : pattern.edges) {
    if (e.start >= pattern.vertices.size() || e.end >= pattern.vertices.size()) {
      throw Error(ErrorCode::kMalformedTemplate,
                  "template edge '" + e.class_name + "' has a bad endpoint",
                  e.pos);
    }
  }
}

namespace {

class ScriptParser {
 public:
  explicit ScriptParser(std::string_view text) : tokens_(tokenize(text)) {}

  Transformation run() {
    Transformation t;
    if (!tokens_.is_keyword("transformation")) {
      tokens_.fail("script must start with 'transformation NAME;'");
    }
    tokens_.next();
    t.name = tokens_.expect_ident("transformation name").text;
    tokens_.expect_punct(";");
    while (!tokens_.at_end()) t.statements.push_back(statement());
    return t;
  }

 private:
  Statement statement() {
    const Token& head = tokens_.peek();
    if (head.kind != TokenKind::kIdent) {
      tokens_.fail("expected an operation, found " + describe(head));
    }
    SourcePos pos = head.pos;
    const std::string word = head.text;

    if (tokens_.is_punct(":=", 1)) {
      tokens_.next();
      tokens_.next();
      Assign a{word, query()};
      tokens_.expect_punct(";");
      variables_.push_back(word);
      return {std::move(a), pos};
    }

    tokens_.next();
    if (word == "CreateVertices" || word == "CreateEdges") {
      std::string cls = tokens_.expect_ident("class name").text;
      tokens_.expect_punct("<==");
      greql::Query q = query();
      tokens_.expect_punct(";");
      if (word == "CreateVertices") {
        return {CreateVertices{std::move(cls), std::move(q)}, pos};
      }
      return {CreateEdges{std::move(cls), std::move(q)}, pos};
    }
    if (word == "SetAttributes") {
      std::string cls = tokens_.expect_ident("class name").text;
      tokens_.expect_punct(".");
      std::string attr = tokens_.expect_ident("attribute name").text;
      tokens_.expect_punct("<==");
      greql::Query q = query();
      tokens_.expect_punct(";");
      return {SetAttributes{std::move(cls), std::move(attr), std::move(q)}, pos};
    }
    if (word == "CreateSubgraph" || word == "MatchReplace") {
      bool refs = word == "MatchReplace";
      Template pattern = template_graph(refs);
      tokens_.expect_punct("<==");
      greql::Query q = query();
      tokens_.expect_punct(";");
      if (refs) return {MatchReplace{std::move(pattern), std::move(q)}, pos};
      return {CreateSubgraph{std::move(pattern), std::move(q)}, pos};
    }
    if (word == "Delete") {
      tokens_.accept_punct("<==");
      Delete d{query()};
      tokens_.expect_punct(";");
      return {std::move(d), pos};
    }
    if (word == "Iteratively") {
      tokens_.expect_punct("{");
      Iteratively it;
      while (!tokens_.is_punct("}")) {
        if (tokens_.at_end()) tokens_.fail("unterminated Iteratively block");
        it.body.push_back(statement());
      }
      if (it.body.empty()) {
        tokens_.fail("Iteratively block must contain at least one operation");
      }
      tokens_.next();
      tokens_.accept_punct(";");
      return {std::move(it), pos};
    }
    throw Error(ErrorCode::kSyntax, "unknown operation '" + word + "'", pos);
  }

  greql::Query query() {
    greql::ParseOptions options;
    options.external_names = variables_;
    greql::Query q;
    q.root = greql::parse_expression(tokens_, options);
    return q;
  }

  greql::ExprPtr template_expr() {
    greql::ParseOptions options;
    options.external_names = variables_;
    options.allow_dollar = true;
    return greql::parse_expression(tokens_, options);
  }

  // template := chain {',' chain}; chain := node {edge node}
  Template template_graph(bool allow_refs) {
    Template t;
    pending_.clear();
    do {
      std::size_t left = node(t);
      while (tokens_.is_punct("-->") || tokens_.is_punct("<--")) {
        const Token& arrow = tokens_.next();
        PendingEdge edge = edge_body(arrow.pos);
        std::size_t right = node(t);
        if (arrow.text == "-->") {
          edge.start = left;
          edge.end = right;
        } else {
          edge.start = right;
          edge.end = left;
        }
        pending_.push_back(std::move(edge));
        left = right;
      }
    } while (tokens_.accept_punct(","));

    // Bare alias nodes may refer to vertices declared later in the template.
    std::unordered_map<std::string, std::size_t> by_alias;
    for (std::size_t i = 0; i < t.vertices.size(); ++i) {
      auto [it, inserted] = by_alias.emplace(t.vertices[i].alias, i);
      if (!inserted) {
        throw Error(ErrorCode::kMalformedTemplate,
                    "duplicate template alias '" + t.vertices[i].alias + "'",
                    t.vertices[i].pos);
      }
    }
    auto resolve = [&](const NodeRef& ref) -> std::size_t {
      if (ref.index) return *ref.index;
      auto it = by_alias.find(ref.alias);
      if (it == by_alias.end()) {
        throw Error(ErrorCode::kMalformedTemplate,
                    "unknown template alias '" + ref.alias + "'", ref.pos);
      }
      return it->second;
    };
    for (auto& p : pending_) {
      TemplateEdge e;
      e.class_name = std::move(p.class_name);
      e.start = resolve(nodes_[p.start]);
      e.end = resolve(nodes_[p.end]);
      e.archetype = std::move(p.archetype);
      e.attributes = std::move(p.attributes);
      e.pos = p.pos;
      t.edges.push_back(std::move(e));
    }
    nodes_.clear();
    validate_template(t, allow_refs);
    return t;
  }

  struct NodeRef {
    std::optional<std::size_t> index;
    std::string alias;
    SourcePos pos;
  };

  struct PendingEdge {
    std::string class_name;
    std::size_t start = 0;  // into nodes_
    std::size_t end = 0;
    greql::ExprPtr archetype;
    std::vector<AttributeAssignment> attributes;
    SourcePos pos;
  };

  // Returns an index into nodes_.
  std::size_t node(Template& t) {
    const Token& tok = tokens_.peek();
    if (tok.kind == TokenKind::kIdent) {
      tokens_.next();
      nodes_.push_back({std::nullopt, tok.text, tok.pos});
      return nodes_.size() - 1;
    }
    if (!tokens_.is_punct("(")) {
      tokens_.fail("expected a template vertex '(...)' or alias, found " +
                   describe(tok));
    }
    SourcePos pos = tokens_.next().pos;
    TemplateVertex v;
    v.pos = pos;
    if (tokens_.is_ident() && tokens_.is_punct(":=", 1)) {
      v.kind = TemplateVertex::Kind::kRef;
      v.alias = tokens_.next().text;
      tokens_.next();
      v.expr = template_expr();
      if (tokens_.accept_punct("|")) v.attributes = assignments();
    } else if (tokens_.is_punct("$")) {
      v.kind = TemplateVertex::Kind::kRef;
      v.expr = template_expr();
      if (tokens_.accept_punct("|")) v.attributes = assignments();
    } else {
      v.kind = TemplateVertex::Kind::kNew;
      if (tokens_.is_ident() && tokens_.is_punct(":", 1)) {
        v.alias = tokens_.next().text;
        tokens_.next();
      }
      v.class_name = tokens_.expect_ident("vertex class name").text;
      if (!tokens_.accept_punct("|")) {
        tokens_.fail("template vertex '" + v.class_name +
                     "' needs an archetype: (" + v.class_name + " | EXPR)");
      }
      v.expr = template_expr();
      if (tokens_.accept_punct(",")) v.attributes = assignments();
    }
    tokens_.expect_punct(")");
    if (v.alias.empty()) v.alias = "#" + std::to_string(t.vertices.size());
    t.vertices.push_back(std::move(v));
    nodes_.push_back({t.vertices.size() - 1, t.vertices.back().alias, pos});
    return nodes_.size() - 1;
  }

  PendingEdge edge_body(SourcePos pos) {
    PendingEdge e;
    e.pos = pos;
    tokens_.expect_punct("{");
    e.class_name = tokens_.expect_ident("edge class name").text;
    if (tokens_.accept_punct("|")) e.archetype = template_expr();
    if (tokens_.accept_punct(",")) e.attributes = assignments();
    tokens_.expect_punct("}");
    return e;
  }

  std::vector<AttributeAssignment> assignments() {
    std::vector<AttributeAssignment> out;
    do {
      std::string name = tokens_.expect_ident("attribute name").text;
      tokens_.expect_punct("=");
      out.push_back({std::move(name), template_expr()});
    } while (tokens_.accept_punct(","));
    return out;
  }

  TokenStream tokens_;
  std::vector<std::string> variables_;
  std::vector<NodeRef> nodes_;
  std::vector<PendingEdge> pending_;
};

}  // namespace

Transformation parse_script(std::string_view text) {
  return ScriptParser(text).run();
}

}  // namespace gretlite::gretl
