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

#include "gretlite/io/schema_format.hpp"

#include <functional>
#include <unordered_map>
#include <vector>

#include "gretlite/error.hpp"
#include "gretlite/lexer.hpp"

namespace gretlite::io {

namespace {

struct Decl {
  bool edge = false;
  bool is_abstract = false;
  bool aggregation = false;
  std::string name;
  std::vector<std::string> supertypes;
  std::string from;
  std::string to;
  std::vector<AttributeDecl> attributes;
  SourcePos pos;
};

[[noreturn]] void rethrow_at(const Error& e, SourcePos pos) {
  if (e.pos()) throw e;
  throw Error(e.code(), e.what(), pos);
}

void skip_multiplicity(TokenStream& ts) {
  if (!ts.accept_punct("(")) return;
  ts.next();
  ts.expect_punct(",");
  ts.next();
  ts.expect_punct(")");
}

std::vector<AttributeDecl> attribute_block(TokenStream& ts) {
  std::vector<AttributeDecl> out;
  if (!ts.accept_punct("{")) return out;
  if (ts.accept_punct("}")) return out;
  do {
    AttributeDecl a;
    a.name = ts.expect_ident("attribute name").text;
    ts.expect_punct(":");
    const Token& type = ts.expect_ident("attribute type");
    auto parsed = parse_attr_type(type.text);
    if (!parsed) ts.fail_at(type, "unknown attribute type '" + type.text + "'");
    a.type = *parsed;
    out.push_back(std::move(a));
  } while (ts.accept_punct(","));
  ts.expect_punct("}");
  return out;
}

Decl declaration(TokenStream& ts) {
  Decl d;
  d.pos = ts.peek().pos;
  for (;;) {
    if (ts.accept_keyword("abstract")) {
      d.is_abstract = true;
    } else if (ts.accept_keyword("aggregation")) {
      d.aggregation = true;
    } else {
      break;
    }
  }
  if (ts.accept_keyword("edgeclass")) {
    d.edge = true;
  } else if (ts.accept_keyword("vertexclass")) {
    if (d.aggregation) ts.fail("only edge classes can be aggregations");
  } else {
    ts.fail("expected 'vertexclass' or 'edgeclass', found " +
            describe(ts.peek()));
  }
  d.name = ts.expect_ident("class name").text;
  if (ts.accept_punct(":")) {
    do {
      d.supertypes.push_back(ts.expect_ident("supertype name").text);
    } while (ts.accept_punct(","));
  }
  if (d.edge) {
    ts.expect_keyword("from");
    d.from = ts.expect_ident("start vertex class").text;
    skip_multiplicity(ts);
    ts.expect_keyword("to");
    d.to = ts.expect_ident("end vertex class").text;
    skip_multiplicity(ts);
  }
  d.attributes = attribute_block(ts);
  ts.expect_punct(";");
  return d;
}

void write_attributes(std::string& out, const std::vector<AttributeDecl>& attrs) {
  if (attrs.empty()) return;
  out += " {";
  for (std::size_t i = 0; i < attrs.size(); ++i) {
    out += i ? ", " : " ";
    out += attrs[i].name + ": " + std::string(to_string(attrs[i].type));
  }
  out += " }";
}

void write_supertypes(std::string& out, const std::vector<std::string>& supers) {
  for (std::size_t i = 0; i < supers.size(); ++i) {
    out += i ? ", " : " : ";
    out += supers[i];
  }
}

}  // namespace

std::shared_ptr<const Schema> load_schema(std::string_view text) {
  TokenStream ts(tokenize(text));
  ts.expect_keyword("schema");
  auto schema = std::make_shared<Schema>(ts.expect_ident("schema name").text);
  ts.expect_punct(";");

  std::vector<Decl> decls;
  std::unordered_map<std::string, std::size_t> by_name;
  while (!ts.at_end()) {
    decls.push_back(declaration(ts));
    if (!by_name.emplace(decls.back().name, decls.size() - 1).second) {
      throw Error(ErrorCode::kDuplicateName,
                  "class '" + decls.back().name + "' is declared twice",
                  decls.back().pos);
    }
  }

  // Supertypes are defined before their subclasses and vertex classes
  // before edge classes, whatever the file order.
  enum class Mark { kNone, kActive, kDone };
  std::vector<Mark> marks(decls.size(), Mark::kNone);
  std::function<void(std::size_t)> define = [&](std::size_t i) {
    Decl& d = decls[i];
    if (marks[i] == Mark::kDone) return;
    if (marks[i] == Mark::kActive) {
      throw Error(ErrorCode::kInheritanceCycle,
                  "inheritance cycle through class '" + d.name + "'", d.pos);
    }
    marks[i] = Mark::kActive;
    for (const auto& s : d.supertypes) {
      auto it = by_name.find(s);
      if (it == by_name.end()) {
        throw Error(ErrorCode::kUnknownSupertype,
                    "class '" + d.name + "' names unknown supertype '" + s + "'",
                    d.pos);
      }
      if (decls[it->second].edge != d.edge) {
        throw Error(ErrorCode::kUnknownSupertype,
                    "class '" + d.name + "' cannot specialize '" + s +
                        "' of the other element kind",
                    d.pos);
      }
      define(it->second);
    }
    try {
      if (d.edge) {
        schema->define_edge_class(d.name, d.is_abstract, d.supertypes, d.from,
                                  d.to, d.aggregation, d.attributes);
      } else {
        schema->define_vertex_class(d.name, d.is_abstract, d.supertypes,
                                    d.attributes);
      }
    } catch (const Error& e) {
      rethrow_at(e, d.pos);
    }
    marks[i] = Mark::kDone;
  };
  for (int pass = 0; pass < 2; ++pass) {
    for (std::size_t i = 0; i < decls.size(); ++i) {
      if (decls[i].edge == (pass == 1)) define(i);
    }
  }
  return schema;
}

std::string save_schema(const Schema& schema) {
  std::string out = "schema " + schema.name() + ";\n";
  for (const auto& cls : schema.vertex_classes()) {
    out += cls.is_abstract ? "abstract vertexclass " : "vertexclass ";
    out += cls.name;
    write_supertypes(out, cls.supertypes);
    write_attributes(out, cls.own_attributes);
    out += ";\n";
  }
  for (const auto& cls : schema.edge_classes()) {
    if (cls.is_aggregation) out += "aggregation ";
    if (cls.is_abstract) out += "abstract ";
    out += "edgeclass " + cls.name;
    write_supertypes(out, cls.supertypes);
    out += " from " + cls.from_class + " to " + cls.to_class;
    write_attributes(out, cls.own_attributes);
    out += ";\n";
  }
  return out;
}

}  // namespace gretlite::io
