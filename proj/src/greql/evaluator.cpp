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

#include "gretlite/greql/evaluator.hpp"

#include <cmath>

#include "gretlite/error.hpp"

namespace gretlite::greql {

namespace {

bool is_numeric(const Value& v) {
  return v.is<std::int64_t>() || v.is<double>();
}

double as_double(const Value& v) {
  if (const auto* i = v.get_if<std::int64_t>()) return static_cast<double>(*i);
  return v.as<double>();
}

[[noreturn]] void type_error(const std::string& what, const Value& v) {
  throw Error(ErrorCode::kTypeMismatch,
              what + ", got " + std::string(to_string(v.type())) + " " +
                  v.to_string());
}

// Boolean-or-undefined operand of a logical operator.
std::optional<bool> logical(const Value& v, std::string_view op) {
  if (const auto* b = v.get_if<bool>()) return *b;
  if (v.is_undefined()) return std::nullopt;
  type_error("'" + std::string(op) + "' expects a Boolean", v);
}

bool values_equal(const Value& a, const Value& b) {
  if (is_numeric(a) && is_numeric(b) && a.type() != b.type()) {
    return as_double(a) == as_double(b);
  }
  return a == b;
}

Value compare(BinaryOp op, const Value& a, const Value& b) {
  if (a.is_undefined() || b.is_undefined()) return Value(false);
  if (op == BinaryOp::kEqual) return Value(values_equal(a, b));
  if (op == BinaryOp::kNotEqual) return Value(!values_equal(a, b));
  int order = 0;
  if (is_numeric(a) && is_numeric(b)) {
    if (a.is<std::int64_t>() && b.is<std::int64_t>()) {
      auto x = a.as<std::int64_t>(), y = b.as<std::int64_t>();
      order = x < y ? -1 : (x > y ? 1 : 0);
    } else {
      double x = as_double(a), y = as_double(b);
      if (std::isnan(x) || std::isnan(y)) return Value(false);
      order = x < y ? -1 : (x > y ? 1 : 0);
    }
  } else if (a.is<std::string>() && b.is<std::string>()) {
    int c = a.as<std::string>().compare(b.as<std::string>());
    order = c < 0 ? -1 : (c > 0 ? 1 : 0);
  } else {
    throw Error(ErrorCode::kTypeMismatch,
                "cannot order " + std::string(to_string(a.type())) + " and " +
                    std::string(to_string(b.type())));
  }
  switch (op) {
    case BinaryOp::kLess: return Value(order < 0);
    case BinaryOp::kLessEqual: return Value(order <= 0);
    case BinaryOp::kGreater: return Value(order > 0);
    case BinaryOp::kGreaterEqual: return Value(order >= 0);
    default: return Value(false);
  }
}

Value arithmetic(BinaryOp op, const Value& a, const Value& b) {
  if (a.is_undefined() || b.is_undefined()) return Value();
  if (!is_numeric(a)) type_error("arithmetic expects numbers", a);
  if (!is_numeric(b)) type_error("arithmetic expects numbers", b);
  if (a.is<std::int64_t>() && b.is<std::int64_t>()) {
    std::int64_t x = a.as<std::int64_t>(), y = b.as<std::int64_t>();
    switch (op) {
      case BinaryOp::kAdd: return Value(x + y);
      case BinaryOp::kSubtract: return Value(x - y);
      case BinaryOp::kMultiply: return Value(x * y);
      case BinaryOp::kDivide:
      case BinaryOp::kModulo:
        if (y == 0) throw Error(ErrorCode::kDivisionByZero, "integer division by zero");
        return Value(op == BinaryOp::kDivide ? x / y : x % y);
      default: break;
    }
  }
  double x = as_double(a), y = as_double(b);
  switch (op) {
    case BinaryOp::kAdd: return Value(x + y);
    case BinaryOp::kSubtract: return Value(x - y);
    case BinaryOp::kMultiply: return Value(x * y);
    case BinaryOp::kDivide: return Value(x / y);
    case BinaryOp::kModulo: return Value(std::fmod(x, y));
    default: return Value();
  }
}

std::string concat_piece(const Value& v) {
  if (const auto* s = v.get_if<std::string>()) return *s;
  return v.to_string();
}

class Evaluator {
 public:
  Evaluator(const Graph& graph, const Bindings& bindings)
      : graph_(graph), bindings_(bindings) {}

  Value eval(const Expr& expr) {
    try {
      return std::visit([this](const auto& node) { return eval_node(node); },
                        expr.node);
    } catch (const Error& e) {
      if (e.pos()) throw;
      throw Error(e.code(), e.what(), expr.pos);
    }
  }

 private:
  Value eval_node(const Literal& lit) { return lit.value; }

  Value eval_node(const VarRef& ref) {
    for (auto it = scope_.rbegin(); it != scope_.rend(); ++it) {
      if (it->first == ref.name) return it->second;
    }
    if (auto it = bindings_.variables.find(ref.name);
        it != bindings_.variables.end()) {
      return it->second;
    }
    if (bindings_.resolver) {
      if (auto v = bindings_.resolver(ref.name)) return *v;
    }
    throw Error(ErrorCode::kUnboundVariable,
                "unbound variable '" + ref.name + "'");
  }

  Value eval_node(const DollarRef&) {
    if (!bindings_.dollar) {
      throw Error(ErrorCode::kUnboundVariable, "'$' is not bound here");
    }
    return *bindings_.dollar;
  }

  Value eval_node(const ElementSetExpr& set) {
    const Schema& schema = graph_.schema();
    struct Restriction {
      const ClassBase* cls;
      bool exact;
    };
    std::vector<Restriction> restrictions;
    for (const auto& t : set.types) {
      const ClassBase* cls = nullptr;
      if (set.kind == ElementKind::kVertex) {
        cls = schema.find_vertex_class(t.name);
      } else {
        cls = schema.find_edge_class(t.name);
      }
      if (cls == nullptr) {
        throw Error(ErrorCode::kUnknownClass,
                    std::string("unknown ") +
                        (set.kind == ElementKind::kVertex ? "vertex" : "edge") +
                        " class '" + t.name + "'");
      }
      restrictions.push_back({cls, t.exact});
    }
    auto accepts = [&](const ClassBase& cls) {
      if (restrictions.empty()) return true;
      for (const auto& r : restrictions) {
        if (r.exact ? &cls == r.cls : cls.specializes(*r.cls)) return true;
      }
      return false;
    };
    SetBuilder out;
    if (set.kind == ElementKind::kVertex) {
      for (VertexId v : graph_.vertices()) {
        if (accepts(graph_.class_of(v))) out.insert(Value(v));
      }
    } else {
      for (EdgeId e : graph_.edges()) {
        if (accepts(graph_.class_of(e))) out.insert(Value(e));
      }
    }
    return std::move(out).build();
  }

  Value eval_node(const Comprehension& c) {
    struct Slot {
      const std::string* name;
      std::size_t decl;
      bool first_of_decl;
    };
    std::vector<Slot> slots;
    for (std::size_t d = 0; d < c.declarations.size(); ++d) {
      const auto& names = c.declarations[d].names;
      for (std::size_t i = 0; i < names.size(); ++i) {
        slots.push_back({&names[i], d, i == 0});
      }
    }
    std::vector<Value> domains(c.declarations.size());
    std::size_t scope_mark = scope_.size();

    SetBuilder set_out;
    MapBuilder map_out;
    std::vector<Value> list_out;

    auto emit = [&]() {
      if (c.filter) {
        Value keep = eval(*c.filter);
        if (const auto* b = keep.get_if<bool>()) {
          if (!*b) return;
        } else if (keep.is_undefined()) {
          return;
        } else {
          type_error("'with' expects a Boolean", keep);
        }
      }
      if (c.kind == ReportKind::kMap) {
        Value key = eval(*c.report.front());
        map_out.insert(std::move(key), eval(*c.map_value));
        return;
      }
      Value row;
      if (c.report.size() == 1) {
        row = eval(*c.report.front());
      } else {
        std::vector<Value> parts;
        parts.reserve(c.report.size());
        for (const auto& r : c.report) parts.push_back(eval(*r));
        row = Value(Tuple(std::move(parts)));
      }
      if (c.kind == ReportKind::kSet) {
        set_out.insert(std::move(row));
      } else {
        list_out.push_back(std::move(row));
      }
    };

    auto loop = [&](auto& self, std::size_t k) -> void {
      if (k == slots.size()) {
        emit();
        return;
      }
      const Slot& slot = slots[k];
      if (slot.first_of_decl) {
        Value domain = eval(*c.declarations[slot.decl].domain);
        if (domain.is<Map>() || !domain.is_collection()) {
          type_error("declaration domain of '" + *slot.name +
                         "' must be a Set, List or Tuple",
                     domain);
        }
        domains[slot.decl] = std::move(domain);
      }
      // Hold a copy; inner declarations may overwrite domains[...] slots of
      // later declarations only.
      const Value domain = domains[slot.decl];
      for (const auto& item : domain.items()) {
        scope_.emplace_back(*slot.name, item);
        self(self, k + 1);
        scope_.pop_back();
      }
    };

    try {
      loop(loop, 0);
    } catch (...) {
      scope_.resize(scope_mark);
      throw;
    }

    switch (c.kind) {
      case ReportKind::kSet: return Value(std::move(set_out).build());
      case ReportKind::kMap: return Value(std::move(map_out).build());
      case ReportKind::kList: return Value(List(std::move(list_out)));
    }
    return Value();
  }

  Value eval_node(const PathExpr& p) {
    Value start = eval(*p.start);
    if (start.is_undefined()) return Value();
    std::vector<VertexId> starts;
    if (const auto* v = start.get_if<VertexId>()) {
      starts.push_back(*v);
    } else if (start.is<Set>() || start.is<List>() || start.is<Tuple>()) {
      for (const auto& item : start.items()) {
        const auto* v = item.get_if<VertexId>();
        if (v == nullptr) type_error("path start must contain vertices", item);
        starts.push_back(*v);
      }
    } else {
      type_error("path start must be a vertex or a vertex collection", start);
    }
    SetBuilder reached;
    for (VertexId v : starts) {
      Set step = eval_path(graph_, v, p.steps);
      for (const auto& r : step.items()) reached.insert(r);
    }
    Set result = std::move(reached).build();
    if (!p.target) return Value(std::move(result));
    Value target = eval(*p.target);
    if (target.is_undefined()) return Value(false);
    return Value(result.contains(target));
  }

  Value eval_node(const Call& call) {
    std::vector<Value> args;
    args.reserve(call.args.size());
    for (const auto& a : call.args) args.push_back(eval(*a));
    return call_builtin(graph_, call.name, call.type_args, args);
  }

  Value eval_node(const MapConstructor& m) {
    MapBuilder out;
    for (const auto& [k, v] : m.entries) out.insert(eval(*k), eval(*v));
    return Value(std::move(out).build());
  }

  Value eval_node(const Unary& u) {
    Value v = eval(*u.operand);
    if (u.op == UnaryOp::kNot) {
      auto b = logical(v, "not");
      return b ? Value(!*b) : Value();
    }
    if (v.is_undefined()) return Value();
    if (const auto* i = v.get_if<std::int64_t>()) return Value(-*i);
    if (const auto* d = v.get_if<double>()) return Value(-*d);
    type_error("unary '-' expects a number", v);
  }

  Value eval_node(const Binary& b) {
    switch (b.op) {
      case BinaryOp::kAnd: {
        auto lhs = logical(eval(*b.lhs), "and");
        if (lhs == false) return Value(false);
        auto rhs = logical(eval(*b.rhs), "and");
        if (rhs == false) return Value(false);
        if (lhs && rhs) return Value(true);
        return Value();
      }
      case BinaryOp::kOr: {
        auto lhs = logical(eval(*b.lhs), "or");
        if (lhs == true) return Value(true);
        auto rhs = logical(eval(*b.rhs), "or");
        if (rhs == true) return Value(true);
        if (lhs && rhs) return Value(false);
        return Value();
      }
      case BinaryOp::kEqual:
      case BinaryOp::kNotEqual:
      case BinaryOp::kLess:
      case BinaryOp::kLessEqual:
      case BinaryOp::kGreater:
      case BinaryOp::kGreaterEqual:
        return compare(b.op, eval(*b.lhs), eval(*b.rhs));
      case BinaryOp::kConcat: {
        Value lhs = eval(*b.lhs);
        Value rhs = eval(*b.rhs);
        if (lhs.is_undefined() || rhs.is_undefined()) return Value();
        return Value(concat_piece(lhs) + concat_piece(rhs));
      }
      default:
        return arithmetic(b.op, eval(*b.lhs), eval(*b.rhs));
    }
  }

  Value eval_node(const Conditional& c) {
    Value cond = eval(*c.condition);
    auto b = logical(cond, "?:");
    if (!b) return Value();
    return *b ? eval(*c.then_branch) : eval(*c.else_branch);
  }

  Value eval_node(const Index& ix) {
    Value base = eval(*ix.base);
    Value index = eval(*ix.index);
    if (base.is_undefined()) return Value();
    if (const auto* m = base.get_if<Map>()) {
      const Value* found = m->find(index);
      return found != nullptr ? *found : Value();
    }
    if (base.is<Tuple>() || base.is<List>()) {
      const auto* i = index.get_if<std::int64_t>();
      if (i == nullptr) type_error("index must be an Integer", index);
      auto items = base.items();
      if (*i < 0 || static_cast<std::size_t>(*i) >= items.size()) {
        throw Error(ErrorCode::kIndexOutOfRange,
                    "index " + std::to_string(*i) + " out of range for " +
                        base.to_string() + " of size " +
                        std::to_string(items.size()));
      }
      return items[static_cast<std::size_t>(*i)];
    }
    type_error("only tuples, lists and maps can be indexed", base);
  }

  Value eval_node(const AttributeAccess& a) {
    Value base = eval(*a.base);
    if (base.is_undefined()) return Value();
    auto ref = base.element();
    if (!ref) type_error("attribute access '." + a.attribute + "' expects an element", base);
    return graph_.get_attribute(*ref, a.attribute);
  }

  const Graph& graph_;
  const Bindings& bindings_;
  std::vector<std::pair<std::string, Value>> scope_;
};

}  // namespace

Value evaluate(const Expr& expr, const Graph& graph, const Bindings& bindings) {
  return Evaluator(graph, bindings).eval(expr);
}

Value evaluate(const Query& query, const Graph& graph, const Bindings& bindings) {
  return evaluate(*query.root, graph, bindings);
}

}  // namespace gretlite::greql
