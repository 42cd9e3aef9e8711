#pragma once

#include <array>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qdham/errors.hpp"
#include "qdham/families.hpp"
#include "qdham/graph.hpp"

namespace qdham {

// Graph expression language:
//
//   expr := func "(" args ")"
//   kn(k) e(k) star(k) path(k) cycle(k)   one integer
//   bip(a, b) h(t, n)                      two integers
//   rep(k, expr)                           integer, expression
//   join(expr, expr) union(expr, expr)     two expressions
//   comp(expr)                             one expression
//
// Whitespace is insignificant. star(k) is K_{1,k}; e(k) is kK_1.

enum class ExprKind { Kn, E, Star, Path, Cycle, Bip, H, Join, Union, Rep, Comp };

struct Expr {
  ExprKind kind = ExprKind::Kn;
  std::vector<std::uint64_t> ints;
  std::vector<Expr> args;
  std::size_t offset = 0;  ///< position of the function name in the source text

  friend bool operator==(const Expr& a, const Expr& b) {
    return a.kind == b.kind && a.ints == b.ints && a.args == b.args;
  }
};

/// Orders above this are rejected while evaluating an expression.
inline constexpr std::uint64_t kMaxExprOrder = 4096;

namespace detail {

struct ExprSignature {
  std::string_view name;
  ExprKind kind;
  int ints;
  int exprs;
};

// Integer arguments always precede expression arguments.
inline constexpr std::array<ExprSignature, 11> kExprSignatures{{
    {"kn", ExprKind::Kn, 1, 0},
    {"e", ExprKind::E, 1, 0},
    {"star", ExprKind::Star, 1, 0},
    {"path", ExprKind::Path, 1, 0},
    {"cycle", ExprKind::Cycle, 1, 0},
    {"bip", ExprKind::Bip, 2, 0},
    {"h", ExprKind::H, 2, 0},
    {"join", ExprKind::Join, 0, 2},
    {"union", ExprKind::Union, 0, 2},
    {"rep", ExprKind::Rep, 1, 1},
    {"comp", ExprKind::Comp, 0, 1},
}};

inline const ExprSignature& signature(ExprKind kind) {
  for (const auto& s : kExprSignatures)
    if (s.kind == kind) return s;
  throw Error("unknown expression kind");
}

class ExprParser {
 public:
  explicit ExprParser(std::string_view text) : text_(text) {}

  Expr parse() {
    Expr e = parse_expr();
    skip_ws();
    if (pos_ != text_.size()) throw ParseError("expr: trailing input", pos_);
    return e;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  void expect(char c) {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != c) {
      throw ParseError(std::string("expr: expected '") + c + "'", pos_);
    }
    ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  std::uint64_t parse_int() {
    skip_ws();
    const std::size_t start = pos_;
    std::uint64_t value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
      if (value > kMaxExprOrder * kMaxExprOrder) throw ParseError("expr: integer too large", start);
      ++pos_;
    }
    if (pos_ == start) throw ParseError("expr: expected integer", start);
    return value;
  }

  Expr parse_expr() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    const std::string_view name = text_.substr(start, pos_ - start);
    if (name.empty()) throw ParseError("expr: expected function name", start);

    const ExprSignature* sig = nullptr;
    for (const auto& s : kExprSignatures)
      if (s.name == name) sig = &s;
    if (sig == nullptr) throw ParseError("expr: unknown function '" + std::string(name) + "'", start);

    Expr e;
    e.kind = sig->kind;
    e.offset = start;
    expect('(');
    const int total = sig->ints + sig->exprs;
    for (int i = 0; i < total; ++i) {
      if (i > 0) {
        if (peek(')')) {
          throw ParseError("expr: " + std::string(name) + " takes " + std::to_string(total) +
                               " arguments, got " + std::to_string(i),
                           pos_);
        }
        expect(',');
      }
      if (i < sig->ints) {
        e.ints.push_back(parse_int());
      } else {
        e.args.push_back(parse_expr());
      }
    }
    if (peek(',')) {
      throw ParseError("expr: " + std::string(name) + " takes " + std::to_string(total) +
                           " arguments, got more",
                       pos_);
    }
    expect(')');
    return e;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

inline std::uint64_t expr_order(const Expr& e) {
  switch (e.kind) {
    case ExprKind::Kn:
    case ExprKind::E:
    case ExprKind::Path:
    case ExprKind::Cycle:
      return e.ints[0];
    case ExprKind::Star:
      return e.ints[0] + 1;
    case ExprKind::Bip:
      return e.ints[0] + e.ints[1];
    case ExprKind::H:
      return 2 * e.ints[1];
    case ExprKind::Join:
    case ExprKind::Union: {
      const std::uint64_t a = expr_order(e.args[0]);
      const std::uint64_t b = expr_order(e.args[1]);
      return a > kMaxExprOrder || b > kMaxExprOrder ? kMaxExprOrder + 1 : a + b;
    }
    case ExprKind::Rep: {
      const std::uint64_t a = expr_order(e.args[0]);
      return a > kMaxExprOrder ? kMaxExprOrder + 1 : e.ints[0] * a;
    }
    case ExprKind::Comp:
      return expr_order(e.args[0]);
  }
  return 0;
}

inline Graph evaluate_node(const Expr& e) {
  switch (e.kind) {
    case ExprKind::Kn:
      return complete(e.ints[0]);
    case ExprKind::E:
      return empty(e.ints[0]);
    case ExprKind::Star:
      return star(e.ints[0]);
    case ExprKind::Path:
      return path(e.ints[0]);
    case ExprKind::Cycle:
      return cycle(e.ints[0]);
    case ExprKind::Bip:
      return complete_bipartite(e.ints[0], e.ints[1]);
    case ExprKind::H:
      return build_h(e.ints[0], e.ints[1]);
    case ExprKind::Join:
      return join(evaluate_node(e.args[0]), evaluate_node(e.args[1]));
    case ExprKind::Union:
      return disjoint_union(evaluate_node(e.args[0]), evaluate_node(e.args[1]));
    case ExprKind::Rep:
      return repeat(e.ints[0], evaluate_node(e.args[0]));
    case ExprKind::Comp:
      return complement(evaluate_node(e.args[0]));
  }
  throw Error("unknown expression kind");
}

}  // namespace detail

inline Expr parse_expr_ast(std::string_view text) { return detail::ExprParser(text).parse(); }

inline std::string print_expr(const Expr& e) {
  std::string out(detail::signature(e.kind).name);
  out += '(';
  bool first = true;
  for (std::uint64_t v : e.ints) {
    if (!first) out += ", ";
    out += std::to_string(v);
    first = false;
  }
  for (const Expr& a : e.args) {
    if (!first) out += ", ";
    out += print_expr(a);
    first = false;
  }
  out += ')';
  return out;
}

/// Builds the graph denoted by an expression tree. Parameter-range
/// violations are reported as ParseError at the offending node.
inline Graph evaluate(const Expr& e) {
  if (detail::expr_order(e) > kMaxExprOrder) {
    throw ParseError("expr: graph order exceeds " + std::to_string(kMaxExprOrder), e.offset);
  }
  try {
    return detail::evaluate_node(e);
  } catch (const ParseError&) {
    throw;
  } catch (const InvalidParameter& err) {
    // Locate the innermost node whose own parameters are invalid.
    struct Finder {
      static const Expr* find(const Expr& node) {
        for (const Expr& a : node.args)
          if (const Expr* bad = find(a)) return bad;
        try {
          switch (node.kind) {
            case ExprKind::Join:
            case ExprKind::Union:
            case ExprKind::Comp:
              return nullptr;
            case ExprKind::Rep:
              if (node.ints[0] == 0) return &node;
              return nullptr;
            default:
              detail::evaluate_node(node);
              return nullptr;
          }
        } catch (const InvalidParameter&) {
          return &node;
        }
      }
    };
    const Expr* bad = Finder::find(e);
    throw ParseError(std::string("expr: ") + err.what(), bad ? bad->offset : e.offset);
  }
}

inline Graph parse_expr(std::string_view text) { return evaluate(parse_expr_ast(text)); }

}  // namespace qdham
