#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "vphi/element.hpp"

namespace vphi {

/// Abstract syntax of an element expression. Labels stay as tokens until
/// evaluation, so one tree can be evaluated in several contexts.
struct Expr {
  enum class Kind { iota, lambda, a_g, literal, file, product, power, comm, conj };

  struct LiteralColumn {
    std::string dom;
    std::string label;
    std::string ran;
  };

  Kind kind = Kind::iota;
  std::size_t position = 0;
  std::string label;                    // iota, lambda, a_g
  BitWord word;                         // lambda
  std::vector<LiteralColumn> columns;   // literal
  std::string path;                     // file
  std::int64_t exponent = 1;            // power
  std::vector<std::shared_ptr<const Expr>> args;
};

using ExprPtr = std::shared_ptr<const Expr>;

/// expr := term (('*'|'.') term)*
/// term := atom ('^' int)?
/// atom := iota(label) | lambda(word,label) | a_g(label) | [dom|label|ran; ...]
///       | (expr) | comm(expr,expr) | conj(expr,expr) | @file
/// Throws ParseError with the offending position.
ExprPtr parse_expression(const std::string& text);

/// Products compose left to right; conj(x,y) = y^-1 x y and
/// comm(x,y) = x y x^-1 y^-1.
Element evaluate(const Expr& e, const ContextPtr& ctx);

inline Element evaluate(const std::string& text, const ContextPtr& ctx) {
  return evaluate(*parse_expression(text), ctx);
}

}  // namespace vphi
