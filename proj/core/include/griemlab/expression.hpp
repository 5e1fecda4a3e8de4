#pragma once

#include "griemlab/jet.hpp"

#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace griemlab {

/// Scalar field expression over chart coordinates, evaluated on jets.
///
/// Grammar:
///   expr    := term (('+' | '-') term)*
///   term    := unary (('*' | '/') unary)*
///   unary   := '-' unary | '+' unary | power
///   power   := primary ('^' unary)?          right associative
///   primary := number | name | name '(' expr (',' expr)* ')' | '(' expr ')'
/// Names are coordinates (x1..xn or custom names) and the constant pi.
/// Functions: sin cos tan exp log sqrt tanh and pow(a, b).
class Expression {
 public:
  /// Parses `source`; throws ParseError with a character position.
  static Expression parse(std::string_view source, std::span<const std::string> coordinate_names);
  /// Coordinates named x1..xn.
  static Expression parse(std::string_view source, std::size_t dim);

  Jet evaluate(std::span<const Jet> x) const;
  double evaluate(std::span<const double> x) const;

  const std::string& source() const { return source_; }

  struct Node;

 private:
  std::string source_;
  std::shared_ptr<const Node> root_;
};

/// Default coordinate names x1..xn.
std::vector<std::string> default_coordinate_names(std::size_t dim);

}  // namespace griemlab
