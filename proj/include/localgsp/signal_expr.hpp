#pragma once

#include <memory>
#include <string>
#include <string_view>

namespace localgsp {

// Closed-form signal t -> f(t) on [0, 1). Grammar: numbers, the variable t,
// the constant pi, + - * / ^ (right associative), unary minus, parentheses
// and the functions sin cos exp log sqrt abs floor.
class Expression {
 public:
  // Throws Error{parse_error}.
  static Expression parse(std::string_view text);

  double operator()(double t) const;
  const std::string& text() const { return text_; }

  struct Node;

 private:
  std::string text_;
  std::shared_ptr<const Node> root_;
};

}  // namespace localgsp
