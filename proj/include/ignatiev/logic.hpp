#pragma once

#include <memory>
#include <string>
#include <string_view>

#include "ignatiev/point.hpp"

namespace ign {

// Variable-free strictly positive formula over T, &, D<n>, N<n>.
// Immutable tree with shared structure; cheap to copy.
class Formula {
 public:
  enum class Kind { Top, And, Dia, Nabla };

  static Formula top();
  static Formula conj(Formula left, Formula right);
  static Formula dia(unsigned index, Formula sub);
  static Formula nabla(unsigned index, Formula sub);

  Kind kind() const;
  unsigned index() const;       // Dia and Nabla only
  const Formula& left() const;  // And only
  const Formula& right() const;
  const Formula& child() const;  // Dia and Nabla only

  bool operator==(const Formula& other) const;  // structural equality

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

// Grammar:
//   formula := conj
//   conj    := unary ('&' unary)*        left-associative
//   unary   := 'T' | '(' formula ')' | 'D' nat unary | 'N' nat unary
// Whitespace between tokens is ignored.
Formula parse_formula(std::string_view text);

// Canonical output: conjunctions fully parenthesized, "D<n> ..." and
// "N<n> ..." prefixes. parse . print = identity.
std::string print_formula(const Formula& a);

// Interpretation in the algebra: T is the top point, & is glb, D<n> is
// diamond, N<n> is nabla.
IgnatievPoint eval(const Formula& a);

// A entails B iff eval(A) <= eval(B) in the algebra order.
bool entails(const Formula& a, const Formula& b);

}  // namespace ign
