#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace fixmodal {

// Variable of the modal language, rendered x1, x2, ...
struct Variable {
  int index = 1;  // >= 1
  friend auto operator<=>(const Variable&, const Variable&) = default;
};

// Immutable formula tree over the five core constructors. Surface sugar
// (|, ->, <->, <>, N) is eliminated when formulas are built or parsed, so
// two formulas are equal iff their core trees match.
class Formula {
 public:
  enum class Kind { AtomT, AtomF, Not, And, Box };

  Kind kind() const { return node_->kind; }
  Variable var() const;    // atoms only
  Formula child() const;   // Not / Box
  Formula left() const;    // And
  Formula right() const;   // And

  bool operator==(const Formula& other) const;
  bool operator!=(const Formula& other) const { return !(*this == other); }

  static Formula atom_t(Variable v);
  static Formula atom_f(Variable v);
  static Formula make_not(Formula f);
  static Formula make_and(Formula l, Formula r);
  static Formula make_box(Formula f);

 private:
  struct Node {
    Kind kind;
    Variable var{};
    std::shared_ptr<const Node> left, right;
  };
  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static Formula wrap(Node n);

  std::shared_ptr<const Node> node_;
};

// Builders (sugar expands immediately).
Formula atom_t(Variable v);
Formula atom_f(Variable v);
Formula atom_n(Variable v);  // N(x) := ~T(x) & ~F(x)
Formula neg(Formula f);
Formula conj(Formula l, Formula r);
Formula disj(Formula l, Formula r);          // ~(~l & ~r)
Formula impl(Formula l, Formula r);          // ~(l & ~r)
Formula iff(Formula l, Formula r);
Formula box(Formula f);
Formula diamond(Formula f);                  // ~[]~f
Formula conj_all(const std::vector<Formula>& fs);  // fs nonempty, left-nested
Formula disj_all(const std::vector<Formula>& fs);

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position);
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// Concrete grammar: atoms T(xk) / F(xk) / N(xk); operators ~ & | -> <-> [] <>;
// precedence ~,[],<> > & > | > -> > <->; -> right-associative.
Formula parse(std::string_view text);

// Canonical fully parenthesized core text; parse(render(f)) == f.
std::string render(const Formula& f);

// Distinct variables in ascending index order.
std::vector<Variable> variables(const Formula& f);

enum class SyntacticClass { Extensional, Intensional, Neither };

// Extensional: no box at all. Intensional: every atom occurrence sits under
// some box. The two are exclusive but not exhaustive.
SyntacticClass syntactic_class(const Formula& f);

}  // namespace fixmodal
