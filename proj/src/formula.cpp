#include "fixmodal/formula.hpp"

#include <cctype>
#include <set>

namespace fixmodal {

Variable Formula::var() const {
  if (node_->kind != Kind::AtomT && node_->kind != Kind::AtomF)
    throw std::logic_error("var() on a non-atom");
  return node_->var;
}

Formula Formula::child() const {
  if (node_->kind != Kind::Not && node_->kind != Kind::Box)
    throw std::logic_error("child() on a non-unary node");
  return Formula(node_->left);
}

Formula Formula::left() const {
  if (node_->kind != Kind::And) throw std::logic_error("left() on a non-And");
  return Formula(node_->left);
}

Formula Formula::right() const {
  if (node_->kind != Kind::And) throw std::logic_error("right() on a non-And");
  return Formula(node_->right);
}

bool Formula::operator==(const Formula& other) const {
  if (node_ == other.node_) return true;
  if (node_->kind != other.node_->kind) return false;
  switch (node_->kind) {
    case Kind::AtomT:
    case Kind::AtomF:
      return node_->var == other.node_->var;
    case Kind::Not:
    case Kind::Box:
      return child() == other.child();
    case Kind::And:
      return left() == other.left() && right() == other.right();
  }
  return false;
}

Formula Formula::wrap(Node n) {
  return Formula(std::make_shared<const Node>(std::move(n)));
}

Formula Formula::atom_t(Variable v) {
  if (v.index < 1) throw std::invalid_argument("variable index must be >= 1");
  return wrap(Node{Kind::AtomT, v, nullptr, nullptr});
}

Formula Formula::atom_f(Variable v) {
  if (v.index < 1) throw std::invalid_argument("variable index must be >= 1");
  return wrap(Node{Kind::AtomF, v, nullptr, nullptr});
}

Formula Formula::make_not(Formula f) {
  return wrap(Node{Kind::Not, {}, std::move(f.node_), nullptr});
}

Formula Formula::make_and(Formula l, Formula r) {
  return wrap(Node{Kind::And, {}, std::move(l.node_), std::move(r.node_)});
}

Formula Formula::make_box(Formula f) {
  return wrap(Node{Kind::Box, {}, std::move(f.node_), nullptr});
}

Formula atom_t(Variable v) { return Formula::atom_t(v); }
Formula atom_f(Variable v) { return Formula::atom_f(v); }
Formula atom_n(Variable v) { return conj(neg(atom_t(v)), neg(atom_f(v))); }
Formula neg(Formula f) { return Formula::make_not(std::move(f)); }
Formula conj(Formula l, Formula r) {
  return Formula::make_and(std::move(l), std::move(r));
}
Formula disj(Formula l, Formula r) {
  return neg(conj(neg(std::move(l)), neg(std::move(r))));
}
Formula impl(Formula l, Formula r) {
  return neg(conj(std::move(l), neg(std::move(r))));
}
Formula iff(Formula l, Formula r) {
  Formula forward = impl(l, r);  // keep the copies ahead of the moves
  Formula backward = impl(std::move(r), std::move(l));
  return conj(std::move(forward), std::move(backward));
}
Formula box(Formula f) { return Formula::make_box(std::move(f)); }
Formula diamond(Formula f) { return neg(box(neg(std::move(f)))); }

Formula conj_all(const std::vector<Formula>& fs) {
  if (fs.empty()) throw std::invalid_argument("conj_all of nothing");
  Formula acc = fs.front();
  for (std::size_t i = 1; i < fs.size(); ++i) acc = conj(acc, fs[i]);
  return acc;
}

Formula disj_all(const std::vector<Formula>& fs) {
  if (fs.empty()) throw std::invalid_argument("disj_all of nothing");
  Formula acc = fs.front();
  for (std::size_t i = 1; i < fs.size(); ++i) acc = disj(acc, fs[i]);
  return acc;
}

ParseError::ParseError(const std::string& message, std::size_t position)
    : std::runtime_error(message + " at position " + std::to_string(position)),
      position_(position) {}

namespace {

// Recursive descent over the surface grammar; sugar is expanded on the way
// out so the result only uses the five core constructors.
class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Formula run() {
    skip_space();
    if (pos_ >= text_.size()) throw ParseError("empty formula", pos_);
    Formula f = parse_iff();
    skip_space();
    if (pos_ < text_.size())
      throw ParseError("unexpected trailing input", pos_);
    return f;
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool eat(std::string_view tok) {
    skip_space();
    if (text_.substr(pos_).starts_with(tok)) {
      pos_ += tok.size();
      return true;
    }
    return false;
  }

  void expect(char c) {
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != c)
      throw ParseError(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }

  Formula parse_iff() {
    Formula f = parse_impl();
    while (eat("<->")) f = iff(f, parse_impl());
    return f;
  }

  Formula parse_impl() {
    Formula f = parse_or();
    skip_space();
    // "->" must not swallow the '-' of a stray token; simple lookahead.
    if (text_.substr(pos_).starts_with("->")) {
      pos_ += 2;
      return impl(f, parse_impl());  // right-associative
    }
    return f;
  }

  Formula parse_or() {
    Formula f = parse_and();
    for (;;) {
      skip_space();
      if (pos_ < text_.size() && text_[pos_] == '|') {
        ++pos_;
        f = disj(f, parse_and());
      } else {
        return f;
      }
    }
  }

  Formula parse_and() {
    Formula f = parse_unary();
    while (eat("&")) f = conj(f, parse_unary());
    return f;
  }

  Formula parse_unary() {
    skip_space();
    if (eat("~")) return neg(parse_unary());
    if (eat("[]")) return box(parse_unary());
    if (eat("<>")) return diamond(parse_unary());
    return parse_primary();
  }

  Formula parse_primary() {
    skip_space();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Formula f = parse_iff();
      expect(')');
      return f;
    }
    if (c == 'T' || c == 'F' || c == 'N') {
      ++pos_;
      expect('(');
      Variable v = parse_variable();
      expect(')');
      if (c == 'T') return atom_t(v);
      if (c == 'F') return atom_f(v);
      return atom_n(v);
    }
    throw ParseError("unknown token", pos_);
  }

  Variable parse_variable() {
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != 'x')
      throw ParseError("expected a variable like x1", pos_);
    std::size_t start = pos_++;
    std::size_t digits = 0;
    long value = 0;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_] - '0');
      if (value > 1'000'000) throw ParseError("variable index too large", start);
      ++pos_;
      ++digits;
    }
    if (digits == 0) throw ParseError("malformed variable", start);
    if (text_[start + 1] == '0')  // rejects x0 and padded forms like x01
      throw ParseError("malformed variable", start);
    return Variable{static_cast<int>(value)};
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void render_into(const Formula& f, std::string& out) {
  switch (f.kind()) {
    case Formula::Kind::AtomT:
      out += "T(x" + std::to_string(f.var().index) + ")";
      return;
    case Formula::Kind::AtomF:
      out += "F(x" + std::to_string(f.var().index) + ")";
      return;
    case Formula::Kind::Not:
      out += "~";
      render_into(f.child(), out);
      return;
    case Formula::Kind::And:
      out += "(";
      render_into(f.left(), out);
      out += " & ";
      render_into(f.right(), out);
      out += ")";
      return;
    case Formula::Kind::Box:
      out += "[](";
      render_into(f.child(), out);
      out += ")";
      return;
  }
}

void collect_variables(const Formula& f, std::set<int>& out) {
  switch (f.kind()) {
    case Formula::Kind::AtomT:
    case Formula::Kind::AtomF:
      out.insert(f.var().index);
      return;
    case Formula::Kind::Not:
    case Formula::Kind::Box:
      collect_variables(f.child(), out);
      return;
    case Formula::Kind::And:
      collect_variables(f.left(), out);
      collect_variables(f.right(), out);
      return;
  }
}

bool contains_box(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::AtomT:
    case Formula::Kind::AtomF:
      return false;
    case Formula::Kind::Box:
      return true;
    case Formula::Kind::Not:
      return contains_box(f.child());
    case Formula::Kind::And:
      return contains_box(f.left()) || contains_box(f.right());
  }
  return false;
}

bool atoms_all_boxed(const Formula& f, bool under_box) {
  switch (f.kind()) {
    case Formula::Kind::AtomT:
    case Formula::Kind::AtomF:
      return under_box;
    case Formula::Kind::Box:
      return atoms_all_boxed(f.child(), true);
    case Formula::Kind::Not:
      return atoms_all_boxed(f.child(), under_box);
    case Formula::Kind::And:
      return atoms_all_boxed(f.left(), under_box) &&
             atoms_all_boxed(f.right(), under_box);
  }
  return false;
}

}  // namespace

Formula parse(std::string_view text) { return Parser(text).run(); }

std::string render(const Formula& f) {
  std::string out;
  render_into(f, out);
  return out;
}

std::vector<Variable> variables(const Formula& f) {
  std::set<int> indices;
  collect_variables(f, indices);
  std::vector<Variable> out;
  out.reserve(indices.size());
  for (int i : indices) out.push_back(Variable{i});
  return out;
}

SyntacticClass syntactic_class(const Formula& f) {
  if (!contains_box(f)) return SyntacticClass::Extensional;
  if (atoms_all_boxed(f, false)) return SyntacticClass::Intensional;
  return SyntacticClass::Neither;
}

}  // namespace fixmodal
