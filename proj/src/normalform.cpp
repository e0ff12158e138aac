#include "fixmodal/normalform.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "fixmodal/semantics.hpp"

namespace fixmodal {

NormalForm to_normal_form(const Formula& f, System sys, const Limits& limits) {
  CompiledFormula cf = compile(f);
  int n = std::max(cf.arity(), 1);
  check_enumeration_cap(sys, n, limits);
  int v = alphabet_size(sys);
  LayerMasks lm = make_layer_masks(n, v);
  AtomTable at = make_atom_table(n, v);
  int cells = 1;
  for (int i = 0; i < n; ++i) cells *= v;

  NormalForm nf;
  nf.system = sys;
  nf.arity = n;
  SweepEvaluator ev(cf, at);
  const uint64_t total = 1ull << cells;
  for (uint64_t m = 0; m < total; ++m) {
    uint32_t mask = static_cast<uint32_t>(m);
    if (!admissible_mask(mask, sys, lm)) continue;
    uint32_t hits = ev.eval(mask) & mask;
    while (hits) {
      uint32_t c = static_cast<uint32_t>(std::countr_zero(hits));
      hits &= hits - 1;
      nf.disjuncts.push_back(
          IsolatorPair{cell_of_index(c, n, v), Tensor{n, v, mask}});
    }
  }
  return nf;
}

bool equivalent(const Formula& f, const Formula& g, System sys,
                const Limits& limits) {
  std::set<int> joint;
  for (Variable x : variables(f)) joint.insert(x.index);
  for (Variable x : variables(g)) joint.insert(x.index);
  std::vector<Variable> basis;
  for (int i : joint) basis.push_back(Variable{i});

  CompiledFormula cff = compile_with(f, basis);
  CompiledFormula cfg = compile_with(g, basis);
  int n = std::max(static_cast<int>(basis.size()), 1);
  check_enumeration_cap(sys, n, limits);
  int v = alphabet_size(sys);
  LayerMasks lm = make_layer_masks(n, v);
  AtomTable at = make_atom_table(n, v);
  int cells = 1;
  for (int i = 0; i < n; ++i) cells *= v;

  SweepEvaluator ev_f(cff, at), ev_g(cfg, at);
  const uint64_t total = 1ull << cells;
  for (uint64_t m = 0; m < total; ++m) {
    uint32_t mask = static_cast<uint32_t>(m);
    if (!admissible_mask(mask, sys, lm)) continue;
    if ((ev_f.eval(mask) & mask) != (ev_g.eval(mask) & mask)) return false;
  }
  return true;
}

namespace {

Formula ext_value_formula(int value, int alphabet, Variable x) {
  if (alphabet == 3) {
    switch (value) {
      case 1: return atom_t(x);
      case 2: return atom_f(x);
      case 3: return atom_n(x);
    }
  } else {
    switch (value) {
      case 1: return conj(atom_t(x), atom_f(x));
      case 2: return conj(atom_t(x), neg(atom_f(x)));
      case 3: return conj(neg(atom_t(x)), atom_f(x));
      case 4: return conj(neg(atom_t(x)), neg(atom_f(x)));
    }
  }
  throw std::invalid_argument("value out of alphabet range");
}

Formula cell_formula(const Cell& cell, int alphabet,
                     const std::vector<Variable>& vars) {
  std::vector<Formula> parts;
  for (std::size_t i = 0; i < cell.size(); ++i)
    parts.push_back(ext_value_formula(cell[i], alphabet, vars[i]));
  return conj_all(parts);
}

}  // namespace

Formula isolator_formula(const IsolatorPair& pair,
                         const std::vector<Variable>& vars) {
  const Tensor& t = pair.frame;
  if (static_cast<int>(vars.size()) != t.arity)
    throw std::invalid_argument("variable count does not match the arity");
  std::vector<Formula> parts;
  parts.push_back(cell_formula(pair.world, t.alphabet, vars));
  uint32_t total = 1;
  for (int i = 0; i < t.arity; ++i) total *= static_cast<uint32_t>(t.alphabet);
  for (uint32_t c = 0; c < total; ++c) {
    Formula cf =
        cell_formula(cell_of_index(c, t.arity, t.alphabet), t.alphabet, vars);
    parts.push_back((t.mask >> c) & 1u ? diamond(cf) : neg(diamond(cf)));
  }
  return conj_all(parts);
}

Formula formula_of(const NormalForm& nf) {
  std::vector<Variable> vars;
  for (int i = 1; i <= nf.arity; ++i) vars.push_back(Variable{i});
  if (nf.disjuncts.empty())
    return conj(atom_t(vars.front()), neg(atom_t(vars.front())));
  std::vector<Formula> parts;
  for (const IsolatorPair& p : nf.disjuncts)
    parts.push_back(isolator_formula(p, vars));
  return disj_all(parts);
}

namespace {

struct BasicLit {
  bool boxed = true;     // false: diamond
  bool negated = false;  // inner negation on the literal
  bool is_t = true;      // T vs F predicate
  Variable var;
};

bool match_plain_atom(const Formula& f, bool& is_t, Variable& var) {
  if (f.kind() == Formula::Kind::AtomT) {
    is_t = true;
    var = f.var();
    return true;
  }
  if (f.kind() == Formula::Kind::AtomF) {
    is_t = false;
    var = f.var();
    return true;
  }
  return false;
}

// Literal bodies as left by sugar elimination: box literals are [](lit) or
// [](~lit); diamond literals came from <> and read ~[](~lit) or ~[](~~lit).
bool match_literal(const Formula& f, BasicLit& out) {
  if (f.kind() == Formula::Kind::Box) {
    Formula body = f.child();
    out.boxed = true;
    if (match_plain_atom(body, out.is_t, out.var)) {
      out.negated = false;
      return true;
    }
    if (body.kind() == Formula::Kind::Not &&
        match_plain_atom(body.child(), out.is_t, out.var)) {
      out.negated = true;
      return true;
    }
    return false;
  }
  if (f.kind() == Formula::Kind::Not &&
      f.child().kind() == Formula::Kind::Box &&
      f.child().child().kind() == Formula::Kind::Not) {
    Formula body = f.child().child().child();
    out.boxed = false;
    if (match_plain_atom(body, out.is_t, out.var)) {
      out.negated = false;
      return true;
    }
    if (body.kind() == Formula::Kind::Not &&
        match_plain_atom(body.child(), out.is_t, out.var)) {
      out.negated = true;
      return true;
    }
    return false;
  }
  return false;
}

// Disjunction as left by sugar elimination: a | b reads ~(~a & ~b).
bool match_or(const Formula& f, Formula& a, Formula& b) {
  if (f.kind() != Formula::Kind::Not) return false;
  Formula inner = f.child();
  if (inner.kind() != Formula::Kind::And) return false;
  if (inner.left().kind() != Formula::Kind::Not ||
      inner.right().kind() != Formula::Kind::Not)
    return false;
  a = inner.left().child();
  b = inner.right().child();
  return true;
}

void split_or(const Formula& f, std::vector<Formula>& out) {
  Formula a = f, b = f;
  if (match_or(f, a, b)) {
    split_or(a, out);
    split_or(b, out);
  } else {
    out.push_back(f);
  }
}

void split_and(const Formula& f, std::vector<Formula>& out) {
  if (f.kind() == Formula::Kind::And) {
    split_and(f.left(), out);
    split_and(f.right(), out);
  } else {
    out.push_back(f);
  }
}

bool match_basic(const Formula& f, std::vector<std::vector<BasicLit>>& out) {
  std::vector<Formula> disjuncts;
  split_or(f, disjuncts);
  for (const Formula& d : disjuncts) {
    std::vector<Formula> conjuncts;
    split_and(d, conjuncts);
    std::vector<BasicLit> lits;
    for (const Formula& c : conjuncts) {
      BasicLit lit;
      if (!match_literal(c, lit)) return false;
      lits.push_back(lit);
    }
    out.push_back(std::move(lits));
  }
  return true;
}

std::string render_literal(const BasicLit& lit, TranslationStyle style) {
  const bool uni = style == TranslationStyle::Unicode;
  std::string x = "x" + std::to_string(lit.var.index);
  std::string term = lit.is_t ? x : "Neg(" + x + ")";
  std::string quoted =
      uni ? "⌜" + term + "⌝" : "'" + term + "'";
  std::string membership =
      lit.negated ? (uni ? " ∉ " : " notin ") : (uni ? " ∈ " : " in ");
  if (lit.boxed) {
    return (uni ? std::string("∀X(Fix(X) → ")
                : std::string("forall X(Fix(X) -> ")) +
           quoted + membership + "X)";
  }
  return (uni ? std::string("∃X(Fix(X) ∧ ")
              : std::string("exists X(Fix(X) & ")) +
         quoted + membership + "X)";
}

}  // namespace

bool is_basic_form(const Formula& f) {
  std::vector<std::vector<BasicLit>> shape;
  return match_basic(f, shape);
}

std::string to_second_order(const Formula& f, TranslationStyle style) {
  std::vector<std::vector<BasicLit>> shape;
  if (!match_basic(f, shape))
    throw NotBasicFormError(
        "not in basic form (a disjunction of conjunctions of boxed or "
        "diamonded T/F literals)");
  const bool uni = style == TranslationStyle::Unicode;
  const std::string and_sep = uni ? " ∧ " : " & ";
  const std::string or_sep = uni ? " ∨ " : " | ";
  std::string out;
  for (std::size_t d = 0; d < shape.size(); ++d) {
    if (d) out += or_sep;
    std::string conj_text;
    for (std::size_t i = 0; i < shape[d].size(); ++i) {
      if (i) conj_text += and_sep;
      conj_text += render_literal(shape[d][i], style);
    }
    if (shape.size() > 1 && shape[d].size() > 1)
      out += "(" + conj_text + ")";
    else
      out += conj_text;
  }
  return out;
}

}  // namespace fixmodal
