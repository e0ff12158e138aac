#include "fixmodal/axioms.hpp"

namespace fixmodal {

Formula con_axiom(Variable x) { return neg(conj(atom_t(x), atom_f(x))); }

Formula ground_axiom(Variable x) {
  return impl(conj(diamond(atom_t(x)), diamond(atom_f(x))),
              diamond(atom_n(x)));
}

Formula min_axiom(const std::vector<Variable>& xs) {
  if (xs.empty()) throw std::invalid_argument("min_axiom needs variables");
  std::vector<Formula> possibly_neither;
  std::vector<Formula> neithers;
  for (Variable x : xs) {
    possibly_neither.push_back(diamond(atom_n(x)));
    neithers.push_back(atom_n(x));
  }
  return impl(conj_all(possibly_neither), diamond(conj_all(neithers)));
}

Formula axiom_k(Formula a, Formula b) {
  Formula premise = box(impl(a, b));  // keep the copies ahead of the moves
  Formula conclusion = impl(box(std::move(a)), box(std::move(b)));
  return impl(std::move(premise), std::move(conclusion));
}

Formula axiom_t(Formula a) { return impl(box(a), a); }

Formula axiom_5(Formula a) { return impl(diamond(a), box(diamond(a))); }

std::vector<Formula> axiom_instances(System sys, int arity) {
  if (arity < 1) throw std::invalid_argument("arity must be >= 1");
  std::vector<Variable> xs;
  for (int i = 1; i <= arity; ++i) xs.push_back(Variable{i});

  // Schema instantiation sample: a few shapes mixing the variables.
  std::vector<Formula> sample;
  for (Variable x : xs) {
    sample.push_back(atom_t(x));
    sample.push_back(atom_f(x));
  }
  sample.push_back(atom_n(xs.front()));
  sample.push_back(box(atom_t(xs.back())));
  sample.push_back(diamond(atom_f(xs.front())));
  if (arity >= 2)
    sample.push_back(conj(atom_t(xs[0]), atom_n(xs[1])));

  std::vector<Formula> out;
  for (const Formula& a : sample)
    for (const Formula& b : sample) out.push_back(axiom_k(a, b));
  for (const Formula& a : sample) {
    out.push_back(axiom_t(a));
    out.push_back(axiom_5(a));
  }
  if (at_least(sys, System::S5Con))
    for (Variable x : xs) out.push_back(con_axiom(x));
  if (at_least(sys, System::S5ConGround))
    for (Variable x : xs) out.push_back(ground_axiom(x));
  if (at_least(sys, System::S5ConGroundMin)) {
    for (Variable x : xs) out.push_back(min_axiom({x}));
    if (arity >= 2) {
      out.push_back(min_axiom(xs));
      out.push_back(min_axiom({xs[1], xs[0]}));
      out.push_back(min_axiom({xs[0], xs[0]}));
    }
  }
  return out;
}

}  // namespace fixmodal
