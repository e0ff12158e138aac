#pragma once

#include <vector>

#include "fixmodal/formula.hpp"
#include "fixmodal/system.hpp"

namespace fixmodal {

// Con: ~(T(x) & F(x))
Formula con_axiom(Variable x);
// Ground: (<>T(x) & <>F(x)) -> <>N(x)
Formula ground_axiom(Variable x);
// Min_n: (<>N(x1) & ... & <>N(xn)) -> <>(N(x1) & ... & N(xn))
Formula min_axiom(const std::vector<Variable>& xs);

// S5 schema instances.
Formula axiom_k(Formula a, Formula b);  // [](a->b) -> ([]a -> []b)
Formula axiom_t(Formula a);             // []a -> a
Formula axiom_5(Formula a);             // <>a -> []<>a

// A fixed battery of axiom instances of `sys` over variables x1..xn,
// suitable for soundness sweeps. Deterministic.
std::vector<Formula> axiom_instances(System sys, int arity);

}  // namespace fixmodal
