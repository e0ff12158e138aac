#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "fixmodal/enumerate.hpp"
#include "fixmodal/formula.hpp"

namespace fixmodal {

// Carnap-style disjunctive normal form: the set of admissible (world, frame)
// points at which the formula holds. Two formulas are provably equivalent in
// the system iff their normal forms coincide; the empty disjunct set is the
// contradiction.
struct NormalForm {
  System system = System::S5ConGroundMin;
  int arity = 1;
  std::vector<IsolatorPair> disjuncts;  // sorted by (frame.mask, world index)
  friend bool operator==(const NormalForm&, const NormalForm&) = default;
};

NormalForm to_normal_form(const Formula& f, System sys,
                          const Limits& limits = {});

// Same normal form after unifying the two variable sets.
bool equivalent(const Formula& f, const Formula& g, System sys,
                const Limits& limits = {});

// One isolator as a formula: the world's extensional description conjoined
// with <> / ~<> over every cell of [v]^n, in cell order.
Formula isolator_formula(const IsolatorPair& pair,
                         const std::vector<Variable>& vars);

// Disjunction of the isolators over canonical variables x1..xn; the empty
// normal form renders as T(x1) & ~T(x1).
Formula formula_of(const NormalForm& nf);

class NotBasicFormError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Basic form: a disjunction of conjunctions of boxed or diamonded, possibly
// inner-negated T/F literals.
bool is_basic_form(const Formula& f);

enum class TranslationStyle { Unicode, Ascii };

// Second-order rendering of a basic-form formula: box literals become
// universal quantification over the fixed-point sets, diamonds existential;
// T(x) contributes the quoted sentence itself and F(x) its negation.
// A pretty-printer only. Throws NotBasicFormError otherwise.
std::string to_second_order(const Formula& f,
                            TranslationStyle style = TranslationStyle::Unicode);

}  // namespace fixmodal
