#pragma once

#include <optional>

#include "fixmodal/enumerate.hpp"
#include "fixmodal/formula.hpp"

namespace fixmodal {

// Answer of a decision query. For validity queries an absent witness means
// provable and a present one is a countermodel (least frame mask, then least
// world index); for satisfiability queries the witness satisfies the formula.
struct Verdict {
  bool valid = false;
  std::optional<IsolatorPair> witness;
};

Verdict satisfiable(const Formula& f, System sys, const Limits& limits = {},
                    ExecMode mode = ExecMode::Parallel);

// Provability, decided over the finite admissible-frame semantics.
Verdict valid(const Formula& f, System sys, const Limits& limits = {},
              ExecMode mode = ExecMode::Parallel);

// Validity over the fixed-point interpretation: the full system at the
// formula's own arity (distinct occurring variables).
Verdict fix_valid(const Formula& f, const Limits& limits = {},
                  ExecMode mode = ExecMode::Parallel);

}  // namespace fixmodal
