#pragma once

#include <cstdint>
#include <vector>

#include "fixmodal/formula.hpp"
#include "fixmodal/isolator.hpp"

namespace fixmodal {

// A formula flattened to a postorder program evaluated over per-cell truth
// masks. Coordinates are assigned by rank among the distinct variables, so
// x1,x3 become coordinates 1,2. Ops are partitioned: the first n_const ops
// are box-free and tensor-independent, the rest form the modal suffix that
// sweeps re-run per tensor.
struct CompiledFormula {
  struct Op {
    Formula::Kind kind;
    int a = -1;     // child slot (Not/Box) or left slot (And)
    int b = -1;     // right slot (And)
    int coord = 0;  // 1-based coordinate (atoms)
  };
  std::vector<Op> ops;         // every child slot precedes its parent
  std::size_t n_const = 0;     // ops[0..n_const) are tensor-independent
  std::size_t root = 0;        // slot holding the whole formula
  std::vector<Variable> vars;  // ascending; vars[k] is coordinate k+1
  int arity() const { return static_cast<int>(vars.size()); }
};

CompiledFormula compile(const Formula& f);

// Compile against an explicit coordinate basis (must cover the formula's
// variables); used when two formulas share one variable space.
CompiledFormula compile_with(const Formula& f,
                             const std::vector<Variable>& basis);

// Truth masks of the atoms over the cells of [v]^n. In the 4-valued
// alphabet T(x) holds at B and T_only, F(x) at B and F_only.
struct AtomTable {
  int arity = 1;
  int alphabet = 3;
  uint32_t universe = 0;
  std::vector<uint32_t> atom_t;  // per coordinate, 0-based
  std::vector<uint32_t> atom_f;
};
AtomTable make_atom_table(int arity, int alphabet);

// Per-tensor evaluation with the constant prefix cached. One instance per
// thread in parallel sweeps.
class SweepEvaluator {
 public:
  SweepEvaluator(const CompiledFormula& cf, const AtomTable& at);

  // Truth mask of the formula over the worlds of `tensor_mask`: bit c gives
  // the value at world-cell c. Box looks only at member cells.
  uint32_t eval(uint32_t tensor_mask);

 private:
  const CompiledFormula& cf_;
  uint32_t universe_;
  std::vector<uint32_t> slots_;
};

uint32_t eval_mask(const CompiledFormula& cf, const AtomTable& at,
                   uint32_t tensor_mask);

// Convenience: truth value at one (world, frame) point.
bool eval_at(const Formula& f, const IsolatorPair& point);

}  // namespace fixmodal
