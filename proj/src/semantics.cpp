#include "fixmodal/semantics.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace fixmodal {

namespace {

int flatten(const Formula& f, const std::map<int, int>& coord_of,
            std::vector<CompiledFormula::Op>& ops) {
  using K = Formula::Kind;
  CompiledFormula::Op op{f.kind(), -1, -1, 0};
  switch (f.kind()) {
    case K::AtomT:
    case K::AtomF:
      op.coord = coord_of.at(f.var().index);
      break;
    case K::Not:
    case K::Box:
      op.a = flatten(f.child(), coord_of, ops);
      break;
    case K::And:
      op.a = flatten(f.left(), coord_of, ops);
      op.b = flatten(f.right(), coord_of, ops);
      break;
  }
  ops.push_back(op);
  return static_cast<int>(ops.size()) - 1;
}

}  // namespace

CompiledFormula compile(const Formula& f) {
  return compile_with(f, variables(f));
}

CompiledFormula compile_with(const Formula& f,
                             const std::vector<Variable>& basis) {
  std::map<int, int> coord_of;
  for (std::size_t i = 0; i < basis.size(); ++i)
    coord_of[basis[i].index] = static_cast<int>(i) + 1;

  std::vector<CompiledFormula::Op> ops;
  int root;
  try {
    root = flatten(f, coord_of, ops);
  } catch (const std::out_of_range&) {
    throw std::invalid_argument("basis does not cover the formula's variables");
  }

  // Box-free subtrees never look at the tensor; stable-partitioning them to
  // the front keeps children ahead of parents in both halves.
  std::vector<bool> is_const(ops.size());
  for (std::size_t i = 0; i < ops.size(); ++i) {
    switch (ops[i].kind) {
      case Formula::Kind::AtomT:
      case Formula::Kind::AtomF:
        is_const[i] = true;
        break;
      case Formula::Kind::Not:
        is_const[i] = is_const[static_cast<std::size_t>(ops[i].a)];
        break;
      case Formula::Kind::And:
        is_const[i] = is_const[static_cast<std::size_t>(ops[i].a)] &&
                      is_const[static_cast<std::size_t>(ops[i].b)];
        break;
      case Formula::Kind::Box:
        is_const[i] = false;
        break;
    }
  }

  CompiledFormula cf;
  cf.vars = basis;
  cf.ops.reserve(ops.size());
  std::vector<int> slot_of(ops.size());
  for (int pass = 0; pass < 2; ++pass) {
    for (std::size_t i = 0; i < ops.size(); ++i) {
      if (is_const[i] != (pass == 0)) continue;
      CompiledFormula::Op op = ops[i];
      if (op.a >= 0) op.a = slot_of[static_cast<std::size_t>(op.a)];
      if (op.b >= 0) op.b = slot_of[static_cast<std::size_t>(op.b)];
      slot_of[i] = static_cast<int>(cf.ops.size());
      cf.ops.push_back(op);
    }
    if (pass == 0) cf.n_const = cf.ops.size();
  }
  cf.root = static_cast<std::size_t>(slot_of[static_cast<std::size_t>(root)]);
  return cf;
}

AtomTable make_atom_table(int arity, int alphabet) {
  AtomTable at;
  at.arity = arity;
  at.alphabet = alphabet;
  uint32_t total = 1;
  for (int i = 0; i < arity; ++i) total *= static_cast<uint32_t>(alphabet);
  at.universe = (1u << total) - 1u;
  at.atom_t.assign(static_cast<std::size_t>(arity), 0);
  at.atom_f.assign(static_cast<std::size_t>(arity), 0);
  for (uint32_t i = 0; i < total; ++i) {
    Cell c = cell_of_index(i, arity, alphabet);
    for (int k = 0; k < arity; ++k) {
      int v = c[static_cast<std::size_t>(k)];
      bool t_holds, f_holds;
      if (alphabet == 3) {
        t_holds = v == 1;
        f_holds = v == 2;
      } else {  // 1=B, 2=T_only, 3=F_only, 4=N
        t_holds = v == 1 || v == 2;
        f_holds = v == 1 || v == 3;
      }
      if (t_holds) at.atom_t[static_cast<std::size_t>(k)] |= 1u << i;
      if (f_holds) at.atom_f[static_cast<std::size_t>(k)] |= 1u << i;
    }
  }
  return at;
}

SweepEvaluator::SweepEvaluator(const CompiledFormula& cf, const AtomTable& at)
    : cf_(cf), universe_(at.universe), slots_(cf.ops.size()) {
  if (cf.arity() > at.arity)
    throw std::invalid_argument("formula arity exceeds the atom table");
  for (std::size_t i = 0; i < cf_.n_const; ++i) {
    const auto& op = cf_.ops[i];
    switch (op.kind) {
      case Formula::Kind::AtomT:
        slots_[i] = at.atom_t[static_cast<std::size_t>(op.coord - 1)];
        break;
      case Formula::Kind::AtomF:
        slots_[i] = at.atom_f[static_cast<std::size_t>(op.coord - 1)];
        break;
      case Formula::Kind::Not:
        slots_[i] = ~slots_[static_cast<std::size_t>(op.a)] & universe_;
        break;
      case Formula::Kind::And:
        slots_[i] = slots_[static_cast<std::size_t>(op.a)] &
                    slots_[static_cast<std::size_t>(op.b)];
        break;
      case Formula::Kind::Box:
        throw std::logic_error("box in the constant prefix");
    }
  }
}

uint32_t SweepEvaluator::eval(uint32_t tensor_mask) {
  for (std::size_t i = cf_.n_const; i < cf_.ops.size(); ++i) {
    const auto& op = cf_.ops[i];
    switch (op.kind) {
      case Formula::Kind::AtomT:
      case Formula::Kind::AtomF:
        throw std::logic_error("atom in the modal suffix");
      case Formula::Kind::Not:
        slots_[i] = ~slots_[static_cast<std::size_t>(op.a)] & universe_;
        break;
      case Formula::Kind::And:
        slots_[i] = slots_[static_cast<std::size_t>(op.a)] &
                    slots_[static_cast<std::size_t>(op.b)];
        break;
      case Formula::Kind::Box:
        // True everywhere iff the child holds at every member world.
        slots_[i] = (slots_[static_cast<std::size_t>(op.a)] & tensor_mask) ==
                            tensor_mask
                        ? universe_
                        : 0u;
        break;
    }
  }
  return slots_[cf_.root];
}

uint32_t eval_mask(const CompiledFormula& cf, const AtomTable& at,
                   uint32_t tensor_mask) {
  return SweepEvaluator(cf, at).eval(tensor_mask);
}

bool eval_at(const Formula& f, const IsolatorPair& point) {
  const Tensor& t = point.frame;
  if (static_cast<int>(point.world.size()) != t.arity)
    throw std::invalid_argument("world arity does not match the frame");
  CompiledFormula cf = compile(f);
  if (cf.arity() > t.arity)
    throw std::invalid_argument("formula has more variables than the frame");
  AtomTable at = make_atom_table(t.arity, t.alphabet);
  uint32_t bits = eval_mask(cf, at, t.mask);
  return (bits >> cell_index(point.world, t.alphabet)) & 1u;
}

}  // namespace fixmodal
