#include "fixmodal/decide.hpp"

#include <bit>
#include <optional>

#include "fixmodal/semantics.hpp"

namespace fixmodal {

namespace {

struct Hit {
  uint32_t mask;
  uint32_t cell;
};

// Least (frame mask, world index) hit over the admissible sweep, where a hit
// is a member world whose truth bit matches `want_true`. Block-synchronous
// in parallel mode, so serial and parallel agree exactly.
std::optional<Hit> sweep_first(System sys, const CompiledFormula& cf,
                               bool want_true, const Limits& limits,
                               ExecMode mode) {
  int n = cf.arity();
  if (n < 1) throw std::invalid_argument("formula has no variables");
  check_enumeration_cap(sys, n, limits);
  int v = alphabet_size(sys);
  LayerMasks lm = make_layer_masks(n, v);
  AtomTable at = make_atom_table(n, v);
  int cells = 1;
  for (int i = 0; i < n; ++i) cells *= v;
  const uint64_t total = 1ull << cells;

  auto probe = [&](uint32_t mask, SweepEvaluator& ev, uint32_t& cell_out) {
    if (!admissible_mask(mask, sys, lm)) return false;
    uint32_t bits = ev.eval(mask);
    uint32_t hits = want_true ? (bits & mask) : (~bits & mask);
    if (!hits) return false;
    cell_out = static_cast<uint32_t>(std::countr_zero(hits));
    return true;
  };

  if (mode == ExecMode::Serial) {
    SweepEvaluator ev(cf, at);
    for (uint64_t m = 0; m < total; ++m) {
      uint32_t cell;
      if (probe(static_cast<uint32_t>(m), ev, cell))
        return Hit{static_cast<uint32_t>(m), cell};
    }
    return std::nullopt;
  }

  constexpr uint64_t kBlock = 1u << 18;
  for (uint64_t base = 0; base < total; base += kBlock) {
    const long long end =
        static_cast<long long>(std::min(total, base + kBlock));
    uint64_t best_mask = UINT64_MAX;
    uint32_t best_cell = 0;
#pragma omp parallel
    {
      uint64_t local_mask = UINT64_MAX;
      uint32_t local_cell = 0;
      SweepEvaluator ev(cf, at);
#pragma omp for schedule(static) nowait
      for (long long m = static_cast<long long>(base); m < end; ++m) {
        if (local_mask != UINT64_MAX) continue;  // masks ascend per thread
        uint32_t cell;
        if (probe(static_cast<uint32_t>(m), ev, cell)) {
          local_mask = static_cast<uint64_t>(m);
          local_cell = cell;
        }
      }
#pragma omp critical
      {
        if (local_mask < best_mask) {
          best_mask = local_mask;
          best_cell = local_cell;
        }
      }
    }
    if (best_mask != UINT64_MAX)
      return Hit{static_cast<uint32_t>(best_mask), best_cell};
  }
  return std::nullopt;
}

IsolatorPair make_pair(System sys, int arity, const Hit& hit) {
  int v = alphabet_size(sys);
  return IsolatorPair{cell_of_index(hit.cell, arity, v),
                      Tensor{arity, v, hit.mask}};
}

}  // namespace

Verdict satisfiable(const Formula& f, System sys, const Limits& limits,
                    ExecMode mode) {
  CompiledFormula cf = compile(f);
  auto hit = sweep_first(sys, cf, /*want_true=*/true, limits, mode);
  Verdict out;
  out.valid = hit.has_value();
  if (hit) out.witness = make_pair(sys, cf.arity(), *hit);
  return out;
}

Verdict valid(const Formula& f, System sys, const Limits& limits,
              ExecMode mode) {
  CompiledFormula cf = compile(f);
  auto hit = sweep_first(sys, cf, /*want_true=*/false, limits, mode);
  Verdict out;
  out.valid = !hit.has_value();
  if (hit) out.witness = make_pair(sys, cf.arity(), *hit);
  return out;
}

Verdict fix_valid(const Formula& f, const Limits& limits, ExecMode mode) {
  return valid(f, System::S5ConGroundMin, limits, mode);
}

}  // namespace fixmodal
