#include "fixmodal/enumerate.hpp"

#include <bit>
#include <stdexcept>

namespace fixmodal {

namespace {

int cell_space(System sys, int arity) {
  if (arity < 1) throw std::invalid_argument("arity must be >= 1");
  long long cells = 1;
  for (int i = 0; i < arity; ++i) {
    cells *= alphabet_size(sys);
    if (cells > 27)
      throw std::invalid_argument(
          "arity too large for exhaustive enumeration (cell space beyond 27)");
  }
  return static_cast<int>(cells);
}

}  // namespace

void check_enumeration_cap(System sys, int arity, const Limits& limits) {
  int cells = cell_space(sys, arity);
  if (cells == 27 && !limits.allow_arity3)
    throw std::invalid_argument(
        "the arity-3 ternary sweep covers 2^27 masks; pass the allow_arity3 "
        "limit (--allow-n3) to run it");
}

void for_each_admissible(System sys, int arity, const Limits& limits,
                         const std::function<bool(const Tensor&)>& visit) {
  check_enumeration_cap(sys, arity, limits);
  int v = alphabet_size(sys);
  LayerMasks lm = make_layer_masks(arity, v);
  uint64_t total = 1ull << cell_space(sys, arity);
  for (uint64_t m = 0; m < total; ++m) {
    uint32_t mask = static_cast<uint32_t>(m);
    if (!admissible_mask(mask, sys, lm)) continue;
    if (!visit(Tensor{arity, v, mask})) return;
  }
}

std::vector<Tensor> enumerate_admissible(System sys, int arity,
                                         const Limits& limits) {
  std::vector<Tensor> out;
  for_each_admissible(sys, arity, limits, [&](const Tensor& t) {
    out.push_back(t);
    return true;
  });
  return out;
}

uint64_t count_admissible(System sys, int arity, const Limits& limits,
                          ExecMode mode) {
  check_enumeration_cap(sys, arity, limits);
  LayerMasks lm = make_layer_masks(arity, alphabet_size(sys));
  long long total = 1ll << cell_space(sys, arity);
  uint64_t count = 0;
  if (mode == ExecMode::Parallel) {
#pragma omp parallel for reduction(+ : count) schedule(static)
    for (long long m = 0; m < total; ++m)
      if (admissible_mask(static_cast<uint32_t>(m), sys, lm)) ++count;
  } else {
    for (long long m = 0; m < total; ++m)
      if (admissible_mask(static_cast<uint32_t>(m), sys, lm)) ++count;
  }
  return count;
}

uint64_t count_pairs_enumerated(System sys, int arity, const Limits& limits,
                                ExecMode mode) {
  check_enumeration_cap(sys, arity, limits);
  LayerMasks lm = make_layer_masks(arity, alphabet_size(sys));
  long long total = 1ll << cell_space(sys, arity);
  uint64_t pairs = 0;
  if (mode == ExecMode::Parallel) {
#pragma omp parallel for reduction(+ : pairs) schedule(static)
    for (long long m = 0; m < total; ++m) {
      uint32_t mask = static_cast<uint32_t>(m);
      if (admissible_mask(mask, sys, lm))
        pairs += static_cast<uint64_t>(std::popcount(mask));
    }
  } else {
    for (long long m = 0; m < total; ++m) {
      uint32_t mask = static_cast<uint32_t>(m);
      if (admissible_mask(mask, sys, lm))
        pairs += static_cast<uint64_t>(std::popcount(mask));
    }
  }
  return pairs;
}

BigInt closed_form_pairs(System sys, int arity) {
  if (sys != System::S5 && sys != System::S5Con)
    throw std::invalid_argument("no closed pair count for this system");
  if (arity < 1 || arity > 8)
    throw std::invalid_argument("arity out of closed-form range (max 8)");
  BigInt cells = 1;
  for (int i = 0; i < arity; ++i) cells *= alphabet_size(sys);
  // v^n extensional isolators, each combining with the 2^(v^n - 1)
  // pre-isolators that declare it possible.
  return cells * (BigInt(1) << static_cast<unsigned>(cells - 1));
}

BigInt count_isolator_pairs(System sys, int arity, const Limits& limits) {
  if (sys == System::S5 || sys == System::S5Con)
    return closed_form_pairs(sys, arity);
  return BigInt(count_pairs_enumerated(sys, arity, limits));
}

BigInt count_intensional_isolators(System sys, int arity,
                                   const Limits& limits) {
  if (sys == System::S5 || sys == System::S5Con) {
    if (arity < 1 || arity > 8)
      throw std::invalid_argument("arity out of closed-form range (max 8)");
    unsigned long long cells = 1;
    for (int i = 0; i < arity; ++i)
      cells *= static_cast<unsigned long long>(alphabet_size(sys));
    return (BigInt(1) << static_cast<unsigned>(cells)) - 1;
  }
  return BigInt(count_admissible(sys, arity, limits));
}

SymbolicCount count_formula_classes(System sys, int arity,
                                    const Limits& limits) {
  return SymbolicCount{count_isolator_pairs(sys, arity, limits)};
}

std::pair<BigInt, BigInt> definable_bounds(int arity) {
  if (arity < 1 || arity > 8)
    throw std::invalid_argument("arity out of bounds range (max 8)");
  unsigned long long cells = 1;
  for (int i = 0; i < arity; ++i) cells *= 3ull;
  return {BigInt(1) << static_cast<unsigned>(cells - 1),
          BigInt(1) << static_cast<unsigned>(cells)};
}

DefinableCount count_definable(int arity, const Limits& limits,
                               ExecMode mode) {
  DefinableCount out;
  out.exponent = count_admissible(System::S5ConGroundMin, arity, limits, mode);
  out.count = SymbolicCount{BigInt(out.exponent)};
  auto [low, high] = definable_bounds(arity);
  out.interval_low = low;
  out.interval_high = high;
  out.interval_ok = low < out.exponent && BigInt(out.exponent) < high;
  return out;
}

}  // namespace fixmodal
