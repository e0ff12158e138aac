#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "fixmodal/isolator.hpp"

namespace fixmodal {

// Every exhaustive sweep below runs over the 2^(v^n) subsets of [v]^n.
// Parallel kernels partition the mask space; the serial variants are the
// reference implementations the tests compare against.
enum class ExecMode { Serial, Parallel };

// v^n is capped at 27 bits, and the top size (the n=3 ternary sweep over
// 2^27 masks) has to be requested explicitly.
struct Limits {
  bool allow_arity3 = false;
};

// Throws std::invalid_argument when a sweep at (sys, arity) is off limits.
void check_enumeration_cap(System sys, int arity, const Limits& limits);

// Admissible tensors in ascending mask order, each exactly once. The visitor
// returns false to stop early. Serial by construction (ordered stream).
void for_each_admissible(System sys, int arity, const Limits& limits,
                         const std::function<bool(const Tensor&)>& visit);

std::vector<Tensor> enumerate_admissible(System sys, int arity,
                                         const Limits& limits = {});

// Number of admissible tensors (intensional n-isolators).
uint64_t count_admissible(System sys, int arity, const Limits& limits = {},
                          ExecMode mode = ExecMode::Parallel);

// Number of pairs (cell, admissible tensor) with the cell a member, by sweep.
uint64_t count_pairs_enumerated(System sys, int arity, const Limits& limits = {},
                                ExecMode mode = ExecMode::Parallel);

// Closed forms, exact for every arity: S5 has 4^n * 2^(4^n - 1) isolator
// pairs and S5[Con] has 3^n * 2^(3^n - 1).
BigInt closed_form_pairs(System sys, int arity);  // S5 / S5Con only

// Number of intensional n-isolators: 2^(v^n) - 1 for S5 / S5[Con] (every
// nonempty pre-isolator), enumeration for the Ground systems.
BigInt count_intensional_isolators(System sys, int arity,
                                   const Limits& limits = {});

// Exact pair count: closed form where available, enumeration otherwise.
BigInt count_isolator_pairs(System sys, int arity, const Limits& limits = {});

// Formulas with n distinct variables up to provable equivalence: 2^(pairs).
SymbolicCount count_formula_classes(System sys, int arity,
                                    const Limits& limits = {});

// Definable n-ary relations: 2^(#admissible tensors under the full system),
// plus the strict interval bound 2^(3^n - 1) < exponent < 2^(3^n).
struct DefinableCount {
  uint64_t exponent = 0;
  SymbolicCount count;
  BigInt interval_low;   // 2^(3^n - 1)
  BigInt interval_high;  // 2^(3^n)
  bool interval_ok = false;
};
DefinableCount count_definable(int arity, const Limits& limits = {},
                               ExecMode mode = ExecMode::Parallel);

// Interval endpoints alone (any arity).
std::pair<BigInt, BigInt> definable_bounds(int arity);

}  // namespace fixmodal
