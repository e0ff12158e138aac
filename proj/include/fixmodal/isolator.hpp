#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "fixmodal/system.hpp"

namespace fixmodal {

using BigInt = boost::multiprecision::cpp_int;

// Coordinate values of the extensional alphabet. The 3-valued alphabet
// follows the standard matrix numbering 1=T, 2=F, 3=N; the 4-valued S5
// alphabet is 1=B, 2=T_only, 3=F_only, 4=N.
namespace ext {
inline constexpr int kTrue = 1;
inline constexpr int kFalse = 2;
inline constexpr int kNeither = 3;
}  // namespace ext

std::string value_name(int value, int alphabet);

// A cell of [v]^n: one extensional value per coordinate.
using Cell = std::vector<int>;

// Lexicographic cell numbering, first coordinate most significant;
// cell (1,...,1) has index 0.
uint32_t cell_index(const Cell& cell, int alphabet);
Cell cell_of_index(uint32_t index, int arity, int alphabet);

// Subset of [v]^n as a bitmask over cell indices. An intensional
// pre-n-isolator; admissible ones are the intensional n-isolators.
struct Tensor {
  int arity = 1;
  int alphabet = 3;
  uint32_t mask = 0;  // bit i set iff the cell with index i is a member

  int size() const;
  bool contains(const Cell& cell) const;
  std::vector<Cell> cells() const;  // ascending index order
  friend bool operator==(const Tensor&, const Tensor&) = default;
};

Tensor tensor_from_cells(const std::vector<Cell>& cells, int alphabet = 3);

// "1,1;2,2;3,3" (cells ';'-separated, coordinates ','-separated). A value
// starting with '[' is parsed as a JSON array of arrays instead.
Tensor parse_tensor(std::string_view text, int alphabet = 3);
std::string render_tensor(const Tensor& t);

// Cells whose coordinate `slice` (1-based) has value `layer`; v^(n-1) cells.
uint32_t layer_mask(int slice, int layer, int arity, int alphabet);
std::vector<Cell> layer(int slice, int layer, int arity, int alphabet);

// Outcome of the prime-condition check on a ternary tensor:
//   1. nonempty;
//   2. per slice, meeting layers 1 and 2 forces meeting layer 3;
//   3. the slices whose 3-layers are met must share a common met cell.
struct PrimeVerdict {
  enum class Violation { Empty, GroundSlice, MinCorner };
  bool ok = true;
  std::optional<Violation> violation;
  int slice = 0;                   // GroundSlice: first offending slice
  std::vector<int> corner_slices;  // MinCorner: the slices whose 3-layers are met
  std::string describe() const;
};

PrimeVerdict prime_check(const Tensor& t);  // requires alphabet == 3

class PrimeViolationError : public std::runtime_error {
 public:
  explicit PrimeViolationError(PrimeVerdict verdict);
  const PrimeVerdict& verdict() const noexcept { return verdict_; }

 private:
  PrimeVerdict verdict_;
};

// Per-system admissibility of a pre-isolator: S5 and S5[Con] only exclude
// the empty set, S5[Con,Ground] adds condition 2, the full system all three.
bool admissible(const Tensor& t, System sys);

// Precomputed layer masks for the hot enumeration path.
struct LayerMasks {
  int arity = 1;
  int alphabet = 3;
  uint32_t universe = 0;
  uint32_t at(int slice, int layer) const {  // 1-based
    return masks[(slice - 1) * alphabet + (layer - 1)];
  }
  std::vector<uint32_t> masks;
};
LayerMasks make_layer_masks(int arity, int alphabet);

inline bool admissible_mask(uint32_t mask, System sys, const LayerMasks& lm) {
  if (mask == 0) return false;
  if (!at_least(sys, System::S5ConGround)) return true;
  for (int j = 1; j <= lm.arity; ++j) {
    if ((mask & lm.at(j, 1)) && (mask & lm.at(j, 2)) && !(mask & lm.at(j, 3)))
      return false;
  }
  if (sys == System::S5ConGround) return true;
  uint32_t corner = lm.universe;
  bool any = false;
  for (int j = 1; j <= lm.arity; ++j) {
    uint32_t l3 = lm.at(j, 3);
    if (mask & l3) {
      any = true;
      corner &= l3;
    }
  }
  return !any || (mask & corner);
}

// A world-plus-frame point of the finite semantics: an extensional cell
// inside an admissible tensor.
struct IsolatorPair {
  Cell world;
  Tensor frame;
  friend bool operator==(const IsolatorPair&, const IsolatorPair&) = default;
};

// 2^exponent, kept symbolic; the decimal expansion is materialized only for
// exponents up to 64.
struct SymbolicCount {
  BigInt exponent;
  std::string to_string() const;
};

}  // namespace fixmodal
