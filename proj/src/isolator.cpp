#include "fixmodal/isolator.hpp"

#include <json.hpp>

#include <bit>
#include <cctype>
#include <sstream>

namespace fixmodal {

namespace {

constexpr uint32_t pow_u32(int base, int exp) {
  uint32_t r = 1;
  for (int i = 0; i < exp; ++i) r *= static_cast<uint32_t>(base);
  return r;
}

void check_alphabet(int alphabet) {
  if (alphabet != 3 && alphabet != 4)
    throw std::invalid_argument("alphabet must be 3 or 4");
}

void check_shape(int arity, int alphabet) {
  check_alphabet(alphabet);
  if (arity < 1) throw std::invalid_argument("arity must be >= 1");
  if (pow_u32(alphabet, arity) > 27)
    throw std::invalid_argument("cell space exceeds 27 positions");
}

}  // namespace

std::string value_name(int value, int alphabet) {
  check_alphabet(alphabet);
  static const char* three[] = {"T", "F", "N"};
  static const char* four[] = {"B", "T", "F", "N"};
  if (value < 1 || value > alphabet)
    throw std::invalid_argument("value out of alphabet range");
  return alphabet == 3 ? three[value - 1] : four[value - 1];
}

uint32_t cell_index(const Cell& cell, int alphabet) {
  check_shape(static_cast<int>(cell.size()), alphabet);
  uint32_t idx = 0;
  for (int v : cell) {
    if (v < 1 || v > alphabet)
      throw std::invalid_argument("cell value out of alphabet range");
    idx = idx * static_cast<uint32_t>(alphabet) + static_cast<uint32_t>(v - 1);
  }
  return idx;
}

Cell cell_of_index(uint32_t index, int arity, int alphabet) {
  check_shape(arity, alphabet);
  Cell cell(static_cast<std::size_t>(arity));
  for (int i = arity - 1; i >= 0; --i) {
    cell[static_cast<std::size_t>(i)] =
        static_cast<int>(index % static_cast<uint32_t>(alphabet)) + 1;
    index /= static_cast<uint32_t>(alphabet);
  }
  return cell;
}

int Tensor::size() const { return std::popcount(mask); }

bool Tensor::contains(const Cell& cell) const {
  if (static_cast<int>(cell.size()) != arity)
    throw std::invalid_argument("cell arity mismatch");
  return (mask >> cell_index(cell, alphabet)) & 1u;
}

std::vector<Cell> Tensor::cells() const {
  std::vector<Cell> out;
  uint32_t total = pow_u32(alphabet, arity);
  for (uint32_t i = 0; i < total; ++i)
    if ((mask >> i) & 1u) out.push_back(cell_of_index(i, arity, alphabet));
  return out;
}

Tensor tensor_from_cells(const std::vector<Cell>& cells, int alphabet) {
  if (cells.empty()) throw std::invalid_argument("no cells given");
  int arity = static_cast<int>(cells.front().size());
  check_shape(arity, alphabet);
  Tensor t{arity, alphabet, 0};
  for (const Cell& c : cells) {
    if (static_cast<int>(c.size()) != arity)
      throw std::invalid_argument("mixed cell arities");
    t.mask |= 1u << cell_index(c, alphabet);
  }
  return t;
}

Tensor parse_tensor(std::string_view text, int alphabet) {
  std::vector<Cell> cells;
  std::string s(text);
  if (!s.empty() && s.front() == '[') {
    auto j = nlohmann::json::parse(s);  // throws on malformed JSON
    if (!j.is_array() || j.empty())
      throw std::invalid_argument("expected a nonempty JSON array of arrays");
    for (const auto& row : j) {
      Cell c;
      for (const auto& v : row) c.push_back(v.get<int>());
      cells.push_back(std::move(c));
    }
    return tensor_from_cells(cells, alphabet);
  }
  std::stringstream ss(s);
  std::string cell_text;
  while (std::getline(ss, cell_text, ';')) {
    Cell c;
    std::stringstream cs(cell_text);
    std::string coord;
    while (std::getline(cs, coord, ',')) {
      std::size_t used = 0;
      int v = std::stoi(coord, &used);
      while (used < coord.size() &&
             std::isspace(static_cast<unsigned char>(coord[used])))
        ++used;
      if (used != coord.size())
        throw std::invalid_argument("bad coordinate '" + coord + "'");
      c.push_back(v);
    }
    if (c.empty()) throw std::invalid_argument("empty cell in tensor text");
    cells.push_back(std::move(c));
  }
  return tensor_from_cells(cells, alphabet);
}

std::string render_tensor(const Tensor& t) {
  std::string out;
  bool first_cell = true;
  for (const Cell& c : t.cells()) {
    if (!first_cell) out += ";";
    first_cell = false;
    bool first = true;
    for (int v : c) {
      if (!first) out += ",";
      first = false;
      out += std::to_string(v);
    }
  }
  return out;
}

uint32_t layer_mask(int slice, int layer, int arity, int alphabet) {
  check_shape(arity, alphabet);
  if (slice < 1 || slice > arity) throw std::out_of_range("slice out of range");
  if (layer < 1 || layer > alphabet)
    throw std::out_of_range("layer out of range");
  uint32_t total = pow_u32(alphabet, arity);
  uint32_t m = 0;
  // Coordinate `slice` of cell i is digit (arity - slice) of i base v.
  uint32_t div = pow_u32(alphabet, arity - slice);
  for (uint32_t i = 0; i < total; ++i)
    if ((i / div) % static_cast<uint32_t>(alphabet) ==
        static_cast<uint32_t>(layer - 1))
      m |= 1u << i;
  return m;
}

std::vector<Cell> layer(int slice, int layer_idx, int arity, int alphabet) {
  uint32_t m = layer_mask(slice, layer_idx, arity, alphabet);
  Tensor t{arity, alphabet, m};
  return t.cells();
}

LayerMasks make_layer_masks(int arity, int alphabet) {
  check_shape(arity, alphabet);
  LayerMasks lm;
  lm.arity = arity;
  lm.alphabet = alphabet;
  uint32_t total = pow_u32(alphabet, arity);  // <= 27 by check_shape
  lm.universe = (1u << total) - 1u;
  lm.masks.reserve(static_cast<std::size_t>(arity * alphabet));
  for (int j = 1; j <= arity; ++j)
    for (int k = 1; k <= alphabet; ++k)
      lm.masks.push_back(layer_mask(j, k, arity, alphabet));
  return lm;
}

std::string PrimeVerdict::describe() const {
  if (ok) return "OK";
  switch (*violation) {
    case Violation::Empty:
      return "empty";
    case Violation::GroundSlice:
      return "Ground on slice " + std::to_string(slice);
    case Violation::MinCorner: {
      std::string s = "Min corner on slices ";
      for (std::size_t i = 0; i < corner_slices.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(corner_slices[i]);
      }
      return s;
    }
  }
  return "?";
}

PrimeViolationError::PrimeViolationError(PrimeVerdict verdict)
    : std::runtime_error("prime conditions violated: " + verdict.describe()),
      verdict_(std::move(verdict)) {}

PrimeVerdict prime_check(const Tensor& t) {
  if (t.alphabet != 3)
    throw std::invalid_argument("prime conditions apply to ternary tensors");
  LayerMasks lm = make_layer_masks(t.arity, 3);
  PrimeVerdict out;
  if (t.mask == 0) {
    out.ok = false;
    out.violation = PrimeVerdict::Violation::Empty;
    return out;
  }
  for (int j = 1; j <= t.arity; ++j) {
    if ((t.mask & lm.at(j, 1)) && (t.mask & lm.at(j, 2)) &&
        !(t.mask & lm.at(j, 3))) {
      out.ok = false;
      out.violation = PrimeVerdict::Violation::GroundSlice;
      out.slice = j;
      return out;
    }
  }
  // Condition 3 via the single strongest instance: the slices whose 3-layers
  // are met must share a member; every weaker instance follows by inclusion.
  uint32_t corner = lm.universe;
  std::vector<int> met;
  for (int j = 1; j <= t.arity; ++j) {
    if (t.mask & lm.at(j, 3)) {
      met.push_back(j);
      corner &= lm.at(j, 3);
    }
  }
  if (!met.empty() && !(t.mask & corner)) {
    out.ok = false;
    out.violation = PrimeVerdict::Violation::MinCorner;
    out.corner_slices = std::move(met);
    return out;
  }
  return out;
}

bool admissible(const Tensor& t, System sys) {
  if (t.alphabet != alphabet_size(sys))
    throw std::invalid_argument("tensor alphabet does not match the system");
  LayerMasks lm = make_layer_masks(t.arity, t.alphabet);
  return admissible_mask(t.mask, sys, lm);
}

std::string SymbolicCount::to_string() const {
  std::string s = "2^" + exponent.str();
  if (exponent <= 64) {
    BigInt value = BigInt(1) << static_cast<unsigned>(exponent);
    s += " = " + value.str();
  }
  return s;
}

}  // namespace fixmodal
