#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fixmodal/enumerate.hpp"
#include "fixmodal/formula.hpp"
#include "fixmodal/isolator.hpp"

namespace fixmodal::lab {

// Strong Kleene truth values. The numeric order matches the 3-valued cell
// coordinates: True -> 1, False -> 2, Neither -> 3.
enum class Tri : uint8_t { True = 0, False = 1, Neither = 2 };

Tri k3_not(Tri a);
Tri k3_and(Tri a, Tri b);
Tri k3_or(Tri a, Tri b);  // De Morgan dual of k3_and
std::string_view tri_name(Tri v);
inline int tri_coord(Tri v) { return static_cast<int>(v) + 1; }

// Definition of a pool sentence: a strong Kleene sentence over the truth
// predicate applied to pool names.
class Def {
 public:
  enum class Kind { TruthOf, Top, Bot, Not, And, Or };

  Kind kind() const { return node_->kind; }
  const std::string& name() const;  // TruthOf
  Def child() const;                // Not
  Def left() const;                 // And / Or
  Def right() const;

  static Def truth_of(std::string name);
  static Def top();
  static Def bot();
  static Def make_not(Def d);
  static Def make_and(Def l, Def r);
  static Def make_or(Def l, Def r);

 private:
  struct Node {
    Kind kind;
    std::string name;
    std::shared_ptr<const Node> left, right;
  };
  explicit Def(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

  std::shared_ptr<const Node> node_;
};

// Grammar: True(name) | TOP | BOT | ~d | (d & d) | (d | d); precedence
// ~ > & > |, parentheses optional on input. Throws ParseError.
Def parse_def(std::string_view text);
std::string render_def(const Def& d);  // canonical, binary ops parenthesized

// A finite named sentence system. Order is insertion order and fixed.
class Pool {
 public:
  void add(const std::string& name, Def def);  // rejects duplicates
  std::size_t size() const { return entries_.size(); }
  const std::string& name_at(std::size_t i) const { return entries_[i].first; }
  const Def& def_at(std::size_t i) const { return entries_[i].second; }
  std::optional<std::size_t> index_of(std::string_view name) const;
  bool has(std::string_view name) const { return index_of(name).has_value(); }

  // Every TruthOf must name a pool member; throws std::invalid_argument.
  void validate() const;

 private:
  std::vector<std::pair<std::string, Def>> entries_;
};

// Total assignment of truth values to pool names, indexed by pool order.
using Valuation = std::vector<Tri>;

// Strong Kleene value of a definition; TruthOf(s) reads the valuation.
Tri eval_k3(const Def& d, const Pool& pool, const Valuation& v);

// One application of the jump: re-evaluate every definition under v.
Valuation jump(const Pool& pool, const Valuation& v);

// Iterate the jump from all-Neither until stable; the result is the
// information-least fixed point.
Valuation least_fixed_point(const Pool& pool);

struct FixedPointSet {
  std::vector<Valuation> points;  // ascending valuation-code order
  std::size_t minimum_index = 0;  // index of the least fixed point
};

// All jump-stable valuations by exhaustive sweep over 3^k candidates;
// pool size capped at 12.
FixedPointSet enumerate_fixed_points(const Pool& pool,
                                     ExecMode mode = ExecMode::Parallel);

// Value combinations the named sentences attain across the fixed points,
// as a ternary tensor of arity names.size().
Tensor profile(const Pool& pool, const std::vector<std::string>& names);
Tensor profile(const Pool& pool, const FixedPointSet& fps,
               const std::vector<std::string>& names);

struct Classification {
  bool grounded = false;     // same binary value in every fixed point
  bool paradoxical = false;  // Neither in every fixed point
  bool inevitable = false;   // one binary value somewhere, the other nowhere
  bool intrinsic = false;    // binary in a fixed point compatible with all
  Tensor profile;            // arity-1 value profile
};

Classification classify(const Pool& pool, std::string_view name);
Classification classify(const Pool& pool, const FixedPointSet& fps,
                        std::string_view name);

// Two fixed points are compatible when no name is True in one and False in
// the other; the pointwise information join of compatible fixed points is
// again a fixed point.
bool compatible(const Valuation& a, const Valuation& b);

// Information order: Neither sits below both binary values.
bool info_leq(const Valuation& a, const Valuation& b);
Valuation info_join(const Valuation& a, const Valuation& b);  // compatible only

struct Realization {
  Pool pool;
  std::vector<std::string> names;  // one pool name per coordinate
};

// Construct a pool whose named sentences realize exactly the given ternary
// tensor as their profile. Requires the prime conditions (throws
// PrimeViolationError) and arity <= 3.
Realization realize(const Tensor& t);

// Modal evaluation over the pool's fixed-point frame: worlds are the fixed
// points, T(x) holds where the assigned sentence is True, box ranges over
// all worlds. The assignment maps variable indices to pool names.
using Assignment = std::map<int, std::string>;

bool pool_eval(const Pool& pool, const FixedPointSet& fps, const Formula& f,
               const Assignment& assignment, std::size_t world);
bool pool_valid(const Pool& pool, const Formula& f,
                const Assignment& assignment);

// Definability audit against the 64 candidate definitions (unions of the six
// admissible arity-1 tensors).
struct DefinabilityReport {
  struct SentenceInfo {
    std::string name;
    Classification cls;
  };
  std::vector<SentenceInfo> sentences;
  std::vector<std::string> intrinsic_set;
  std::vector<std::string> inevitable_set;
  std::vector<uint32_t> candidate_tensor_masks;  // the six, ascending
  // Candidate subsets (bitmask over the six) whose defined set matches.
  std::vector<uint32_t> intrinsic_matches;
  std::vector<uint32_t> inevitable_matches;
  // Same profile, different intrinsic status (first such pair if any).
  std::optional<std::pair<std::string, std::string>> discerning_pair;
};

DefinabilityReport definability_audit(const Pool& pool);

}  // namespace fixmodal::lab
