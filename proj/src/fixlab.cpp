#include "fixmodal/fixlab.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <stdexcept>

namespace fixmodal::lab {

namespace {
// True -> 1, False -> -1, Neither -> 0; conjunction is min, disjunction max.
constexpr int signed_of(Tri v) {
  return v == Tri::True ? 1 : (v == Tri::False ? -1 : 0);
}
constexpr Tri tri_of(int s) {
  return s > 0 ? Tri::True : (s < 0 ? Tri::False : Tri::Neither);
}
}  // namespace

Tri k3_not(Tri a) { return tri_of(-signed_of(a)); }
Tri k3_and(Tri a, Tri b) { return tri_of(std::min(signed_of(a), signed_of(b))); }
Tri k3_or(Tri a, Tri b) { return tri_of(std::max(signed_of(a), signed_of(b))); }

std::string_view tri_name(Tri v) {
  switch (v) {
    case Tri::True: return "TRUE";
    case Tri::False: return "FALSE";
    case Tri::Neither: return "NEITHER";
  }
  return "?";
}

const std::string& Def::name() const {
  if (node_->kind != Kind::TruthOf)
    throw std::logic_error("name() on a non-TruthOf");
  return node_->name;
}

Def Def::child() const {
  if (node_->kind != Kind::Not) throw std::logic_error("child() on a non-Not");
  return Def(node_->left);
}

Def Def::left() const {
  if (node_->kind != Kind::And && node_->kind != Kind::Or)
    throw std::logic_error("left() on a non-binary node");
  return Def(node_->left);
}

Def Def::right() const {
  if (node_->kind != Kind::And && node_->kind != Kind::Or)
    throw std::logic_error("right() on a non-binary node");
  return Def(node_->right);
}

Def Def::truth_of(std::string name) {
  return Def(std::make_shared<const Node>(
      Node{Kind::TruthOf, std::move(name), nullptr, nullptr}));
}
Def Def::top() {
  return Def(std::make_shared<const Node>(Node{Kind::Top, {}, nullptr, nullptr}));
}
Def Def::bot() {
  return Def(std::make_shared<const Node>(Node{Kind::Bot, {}, nullptr, nullptr}));
}
Def Def::make_not(Def d) {
  return Def(std::make_shared<const Node>(
      Node{Kind::Not, {}, std::move(d.node_), nullptr}));
}
Def Def::make_and(Def l, Def r) {
  return Def(std::make_shared<const Node>(
      Node{Kind::And, {}, std::move(l.node_), std::move(r.node_)}));
}
Def Def::make_or(Def l, Def r) {
  return Def(std::make_shared<const Node>(
      Node{Kind::Or, {}, std::move(l.node_), std::move(r.node_)}));
}

namespace {

class DefParser {
 public:
  explicit DefParser(std::string_view text) : text_(text) {}

  Def run() {
    skip_space();
    if (pos_ >= text_.size())
      throw fixmodal::ParseError("empty definition", pos_);
    Def d = parse_or();
    skip_space();
    if (pos_ < text_.size())
      throw fixmodal::ParseError("unexpected trailing input", pos_);
    return d;
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool eat(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Def parse_or() {
    Def d = parse_and();
    while (eat('|')) d = Def::make_or(d, parse_and());
    return d;
  }

  Def parse_and() {
    Def d = parse_unary();
    while (eat('&')) d = Def::make_and(d, parse_unary());
    return d;
  }

  Def parse_unary() {
    if (eat('~')) return Def::make_not(parse_unary());
    return parse_primary();
  }

  Def parse_primary() {
    skip_space();
    if (pos_ >= text_.size())
      throw fixmodal::ParseError("unexpected end of definition", pos_);
    if (eat('(')) {
      Def d = parse_or();
      skip_space();
      if (!eat(')')) throw fixmodal::ParseError("expected ')'", pos_);
      return d;
    }
    std::string word = read_word();
    if (word == "TOP") return Def::top();
    if (word == "BOT") return Def::bot();
    if (word == "True") {
      skip_space();
      if (!eat('(')) throw fixmodal::ParseError("expected '(' after True", pos_);
      skip_space();
      std::string name = read_word();
      if (name.empty())
        throw fixmodal::ParseError("expected a sentence name", pos_);
      skip_space();
      if (!eat(')')) throw fixmodal::ParseError("expected ')'", pos_);
      return Def::truth_of(std::move(name));
    }
    throw fixmodal::ParseError("unknown token '" + word + "'",
                               pos_ - word.size());
  }

  std::string read_word() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
            text_[pos_] == '_'))
      ++pos_;
    if (pos_ == start)
      throw fixmodal::ParseError("expected a token", pos_);
    return std::string(text_.substr(start, pos_ - start));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Def parse_def(std::string_view text) { return DefParser(text).run(); }

std::string render_def(const Def& d) {
  switch (d.kind()) {
    case Def::Kind::TruthOf: return "True(" + d.name() + ")";
    case Def::Kind::Top: return "TOP";
    case Def::Kind::Bot: return "BOT";
    case Def::Kind::Not: return "~" + render_def(d.child());
    case Def::Kind::And:
      return "(" + render_def(d.left()) + " & " + render_def(d.right()) + ")";
    case Def::Kind::Or:
      return "(" + render_def(d.left()) + " | " + render_def(d.right()) + ")";
  }
  return "?";
}

void Pool::add(const std::string& name, Def def) {
  if (name.empty()) throw std::invalid_argument("empty sentence name");
  if (has(name)) throw std::invalid_argument("duplicate sentence '" + name + "'");
  entries_.emplace_back(name, std::move(def));
}

std::optional<std::size_t> Pool::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < entries_.size(); ++i)
    if (entries_[i].first == name) return i;
  return std::nullopt;
}

namespace {

void check_references(const Def& d, const Pool& pool) {
  switch (d.kind()) {
    case Def::Kind::TruthOf:
      if (!pool.has(d.name()))
        throw std::invalid_argument("unresolved sentence '" + d.name() + "'");
      return;
    case Def::Kind::Top:
    case Def::Kind::Bot:
      return;
    case Def::Kind::Not:
      check_references(d.child(), pool);
      return;
    case Def::Kind::And:
    case Def::Kind::Or:
      check_references(d.left(), pool);
      check_references(d.right(), pool);
      return;
  }
}

}  // namespace

void Pool::validate() const {
  if (entries_.empty()) throw std::invalid_argument("pool is empty");
  for (const auto& [name, def] : entries_) check_references(def, *this);
}

Tri eval_k3(const Def& d, const Pool& pool, const Valuation& v) {
  switch (d.kind()) {
    case Def::Kind::TruthOf: {
      auto idx = pool.index_of(d.name());
      if (!idx)
        throw std::invalid_argument("unresolved sentence '" + d.name() + "'");
      return v[*idx];
    }
    case Def::Kind::Top: return Tri::True;
    case Def::Kind::Bot: return Tri::False;
    case Def::Kind::Not: return k3_not(eval_k3(d.child(), pool, v));
    case Def::Kind::And:
      return k3_and(eval_k3(d.left(), pool, v), eval_k3(d.right(), pool, v));
    case Def::Kind::Or:
      return k3_or(eval_k3(d.left(), pool, v), eval_k3(d.right(), pool, v));
  }
  throw std::logic_error("unreachable");
}

Valuation jump(const Pool& pool, const Valuation& v) {
  if (v.size() != pool.size())
    throw std::invalid_argument("valuation size does not match the pool");
  Valuation out(pool.size());
  for (std::size_t i = 0; i < pool.size(); ++i)
    out[i] = eval_k3(pool.def_at(i), pool, v);
  return out;
}

Valuation least_fixed_point(const Pool& pool) {
  pool.validate();
  Valuation v(pool.size(), Tri::Neither);
  // The jump is monotone in the information order, so iteration from the
  // bottom valuation stabilizes within pool.size() + 1 steps.
  for (std::size_t step = 0; step <= pool.size() + 1; ++step) {
    Valuation next = jump(pool, v);
    if (next == v) return v;
    v = std::move(next);
  }
  throw std::logic_error("jump iteration failed to stabilize");
}

namespace {

constexpr std::size_t kMaxPoolForSweep = 12;

uint64_t pow3(std::size_t k) {
  uint64_t r = 1;
  for (std::size_t i = 0; i < k; ++i) r *= 3;
  return r;
}

Valuation decode(uint64_t code, std::size_t k) {
  Valuation v(k);
  for (std::size_t i = 0; i < k; ++i) {
    v[i] = static_cast<Tri>(code % 3);
    code /= 3;
  }
  return v;
}

// Definitions flattened to one postorder program over the signed encoding
// (True 1, False -1, Neither 0); the sweep walks this instead of the trees.
struct CompiledPool {
  struct Op {
    Def::Kind kind;
    int a = -1;
    int b = -1;
    int name = -1;  // TruthOf: pool index
  };
  std::vector<Op> ops;
  std::vector<int> roots;  // slot of each definition

  static int flatten(const Def& d, const Pool& pool, std::vector<Op>& ops) {
    Op op{d.kind(), -1, -1, -1};
    switch (d.kind()) {
      case Def::Kind::TruthOf:
        op.name = static_cast<int>(*pool.index_of(d.name()));
        break;
      case Def::Kind::Top:
      case Def::Kind::Bot:
        break;
      case Def::Kind::Not:
        op.a = flatten(d.child(), pool, ops);
        break;
      case Def::Kind::And:
      case Def::Kind::Or:
        op.a = flatten(d.left(), pool, ops);
        op.b = flatten(d.right(), pool, ops);
        break;
    }
    ops.push_back(op);
    return static_cast<int>(ops.size()) - 1;
  }

  explicit CompiledPool(const Pool& pool) {
    for (std::size_t i = 0; i < pool.size(); ++i)
      roots.push_back(flatten(pool.def_at(i), pool, ops));
  }

  // jump(v) == v, over the signed values of v.
  bool is_fixed(const std::vector<int>& sv, std::vector<int>& slots) const {
    slots.resize(ops.size());
    for (std::size_t i = 0; i < ops.size(); ++i) {
      const Op& op = ops[i];
      switch (op.kind) {
        case Def::Kind::TruthOf:
          slots[i] = sv[static_cast<std::size_t>(op.name)];
          break;
        case Def::Kind::Top: slots[i] = 1; break;
        case Def::Kind::Bot: slots[i] = -1; break;
        case Def::Kind::Not:
          slots[i] = -slots[static_cast<std::size_t>(op.a)];
          break;
        case Def::Kind::And:
          slots[i] = std::min(slots[static_cast<std::size_t>(op.a)],
                              slots[static_cast<std::size_t>(op.b)]);
          break;
        case Def::Kind::Or:
          slots[i] = std::max(slots[static_cast<std::size_t>(op.a)],
                              slots[static_cast<std::size_t>(op.b)]);
          break;
      }
    }
    for (std::size_t i = 0; i < roots.size(); ++i)
      if (slots[static_cast<std::size_t>(roots[i])] != sv[i]) return false;
    return true;
  }
};

void sweep_range(const CompiledPool& cp, std::size_t k, uint64_t lo,
                 uint64_t hi, std::vector<Valuation>& out) {
  std::vector<int> sv(k), slots;
  for (uint64_t code = lo; code < hi; ++code) {
    uint64_t c = code;
    for (std::size_t i = 0; i < k; ++i) {
      sv[i] = signed_of(static_cast<Tri>(c % 3));
      c /= 3;
    }
    if (cp.is_fixed(sv, slots)) out.push_back(decode(code, k));
  }
}

}  // namespace

FixedPointSet enumerate_fixed_points(const Pool& pool, ExecMode mode) {
  pool.validate();
  if (pool.size() > kMaxPoolForSweep)
    throw std::invalid_argument("pool too large for the 3^k sweep (max 12)");
  const uint64_t total = pow3(pool.size());
  const CompiledPool cp(pool);

  FixedPointSet out;
  if (mode == ExecMode::Serial) {
    sweep_range(cp, pool.size(), 0, total, out.points);
  } else {
    const uint64_t kBlocks = std::min<uint64_t>(total, 64);
    std::vector<std::vector<Valuation>> buckets(kBlocks);
#pragma omp parallel for schedule(dynamic)
    for (long long b = 0; b < static_cast<long long>(kBlocks); ++b) {
      uint64_t lo = total * static_cast<uint64_t>(b) / kBlocks;
      uint64_t hi = total * (static_cast<uint64_t>(b) + 1) / kBlocks;
      sweep_range(cp, pool.size(), lo, hi,
                  buckets[static_cast<std::size_t>(b)]);
    }
    for (auto& bucket : buckets)
      for (auto& v : bucket) out.points.push_back(std::move(v));
  }

  Valuation least = least_fixed_point(pool);
  auto it = std::find(out.points.begin(), out.points.end(), least);
  if (it == out.points.end())
    throw std::logic_error("least fixed point missing from the sweep");
  out.minimum_index = static_cast<std::size_t>(it - out.points.begin());
  return out;
}

Tensor profile(const Pool& pool, const FixedPointSet& fps,
               const std::vector<std::string>& names) {
  if (names.empty()) throw std::invalid_argument("no names given");
  std::vector<std::size_t> idx;
  for (const auto& name : names) {
    auto i = pool.index_of(name);
    if (!i) throw std::invalid_argument("unknown sentence '" + name + "'");
    idx.push_back(*i);
  }
  Tensor t{static_cast<int>(names.size()), 3, 0};
  Cell cell(names.size());
  for (const Valuation& w : fps.points) {
    for (std::size_t i = 0; i < idx.size(); ++i)
      cell[i] = tri_coord(w[idx[i]]);
    t.mask |= 1u << cell_index(cell, 3);
  }
  return t;
}

Tensor profile(const Pool& pool, const std::vector<std::string>& names) {
  return profile(pool, enumerate_fixed_points(pool), names);
}

bool compatible(const Valuation& a, const Valuation& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if ((a[i] == Tri::True && b[i] == Tri::False) ||
        (a[i] == Tri::False && b[i] == Tri::True))
      return false;
  }
  return true;
}

bool info_leq(const Valuation& a, const Valuation& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != Tri::Neither && a[i] != b[i]) return false;
  return true;
}

Valuation info_join(const Valuation& a, const Valuation& b) {
  if (!compatible(a, b))
    throw std::invalid_argument("join of incompatible valuations");
  Valuation out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    out[i] = a[i] == Tri::Neither ? b[i] : a[i];
  return out;
}

Classification classify(const Pool& pool, const FixedPointSet& fps,
                        std::string_view name) {
  auto idx = pool.index_of(name);
  if (!idx) throw std::invalid_argument("unknown sentence");
  Classification out;
  out.profile = profile(pool, fps, {std::string(name)});
  const uint32_t m = out.profile.mask;
  const bool has_true = m & 0b001u;
  const bool has_false = m & 0b010u;
  out.grounded = m == 0b001u || m == 0b010u;
  out.paradoxical = m == 0b100u;
  out.inevitable = has_true != has_false;
  out.intrinsic = false;
  for (const Valuation& w : fps.points) {
    if (w[*idx] == Tri::Neither) continue;
    bool ok = true;
    for (const Valuation& u : fps.points) {
      if (!compatible(w, u)) {
        ok = false;
        break;
      }
    }
    if (ok) {
      out.intrinsic = true;
      break;
    }
  }
  return out;
}

Classification classify(const Pool& pool, std::string_view name) {
  return classify(pool, enumerate_fixed_points(pool), name);
}

// ---------------------------------------------------------------------------
// Realization of prime tensors as sentence pools.

namespace {

// Standard palette realizing the six admissible arity-1 profiles.
class Palette {
 public:
  Pool& pool() { return pool_; }

  std::string top() { return ensure("top", Def::top()); }
  std::string bot() { return ensure("bot", Def::bot()); }
  std::string liar() {
    return ensure("liar", Def::make_not(Def::truth_of("liar")));
  }
  std::string truth_teller() { return ensure("tt", Def::truth_of("tt")); }
  std::string tautology_teller() {
    return ensure("gamma", Def::make_or(Def::truth_of("gamma"),
                                        Def::make_not(Def::truth_of("gamma"))));
  }
  std::string neg_tautology_teller() {
    tautology_teller();
    return ensure("ngamma", Def::make_not(Def::truth_of("gamma")));
  }

  std::string fresh(const std::string& name, Def def) {
    pool_.add(name, std::move(def));
    return name;
  }

 private:
  std::string ensure(const std::string& name, Def def) {
    if (!pool_.has(name)) pool_.add(name, std::move(def));
    return name;
  }

  Pool pool_;
};

Tensor project_out(const Tensor& t, int slice) {
  std::vector<Cell> cells;
  for (Cell c : t.cells()) {
    c.erase(c.begin() + (slice - 1));
    cells.push_back(std::move(c));
  }
  return tensor_from_cells(cells, 3);
}

std::vector<std::string> realize_rec(const Tensor& t, Palette& pal);

// Frames containing the all-Neither cell: selector sentences over k
// independent truth tellers pick one cell per classical world, and each
// coordinate sentence is a conjunction of conditionals answering for its
// column of the chosen cell. A conditional with a Neither antecedent cannot
// be False. Cells take even-parity sign patterns only, so distinct cell
// patterns differ in at least two signs: a world with any Neither teller
// matches a subcube of selectors containing adjacent patterns, hence at
// least one selector with a liar consequent, which drags every coordinate
// to Neither and lands on the all-Neither cell.
std::vector<std::string> realize_all3(const Tensor& t, Palette& pal) {
  const int n = t.arity;
  uint32_t cells3n = 1;
  for (int i = 0; i < n; ++i) cells3n *= 3;
  int k = 1;
  while ((1u << k) <= cells3n) ++k;
  ++k;  // even-parity headroom: 2^(k-1) patterns cover the 3^n cells

  std::vector<std::string> taus;
  for (int i = 1; i <= k; ++i)
    taus.push_back(pal.fresh("tau" + std::to_string(i),
                             Def::truth_of("tau" + std::to_string(i))));
  std::string liar = pal.liar();

  // Cell with index c gets the (c+1)-th even-parity pattern.
  std::vector<int> cell_of_pattern(1u << k, -1);
  {
    uint32_t assigned = 0;
    for (uint32_t p = 0; p < (1u << k) && assigned < cells3n; ++p) {
      if (std::popcount(p) % 2 == 0)
        cell_of_pattern[p] = static_cast<int>(assigned++);
    }
  }

  auto selector = [&](uint32_t pattern) {  // sign bits over the tellers
    Def d = Def::top();
    bool first = true;
    for (int i = 0; i < k; ++i) {
      Def lit = Def::truth_of(taus[static_cast<std::size_t>(i)]);
      if (pattern >> i & 1u) lit = Def::make_not(std::move(lit));
      d = first ? std::move(lit) : Def::make_and(std::move(d), std::move(lit));
      first = false;
    }
    return d;
  };

  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i) {
    Def acc = Def::top();
    bool first = true;
    for (uint32_t p = 0; p < (1u << k); ++p) {
      Def theta = Def::truth_of(liar);
      int c = cell_of_pattern[p];
      if (c >= 0 && ((t.mask >> c) & 1u)) {
        int coord = cell_of_index(static_cast<uint32_t>(c), n,
                                  3)[static_cast<std::size_t>(i - 1)];
        if (coord == 1)
          theta = Def::top();
        else if (coord == 2)
          theta = Def::bot();
      }
      Def cond = Def::make_or(Def::make_not(selector(p)), std::move(theta));
      acc = first ? std::move(cond)
                  : Def::make_and(std::move(acc), std::move(cond));
      first = false;
    }
    names.push_back(pal.fresh("a" + std::to_string(i), std::move(acc)));
  }
  return names;
}

std::vector<std::string> realize_rec(const Tensor& t, Palette& pal) {
  const int n = t.arity;
  if (n == 1) {
    switch (t.mask) {
      case 0b001u: return {pal.top()};
      case 0b010u: return {pal.bot()};
      case 0b100u: return {pal.liar()};
      case 0b101u: return {pal.tautology_teller()};
      case 0b110u: return {pal.neg_tautology_teller()};
      case 0b111u: return {pal.truth_teller()};
    }
    throw std::logic_error("non-prime arity-1 tensor reached realization");
  }

  const Cell all3(static_cast<std::size_t>(n), 3);
  if (!t.contains(all3)) {
    // A prime tensor omitting the all-Neither cell sits inside a binary
    // layer of some slice; pin that coordinate and recurse on the rest.
    for (int j = 1; j <= n; ++j) {
      for (int i = 1; i <= 2; ++i) {
        if ((t.mask & ~layer_mask(j, i, n, 3)) != 0) continue;
        Tensor reduced = project_out(t, j);
        std::vector<std::string> names = realize_rec(reduced, pal);
        names.insert(names.begin() + (j - 1), i == 1 ? pal.top() : pal.bot());
        return names;
      }
    }
    throw std::logic_error("prime tensor without the all-Neither cell "
                           "escaped every binary layer");
  }
  return realize_all3(t, pal);
}

}  // namespace

Realization realize(const Tensor& t) {
  if (t.alphabet != 3)
    throw std::invalid_argument("realization needs a ternary tensor");
  if (t.arity > 3) throw std::invalid_argument("realization capped at arity 3");
  PrimeVerdict verdict = prime_check(t);
  if (!verdict.ok) throw PrimeViolationError(std::move(verdict));

  Palette pal;
  std::vector<std::string> names = realize_rec(t, pal);
  pal.pool().validate();
  return Realization{std::move(pal.pool()), std::move(names)};
}

// ---------------------------------------------------------------------------
// Modal evaluation over the fixed-point frame.

namespace {

using WorldBits = std::vector<uint64_t>;

WorldBits eval_bits(const Pool& pool, const FixedPointSet& fps,
                    const Formula& f, const Assignment& assignment,
                    std::size_t words, const WorldBits& universe) {
  auto atom_bits = [&](Variable x, Tri wanted) {
    auto it = assignment.find(x.index);
    if (it == assignment.end())
      throw std::invalid_argument("unassigned variable x" +
                                  std::to_string(x.index));
    auto idx = pool.index_of(it->second);
    if (!idx)
      throw std::invalid_argument("unknown sentence '" + it->second + "'");
    WorldBits bits(words, 0);
    for (std::size_t w = 0; w < fps.points.size(); ++w)
      if (fps.points[w][*idx] == wanted) bits[w / 64] |= 1ull << (w % 64);
    return bits;
  };

  switch (f.kind()) {
    case Formula::Kind::AtomT:
      return atom_bits(f.var(), Tri::True);
    case Formula::Kind::AtomF:
      return atom_bits(f.var(), Tri::False);
    case Formula::Kind::Not: {
      WorldBits bits = eval_bits(pool, fps, f.child(), assignment, words, universe);
      for (std::size_t i = 0; i < words; ++i) bits[i] = ~bits[i] & universe[i];
      return bits;
    }
    case Formula::Kind::And: {
      WorldBits l = eval_bits(pool, fps, f.left(), assignment, words, universe);
      WorldBits r = eval_bits(pool, fps, f.right(), assignment, words, universe);
      for (std::size_t i = 0; i < words; ++i) l[i] &= r[i];
      return l;
    }
    case Formula::Kind::Box: {
      WorldBits bits = eval_bits(pool, fps, f.child(), assignment, words, universe);
      return bits == universe ? universe : WorldBits(words, 0);
    }
  }
  throw std::logic_error("unreachable");
}

WorldBits make_universe(std::size_t worlds, std::size_t words) {
  WorldBits u(words, 0);
  for (std::size_t w = 0; w < worlds; ++w) u[w / 64] |= 1ull << (w % 64);
  return u;
}

}  // namespace

bool pool_eval(const Pool& pool, const FixedPointSet& fps, const Formula& f,
               const Assignment& assignment, std::size_t world) {
  if (world >= fps.points.size()) throw std::out_of_range("world index");
  std::size_t words = (fps.points.size() + 63) / 64;
  WorldBits universe = make_universe(fps.points.size(), words);
  WorldBits bits = eval_bits(pool, fps, f, assignment, words, universe);
  return (bits[world / 64] >> (world % 64)) & 1ull;
}

bool pool_valid(const Pool& pool, const Formula& f,
                const Assignment& assignment) {
  FixedPointSet fps = enumerate_fixed_points(pool);
  std::size_t words = (fps.points.size() + 63) / 64;
  WorldBits universe = make_universe(fps.points.size(), words);
  WorldBits bits = eval_bits(pool, fps, f, assignment, words, universe);
  return bits == universe;
}

// ---------------------------------------------------------------------------
// Definability audit.

DefinabilityReport definability_audit(const Pool& pool) {
  FixedPointSet fps = enumerate_fixed_points(pool);
  DefinabilityReport report;
  report.candidate_tensor_masks = {0b001u, 0b010u, 0b100u,
                                   0b101u, 0b110u, 0b111u};

  std::vector<uint32_t> profile_mask;
  for (std::size_t i = 0; i < pool.size(); ++i) {
    Classification cls = classify(pool, fps, pool.name_at(i));
    profile_mask.push_back(cls.profile.mask);
    if (cls.intrinsic) report.intrinsic_set.push_back(pool.name_at(i));
    if (cls.inevitable) report.inevitable_set.push_back(pool.name_at(i));
    report.sentences.push_back({pool.name_at(i), std::move(cls)});
  }

  for (uint32_t cand = 0; cand < 64; ++cand) {
    std::vector<std::string> defined;
    for (std::size_t i = 0; i < pool.size(); ++i) {
      for (int b = 0; b < 6; ++b) {
        if ((cand >> b & 1u) &&
            profile_mask[i] == report.candidate_tensor_masks[b]) {
          defined.push_back(pool.name_at(i));
          break;
        }
      }
    }
    if (defined == report.intrinsic_set) report.intrinsic_matches.push_back(cand);
    if (defined == report.inevitable_set)
      report.inevitable_matches.push_back(cand);
  }

  for (std::size_t i = 0; i < pool.size() && !report.discerning_pair; ++i) {
    for (std::size_t j = i + 1; j < pool.size(); ++j) {
      if (profile_mask[i] == profile_mask[j] &&
          report.sentences[i].cls.intrinsic !=
              report.sentences[j].cls.intrinsic) {
        report.discerning_pair = {pool.name_at(i), pool.name_at(j)};
        break;
      }
    }
  }
  return report;
}

}  // namespace fixmodal::lab
