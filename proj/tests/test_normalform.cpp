#include <doctest.h>

#include <random>
#include <set>

#include "fixmodal/axioms.hpp"
#include "fixmodal/normalform.hpp"
#include "fixmodal/semantics.hpp"
#include "gen.hpp"

using namespace fixmodal;

namespace {

// Order-free fingerprint of a normal form.
std::set<std::pair<uint32_t, uint32_t>> fingerprint(const NormalForm& nf) {
  std::set<std::pair<uint32_t, uint32_t>> out;
  for (const auto& p : nf.disjuncts)
    out.insert({p.frame.mask, cell_index(p.world, p.frame.alphabet)});
  return out;
}

}  // namespace

TEST_SUITE("normalform") {

TEST_CASE("groundedness normalizes to the two one-point isolators") {
  NormalForm nf =
      to_normal_form(parse("[]T(x1) | []F(x1)"), System::S5ConGroundMin);
  REQUIRE(nf.disjuncts.size() == 2);
  CHECK(nf.disjuncts[0].world == Cell{1});
  CHECK(nf.disjuncts[0].frame.mask == 0b001);
  CHECK(nf.disjuncts[1].world == Cell{2});
  CHECK(nf.disjuncts[1].frame.mask == 0b010);
}

TEST_CASE("a Con contradiction has the empty normal form") {
  NormalForm nf = to_normal_form(parse("T(x1) & F(x1)"), System::S5Con);
  CHECK(nf.disjuncts.empty());
}

TEST_CASE("the Con axiom has the full normal form over ten pairs") {
  NormalForm nf = to_normal_form(parse("~(T(x1) & F(x1))"),
                                 System::S5ConGround);
  CHECK(nf.disjuncts.size() == 10);
}

TEST_CASE("normal forms are sorted by frame then world") {
  NormalForm nf = to_normal_form(parse("~(T(x1) & F(x1))"),
                                 System::S5ConGround);
  for (std::size_t i = 1; i < nf.disjuncts.size(); ++i) {
    const auto& a = nf.disjuncts[i - 1];
    const auto& b = nf.disjuncts[i];
    bool ordered = a.frame.mask < b.frame.mask ||
                   (a.frame.mask == b.frame.mask &&
                    cell_index(a.world, 3) < cell_index(b.world, 3));
    CHECK(ordered);
  }
}

TEST_CASE("definitional equivalence holds in every system") {
  Formula n1 = parse("N(x1)");
  Formula spelled = parse("~T(x1) & ~F(x1)");
  for (System sys : {System::S5, System::S5Con, System::S5ConGround,
                     System::S5ConGroundMin})
    CHECK(equivalent(n1, spelled, sys));
}

TEST_CASE("the Ground axiom collapses a diamond conjunct in S5[Con,Ground]") {
  Formula lhs = parse("<>T(x1) & <>F(x1)");
  Formula rhs = parse("<>T(x1) & <>F(x1) & <>N(x1)");
  CHECK(equivalent(lhs, rhs, System::S5ConGround));
  CHECK_FALSE(equivalent(lhs, rhs, System::S5Con));
}

TEST_CASE("equivalence unifies distinct variable sets") {
  CHECK_FALSE(equivalent(parse("T(x1)"), parse("T(x2)"), System::S5Con));
  CHECK(equivalent(parse("T(x1) & T(x2)"), parse("T(x2) & T(x1)"),
                   System::S5ConGroundMin));
}

TEST_CASE("class census never exceeds the counting bounds") {
  std::mt19937 rng(20260810);
  std::set<std::set<std::pair<uint32_t, uint32_t>>> con_classes, ground_classes;
  for (int i = 0; i < 1500; ++i) {
    Formula f = testgen::random_depth1(rng, 3, 1);
    con_classes.insert(fingerprint(to_normal_form(f, System::S5Con)));
    ground_classes.insert(fingerprint(to_normal_form(f, System::S5ConGround)));
  }
  CHECK(con_classes.size() <= 4096);
  CHECK(ground_classes.size() <= 1024);
  CHECK(con_classes.size() > 10);  // the sample is not degenerate
}

TEST_CASE("rebuilding a normal form as a formula is idempotent") {
  std::mt19937 rng(42);
  for (int i = 0; i < 60; ++i) {
    Formula f = testgen::random_formula(rng, 4, 2);
    for (System sys : {System::S5Con, System::S5ConGround,
                       System::S5ConGroundMin}) {
      NormalForm nf = to_normal_form(f, sys);
      NormalForm back = to_normal_form(formula_of(nf), sys);
      // formula_of uses canonical variables x1..xn, so compare fingerprints.
      CHECK(fingerprint(back) == fingerprint(nf));
    }
  }
  // And on the 4-valued side.
  for (int i = 0; i < 20; ++i) {
    Formula f = testgen::random_formula(rng, 3, 1);
    NormalForm nf = to_normal_form(f, System::S5);
    CHECK(fingerprint(to_normal_form(formula_of(nf), System::S5)) ==
          fingerprint(nf));
  }
}

TEST_CASE("every axiom instance normalizes to the full disjunction") {
  for (System sys : {System::S5, System::S5Con, System::S5ConGround,
                     System::S5ConGroundMin}) {
    for (int arity = 1; arity <= 2; ++arity) {
      NormalForm everything =
          to_normal_form(parse("~(T(x1) & ~T(x1))"), sys);
      if (arity == 2)
        everything = to_normal_form(
            parse("~(T(x1) & ~T(x1)) & ~(T(x2) & ~T(x2))"), sys);
      for (const Formula& ax : axiom_instances(sys, arity)) {
        NormalForm nf = to_normal_form(ax, sys);
        if (static_cast<int>(variables(ax).size()) != arity) continue;
        CHECK(nf.disjuncts.size() == everything.disjuncts.size());
      }
    }
  }
}

TEST_CASE("isolator formulas evaluate true exactly at their own pair") {
  NormalForm nf = to_normal_form(parse("[]T(x1) | []F(x1)"),
                                 System::S5ConGroundMin);
  std::vector<Variable> vars{Variable{1}};
  for (const auto& p : nf.disjuncts) {
    Formula iso = isolator_formula(p, vars);
    NormalForm single = to_normal_form(iso, System::S5ConGroundMin);
    REQUIRE(single.disjuncts.size() == 1);
    CHECK(single.disjuncts[0] == p);
  }
}

TEST_CASE("basic form recognition") {
  CHECK(is_basic_form(parse("[]T(x1)")));
  CHECK(is_basic_form(parse("<>F(x1)")));
  CHECK(is_basic_form(parse("[]~T(x1) & <>~F(x2)")));
  CHECK(is_basic_form(parse("[]T(x1) & <>F(x1) | []~F(x2)")));
  CHECK_FALSE(is_basic_form(parse("T(x1)")));
  CHECK_FALSE(is_basic_form(parse("[](T(x1) & F(x1))")));
  CHECK_FALSE(is_basic_form(parse("[][]T(x1)")));
  CHECK_FALSE(is_basic_form(parse("~[]T(x1)")));  // negation must sit inside
  CHECK_FALSE(is_basic_form(parse("[]N(x1)")));   // N unfolds to a conjunction
}

TEST_CASE("second-order translation goldens") {
  CHECK(to_second_order(parse("[]T(x1)")) ==
        "∀X(Fix(X) → ⌜x1⌝ ∈ X)");
  CHECK(to_second_order(parse("<>F(x1)")) ==
        "∃X(Fix(X) ∧ ⌜Neg(x1)⌝ ∈ X)");
  CHECK(to_second_order(parse("[]~F(x2)")) ==
        "∀X(Fix(X) → ⌜Neg(x2)⌝ ∉ X)");
  CHECK(to_second_order(parse("[]T(x1)"), TranslationStyle::Ascii) ==
        "forall X(Fix(X) -> 'x1' in X)");
  CHECK(to_second_order(parse("<>~T(x1)"), TranslationStyle::Ascii) ==
        "exists X(Fix(X) & 'x1' notin X)");
  CHECK(to_second_order(parse("[]T(x1) & <>F(x1) | []~T(x2)"),
                        TranslationStyle::Ascii) ==
        "(forall X(Fix(X) -> 'x1' in X) & exists X(Fix(X) & 'Neg(x1)' in X))"
        " | forall X(Fix(X) -> 'x2' notin X)");
  CHECK_THROWS_AS(to_second_order(parse("T(x1)")), NotBasicFormError);
  CHECK_THROWS_AS(to_second_order(parse("[]T(x1) & N(x2)")),
                  NotBasicFormError);
}

}  // TEST_SUITE
