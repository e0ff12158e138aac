#include <doctest.h>

#include <random>

#include "fixmodal/axioms.hpp"
#include "fixmodal/decide.hpp"
#include "fixmodal/normalform.hpp"
#include "fixmodal/semantics.hpp"
#include "gen.hpp"

using namespace fixmodal;

TEST_SUITE("decide") {

TEST_CASE("satisfiability examples") {
  Verdict v = satisfiable(parse("T(x1) & <>N(x1)"), System::S5ConGroundMin);
  CHECK(v.valid);
  REQUIRE(v.witness);
  CHECK(v.witness->world == Cell{1});
  CHECK(v.witness->frame.mask == 0b101);  // {T, N}

  CHECK_FALSE(satisfiable(parse("T(x1) & F(x1)"), System::S5Con).valid);

  Formula sharp = parse("<>T(x1) & <>F(x1) & ~<>N(x1)");
  CHECK(satisfiable(sharp, System::S5Con).valid);
  CHECK_FALSE(satisfiable(sharp, System::S5ConGround).valid);
}

TEST_CASE("satisfying witnesses actually satisfy") {
  std::mt19937 rng(4242);
  for (int i = 0; i < 120; ++i) {
    Formula f = testgen::random_formula(rng, 4, 2);
    for (System sys : {System::S5, System::S5Con, System::S5ConGroundMin}) {
      Verdict v = satisfiable(f, sys);
      if (v.valid) CHECK(eval_at(f, *v.witness));
    }
  }
}

TEST_CASE("axioms are provable in their own systems") {
  CHECK(valid(con_axiom(Variable{1}), System::S5Con).valid);
  CHECK(valid(ground_axiom(Variable{1}), System::S5ConGround).valid);
  CHECK(valid(min_axiom({Variable{1}, Variable{2}}),
              System::S5ConGroundMin).valid);
  CHECK(valid(parse("[]T(x1) -> T(x1)"), System::S5).valid);
}

TEST_CASE("Ground is not provable from Con alone") {
  Verdict v = valid(ground_axiom(Variable{1}), System::S5Con);
  CHECK_FALSE(v.valid);
  REQUIRE(v.witness);
  CHECK(v.witness->frame.mask == 0b011);  // {T, F} with no N possibility
  CHECK_FALSE(eval_at(ground_axiom(Variable{1}), *v.witness));
}

TEST_CASE("Min2 is not provable without the Min axioms") {
  Formula min2 = min_axiom({Variable{1}, Variable{2}});
  Verdict v = valid(min2, System::S5ConGround);
  CHECK_FALSE(v.valid);
  REQUIRE(v.witness);
  // The countermodel frame passes the Ground conditions and fails only the
  // corner condition.
  PrimeVerdict pv = prime_check(v.witness->frame);
  CHECK_FALSE(pv.ok);
  CHECK(*pv.violation == PrimeVerdict::Violation::MinCorner);
  CHECK(v.witness->frame.mask ==
        tensor_from_cells({Cell{1, 3}, Cell{3, 1}}).mask);
  CHECK_FALSE(eval_at(min2, *v.witness));

  CHECK(valid(min2, System::S5ConGroundMin).valid);
}

TEST_CASE("repeating a variable in Min3 yields a Min2 instance") {
  Formula repeated = parse(
      "(<>N(x1) & <>N(x1) & <>N(x2)) -> <>(N(x1) & N(x1) & N(x2))");
  CHECK(valid(repeated, System::S5ConGroundMin).valid);
  CHECK_FALSE(valid(repeated, System::S5ConGround).valid);
  Formula to_min2 = impl(repeated, min_axiom({Variable{1}, Variable{2}}));
  CHECK(valid(to_min2, System::S5ConGroundMin).valid);
  CHECK(valid(to_min2, System::S5ConGround).valid);  // implication is trivial
}

TEST_CASE("fix_valid examples") {
  CHECK(fix_valid(con_axiom(Variable{1})).valid);
  CHECK(fix_valid(min_axiom({Variable{1}, Variable{2}})).valid);

  Verdict v = fix_valid(parse("[]N(x1)"));
  CHECK_FALSE(v.valid);
  REQUIRE(v.witness);
  CHECK(v.witness->frame.mask == 0b001);
  CHECK(v.witness->world == Cell{1});
}

TEST_CASE("validity duals satisfiability of the negation") {
  std::mt19937 rng(31337);
  for (int i = 0; i < 120; ++i) {
    Formula f = testgen::random_formula(rng, 4, 2);
    for (System sys : {System::S5, System::S5Con, System::S5ConGround,
                       System::S5ConGroundMin}) {
      Verdict va = valid(f, sys);
      Verdict sa = satisfiable(neg(f), sys);
      CHECK(va.valid == !sa.valid);
      if (!va.valid) CHECK_FALSE(eval_at(f, *va.witness));
    }
  }
}

TEST_CASE("provability is monotone up the system chain") {
  std::mt19937 rng(5150);
  const System chain[] = {System::S5, System::S5Con, System::S5ConGround,
                          System::S5ConGroundMin};
  for (int i = 0; i < 80; ++i) {
    Formula f = testgen::random_formula(rng, 4, 2);
    for (int a = 0; a < 4; ++a)
      for (int b = a + 1; b < 4; ++b)
        if (valid(f, chain[a]).valid) CHECK(valid(f, chain[b]).valid);
  }
}

TEST_CASE("a formula is provable iff its normal form is full") {
  std::mt19937 rng(2718);
  for (int i = 0; i < 60; ++i) {
    Formula f = testgen::random_formula(rng, 4, 2);
    for (System sys : {System::S5Con, System::S5ConGroundMin}) {
      std::size_t all = 0;
      int arity = static_cast<int>(variables(f).size());
      for (const Tensor& t : enumerate_admissible(sys, arity))
        all += static_cast<std::size_t>(t.size());
      NormalForm nf = to_normal_form(f, sys);
      CHECK(valid(f, sys).valid == (nf.disjuncts.size() == all));
    }
  }
}

TEST_CASE("serial and parallel sweeps return identical verdicts") {
  std::mt19937 rng(11);
  for (int i = 0; i < 40; ++i) {
    Formula f = testgen::random_formula(rng, 4, 2);
    for (System sys : {System::S5Con, System::S5ConGroundMin}) {
      Verdict s = valid(f, sys, {}, ExecMode::Serial);
      Verdict p = valid(f, sys, {}, ExecMode::Parallel);
      CHECK(s.valid == p.valid);
      CHECK(s.witness == p.witness);
      Verdict ss = satisfiable(f, sys, {}, ExecMode::Serial);
      Verdict sp = satisfiable(f, sys, {}, ExecMode::Parallel);
      CHECK(ss.valid == sp.valid);
      CHECK(ss.witness == sp.witness);
    }
  }
}

TEST_CASE("arity comes from the distinct variables, not their indices") {
  CHECK(valid(parse("T(x7) -> T(x7)"), System::S5Con).valid);
  Verdict v = fix_valid(parse("[]N(x7)"));
  CHECK_FALSE(v.valid);
  CHECK(v.witness->frame.arity == 1);
  // A repeated variable keeps a two-variable axiom at arity one.
  CHECK(fix_valid(parse("(<>N(x5) & <>N(x5)) -> <>(N(x5) & N(x5))")).valid);
}

TEST_CASE("arity caps require the explicit flag") {
  Formula min3 = min_axiom({Variable{1}, Variable{2}, Variable{3}});
  CHECK_THROWS_AS(valid(min3, System::S5ConGroundMin), std::invalid_argument);
  CHECK_THROWS_AS(valid(min3, System::S5, Limits{true}),
                  std::invalid_argument);
}

}  // TEST_SUITE
