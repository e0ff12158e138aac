#include <doctest.h>

#include <random>

#include "fixmodal/axioms.hpp"
#include "fixmodal/formula.hpp"
#include "gen.hpp"

using namespace fixmodal;

namespace {

int atom_occurrences(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::AtomT:
    case Formula::Kind::AtomF:
      return 1;
    case Formula::Kind::Not:
    case Formula::Kind::Box:
      return atom_occurrences(f.child());
    case Formula::Kind::And:
      return atom_occurrences(f.left()) + atom_occurrences(f.right());
  }
  return 0;
}

}  // namespace

TEST_SUITE("formula") {

TEST_CASE("atoms parse to atoms") {
  Formula f = parse("T(x1)");
  CHECK(f.kind() == Formula::Kind::AtomT);
  CHECK(f.var().index == 1);
  CHECK(f == atom_t(Variable{1}));
}

TEST_CASE("N is sugar for ~T & ~F") {
  CHECK(parse("N(x2)") ==
        conj(neg(atom_t(Variable{2})), neg(atom_f(Variable{2}))));
  for (int i = 1; i <= 5; ++i) {
    std::string xi = "x" + std::to_string(i);
    CHECK(parse("N(" + xi + ")") == parse("~T(" + xi + ") & ~F(" + xi + ")"));
  }
}

TEST_CASE("the Ground axiom text parses to its builder AST") {
  CHECK(parse("<>T(x1) & <>F(x1) -> <>N(x1)") == ground_axiom(Variable{1}));
}

TEST_CASE("unclosed atom reports the position of the missing paren") {
  try {
    parse("T(x1");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 4);
    CHECK(std::string(e.what()).find("')'") != std::string::npos);
  }
}

TEST_CASE("parse error conditions") {
  CHECK_THROWS_AS(parse(""), ParseError);
  CHECK_THROWS_AS(parse("   "), ParseError);
  CHECK_THROWS_AS(parse("T(y1)"), ParseError);
  CHECK_THROWS_AS(parse("T(x0)"), ParseError);
  CHECK_THROWS_AS(parse("T(x01)"), ParseError);
  CHECK_THROWS_AS(parse("T(x)"), ParseError);
  CHECK_THROWS_AS(parse("(T(x1) & F(x1)"), ParseError);
  CHECK_THROWS_AS(parse("T(x1) &"), ParseError);
  CHECK_THROWS_AS(parse("T(x1) T(x2)"), ParseError);
  CHECK_THROWS_AS(parse("Q(x1)"), ParseError);
}

TEST_CASE("render goldens") {
  CHECK(render(atom_t(Variable{1})) == "T(x1)");
  CHECK(render(box(atom_t(Variable{1}))) == "[](T(x1))");
  CHECK(render(conj(atom_t(Variable{1}), neg(atom_f(Variable{2})))) ==
        "(T(x1) & ~F(x2))");
}

TEST_CASE("precedence and associativity") {
  // -> binds right.
  CHECK(parse("T(x1) -> T(x2) -> T(x3)") ==
        parse("T(x1) -> (T(x2) -> T(x3))"));
  // ~ and modalities bind tighter than &, which binds tighter than |.
  CHECK(parse("~T(x1) & F(x2) | T(x3)") ==
        parse("((~T(x1)) & F(x2)) | T(x3)"));
  CHECK(parse("[]T(x1) & <>F(x1)") == conj(box(atom_t(Variable{1})),
                                           diamond(atom_f(Variable{1}))));
  // <-> binds loosest.
  CHECK(parse("T(x1) -> T(x2) <-> T(x3)") ==
        iff(impl(atom_t(Variable{1}), atom_t(Variable{2})),
            atom_t(Variable{3})));
}

TEST_CASE("round trip: parse after render is the identity") {
  std::mt19937 rng(20260810);
  for (int i = 0; i < 500; ++i) {
    Formula f = testgen::random_formula(rng, 5, 3);
    CHECK(parse(render(f)) == f);
  }
}

TEST_CASE("variables are distinct, sorted, and bounded by atom occurrences") {
  auto vars = variables(parse("T(x1)&F(x1)"));
  REQUIRE(vars.size() == 1);
  CHECK(vars[0].index == 1);

  vars = variables(min_axiom({Variable{1}, Variable{2}}));
  REQUIRE(vars.size() == 2);
  CHECK(vars[0].index == 1);
  CHECK(vars[1].index == 2);

  vars = variables(parse("T(x3)&T(x1)"));
  REQUIRE(vars.size() == 2);
  CHECK(vars[0].index == 1);
  CHECK(vars[1].index == 3);

  std::mt19937 rng(7);
  for (int i = 0; i < 200; ++i) {
    Formula f = testgen::random_formula(rng, 4, 4);
    CHECK(variables(f).size() <= static_cast<std::size_t>(atom_occurrences(f)));
  }
}

TEST_CASE("syntactic classification") {
  CHECK(syntactic_class(parse("T(x1)")) == SyntacticClass::Extensional);
  CHECK(syntactic_class(parse("[]T(x1) & <>F(x1)")) ==
        SyntacticClass::Intensional);
  CHECK(syntactic_class(parse("T(x1) & []F(x1)")) == SyntacticClass::Neither);
  CHECK(syntactic_class(parse("~(T(x1) | F(x2))")) ==
        SyntacticClass::Extensional);
  CHECK(syntactic_class(parse("~[](T(x1) -> F(x1))")) ==
        SyntacticClass::Intensional);
}

TEST_CASE("variable index must be positive") {
  CHECK_THROWS_AS(atom_t(Variable{0}), std::invalid_argument);
  CHECK_THROWS_AS(atom_f(Variable{-3}), std::invalid_argument);
}

}  // TEST_SUITE
