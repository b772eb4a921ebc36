#include <doctest.h>

#include "helpers.hpp"

using namespace amb;
using namespace ambtest;

TEST_CASE("parsing leaf constructors") {
  CHECK(term_eq(parse_term("Nil"), mk_nil()));
  CHECK(term_eq(parse_term("bot"), mk_bottom()));
  CHECK(term_eq(parse_term("Amb(Nil, bot)"), mk_amb(mk_nil(), mk_bottom())));
}

TEST_CASE("a case with omitted clauses stores bottom bodies") {
  TermPtr t = parse_term("case x of {Left(a) -> a}", {"x"});
  REQUIRE(t->kind == TermKind::Case);
  CHECK(case_body(t, Clause::Left)->kind == TermKind::Var);
  int bottoms = 0;
  for (Clause c : {Clause::Nil, Clause::Right, Clause::Pair, Clause::Amb, Clause::Fun})
    bottoms += case_body(t, c)->kind == TermKind::Bottom;
  CHECK(bottoms == 5);
}

TEST_CASE("printing") {
  CHECK(print_term(mk_nil()) == "Nil");
  CHECK(print_term(mk_amb(mk_nil(), mk_bottom())) == "Amb(Nil, bot)");
  CHECK(print_term(mk_lam(mk_var(0), "x")) == "\\x. x");
}

TEST_CASE("parse then print round-trips on generated terms") {
  Rng rng(20240811);
  for (int i = 0; i < 100; ++i) {
    TermPtr t = gen_closed_term(rng, 14);
    std::string text = print_term(t);
    CAPTURE(text);
    TermPtr back = parse_term(text);
    CHECK(term_eq(t, back));
  }
}

TEST_CASE("printing an applied case keeps it reparseable") {
  // case at the application head and in argument position
  TermPtr scrut = mk_nil();
  std::vector<TermPtr> bodies(kClauseCount, mk_bottom());
  bodies[static_cast<int>(Clause::Nil)] = mk_lam(mk_var(0), "x");
  TermPtr kase = mk_case(scrut, std::move(bodies));
  TermPtr applied = mk_app(kase, mk_nil());
  CHECK(term_eq(parse_term(print_term(applied)), applied));
  TermPtr arg_pos = mk_app(mk_lam(mk_var(0), "f"), kase);
  CHECK(term_eq(parse_term(print_term(arg_pos)), arg_pos));
}

TEST_CASE("parse errors carry positions") {
  CHECK_THROWS_AS(parse_term("Left(Nil"), ParseError);
  CHECK_THROWS_AS(parse_term("case Nil of {Nil -> Nil; Nil -> bot}"), ParseError);
  CHECK_THROWS_AS(parse_term("unbound_name"), ParseError);
  try {
    parse_term("Pair(Nil,\n  ?)");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
    CHECK(e.col > 1);
  }
}

TEST_CASE("substitution on the identity redex") {
  CHECK(term_eq(subst(mk_var(0), mk_nil()), mk_nil()));
}

TEST_CASE("substitution avoids capture under inner binders") {
  // body \y. x with an open argument: the free index must shift past y
  TermPtr body = mk_lam(mk_var(1), "y");
  TermPtr arg = mk_var(0, "free");
  TermPtr out = subst(body, arg);
  CHECK(term_eq(out, mk_lam(mk_var(1))));
}

TEST_CASE("substitution agrees with the naive renaming oracle") {
  Rng rng(7);
  int checked = 0;
  for (int i = 0; i < 400 && checked < 200; ++i) {
    TermPtr body = gen_term(rng, 10, 1);  // one free slot
    TermPtr arg = gen_closed_term(rng, 8);
    TermPtr mine = subst(body, arg);
    TermPtr oracle = oracle_subst(body, arg);
    CAPTURE(print_term(mk_lam(body)));
    CHECK(term_eq(mine, oracle));
    ++checked;
  }
  CHECK(checked == 200);
}

TEST_CASE("weak head normal forms") {
  CHECK(is_whnf(mk_amb(mk_bottom(), mk_bottom())));
  CHECK_FALSE(is_whnf(mk_bottom()));
  CHECK_FALSE(is_whnf(omega()));
  CHECK(is_whnf(mk_lam(mk_var(0))));
  CHECK(is_whnf(mk_nil()));
  CHECK_FALSE(is_whnf(mk_app(mk_lam(mk_var(0)), mk_nil())));
}

TEST_CASE("term equality ignores printing hints") {
  TermPtr a = mk_lam(mk_var(0, "x"), "x");
  TermPtr b = mk_lam(mk_var(0, "y"), "y");
  CHECK(term_eq(a, b));
  CHECK(a->hash == b->hash);
}

TEST_CASE("deeply nested input is rejected, not crashed on") {
  std::string deep(20000, '(');
  deep += "Nil";
  deep += std::string(20000, ')');
  CHECK_THROWS_AS(parse_term(deep), ParseError);
  std::string ok(100, '(');
  ok += "Nil";
  ok += std::string(100, ')');
  CHECK(term_eq(parse_term(ok), mk_nil()));
}
