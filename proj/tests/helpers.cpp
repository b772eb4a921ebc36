#include "helpers.hpp"

namespace ambtest {

std::vector<CorpusEntry> finitary_corpus() {
  std::vector<CorpusEntry> out;
  auto add = [&](std::string label, TermPtr t, std::size_t fuel = 400,
                 std::size_t width = 4000) {
    out.push_back({std::move(label), std::move(t), fuel, width});
  };
  auto num = [](unsigned n) { return numeral(n); };
  TermPtr f = f_prog();
  TermPtr idfun = mk_lam(mk_var(0, "x"), "x");

  add("nil", mk_nil());
  for (unsigned n = 0; n <= 3; ++n) add("num" + std::to_string(n), num(n));
  add("pair01", mk_pair(num(0), num(1)));
  add("leftnil", mk_left(mk_nil()));
  add("rightpair", mk_right(mk_pair(mk_nil(), mk_nil())));
  add("id", idfun);
  add("pair_id_nil", mk_pair(idfun, mk_nil()));
  add("amb01", mk_amb(num(0), num(1)));
  add("amb0bot", mk_amb(num(0), mk_bottom()));
  add("ambbot1", mk_amb(mk_bottom(), num(1)));
  add("ambbotbot", mk_amb(mk_bottom(), mk_bottom()));
  add("amb00", mk_amb(num(0), num(0)));
  add("amb_nested_r", mk_amb(num(1), mk_amb(num(2), num(3))));
  add("amb_nested_both", mk_amb(mk_amb(num(0), num(1)), mk_amb(num(2), num(3))));
  add("pair_two_choices", mk_pair(mk_amb(num(0), num(1)), mk_amb(num(1), num(0))));
  add("left_choice", mk_left(mk_amb(num(0), num(1))));
  add("amb_nil_omega", mk_amb(mk_nil(), omega()));
  add("amb_omega_nil", mk_amb(omega(), mk_nil()));
  add("beta_choice", mk_app(idfun, mk_amb(num(0), num(1))));
  add("mapamb_f_01", mk_app(mk_app(prelude_term("mapamb"), f), mk_amb(num(0), num(1))));
  add("mapamb_f_11", mk_app(mk_app(prelude_term("mapamb"), f), mk_amb(num(1), num(1))));
  add("amb_f0_f1", mk_amb(mk_app(f, num(0)), mk_app(f, num(1))));
  add("strict_pair", strictapp(mk_lam(mk_pair(mk_var(0), mk_var(0)), "x"), mk_nil()));
  add("seq_defined", seq(mk_nil(), mk_amb(num(0), num(1))));
  add("seq_bottom", seq(mk_bottom(), mk_nil()));
  {
    std::vector<TermPtr> bodies(kClauseCount, mk_bottom());
    bodies[static_cast<int>(Clause::Amb)] = mk_amb(mk_var(0, "b"), mk_var(1, "a"));
    add("amb_swap", mk_case(mk_amb(num(0), num(1)), std::move(bodies)));
  }
  {
    std::vector<TermPtr> bodies(kClauseCount, mk_bottom());
    bodies[static_cast<int>(Clause::Amb)] = mk_var(1, "a");
    add("amb_first", mk_case(mk_amb(num(0), mk_bottom()), std::move(bodies)));
  }
  add("amb_pair_choice_bot",
      mk_amb(mk_pair(num(0), mk_amb(num(0), num(1))), mk_bottom()));
  add("pair_opposite",
      mk_pair(mk_amb(mk_nil(), mk_bottom()), mk_amb(mk_bottom(), mk_nil())));
  add("pair_stuck_right", mk_pair(num(0), mk_app(f, num(1))));
  add("amb_fun_bot", mk_amb(idfun, mk_bottom()));
  add("amb_two_funs", mk_amb(idfun, mk_lam(mk_lam(mk_var(1), "y"), "x")));
  {
    // least k >= 2, via minimisation
    TermPtr ge2 = mk_lam(  // \k. case k of Left -> no; Right(u) -> case u of ...
        mk_case(mk_var(0, "k"),
                [] {
                  std::vector<TermPtr> bodies(kClauseCount, mk_bottom());
                  bodies[static_cast<int>(Clause::Left)] = mk_right(mk_nil());
                  std::vector<TermPtr> inner(kClauseCount, mk_bottom());
                  inner[static_cast<int>(Clause::Left)] = mk_right(mk_nil());
                  inner[static_cast<int>(Clause::Right)] = mk_left(mk_nil());
                  bodies[static_cast<int>(Clause::Right)] =
                      mk_case(mk_var(0, "u"), std::move(inner));
                  return bodies;
                }()),
        "k");
    add("min_ge2", mk_app(prelude_term("min"), ge2));
  }
  for (unsigned i = 0; i < 3; ++i)
    for (unsigned j = 0; j < 3; ++j)
      add("amb_grid_" + std::to_string(i) + std::to_string(j),
          mk_amb(num(i), num(j)));
  for (unsigned i = 0; i < 3; ++i)
    add("amb_bot_" + std::to_string(i), mk_amb(num(i), mk_bottom()));
  for (unsigned i = 0; i < 3; ++i)
    add("pair_num_choice_" + std::to_string(i),
        mk_pair(num(i), mk_amb(num(0), num(1))));
  add("right_of_choice", mk_amb(mk_right(mk_amb(num(0), num(1))), mk_bottom()));
  add("amb_seq_mixed", mk_amb(seq(mk_nil(), num(0)), seq(mk_bottom(), num(1))));
  {
    std::vector<TermPtr> bodies(kClauseCount, mk_bottom());
    bodies[static_cast<int>(Clause::Pair)] = mk_var(1, "a");
    add("fst_of_pair_choice",
        mk_case(mk_pair(mk_amb(num(0), num(1)), mk_nil()), std::move(bodies)));
  }
  add("amb_num_or_pair", mk_amb(num(0), mk_pair(mk_nil(), omega())));
  return out;
}

namespace {

enum class ThirdState { A, OneA, B, MinusB };

void third_gen(ThirdState st, std::vector<int>& cur, std::size_t len,
               std::set<std::vector<int>>& out) {
  if (cur.size() == len) {
    out.insert(cur);
    return;
  }
  auto step = [&](int digit, ThirdState next) {
    cur.push_back(digit);
    third_gen(next, cur, len, out);
    cur.pop_back();
  };
  switch (st) {
    case ThirdState::A:
      step(1, ThirdState::B);
      step(0, ThirdState::OneA);
      break;
    case ThirdState::OneA:
      step(1, ThirdState::A);
      break;
    case ThirdState::B:
      step(-1, ThirdState::A);
      step(0, ThirdState::MinusB);
      break;
    case ThirdState::MinusB:
      step(-1, ThirdState::B);
      break;
  }
}

}  // namespace

std::set<std::vector<int>> one_third_prefixes(bool start_in_A, std::size_t len) {
  std::set<std::vector<int>> out;
  std::vector<int> cur;
  third_gen(start_in_A ? ThirdState::A : ThirdState::B, cur, len, out);
  return out;
}

std::set<std::vector<int>> zero_ab_prefix_closure(std::size_t maxlen) {
  std::set<std::vector<int>> out;
  // A = {0^w}
  for (std::size_t n = 0; n <= maxlen; ++n)
    out.insert(std::vector<int>(n, 0));
  // B = {0^k : -1 : 1^w}
  for (std::size_t k = 0; k <= maxlen; ++k) {
    for (std::size_t n = 0; n <= maxlen; ++n) {
      std::vector<int> p;
      for (std::size_t i = 0; i < n && p.size() < maxlen; ++i) {
        if (i < k) p.push_back(0);
        else if (i == k) p.push_back(-1);
        else p.push_back(1);
      }
      out.insert(p);
    }
  }
  return out;
}

}  // namespace ambtest
