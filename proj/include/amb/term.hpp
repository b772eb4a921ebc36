#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace amb {

// Terms of the object language: a lambda calculus with constructors,
// general recursion, a bottom constant, and the binary Amb constructor.
// Binding is nameless (de Bruijn indices); surface names are kept only
// as printing hints and are ignored by equality and hashing.
enum class TermKind : std::uint8_t {
  Var,
  Lam,
  App,
  Rec,
  Bottom,
  Nil,
  Left,
  Right,
  Pair,
  Amb,
  Case,
};

// Clause slots of a case expression, in storage order.
enum class Clause : int { Nil = 0, Left, Right, Pair, Amb, Fun };

constexpr int kClauseCount = 6;

constexpr int clause_binders(Clause c) {
  switch (c) {
    case Clause::Nil: return 0;
    case Clause::Left: return 1;
    case Clause::Right: return 1;
    case Clause::Pair: return 2;
    case Clause::Amb: return 2;
    case Clause::Fun: return 1;
  }
  return 0;
}

const char* clause_name(Clause c);

struct Term;
using TermPtr = std::shared_ptr<const Term>;

struct Term {
  TermKind kind;
  int var = -1;                    // Var: de Bruijn index
  std::vector<TermPtr> kids;       // children; Case: [scrutinee, body0..body5]
  std::vector<std::string> hints;  // binder name hints, printing only
  std::size_t hash = 0;
};

// Constructors. Case bodies must always be complete: a surface case with
// omitted clauses stores `bottom` for the missing bodies. Case binder
// hints, when present, use the fixed layout
//   [left_a, right_b, pair_a, pair_b, amb_a, amb_b, fun_f].
TermPtr mk_var(int index, std::string hint = {});
TermPtr mk_lam(TermPtr body, std::string hint = {});
TermPtr mk_app(TermPtr fn, TermPtr arg);
TermPtr mk_rec(TermPtr body);
TermPtr mk_bottom();
TermPtr mk_nil();
TermPtr mk_left(TermPtr t);
TermPtr mk_right(TermPtr t);
TermPtr mk_pair(TermPtr a, TermPtr b);
TermPtr mk_amb(TermPtr a, TermPtr b);
TermPtr mk_case(TermPtr scrutinee, std::vector<TermPtr> bodies,
                std::vector<std::string> hints = {});

inline const TermPtr& case_body(const TermPtr& t, Clause c) {
  return t->kids[1 + static_cast<int>(c)];
}

// Structural equality / ordering on the nameless form (hints ignored).
bool term_eq(const TermPtr& a, const TermPtr& b);
int term_cmp(const TermPtr& a, const TermPtr& b);

// Largest free index plus one; 0 for closed terms.
int free_var_bound(const TermPtr& t);
inline bool is_closed(const TermPtr& t) { return free_var_bound(t) == 0; }

// Adds d to every free index >= cutoff.
TermPtr shift(const TermPtr& t, int d, int cutoff = 0);

// Replaces index j by s (itself shifted into place) and closes the gap:
// free indices above j drop by one.
TermPtr subst_at(const TermPtr& t, int j, const TermPtr& s);

// Substitution for the outermost binder slot, as used by beta reduction.
inline TermPtr subst(const TermPtr& body, const TermPtr& arg) {
  return subst_at(body, 0, arg);
}

// A closed term is a weak head normal form iff its head is a constructor
// (including Amb) or a lambda abstraction.
bool is_whnf(const TermPtr& t);

bool is_data_constructor(TermKind k);  // Nil, Left, Right, Pair; not Amb
bool is_constructor(TermKind k);       // data constructors plus Amb

}  // namespace amb
