#pragma once

// Shared test utilities: term and type generators, the naive-substitution
// oracle, the finitary corpus, and digit prefix machinery.

#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "amb/engine.hpp"
#include "amb/gray.hpp"
#include "amb/printer.hpp"
#include "amb/program.hpp"
#include "amb/realizers.hpp"
#include "amb/reduce.hpp"
#include "amb/term.hpp"
#include "amb/types.hpp"
#include "amb/value.hpp"

namespace ambtest {

using namespace amb;

using Rng = std::mt19937_64;

inline int pick(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

// ---------------------------------------------------------------------
// closed term generator (arbitrary, not necessarily well typed)
// ---------------------------------------------------------------------

inline TermPtr gen_term(Rng& rng, int size, int depth) {
  if (size <= 0) {
    switch (pick(rng, 0, depth > 0 ? 3 : 2)) {
      case 0: return mk_nil();
      case 1: return mk_bottom();
      case 2: return mk_lam(mk_var(0), "x");
      default: return mk_var(pick(rng, 0, depth - 1));
    }
  }
  switch (pick(rng, 0, 9)) {
    case 0: return depth > 0 ? mk_var(pick(rng, 0, depth - 1)) : mk_nil();
    case 1: return mk_lam(gen_term(rng, size - 1, depth + 1), "x");
    case 2:
      return mk_app(gen_term(rng, size / 2, depth), gen_term(rng, size / 2, depth));
    case 3: return mk_rec(gen_term(rng, size - 1, depth));
    case 4: return mk_left(gen_term(rng, size - 1, depth));
    case 5: return mk_right(gen_term(rng, size - 1, depth));
    case 6:
      return mk_pair(gen_term(rng, size / 2, depth), gen_term(rng, size / 2, depth));
    case 7:
      return mk_amb(gen_term(rng, size / 2, depth), gen_term(rng, size / 2, depth));
    case 8: {
      std::vector<TermPtr> bodies;
      for (int c = 0; c < kClauseCount; ++c) {
        int nb = clause_binders(static_cast<Clause>(c));
        // most clauses stay at bottom, as surface programs do
        bodies.push_back(pick(rng, 0, 2) == 0
                             ? gen_term(rng, size / 3, depth + nb)
                             : mk_bottom());
      }
      return mk_case(gen_term(rng, size / 2, depth), std::move(bodies));
    }
    default: return pick(rng, 0, 1) ? mk_nil() : mk_bottom();
  }
}

inline TermPtr gen_closed_term(Rng& rng, int size) { return gen_term(rng, size, 0); }

// ---------------------------------------------------------------------
// named-term naive substitution oracle
// ---------------------------------------------------------------------

struct NamedTerm;
using NamedPtr = std::shared_ptr<const NamedTerm>;

struct NamedTerm {
  TermKind kind;
  std::string name;                    // Var: name; Lam: binder
  std::vector<std::string> binders;    // Case: binder names per slot
  std::vector<NamedPtr> kids;
};

inline NamedPtr named(TermKind k, std::string n, std::vector<std::string> bs,
                      std::vector<NamedPtr> kids) {
  auto t = std::make_shared<NamedTerm>();
  t->kind = k;
  t->name = std::move(n);
  t->binders = std::move(bs);
  t->kids = std::move(kids);
  return t;
}

// Nameless -> named, inventing one name per binder from a counter.
inline NamedPtr to_named(const TermPtr& t, std::vector<std::string>& env, int& ctr) {
  auto fresh = [&]() { return "n" + std::to_string(ctr++); };
  switch (t->kind) {
    case TermKind::Var:
      return named(TermKind::Var, env[env.size() - 1 - t->var], {}, {});
    case TermKind::Lam: {
      std::string b = fresh();
      env.push_back(b);
      NamedPtr body = to_named(t->kids[0], env, ctr);
      env.pop_back();
      return named(TermKind::Lam, b, {}, {body});
    }
    case TermKind::Case: {
      std::vector<NamedPtr> kids{to_named(t->kids[0], env, ctr)};
      std::vector<std::string> binders;
      for (int c = 0; c < kClauseCount; ++c) {
        int nb = clause_binders(static_cast<Clause>(c));
        std::vector<std::string> bs;
        for (int i = 0; i < nb; ++i) bs.push_back(fresh());
        for (const auto& b : bs) env.push_back(b);
        kids.push_back(to_named(t->kids[1 + c], env, ctr));
        env.resize(env.size() - bs.size());
        for (const auto& b : bs) binders.push_back(b);
      }
      return named(TermKind::Case, "", std::move(binders), std::move(kids));
    }
    default: {
      std::vector<NamedPtr> kids;
      for (const auto& k : t->kids) kids.push_back(to_named(k, env, ctr));
      return named(t->kind, "", {}, std::move(kids));
    }
  }
}

inline bool named_free_in(const NamedPtr& t, const std::string& x) {
  switch (t->kind) {
    case TermKind::Var: return t->name == x;
    case TermKind::Lam:
      return t->name != x && named_free_in(t->kids[0], x);
    case TermKind::Case: {
      if (named_free_in(t->kids[0], x)) return true;
      int bi = 0;
      for (int c = 0; c < kClauseCount; ++c) {
        int nb = clause_binders(static_cast<Clause>(c));
        bool shadowed = false;
        for (int i = 0; i < nb; ++i)
          if (t->binders[bi + i] == x) shadowed = true;
        if (!shadowed && named_free_in(t->kids[1 + c], x)) return true;
        bi += nb;
      }
      return false;
    }
    default:
      for (const auto& k : t->kids)
        if (named_free_in(k, x)) return true;
      return false;
  }
}

inline NamedPtr named_rename(const NamedPtr& t, const std::string& from,
                             const std::string& to);

// Textbook capture-avoiding substitution with on-demand fresh renaming.
inline NamedPtr naive_subst(const NamedPtr& t, const std::string& x,
                            const NamedPtr& s, int& ctr) {
  switch (t->kind) {
    case TermKind::Var:
      return t->name == x ? s : t;
    case TermKind::Lam: {
      if (t->name == x) return t;
      if (named_free_in(s, t->name)) {
        std::string nb = "r" + std::to_string(ctr++);
        NamedPtr body = named_rename(t->kids[0], t->name, nb);
        return named(TermKind::Lam, nb, {}, {naive_subst(body, x, s, ctr)});
      }
      return named(TermKind::Lam, t->name, {}, {naive_subst(t->kids[0], x, s, ctr)});
    }
    case TermKind::Case: {
      std::vector<NamedPtr> kids{naive_subst(t->kids[0], x, s, ctr)};
      std::vector<std::string> binders = t->binders;
      int bi = 0;
      for (int c = 0; c < kClauseCount; ++c) {
        int nb = clause_binders(static_cast<Clause>(c));
        NamedPtr body = t->kids[1 + c];
        bool shadowed = false;
        for (int i = 0; i < nb; ++i) {
          if (binders[bi + i] == x) shadowed = true;
          if (named_free_in(s, binders[bi + i])) {
            std::string fresh = "r" + std::to_string(ctr++);
            body = named_rename(body, binders[bi + i], fresh);
            binders[bi + i] = fresh;
          }
        }
        kids.push_back(shadowed ? body : naive_subst(body, x, s, ctr));
        bi += nb;
      }
      return named(TermKind::Case, "", std::move(binders), std::move(kids));
    }
    default: {
      std::vector<NamedPtr> kids;
      for (const auto& k : t->kids) kids.push_back(naive_subst(k, x, s, ctr));
      return named(t->kind, "", {}, std::move(kids));
    }
  }
}

inline NamedPtr named_rename(const NamedPtr& t, const std::string& from,
                             const std::string& to) {
  switch (t->kind) {
    case TermKind::Var:
      return t->name == from ? named(TermKind::Var, to, {}, {}) : t;
    case TermKind::Lam: {
      if (t->name == from) return t;
      return named(TermKind::Lam, t->name, {}, {named_rename(t->kids[0], from, to)});
    }
    case TermKind::Case: {
      std::vector<NamedPtr> kids{named_rename(t->kids[0], from, to)};
      int bi = 0;
      for (int c = 0; c < kClauseCount; ++c) {
        int nb = clause_binders(static_cast<Clause>(c));
        bool shadowed = false;
        for (int i = 0; i < nb; ++i)
          if (t->binders[bi + i] == from) shadowed = true;
        kids.push_back(shadowed ? t->kids[1 + c]
                                : named_rename(t->kids[1 + c], from, to));
        bi += nb;
      }
      return named(TermKind::Case, "", t->binders, std::move(kids));
    }
    default: {
      std::vector<NamedPtr> kids;
      for (const auto& k : t->kids) kids.push_back(named_rename(k, from, to));
      return named(t->kind, "", {}, std::move(kids));
    }
  }
}

// Named -> nameless against a scope.
inline TermPtr from_named(const NamedPtr& t, std::vector<std::string>& env) {
  switch (t->kind) {
    case TermKind::Var: {
      for (int i = static_cast<int>(env.size()) - 1; i >= 0; --i)
        if (env[i] == t->name) return mk_var(static_cast<int>(env.size()) - 1 - i);
      throw std::logic_error("from_named: unbound " + t->name);
    }
    case TermKind::Lam: {
      env.push_back(t->name);
      TermPtr body = from_named(t->kids[0], env);
      env.pop_back();
      return mk_lam(std::move(body));
    }
    case TermKind::Case: {
      TermPtr scrut = from_named(t->kids[0], env);
      std::vector<TermPtr> bodies;
      int bi = 0;
      for (int c = 0; c < kClauseCount; ++c) {
        int nb = clause_binders(static_cast<Clause>(c));
        for (int i = 0; i < nb; ++i) env.push_back(t->binders[bi + i]);
        bodies.push_back(from_named(t->kids[1 + c], env));
        env.resize(env.size() - nb);
        bi += nb;
      }
      return mk_case(std::move(scrut), std::move(bodies));
    }
    case TermKind::Bottom: return mk_bottom();
    case TermKind::Nil: return mk_nil();
    default: {
      std::vector<TermPtr> kids;
      for (const auto& k : t->kids) kids.push_back(from_named(k, env));
      switch (t->kind) {
        case TermKind::App: return mk_app(kids[0], kids[1]);
        case TermKind::Rec: return mk_rec(kids[0]);
        case TermKind::Left: return mk_left(kids[0]);
        case TermKind::Right: return mk_right(kids[0]);
        case TermKind::Pair: return mk_pair(kids[0], kids[1]);
        case TermKind::Amb: return mk_amb(kids[0], kids[1]);
        default: throw std::logic_error("from_named: bad kind");
      }
    }
  }
}

// Substitution via the named route: body has exactly one free index (0).
inline TermPtr oracle_subst(const TermPtr& body, const TermPtr& arg) {
  int ctr = 0;
  std::vector<std::string> env{"X"};
  NamedPtr nb = to_named(body, env, ctr);
  env.clear();
  NamedPtr na = to_named(arg, env, ctr);
  NamedPtr out = naive_subst(nb, "X", na, ctr);
  std::vector<std::string> empty;
  return from_named(out, empty);
}

// ---------------------------------------------------------------------
// regular type generator
// ---------------------------------------------------------------------

inline TyPtr gen_ty(Rng& rng, int size, int fixdepth) {
  if (size <= 0) {
    if (fixdepth > 0 && pick(rng, 0, 2) == 0)
      return ty_var(pick(rng, 0, fixdepth - 1));
    return ty_unit();
  }
  switch (pick(rng, 0, 6)) {
    case 0: return ty_unit();
    case 1: return ty_sum(gen_ty(rng, size / 2, fixdepth), gen_ty(rng, size / 2, fixdepth));
    case 2: return ty_prod(gen_ty(rng, size / 2, fixdepth), gen_ty(rng, size / 2, fixdepth));
    case 3:
      // strictly positive by construction: no binder vars in the domain
      return ty_arrow(gen_ty(rng, size / 2, 0), gen_ty(rng, size / 2, fixdepth));
    case 4: return ty_amb(gen_ty(rng, size - 1, fixdepth));
    case 5: {
      // body shapes that keep the binder used and off the A-tower
      TyPtr inner = gen_ty(rng, size / 2, fixdepth + 1);
      TyPtr body = pick(rng, 0, 1) ? ty_sum(inner, ty_var(0))
                                   : ty_prod(inner, ty_var(0));
      if (pick(rng, 0, 2) == 0) body = ty_amb(body);
      return ty_fix(body);
    }
    default:
      return fixdepth > 0 ? ty_var(pick(rng, 0, fixdepth - 1)) : ty_unit();
  }
}

inline TyPtr gen_regular_ty(Rng& rng, int size) {
  for (int attempt = 0; attempt < 100; ++attempt) {
    TyPtr t = gen_ty(rng, size, 0);
    if (is_regular(t)) return t;
  }
  return ty_unit();
}

// ---------------------------------------------------------------------
// well-typed closed term generator
// ---------------------------------------------------------------------

inline TermPtr gen_typed(Rng& rng, std::vector<TyPtr>& ctx, const TyPtr& ty,
                         int depth);

inline TermPtr gen_typed_intro(Rng& rng, std::vector<TyPtr>& ctx, const TyPtr& ty,
                               int depth) {
  TyPtr hn = head_normal(ty);
  switch (hn->kind) {
    case TyKind::Unit: return mk_nil();
    case TyKind::Sum:
      return pick(rng, 0, 1) ? mk_left(gen_typed(rng, ctx, hn->kids[0], depth - 1))
                             : mk_right(gen_typed(rng, ctx, hn->kids[1], depth - 1));
    case TyKind::Prod:
      return mk_pair(gen_typed(rng, ctx, hn->kids[0], depth - 1),
                     gen_typed(rng, ctx, hn->kids[1], depth - 1));
    case TyKind::Amb:
      return mk_amb(gen_typed(rng, ctx, hn->kids[0], depth - 1),
                    gen_typed(rng, ctx, hn->kids[0], depth - 1));
    case TyKind::Arrow: {
      ctx.push_back(hn->kids[0]);
      TermPtr body = gen_typed(rng, ctx, hn->kids[1], depth - 1);
      ctx.pop_back();
      return mk_lam(std::move(body));
    }
    default:
      return mk_bottom();
  }
}

// Generates a closed, checker-accepted term of the given type; resamples
// on the rare generator shapes the checker cannot type.
inline TermPtr gen_well_typed(Rng& rng, const TyPtr& ty, int depth) {
  for (int attempt = 0; attempt < 50; ++attempt) {
    std::vector<TyPtr> ctx;
    TermPtr t = gen_typed(rng, ctx, ty, depth);
    TyCtx empty;
    if (type_checks(empty, t, ty)) return t;
  }
  return mk_bottom();
}

inline TermPtr gen_typed(Rng& rng, std::vector<TyPtr>& ctx, const TyPtr& ty,
                         int depth) {
  if (depth <= 0) {
    // try a variable of the right type, else bottom/intro leaf
    for (std::size_t i = 0; i < ctx.size(); ++i) {
      std::size_t slot = ctx.size() - 1 - i;
      if (ty_equal(ctx[slot], ty)) return mk_var(static_cast<int>(i));
    }
    TyPtr hn = head_normal(ty);
    if (hn->kind == TyKind::Unit) return mk_nil();
    return mk_bottom();
  }
  int roll = pick(rng, 0, 9);
  if (roll == 0) return mk_bottom();
  if (roll == 1) {
    // beta redex: (\x:sigma. body) arg
    TyPtr sigma = gen_regular_ty(rng, 2);
    ctx.push_back(sigma);
    TermPtr body = gen_typed(rng, ctx, ty, depth - 1);
    ctx.pop_back();
    return mk_app(mk_lam(std::move(body)), gen_typed(rng, ctx, sigma, depth - 1));
  }
  if (roll == 2) {
    // case over a generated scrutinee type; the scrutinee itself stays in
    // the synthesizable fragment (intro forms only)
    TyPtr sty = head_normal(gen_regular_ty(rng, 2));
    if (sty->kind == TyKind::Var) sty = ty_unit();
    TermPtr scrut = gen_typed_intro(rng, ctx, sty, depth - 1);
    std::vector<TermPtr> bodies(kClauseCount, mk_bottom());
    switch (sty->kind) {
      case TyKind::Unit:
        bodies[static_cast<int>(Clause::Nil)] = gen_typed(rng, ctx, ty, depth - 1);
        break;
      case TyKind::Sum:
        ctx.push_back(sty->kids[0]);
        bodies[static_cast<int>(Clause::Left)] = gen_typed(rng, ctx, ty, depth - 1);
        ctx.pop_back();
        ctx.push_back(sty->kids[1]);
        bodies[static_cast<int>(Clause::Right)] = gen_typed(rng, ctx, ty, depth - 1);
        ctx.pop_back();
        break;
      case TyKind::Prod:
        ctx.push_back(sty->kids[0]);
        ctx.push_back(sty->kids[1]);
        bodies[static_cast<int>(Clause::Pair)] = gen_typed(rng, ctx, ty, depth - 1);
        ctx.pop_back();
        ctx.pop_back();
        break;
      case TyKind::Amb:
        ctx.push_back(sty->kids[0]);
        ctx.push_back(sty->kids[0]);
        bodies[static_cast<int>(Clause::Amb)] = gen_typed(rng, ctx, ty, depth - 1);
        ctx.pop_back();
        ctx.pop_back();
        break;
      case TyKind::Arrow:
        ctx.push_back(sty);
        bodies[static_cast<int>(Clause::Fun)] = gen_typed(rng, ctx, ty, depth - 1);
        ctx.pop_back();
        break;
      default:
        return gen_typed_intro(rng, ctx, ty, depth);
    }
    return mk_case(std::move(scrut), std::move(bodies));
  }
  if (roll == 3) {
    TermPtr body = gen_typed_intro(rng, ctx, ty_arrow(ty, ty), depth - 1);
    return mk_rec(std::move(body));
  }
  if (roll == 4) {
    for (std::size_t i = 0; i < ctx.size(); ++i) {
      std::size_t slot = ctx.size() - 1 - i;
      if (ty_equal(ctx[slot], ty)) return mk_var(static_cast<int>(i));
    }
  }
  return gen_typed_intro(rng, ctx, ty, depth);
}

// ---------------------------------------------------------------------
// common programs
// ---------------------------------------------------------------------

// \x. case x of { Left(_) -> Left(Nil); Right(_) -> bot }: the standard
// partial function with f 0 = 0 and f 1 undefined.
inline TermPtr f_prog() {
  std::vector<TermPtr> bodies(kClauseCount, mk_bottom());
  bodies[static_cast<int>(Clause::Left)] = mk_left(mk_nil());
  return mk_lam(mk_case(mk_var(0, "x"), std::move(bodies)), "x");
}

inline TermPtr omega() { return mk_rec(mk_lam(mk_var(0, "x"), "x")); }

inline TermPtr prelude_term(const std::string& name) {
  return std_program().closed_term(name);
}

// ---------------------------------------------------------------------
// finitary corpus for the adequacy suite
// ---------------------------------------------------------------------

struct CorpusEntry {
  std::string label;
  TermPtr term;
  std::size_t fuel;   // denotation fuel and explore step bound
  std::size_t width;  // explore frontier bound
};

std::vector<CorpusEntry> finitary_corpus();

// ---------------------------------------------------------------------
// digit prefix machinery for the stream laws
// ---------------------------------------------------------------------

// Prefix sets of the two mutually recursive digit languages for 1/3:
//   A = {1:b | b in B} + {0:1:a | a in A}
//   B = {-1:a | a in A} + {0:-1:b | b in B}
std::set<std::vector<int>> one_third_prefixes(bool start_in_A, std::size_t len);

// Prefixes (all lengths up to maxlen) of {0^w} + {0^k:-1:1^w}.
std::set<std::vector<int>> zero_ab_prefix_closure(std::size_t maxlen);

inline std::vector<int> truncated(std::vector<int> p, std::size_t n) {
  if (p.size() > n) p.resize(n);
  return p;
}

}  // namespace ambtest
