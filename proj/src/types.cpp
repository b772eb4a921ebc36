#include "amb/types.hpp"

#include <set>

#include "amb/printer.hpp"
#include "amb/reduce.hpp"

namespace amb {

namespace {

std::size_t hash_combine(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ull + (seed << 6) + (seed >> 2));
}

TyPtr make(TyKind kind, int var, std::vector<TyPtr> kids, std::string hint = {}) {
  auto t = std::make_shared<Ty>();
  t->kind = kind;
  t->var = var;
  t->kids = std::move(kids);
  t->hint = std::move(hint);
  std::size_t h = hash_combine(0x7e57abu, static_cast<std::size_t>(kind));
  h = hash_combine(h, static_cast<std::size_t>(var + 1));
  for (const auto& k : t->kids) h = hash_combine(h, k->hash);
  t->hash = h;
  return t;
}

}  // namespace

TyPtr ty_var(int index, std::string hint) {
  return make(TyKind::Var, index, {}, std::move(hint));
}

TyPtr ty_unit() {
  static const TyPtr t = make(TyKind::Unit, -1, {});
  return t;
}

TyPtr ty_prod(TyPtr a, TyPtr b) {
  return make(TyKind::Prod, -1, {std::move(a), std::move(b)});
}

TyPtr ty_sum(TyPtr a, TyPtr b) {
  return make(TyKind::Sum, -1, {std::move(a), std::move(b)});
}

TyPtr ty_arrow(TyPtr dom, TyPtr cod) {
  return make(TyKind::Arrow, -1, {std::move(dom), std::move(cod)});
}

TyPtr ty_fix(TyPtr body, std::string hint) {
  return make(TyKind::Fix, -1, {std::move(body)}, std::move(hint));
}

TyPtr ty_amb(TyPtr inner) { return make(TyKind::Amb, -1, {std::move(inner)}); }

bool ty_syntactic_eq(const TyPtr& a, const TyPtr& b) {
  if (a.get() == b.get()) return true;
  if (a->hash != b->hash || a->kind != b->kind || a->var != b->var) return false;
  if (a->kids.size() != b->kids.size()) return false;
  for (std::size_t i = 0; i < a->kids.size(); ++i)
    if (!ty_syntactic_eq(a->kids[i], b->kids[i])) return false;
  return true;
}

int ty_cmp(const TyPtr& a, const TyPtr& b) {
  if (a.get() == b.get()) return 0;
  if (a->kind != b->kind) return a->kind < b->kind ? -1 : 1;
  if (a->var != b->var) return a->var < b->var ? -1 : 1;
  if (a->kids.size() != b->kids.size())
    return a->kids.size() < b->kids.size() ? -1 : 1;
  for (std::size_t i = 0; i < a->kids.size(); ++i)
    if (int c = ty_cmp(a->kids[i], b->kids[i]); c != 0) return c;
  return 0;
}

namespace {

template <typename F>
TyPtr ty_map(const TyPtr& t, int depth, const F& on_var) {
  switch (t->kind) {
    case TyKind::Var:
      return on_var(t, depth);
    case TyKind::Unit:
      return t;
    case TyKind::Fix: {
      TyPtr b = ty_map(t->kids[0], depth + 1, on_var);
      if (b.get() == t->kids[0].get()) return t;
      return ty_fix(std::move(b), t->hint);
    }
    default: {
      bool changed = false;
      std::vector<TyPtr> kids;
      kids.reserve(t->kids.size());
      for (const auto& k : t->kids) {
        TyPtr k2 = ty_map(k, depth, on_var);
        changed |= k2.get() != k.get();
        kids.push_back(std::move(k2));
      }
      if (!changed) return t;
      switch (t->kind) {
        case TyKind::Prod: return ty_prod(kids[0], kids[1]);
        case TyKind::Sum: return ty_sum(kids[0], kids[1]);
        case TyKind::Arrow: return ty_arrow(kids[0], kids[1]);
        case TyKind::Amb: return ty_amb(kids[0]);
        default: throw std::logic_error("ty_map: unexpected kind");
      }
    }
  }
}

}  // namespace

TyPtr ty_shift(const TyPtr& t, int d, int cutoff) {
  if (d == 0) return t;
  return ty_map(t, cutoff, [d](const TyPtr& v, int depth) -> TyPtr {
    if (v->var < depth) return v;
    return ty_var(v->var + d, v->hint);
  });
}

TyPtr ty_subst_at(const TyPtr& t, int j, const TyPtr& s) {
  return ty_map(t, 0, [j, &s](const TyPtr& v, int depth) -> TyPtr {
    if (v->var == j + depth) return ty_shift(s, depth);
    if (v->var > j + depth) return ty_var(v->var - 1, v->hint);
    return v;
  });
}

TyPtr unfold_fix(const TyPtr& t) {
  if (t->kind != TyKind::Fix) throw std::logic_error("unfold_fix: not a fix type");
  return ty_subst_at(t->kids[0], 0, t);
}

TyPtr head_normal(TyPtr t) {
  for (int guard = 0; guard < 10000; ++guard) {
    if (t->kind != TyKind::Fix) return t;
    t = unfold_fix(t);
  }
  throw std::logic_error("head_normal: diverging fix unfolding");
}

namespace {

bool occurs_free(const TyPtr& t, int i) {
  switch (t->kind) {
    case TyKind::Var: return t->var == i;
    case TyKind::Fix: return occurs_free(t->kids[0], i + 1);
    default:
      for (const auto& k : t->kids)
        if (occurs_free(k, i)) return true;
      return false;
  }
}

bool strictly_positive(const TyPtr& t, int i) {
  switch (t->kind) {
    case TyKind::Var:
    case TyKind::Unit:
      return true;
    case TyKind::Arrow:
      return !occurs_free(t->kids[0], i) && strictly_positive(t->kids[1], i);
    case TyKind::Fix:
      return strictly_positive(t->kids[0], i + 1);
    default:
      for (const auto& k : t->kids)
        if (!strictly_positive(k, i)) return false;
      return true;
  }
}

bool is_amb_tower_over(const TyPtr& t, int i) {
  const Ty* p = t.get();
  while (p->kind == TyKind::Amb) p = p->kids[0].get();
  return p->kind == TyKind::Var && p->var == i;
}

}  // namespace

bool is_regular(const TyPtr& t) {
  if (t->kind == TyKind::Fix) {
    const TyPtr& body = t->kids[0];
    if (!occurs_free(body, 0)) return false;
    if (!strictly_positive(body, 0)) return false;
    if (is_amb_tower_over(body, 0)) return false;
  }
  for (const auto& k : t->kids)
    if (!is_regular(k)) return false;
  return true;
}

std::pair<std::size_t, TyPtr> amb_normal_form(const TyPtr& t) {
  auto less = [](const TyPtr& a, const TyPtr& b) { return ty_cmp(a, b) < 0; };
  std::set<TyPtr, decltype(less)> seen(less);
  std::size_t k = 0;
  TyPtr cur = t;
  while (true) {
    if (cur->kind == TyKind::Fix) {
      if (!seen.insert(cur).second)
        throw std::logic_error("amb_normal_form: diverging (type is not regular)");
      cur = unfold_fix(cur);
    } else if (cur->kind == TyKind::Amb) {
      ++k;
      cur = cur->kids[0];
    } else {
      return {k, cur};
    }
  }
}

namespace {

struct TyPairLess {
  bool operator()(const std::pair<TyPtr, TyPtr>& a,
                  const std::pair<TyPtr, TyPtr>& b) const {
    int c = ty_cmp(a.first, b.first);
    if (c != 0) return c < 0;
    return ty_cmp(a.second, b.second) < 0;
  }
};

bool ty_equal_rec(const TyPtr& a, const TyPtr& b,
                  std::set<std::pair<TyPtr, TyPtr>, TyPairLess>& assumed) {
  if (ty_syntactic_eq(a, b)) return true;
  if (assumed.size() > 100000)
    throw std::logic_error("ty_equal: state explosion (irregular input?)");
  if (!assumed.insert({a, b}).second) return true;
  if (a->kind == TyKind::Fix) return ty_equal_rec(unfold_fix(a), b, assumed);
  if (b->kind == TyKind::Fix) return ty_equal_rec(a, unfold_fix(b), assumed);
  if (a->kind != b->kind) return false;
  if (a->kind == TyKind::Var) return a->var == b->var;
  for (std::size_t i = 0; i < a->kids.size(); ++i)
    if (!ty_equal_rec(a->kids[i], b->kids[i], assumed)) return false;
  return true;
}

}  // namespace

bool ty_equal(const TyPtr& a, const TyPtr& b) {
  std::set<std::pair<TyPtr, TyPtr>, TyPairLess> assumed;
  return ty_equal_rec(a, b, assumed);
}

const TyPtr& TyCtx::lookup(int index) const {
  if (index < 0 || static_cast<std::size_t>(index) >= entries.size())
    throw TypeError("unbound variable index " + std::to_string(index));
  return entries[entries.size() - 1 - index].second;
}

TyCtx TyCtx::extended(const std::string& name, TyPtr ty) const {
  TyCtx out = *this;
  out.entries.emplace_back(name, std::move(ty));
  return out;
}

namespace {

std::string binder_hint(const TermPtr& t, std::size_t i) {
  return i < t->hints.size() && !t->hints[i].empty() ? t->hints[i] : "_";
}

// The checker follows value-headed redexes (beta and case selection), so
// terms arising mid-reduction stay checkable; the budget bounds that
// unfolding on adversarial input.
struct Checker {
  std::size_t budget = 4096;

  void spend(const TermPtr& at) {
    if (budget-- == 0)
      throw TypeError("type checking budget exhausted while unfolding redexes",
                      at);
  }

  static bool is_beta(const TermPtr& t) {
    return t->kind == TermKind::App && t->kids[0]->kind == TermKind::Lam;
  }
  static bool is_case_redex(const TermPtr& t) {
    return t->kind == TermKind::Case &&
           (is_constructor(t->kids[0]->kind) ||
            t->kids[0]->kind == TermKind::Lam);
  }

  void check(const TyCtx& ctx, const TermPtr& t, const TyPtr& expected);
  TyPtr synth(const TyCtx& ctx, const TermPtr& t);
};

TyPtr Checker::synth(const TyCtx& ctx, const TermPtr& t) {
  if (is_beta(t)) {
    spend(t);
    return synth(ctx, subst(t->kids[0]->kids[0], t->kids[1]));
  }
  if (is_case_redex(t)) {
    spend(t);
    return synth(ctx, fire_case(t));
  }
  switch (t->kind) {
    case TermKind::Var:
      return ctx.lookup(t->var);
    case TermKind::App: {
      TyPtr fn_ty = head_normal(synth(ctx, t->kids[0]));
      if (fn_ty->kind != TyKind::Arrow)
        throw TypeError("application head has non-function type " + print_ty(fn_ty),
                        t, nullptr, fn_ty);
      check(ctx, t->kids[1], fn_ty->kids[0]);
      return fn_ty->kids[1];
    }
    default:
      throw TypeError(
          "cannot synthesize a type here; an ascription is required", t);
  }
}

void Checker::check(const TyCtx& ctx, const TermPtr& t, const TyPtr& expected) {
  if (is_beta(t)) {
    spend(t);
    return check(ctx, subst(t->kids[0]->kids[0], t->kids[1]), expected);
  }
  if (is_case_redex(t)) {
    spend(t);
    return check(ctx, fire_case(t), expected);
  }
  switch (t->kind) {
    case TermKind::Bottom:
      return;  // bot checks at any type
    case TermKind::Var: {
      const TyPtr& have = ctx.lookup(t->var);
      if (!ty_equal(have, expected))
        throw TypeError("variable has type " + print_ty(have) + ", expected " +
                            print_ty(expected),
                        t, expected, have);
      return;
    }
    case TermKind::Nil: {
      TyPtr hn = head_normal(expected);
      if (hn->kind != TyKind::Unit)
        throw TypeError("Nil where " + print_ty(expected) + " was expected", t,
                        expected);
      return;
    }
    case TermKind::Left: {
      TyPtr hn = head_normal(expected);
      if (hn->kind != TyKind::Sum)
        throw TypeError("Left where " + print_ty(expected) + " was expected", t,
                        expected);
      check(ctx, t->kids[0], hn->kids[0]);
      return;
    }
    case TermKind::Right: {
      TyPtr hn = head_normal(expected);
      if (hn->kind != TyKind::Sum)
        throw TypeError("Right where " + print_ty(expected) + " was expected", t,
                        expected);
      check(ctx, t->kids[0], hn->kids[1]);
      return;
    }
    case TermKind::Pair: {
      TyPtr hn = head_normal(expected);
      if (hn->kind != TyKind::Prod)
        throw TypeError("Pair where " + print_ty(expected) + " was expected", t,
                        expected);
      check(ctx, t->kids[0], hn->kids[0]);
      check(ctx, t->kids[1], hn->kids[1]);
      return;
    }
    case TermKind::Amb: {
      TyPtr hn = head_normal(expected);
      if (hn->kind != TyKind::Amb)
        throw TypeError("Amb where " + print_ty(expected) + " was expected", t,
                        expected);
      check(ctx, t->kids[0], hn->kids[0]);
      check(ctx, t->kids[1], hn->kids[0]);
      return;
    }
    case TermKind::Lam: {
      TyPtr hn = head_normal(expected);
      if (hn->kind != TyKind::Arrow)
        throw TypeError("lambda where " + print_ty(expected) + " was expected",
                        t, expected);
      check(ctx.extended(binder_hint(t, 0), hn->kids[0]), t->kids[0],
                hn->kids[1]);
      return;
    }
    case TermKind::Rec:
      // rec M : rho iff M : rho -> rho; the recursion variable is the
      // applied argument, so the freshness side condition is built in.
      check(ctx, t->kids[0], ty_arrow(expected, expected));
      return;
    case TermKind::App: {
      TyPtr got = synth(ctx, t);
      if (!ty_equal(got, expected))
        throw TypeError("application yields " + print_ty(got) + ", expected " +
                            print_ty(expected),
                        t, expected, got);
      return;
    }
    case TermKind::Case: {
      TyPtr scrut_ty = head_normal(synth(ctx, t->kids[0]));
      // Only the clauses a well-typed scrutinee can reach are checked;
      // the others cannot fire and are ignored.
      switch (scrut_ty->kind) {
        case TyKind::Unit:
          check(ctx, case_body(t, Clause::Nil), expected);
          return;
        case TyKind::Sum:
          check(ctx.extended(binder_hint(t, 0), scrut_ty->kids[0]),
                    case_body(t, Clause::Left), expected);
          check(ctx.extended(binder_hint(t, 1), scrut_ty->kids[1]),
                    case_body(t, Clause::Right), expected);
          return;
        case TyKind::Prod:
          check(ctx.extended(binder_hint(t, 2), scrut_ty->kids[0])
                        .extended(binder_hint(t, 3), scrut_ty->kids[1]),
                    case_body(t, Clause::Pair), expected);
          return;
        case TyKind::Amb:
          check(ctx.extended(binder_hint(t, 4), scrut_ty->kids[0])
                        .extended(binder_hint(t, 5), scrut_ty->kids[0]),
                    case_body(t, Clause::Amb), expected);
          return;
        case TyKind::Arrow:
          check(ctx.extended(binder_hint(t, 6), scrut_ty),
                    case_body(t, Clause::Fun), expected);
          return;
        default:
          throw TypeError("case scrutinee has type " + print_ty(scrut_ty) +
                              " which no clause can match",
                          t, nullptr, scrut_ty);
      }
    }
  }
  throw TypeError("unreachable term kind", t);
}

}  // namespace

void check_type(const TyCtx& ctx, const TermPtr& t, const TyPtr& expected) {
  if (!is_regular(expected))
    throw TypeError("ascribed type " + print_ty(expected) + " is not regular",
                    t, expected);
  Checker checker;
  checker.check(ctx, t, expected);
}

bool type_checks(const TyCtx& ctx, const TermPtr& t, const TyPtr& expected) {
  try {
    check_type(ctx, t, expected);
    return true;
  } catch (const TypeError&) {
    return false;
  }
}

}  // namespace amb
