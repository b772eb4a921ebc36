#include "amb/term.hpp"

#include <algorithm>
#include <stdexcept>

namespace amb {

namespace {

std::size_t hash_combine(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ull + (seed << 6) + (seed >> 2));
}

std::size_t compute_hash(TermKind kind, int var, const std::vector<TermPtr>& kids) {
  std::size_t h = hash_combine(0x51ed1e5u, static_cast<std::size_t>(kind));
  h = hash_combine(h, static_cast<std::size_t>(var + 1));
  for (const auto& k : kids) h = hash_combine(h, k->hash);
  return h;
}

TermPtr make(TermKind kind, int var, std::vector<TermPtr> kids,
             std::vector<std::string> hints = {}) {
  auto t = std::make_shared<Term>();
  t->kind = kind;
  t->var = var;
  t->kids = std::move(kids);
  t->hints = std::move(hints);
  t->hash = compute_hash(kind, var, t->kids);
  return t;
}

}  // namespace

const char* clause_name(Clause c) {
  switch (c) {
    case Clause::Nil: return "Nil";
    case Clause::Left: return "Left";
    case Clause::Right: return "Right";
    case Clause::Pair: return "Pair";
    case Clause::Amb: return "Amb";
    case Clause::Fun: return "fun";
  }
  return "?";
}

TermPtr mk_var(int index, std::string hint) {
  if (index < 0) throw std::invalid_argument("mk_var: negative index");
  std::vector<std::string> hints;
  if (!hint.empty()) hints.push_back(std::move(hint));
  return make(TermKind::Var, index, {}, std::move(hints));
}

TermPtr mk_lam(TermPtr body, std::string hint) {
  std::vector<std::string> hints;
  if (!hint.empty()) hints.push_back(std::move(hint));
  return make(TermKind::Lam, -1, {std::move(body)}, std::move(hints));
}

TermPtr mk_app(TermPtr fn, TermPtr arg) {
  return make(TermKind::App, -1, {std::move(fn), std::move(arg)});
}

TermPtr mk_rec(TermPtr body) { return make(TermKind::Rec, -1, {std::move(body)}); }

TermPtr mk_bottom() {
  static const TermPtr t = make(TermKind::Bottom, -1, {});
  return t;
}

TermPtr mk_nil() {
  static const TermPtr t = make(TermKind::Nil, -1, {});
  return t;
}

TermPtr mk_left(TermPtr t) { return make(TermKind::Left, -1, {std::move(t)}); }

TermPtr mk_right(TermPtr t) { return make(TermKind::Right, -1, {std::move(t)}); }

TermPtr mk_pair(TermPtr a, TermPtr b) {
  return make(TermKind::Pair, -1, {std::move(a), std::move(b)});
}

TermPtr mk_amb(TermPtr a, TermPtr b) {
  return make(TermKind::Amb, -1, {std::move(a), std::move(b)});
}

TermPtr mk_case(TermPtr scrutinee, std::vector<TermPtr> bodies,
                std::vector<std::string> hints) {
  if (bodies.size() != kClauseCount)
    throw std::invalid_argument("mk_case: expects exactly six clause bodies");
  std::vector<TermPtr> kids;
  kids.reserve(1 + kClauseCount);
  kids.push_back(std::move(scrutinee));
  for (auto& b : bodies) kids.push_back(std::move(b));
  return make(TermKind::Case, -1, std::move(kids), std::move(hints));
}

bool term_eq(const TermPtr& a, const TermPtr& b) {
  if (a.get() == b.get()) return true;
  if (a->hash != b->hash || a->kind != b->kind || a->var != b->var) return false;
  if (a->kids.size() != b->kids.size()) return false;
  for (std::size_t i = 0; i < a->kids.size(); ++i)
    if (!term_eq(a->kids[i], b->kids[i])) return false;
  return true;
}

int term_cmp(const TermPtr& a, const TermPtr& b) {
  if (a.get() == b.get()) return 0;
  if (a->kind != b->kind) return a->kind < b->kind ? -1 : 1;
  if (a->var != b->var) return a->var < b->var ? -1 : 1;
  if (a->kids.size() != b->kids.size())
    return a->kids.size() < b->kids.size() ? -1 : 1;
  for (std::size_t i = 0; i < a->kids.size(); ++i)
    if (int c = term_cmp(a->kids[i], b->kids[i]); c != 0) return c;
  return 0;
}

namespace {

int free_bound_rec(const TermPtr& t, int depth) {
  switch (t->kind) {
    case TermKind::Var:
      return t->var >= depth ? t->var - depth + 1 : 0;
    case TermKind::Lam:
      return free_bound_rec(t->kids[0], depth + 1);
    case TermKind::Case: {
      int m = free_bound_rec(t->kids[0], depth);
      for (int c = 0; c < kClauseCount; ++c) {
        int nb = clause_binders(static_cast<Clause>(c));
        m = std::max(m, free_bound_rec(t->kids[1 + c], depth + nb));
      }
      return m;
    }
    default: {
      int m = 0;
      for (const auto& k : t->kids) m = std::max(m, free_bound_rec(k, depth));
      return m;
    }
  }
}

}  // namespace

int free_var_bound(const TermPtr& t) { return free_bound_rec(t, 0); }

namespace {

// Rebuilds only along changed paths so unchanged subtrees stay shared.
template <typename F>
TermPtr map_with_binders(const TermPtr& t, int depth, const F& on_var) {
  switch (t->kind) {
    case TermKind::Var:
      return on_var(t, depth);
    case TermKind::Lam: {
      TermPtr b = map_with_binders(t->kids[0], depth + 1, on_var);
      if (b.get() == t->kids[0].get()) return t;
      return mk_lam(std::move(b), t->hints.empty() ? std::string{} : t->hints[0]);
    }
    case TermKind::Case: {
      bool changed = false;
      TermPtr scrut = map_with_binders(t->kids[0], depth, on_var);
      changed |= scrut.get() != t->kids[0].get();
      std::vector<TermPtr> bodies;
      bodies.reserve(kClauseCount);
      for (int c = 0; c < kClauseCount; ++c) {
        int nb = clause_binders(static_cast<Clause>(c));
        TermPtr b = map_with_binders(t->kids[1 + c], depth + nb, on_var);
        changed |= b.get() != t->kids[1 + c].get();
        bodies.push_back(std::move(b));
      }
      if (!changed) return t;
      return mk_case(std::move(scrut), std::move(bodies), t->hints);
    }
    case TermKind::Bottom:
    case TermKind::Nil:
      return t;
    default: {
      bool changed = false;
      std::vector<TermPtr> kids;
      kids.reserve(t->kids.size());
      for (const auto& k : t->kids) {
        TermPtr k2 = map_with_binders(k, depth, on_var);
        changed |= k2.get() != k.get();
        kids.push_back(std::move(k2));
      }
      if (!changed) return t;
      switch (t->kind) {
        case TermKind::App: return mk_app(kids[0], kids[1]);
        case TermKind::Rec: return mk_rec(kids[0]);
        case TermKind::Left: return mk_left(kids[0]);
        case TermKind::Right: return mk_right(kids[0]);
        case TermKind::Pair: return mk_pair(kids[0], kids[1]);
        case TermKind::Amb: return mk_amb(kids[0], kids[1]);
        default: throw std::logic_error("map_with_binders: unexpected kind");
      }
    }
  }
}

}  // namespace

TermPtr shift(const TermPtr& t, int d, int cutoff) {
  if (d == 0) return t;
  return map_with_binders(t, cutoff, [d](const TermPtr& v, int depth) -> TermPtr {
    if (v->var < depth) return v;
    return mk_var(v->var + d, v->hints.empty() ? std::string{} : v->hints[0]);
  });
}

TermPtr subst_at(const TermPtr& t, int j, const TermPtr& s) {
  return map_with_binders(t, 0, [j, &s](const TermPtr& v, int depth) -> TermPtr {
    if (v->var == j + depth) return shift(s, depth);
    if (v->var > j + depth)
      return mk_var(v->var - 1, v->hints.empty() ? std::string{} : v->hints[0]);
    return v;
  });
}

bool is_whnf(const TermPtr& t) {
  switch (t->kind) {
    case TermKind::Lam:
    case TermKind::Nil:
    case TermKind::Left:
    case TermKind::Right:
    case TermKind::Pair:
    case TermKind::Amb:
      return true;
    default:
      return false;
  }
}

bool is_data_constructor(TermKind k) {
  return k == TermKind::Nil || k == TermKind::Left || k == TermKind::Right ||
         k == TermKind::Pair;
}

bool is_constructor(TermKind k) {
  return is_data_constructor(k) || k == TermKind::Amb;
}

}  // namespace amb
