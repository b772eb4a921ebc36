#include "amb/value.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "amb/reduce.hpp"

namespace amb {

namespace {

std::size_t hash_combine(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ull + (seed << 6) + (seed >> 2));
}

ValuePtr make(ValueKind kind, std::vector<ValuePtr> kids, TermPtr fun = nullptr) {
  auto v = std::make_shared<CompactValue>();
  v->kind = kind;
  v->kids = std::move(kids);
  v->fun = std::move(fun);
  std::size_t h = hash_combine(0xda7a5e7u, static_cast<std::size_t>(kind));
  for (const auto& k : v->kids) h = hash_combine(h, k->hash);
  if (v->fun) h = hash_combine(h, v->fun->hash);
  v->hash = h;
  return v;
}

}  // namespace

ValuePtr v_bot() {
  static const ValuePtr v = make(ValueKind::Bot, {});
  return v;
}

ValuePtr v_nil() {
  static const ValuePtr v = make(ValueKind::Nil, {});
  return v;
}

ValuePtr v_left(ValuePtr v) { return make(ValueKind::Left, {std::move(v)}); }

ValuePtr v_right(ValuePtr v) { return make(ValueKind::Right, {std::move(v)}); }

ValuePtr v_pair(ValuePtr a, ValuePtr b) {
  return make(ValueKind::Pair, {std::move(a), std::move(b)});
}

ValuePtr v_amb(ValuePtr a, ValuePtr b) {
  return make(ValueKind::Amb, {std::move(a), std::move(b)});
}

ValuePtr v_fun(TermPtr abstraction) {
  if (!abstraction || abstraction->kind != TermKind::Lam)
    throw std::invalid_argument("v_fun: expects a lambda abstraction");
  return make(ValueKind::Fun, {}, std::move(abstraction));
}

bool value_eq(const ValuePtr& a, const ValuePtr& b) {
  if (a.get() == b.get()) return true;
  if (a->hash != b->hash || a->kind != b->kind) return false;
  if (a->kind == ValueKind::Fun) return term_eq(a->fun, b->fun);
  if (a->kids.size() != b->kids.size()) return false;
  for (std::size_t i = 0; i < a->kids.size(); ++i)
    if (!value_eq(a->kids[i], b->kids[i])) return false;
  return true;
}

int value_cmp(const ValuePtr& a, const ValuePtr& b) {
  if (a.get() == b.get()) return 0;
  if (a->kind != b->kind) return a->kind < b->kind ? -1 : 1;
  if (a->kind == ValueKind::Fun) return term_cmp(a->fun, b->fun);
  for (std::size_t i = 0; i < a->kids.size(); ++i)
    if (int c = value_cmp(a->kids[i], b->kids[i]); c != 0) return c;
  return 0;
}

ValuePtr project(const TermPtr& t) {
  switch (t->kind) {
    case TermKind::Nil: return v_nil();
    case TermKind::Left: return v_left(project(t->kids[0]));
    case TermKind::Right: return v_right(project(t->kids[0]));
    case TermKind::Pair: return v_pair(project(t->kids[0]), project(t->kids[1]));
    case TermKind::Lam: return v_fun(t);
    default: return v_bot();
  }
}

bool leq(const ValuePtr& a, const ValuePtr& b) {
  if (a->kind == ValueKind::Bot) return true;
  if (a->kind != b->kind) return false;
  if (a->kind == ValueKind::Fun) return term_eq(a->fun, b->fun);
  for (std::size_t i = 0; i < a->kids.size(); ++i)
    if (!leq(a->kids[i], b->kids[i])) return false;
  return true;
}

std::optional<ValuePtr> lub(const ValuePtr& a, const ValuePtr& b) {
  if (a->kind == ValueKind::Bot) return b;
  if (b->kind == ValueKind::Bot) return a;
  if (a->kind != b->kind) return std::nullopt;
  if (a->kind == ValueKind::Fun) {
    if (!term_eq(a->fun, b->fun)) return std::nullopt;
    return a;
  }
  std::vector<ValuePtr> kids;
  kids.reserve(a->kids.size());
  for (std::size_t i = 0; i < a->kids.size(); ++i) {
    auto k = lub(a->kids[i], b->kids[i]);
    if (!k) return std::nullopt;
    kids.push_back(std::move(*k));
  }
  switch (a->kind) {
    case ValueKind::Nil: return v_nil();
    case ValueKind::Left: return v_left(kids[0]);
    case ValueKind::Right: return v_right(kids[0]);
    case ValueKind::Pair: return v_pair(kids[0], kids[1]);
    case ValueKind::Amb: return v_amb(kids[0], kids[1]);
    default: return std::nullopt;
  }
}

std::size_t rank(const ValuePtr& v) {
  std::size_t m = 0;
  for (const auto& k : v->kids) m = std::max(m, rank(k));
  return v->kids.empty() ? 0 : m + 1;
}

DataSet make_data_set(std::vector<ValuePtr> vs) {
  std::sort(vs.begin(), vs.end(),
            [](const ValuePtr& a, const ValuePtr& b) { return value_cmp(a, b) < 0; });
  vs.erase(std::unique(vs.begin(), vs.end(),
                       [](const ValuePtr& a, const ValuePtr& b) { return value_eq(a, b); }),
           vs.end());
  return vs;
}

bool data_set_contains(const DataSet& s, const ValuePtr& v) {
  for (const auto& e : s)
    if (value_eq(e, v)) return true;
  return false;
}

bool data_set_eq(const DataSet& a, const DataSet& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!value_eq(a[i], b[i])) return false;
  return true;
}

namespace {

void cartesian(const std::vector<DataSet>& parts, std::size_t i,
               std::vector<ValuePtr>& picked,
               const std::function<void(const std::vector<ValuePtr>&)>& emit) {
  if (i == parts.size()) {
    emit(picked);
    return;
  }
  for (const auto& v : parts[i]) {
    picked.push_back(v);
    cartesian(parts, i + 1, picked, emit);
    picked.pop_back();
  }
}

}  // namespace

DataSet data_set(const ValuePtr& v) {
  switch (v->kind) {
    case ValueKind::Bot:
      return {v_bot()};
    case ValueKind::Fun:
      return {v};
    case ValueKind::Amb: {
      const ValuePtr& a = v->kids[0];
      const ValuePtr& b = v->kids[1];
      std::vector<ValuePtr> out;
      if (a->kind != ValueKind::Bot)
        for (auto& d : data_set(a)) out.push_back(std::move(d));
      if (b->kind != ValueKind::Bot)
        for (auto& d : data_set(b)) out.push_back(std::move(d));
      if (a->kind == ValueKind::Bot && b->kind == ValueKind::Bot)
        out.push_back(v_bot());
      return make_data_set(std::move(out));
    }
    default: {
      std::vector<DataSet> parts;
      parts.reserve(v->kids.size());
      for (const auto& k : v->kids) parts.push_back(data_set(k));
      std::vector<ValuePtr> out;
      std::vector<ValuePtr> picked;
      cartesian(parts, 0, picked, [&](const std::vector<ValuePtr>& kids) {
        switch (v->kind) {
          case ValueKind::Nil: out.push_back(v_nil()); break;
          case ValueKind::Left: out.push_back(v_left(kids[0])); break;
          case ValueKind::Right: out.push_back(v_right(kids[0])); break;
          case ValueKind::Pair: out.push_back(v_pair(kids[0], kids[1])); break;
          default: throw std::logic_error("data_set: unexpected kind");
        }
      });
      return make_data_set(std::move(out));
    }
  }
}

namespace {

constexpr std::size_t kDenoteDepthCap = 10000;

ValuePtr denote_rec(const TermPtr& t, std::size_t fuel, std::size_t depth) {
  if (depth > kDenoteDepthCap) return v_bot();
  EvalResult r = eval_whnf(t, fuel);
  if (r.out_of_fuel()) return v_bot();
  const TermPtr& w = r.whnf;
  switch (w->kind) {
    case TermKind::Lam: return v_fun(w);
    case TermKind::Nil: return v_nil();
    case TermKind::Left: return v_left(denote_rec(w->kids[0], fuel, depth + 1));
    case TermKind::Right: return v_right(denote_rec(w->kids[0], fuel, depth + 1));
    case TermKind::Pair:
      return v_pair(denote_rec(w->kids[0], fuel, depth + 1),
                    denote_rec(w->kids[1], fuel, depth + 1));
    case TermKind::Amb:
      return v_amb(denote_rec(w->kids[0], fuel, depth + 1),
                   denote_rec(w->kids[1], fuel, depth + 1));
    default:
      throw std::logic_error("denote_finitary: non-whnf result");
  }
}

}  // namespace

ValuePtr denote_finitary(const TermPtr& t, std::size_t fuel) {
  return denote_rec(t, fuel, 0);
}

namespace {

std::string hex_tag(std::size_t h) {
  static const char* digits = "0123456789abcdef";
  std::string s;
  for (int i = 0; i < 8; ++i) {
    s.push_back(digits[h & 0xf]);
    h >>= 4;
  }
  return s;
}

}  // namespace

std::string render_value(const ValuePtr& v) {
  switch (v->kind) {
    case ValueKind::Bot: return "bot";
    case ValueKind::Nil: return "Nil";
    case ValueKind::Left: return "Left(" + render_value(v->kids[0]) + ")";
    case ValueKind::Right: return "Right(" + render_value(v->kids[0]) + ")";
    case ValueKind::Pair:
      return "Pair(" + render_value(v->kids[0]) + ", " + render_value(v->kids[1]) + ")";
    case ValueKind::Amb:
      return "Amb(" + render_value(v->kids[0]) + ", " + render_value(v->kids[1]) + ")";
    case ValueKind::Fun: return "fun<" + hex_tag(v->fun->hash) + ">";
  }
  return "?";
}

std::string render_data_set(const DataSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ", ";
    out += render_value(s[i]);
  }
  out += "}";
  return out;
}

ValuePtr value_from_literal(const TermPtr& t) {
  switch (t->kind) {
    case TermKind::Bottom: return v_bot();
    case TermKind::Nil: return v_nil();
    case TermKind::Lam: return v_fun(t);
    case TermKind::Left: {
      auto k = value_from_literal(t->kids[0]);
      return k ? v_left(std::move(k)) : nullptr;
    }
    case TermKind::Right: {
      auto k = value_from_literal(t->kids[0]);
      return k ? v_right(std::move(k)) : nullptr;
    }
    case TermKind::Pair: {
      auto a = value_from_literal(t->kids[0]);
      auto b = value_from_literal(t->kids[1]);
      return a && b ? v_pair(std::move(a), std::move(b)) : nullptr;
    }
    case TermKind::Amb: {
      auto a = value_from_literal(t->kids[0]);
      auto b = value_from_literal(t->kids[1]);
      return a && b ? v_amb(std::move(a), std::move(b)) : nullptr;
    }
    default:
      return nullptr;
  }
}

}  // namespace amb
