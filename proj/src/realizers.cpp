#include "amb/realizers.hpp"

#include <stdexcept>

#include "amb/program.hpp"

namespace amb {

TermPtr strictapp(const TermPtr& b, const TermPtr& a) {
  TermPtr b1 = shift(b, 1);
  TermPtr b2 = shift(b, 2);
  std::vector<TermPtr> bodies(kClauseCount, mk_bottom());
  bodies[static_cast<int>(Clause::Nil)] = mk_app(b, mk_nil());
  bodies[static_cast<int>(Clause::Left)] = mk_app(b1, mk_left(mk_var(0, "c")));
  bodies[static_cast<int>(Clause::Right)] = mk_app(b1, mk_right(mk_var(0, "c")));
  bodies[static_cast<int>(Clause::Pair)] =
      mk_app(b2, mk_pair(mk_var(1, "c"), mk_var(0, "d")));
  bodies[static_cast<int>(Clause::Fun)] = mk_app(b1, mk_var(0, "c"));
  return mk_case(a, std::move(bodies), {"c", "c", "c", "d", "", "", "c"});
}

TermPtr seq(const TermPtr& a, const TermPtr& b) {
  return strictapp(mk_lam(shift(b, 1), "c"), a);
}

TermPtr numeral(unsigned n) {
  TermPtr t = mk_left(mk_nil());
  while (n--) t = mk_right(t);
  return t;
}

std::optional<unsigned> numeral_of_value(const ValuePtr& v) {
  unsigned n = 0;
  const CompactValue* p = v.get();
  while (p->kind == ValueKind::Right) {
    ++n;
    p = p->kids[0].get();
  }
  if (p->kind == ValueKind::Left && p->kids[0]->kind == ValueKind::Nil)
    return n;
  return std::nullopt;
}

namespace {

NamedProgram from_prelude(const char* name, const char* role) {
  const ProgramEntry* e = std_program().find(name);
  if (!e || !e->ascription)
    throw std::logic_error(std::string("prelude is missing '") + name + "'");
  return NamedProgram{e->name, e->closed, e->ascription, role};
}

}  // namespace

const std::vector<NamedProgram>& catalog() {
  static const std::vector<NamedProgram> entries = {
      from_prelude("restintro", "realizer of restricted disjunction introduction"),
      from_prelude("restr", "partial projection of a guarded disjunct"),
      from_prelude("conclem", "realizer of concurrent excluded middle"),
      from_prelude("concreturn", "trivial concurrency introduction"),
      from_prelude("mapamb", "concurrent modus ponens: maps a function over a choice"),
      from_prelude("ambLR", "tagged concurrent disjunction elimination"),
      from_prelude("up", "non-strict injection for locally angelic choice"),
      from_prelude("down", "projection inverse to up"),
      from_prelude("min", "minimisation: least witness of a decidable predicate"),
  };
  return entries;
}

const NamedProgram& catalog_entry(const std::string& name) {
  for (const auto& e : catalog())
    if (e.name == name) return e;
  throw std::out_of_range("no catalog entry named '" + name + "'");
}

bool check_conc_contract(const ValuePtr& c,
                         const std::function<bool(const ValuePtr&)>& ok) {
  if (c->kind != ValueKind::Amb) return false;
  const ValuePtr& a = c->kids[0];
  const ValuePtr& b = c->kids[1];
  if (a->kind == ValueKind::Bot && b->kind == ValueKind::Bot) return false;
  if (a->kind != ValueKind::Bot && !ok(a)) return false;
  if (b->kind != ValueKind::Bot && !ok(b)) return false;
  return true;
}

}  // namespace amb
