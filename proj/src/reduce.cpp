#include "amb/reduce.hpp"

#include <stdexcept>

namespace amb {

const char* det_rule_name(DetRule r) {
  switch (r) {
    case DetRule::SI: return "s-i";
    case DetRule::SIp: return "s-i'";
    case DetRule::SII: return "s-ii";
    case DetRule::SIII: return "s-iii";
    case DetRule::SIV: return "s-iv";
    case DetRule::SV: return "s-v";
    case DetRule::SVI: return "s-vi";
    case DetRule::SVII: return "s-vii";
  }
  return "?";
}

namespace {

// Selects and instantiates the clause for a constructor-headed scrutinee.
TermPtr fire_clause(const TermPtr& t, const TermPtr& scrut) {
  Clause c;
  switch (scrut->kind) {
    case TermKind::Nil: c = Clause::Nil; break;
    case TermKind::Left: c = Clause::Left; break;
    case TermKind::Right: c = Clause::Right; break;
    case TermKind::Pair: c = Clause::Pair; break;
    case TermKind::Amb: c = Clause::Amb; break;
    default: throw std::logic_error("fire_clause: not a constructor");
  }
  TermPtr body = case_body(t, c);
  switch (clause_binders(c)) {
    case 0:
      return body;
    case 1:
      return subst(body, scrut->kids[0]);
    case 2:
      // Pair(a,b)/Amb(a,b): a is the outer binder (index 1), b the inner.
      return subst(subst_at(body, 0, scrut->kids[1]), scrut->kids[0]);
    default:
      throw std::logic_error("fire_clause: bad binder count");
  }
}

}  // namespace

TermPtr fire_case(const TermPtr& t) {
  if (t->kind != TermKind::Case) throw std::logic_error("fire_case: not a case");
  const TermPtr& scrut = t->kids[0];
  if (scrut->kind == TermKind::Lam)
    return subst(case_body(t, Clause::Fun), scrut);
  return fire_clause(t, scrut);
}

DetStep step_det(const TermPtr& t) {
  switch (t->kind) {
    case TermKind::Lam:
    case TermKind::Nil:
    case TermKind::Left:
    case TermKind::Right:
    case TermKind::Pair:
    case TermKind::Amb:
      return DetStep{nullptr};
    case TermKind::Bottom:
      return DetStep{t, DetRule::SVI};
    case TermKind::Rec:
      return DetStep{mk_app(t->kids[0], t), DetRule::SIII};
    case TermKind::App: {
      const TermPtr& fn = t->kids[0];
      if (fn->kind == TermKind::Lam)
        return DetStep{subst(fn->kids[0], t->kids[1]), DetRule::SII};
      if (is_constructor(fn->kind)) return DetStep{mk_bottom(), DetRule::SVII};
      DetStep inner = step_det(fn);
      if (inner.is_whnf_marker()) throw std::logic_error("step_det: stuck application head");
      return DetStep{mk_app(inner.next, t->kids[1]), DetRule::SV};
    }
    case TermKind::Case: {
      const TermPtr& scrut = t->kids[0];
      if (is_constructor(scrut->kind))
        return DetStep{fire_case(t), DetRule::SI};
      if (scrut->kind == TermKind::Lam)
        return DetStep{subst(case_body(t, Clause::Fun), scrut), DetRule::SIp};
      DetStep inner = step_det(scrut);
      if (inner.is_whnf_marker()) throw std::logic_error("step_det: stuck scrutinee");
      std::vector<TermPtr> bodies(t->kids.begin() + 1, t->kids.end());
      return DetStep{mk_case(inner.next, std::move(bodies), t->hints), DetRule::SIV};
    }
    case TermKind::Var:
      throw std::logic_error("step_det: open term");
  }
  throw std::logic_error("step_det: unreachable");
}

EvalResult eval_whnf(TermPtr t, std::size_t fuel) {
  std::size_t used = 0;
  while (!is_whnf(t)) {
    if (used == fuel) return EvalResult{nullptr, used};
    t = step_det(t).next;
    ++used;
  }
  return EvalResult{std::move(t), used};
}

}  // namespace amb
