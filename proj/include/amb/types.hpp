#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "amb/term.hpp"

namespace amb {

// Recursive types: variables, the unit type, products, sums, arrows,
// fixed points, and the A(.) former for Amb-typed values. Type variables
// are nameless; fix binds index 0 of its body.
enum class TyKind : std::uint8_t { Var, Unit, Prod, Sum, Arrow, Fix, Amb };

struct Ty;
using TyPtr = std::shared_ptr<const Ty>;

struct Ty {
  TyKind kind;
  int var = -1;
  std::vector<TyPtr> kids;
  std::string hint;  // fix binder name, printing only
  std::size_t hash = 0;
};

TyPtr ty_var(int index, std::string hint = {});
TyPtr ty_unit();
TyPtr ty_prod(TyPtr a, TyPtr b);
TyPtr ty_sum(TyPtr a, TyPtr b);
TyPtr ty_arrow(TyPtr dom, TyPtr cod);
TyPtr ty_fix(TyPtr body, std::string hint = {});
TyPtr ty_amb(TyPtr inner);

bool ty_syntactic_eq(const TyPtr& a, const TyPtr& b);
int ty_cmp(const TyPtr& a, const TyPtr& b);

TyPtr ty_shift(const TyPtr& t, int d, int cutoff = 0);
TyPtr ty_subst_at(const TyPtr& t, int j, const TyPtr& s);

// One unfolding of a fixed point: body with the fix type substituted for
// its binder.
TyPtr unfold_fix(const TyPtr& t);

// Unfolds fix heads until a non-fix former is exposed. Terminates on
// regular types; throws std::logic_error on runaway inputs.
TyPtr head_normal(TyPtr t);

// The regularity condition on every fix subterm: the body is strictly
// positive in the binder, is not an A-tower over the binder, and the
// binder occurs free in the body.
bool is_regular(const TyPtr& t);

// Every regular type is semantically equal to A^k(core) with core neither
// a fix type nor an A type. Throws std::logic_error when the normal form
// diverges (impossible on regular inputs).
std::pair<std::size_t, TyPtr> amb_normal_form(const TyPtr& t);

// Coinductive equality of recursive types, decided by exploring unfoldings
// with a memoized set of assumed-equal pairs.
bool ty_equal(const TyPtr& a, const TyPtr& b);

struct TypeError : std::runtime_error {
  TermPtr term;       // offending subterm, may be null
  TyPtr expected;     // may be null
  TyPtr actual;       // may be null
  explicit TypeError(const std::string& msg, TermPtr t = nullptr,
                     TyPtr exp = nullptr, TyPtr act = nullptr)
      : std::runtime_error(msg), term(std::move(t)),
        expected(std::move(exp)), actual(std::move(act)) {}
};

// Ordered typing context; entry names are for error messages only.
// Index 0 of a term refers to the innermost (last) entry.
struct TyCtx {
  std::vector<std::pair<std::string, TyPtr>> entries;

  const TyPtr& lookup(int index) const;
  TyCtx extended(const std::string& name, TyPtr ty) const;
};

// Bidirectional checker for the typing rules, with ROLL/UNROLL absorbed
// into fix unfolding at every former match and ty_equal at leaves and
// eliminations. Throws TypeError on rejection.
void check_type(const TyCtx& ctx, const TermPtr& t, const TyPtr& expected);

// Convenience wrapper: true iff check_type accepts.
bool type_checks(const TyCtx& ctx, const TermPtr& t, const TyPtr& expected);

}  // namespace amb
