#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "amb/term.hpp"
#include "amb/types.hpp"
#include "amb/value.hpp"

namespace amb {

// Strict application b/a: a case analysis on a that rebuilds the scrutinee
// and applies b to it, so the result is b a when a is defined and bottom
// otherwise. There is no Amb clause.
TermPtr strictapp(const TermPtr& b, const TermPtr& a);

// a seq b: b when a is defined, bottom otherwise.
TermPtr seq(const TermPtr& a, const TermPtr& b);

// Unary numerals: 0 is Left(Nil), successor is Right.
TermPtr numeral(unsigned n);
std::optional<unsigned> numeral_of_value(const ValuePtr& v);

// A named closed program with its ascribed type and a note on the rule or
// construction it witnesses.
struct NamedProgram {
  std::string name;
  TermPtr term;
  TyPtr type;
  std::string role;
};

// The combinator library shipped with the prelude: realizers of the
// restriction and concurrency rules, the choice-mapping combinators, the
// locally-angelic injections, and minimisation.
const std::vector<NamedProgram>& catalog();
const NamedProgram& catalog_entry(const std::string& name);

// Instance-level contract for a concurrent-choice value: it must be a
// choice pair with at least one defined side, and every defined side must
// satisfy the supplied instance predicate.
bool check_conc_contract(const ValuePtr& c,
                         const std::function<bool(const ValuePtr&)>& ok);

}  // namespace amb
