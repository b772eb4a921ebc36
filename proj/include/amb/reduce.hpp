#pragma once

#include <cstddef>
#include <optional>

#include "amb/term.hpp"

namespace amb {

// Rule tags of the deterministic leftmost-outermost relation.
enum class DetRule : std::uint8_t {
  SI,    // case over a constructor (including Amb) selects its clause
  SIp,   // case over a lambda selects the fun clause
  SII,   // beta
  SIII,  // rec M -> M (rec M)
  SIV,   // congruence under the case scrutinee
  SV,    // congruence under the application head
  SVI,   // bottom steps to itself
  SVII,  // constructor applied to an argument steps to bottom
};

const char* det_rule_name(DetRule r);

// Either a successor with the rule that produced it, or a whnf marker
// (next == nullptr).
struct DetStep {
  TermPtr next;
  DetRule rule = DetRule::SI;

  bool is_whnf_marker() const { return next == nullptr; }
};

// One step of the deterministic relation. Total on closed terms: returns
// the whnf marker exactly when the term is a weak head normal form.
DetStep step_det(const TermPtr& t);

// Instantiates the clause selected by a constructor- or lambda-headed
// scrutinee (the contractum of the case rules). Safe on open terms.
TermPtr fire_case(const TermPtr& case_term);

struct EvalResult {
  TermPtr whnf;        // nullptr means out of fuel
  std::size_t steps = 0;

  bool out_of_fuel() const { return whnf == nullptr; }
};

// Iterates step_det at most fuel times and returns the first whnf reached.
// Out of fuel means "not yet", never "diverges".
EvalResult eval_whnf(TermPtr t, std::size_t fuel);

}  // namespace amb
