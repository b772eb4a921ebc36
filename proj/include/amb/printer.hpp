#pragma once

#include <string>
#include <vector>

#include "amb/term.hpp"
#include "amb/types.hpp"

namespace amb {

// Renders a term in the surface grammar. `scope` names the free indices,
// outermost first (index 0 refers to the last entry); printing never
// shadows a name that is still referable, so output reparses to an equal
// term.
std::string print_term(const TermPtr& t, const std::vector<std::string>& scope = {});

std::string print_ty(const TyPtr& t, const std::vector<std::string>& scope = {});

}  // namespace amb
