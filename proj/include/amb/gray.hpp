#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "amb/rational.hpp"
#include "amb/realizers.hpp"
#include "amb/term.hpp"
#include "amb/value.hpp"

namespace amb {

enum class GrayDigit : std::uint8_t { L, R, Undef };

// A closed term of stream type producing the Gray code of x in [-1,1]:
// digit L when the residual is negative, R when positive, and a diverging
// digit (rec of the identity) at zero; the residual evolves by the tent
// map t(x) = 1 - 2|x|. Rational inputs have eventually periodic residual
// orbits, so the generator is a finite rec-term.
// Throws std::domain_error outside [-1,1].
TermPtr gray_stream(const Rational& x);

// The stream-conversion programs from the prelude, by name.
const std::vector<NamedProgram>& gray_programs();
NamedProgram gtos_program();

// Signed-digit prefix validation: each digit d must satisfy x in
// [d/2 - 1/2, d/2 + 1/2], with the residual updated to 2x - d.
bool sd_check(const std::vector<int>& prefix, Rational x);

// Interval of reals consistent with a signed-digit prefix:
// [sum d_i 2^-(i+1) - 2^-n, sum d_i 2^-(i+1) + 2^-n].
std::pair<Rational, Rational> sd_interval(const std::vector<int>& prefix);

// Gray prefix validation against the per-digit relation: L requires a
// negative residual, R a positive one, and a zero residual admits any
// digit including the undefined one; residuals evolve by the tent map.
bool gray_check(const std::vector<GrayDigit>& prefix, Rational x);

// Structural well-formedness: at most one undefined digit, and once it
// occurs the continuation is forced to R and then L forever.
bool gray_prefix_wellformed(const std::vector<GrayDigit>& prefix);

// Digit decodings: signed digits are Left(Left(Nil)) = -1,
// Left(Right(Nil)) = 1, Right(Nil) = 0; Gray digits are Left(Nil) = L and
// Right(Nil) = R, with bottom read as the undefined digit.
std::optional<int> sd_digit_of_value(const ValuePtr& v);
std::optional<GrayDigit> gray_digit_of_value(const ValuePtr& v);

TermPtr sd_digit_term(int d);
TermPtr gray_digit_term(GrayDigit d);

// Longest decodable signed-digit prefix along a Pair spine.
std::vector<int> sd_prefix_of_value(const ValuePtr& v);

}  // namespace amb
