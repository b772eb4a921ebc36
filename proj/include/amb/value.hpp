#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "amb/term.hpp"

namespace amb {

// Compact elements of the semantic domain: finite constructor trees over
// bottom, with opaque function leaves. A function leaf carries the source
// abstraction and compares by syntactic identity of that term.
enum class ValueKind : std::uint8_t { Bot, Nil, Left, Right, Pair, Amb, Fun };

struct CompactValue;
using ValuePtr = std::shared_ptr<const CompactValue>;

struct CompactValue {
  ValueKind kind;
  std::vector<ValuePtr> kids;
  TermPtr fun;  // Fun leaves only
  std::size_t hash = 0;
};

ValuePtr v_bot();
ValuePtr v_nil();
ValuePtr v_left(ValuePtr v);
ValuePtr v_right(ValuePtr v);
ValuePtr v_pair(ValuePtr a, ValuePtr b);
ValuePtr v_amb(ValuePtr a, ValuePtr b);
ValuePtr v_fun(TermPtr abstraction);

bool value_eq(const ValuePtr& a, const ValuePtr& b);
int value_cmp(const ValuePtr& a, const ValuePtr& b);

// The projection of a closed term to its currently committed data:
// data-constructor spines and lambda leaves survive, everything else
// (including Amb-headed terms, since Amb is not a data constructor)
// becomes bottom.
ValuePtr project(const TermPtr& t);

// Domain order on compact elements: bottom below everything, constructors
// matched positionally, function leaves comparable only when equal.
bool leq(const ValuePtr& a, const ValuePtr& b);

// Least upper bound when the heads are consistent.
std::optional<ValuePtr> lub(const ValuePtr& a, const ValuePtr& b);

// rank(C(v1..vn)) exceeds the rank of every child; leaves have rank 0.
std::size_t rank(const ValuePtr& v);

// A finite set of compact values with a stable order.
using DataSet = std::vector<ValuePtr>;

DataSet make_data_set(std::vector<ValuePtr> vs);  // sorts and dedupes
bool data_set_contains(const DataSet& s, const ValuePtr& v);
bool data_set_eq(const DataSet& a, const DataSet& b);

// data(v): every deterministic value obtainable by resolving the Amb nodes
// of v in all globally angelic ways. On finite values the coinductive
// definition collapses to rank recursion.
DataSet data_set(const ValuePtr& v);

// Test-time stand-in for the denotation: deep fuel-bounded evaluation where
// constructor heads (including Amb) recurse into their arguments and
// out-of-fuel positions collapse to bottom.
ValuePtr denote_finitary(const TermPtr& t, std::size_t fuel);

// Rendering: bot, Nil, Left(v), Right(v), Pair(v,v), Amb(v,v), fun<hash>.
std::string render_value(const ValuePtr& v);
std::string render_data_set(const DataSet& s);

// Direct reading of a constructor-literal term (constructors, bot, lambdas)
// as a compact value; Amb stays a pair node here, unlike project.
// Returns nullptr when the term contains computation.
ValuePtr value_from_literal(const TermPtr& t);

}  // namespace amb
