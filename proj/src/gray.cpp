#include "amb/gray.hpp"

#include <map>
#include <stdexcept>

#include "amb/program.hpp"

namespace amb {

namespace {

// t(x) = 1 - 2|x|
Rational tent(const Rational& x) {
  return Rational(1) - Rational(2) * x.abs();
}

}  // namespace

TermPtr gray_digit_term(GrayDigit d) {
  switch (d) {
    case GrayDigit::L: return mk_left(mk_nil());
    case GrayDigit::R: return mk_right(mk_nil());
    case GrayDigit::Undef:
      // the diverging digit: rec of the identity
      return mk_rec(mk_lam(mk_var(0, "d"), "d"));
  }
  throw std::logic_error("gray_digit_term");
}

TermPtr sd_digit_term(int d) {
  switch (d) {
    case -1: return mk_left(mk_left(mk_nil()));
    case 1: return mk_left(mk_right(mk_nil()));
    case 0: return mk_right(mk_nil());
    default: throw std::invalid_argument("sd_digit_term: digit must be -1, 0 or 1");
  }
}

TermPtr gray_stream(const Rational& x) {
  if (x < Rational(-1) || x > Rational(1))
    throw std::domain_error("gray_stream: input outside [-1,1]");
  // Residual orbit under the tent map; rationals cycle, so find the lasso.
  std::vector<Rational> orbit;
  std::map<std::pair<std::int64_t, std::int64_t>, std::size_t> seen;
  Rational cur = x;
  std::size_t cycle_start;
  while (true) {
    auto key = std::make_pair(cur.num, cur.den);
    auto it = seen.find(key);
    if (it != seen.end()) {
      cycle_start = it->second;
      break;
    }
    seen[key] = orbit.size();
    orbit.push_back(cur);
    cur = tent(cur);
  }
  auto digit_of = [](const Rational& r) {
    if (r < Rational(0)) return gray_digit_term(GrayDigit::L);
    if (r > Rational(0)) return gray_digit_term(GrayDigit::R);
    return gray_digit_term(GrayDigit::Undef);
  };
  // cycle: rec \self. d_c : d_{c+1} : ... : self
  TermPtr tail = mk_var(0, "s");
  for (std::size_t i = orbit.size(); i-- > cycle_start;)
    tail = mk_pair(digit_of(orbit[i]), std::move(tail));
  TermPtr stream = mk_rec(mk_lam(std::move(tail), "s"));
  // finite prefix before the cycle
  for (std::size_t i = cycle_start; i-- > 0;)
    stream = mk_pair(digit_of(orbit[i]), std::move(stream));
  return stream;
}

namespace {

NamedProgram gray_entry(const char* name, const char* role) {
  const ProgramEntry* e = std_program().find(name);
  if (!e || !e->ascription)
    throw std::logic_error(std::string("prelude is missing '") + name + "'");
  return NamedProgram{e->name, e->closed, e->ascription, role};
}

}  // namespace

const std::vector<NamedProgram>& gray_programs() {
  static const std::vector<NamedProgram> entries = {
      gray_entry("not", "flips a Gray digit"),
      gray_entry("nh", "flips the head of a Gray stream"),
      gray_entry("f", "first digit of a Gray stream, partial at zero"),
      gray_entry("g", "termination witness from the second digit"),
      gray_entry("gscomp", "concurrent first-digit analysis of a Gray stream"),
      gray_entry("gsd", "Gray tail after removing one signed digit"),
      gray_entry("onedigit", "one signed digit plus the Gray tail"),
      gray_entry("s", "concurrent head step of the conversion"),
      gray_entry("monp", "maps a function under a stream cell"),
      gray_entry("mon", "maps a function under a choice of stream cells"),
      gray_entry("gtos", "Gray code to signed digit stream conversion"),
  };
  return entries;
}

NamedProgram gtos_program() {
  for (const auto& e : gray_programs())
    if (e.name == "gtos") return e;
  throw std::logic_error("gtos missing from gray_programs");
}

bool sd_check(const std::vector<int>& prefix, Rational x) {
  for (int d : prefix) {
    if (d < -1 || d > 1) return false;
    Rational dr(d);
    // x in I_d = [d/2 - 1/2, d/2 + 1/2], i.e. |2x - d| <= 1
    Rational residual = Rational(2) * x - dr;
    if (residual < Rational(-1) || residual > Rational(1)) return false;
    x = residual;
  }
  return true;
}

std::pair<Rational, Rational> sd_interval(const std::vector<int>& prefix) {
  Rational value(0);
  Rational weight(1, 2);  // digit i carries weight 2^-(i+1)
  for (int d : prefix) {
    value = value + Rational(d) * weight;
    weight = weight * Rational(1, 2);
  }
  Rational radius = weight * Rational(2);  // 2^-n
  return {value - radius, value + radius};
}

bool gray_check(const std::vector<GrayDigit>& prefix, Rational x) {
  if (x < Rational(-1) || x > Rational(1)) return false;
  for (GrayDigit a : prefix) {
    bool ok = (x < Rational(0) && a == GrayDigit::L) ||
              (x > Rational(0) && a == GrayDigit::R) || x == Rational(0);
    if (!ok) return false;
    x = tent(x);
  }
  return true;
}

bool gray_prefix_wellformed(const std::vector<GrayDigit>& prefix) {
  std::size_t undef_at = prefix.size();
  for (std::size_t i = 0; i < prefix.size(); ++i) {
    if (prefix[i] != GrayDigit::Undef) continue;
    if (undef_at != prefix.size()) return false;  // a second undefined digit
    undef_at = i;
  }
  if (undef_at == prefix.size()) return true;
  for (std::size_t i = undef_at + 1; i < prefix.size(); ++i) {
    GrayDigit expect = i == undef_at + 1 ? GrayDigit::R : GrayDigit::L;
    if (prefix[i] != expect) return false;
  }
  return true;
}

std::optional<int> sd_digit_of_value(const ValuePtr& v) {
  if (v->kind == ValueKind::Right && v->kids[0]->kind == ValueKind::Nil) return 0;
  if (v->kind == ValueKind::Left) {
    const ValuePtr& inner = v->kids[0];
    if (inner->kind == ValueKind::Left && inner->kids[0]->kind == ValueKind::Nil)
      return -1;
    if (inner->kind == ValueKind::Right && inner->kids[0]->kind == ValueKind::Nil)
      return 1;
  }
  return std::nullopt;
}

std::optional<GrayDigit> gray_digit_of_value(const ValuePtr& v) {
  if (v->kind == ValueKind::Bot) return GrayDigit::Undef;
  if (v->kind == ValueKind::Left && v->kids[0]->kind == ValueKind::Nil)
    return GrayDigit::L;
  if (v->kind == ValueKind::Right && v->kids[0]->kind == ValueKind::Nil)
    return GrayDigit::R;
  return std::nullopt;
}

std::vector<int> sd_prefix_of_value(const ValuePtr& v) {
  std::vector<int> out;
  const CompactValue* p = v.get();
  while (p->kind == ValueKind::Pair) {
    auto d = sd_digit_of_value(p->kids[0]);
    if (!d) break;
    out.push_back(*d);
    p = p->kids[1].get();
  }
  return out;
}

}  // namespace amb
