#include "amb/printer.hpp"

#include <cctype>
#include <set>

namespace amb {

namespace {

bool valid_name(const std::string& s) {
  if (s.empty()) return false;
  if (!(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\''))
      return false;
  return true;
}

std::string fresh_name(const std::string& hint, std::set<std::string>& used,
                       const char* fallback) {
  std::string base = valid_name(hint) && hint != "_" ? hint : fallback;
  std::string cand = base;
  for (int i = 1; used.count(cand); ++i) cand = base + std::to_string(i);
  used.insert(cand);
  return cand;
}

struct TermPrinter {
  std::vector<std::string> names;  // scope stack, outermost first
  std::set<std::string> used;

  std::string lookup(int index) const {
    int slot = static_cast<int>(names.size()) - 1 - index;
    if (slot < 0) return "?v" + std::to_string(index - static_cast<int>(names.size()));
    return names[slot];
  }

  std::string push(const std::string& hint, const char* fallback) {
    std::string n = fresh_name(hint, used, fallback);
    names.push_back(n);
    return n;
  }

  void pop(std::size_t n = 1) {
    while (n--) {
      used.erase(names.back());
      names.pop_back();
    }
  }

  static std::string hint_at(const TermPtr& t, std::size_t i) {
    return i < t->hints.size() ? t->hints[i] : std::string{};
  }

  // prec: 0 top, 1 application head, 2 argument
  std::string print(const TermPtr& t, int prec) {
    switch (t->kind) {
      case TermKind::Var:
        return lookup(t->var);
      case TermKind::Bottom:
        return "bot";
      case TermKind::Nil:
        return "Nil";
      case TermKind::Left:
        return "Left(" + print(t->kids[0], 0) + ")";
      case TermKind::Right:
        return "Right(" + print(t->kids[0], 0) + ")";
      case TermKind::Pair:
        return "Pair(" + print(t->kids[0], 0) + ", " + print(t->kids[1], 0) + ")";
      case TermKind::Amb:
        return "Amb(" + print(t->kids[0], 0) + ", " + print(t->kids[1], 0) + ")";
      case TermKind::Lam: {
        std::vector<std::string> binders;
        TermPtr body = t;
        while (body->kind == TermKind::Lam) {
          binders.push_back(push(hint_at(body, 0), "x"));
          body = body->kids[0];
        }
        std::string s = "\\";
        for (std::size_t i = 0; i < binders.size(); ++i) {
          if (i) s += " ";
          s += binders[i];
        }
        s += ". " + print(body, 0);
        pop(binders.size());
        return prec > 0 ? "(" + s + ")" : s;
      }
      case TermKind::Rec: {
        std::string s = "rec " + print(t->kids[0], 2);
        return prec >= 2 ? "(" + s + ")" : s;
      }
      case TermKind::App: {
        std::string s = print(t->kids[0], 1) + " " + print(t->kids[1], 2);
        return prec >= 2 ? "(" + s + ")" : s;
      }
      case TermKind::Case: {
        std::string s = "case " + print(t->kids[0], 0) + " of {";
        bool first = true;
        auto emit = [&](const std::string& head, const TermPtr& body,
                        std::size_t binders) {
          if (!first) s += "; ";
          first = false;
          s += head + " -> " + print(body, 0);
          pop(binders);
        };
        if (case_body(t, Clause::Nil)->kind != TermKind::Bottom)
          emit("Nil", case_body(t, Clause::Nil), 0);
        if (case_body(t, Clause::Left)->kind != TermKind::Bottom) {
          std::string a = push(hint_at(t, 0), "a");
          emit("Left(" + a + ")", case_body(t, Clause::Left), 1);
        }
        if (case_body(t, Clause::Right)->kind != TermKind::Bottom) {
          std::string b = push(hint_at(t, 1), "b");
          emit("Right(" + b + ")", case_body(t, Clause::Right), 1);
        }
        if (case_body(t, Clause::Pair)->kind != TermKind::Bottom) {
          std::string a = push(hint_at(t, 2), "a");
          std::string b = push(hint_at(t, 3), "b");
          emit("Pair(" + a + ", " + b + ")", case_body(t, Clause::Pair), 2);
        }
        if (case_body(t, Clause::Amb)->kind != TermKind::Bottom) {
          std::string a = push(hint_at(t, 4), "a");
          std::string b = push(hint_at(t, 5), "b");
          emit("Amb(" + a + ", " + b + ")", case_body(t, Clause::Amb), 2);
        }
        if (case_body(t, Clause::Fun)->kind != TermKind::Bottom) {
          std::string f = push(hint_at(t, 6), "f");
          emit("fun(" + f + ")", case_body(t, Clause::Fun), 1);
        }
        s += "}";
        return prec >= 1 ? "(" + s + ")" : s;
      }
    }
    return "?";
  }
};

struct TyPrinter {
  std::vector<std::string> names;
  std::set<std::string> used;

  std::string lookup(int index) const {
    int slot = static_cast<int>(names.size()) - 1 - index;
    if (slot < 0) return "?t" + std::to_string(index - static_cast<int>(names.size()));
    return names[slot];
  }

  // prec: 0 top (arrow, fix), 1 sum operand, 2 prod operand, 3 atom
  std::string print(const TyPtr& t, int prec) {
    switch (t->kind) {
      case TyKind::Var:
        return lookup(t->var);
      case TyKind::Unit:
        return "1";
      case TyKind::Amb:
        return "A(" + print(t->kids[0], 0) + ")";
      case TyKind::Arrow: {
        std::string s = print(t->kids[0], 1) + " -> " + print(t->kids[1], 0);
        return prec >= 1 ? "(" + s + ")" : s;
      }
      case TyKind::Sum: {
        std::string s = print(t->kids[0], 1) + " + " + print(t->kids[1], 2);
        return prec >= 2 ? "(" + s + ")" : s;
      }
      case TyKind::Prod: {
        std::string s = print(t->kids[0], 2) + " * " + print(t->kids[1], 3);
        return prec >= 3 ? "(" + s + ")" : s;
      }
      case TyKind::Fix: {
        std::string n = fresh_name(t->hint, used, "a");
        names.push_back(n);
        std::string s = "fix " + n + ". " + print(t->kids[0], 0);
        names.pop_back();
        used.erase(n);
        return prec >= 1 ? "(" + s + ")" : s;
      }
    }
    return "?";
  }
};

}  // namespace

std::string print_term(const TermPtr& t, const std::vector<std::string>& scope) {
  TermPrinter p;
  p.names = scope;
  p.used.insert(scope.begin(), scope.end());
  return p.print(t, 0);
}

std::string print_ty(const TyPtr& t, const std::vector<std::string>& scope) {
  TyPrinter p;
  p.names = scope;
  p.used.insert(scope.begin(), scope.end());
  return p.print(t, 0);
}

}  // namespace amb
