#include "amb/parser.hpp"

#include <cctype>
#include <optional>

namespace amb {

namespace {

enum class Tok {
  Ident, Number, String,
  LParen, RParen, LBrace, RBrace,
  Semi, Comma, Dot, Colon, Equals, Arrow, Backslash, Plus, Star,
  KwLet, KwDef, KwImport, KwCase, KwOf, KwFun, KwRec, KwBot, KwFix,
  KwNil, KwLeft, KwRight, KwPair, KwAmb,
  End,
};

struct Token {
  Tok kind;
  std::string text;
  SourceLoc loc;
};

struct Lexer {
  const std::string& src;
  std::size_t pos = 0;
  SourceLoc loc;
  Token current;

  explicit Lexer(const std::string& s) : src(s) { advance(); }

  [[noreturn]] void fail(const std::string& msg, SourceLoc at) const {
    throw ParseError(msg, at.line, at.col);
  }

  char peek() const { return pos < src.size() ? src[pos] : '\0'; }

  char take() {
    char c = src[pos++];
    if (c == '\n') {
      loc.line++;
      loc.col = 1;
    } else {
      loc.col++;
    }
    return c;
  }

  void skip_trivia() {
    while (pos < src.size()) {
      char c = peek();
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        take();
      } else if (c == '-' && pos + 1 < src.size() && src[pos + 1] == '-') {
        while (pos < src.size() && peek() != '\n') take();
      } else {
        break;
      }
    }
  }

  static bool ident_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
  }
  static bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
  }

  void advance() {
    skip_trivia();
    SourceLoc at = loc;
    if (pos >= src.size()) {
      current = {Tok::End, "", at};
      return;
    }
    char c = take();
    switch (c) {
      case '(': current = {Tok::LParen, "(", at}; return;
      case ')': current = {Tok::RParen, ")", at}; return;
      case '{': current = {Tok::LBrace, "{", at}; return;
      case '}': current = {Tok::RBrace, "}", at}; return;
      case ';': current = {Tok::Semi, ";", at}; return;
      case ',': current = {Tok::Comma, ",", at}; return;
      case '.': current = {Tok::Dot, ".", at}; return;
      case ':': current = {Tok::Colon, ":", at}; return;
      case '=': current = {Tok::Equals, "=", at}; return;
      case '+': current = {Tok::Plus, "+", at}; return;
      case '*': current = {Tok::Star, "*", at}; return;
      case '\\': current = {Tok::Backslash, "\\", at}; return;
      case '-':
        if (peek() == '>') {
          take();
          current = {Tok::Arrow, "->", at};
          return;
        }
        fail("unexpected '-'", at);
      case '"': {
        std::string s;
        while (pos < src.size() && peek() != '"') s.push_back(take());
        if (pos >= src.size()) fail("unterminated string literal", at);
        take();
        current = {Tok::String, s, at};
        return;
      }
      default:
        break;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string s(1, c);
      while (pos < src.size() && std::isdigit(static_cast<unsigned char>(peek())))
        s.push_back(take());
      current = {Tok::Number, s, at};
      return;
    }
    if (ident_start(c)) {
      std::string s(1, c);
      while (pos < src.size() && ident_char(peek())) s.push_back(take());
      Tok k = Tok::Ident;
      if (s == "let") k = Tok::KwLet;
      else if (s == "def") k = Tok::KwDef;
      else if (s == "import") k = Tok::KwImport;
      else if (s == "case") k = Tok::KwCase;
      else if (s == "of") k = Tok::KwOf;
      else if (s == "fun") k = Tok::KwFun;
      else if (s == "rec") k = Tok::KwRec;
      else if (s == "bot") k = Tok::KwBot;
      else if (s == "fix") k = Tok::KwFix;
      else if (s == "Nil") k = Tok::KwNil;
      else if (s == "Left") k = Tok::KwLeft;
      else if (s == "Right") k = Tok::KwRight;
      else if (s == "Pair") k = Tok::KwPair;
      else if (s == "Amb") k = Tok::KwAmb;
      current = {k, s, at};
      return;
    }
    fail(std::string("unexpected character '") + c + "'", at);
  }
};

struct Parser {
  Lexer lex;
  std::vector<std::string> scope;    // term names, outermost first
  std::vector<std::string> tyscope;  // type variable names
  int depth = 0;

  Parser(const std::string& src, std::vector<std::string> initial_scope)
      : lex(src), scope(std::move(initial_scope)) {}

  struct DepthGuard {
    Parser& p;
    explicit DepthGuard(Parser& p) : p(p) {
      if (++p.depth > 5000) p.fail("input nests too deeply");
    }
    ~DepthGuard() { --p.depth; }
  };

  const Token& cur() const { return lex.current; }
  void bump() { lex.advance(); }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, cur().loc.line, cur().loc.col);
  }

  void expect(Tok k, const char* what) {
    if (cur().kind != k) fail(std::string("expected ") + what);
    bump();
  }

  std::string expect_ident(const char* what) {
    if (cur().kind != Tok::Ident) fail(std::string("expected ") + what);
    std::string s = cur().text;
    bump();
    return s;
  }

  int resolve(const std::string& name) const {
    for (int i = static_cast<int>(scope.size()) - 1; i >= 0; --i)
      if (scope[i] == name) return static_cast<int>(scope.size()) - 1 - i;
    return -1;
  }

  // ---- terms ----

  bool starts_atom(Tok k) const {
    switch (k) {
      case Tok::LParen: case Tok::Ident: case Tok::KwBot: case Tok::KwNil:
      case Tok::KwLeft: case Tok::KwRight: case Tok::KwPair: case Tok::KwAmb:
      case Tok::KwCase: case Tok::KwRec:
        return true;
      default:
        return false;
    }
  }

  TermPtr parse_term_level() {
    DepthGuard guard(*this);
    if (cur().kind == Tok::Backslash) return parse_lambda();
    return parse_app();
  }

  TermPtr parse_lambda() {
    expect(Tok::Backslash, "'\\'");
    std::vector<std::string> binders;
    binders.push_back(expect_ident("binder name"));
    while (cur().kind == Tok::Ident) binders.push_back(expect_ident("binder name"));
    expect(Tok::Dot, "'.' after binders");
    for (const auto& b : binders) scope.push_back(b);
    TermPtr body = parse_term_level();
    scope.resize(scope.size() - binders.size());
    for (auto it = binders.rbegin(); it != binders.rend(); ++it)
      body = mk_lam(std::move(body), *it);
    return body;
  }

  TermPtr parse_app() {
    TermPtr head = parse_item();
    while (true) {
      if (cur().kind == Tok::Backslash) {
        head = mk_app(std::move(head), parse_lambda());
        break;
      }
      if (!starts_atom(cur().kind)) break;
      head = mk_app(std::move(head), parse_item());
    }
    return head;
  }

  TermPtr parse_item() {
    if (cur().kind == Tok::KwRec) {
      bump();
      TermPtr body =
          cur().kind == Tok::Backslash ? parse_lambda() : parse_atom();
      return mk_rec(std::move(body));
    }
    return parse_atom();
  }

  TermPtr parse_atom() {
    SourceLoc at = cur().loc;
    switch (cur().kind) {
      case Tok::LParen: {
        bump();
        TermPtr t = parse_term_level();
        expect(Tok::RParen, "')'");
        return t;
      }
      case Tok::KwBot:
        bump();
        return mk_bottom();
      case Tok::KwNil:
        bump();
        return mk_nil();
      case Tok::KwLeft: {
        bump();
        expect(Tok::LParen, "'(' after Left");
        TermPtr t = parse_term_level();
        expect(Tok::RParen, "')'");
        return mk_left(std::move(t));
      }
      case Tok::KwRight: {
        bump();
        expect(Tok::LParen, "'(' after Right");
        TermPtr t = parse_term_level();
        expect(Tok::RParen, "')'");
        return mk_right(std::move(t));
      }
      case Tok::KwPair: {
        bump();
        expect(Tok::LParen, "'(' after Pair");
        TermPtr a = parse_term_level();
        expect(Tok::Comma, "','");
        TermPtr b = parse_term_level();
        expect(Tok::RParen, "')'");
        return mk_pair(std::move(a), std::move(b));
      }
      case Tok::KwAmb: {
        bump();
        expect(Tok::LParen, "'(' after Amb");
        TermPtr a = parse_term_level();
        expect(Tok::Comma, "','");
        TermPtr b = parse_term_level();
        expect(Tok::RParen, "')'");
        return mk_amb(std::move(a), std::move(b));
      }
      case Tok::KwCase:
        return parse_case();
      case Tok::Ident: {
        std::string name = cur().text;
        int idx = resolve(name);
        if (idx < 0)
          throw ParseError("unbound name '" + name + "'", at.line, at.col);
        bump();
        return mk_var(idx, name);
      }
      default:
        fail("expected a term");
    }
  }

  TermPtr parse_case() {
    expect(Tok::KwCase, "'case'");
    TermPtr scrut = parse_term_level();
    expect(Tok::KwOf, "'of'");
    expect(Tok::LBrace, "'{'");
    std::vector<TermPtr> bodies(kClauseCount, mk_bottom());
    std::vector<std::string> hints(7);
    std::vector<bool> seen(kClauseCount, false);
    while (cur().kind != Tok::RBrace) {
      parse_clause(bodies, hints, seen);
      if (cur().kind == Tok::Semi) {
        bump();
        continue;
      }
      break;
    }
    expect(Tok::RBrace, "'}'");
    return mk_case(std::move(scrut), std::move(bodies), std::move(hints));
  }

  void parse_clause(std::vector<TermPtr>& bodies, std::vector<std::string>& hints,
                    std::vector<bool>& seen) {
    SourceLoc at = cur().loc;
    Clause c;
    std::vector<std::string> binders;
    switch (cur().kind) {
      case Tok::KwNil:
        c = Clause::Nil;
        bump();
        break;
      case Tok::KwLeft: {
        c = Clause::Left;
        bump();
        expect(Tok::LParen, "'('");
        hints[0] = expect_ident("binder");
        binders.push_back(hints[0]);
        expect(Tok::RParen, "')'");
        break;
      }
      case Tok::KwRight: {
        c = Clause::Right;
        bump();
        expect(Tok::LParen, "'('");
        hints[1] = expect_ident("binder");
        binders.push_back(hints[1]);
        expect(Tok::RParen, "')'");
        break;
      }
      case Tok::KwPair: {
        c = Clause::Pair;
        bump();
        expect(Tok::LParen, "'('");
        hints[2] = expect_ident("binder");
        expect(Tok::Comma, "','");
        hints[3] = expect_ident("binder");
        expect(Tok::RParen, "')'");
        binders = {hints[2], hints[3]};
        break;
      }
      case Tok::KwAmb: {
        c = Clause::Amb;
        bump();
        expect(Tok::LParen, "'('");
        hints[4] = expect_ident("binder");
        expect(Tok::Comma, "','");
        hints[5] = expect_ident("binder");
        expect(Tok::RParen, "')'");
        binders = {hints[4], hints[5]};
        break;
      }
      case Tok::KwFun: {
        c = Clause::Fun;
        bump();
        expect(Tok::LParen, "'('");
        hints[6] = expect_ident("binder");
        binders.push_back(hints[6]);
        expect(Tok::RParen, "')'");
        break;
      }
      default:
        fail("expected a case clause");
    }
    if (seen[static_cast<int>(c)])
      throw ParseError(std::string("duplicate clause '") + clause_name(c) + "'",
                       at.line, at.col);
    seen[static_cast<int>(c)] = true;
    expect(Tok::Arrow, "'->'");
    for (const auto& b : binders) scope.push_back(b);
    bodies[static_cast<int>(c)] = parse_term_level();
    scope.resize(scope.size() - binders.size());
  }

  // ---- types ----

  int resolve_tyvar(const std::string& name) const {
    for (int i = static_cast<int>(tyscope.size()) - 1; i >= 0; --i)
      if (tyscope[i] == name) return static_cast<int>(tyscope.size()) - 1 - i;
    return -1;
  }

  TyPtr parse_type_level() {
    DepthGuard guard(*this);
    if (cur().kind == Tok::KwFix) return parse_fix();
    TyPtr lhs = parse_ty_sum();
    if (cur().kind == Tok::Arrow) {
      bump();
      return ty_arrow(std::move(lhs), parse_type_level());
    }
    return lhs;
  }

  TyPtr parse_fix() {
    expect(Tok::KwFix, "'fix'");
    std::string name = expect_ident("type variable");
    expect(Tok::Dot, "'.'");
    tyscope.push_back(name);
    TyPtr body = parse_type_level();
    tyscope.pop_back();
    return ty_fix(std::move(body), name);
  }

  TyPtr parse_ty_sum() {
    TyPtr lhs = parse_ty_prod();
    while (cur().kind == Tok::Plus) {
      bump();
      lhs = ty_sum(std::move(lhs), parse_ty_prod());
    }
    return lhs;
  }

  TyPtr parse_ty_prod() {
    TyPtr lhs = parse_ty_atom();
    while (cur().kind == Tok::Star) {
      bump();
      lhs = ty_prod(std::move(lhs), parse_ty_atom());
    }
    return lhs;
  }

  TyPtr parse_ty_atom() {
    SourceLoc at = cur().loc;
    switch (cur().kind) {
      case Tok::Number:
        if (cur().text == "1") {
          bump();
          return ty_unit();
        }
        fail("the only numeric type is the unit type 1");
      case Tok::LParen: {
        bump();
        TyPtr t = parse_type_level();
        expect(Tok::RParen, "')'");
        return t;
      }
      case Tok::KwFix:
        return parse_fix();
      case Tok::Ident: {
        std::string name = cur().text;
        if (name == "A") {
          bump();
          expect(Tok::LParen, "'(' after A");
          TyPtr t = parse_type_level();
          expect(Tok::RParen, "')'");
          return ty_amb(std::move(t));
        }
        int idx = resolve_tyvar(name);
        if (idx < 0)
          throw ParseError("unbound type variable '" + name + "'", at.line, at.col);
        bump();
        return ty_var(idx, name);
      }
      default:
        fail("expected a type");
    }
  }

  // ---- program items ----

  std::vector<RawItem> parse_items(const ImportHook& on_import) {
    std::vector<RawItem> items;
    while (cur().kind != Tok::End) {
      SourceLoc at = cur().loc;
      switch (cur().kind) {
        case Tok::KwImport: {
          bump();
          if (cur().kind != Tok::String) fail("expected an import string");
          std::string target = cur().text;
          bump();
          expect(Tok::Semi, "';'");
          if (!on_import)
            throw ParseError("imports are not allowed here", at.line, at.col);
          for (auto& n : on_import(target, at)) scope.push_back(std::move(n));
          items.push_back({RawItem::Kind::Import, target, nullptr, nullptr, at});
          break;
        }
        case Tok::KwLet: {
          bump();
          std::string name = expect_ident("definition name");
          expect(Tok::Equals, "'='");
          TermPtr body = parse_term_level();
          expect(Tok::Semi, "';'");
          items.push_back({RawItem::Kind::Let, name, std::move(body), nullptr, at});
          scope.push_back(items.back().name);
          break;
        }
        case Tok::KwDef: {
          bump();
          std::string name = expect_ident("definition name");
          expect(Tok::Colon, "':'");
          TyPtr ty = parse_type_level();
          expect(Tok::Equals, "'='");
          TermPtr body = parse_term_level();
          expect(Tok::Semi, "';'");
          items.push_back({RawItem::Kind::Def, name, std::move(body), std::move(ty), at});
          scope.push_back(items.back().name);
          break;
        }
        default:
          fail("expected 'import', 'let' or 'def'");
      }
    }
    return items;
  }
};

}  // namespace

TermPtr parse_term(const std::string& src, const std::vector<std::string>& scope) {
  Parser p(src, scope);
  TermPtr t = p.parse_term_level();
  if (p.cur().kind != Tok::End) p.fail("trailing input after term");
  return t;
}

TyPtr parse_ty(const std::string& src, const std::vector<std::string>& scope) {
  Parser p(src, {});
  p.tyscope = scope;
  TyPtr t = p.parse_type_level();
  if (p.cur().kind != Tok::End) p.fail("trailing input after type");
  return t;
}

std::vector<RawItem> parse_program(const std::string& src,
                                   std::vector<std::string> scope,
                                   const ImportHook& on_import) {
  Parser p(src, std::move(scope));
  return p.parse_items(on_import);
}

}  // namespace amb
