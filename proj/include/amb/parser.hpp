#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "amb/term.hpp"
#include "amb/types.hpp"

namespace amb {

struct SourceLoc {
  int line = 1;
  int col = 1;
};

struct ParseError : std::runtime_error {
  int line;
  int col;
  ParseError(const std::string& msg, int l, int c)
      : std::runtime_error(msg + " (line " + std::to_string(l) + ", column " +
                           std::to_string(c) + ")"),
        line(l), col(c) {}
};

// Parses a term whose free names are resolved against `scope`
// (outermost first; the last entry is index 0).
TermPtr parse_term(const std::string& src,
                   const std::vector<std::string>& scope = {});

TyPtr parse_ty(const std::string& src,
               const std::vector<std::string>& scope = {});

// Top-level program items. Terms are telescope-open: free indices refer
// to earlier items, most recent first.
struct RawItem {
  enum class Kind { Import, Let, Def } kind;
  std::string name;  // let/def name, or the import target
  TermPtr term;      // let/def body
  TyPtr type;        // def ascription
  SourceLoc loc;
};

// Called for each import while parsing; returns the names the import
// contributes to the telescope, in order.
using ImportHook =
    std::function<std::vector<std::string>(const std::string& target, SourceLoc)>;

std::vector<RawItem> parse_program(const std::string& src,
                                   std::vector<std::string> scope,
                                   const ImportHook& on_import);

}  // namespace amb
