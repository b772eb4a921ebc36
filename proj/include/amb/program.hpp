#pragma once

#include <string>
#include <vector>

#include "amb/parser.hpp"
#include "amb/term.hpp"
#include "amb/types.hpp"

namespace amb {

// A loaded program is a telescope of named entries. Entry bodies are
// stored both raw (free indices referring to earlier entries, most recent
// first) and closed (every earlier entry substituted in).
struct ProgramEntry {
  std::string name;
  TermPtr raw;
  TyPtr ascription;  // null for let entries
  TermPtr closed;
  SourceLoc loc;
};

struct Program {
  std::vector<ProgramEntry> entries;

  // Last entry with the given name, or null.
  const ProgramEntry* find(const std::string& name) const;

  // Closed form of a named entry; throws std::out_of_range when absent.
  TermPtr closed_term(const std::string& name) const;
};

// Loads a program file. Imports resolve relative to the importing file;
// the special target "std" names the embedded prelude. A file imported
// twice is spliced once.
Program load_program_file(const std::string& path);

// Loads a program from a string; "std" is the only usable import target.
Program load_program_string(const std::string& src,
                            const std::string& chunk_name = "<string>");

// Type-checks every def entry against its ascription, under the context
// of the earlier ascribed entries (let entries are substituted away).
// Throws TypeError on the first failure.
void check_program(const Program& p);

// Type-checks a single def entry the same way.
void check_entry(const Program& p, const std::string& name);

// Text of the embedded prelude (programs/std.amb).
const std::string& std_prelude_text();

// The embedded prelude, loaded once.
const Program& std_program();

}  // namespace amb
