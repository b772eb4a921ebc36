#include "amb/program.hpp"

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

namespace amb {

namespace fs = std::filesystem;

const ProgramEntry* Program::find(const std::string& name) const {
  for (auto it = entries.rbegin(); it != entries.rend(); ++it)
    if (it->name == name) return &*it;
  return nullptr;
}

TermPtr Program::closed_term(const std::string& name) const {
  const ProgramEntry* e = find(name);
  if (!e) throw std::out_of_range("no definition named '" + name + "'");
  return e->closed;
}

namespace {

struct Loader {
  Program program;
  std::vector<std::string> names;
  std::set<std::string> loaded_keys;

  void load_chunk(const std::string& src, const fs::path& origin_dir,
                  const std::string& chunk_name, bool allow_fs_imports) {
    auto hook = [&](const std::string& target,
                    SourceLoc loc) -> std::vector<std::string> {
      return handle_import(target, origin_dir, loc, allow_fs_imports);
    };
    std::vector<RawItem> items;
    try {
      items = parse_program(src, names, hook);
    } catch (ParseError& e) {
      throw ParseError(std::string(e.what()) + " [" + chunk_name + "]", e.line,
                       e.col);
    }
    bool defs_seen = false;
    for (auto& item : items) {
      if (item.kind == RawItem::Kind::Import) {
        if (defs_seen)
          throw ParseError("imports must precede definitions [" + chunk_name + "]",
                           item.loc.line, item.loc.col);
        continue;
      }
      defs_seen = true;
      ProgramEntry e;
      e.name = item.name;
      e.raw = item.term;
      e.ascription = item.type;
      e.loc = item.loc;
      e.closed = close_over_telescope(item.term);
      names.push_back(e.name);
      program.entries.push_back(std::move(e));
    }
  }

  std::vector<std::string> handle_import(const std::string& target,
                                         const fs::path& origin_dir,
                                         SourceLoc loc, bool allow_fs_imports) {
    std::string key;
    std::string src;
    fs::path next_dir;
    if (target == "std") {
      key = "<std>";
      src = std_prelude_text();
      next_dir = origin_dir;
    } else {
      if (!allow_fs_imports)
        throw ParseError("import '" + target + "' is not available here",
                         loc.line, loc.col);
      fs::path p = origin_dir / target;
      std::error_code ec;
      fs::path canon = fs::weakly_canonical(p, ec);
      key = ec ? p.string() : canon.string();
      std::ifstream in(p);
      if (!in)
        throw ParseError("cannot open import '" + p.string() + "'", loc.line,
                         loc.col);
      std::ostringstream ss;
      ss << in.rdbuf();
      src = ss.str();
      next_dir = p.parent_path();
    }
    if (loaded_keys.count(key)) return {};
    loaded_keys.insert(key);
    std::size_t before = names.size();
    load_chunk(src, next_dir, target, allow_fs_imports);
    return std::vector<std::string>(names.begin() + before, names.end());
  }

  TermPtr close_over_telescope(TermPtr t) const {
    for (auto it = program.entries.rbegin(); it != program.entries.rend(); ++it)
      t = subst_at(t, 0, it->closed);
    return t;
  }
};

}  // namespace

Program load_program_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file '" + path + "'", 0, 0);
  std::ostringstream ss;
  ss << in.rdbuf();
  Loader loader;
  loader.load_chunk(ss.str(), fs::path(path).parent_path(), path, true);
  return std::move(loader.program);
}

Program load_program_string(const std::string& src, const std::string& chunk_name) {
  Loader loader;
  loader.load_chunk(src, fs::path("."), chunk_name, false);
  return std::move(loader.program);
}

const Program& std_program() {
  static const Program p = load_program_string(std_prelude_text(), "<std>");
  return p;
}

namespace {

void check_entry_at(const Program& p, std::size_t k) {
  const ProgramEntry& e = p.entries[k];
  if (!e.ascription) return;
  // Substitute unascribed (let) entries into the body; ascribed entries
  // stay free and are typed through the context.
  TermPtr body = e.raw;
  int index = 0;
  for (std::size_t back = 0; back < k; ++back) {
    const ProgramEntry& prev = p.entries[k - 1 - back];
    if (prev.ascription) {
      ++index;
    } else {
      body = subst_at(body, index, prev.closed);
    }
  }
  TyCtx ctx;
  for (std::size_t j = 0; j < k; ++j)
    if (p.entries[j].ascription)
      ctx.entries.emplace_back(p.entries[j].name, p.entries[j].ascription);
  try {
    check_type(ctx, body, e.ascription);
  } catch (const TypeError& err) {
    throw TypeError("in definition '" + e.name + "': " + err.what(), err.term,
                    err.expected, err.actual);
  }
}

}  // namespace

void check_program(const Program& p) {
  for (std::size_t k = 0; k < p.entries.size(); ++k) check_entry_at(p, k);
}

void check_entry(const Program& p, const std::string& name) {
  for (std::size_t k = p.entries.size(); k-- > 0;)
    if (p.entries[k].name == name) {
      check_entry_at(p, k);
      return;
    }
  throw std::out_of_range("no definition named '" + name + "'");
}

}  // namespace amb
