#include "amb.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <memory>

#include <json.hpp>

#include "amb/engine.hpp"
#include "amb/gray.hpp"
#include "amb/printer.hpp"
#include "amb/program.hpp"
#include "amb/value.hpp"

using nlohmann::json;

struct amb_program {
  amb::Program program;
};

namespace {

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void set_err(char** err, const std::string& msg) {
  if (err) *err = dup_string(msg);
}

// Runs f, translating exceptions into status codes.
template <typename F>
amb_status guarded(char** err, F&& f) {
  try {
    return f();
  } catch (const amb::ParseError& e) {
    set_err(err, e.what());
    return AMB_ERR_PARSE;
  } catch (const amb::TypeError& e) {
    set_err(err, e.what());
    return AMB_ERR_TYPE;
  } catch (const std::out_of_range& e) {
    set_err(err, e.what());
    return AMB_ERR_USAGE;
  } catch (const std::invalid_argument& e) {
    set_err(err, e.what());
    return AMB_ERR_USAGE;
  } catch (const std::exception& e) {
    set_err(err, e.what());
    return AMB_ERR_INTERNAL;
  }
}

std::vector<amb::RecordedDecision> read_decisions(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open recorded schedule '" + path + "'");
  std::vector<amb::RecordedDecision> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    json j = json::parse(line);
    amb::RecordedDecision d;
    for (const auto& e : j.at("path")) d.path.push_back(e.get<int>());
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "budgets")
      d.decision = amb::ChoiceDecision::budgets(j.at("l").get<unsigned>(),
                                                j.at("r").get<unsigned>());
    else if (kind == "pick-left")
      d.decision = amb::ChoiceDecision::pick_left();
    else if (kind == "pick-right")
      d.decision = amb::ChoiceDecision::pick_right();
    else if (kind == "head")
      d.decision = amb::ChoiceDecision::head_step();
    else
      throw std::invalid_argument("unknown decision kind '" + kind + "'");
    out.push_back(std::move(d));
  }
  return out;
}

void write_decisions(const std::string& path,
                     const std::vector<amb::RecordedDecision>& ds) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write '" + path + "'");
  for (const auto& d : ds) {
    json j;
    j["path"] = d.path;
    switch (d.decision.kind) {
      case amb::ChoiceDecision::Kind::Budgets:
        j["kind"] = "budgets";
        j["l"] = d.decision.left_steps;
        j["r"] = d.decision.right_steps;
        break;
      case amb::ChoiceDecision::Kind::PickLeft: j["kind"] = "pick-left"; break;
      case amb::ChoiceDecision::Kind::PickRight: j["kind"] = "pick-right"; break;
      case amb::ChoiceDecision::Kind::HeadStep: j["kind"] = "head"; break;
    }
    out << j.dump() << "\n";
  }
}

std::unique_ptr<amb::Scheduler> scheduler_from_spec(const std::string& spec) {
  if (spec == "rr") return amb::make_round_robin_scheduler();
  if (spec.rfind("random:", 0) == 0) {
    std::string seed_text = spec.substr(7);
    if (seed_text.empty())
      throw std::invalid_argument("random scheduler requires a seed: random:SEED");
    return amb::make_random_scheduler(std::stoull(seed_text));
  }
  if (spec.rfind("recorded:", 0) == 0)
    return amb::make_recorded_scheduler(read_decisions(spec.substr(9)));
  throw std::invalid_argument("unknown scheduler '" + spec +
                              "' (expected rr, random:SEED or recorded:PATH)");
}

enum class DigitMode { Signed, Gray, Generic };

DigitMode digit_mode_for(const amb::TyPtr& stream_ty) {
  auto [k, core] = amb::amb_normal_form(stream_ty);
  (void)k;
  if (core->kind != amb::TyKind::Prod)
    throw amb::TypeError("main does not have a stream type: " +
                         amb::print_ty(stream_ty));
  const amb::TyPtr& elem = core->kids[0];
  amb::TyPtr two = amb::ty_sum(amb::ty_unit(), amb::ty_unit());
  amb::TyPtr three = amb::ty_sum(two, amb::ty_unit());
  if (amb::ty_equal(elem, three)) return DigitMode::Signed;
  if (amb::ty_equal(elem, two)) return DigitMode::Gray;
  return DigitMode::Generic;
}

std::string render_digit(const amb::ValuePtr& v, DigitMode mode) {
  switch (mode) {
    case DigitMode::Signed:
      if (auto d = amb::sd_digit_of_value(v)) return std::to_string(*d);
      if (v->kind == amb::ValueKind::Bot) return "_";
      return amb::render_value(v);
    case DigitMode::Gray: {
      auto d = amb::gray_digit_of_value(v);
      if (d == amb::GrayDigit::L) return "L";
      if (d == amb::GrayDigit::R) return "R";
      if (d == amb::GrayDigit::Undef) return "_";
      return amb::render_value(v);
    }
    case DigitMode::Generic:
      return amb::render_value(v);
  }
  return "?";
}

const amb::ProgramEntry& require_main(const amb_program* p, const amb_run_opts* opts) {
  if (!opts || !opts->main_name)
    throw std::invalid_argument("a --main definition name is required");
  if (opts->fuel == 0) throw std::invalid_argument("fuel must be positive");
  const amb::ProgramEntry* e = p->program.find(opts->main_name);
  if (!e)
    throw std::out_of_range("no definition named '" +
                            std::string(opts->main_name) + "'");
  return *e;
}

}  // namespace

extern "C" {

const char* amb_status_name(amb_status s) {
  switch (s) {
    case AMB_OK: return "ok";
    case AMB_ERR_PARSE: return "parse error";
    case AMB_ERR_TYPE: return "type error";
    case AMB_ERR_FUEL: return "out of fuel";
    case AMB_ERR_INTERNAL: return "internal error";
    case AMB_ERR_USAGE: return "usage error";
  }
  return "unknown";
}

amb_status amb_program_load_file(const char* path, amb_program** out, char** err) {
  return guarded(err, [&]() {
    if (!path || !out) {
      set_err(err, "load_file: null argument");
      return AMB_ERR_USAGE;
    }
    auto p = std::make_unique<amb_program>();
    p->program = amb::load_program_file(path);
    *out = p.release();
    return AMB_OK;
  });
}

amb_status amb_program_load_string(const char* src, amb_program** out, char** err) {
  return guarded(err, [&]() {
    if (!src || !out) {
      set_err(err, "load_string: null argument");
      return AMB_ERR_USAGE;
    }
    auto p = std::make_unique<amb_program>();
    p->program = amb::load_program_string(src);
    *out = p.release();
    return AMB_OK;
  });
}

void amb_program_free(amb_program* p) { delete p; }

amb_status amb_program_check(const amb_program* p, char** err) {
  return guarded(err, [&]() {
    amb::check_program(p->program);
    return AMB_OK;
  });
}

size_t amb_program_size(const amb_program* p) { return p->program.entries.size(); }

const char* amb_program_name(const amb_program* p, size_t i) {
  if (i >= p->program.entries.size()) return nullptr;
  return p->program.entries[i].name.c_str();
}

amb_status amb_program_stream(const amb_program* p, const amb_run_opts* opts,
                              char** out, char** err) {
  return guarded(err, [&]() {
    const amb::ProgramEntry& entry = require_main(p, opts);
    if (!entry.ascription)
      throw amb::TypeError("stream requires an ascribed (def) entry for '" +
                           entry.name + "'");
    DigitMode mode = digit_mode_for(entry.ascription);
    auto sched = scheduler_from_spec(opts->sched ? opts->sched : "rr");
    amb::StreamResult res =
        amb::drive_stream(entry.closed, opts->digits, opts->fuel, *sched,
                          opts->trace_path != nullptr);
    if (opts->record_path) write_decisions(opts->record_path, res.decisions);
    if (opts->trace_path) {
      std::ofstream tf(opts->trace_path);
      if (!tf)
        throw std::invalid_argument(std::string("cannot write '") +
                                    opts->trace_path + "'");
      for (const auto& line : res.trace_lines) tf << line << "\n";
    }
    if (res.out_of_fuel) {
      std::string head = amb::print_term(res.stalled);
      if (head.size() > 200) head = head.substr(0, 200) + "...";
      set_err(err, "out of fuel after " + std::to_string(res.digits.size()) +
                       " digit(s); stalled head term: " + head);
      return AMB_ERR_FUEL;
    }
    std::string text;
    if (opts->json) {
      json j;
      j["main"] = entry.name;
      j["sched"] = opts->sched ? opts->sched : "rr";
      j["fuel"] = opts->fuel;
      std::vector<std::string> toks;
      for (const auto& d : res.digits) toks.push_back(render_digit(d, mode));
      j["digits"] = toks;
      text = j.dump();
    } else {
      for (std::size_t i = 0; i < res.digits.size(); ++i) {
        if (i) text += " ";
        text += render_digit(res.digits[i], mode);
      }
    }
    if (out) *out = dup_string(text);
    return AMB_OK;
  });
}

amb_status amb_program_explore(const amb_program* p, const amb_run_opts* opts,
                               char** out, char** err) {
  return guarded(err, [&]() {
    const amb::ProgramEntry& entry = require_main(p, opts);
    amb::ExploreResult res =
        amb::explore(entry.closed, opts->fuel, opts->width ? opts->width : 4096);
    std::string text;
    if (opts->json) {
      json j;
      j["main"] = entry.name;
      j["states"] = res.states_seen;
      j["truncated"] = res.truncated;
      std::vector<std::string> vs;
      for (const auto& v : res.maximal) vs.push_back(amb::render_value(v));
      j["maximal"] = vs;
      text = j.dump();
    } else {
      text = amb::render_data_set(res.maximal);
      if (res.truncated) text += " (truncated)";
    }
    if (out) *out = dup_string(text);
    return AMB_OK;
  });
}

amb_status amb_data_of_literal(const char* literal, char** out, char** err) {
  return guarded(err, [&]() {
    if (!literal) {
      set_err(err, "data: null literal");
      return AMB_ERR_USAGE;
    }
    amb::TermPtr t = amb::parse_term(literal);
    amb::ValuePtr v = amb::value_from_literal(t);
    if (!v)
      throw amb::ParseError("not a constructor literal (only constructors, "
                            "bot and lambdas are allowed)", 1, 1);
    if (out) *out = dup_string(amb::render_data_set(amb::data_set(v)));
    return AMB_OK;
  });
}

void amb_string_free(char* s) { std::free(s); }

}  // extern "C"
