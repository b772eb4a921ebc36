// Command-line front end; talks to the core through the C API only.

#include <cstdint>
#include <cstdio>
#include <string>

#include <CLI11.hpp>

#include "amb.h"

namespace {

// 0 ok, 1 parse, 2 type, 3 out-of-fuel, 4 internal
int exit_code(amb_status s) {
  switch (s) {
    case AMB_OK: return 0;
    case AMB_ERR_PARSE: return 1;
    case AMB_ERR_TYPE: return 2;
    case AMB_ERR_FUEL: return 3;
    case AMB_ERR_INTERNAL: return 4;
    case AMB_ERR_USAGE: return 1;
  }
  return 4;
}

int report(amb_status s, char* err) {
  if (s != AMB_OK) {
    std::fprintf(stderr, "amb: %s: %s\n", amb_status_name(s),
                 err ? err : "(no detail)");
    amb_string_free(err);
  }
  return exit_code(s);
}

struct ProgramHandle {
  amb_program* p = nullptr;
  ~ProgramHandle() { amb_program_free(p); }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"interpreter and test bench for a lambda calculus with "
               "concurrent choice"};
  app.require_subcommand(1);

  std::string file, main_name, sched = "rr", literal;
  std::string trace_path, record_path;
  std::uint64_t fuel = 100000, digits = 8, width = 4096;
  bool as_json = false;

  CLI::App* check = app.add_subcommand("check", "parse and type-check a program file");
  check->add_option("file", file, "program file")->required();

  CLI::App* stream = app.add_subcommand("stream", "emit digits of a stream definition");
  stream->add_option("file", file, "program file")->required();
  stream->add_option("--main", main_name, "entry definition")->required();
  stream->add_option("--digits", digits, "number of digits to emit");
  stream->add_option("--fuel", fuel, "step budget per digit");
  stream->add_option("--sched", sched, "rr | random:SEED | recorded:PATH");
  stream->add_option("--trace", trace_path, "write a step trace (one record per line)");
  stream->add_option("--record", record_path, "write the decision list for replay");
  stream->add_flag("--json", as_json, "json output");

  CLI::App* explore = app.add_subcommand("explore", "enumerate reachable snapshots");
  explore->add_option("file", file, "program file")->required();
  explore->add_option("--main", main_name, "entry definition")->required();
  explore->add_option("--fuel", fuel, "parallel step bound");
  explore->add_option("--width", width, "frontier size bound");
  explore->add_flag("--json", as_json, "json output");

  CLI::App* data = app.add_subcommand("data", "data(.) of a constructor literal");
  data->add_option("literal", literal, "value literal, e.g. 'Amb(Left(Nil), bot)'")
      ->required();

  CLI11_PARSE(app, argc, argv);

  char* err = nullptr;
  char* out = nullptr;

  if (data->parsed()) {
    amb_status s = amb_data_of_literal(literal.c_str(), &out, &err);
    if (s != AMB_OK) return report(s, err);
    std::printf("%s\n", out);
    amb_string_free(out);
    return 0;
  }

  ProgramHandle prog;
  amb_status s = amb_program_load_file(file.c_str(), &prog.p, &err);
  if (s != AMB_OK) return report(s, err);

  if (check->parsed()) {
    s = amb_program_check(prog.p, &err);
    if (s != AMB_OK) return report(s, err);
    std::printf("ok: %zu definitions\n", amb_program_size(prog.p));
    return 0;
  }

  amb_run_opts opts{};
  opts.main_name = main_name.c_str();
  opts.fuel = fuel;
  opts.digits = digits;
  opts.width = width;
  opts.sched = sched.c_str();
  opts.json = as_json ? 1 : 0;
  opts.trace_path = trace_path.empty() ? nullptr : trace_path.c_str();
  opts.record_path = record_path.empty() ? nullptr : record_path.c_str();

  if (stream->parsed()) {
    s = amb_program_stream(prog.p, &opts, &out, &err);
  } else {
    s = amb_program_explore(prog.p, &opts, &out, &err);
  }
  if (s != AMB_OK) return report(s, err);
  std::printf("%s\n", out);
  amb_string_free(out);
  return 0;
}
