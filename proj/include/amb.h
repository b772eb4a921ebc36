#ifndef AMB_H
#define AMB_H

/* C interface to the amb interpreter: program loading, type checking,
 * stream driving, bounded exploration and the data oracle. Handles are
 * opaque; every failing call reports a status code and, when err is
 * non-NULL, a heap-allocated message to be released with amb_string_free.
 */

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum amb_status {
  AMB_OK = 0,
  AMB_ERR_PARSE = 1,
  AMB_ERR_TYPE = 2,
  AMB_ERR_FUEL = 3,
  AMB_ERR_INTERNAL = 4,
  AMB_ERR_USAGE = 5
} amb_status;

const char* amb_status_name(amb_status s);

typedef struct amb_program amb_program;

amb_status amb_program_load_file(const char* path, amb_program** out, char** err);
amb_status amb_program_load_string(const char* src, amb_program** out, char** err);
void amb_program_free(amb_program* p);

/* Type-checks every ascribed definition, in order. */
amb_status amb_program_check(const amb_program* p, char** err);

size_t amb_program_size(const amb_program* p);
/* Name of the i-th definition; owned by the program handle. */
const char* amb_program_name(const amb_program* p, size_t i);

typedef struct amb_run_opts {
  const char* main_name;
  uint64_t fuel;           /* stream: per digit; explore: step bound */
  uint64_t digits;         /* stream only */
  uint64_t width;          /* explore only */
  const char* sched;       /* "rr" | "random:SEED" | "recorded:PATH" */
  int json;                /* 0 plain text, 1 json */
  const char* trace_path;  /* optional: line-delimited step trace */
  const char* record_path; /* optional: decision list for replay */
} amb_run_opts;

/* Emits opts->digits digits of a stream-typed main definition. */
amb_status amb_program_stream(const amb_program* p, const amb_run_opts* opts,
                              char** out, char** err);

/* Bounded exhaustive exploration of the main definition; renders the set
 * of maximal snapshots reached. */
amb_status amb_program_explore(const amb_program* p, const amb_run_opts* opts,
                               char** out, char** err);

/* data(.) of a constructor literal, rendered as a sorted set. */
amb_status amb_data_of_literal(const char* literal, char** out, char** err);

void amb_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* AMB_H */
