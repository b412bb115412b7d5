#ifndef DEFZERO_H
#define DEFZERO_H

/* C interface to the defzero library. Reports are delivered as JSON lines
 * through a callback; the string passed to the callback is only valid for the
 * duration of the call. */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define DZ_API __declspec(dllexport)
#elif defined(__GNUC__)
#define DZ_API __attribute__((visibility("default")))
#else
#define DZ_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum dz_status {
  DZ_OK = 0,
  DZ_INVALID_ARGUMENT,
  DZ_DIMENSION_MISMATCH,
  DZ_DESK_SCALE_EXCEEDED,
  DZ_NOT_NORMAL,
  DZ_NOT_NORMAL_P_SUBGROUP,
  DZ_NOT_Y_FIXED,
  DZ_NOT_COMMUTATIVE,
  DZ_CROSS_CHECK_FAILED,
  DZ_VERIFICATION_FAILED,
  DZ_SPAN_MISMATCH,
  DZ_NOT_SYMMETRIC_QUOTIENT,
  DZ_NOT_AN_IDEAL,
  DZ_RADICAL_MISMATCH,
  DZ_FIELD_NOT_SPLITTING,
  DZ_SPLIT_FAILURE,
  DZ_DEGREE_RECOVERY_FAILED,
  DZ_PARSE,
  DZ_IO,
  DZ_INTERNAL
} dz_status;

typedef struct dz_group dz_group;

typedef struct dz_options {
  uint32_t prime;
  const char* q_selector; /* NULL means "auto" */
  uint32_t field_degree;  /* 0: splitting degree */
  uint64_t seed;
  uint32_t jobs;
  uint64_t max_order;
  int dump_bases;
  int timings;
} dz_options;

typedef struct dz_corpus_summary {
  uint64_t entries;
  uint64_t triples;
  uint64_t passed;
  uint64_t failed;
  uint64_t errors;
} dz_corpus_summary;

typedef void (*dz_line_fn)(const char* line, void* user);

DZ_API const char* dz_version(void);
DZ_API const char* dz_status_name(dz_status status);
/* Message of the last failure on the calling thread; empty after success. */
DZ_API const char* dz_last_error(void);

DZ_API void dz_options_init(dz_options* options);

/* spec: a group file path, or a builtin such as "symmetric 4". */
DZ_API dz_status dz_group_load(const char* spec, uint64_t max_order, dz_group** out);
DZ_API void dz_group_free(dz_group* group);
DZ_API uint64_t dz_group_order(const dz_group* group);

/* One line per resolved Q. *all_ok is set to 1 when every report matches and
 * every property verdict holds. */
DZ_API dz_status dz_verify(const dz_group* group, const dz_options* options, dz_line_fn sink, void* user,
                           int* all_ok);
DZ_API dz_status dz_inspect(const dz_group* group, const dz_options* options, dz_line_fn sink, void* user);
/* Entry failures are reported in the stream; the status only covers failures
 * to read or parse the corpus file. */
DZ_API dz_status dz_corpus_run(const char* path, const dz_options* options, dz_line_fn sink, void* user,
                               dz_corpus_summary* summary);

#ifdef __cplusplus
}
#endif

#endif /* DEFZERO_H */
