/* C interface to the length and depth engine.
 *
 * Every function that can fail returns an ld_status. On failure the context
 * keeps a message (ld_last_error) and, for parse errors, a byte offset into
 * the input (ld_last_error_position). Strings returned through char** are
 * heap-allocated and must be released with ld_free_string.
 *
 * Characteristics are passed as integers: 0 or a prime. */
#ifndef LENDEPTH_H
#define LENDEPTH_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define LD_API __declspec(dllexport)
#else
#define LD_API __attribute__((visibility("default")))
#endif

/* Version of the JSON documents produced below. */
#define LD_JSON_SCHEMA_VERSION 1

typedef struct ld_context ld_context;

typedef enum ld_status {
  LD_OK = 0,
  LD_INVALID_ARGUMENT = 1, /* null pointer or unknown option value */
  LD_PARSE_ERROR = 2,      /* input text rejected: grammar, unknown type, bad characteristic */
  LD_INTERNAL_ERROR = 3,   /* an engine invariant failed */
  LD_UNSUPPORTED = 4,      /* input outside what the engine can answer */
  LD_UNCERTIFIABLE = 5,    /* verification: some step has no stored witness */
  LD_REFUTED = 6,          /* verification: some step is provably not maximal */
  LD_VIOLATED = 7,         /* sweep: a bound check failed */
  LD_IO_ERROR = 8          /* data file could not be read */
} ld_status;

typedef enum ld_chain_mode { LD_CHAIN_LONGEST = 0, LD_CHAIN_SHORTEST = 1 } ld_chain_mode;

typedef struct ld_sweep_range {
  uint32_t max_rank;  /* simple types of rank <= max_rank */
  uint64_t max_p;     /* characteristics 0 and every prime <= max_p */
  uint32_t max_k;     /* powers S^k, 2 <= k <= max_k, for the S^k bound */
} ld_sweep_range;

LD_API const char* ld_version(void);
LD_API const char* ld_status_name(ld_status status);

/* db_path may be NULL: the file named by LENDEPTH_MAXSUBDB, else the built-in data. */
LD_API ld_status ld_context_create(const char* db_path, ld_context** out);
LD_API void ld_context_destroy(ld_context* ctx);
LD_API const char* ld_last_error(const ld_context* ctx);
/* SIZE_MAX when the last error carries no position. */
LD_API size_t ld_last_error_position(const ld_context* ctx);
/* Version string of the loaded subgroup database. */
LD_API const char* ld_database_version(const ld_context* ctx);

LD_API ld_status ld_length(ld_context* ctx, const char* expr, uint64_t* out);
LD_API ld_status ld_depth(ld_context* ctx, const char* expr, uint64_t characteristic, uint64_t* lower,
                          uint64_t* upper);

/* dim, length, depth interval with provenance, chain difference and ratio. */
LD_API ld_status ld_invariants_json(ld_context* ctx, const char* expr, uint64_t characteristic, char** out_json);

/* name: "depth-lowrank", "depth-exceptional" or "depth-char0". */
LD_API ld_status ld_table_json(ld_context* ctx, const char* name, char** out_json);

/* Certificate text and a JSON summary; either output pointer may be NULL. */
LD_API ld_status ld_chain(ld_context* ctx, const char* expr, uint64_t characteristic, ld_chain_mode mode,
                          char** out_certificate, char** out_json);

/* Returns LD_OK when every step is certified, LD_UNCERTIFIABLE or LD_REFUTED otherwise. */
LD_API ld_status ld_verify(ld_context* ctx, const char* certificate_text, char** out_json);

/* bound: "cd-bound", "simple-cd", "ss-cd", "cr-bound", "summ", "half-dim".
 * Returns LD_VIOLATED when any check fails. */
LD_API ld_status ld_sweep_json(ld_context* ctx, const char* bound, const ld_sweep_range* range, char** out_json);

LD_API void ld_free_string(char* s);

#ifdef __cplusplus
}
#endif

#endif
