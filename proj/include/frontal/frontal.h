#ifndef FRONTAL_FRONTAL_H
#define FRONTAL_FRONTAL_H

#include <stddef.h>

#if defined(_WIN32)
#define FRONTAL_API __declspec(dllexport)
#else
#define FRONTAL_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum frontal_status {
  FRONTAL_OK = 0,
  FRONTAL_ERR_INVALID_ARGUMENT = 1,
  FRONTAL_ERR_PARSE = 2,
  FRONTAL_ERR_GERM = 3,
  FRONTAL_ERR_IO = 4,
  FRONTAL_ERR_INTERNAL = 5
} frontal_status;

typedef enum frontal_reading {
  FRONTAL_READING_BOTH = 0,
  FRONTAL_READING_DPLUS = 1,
  FRONTAL_READING_FULL = 2
} frontal_reading;

typedef enum frontal_format {
  FRONTAL_FORMAT_JSON = 0,
  FRONTAL_FORMAT_JSON_PRETTY = 1,
  FRONTAL_FORMAT_TEXT = 2
} frontal_format;

typedef struct frontal_options {
  int max_jet;
  frontal_reading reading;
  /* Nonzero to record wall-clock timing in reports. */
  int timing;
  /* Corpus workers; 0 picks the hardware concurrency. */
  unsigned threads;
} frontal_options;

typedef struct frontal_report frontal_report;
typedef struct frontal_corpus frontal_corpus;

FRONTAL_API const char* frontal_version(void);
FRONTAL_API const char* frontal_report_schema(void);

/* Message, line and column of the last failure on this thread. Line and
   column are 0 unless the failure was a parse error. */
FRONTAL_API const char* frontal_last_error(void);
FRONTAL_API int frontal_last_error_line(void);
FRONTAL_API int frontal_last_error_column(void);

FRONTAL_API void frontal_options_init(frontal_options* options);

/* Runs the full pipeline on (x, p, q). Parse and stage failures are recorded
   in the report; `options` may be NULL. */
FRONTAL_API frontal_status frontal_analyze(const char* name, const char* p, const char* q,
                                           const frontal_options* options, frontal_report** out);
FRONTAL_API void frontal_report_free(frontal_report* report);

/* The whole report (section NULL) or one section such as "invariants".
   Returns NULL when the section is absent. The string is owned by the
   report and stays valid until the next render call or frontal_report_free. */
FRONTAL_API const char* frontal_report_render(frontal_report* report, const char* section,
                                              frontal_format format);

FRONTAL_API int frontal_report_parse_failed(const frontal_report* report);
FRONTAL_API int frontal_report_undetermined(const frontal_report* report);
/* Number of corpus expectations that differ from the computed values. */
FRONTAL_API int frontal_report_mismatches(const frontal_report* report);
/* Human-readable mismatch list, one "key: expected X, got Y" per line. */
FRONTAL_API const char* frontal_report_mismatch_text(frontal_report* report);
FRONTAL_API const char* frontal_report_name(const frontal_report* report);
/* "ok", "failed", "skipped" or "undetermined", and the stage message; NULL
   for an unknown stage. Stages: parse, frontality, curves, finiteness,
   fitting, invariants, fold, conjecture. */
FRONTAL_API const char* frontal_report_stage_status(const frontal_report* report, const char* stage);
FRONTAL_API const char* frontal_report_stage_message(const frontal_report* report, const char* stage);

/* JSON-lines corpus: {"name", "p", "q", "expect": {...}} per line. */
FRONTAL_API frontal_status frontal_corpus_load(const char* path, frontal_corpus** out);
FRONTAL_API frontal_status frontal_corpus_run(frontal_corpus* corpus, const frontal_options* options);
FRONTAL_API size_t frontal_corpus_size(const frontal_corpus* corpus);
/* Borrowed; valid until frontal_corpus_free. NULL before frontal_corpus_run. */
FRONTAL_API frontal_report* frontal_corpus_report(frontal_corpus* corpus, size_t index);
FRONTAL_API void frontal_corpus_free(frontal_corpus* corpus);

/* JSON results returned in *json_out, released with frontal_string_free. */
FRONTAL_API frontal_status frontal_frontalise(const char* p, const char* q, int max_jet, char** json_out);
FRONTAL_API frontal_status frontal_classify(const char* p, const char* q, int max_jet, char** json_out);
/* Branches t -> (p[i](t), q[i](t)). */
FRONTAL_API frontal_status frontal_curve(const char* const* p, const char* const* q, size_t branches,
                                         int max_jet, char** json_out);
FRONTAL_API void frontal_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif
