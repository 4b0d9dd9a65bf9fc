/*
 * Copyright (c) 2026 The swasn Authors.
 *
 *  Licensed under the Apache License, Version 2.0 (the "License");
 *  you may not use this file except in compliance with the License.
 *  You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 *  Unless required by applicable law or agreed to in writing,
 *  software distributed under the License is distributed on an "AS
 *  IS" BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either
 *  express or implied.  See the License for the specific language
 *  governing permissions and limitations under the License.
 */

/*
 * swasn: semantic networks from SVO text.
 *
 * C interface to the tagger, triple extractor, triple store and QA harness.
 * All objects are opaque handles owned by the caller and released with the
 * matching *_free function. Functions return SWASN_OK on success; on failure
 * swasn_last_error() describes the problem for the calling thread until the
 * next failing call on that thread.
 *
 * Strings returned through `char**` out-parameters are NUL-terminated UTF-8
 * and must be released with swasn_string_free. Strings returned through
 * `const char**` are borrowed from the handle and stay valid until it is
 * freed.
 *
 * Handles are not synchronized. A lexicon, store or query that is no longer
 * being modified may be read from any number of threads.
 */

#ifndef SWASN_SWASN_H
#define SWASN_SWASN_H

#include <stddef.h>

#if defined(_WIN32)
#  if defined(SWASN_BUILDING_LIBRARY)
#    define SWASN_API __declspec(dllexport)
#  else
#    define SWASN_API __declspec(dllimport)
#  endif
#else
#  define SWASN_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum swasn_status {
  SWASN_OK = 0,
  SWASN_ERR_INVALID_ARGUMENT = 1,
  SWASN_ERR_IO = 2,
  SWASN_ERR_PARSE = 3,
  SWASN_ERR_DATASET = 4,
  SWASN_ERR_EMPTY_KEYWORDS = 5,
  SWASN_ERR_OUT_OF_RANGE = 6,
  SWASN_ERR_INTERNAL = 99
} swasn_status;

/* Part-of-speech tags, in the order of the tagset. */
typedef enum swasn_pos_tag {
  SWASN_TAG_N = 0,
  SWASN_TAG_PROPN,
  SWASN_TAG_V,
  SWASN_TAG_DEF_V,
  SWASN_TAG_GEN_CON,
  SWASN_TAG_CC,
  SWASN_TAG_NUM,
  SWASN_TAG_COMMA,
  SWASN_TAG_STOP,
  SWASN_TAG_OTHER
} swasn_pos_tag;

typedef enum swasn_question_type {
  SWASN_Q_DATE_YEAR = 0,
  SWASN_Q_NUM,
  SWASN_Q_WHAT,
  SWASN_Q_DEFINE_HOW_WHY,
  SWASN_Q_WHERE,
  SWASN_Q_WHICH,
  SWASN_Q_WHO,
  SWASN_Q_OTHER
} swasn_question_type;

#define SWASN_QUESTION_TYPE_COUNT 8

typedef struct swasn_lexicon swasn_lexicon;
typedef struct swasn_store swasn_store;
typedef struct swasn_query swasn_query;
typedef struct swasn_result swasn_result;
typedef struct swasn_dataset swasn_dataset;
typedef struct swasn_report swasn_report;

typedef struct swasn_options {
  int enable_other_rules;    /* default 1 */
  int enable_locative_split; /* default 1 */
  int max_comma_recursion;   /* default 16, must be >= 1 */
  int propn_heuristic;       /* default 1 */
} swasn_options;

SWASN_API const char* swasn_version(void);
SWASN_API const char* swasn_last_error(void);
SWASN_API const char* swasn_status_name(swasn_status status);
SWASN_API void swasn_string_free(char* s);

SWASN_API void swasn_options_init(swasn_options* options);

/* Names such as "DEF_V"; NULL for out-of-range values. */
SWASN_API const char* swasn_pos_tag_name(swasn_pos_tag tag);
/* Names such as "DATE_YEAR"; NULL for out-of-range values. */
SWASN_API const char* swasn_question_type_name(swasn_question_type type);
/* Report column labels such as "Date/Yr"; NULL for out-of-range values. */
SWASN_API const char* swasn_question_type_label(swasn_question_type type);

/* ---- lexicon ---------------------------------------------------------- */

/* An empty lexicon: every unknown word gets the N tag. */
SWASN_API swasn_status swasn_lexicon_create(swasn_lexicon** out);
/* Loads a `surface<TAB>TAG[<TAB>lemma]` file. */
SWASN_API swasn_status swasn_lexicon_load(const char* path, swasn_lexicon** out);
SWASN_API swasn_status swasn_lexicon_parse(const char* text, swasn_lexicon** out);
SWASN_API swasn_status swasn_lexicon_add(swasn_lexicon* lexicon, const char* surface,
                                         swasn_pos_tag tag, const char* lemma);
SWASN_API size_t swasn_lexicon_size(const swasn_lexicon* lexicon);
/* Writes the tag of `surface`, or the default tag when it is unknown. */
SWASN_API swasn_status swasn_lexicon_lookup(const swasn_lexicon* lexicon, const char* surface,
                                            swasn_pos_tag* tag, int* found);
SWASN_API void swasn_lexicon_free(swasn_lexicon* lexicon);

/* ---- text processing -------------------------------------------------- */

SWASN_API swasn_status swasn_stem(const char* word, char** out);

/* One "surface<TAB>TAG" line per token, a blank line between sentences. */
SWASN_API swasn_status swasn_tag_text(const swasn_lexicon* lexicon, const char* text,
                                      const swasn_options* options, char** out);

/* ---- triple store ----------------------------------------------------- */

/* `base_prefix` may be NULL for the default "http://testing.123". */
SWASN_API swasn_status swasn_store_create(const char* base_prefix, swasn_store** out);
/* Runs the extraction pipeline over `text` and inserts the triples. */
SWASN_API swasn_status swasn_store_extract(swasn_store* store, const swasn_lexicon* lexicon,
                                           const char* text, const swasn_options* options);
/* `inserted` (may be NULL) receives 0 when the triple was already present. */
SWASN_API swasn_status swasn_store_insert(swasn_store* store, const char* subject,
                                          const char* predicate, const char* object,
                                          int* inserted);
SWASN_API size_t swasn_store_size(const swasn_store* store);
SWASN_API swasn_status swasn_store_get(const swasn_store* store, size_t index,
                                       const char** subject, const char** predicate,
                                       const char** object);
SWASN_API const char* swasn_store_base_prefix(const swasn_store* store);
SWASN_API swasn_status swasn_store_parse_turtle(const char* text, swasn_store** out);
SWASN_API swasn_status swasn_store_to_turtle(const swasn_store* store, char** out);
SWASN_API swasn_status swasn_store_to_dot(const swasn_store* store, char** out);
SWASN_API void swasn_store_free(swasn_store* store);

/* ---- queries ---------------------------------------------------------- */

/* Query file syntax: one `term term term` pattern per line, branches
 * separated by lines reading UNION. Terms are `:name`, `?var` or `~word`. */
SWASN_API swasn_status swasn_query_parse(const char* text, swasn_query** out);
SWASN_API swasn_status swasn_query_from_question(const swasn_lexicon* lexicon,
                                                 const char* question,
                                                 const swasn_options* options,
                                                 swasn_query** out);
SWASN_API size_t swasn_query_branch_count(const swasn_query* query);
SWASN_API swasn_status swasn_query_to_string(const swasn_query* query, char** out);
SWASN_API void swasn_query_free(swasn_query* query);

SWASN_API swasn_status swasn_store_execute(const swasn_store* store, const swasn_query* query,
                                           swasn_result** out);
SWASN_API size_t swasn_result_count(const swasn_result* result);
/* Matched triple and originating branch of one binding. */
SWASN_API swasn_status swasn_result_get(const swasn_result* result, size_t index,
                                        const char** subject, const char** predicate,
                                        const char** object, size_t* branch);
/* Value bound to `variable` (without '?'); NULL if the binding lacks it. */
SWASN_API const char* swasn_result_value(const swasn_result* result, size_t index,
                                         const char* variable);
/* One line per binding, bound values expanded to full IRIs. */
SWASN_API swasn_status swasn_result_format(const swasn_result* result, char** out);
/* JSON array of {"branch", "bindings", "triple"} objects with full IRIs. */
SWASN_API swasn_status swasn_result_to_json(const swasn_result* result, char** out);
SWASN_API void swasn_result_free(swasn_result* result);

/* ---- question answering ----------------------------------------------- */

SWASN_API swasn_question_type swasn_classify_question(const char* question);
/* Returns 1 when `prediction` matches one of the gold answers after
 * normalization; `prediction` may be NULL. */
SWASN_API int swasn_exact_match(const char* prediction, const char* const* gold_answers,
                                size_t gold_count);

/* Answers one question against a network built from `context`. `answer`
 * receives NULL when no candidate survives. */
SWASN_API swasn_status swasn_answer_question(const swasn_lexicon* lexicon, const char* context,
                                             const char* question,
                                             const swasn_options* options, char** answer,
                                             swasn_question_type* type);

SWASN_API swasn_status swasn_dataset_load(const char* path, swasn_dataset** out);
SWASN_API swasn_status swasn_dataset_parse(const char* json_text, swasn_dataset** out);
SWASN_API size_t swasn_dataset_size(const swasn_dataset* dataset);
SWASN_API swasn_status swasn_dataset_get(const swasn_dataset* dataset, size_t index,
                                         const char** id, const char** context,
                                         const char** question, size_t* gold_count);
SWASN_API const char* swasn_dataset_gold(const swasn_dataset* dataset, size_t index,
                                         size_t gold_index);
SWASN_API void swasn_dataset_free(swasn_dataset* dataset);

/* `stop_words` (may be NULL) replaces the default interrogative list.
 * `threads` of 0 or 1 evaluates sequentially. */
SWASN_API swasn_status swasn_evaluate(const swasn_dataset* dataset,
                                      const swasn_lexicon* lexicon,
                                      const swasn_options* options,
                                      const char* const* stop_words, size_t stop_word_count,
                                      unsigned threads, swasn_report** out);
SWASN_API swasn_status swasn_report_counts(const swasn_report* report, swasn_question_type type,
                                           size_t* total, size_t* correct);
SWASN_API size_t swasn_report_total(const swasn_report* report);
SWASN_API size_t swasn_report_correct(const swasn_report* report);
SWASN_API double swasn_report_exact_match(const swasn_report* report);
SWASN_API swasn_status swasn_report_to_table(const swasn_report* report, char** out);
SWASN_API swasn_status swasn_report_to_json(const swasn_report* report, char** out);
SWASN_API void swasn_report_free(swasn_report* report);

#ifdef __cplusplus
}
#endif

#endif /* SWASN_SWASN_H */
