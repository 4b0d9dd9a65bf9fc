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

// Exercises libswasn through its C interface only.

#include <string>
#include <vector>

#include "doctest.h"
#include "swasn/swasn.h"

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  swasn_string_free(s);
  return out;
}

const std::string kData = SWASN_DATA_DIR;

}  // namespace

TEST_CASE("names and defaults") {
  CHECK(std::string(swasn_version()).size() > 0);
  CHECK(std::string(swasn_pos_tag_name(SWASN_TAG_DEF_V)) == "DEF_V");
  CHECK(swasn_pos_tag_name(static_cast<swasn_pos_tag>(42)) == nullptr);
  CHECK(std::string(swasn_question_type_name(SWASN_Q_DATE_YEAR)) == "DATE_YEAR");
  CHECK(std::string(swasn_question_type_label(SWASN_Q_DEFINE_HOW_WHY)) == "Define, How, Why");
  CHECK(std::string(swasn_status_name(SWASN_ERR_PARSE)) == "parse error");
  swasn_options o;
  swasn_options_init(&o);
  CHECK(o.enable_other_rules == 1);
  CHECK(o.max_comma_recursion == 16);
}

TEST_CASE("errors are reported through status codes") {
  swasn_lexicon* lex = nullptr;
  CHECK(swasn_lexicon_load("/nonexistent.tsv", &lex) == SWASN_ERR_IO);
  CHECK(lex == nullptr);
  CHECK(std::string(swasn_last_error()).find("nonexistent") != std::string::npos);
  CHECK(swasn_lexicon_parse("x\tBOGUS\n", &lex) == SWASN_ERR_PARSE);
  CHECK(swasn_lexicon_create(nullptr) == SWASN_ERR_INVALID_ARGUMENT);

  swasn_store* store = nullptr;
  CHECK(swasn_store_parse_turtle("@prefix : <urn:x> .\n:a :b\n", &store) == SWASN_ERR_PARSE);
  CHECK(std::string(swasn_last_error()).find("line 2") != std::string::npos);
  CHECK(swasn_store_create("no iri", &store) == SWASN_ERR_INVALID_ARGUMENT);

  swasn_dataset* ds = nullptr;
  CHECK(swasn_dataset_parse("{\"data\": 3}", &ds) == SWASN_ERR_DATASET);

  swasn_query* q = nullptr;
  REQUIRE(swasn_lexicon_create(&lex) == SWASN_OK);
  CHECK(swasn_query_from_question(lex, "Nani?", nullptr, &q) == SWASN_ERR_EMPTY_KEYWORDS);
  swasn_options bad;
  swasn_options_init(&bad);
  bad.max_comma_recursion = 0;
  char* out = nullptr;
  CHECK(swasn_tag_text(lex, "a", &bad, &out) == SWASN_ERR_INVALID_ARGUMENT);
  swasn_lexicon_free(lex);

  REQUIRE(swasn_store_create(nullptr, &store) == SWASN_OK);
  const char* s = nullptr;
  CHECK(swasn_store_get(store, 0, &s, nullptr, nullptr) == SWASN_ERR_OUT_OF_RANGE);
  swasn_store_free(store);

  // Freeing NULL handles is a no-op.
  swasn_lexicon_free(nullptr);
  swasn_store_free(nullptr);
  swasn_string_free(nullptr);
}

TEST_CASE("full pipeline through the C interface") {
  swasn_lexicon* lex = nullptr;
  REQUIRE(swasn_lexicon_load((kData + "/lexicon/sw.tsv").c_str(), &lex) == SWASN_OK);
  swasn_pos_tag tag;
  int found = 0;
  REQUIRE(swasn_lexicon_lookup(lex, "NI", &tag, &found) == SWASN_OK);
  CHECK(found == 1);
  CHECK(tag == SWASN_TAG_DEF_V);

  swasn_dataset* ds = nullptr;
  REQUIRE(swasn_dataset_load((kData + "/qa/chelsea.json").c_str(), &ds) == SWASN_OK);
  REQUIRE(swasn_dataset_size(ds) == 1);
  const char *id, *context, *question;
  size_t golds = 0;
  REQUIRE(swasn_dataset_get(ds, 0, &id, &context, &question, &golds) == SWASN_OK);
  CHECK(std::string(id) == "swahili--3141018404948436558-0");
  CHECK(std::string(swasn_dataset_gold(ds, 0, 0)) == "1905");
  CHECK(swasn_dataset_gold(ds, 0, 1) == nullptr);

  swasn_store* store = nullptr;
  REQUIRE(swasn_store_create(nullptr, &store) == SWASN_OK);
  REQUIRE(swasn_store_extract(store, lex, context, nullptr) == SWASN_OK);
  CHECK(swasn_store_size(store) > 10);
  int inserted = -1;
  REQUIRE(swasn_store_insert(store, "chelsea", "ni", "klabu", &inserted) == SWASN_OK);
  CHECK(inserted == 0);

  swasn_query* q = nullptr;
  REQUIRE(swasn_query_parse(":chelsea ?p ?o\nUNION\n?s ?p :mwaka\nUNION\n:mwaka ?p ?o\n", &q) ==
          SWASN_OK);
  CHECK(swasn_query_branch_count(q) == 3);
  swasn_result* res = nullptr;
  REQUIRE(swasn_store_execute(store, q, &res) == SWASN_OK);
  REQUIRE(swasn_result_count(res) == 3);
  size_t branch = 0;
  const char *rs, *rp, *ro;
  REQUIRE(swasn_result_get(res, 2, &rs, &rp, &ro, &branch) == SWASN_OK);
  CHECK(branch == 2);
  CHECK(std::string(ro) == "1905");
  CHECK(std::string(swasn_result_value(res, 2, "o")) == "1905");
  CHECK(swasn_result_value(res, 2, "s") == nullptr);
  char* out = nullptr;
  REQUIRE(swasn_result_format(res, &out) == SWASN_OK);
  CHECK(take(out).ends_with("http://testing.123/ni http://testing.123/1905\n"));
  REQUIRE(swasn_result_to_json(res, &out) == SWASN_OK);
  CHECK(take(out).find("\"o\": \"http://testing.123/1905\"") != std::string::npos);

  REQUIRE(swasn_store_to_turtle(store, &out) == SWASN_OK);
  const std::string turtle = take(out);
  swasn_store* again = nullptr;
  REQUIRE(swasn_store_parse_turtle(turtle.c_str(), &again) == SWASN_OK);
  CHECK(swasn_store_size(again) == swasn_store_size(store));
  REQUIRE(swasn_store_to_dot(again, &out) == SWASN_OK);
  CHECK(take(out).find("\"chelsea\" -> \"klabu\" [label=\"ni\"]") != std::string::npos);

  char* answer = nullptr;
  swasn_question_type type;
  REQUIRE(swasn_answer_question(lex, context, question, nullptr, &answer, &type) == SWASN_OK);
  CHECK(type == SWASN_Q_DATE_YEAR);
  CHECK(take(answer) == "1905");
  const char* golds_arr[] = {"1905"};
  CHECK(swasn_exact_match(" 1905.", golds_arr, 1) == 1);
  CHECK(swasn_exact_match(nullptr, golds_arr, 1) == 0);

  swasn_report* rep = nullptr;
  REQUIRE(swasn_evaluate(ds, lex, nullptr, nullptr, 0, 2, &rep) == SWASN_OK);
  size_t total = 0, correct = 0;
  REQUIRE(swasn_report_counts(rep, SWASN_Q_DATE_YEAR, &total, &correct) == SWASN_OK);
  CHECK(total == 1);
  CHECK(correct == 1);
  CHECK(swasn_report_exact_match(rep) == 1.0);
  REQUIRE(swasn_report_to_table(rep, &out) == SWASN_OK);
  CHECK(take(out).ends_with("EM 100.0%\n"));
  REQUIRE(swasn_report_to_json(rep, &out) == SWASN_OK);
  CHECK(take(out).find("\"exact_match_percent\": 100.0") != std::string::npos);

  // An empty stop-word list lets interrogatives through as keywords.
  const char* none[] = {nullptr};
  swasn_report* rep2 = nullptr;
  REQUIRE(swasn_evaluate(ds, lex, nullptr, none, 0, 1, &rep2) == SWASN_OK);
  CHECK(swasn_report_total(rep2) == 1);

  REQUIRE(swasn_tag_text(lex, "Chelsea ni klabu.", nullptr, &out) == SWASN_OK);
  CHECK(take(out) == "Chelsea\tPROPN\nni\tDEF_V\nklabu\tN\n");
  REQUIRE(swasn_stem("ilianzishwa", &out) == SWASN_OK);
  std::string a = take(out);
  REQUIRE(swasn_stem("anza", &out) == SWASN_OK);
  CHECK(a == take(out));

  swasn_report_free(rep2);
  swasn_report_free(rep);
  swasn_result_free(res);
  swasn_query_free(q);
  swasn_store_free(again);
  swasn_store_free(store);
  swasn_dataset_free(ds);
  swasn_lexicon_free(lex);
}
