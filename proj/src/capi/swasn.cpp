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

#include "swasn/swasn.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <string>
#include <vector>

#include "json.hpp"

#include "error.hpp"
#include "extractor.hpp"
#include "qa.hpp"
#include "store.hpp"
#include "tagger.hpp"

struct swasn_lexicon {
  swasn::Lexicon lexicon;
};

struct swasn_store {
  swasn::TripleStore store;
};

struct swasn_query {
  swasn::UnionQuery query;
};

struct swasn_result {
  std::vector<swasn::Binding> bindings;
  swasn::TripleStore prefix_holder;  // empty store carrying the base prefix
};

struct swasn_dataset {
  std::vector<swasn::QaExample> examples;
};

struct swasn_report {
  swasn::QaReport report;
};

namespace {

thread_local std::string g_last_error;

swasn_status fail(swasn_status status, const char* message) {
  g_last_error = message;
  return status;
}

// Runs `fn`, translating core exceptions into status codes.
template <typename Fn>
swasn_status guard(Fn&& fn) noexcept {
  try {
    fn();
    return SWASN_OK;
  } catch (const swasn::InvalidArgument& e) {
    return fail(SWASN_ERR_INVALID_ARGUMENT, e.what());
  } catch (const swasn::IoError& e) {
    return fail(SWASN_ERR_IO, e.what());
  } catch (const swasn::ParseError& e) {
    return fail(SWASN_ERR_PARSE, e.what());
  } catch (const swasn::DatasetError& e) {
    return fail(SWASN_ERR_DATASET, e.what());
  } catch (const swasn::EmptyKeywordsError& e) {
    return fail(SWASN_ERR_EMPTY_KEYWORDS, e.what());
  } catch (const std::out_of_range& e) {
    return fail(SWASN_ERR_OUT_OF_RANGE, e.what());
  } catch (const std::bad_alloc&) {
    return fail(SWASN_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(SWASN_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(SWASN_ERR_INTERNAL, "unknown error");
  }
}

void require(const void* p, const char* name) {
  if (p == nullptr) throw swasn::InvalidArgument(std::string(name) + " must not be NULL");
}

char* dup_string(const std::string& s) {
  auto* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

swasn::ExtractionConfig to_config(const swasn_options* options) {
  swasn_options o;
  swasn_options_init(&o);
  if (options != nullptr) o = *options;
  swasn::ExtractionConfig config;
  config.enable_other_rules = o.enable_other_rules != 0;
  config.enable_locative_split = o.enable_locative_split != 0;
  config.max_comma_recursion = o.max_comma_recursion;
  config.tagger.propn_heuristic = o.propn_heuristic != 0;
  if (config.max_comma_recursion < 1) {
    throw swasn::InvalidArgument("max_comma_recursion must be at least 1");
  }
  return config;
}

const swasn::Binding& binding_at(const swasn_result* result, size_t index) {
  require(result, "result");
  if (index >= result->bindings.size()) throw std::out_of_range("binding index out of range");
  return result->bindings[index];
}

}  // namespace

extern "C" {

const char* swasn_version(void) { return "1.0.0"; }

const char* swasn_last_error(void) { return g_last_error.c_str(); }

const char* swasn_status_name(swasn_status status) {
  switch (status) {
    case SWASN_OK: return "ok";
    case SWASN_ERR_INVALID_ARGUMENT: return "invalid argument";
    case SWASN_ERR_IO: return "i/o error";
    case SWASN_ERR_PARSE: return "parse error";
    case SWASN_ERR_DATASET: return "dataset error";
    case SWASN_ERR_EMPTY_KEYWORDS: return "no keywords";
    case SWASN_ERR_OUT_OF_RANGE: return "out of range";
    case SWASN_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void swasn_string_free(char* s) { std::free(s); }

void swasn_options_init(swasn_options* options) {
  if (options == nullptr) return;
  options->enable_other_rules = 1;
  options->enable_locative_split = 1;
  options->max_comma_recursion = 16;
  options->propn_heuristic = 1;
}

const char* swasn_pos_tag_name(swasn_pos_tag tag) {
  if (static_cast<int>(tag) < 0 || static_cast<std::size_t>(tag) >= swasn::kPosTagCount) {
    return nullptr;
  }
  return swasn::to_string(static_cast<swasn::PosTag>(tag)).data();
}

const char* swasn_question_type_name(swasn_question_type type) {
  if (static_cast<int>(type) < 0 || static_cast<int>(type) >= SWASN_QUESTION_TYPE_COUNT) {
    return nullptr;
  }
  return swasn::to_string(static_cast<swasn::QuestionType>(type)).data();
}

const char* swasn_question_type_label(swasn_question_type type) {
  if (static_cast<int>(type) < 0 || static_cast<int>(type) >= SWASN_QUESTION_TYPE_COUNT) {
    return nullptr;
  }
  return swasn::column_label(static_cast<swasn::QuestionType>(type)).data();
}

// ---- lexicon ---------------------------------------------------------------

swasn_status swasn_lexicon_create(swasn_lexicon** out) {
  return guard([&] {
    require(out, "out");
    *out = new swasn_lexicon{swasn::Lexicon()};
  });
}

swasn_status swasn_lexicon_load(const char* path, swasn_lexicon** out) {
  return guard([&] {
    require(path, "path");
    require(out, "out");
    *out = new swasn_lexicon{swasn::load_lexicon(path)};
  });
}

swasn_status swasn_lexicon_parse(const char* text, swasn_lexicon** out) {
  return guard([&] {
    require(text, "text");
    require(out, "out");
    *out = new swasn_lexicon{swasn::parse_lexicon(text)};
  });
}

swasn_status swasn_lexicon_add(swasn_lexicon* lexicon, const char* surface, swasn_pos_tag tag,
                               const char* lemma) {
  return guard([&] {
    require(lexicon, "lexicon");
    require(surface, "surface");
    if (static_cast<int>(tag) < 0 || static_cast<std::size_t>(tag) >= swasn::kPosTagCount) {
      throw swasn::InvalidArgument("tag out of range");
    }
    std::optional<std::string> l;
    if (lemma != nullptr && *lemma != '\0') l = lemma;
    lexicon->lexicon.add(surface, static_cast<swasn::PosTag>(tag), std::move(l));
  });
}

size_t swasn_lexicon_size(const swasn_lexicon* lexicon) {
  return lexicon == nullptr ? 0 : lexicon->lexicon.size();
}

swasn_status swasn_lexicon_lookup(const swasn_lexicon* lexicon, const char* surface,
                                  swasn_pos_tag* tag, int* found) {
  return guard([&] {
    require(lexicon, "lexicon");
    require(surface, "surface");
    require(tag, "tag");
    const auto* entry = lexicon->lexicon.lookup(surface);
    *tag = static_cast<swasn_pos_tag>(entry ? entry->tag : lexicon->lexicon.default_tag());
    if (found != nullptr) *found = entry ? 1 : 0;
  });
}

void swasn_lexicon_free(swasn_lexicon* lexicon) { delete lexicon; }

// ---- text processing -------------------------------------------------------

swasn_status swasn_stem(const char* word, char** out) {
  return guard([&] {
    require(word, "word");
    require(out, "out");
    *out = dup_string(swasn::stem(word));
  });
}

swasn_status swasn_tag_text(const swasn_lexicon* lexicon, const char* text,
                            const swasn_options* options, char** out) {
  return guard([&] {
    require(lexicon, "lexicon");
    require(text, "text");
    require(out, "out");
    const auto config = to_config(options);
    std::string listing;
    bool first = true;
    for (const auto& sentence : swasn::tag_text(text, lexicon->lexicon, config.tagger)) {
      if (!first) listing.push_back('\n');
      first = false;
      for (const auto& token : sentence.tokens) {
        listing += token.surface;
        listing.push_back('\t');
        listing += swasn::to_string(token.tag);
        listing.push_back('\n');
      }
    }
    *out = dup_string(listing);
  });
}

// ---- triple store ----------------------------------------------------------

swasn_status swasn_store_create(const char* base_prefix, swasn_store** out) {
  return guard([&] {
    require(out, "out");
    std::string prefix = base_prefix ? base_prefix : std::string(swasn::kDefaultBasePrefix);
    *out = new swasn_store{swasn::TripleStore(std::move(prefix))};
  });
}

swasn_status swasn_store_extract(swasn_store* store, const swasn_lexicon* lexicon,
                                 const char* text, const swasn_options* options) {
  return guard([&] {
    require(store, "store");
    require(lexicon, "lexicon");
    require(text, "text");
    for (auto& triple : swasn::extract_all(text, lexicon->lexicon, to_config(options))) {
      store->store.insert(std::move(triple));
    }
  });
}

swasn_status swasn_store_insert(swasn_store* store, const char* subject, const char* predicate,
                                const char* object, int* inserted) {
  return guard([&] {
    require(store, "store");
    require(subject, "subject");
    require(predicate, "predicate");
    require(object, "object");
    bool added = store->store.insert(swasn::Triple(subject, predicate, object));
    if (inserted != nullptr) *inserted = added ? 1 : 0;
  });
}

size_t swasn_store_size(const swasn_store* store) {
  return store == nullptr ? 0 : store->store.size();
}

swasn_status swasn_store_get(const swasn_store* store, size_t index, const char** subject,
                             const char** predicate, const char** object) {
  return guard([&] {
    require(store, "store");
    if (index >= store->store.size()) throw std::out_of_range("triple index out of range");
    const auto& t = store->store.triples()[index];
    if (subject) *subject = t.subject.c_str();
    if (predicate) *predicate = t.predicate.c_str();
    if (object) *object = t.object.c_str();
  });
}

const char* swasn_store_base_prefix(const swasn_store* store) {
  return store == nullptr ? nullptr : store->store.base_prefix().c_str();
}

swasn_status swasn_store_parse_turtle(const char* text, swasn_store** out) {
  return guard([&] {
    require(text, "text");
    require(out, "out");
    *out = new swasn_store{swasn::parse_turtle(text)};
  });
}

swasn_status swasn_store_to_turtle(const swasn_store* store, char** out) {
  return guard([&] {
    require(store, "store");
    require(out, "out");
    *out = dup_string(swasn::serialize_turtle(store->store));
  });
}

swasn_status swasn_store_to_dot(const swasn_store* store, char** out) {
  return guard([&] {
    require(store, "store");
    require(out, "out");
    *out = dup_string(swasn::export_dot(store->store));
  });
}

void swasn_store_free(swasn_store* store) { delete store; }

// ---- queries ---------------------------------------------------------------

swasn_status swasn_query_parse(const char* text, swasn_query** out) {
  return guard([&] {
    require(text, "text");
    require(out, "out");
    *out = new swasn_query{swasn::parse_query(text)};
  });
}

swasn_status swasn_query_from_question(const swasn_lexicon* lexicon, const char* question,
                                       const swasn_options* options, swasn_query** out) {
  return guard([&] {
    require(lexicon, "lexicon");
    require(question, "question");
    require(out, "out");
    swasn::QaOptions qa;
    qa.extraction = to_config(options);
    *out = new swasn_query{swasn::build_question_query(question, lexicon->lexicon, qa)};
  });
}

size_t swasn_query_branch_count(const swasn_query* query) {
  return query == nullptr ? 0 : query->query.patterns.size();
}

swasn_status swasn_query_to_string(const swasn_query* query, char** out) {
  return guard([&] {
    require(query, "query");
    require(out, "out");
    *out = dup_string(swasn::format_query(query->query));
  });
}

void swasn_query_free(swasn_query* query) { delete query; }

swasn_status swasn_store_execute(const swasn_store* store, const swasn_query* query,
                                 swasn_result** out) {
  return guard([&] {
    require(store, "store");
    require(query, "query");
    require(out, "out");
    auto bindings = swasn::execute_union(store->store, query->query);
    *out = new swasn_result{std::move(bindings), swasn::TripleStore(store->store.base_prefix())};
  });
}

size_t swasn_result_count(const swasn_result* result) {
  return result == nullptr ? 0 : result->bindings.size();
}

swasn_status swasn_result_get(const swasn_result* result, size_t index, const char** subject,
                              const char** predicate, const char** object, size_t* branch) {
  return guard([&] {
    const auto& b = binding_at(result, index);
    if (subject) *subject = b.triple.subject.c_str();
    if (predicate) *predicate = b.triple.predicate.c_str();
    if (object) *object = b.triple.object.c_str();
    if (branch) *branch = b.branch;
  });
}

const char* swasn_result_value(const swasn_result* result, size_t index, const char* variable) {
  if (result == nullptr || variable == nullptr || index >= result->bindings.size()) {
    return nullptr;
  }
  const std::string* value = result->bindings[index].find(variable);
  return value ? value->c_str() : nullptr;
}

swasn_status swasn_result_format(const swasn_result* result, char** out) {
  return guard([&] {
    require(result, "result");
    require(out, "out");
    *out = dup_string(swasn::format_bindings(result->prefix_holder, result->bindings));
  });
}

swasn_status swasn_result_to_json(const swasn_result* result, char** out) {
  return guard([&] {
    require(result, "result");
    require(out, "out");
    const auto& prefix = result->prefix_holder;
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& b : result->bindings) {
      nlohmann::ordered_json vars = nlohmann::ordered_json::object();
      for (const auto& [name, value] : b.variables) vars[name] = prefix.expand(value);
      rows.push_back({{"branch", b.branch},
                      {"bindings", std::move(vars)},
                      {"triple",
                       {prefix.expand(b.triple.subject), prefix.expand(b.triple.predicate),
                        prefix.expand(b.triple.object)}}});
    }
    *out = dup_string(rows.dump(2) + "\n");
  });
}

void swasn_result_free(swasn_result* result) { delete result; }

// ---- question answering ----------------------------------------------------

swasn_question_type swasn_classify_question(const char* question) {
  if (question == nullptr) return SWASN_Q_OTHER;
  return static_cast<swasn_question_type>(swasn::classify_question(question));
}

int swasn_exact_match(const char* prediction, const char* const* gold_answers,
                      size_t gold_count) {
  if (prediction == nullptr || (gold_answers == nullptr && gold_count > 0)) return 0;
  std::vector<std::string> gold;
  for (size_t i = 0; i < gold_count; ++i) {
    if (gold_answers[i] != nullptr) gold.emplace_back(gold_answers[i]);
  }
  return swasn::exact_match(std::string(prediction), gold) ? 1 : 0;
}

swasn_status swasn_answer_question(const swasn_lexicon* lexicon, const char* context,
                                   const char* question, const swasn_options* options,
                                   char** answer, swasn_question_type* type) {
  return guard([&] {
    require(lexicon, "lexicon");
    require(context, "context");
    require(question, "question");
    require(answer, "answer");
    swasn::QaOptions qa;
    qa.extraction = to_config(options);
    swasn::QaExample example{"adhoc", std::nullopt, context, question, {""}};
    const auto outcome = swasn::answer_example(example, lexicon->lexicon, qa);
    *answer = outcome.prediction ? dup_string(*outcome.prediction) : nullptr;
    if (type) *type = static_cast<swasn_question_type>(outcome.type);
  });
}

swasn_status swasn_dataset_load(const char* path, swasn_dataset** out) {
  return guard([&] {
    require(path, "path");
    require(out, "out");
    *out = new swasn_dataset{swasn::load_dataset(path)};
  });
}

swasn_status swasn_dataset_parse(const char* json_text, swasn_dataset** out) {
  return guard([&] {
    require(json_text, "json_text");
    require(out, "out");
    *out = new swasn_dataset{swasn::parse_dataset(json_text)};
  });
}

size_t swasn_dataset_size(const swasn_dataset* dataset) {
  return dataset == nullptr ? 0 : dataset->examples.size();
}

swasn_status swasn_dataset_get(const swasn_dataset* dataset, size_t index, const char** id,
                               const char** context, const char** question,
                               size_t* gold_count) {
  return guard([&] {
    require(dataset, "dataset");
    if (index >= dataset->examples.size()) throw std::out_of_range("example index out of range");
    const auto& e = dataset->examples[index];
    if (id) *id = e.id.c_str();
    if (context) *context = e.context.c_str();
    if (question) *question = e.question.c_str();
    if (gold_count) *gold_count = e.gold_answers.size();
  });
}

const char* swasn_dataset_gold(const swasn_dataset* dataset, size_t index, size_t gold_index) {
  if (dataset == nullptr || index >= dataset->examples.size()) return nullptr;
  const auto& gold = dataset->examples[index].gold_answers;
  return gold_index < gold.size() ? gold[gold_index].c_str() : nullptr;
}

void swasn_dataset_free(swasn_dataset* dataset) { delete dataset; }

swasn_status swasn_evaluate(const swasn_dataset* dataset, const swasn_lexicon* lexicon,
                            const swasn_options* options, const char* const* stop_words,
                            size_t stop_word_count, unsigned threads, swasn_report** out) {
  return guard([&] {
    require(dataset, "dataset");
    require(lexicon, "lexicon");
    require(out, "out");
    swasn::QaOptions qa;
    qa.extraction = to_config(options);
    if (stop_words != nullptr) {
      qa.stop_words.clear();
      for (size_t i = 0; i < stop_word_count; ++i) {
        if (stop_words[i] != nullptr) qa.stop_words.emplace_back(stop_words[i]);
      }
    }
    *out = new swasn_report{swasn::evaluate(dataset->examples, lexicon->lexicon, qa, threads)};
  });
}

swasn_status swasn_report_counts(const swasn_report* report, swasn_question_type type,
                                 size_t* total, size_t* correct) {
  return guard([&] {
    require(report, "report");
    if (static_cast<int>(type) < 0 || static_cast<int>(type) >= SWASN_QUESTION_TYPE_COUNT) {
      throw std::out_of_range("question type out of range");
    }
    const auto& c = report->report.counts(static_cast<swasn::QuestionType>(type));
    if (total) *total = c.total;
    if (correct) *correct = c.correct;
  });
}

size_t swasn_report_total(const swasn_report* report) {
  return report == nullptr ? 0 : report->report.total();
}

size_t swasn_report_correct(const swasn_report* report) {
  return report == nullptr ? 0 : report->report.correct();
}

double swasn_report_exact_match(const swasn_report* report) {
  return report == nullptr ? 0.0 : report->report.exact_match();
}

swasn_status swasn_report_to_table(const swasn_report* report, char** out) {
  return guard([&] {
    require(report, "report");
    require(out, "out");
    *out = dup_string(swasn::format_report_table(report->report));
  });
}

swasn_status swasn_report_to_json(const swasn_report* report, char** out) {
  return guard([&] {
    require(report, "report");
    require(out, "out");
    *out = dup_string(swasn::format_report_json(report->report));
  });
}

void swasn_report_free(swasn_report* report) { delete report; }

}  // extern "C"
