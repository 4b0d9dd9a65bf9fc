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

#pragma once

#include <array>
#include <cstddef>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "extractor.hpp"
#include "store.hpp"
#include "tagger.hpp"

namespace swasn {

enum class QuestionType { DateYear, Num, What, DefineHowWhy, Where, Which, Who, Other };

inline constexpr std::size_t kQuestionTypeCount = 8;

inline constexpr std::array<QuestionType, kQuestionTypeCount> kAllQuestionTypes = {
    QuestionType::DateYear, QuestionType::Num,   QuestionType::What,
    QuestionType::DefineHowWhy, QuestionType::Where, QuestionType::Which,
    QuestionType::Who,      QuestionType::Other};

// "DATE_YEAR", "NUM", ...
std::string_view to_string(QuestionType type);
// Report column heading: "Date/Yr", "Num", ..., "Define, How, Why", ...
std::string_view column_label(QuestionType type);

struct QaExample {
  std::string id;
  std::optional<std::string> title;
  std::string context;
  std::string question;
  std::vector<std::string> gold_answers;
};

// SQuAD v1.1 layout. The top level may be {"data": [...]}, a bare array of
// articles, or a single article object. Throws IoError / DatasetError.
std::vector<QaExample> load_dataset(const std::filesystem::path& path);
std::vector<QaExample> parse_dataset(std::string_view json_text,
                                     std::string_view source = "<memory>");

QuestionType classify_question(std::string_view question);

// Interrogatives that never count as content keywords.
const std::vector<std::string>& default_stop_words();

struct QaOptions {
  ExtractionConfig extraction;
  std::vector<std::string> stop_words = default_stop_words();
};

// Content keywords of a question become stem-matched branches:
// (k ?p ?o) and (?s ?p k) for nouns, (?s k ?o) for words whose stem is a
// lexicon verb stem. Throws EmptyKeywordsError when nothing remains.
UnionQuery build_question_query(std::string_view question, const Lexicon& lexicon,
                                const QaOptions& options = {});

// Picks an answer among the subject/object values bound by `bindings`.
// Candidates are ranked by type preference, then by how many distinct
// question keywords reach them, then by first appearance.
std::optional<std::string> select_answer(const UnionQuery& query,
                                         std::span<const Binding> bindings,
                                         QuestionType type);

// Lowercase, trim, collapse whitespace, strip surrounding punctuation,
// drop digit-grouping commas.
std::string normalize_answer(std::string_view answer);

bool exact_match(const std::optional<std::string>& prediction,
                 std::span<const std::string> gold_answers);

struct QaOutcome {
  QuestionType type = QuestionType::Other;
  std::optional<std::string> prediction;
  bool correct = false;
};

// Full per-example pipeline. Never throws for content problems: an empty
// context or a keyword-less question yields an incorrect outcome.
QaOutcome answer_example(const QaExample& example, const Lexicon& lexicon,
                         const QaOptions& options = {});

class QaReport {
 public:
  struct Counts {
    std::size_t total = 0;
    std::size_t correct = 0;

    friend bool operator==(const Counts&, const Counts&) = default;
  };

  void add(QuestionType type, bool correct);
  // Associative and commutative; used to combine per-thread partial reports.
  void merge(const QaReport& other);

  const Counts& counts(QuestionType type) const {
    return per_type_[static_cast<std::size_t>(type)];
  }
  std::size_t total() const;
  std::size_t correct() const;
  // correct / total, 0 for an empty report.
  double exact_match() const;

  friend bool operator==(const QaReport&, const QaReport&) = default;

 private:
  std::array<Counts, kQuestionTypeCount> per_type_{};
};

QaReport evaluate(std::span<const QaExample> dataset, const Lexicon& lexicon,
                  const QaOptions& options = {}, unsigned threads = 1);

// Aligned table: type columns, Total row, Correct (EM) row, then the overall
// exact match percentage. The Other column only appears when non-empty.
std::string format_report_table(const QaReport& report);
std::string format_report_json(const QaReport& report);

}  // namespace swasn
