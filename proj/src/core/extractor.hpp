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

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tagger.hpp"
#include "triple.hpp"

namespace swasn {

struct ExtractionConfig {
  bool enable_other_rules = true;
  bool enable_locative_split = true;
  // Number of commas handled by enumeration splitting before the rest of a
  // sentence is cut at every remaining comma.
  int max_comma_recursion = 16;
  TaggerOptions tagger;
};

// Comma-free token run the triple rules operate on.
struct Phrase {
  struct Origin {
    std::size_t sentence = 0;
    std::size_t part = 0;  // ordinal within the sentence's decomposition

    friend bool operator==(const Origin&, const Origin&) = default;
  };

  std::vector<Token> tokens;
  Origin origin;
};

std::size_t count_commas(const TaggedSentence& sentence);

// Decomposes a sentence at its commas. Each comma is read as enumerating
// the noun run just before it: the part before the comma becomes one
// phrase, and the remainder is re-attached to the sentence prefix that
// precedes the enumerated run, then processed again. Without a noun run the
// prefix ends at the last verb before the comma; without any verb the two
// sides are treated as independent phrases.
std::vector<Phrase> split_on_comma(const TaggedSentence& sentence,
                                   std::size_t sentence_id = 0,
                                   int max_comma_recursion = 16);

// Lowercased alphanumeric local name; nullopt if nothing usable remains.
std::optional<std::string> normalize(const Token& token);
std::optional<std::string> normalize(std::string_view surface);

// Verb-anchored LHS x RHS cross product. A verb's scope on each side ends at
// the neighbouring verb, at a genitive connector, or at the phrase edge.
std::vector<Triple> extract_verb_triples(const Phrase& phrase);

// Adjacent-window attribute rules, in priority order GEN_CON, LOCATIVE_NI,
// CC_LINK, APPOSITION, NUM_ATTR. A token pair claimed by one rule is not
// re-used by a later one.
std::vector<Triple> apply_other_rules(const Phrase& phrase,
                                      const ExtractionConfig& config = {});

// Whole pipeline over a document; duplicates removed, first occurrence kept.
std::vector<Triple> extract_all(std::string_view text, const Lexicon& lexicon,
                                const ExtractionConfig& config = {});

// Same as extract_all, starting from already tagged sentences.
std::vector<Triple> extract_sentences(const std::vector<TaggedSentence>& sentences,
                                      const ExtractionConfig& config = {});

}  // namespace swasn
