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
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace swasn {

// Closed part-of-speech tagset the extraction rules key on.
enum class PosTag {
  N,        // common noun
  PROPN,    // proper noun
  V,        // inflected verb
  DEF_V,    // uninflected defining verb ("ni")
  GEN_CON,  // genitive connector ("ya", "wa", ...)
  CC,       // coordinating conjunction
  NUM,      // numeral
  COMMA,
  STOP,     // sentence-final punctuation
  OTHER,
};

inline constexpr std::size_t kPosTagCount = 10;

std::string_view to_string(PosTag tag);
std::optional<PosTag> parse_pos_tag(std::string_view name);

inline bool is_verb(PosTag t) { return t == PosTag::V || t == PosTag::DEF_V; }
inline bool is_noun(PosTag t) { return t == PosTag::N || t == PosTag::PROPN; }

struct Token {
  std::string surface;
  PosTag tag = PosTag::OTHER;
  std::optional<std::string> lemma;
  std::size_t index = 0;

  friend bool operator==(const Token&, const Token&) = default;
};

struct SourceSpan {
  std::size_t begin = 0;
  std::size_t end = 0;

  friend bool operator==(const SourceSpan&, const SourceSpan&) = default;
};

struct TaggedSentence {
  std::vector<Token> tokens;
  SourceSpan source_span;

  friend bool operator==(const TaggedSentence&, const TaggedSentence&) = default;
};

// Surface-form dictionary. Immutable once built; lookups are
// case-insensitive.
class Lexicon {
 public:
  struct Entry {
    PosTag tag = PosTag::N;
    std::optional<std::string> lemma;
  };

  explicit Lexicon(PosTag default_tag = PosTag::N) : default_tag_(default_tag) {}

  // Later insertions of the same surface overwrite earlier ones.
  void add(std::string_view surface, PosTag tag,
           std::optional<std::string> lemma = std::nullopt);

  const Entry* lookup(std::string_view surface) const;

  PosTag default_tag() const noexcept { return default_tag_; }
  std::size_t size() const noexcept { return entries_.size(); }

  // Lowercased surfaces in ascending order.
  std::vector<std::string> surfaces() const;

  // Stems of every verb-tagged (V or DEF_V) entry, sorted and unique.
  std::vector<std::string> verb_stems() const;

 private:
  PosTag default_tag_;
  std::unordered_map<std::string, Entry> entries_;
};

// Reads a TSV lexicon: `surface<TAB>TAG[<TAB>lemma]`, `#` comments and
// blank lines ignored. Throws IoError / ParseError.
Lexicon load_lexicon(const std::filesystem::path& path,
                     PosTag default_tag = PosTag::N);
Lexicon parse_lexicon(std::string_view text, PosTag default_tag = PosTag::N);

struct TaggerOptions {
  // Capitalized, out-of-lexicon, non-sentence-initial words become PROPN.
  bool propn_heuristic = true;
};

struct SentenceFragment {
  std::string text;
  SourceSpan span;
};

std::vector<SentenceFragment> split_sentence_spans(std::string_view text);
std::vector<std::string> split_sentences(std::string_view text);

std::vector<std::string> tokenize(std::string_view sentence);

TaggedSentence tag(std::span<const std::string> tokens, const Lexicon& lexicon,
                   const TaggerOptions& options = {});

// split_sentence_spans + tokenize + tag for a whole document.
std::vector<TaggedSentence> tag_text(std::string_view text,
                                     const Lexicon& lexicon,
                                     const TaggerOptions& options = {});

// Digits with optional comma grouping and an optional decimal part.
bool is_numeral(std::string_view token);

std::string to_lower_ascii(std::string_view s);

// Fixed-list affix stripper; see stemmer.cpp for the lists.
std::string stem(std::string_view word);

}  // namespace swasn
