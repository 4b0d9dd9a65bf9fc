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

#include "extractor.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>
#include <utility>

#include "error.hpp"

namespace swasn {

namespace {

using Tokens = std::vector<Token>;

bool is_scope_boundary(PosTag t) { return is_verb(t) || t == PosTag::GEN_CON; }

// Tokens that can make up the item a comma enumerates.
bool is_enumerable(PosTag t) { return is_noun(t) || t == PosTag::NUM; }

std::ptrdiff_t find_comma(const Tokens& tokens) {
  auto it = std::find_if(tokens.begin(), tokens.end(),
                         [](const Token& t) { return t.tag == PosTag::COMMA; });
  return it == tokens.end() ? -1 : it - tokens.begin();
}

Tokens slice(const Tokens& tokens, std::size_t begin, std::size_t end) {
  return Tokens(tokens.begin() + static_cast<std::ptrdiff_t>(begin),
                tokens.begin() + static_cast<std::ptrdiff_t>(end));
}

class RuleEmitter {
 public:
  RuleEmitter(const Phrase& phrase, std::vector<Triple>& out)
      : phrase_(phrase), out_(out) {}

  // Emits (subject, predicate, object) for the token pair (i, j) unless the
  // pair is already claimed or a name is unusable.
  void emit(std::size_t i, std::size_t j, std::optional<std::string> subject,
            std::optional<std::string> predicate, std::optional<std::string> object,
            RuleId rule) {
    if (claimed_.contains({i, j})) return;
    if (!subject || !predicate || !object) return;
    claimed_.insert({i, j});
    out_.emplace_back(std::move(*subject), std::move(*predicate), std::move(*object),
                      Provenance{phrase_.origin.sentence, rule});
  }

 private:
  const Phrase& phrase_;
  std::vector<Triple>& out_;
  std::set<std::pair<std::size_t, std::size_t>> claimed_;
};

}  // namespace

std::size_t count_commas(const TaggedSentence& sentence) {
  return static_cast<std::size_t>(
      std::count_if(sentence.tokens.begin(), sentence.tokens.end(),
                    [](const Token& t) { return t.tag == PosTag::COMMA; }));
}

std::vector<Phrase> split_on_comma(const TaggedSentence& sentence,
                                   std::size_t sentence_id, int max_comma_recursion) {
  if (max_comma_recursion < 1) {
    throw InvalidArgument("max_comma_recursion must be at least 1");
  }
  std::vector<Phrase> out;
  auto emit = [&](Tokens tokens) {
    std::erase_if(tokens, [](const Token& t) { return t.tag == PosTag::COMMA; });
    if (tokens.empty()) return;
    out.push_back({std::move(tokens), {sentence_id, out.size()}});
  };

  Tokens work = sentence.tokens;
  int depth = 0;
  for (;;) {
    const std::ptrdiff_t comma = find_comma(work);
    if (comma < 0) {
      emit(std::move(work));
      break;
    }
    const auto c = static_cast<std::size_t>(comma);
    Tokens before = slice(work, 0, c);
    Tokens rest = slice(work, c + 1, work.size());

    if (depth >= max_comma_recursion) {
      // Out of budget: every remaining comma just separates phrases.
      emit(std::move(before));
      Tokens piece;
      for (auto& t : rest) {
        if (t.tag == PosTag::COMMA) {
          emit(std::move(piece));
          piece.clear();
        } else {
          piece.push_back(std::move(t));
        }
      }
      emit(std::move(piece));
      break;
    }
    ++depth;

    std::ptrdiff_t last_verb = -1;
    for (std::size_t i = 0; i < c; ++i) {
      if (is_verb(work[i].tag)) last_verb = static_cast<std::ptrdiff_t>(i);
    }
    emit(std::move(before));
    if (rest.empty()) break;
    if (last_verb < 0) {
      work = std::move(rest);
      continue;
    }

    std::size_t run_begin = c;
    while (run_begin > static_cast<std::size_t>(last_verb) + 1 &&
           is_enumerable(work[run_begin - 1].tag)) {
      --run_begin;
    }
    Tokens next = run_begin < c ? slice(work, 0, run_begin)
                                : slice(work, 0, static_cast<std::size_t>(last_verb) + 1);
    next.insert(next.end(), std::make_move_iterator(rest.begin()),
                std::make_move_iterator(rest.end()));
    work = std::move(next);
  }
  return out;
}

std::optional<std::string> normalize(std::string_view surface) {
  std::string out;
  out.reserve(surface.size());
  for (char c : surface) {
    if (c >= 'A' && c <= 'Z') {
      out.push_back(static_cast<char>(c - 'A' + 'a'));
    } else if ((c >= 'a' && c <= 'z') || (c >= '0' && c <= '9')) {
      out.push_back(c);
    }
  }
  if (out.empty()) return std::nullopt;
  return out;
}

std::optional<std::string> normalize(const Token& token) { return normalize(token.surface); }

std::vector<Triple> extract_verb_triples(const Phrase& phrase) {
  std::vector<Triple> out;
  const Tokens& t = phrase.tokens;
  for (std::size_t v = 0; v < t.size(); ++v) {
    if (!is_verb(t[v].tag)) continue;

    std::vector<std::size_t> lhs;
    for (std::size_t i = v; i-- > 0;) {
      if (is_scope_boundary(t[i].tag)) break;
      if (is_noun(t[i].tag)) lhs.push_back(i);
    }
    std::reverse(lhs.begin(), lhs.end());

    std::vector<std::size_t> rhs;
    for (std::size_t j = v + 1; j < t.size(); ++j) {
      if (is_scope_boundary(t[j].tag)) break;
      if (is_noun(t[j].tag) || t[j].tag == PosTag::NUM) rhs.push_back(j);
    }
    if (lhs.empty() || rhs.empty()) continue;

    auto predicate = normalize(t[v]);
    if (!predicate) continue;
    for (std::size_t l : lhs) {
      auto subject = normalize(t[l]);
      if (!subject) continue;
      for (std::size_t r : rhs) {
        auto object = normalize(t[r]);
        if (!object) continue;
        out.emplace_back(*subject, *predicate, std::move(*object),
                         Provenance{phrase.origin.sentence, RuleId::VerbCross});
      }
    }
  }
  return out;
}

std::vector<Triple> apply_other_rules(const Phrase& phrase, const ExtractionConfig& config) {
  std::vector<Triple> out;
  if (!config.enable_other_rules) return out;

  const Tokens& t = phrase.tokens;
  const std::size_t n = t.size();
  RuleEmitter rules(phrase, out);
  auto tag_at = [&](std::size_t i) { return i < n ? t[i].tag : PosTag::STOP; };
  const std::string is_a = "ni";

  for (std::size_t i = 0; i + 2 < n; ++i) {
    if (is_noun(t[i].tag) && t[i + 1].tag == PosTag::GEN_CON && is_noun(t[i + 2].tag)) {
      rules.emit(i, i + 2, normalize(t[i]), normalize(t[i + 1]), normalize(t[i + 2]),
                 RuleId::GenCon);
    }
  }

  if (config.enable_locative_split) {
    for (std::size_t i = 0; i + 1 < n; ++i) {
      if (t[i].tag != PosTag::N || t[i + 1].tag != PosTag::PROPN) continue;
      auto noun = normalize(t[i]);
      if (!noun || noun->size() < 4 || !noun->ends_with("ni")) continue;
      noun->resize(noun->size() - 2);
      rules.emit(i, i + 1, std::move(noun), is_a, normalize(t[i + 1]), RuleId::LocativeNi);
    }
  }

  // One OTHER token may sit between the left noun and the conjunction
  // ("Uingereza iliyo na maskani").
  for (std::size_t i = 0; i < n; ++i) {
    if (!is_noun(t[i].tag)) continue;
    std::size_t k = i + 1;
    if (tag_at(k) == PosTag::OTHER && tag_at(k + 1) == PosTag::CC) ++k;
    if (tag_at(k) == PosTag::CC && is_noun(tag_at(k + 1))) {
      rules.emit(i, k + 1, normalize(t[i]), is_a, normalize(t[k + 1]), RuleId::CcLink);
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    if (t[i].tag != PosTag::N) continue;
    std::size_t j = i + 1;
    if (tag_at(j) == PosTag::OTHER && tag_at(j + 1) == PosTag::PROPN) ++j;
    if (tag_at(j) == PosTag::PROPN) {
      rules.emit(i, j, normalize(t[i]), is_a, normalize(t[j]), RuleId::Apposition);
    }
  }

  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (t[i].tag == PosTag::N && t[i + 1].tag == PosTag::NUM) {
      rules.emit(i, i + 1, normalize(t[i]), is_a, normalize(t[i + 1]), RuleId::NumAttr);
    }
  }
  return out;
}

std::vector<Triple> extract_sentences(const std::vector<TaggedSentence>& sentences,
                                      const ExtractionConfig& config) {
  std::vector<Triple> out;
  std::unordered_set<Triple, TripleHash> seen;
  auto append = [&](std::vector<Triple>&& triples) {
    for (auto& triple : triples) {
      if (seen.insert(triple).second) out.push_back(std::move(triple));
    }
  };
  for (std::size_t s = 0; s < sentences.size(); ++s) {
    for (const Phrase& phrase : split_on_comma(sentences[s], s, config.max_comma_recursion)) {
      append(extract_verb_triples(phrase));
      append(apply_other_rules(phrase, config));
    }
  }
  return out;
}

std::vector<Triple> extract_all(std::string_view text, const Lexicon& lexicon,
                                const ExtractionConfig& config) {
  return extract_sentences(tag_text(text, lexicon, config.tagger), config);
}

}  // namespace swasn
