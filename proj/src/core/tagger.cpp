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

#include "tagger.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <fstream>
#include <sstream>

#include "error.hpp"

namespace swasn {

namespace {

constexpr std::array<std::string_view, kPosTagCount> kTagNames = {
    "N", "PROPN", "V", "DEF_V", "GEN_CON", "CC", "NUM", "COMMA", "STOP", "OTHER"};

bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }
bool is_terminator(char c) { return c == '.' || c == '!' || c == '?'; }

// Multi-byte punctuation that commonly wraps words in UTF-8 prose.
constexpr std::array<std::string_view, 9> kUtf8Punct = {
    "\xE2\x80\x9C", "\xE2\x80\x9D", "\xE2\x80\x98",  // curly quotes
    "\xE2\x80\x99", "\xC2\xAB",     "\xC2\xBB",      // guillemets
    "\xE2\x80\x93", "\xE2\x80\x94", "\xE2\x80\xA6"};  // dashes, ellipsis

// Length in bytes of a punctuation character starting at `pos`, or 0.
std::size_t punct_prefix_len(std::string_view s, std::size_t pos) {
  const auto c = static_cast<unsigned char>(s[pos]);
  if (c < 0x80) return std::ispunct(c) ? 1 : 0;
  for (auto p : kUtf8Punct) {
    if (s.substr(pos).starts_with(p)) return p.size();
  }
  return 0;
}

// Length in bytes of a punctuation character ending at `end` (exclusive).
std::size_t punct_suffix_len(std::string_view s, std::size_t end) {
  const auto c = static_cast<unsigned char>(s[end - 1]);
  if (c < 0x80) return std::ispunct(c) ? 1 : 0;
  for (auto p : kUtf8Punct) {
    if (s.substr(0, end).ends_with(p)) return p.size();
  }
  return 0;
}

bool is_all_punct(std::string_view s) {
  std::size_t pos = 0;
  while (pos < s.size()) {
    std::size_t len = punct_prefix_len(s, pos);
    if (len == 0) return false;
    pos += len;
  }
  return !s.empty();
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

// Splits `core` on commas that are not flanked by digits on both sides.
void split_core(std::string_view core, std::vector<std::string>& out) {
  std::size_t start = 0;
  for (std::size_t k = 0; k < core.size(); ++k) {
    if (core[k] != ',') continue;
    bool numeric = k > 0 && k + 1 < core.size() && is_digit(core[k - 1]) &&
                   is_digit(core[k + 1]);
    if (numeric) continue;
    if (k > start) out.emplace_back(core.substr(start, k - start));
    out.emplace_back(",");
    start = k + 1;
  }
  if (start < core.size()) out.emplace_back(core.substr(start));
}

}  // namespace

std::string_view to_string(PosTag tag) {
  return kTagNames[static_cast<std::size_t>(tag)];
}

std::optional<PosTag> parse_pos_tag(std::string_view name) {
  for (std::size_t i = 0; i < kTagNames.size(); ++i) {
    if (kTagNames[i] == name) return static_cast<PosTag>(i);
  }
  // Hyphenated spellings and PROPNAME as they appear in hand-annotated data.
  if (name == "DEF-V") return PosTag::DEF_V;
  if (name == "GEN-CON") return PosTag::GEN_CON;
  if (name == "PROPNAME") return PosTag::PROPN;
  return std::nullopt;
}

std::string to_lower_ascii(std::string_view s) {
  std::string out(s);
  for (char& c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

bool is_numeral(std::string_view token) {
  // \d+(,\d+)*(\.\d+)?
  std::size_t i = 0;
  const std::size_t n = token.size();
  auto digits = [&] {
    std::size_t begin = i;
    while (i < n && is_digit(token[i])) ++i;
    return i > begin;
  };
  if (!digits()) return false;
  while (i < n && token[i] == ',') {
    ++i;
    if (!digits()) return false;
  }
  if (i < n && token[i] == '.') {
    ++i;
    if (!digits()) return false;
  }
  return i == n;
}

// ---------------------------------------------------------------------------
// Lexicon

void Lexicon::add(std::string_view surface, PosTag tag,
                  std::optional<std::string> lemma) {
  if (surface.empty()) throw InvalidArgument("lexicon surface must be non-empty");
  if (tag == PosTag::COMMA || tag == PosTag::STOP) {
    throw InvalidArgument("tag " + std::string(to_string(tag)) +
                          " is reserved for punctuation tokens");
  }
  entries_.insert_or_assign(to_lower_ascii(surface), Entry{tag, std::move(lemma)});
}

const Lexicon::Entry* Lexicon::lookup(std::string_view surface) const {
  auto it = entries_.find(to_lower_ascii(surface));
  return it == entries_.end() ? nullptr : &it->second;
}

std::vector<std::string> Lexicon::surfaces() const {
  std::vector<std::string> out;
  out.reserve(entries_.size());
  for (const auto& [surface, entry] : entries_) out.push_back(surface);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::string> Lexicon::verb_stems() const {
  std::vector<std::string> out;
  for (const auto& [surface, entry] : entries_) {
    if (is_verb(entry.tag)) out.push_back(stem(surface));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Lexicon parse_lexicon(std::string_view text, PosTag default_tag) {
  Lexicon lexicon(default_tag);
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (trim(line).empty() || trim(line).front() == '#') continue;

    std::vector<std::string_view> fields;
    std::size_t start = 0;
    for (;;) {
      std::size_t tab = line.find('\t', start);
      fields.push_back(trim(line.substr(start, tab - start)));
      if (tab == std::string_view::npos) break;
      start = tab + 1;
    }
    if (fields.size() < 2 || fields.size() > 3 || fields[0].empty()) {
      throw ParseError("expected 'surface<TAB>tag[<TAB>lemma]'", line_no);
    }
    auto tag = parse_pos_tag(fields[1]);
    if (!tag) {
      throw ParseError("unknown tag '" + std::string(fields[1]) + "'", line_no);
    }
    std::optional<std::string> lemma;
    if (fields.size() == 3 && !fields[2].empty()) lemma = std::string(fields[2]);
    try {
      lexicon.add(fields[0], *tag, std::move(lemma));
    } catch (const InvalidArgument& e) {
      throw ParseError(e.what(), line_no);
    }
    if (eol == text.size()) break;
  }
  return lexicon;
}

Lexicon load_lexicon(const std::filesystem::path& path, PosTag default_tag) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read lexicon '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_lexicon(buf.str(), default_tag);
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what(), 0);
  }
}

// ---------------------------------------------------------------------------
// Sentences and tokens

std::vector<SentenceFragment> split_sentence_spans(std::string_view text) {
  std::vector<SentenceFragment> out;
  auto flush = [&](std::size_t begin, std::size_t end) {
    while (begin < end && is_space(text[begin])) ++begin;
    while (end > begin && is_space(text[end - 1])) --end;
    if (end > begin) {
      out.push_back({std::string(text.substr(begin, end - begin)), {begin, end}});
    }
  };
  std::size_t start = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (!is_terminator(text[i])) continue;
    bool decimal = text[i] == '.' && i > 0 && i + 1 < text.size() &&
                   is_digit(text[i - 1]) && is_digit(text[i + 1]);
    if (decimal) continue;
    flush(start, i);
    start = i + 1;
  }
  flush(start, text.size());
  return out;
}

std::vector<std::string> split_sentences(std::string_view text) {
  std::vector<std::string> out;
  for (auto& fragment : split_sentence_spans(text)) out.push_back(std::move(fragment.text));
  return out;
}

std::vector<std::string> tokenize(std::string_view sentence) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < sentence.size()) {
    while (i < sentence.size() && is_space(sentence[i])) ++i;
    std::size_t j = i;
    while (j < sentence.size() && !is_space(sentence[j])) ++j;
    if (j == i) break;
    std::string_view chunk = sentence.substr(i, j - i);
    i = j;

    std::size_t begin = 0;
    std::size_t end = chunk.size();
    while (begin < end) {
      std::size_t len = punct_prefix_len(chunk, begin);
      if (len == 0) break;
      out.emplace_back(chunk.substr(begin, len));
      begin += len;
    }
    std::vector<std::string> trailing;
    while (end > begin) {
      std::size_t len = punct_suffix_len(chunk, end);
      if (len == 0) break;
      trailing.emplace_back(chunk.substr(end - len, len));
      end -= len;
    }
    if (end > begin) split_core(chunk.substr(begin, end - begin), out);
    out.insert(out.end(), trailing.rbegin(), trailing.rend());
  }
  return out;
}

TaggedSentence tag(std::span<const std::string> tokens, const Lexicon& lexicon,
                   const TaggerOptions& options) {
  TaggedSentence sentence;
  sentence.tokens.reserve(tokens.size());
  bool seen_word = false;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const std::string& surface = tokens[i];
    Token token{surface, lexicon.default_tag(), std::nullopt, i};
    const bool punct = is_all_punct(surface);
    if (surface == ",") {
      token.tag = PosTag::COMMA;
    } else if (punct && std::all_of(surface.begin(), surface.end(), is_terminator)) {
      token.tag = PosTag::STOP;
    } else if (is_numeral(surface)) {
      token.tag = PosTag::NUM;
    } else if (punct) {
      token.tag = PosTag::OTHER;
    } else if (const auto* entry = lexicon.lookup(surface)) {
      token.tag = entry->tag;
      token.lemma = entry->lemma;
    } else if (options.propn_heuristic && seen_word && !surface.empty() &&
               surface.front() >= 'A' && surface.front() <= 'Z') {
      token.tag = PosTag::PROPN;
    }
    if (!punct) seen_word = true;
    sentence.tokens.push_back(std::move(token));
  }
  return sentence;
}

std::vector<TaggedSentence> tag_text(std::string_view text, const Lexicon& lexicon,
                                     const TaggerOptions& options) {
  std::vector<TaggedSentence> out;
  for (const auto& fragment : split_sentence_spans(text)) {
    auto tokens = tokenize(fragment.text);
    auto sentence = tag(tokens, lexicon, options);
    sentence.source_span = fragment.span;
    out.push_back(std::move(sentence));
  }
  return out;
}

}  // namespace swasn
