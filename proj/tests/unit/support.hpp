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

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "extractor.hpp"
#include "tagger.hpp"

namespace swasn::testing {

inline std::string data_path(const std::string& rel) {
  return std::string(SWASN_DATA_DIR) + "/" + rel;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline const Lexicon& bundled_lexicon() {
  static const Lexicon lex = load_lexicon(data_path("lexicon/sw.tsv"));
  return lex;
}

inline const std::string& chelsea_text() {
  static const std::string text = read_file(data_path("text/chelsea.txt"));
  return text;
}

inline Token tok(std::string surface, PosTag tag, std::size_t index = 0) {
  return Token{std::move(surface), tag, std::nullopt, index};
}

// Re-indexes tokens 0..n-1.
inline TaggedSentence sentence_of(std::vector<Token> tokens) {
  for (std::size_t i = 0; i < tokens.size(); ++i) tokens[i].index = i;
  return TaggedSentence{std::move(tokens), {}};
}

inline Phrase phrase_of(std::vector<Token> tokens) {
  return Phrase{sentence_of(std::move(tokens)).tokens, {}};
}

// Random lowercase ASCII word drawn from a small syllable inventory.
inline std::string random_word(std::mt19937& rng, int min_syl = 1, int max_syl = 4) {
  static const char* kSyl[] = {"ka", "li", "mu", "ta", "ngo", "si", "we", "za",
                               "ni", "ba", "chi", "ra", "a",  "o",  "u",  "ki"};
  std::uniform_int_distribution<int> n(min_syl, max_syl);
  std::uniform_int_distribution<int> pick(0, static_cast<int>(std::size(kSyl)) - 1);
  std::string w;
  for (int i = n(rng); i > 0; --i) w += kSyl[pick(rng)];
  return w;
}

struct CommandResult {
  int status = -1;
  std::string out;
};

// Runs a shell command and captures its standard output.
inline CommandResult run_command(const std::string& cmd) {
  CommandResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

}  // namespace swasn::testing
