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

// Affix stripper for Kiswahili verb forms. It is only meant to make
// derivationally related forms collide (anza / anzishwa / ilianzishwa all
// reduce to "anz"), not to produce linguistic roots.
//
// Rules are applied until none fires, so the result is a fixed point and
// stem(stem(w)) == stem(w) by construction.

#include <array>
#include <string>
#include <string_view>

#include "tagger.hpp"

namespace swasn {

namespace {

constexpr std::size_t kMinStem = 3;

// Subject + tense blocks. Longest entries first so that "iliyo" wins over
// "ili".
constexpr std::array<std::string_view, 36> kPrefixes = {
    "ilivyo", "alivyo", "iliyo", "aliyo", "wali", "wame", "wana", "wata",
    "tuli",   "tume",   "tuna",  "tuta",  "nili", "nime", "nina", "nita",
    "yali",   "yame",   "zili",  "zime",  "vili", "kili", "kime", "ali",
    "ame",    "ana",    "ata",   "ili",   "ime",  "ina",  "ita",  "iki",
    "uli",    "ume",    "una",   "uta"};

// Passive / causative / applicative endings and the locative -ni.
constexpr std::array<std::string_view, 14> kSuffixes = {
    "ishwa", "eshwa", "ishia", "eshea", "isha", "esha", "liwa",
    "lewa",  "iwa",   "ewa",   "sha",   "wa",   "ni",   "a"};

bool strip_prefix(std::string& w) {
  for (auto p : kPrefixes) {
    if (w.size() >= p.size() + kMinStem && w.starts_with(p)) {
      w.erase(0, p.size());
      return true;
    }
  }
  return false;
}

bool strip_suffix(std::string& w) {
  for (auto s : kSuffixes) {
    if (w.size() >= s.size() + kMinStem && w.ends_with(s)) {
      w.resize(w.size() - s.size());
      return true;
    }
  }
  return false;
}

}  // namespace

std::string stem(std::string_view word) {
  std::string w = to_lower_ascii(word);
  while (strip_prefix(w) || strip_suffix(w)) {
  }
  return w;
}

}  // namespace swasn
