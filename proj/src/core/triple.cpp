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

#include "triple.hpp"

#include <functional>

namespace swasn {

std::string_view to_string(RuleId rule) {
  switch (rule) {
    case RuleId::VerbCross: return "VERB_CROSS";
    case RuleId::GenCon: return "GEN_CON";
    case RuleId::LocativeNi: return "LOCATIVE_NI";
    case RuleId::CcLink: return "CC_LINK";
    case RuleId::Apposition: return "APPOSITION";
    case RuleId::NumAttr: return "NUM_ATTR";
  }
  return "?";
}

std::size_t TripleHash::operator()(const Triple& t) const noexcept {
  std::hash<std::string> h;
  std::size_t seed = h(t.subject);
  seed ^= h(t.predicate) + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
  seed ^= h(t.object) + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
  return seed;
}

bool is_valid_local_name(std::string_view name) {
  if (name.empty()) return false;
  for (char c : name) {
    bool ok = (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_';
    if (!ok) return false;
  }
  return true;
}

}  // namespace swasn
