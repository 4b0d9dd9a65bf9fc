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
#include <tuple>

namespace swasn {

// Which extraction rule produced a triple.
enum class RuleId { VerbCross, GenCon, LocativeNi, CcLink, Apposition, NumAttr };

std::string_view to_string(RuleId rule);

struct Provenance {
  std::size_t sentence = 0;
  RuleId rule = RuleId::VerbCross;

  friend bool operator==(const Provenance&, const Provenance&) = default;
};

// One semantic-network edge. Names are local names under the store prefix.
// Identity (==, <, hashing) is the (subject, predicate, object) string
// triple; provenance is informational only.
struct Triple {
  std::string subject;
  std::string predicate;
  std::string object;
  std::optional<Provenance> provenance;

  Triple() = default;
  Triple(std::string s, std::string p, std::string o,
         std::optional<Provenance> prov = std::nullopt)
      : subject(std::move(s)),
        predicate(std::move(p)),
        object(std::move(o)),
        provenance(prov) {}

  auto key() const { return std::tie(subject, predicate, object); }

  friend bool operator==(const Triple& a, const Triple& b) { return a.key() == b.key(); }
  friend bool operator<(const Triple& a, const Triple& b) { return a.key() < b.key(); }
};

struct TripleHash {
  std::size_t operator()(const Triple& t) const noexcept;
};

// Non-empty, lowercase ASCII letters, digits and '_' only.
bool is_valid_local_name(std::string_view name);

}  // namespace swasn
