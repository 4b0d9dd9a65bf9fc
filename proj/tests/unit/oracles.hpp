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

// Reference implementations the engine is checked against. They favour
// obviousness over speed.

#include <algorithm>
#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "extractor.hpp"
#include "store.hpp"

namespace swasn::testing {

using Spo = std::tuple<std::string, std::string, std::string>;

// A noun is in a verb's scope when no verb or connector lies strictly
// between them.
inline std::vector<Spo> verb_oracle(const Phrase& p) {
  const auto& t = p.tokens;
  auto blocks = [](PosTag tag) { return is_verb(tag) || tag == PosTag::GEN_CON; };
  auto clear_between = [&](std::size_t a, std::size_t b) {
    for (std::size_t k = a + 1; k < b; ++k) {
      if (blocks(t[k].tag)) return false;
    }
    return true;
  };
  std::vector<Spo> out;
  for (std::size_t v = 0; v < t.size(); ++v) {
    if (!is_verb(t[v].tag)) continue;
    for (std::size_t l = 0; l < v; ++l) {
      if (!is_noun(t[l].tag) || !clear_between(l, v)) continue;
      for (std::size_t r = v + 1; r < t.size(); ++r) {
        if (!(is_noun(t[r].tag) || t[r].tag == PosTag::NUM) || !clear_between(v, r)) continue;
        out.emplace_back(to_lower_ascii(t[l].surface), to_lower_ascii(t[v].surface),
                         to_lower_ascii(t[r].surface));
      }
    }
  }
  return out;
}

// Every branch against every triple, in order.
inline std::vector<Binding> scan_oracle(const TripleStore& store, const UnionQuery& q) {
  std::vector<Binding> out;
  for (std::size_t b = 0; b < q.patterns.size(); ++b) {
    const auto& pat = q.patterns[b];
    const Term* terms[3] = {&pat.subject, &pat.predicate, &pat.object};
    for (const auto& t : store.triples()) {
      const std::string* vals[3] = {&t.subject, &t.predicate, &t.object};
      bool ok = true;
      std::vector<std::pair<std::string, std::string>> vars;
      for (int k = 0; k < 3 && ok; ++k) {
        const Term& term = *terms[k];
        if (term.kind() == Term::Kind::Bound) {
          ok = term.value() == *vals[k];
        } else if (term.kind() == Term::Kind::Stem) {
          ok = stem(*vals[k]) == term.value();
        } else {
          auto it = std::find_if(vars.begin(), vars.end(),
                                 [&](const auto& v) { return v.first == term.value(); });
          if (it == vars.end()) vars.emplace_back(term.value(), *vals[k]);
          else ok = it->second == *vals[k];
        }
      }
      if (ok) out.push_back(Binding{vars, t, b});
    }
  }
  return out;
}

inline std::string random_local(std::mt19937& rng, int alphabet) {
  // Small alphabets force collisions so patterns actually match.
  static const char* kNames[] = {"chelsea", "ni", "klabu", "mwaka", "1905", "ya",
                                 "mpira",   "a_b", "x1",   "london", "anza", "miaka"};
  return kNames[rng() % std::min<int>(alphabet, std::size(kNames))];
}

inline TripleStore random_store(std::mt19937& rng, std::size_t max_triples, int alphabet) {
  TripleStore store;
  const std::size_t n = rng() % (max_triples + 1);
  for (std::size_t i = 0; i < n * 4 && store.size() < n; ++i) {
    store.insert(Triple(random_local(rng, alphabet), random_local(rng, alphabet),
                        random_local(rng, alphabet)));
  }
  return store;
}

inline Term random_term(std::mt19937& rng, int alphabet) {
  static const char* kVars[] = {"s", "p", "o"};
  switch (rng() % 3) {
    case 0: return Term::variable(kVars[rng() % 3]);
    case 1: return Term::bound(random_local(rng, alphabet));
    default: return Term::stem_of(random_local(rng, alphabet));
  }
}

inline UnionQuery random_query(std::mt19937& rng, int alphabet, int max_branches) {
  UnionQuery q;
  for (int b = 1 + static_cast<int>(rng() % max_branches); b > 0; --b) {
    q.patterns.push_back(
        {random_term(rng, alphabet), random_term(rng, alphabet), random_term(rng, alphabet)});
  }
  return q;
}

}  // namespace swasn::testing
