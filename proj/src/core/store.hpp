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
#include <span>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

#include "triple.hpp"

namespace swasn {

inline constexpr std::string_view kDefaultBasePrefix = "http://testing.123";

// scheme ":" followed by characters allowed inside an IRIREF.
bool is_valid_iri(std::string_view iri);

// Insertion-ordered set of triples. Build it single-threaded, then share it
// read-only.
class TripleStore {
 public:
  explicit TripleStore(std::string base_prefix = std::string(kDefaultBasePrefix));

  // Returns false if the triple was already present. Throws InvalidArgument
  // for names that are not valid local names.
  bool insert(Triple triple);

  bool contains(const Triple& triple) const { return index_.contains(triple); }
  std::size_t size() const noexcept { return triples_.size(); }
  bool empty() const noexcept { return triples_.empty(); }
  std::span<const Triple> triples() const noexcept { return triples_; }

  const std::string& base_prefix() const noexcept { return base_prefix_; }

  // base_prefix + "/" + local
  std::string expand(std::string_view local) const;

  friend bool operator==(const TripleStore& a, const TripleStore& b) {
    return a.base_prefix_ == b.base_prefix_ && a.triples_ == b.triples_;
  }

 private:
  std::string base_prefix_;
  std::vector<Triple> triples_;
  std::unordered_set<Triple, TripleHash> index_;
};

// One position of a triple pattern.
class Term {
 public:
  enum class Kind {
    Bound,     // exact local name
    Variable,  // ?name
    Stem,      // any local name whose stem equals `value`
  };

  static Term bound(std::string local);
  static Term variable(std::string name);
  // Stores stem(word); matches every local name with the same stem.
  static Term stem_of(std::string_view word);

  Kind kind() const noexcept { return kind_; }
  const std::string& value() const noexcept { return value_; }
  bool is_variable() const noexcept { return kind_ == Kind::Variable; }

  bool matches(std::string_view local) const;

  // ":name", "?name" or "~stem"
  std::string to_string() const;

  friend bool operator==(const Term&, const Term&) = default;

 private:
  Term(Kind kind, std::string value) : kind_(kind), value_(std::move(value)) {}

  Kind kind_;
  std::string value_;
};

struct TriplePattern {
  Term subject;
  Term predicate;
  Term object;

  friend bool operator==(const TriplePattern&, const TriplePattern&) = default;
};

struct UnionQuery {
  std::vector<TriplePattern> patterns;
};

struct Binding {
  // Distinct variables of the pattern in subject, predicate, object order.
  std::vector<std::pair<std::string, std::string>> variables;
  Triple triple;
  std::size_t branch = 0;

  const std::string* find(std::string_view variable) const;

  friend bool operator==(const Binding&, const Binding&) = default;
};

std::string serialize_turtle(const TripleStore& store);

// Accepts the prefix line with or without its terminating '.'.
// Throws ParseError with the offending line number.
TripleStore parse_turtle(std::string_view text);

std::vector<Binding> match_pattern(const TripleStore& store, const TriplePattern& pattern,
                                   std::size_t branch = 0);

// Bag union: branch results concatenated in branch order.
std::vector<Binding> execute_union(const TripleStore& store, const UnionQuery& query);

// Digraph with nodes and edges emitted in lexicographic order.
std::string export_dot(const TripleStore& store);

// Line-oriented query file: one pattern per line (`:bound`, `?var` or
// `~stem` per position), branches separated by lines reading UNION.
// Surrounding braces and a trailing '.' are tolerated.
UnionQuery parse_query(std::string_view text);
std::string format_query(const UnionQuery& query);

// One line per binding: the bound variable values as full IRIs, or the
// whole matched triple for variable-free patterns.
std::string format_bindings(const TripleStore& store, std::span<const Binding> bindings);

}  // namespace swasn
