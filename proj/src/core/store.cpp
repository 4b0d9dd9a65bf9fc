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

#include "store.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <set>
#include <sstream>

#include "error.hpp"
#include "tagger.hpp"

namespace swasn {

namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

std::string_view trim(std::string_view s) {
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && is_space(s[i])) ++i;
    std::size_t j = i;
    while (j < s.size() && !is_space(s[j])) ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

// Calls fn(line_number, line) for every line, without the line terminator.
template <typename Fn>
void for_each_line(std::string_view text, Fn&& fn) {
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    fn(++line_no, line);
    pos = eol + 1;
  }
}

// Drops a trailing `# comment` that is preceded by whitespace or starts the
// line. IRIs may legitimately contain '#'.
std::string_view strip_comment(std::string_view line) {
  for (std::size_t i = 0; i < line.size(); ++i) {
    if (line[i] == '#' && (i == 0 || is_space(line[i - 1]))) return line.substr(0, i);
  }
  return line;
}

std::string parse_local_term(std::string_view term, std::size_t line_no) {
  if (term.starts_with('<')) {
    throw ParseError("full IRIs are not supported, use ':name'", line_no);
  }
  auto colon = term.find(':');
  if (colon == std::string_view::npos) {
    throw ParseError("expected ':name', got '" + std::string(term) + "'", line_no);
  }
  if (colon != 0) {
    throw ParseError("unknown prefix '" + std::string(term.substr(0, colon)) + ":'", line_no);
  }
  std::string local(term.substr(1));
  if (!is_valid_local_name(local)) {
    throw ParseError("invalid local name '" + local + "'", line_no);
  }
  return local;
}

void append_dot_id(std::string& out, std::string_view id) {
  out.push_back('"');
  for (char c : id) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  out.push_back('"');
}

}  // namespace

bool is_valid_iri(std::string_view iri) {
  auto colon = iri.find(':');
  if (colon == std::string_view::npos || colon == 0) return false;
  if (!std::isalpha(static_cast<unsigned char>(iri[0]))) return false;
  for (std::size_t i = 1; i < colon; ++i) {
    char c = iri[i];
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '+' && c != '-' && c != '.') {
      return false;
    }
  }
  for (std::size_t i = colon + 1; i < iri.size(); ++i) {
    auto c = static_cast<unsigned char>(iri[i]);
    if (c <= 0x20 || std::string_view("<>\"{}|\\^`").find(static_cast<char>(c)) !=
                         std::string_view::npos) {
      return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// TripleStore

TripleStore::TripleStore(std::string base_prefix) : base_prefix_(std::move(base_prefix)) {
  if (!is_valid_iri(base_prefix_)) {
    throw InvalidArgument("invalid base prefix IRI '" + base_prefix_ + "'");
  }
}

bool TripleStore::insert(Triple triple) {
  for (const std::string* name : {&triple.subject, &triple.predicate, &triple.object}) {
    if (!is_valid_local_name(*name)) {
      throw InvalidArgument("invalid local name '" + *name + "'");
    }
  }
  if (!index_.insert(triple).second) return false;
  triples_.push_back(std::move(triple));
  return true;
}

std::string TripleStore::expand(std::string_view local) const {
  std::string out = base_prefix_;
  out.push_back('/');
  out.append(local);
  return out;
}

// ---------------------------------------------------------------------------
// Terms and matching

Term Term::bound(std::string local) { return Term(Kind::Bound, std::move(local)); }
Term Term::variable(std::string name) { return Term(Kind::Variable, std::move(name)); }
Term Term::stem_of(std::string_view word) { return Term(Kind::Stem, stem(word)); }

bool Term::matches(std::string_view local) const {
  switch (kind_) {
    case Kind::Variable: return true;
    case Kind::Bound: return local == value_;
    case Kind::Stem: return stem(local) == value_;
  }
  return false;
}

std::string Term::to_string() const {
  switch (kind_) {
    case Kind::Variable: return "?" + value_;
    case Kind::Bound: return ":" + value_;
    case Kind::Stem: return "~" + value_;
  }
  return value_;
}

const std::string* Binding::find(std::string_view variable) const {
  for (const auto& [name, value] : variables) {
    if (name == variable) return &value;
  }
  return nullptr;
}

std::vector<Binding> match_pattern(const TripleStore& store, const TriplePattern& pattern,
                                   std::size_t branch) {
  std::vector<Binding> out;
  const std::array<const Term*, 3> terms = {&pattern.subject, &pattern.predicate,
                                            &pattern.object};
  for (const Triple& triple : store.triples()) {
    const std::array<const std::string*, 3> values = {&triple.subject, &triple.predicate,
                                                      &triple.object};
    Binding binding;
    bool ok = true;
    for (std::size_t i = 0; i < 3 && ok; ++i) {
      if (!terms[i]->matches(*values[i])) {
        ok = false;
      } else if (terms[i]->is_variable()) {
        // A repeated variable must bind to the same value everywhere.
        if (const std::string* prior = binding.find(terms[i]->value())) {
          ok = *prior == *values[i];
        } else {
          binding.variables.emplace_back(terms[i]->value(), *values[i]);
        }
      }
    }
    if (!ok) continue;
    binding.triple = triple;
    binding.branch = branch;
    out.push_back(std::move(binding));
  }
  return out;
}

std::vector<Binding> execute_union(const TripleStore& store, const UnionQuery& query) {
  if (query.patterns.empty()) throw InvalidArgument("union query has no branches");
  std::vector<Binding> out;
  for (std::size_t b = 0; b < query.patterns.size(); ++b) {
    auto part = match_pattern(store, query.patterns[b], b);
    out.insert(out.end(), std::make_move_iterator(part.begin()),
               std::make_move_iterator(part.end()));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Turtle

std::string serialize_turtle(const TripleStore& store) {
  std::string out = "@prefix : <" + store.base_prefix() + "> .\n";
  for (const Triple& t : store.triples()) {
    out += ":" + t.subject + " :" + t.predicate + " :" + t.object + " .\n";
  }
  return out;
}

TripleStore parse_turtle(std::string_view text) {
  std::optional<TripleStore> store;
  bool seen_triple = false;
  for_each_line(text, [&](std::size_t line_no, std::string_view raw) {
    std::string_view line = trim(strip_comment(raw));
    if (line.empty()) return;

    if (line.starts_with("@prefix")) {
      if (store) throw ParseError("prefix ':' declared twice", line_no);
      if (seen_triple) throw ParseError("prefix declared after triples", line_no);
      std::string_view rest = trim(line.substr(7));
      if (!rest.starts_with(':')) {
        auto colon = rest.find(':');
        throw ParseError("unsupported prefix '" + std::string(rest.substr(0, colon)) + ":'",
                         line_no);
      }
      rest = trim(rest.substr(1));
      if (!rest.starts_with('<')) throw ParseError("expected '<IRI>' after ':'", line_no);
      auto close = rest.find('>');
      if (close == std::string_view::npos) throw ParseError("unterminated IRI", line_no);
      std::string iri(rest.substr(1, close - 1));
      std::string_view tail = trim(rest.substr(close + 1));
      if (!tail.empty() && tail != ".") {
        throw ParseError("unexpected text after prefix IRI", line_no);
      }
      if (!is_valid_iri(iri)) throw ParseError("invalid IRI '" + iri + "'", line_no);
      store.emplace(std::move(iri));
      return;
    }

    auto parts = split_ws(line);
    if (parts.size() == 3 && parts[2].size() > 1 && parts[2].ends_with('.')) {
      parts[2].remove_suffix(1);
      parts.push_back(".");
    }
    if (parts.size() != 4 || parts[3] != ".") {
      throw ParseError("expected ':subject :predicate :object .'", line_no);
    }
    if (!store) throw ParseError("prefix ':' is not declared", line_no);
    Triple triple(parse_local_term(parts[0], line_no), parse_local_term(parts[1], line_no),
                  parse_local_term(parts[2], line_no));
    store->insert(std::move(triple));
    seen_triple = true;
  });
  return store ? std::move(*store) : TripleStore();
}

// ---------------------------------------------------------------------------
// DOT

std::string export_dot(const TripleStore& store) {
  std::set<std::string> nodes;
  std::vector<Triple> edges(store.triples().begin(), store.triples().end());
  for (const Triple& t : edges) {
    nodes.insert(t.subject);
    nodes.insert(t.object);
  }
  std::sort(edges.begin(), edges.end());

  std::string out = "digraph semantic_network {\n";
  for (const auto& node : nodes) {
    out += "  ";
    append_dot_id(out, node);
    out += ";\n";
  }
  for (const Triple& t : edges) {
    out += "  ";
    append_dot_id(out, t.subject);
    out += " -> ";
    append_dot_id(out, t.object);
    out += " [label=";
    append_dot_id(out, t.predicate);
    out += "];\n";
  }
  out += "}\n";
  return out;
}

// ---------------------------------------------------------------------------
// Query files

UnionQuery parse_query(std::string_view text) {
  UnionQuery query;
  bool expect_pattern = true;
  std::size_t last_line = 0;
  for_each_line(text, [&](std::size_t line_no, std::string_view raw) {
    std::string_view line = trim(strip_comment(raw));
    if (line.empty()) return;
    last_line = line_no;
    if (line == "UNION") {
      if (expect_pattern) throw ParseError("UNION without a preceding pattern", line_no);
      expect_pattern = true;
      return;
    }
    if (!expect_pattern) {
      throw ParseError("patterns must be separated by a UNION line", line_no);
    }

    std::vector<std::string_view> terms;
    for (std::string_view part : split_ws(line)) {
      while (!part.empty() && part.front() == '{') part.remove_prefix(1);
      while (!part.empty() && (part.back() == '}' || part.back() == '.')) part.remove_suffix(1);
      if (!part.empty()) terms.push_back(part);
    }
    if (terms.size() != 3) {
      throw ParseError("expected three terms, got " + std::to_string(terms.size()), line_no);
    }
    std::array<std::optional<Term>, 3> parsed;
    for (std::size_t i = 0; i < 3; ++i) {
      std::string_view term = terms[i];
      std::string body(term.substr(1));
      switch (term.front()) {
        case '?':
          if (body.empty()) throw ParseError("empty variable name", line_no);
          parsed[i] = Term::variable(std::move(body));
          break;
        case ':':
          if (!is_valid_local_name(body)) {
            throw ParseError("invalid local name '" + body + "'", line_no);
          }
          parsed[i] = Term::bound(std::move(body));
          break;
        case '~':
          if (body.empty()) throw ParseError("empty stem term", line_no);
          parsed[i] = Term::stem_of(body);
          break;
        default:
          throw ParseError("expected ':name', '?var' or '~stem', got '" + std::string(term) +
                               "'",
                           line_no);
      }
    }
    query.patterns.push_back({std::move(*parsed[0]), std::move(*parsed[1]),
                              std::move(*parsed[2])});
    expect_pattern = false;
  });
  if (query.patterns.empty()) throw ParseError("query has no patterns", 0);
  if (expect_pattern) throw ParseError("dangling UNION at end of query", last_line);
  return query;
}

std::string format_query(const UnionQuery& query) {
  std::string out;
  for (std::size_t i = 0; i < query.patterns.size(); ++i) {
    const auto& p = query.patterns[i];
    if (i > 0) out += "UNION\n";
    out += p.subject.to_string() + " " + p.predicate.to_string() + " " +
           p.object.to_string() + "\n";
  }
  return out;
}

std::string format_bindings(const TripleStore& store, std::span<const Binding> bindings) {
  std::string out;
  for (const Binding& b : bindings) {
    if (b.variables.empty()) {
      out += store.expand(b.triple.subject) + " " + store.expand(b.triple.predicate) + " " +
             store.expand(b.triple.object);
    } else {
      for (std::size_t i = 0; i < b.variables.size(); ++i) {
        if (i > 0) out.push_back(' ');
        out += store.expand(b.variables[i].second);
      }
    }
    out.push_back('\n');
  }
  return out;
}

}  // namespace swasn
