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

#include "qa.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <thread>

#include "json.hpp"

#include "error.hpp"

namespace swasn {

namespace {

using json = nlohmann::json;

bool is_digit(char c) { return c >= '0' && c <= '9'; }

// Lowercased words of a question with punctuation removed.
std::vector<std::string> question_words(std::string_view question) {
  std::vector<std::string> words;
  std::string current;
  for (char c : question) {
    auto uc = static_cast<unsigned char>(c);
    if (std::isalnum(uc) || uc >= 0x80 || c == '\'') {
      current.push_back(static_cast<char>(std::tolower(uc)));
    } else if (!current.empty()) {
      words.push_back(std::move(current));
      current.clear();
    }
  }
  if (!current.empty()) words.push_back(std::move(current));
  return words;
}

bool has_phrase(const std::vector<std::string>& words, std::initializer_list<std::string_view> phrase) {
  const std::size_t n = phrase.size();
  if (n == 0 || words.size() < n) return false;
  for (std::size_t i = 0; i + n <= words.size(); ++i) {
    std::size_t k = 0;
    for (auto p : phrase) {
      if (words[i + k] != p) break;
      ++k;
    }
    if (k == n) return true;
  }
  return false;
}

bool has_word(const std::vector<std::string>& words, std::initializer_list<std::string_view> any) {
  return std::any_of(words.begin(), words.end(), [&](const std::string& w) {
    return std::find(any.begin(), any.end(), w) != any.end();
  });
}

// --- dataset loading -------------------------------------------------------

const json& require(const json& node, std::string_view key, json::value_t type,
                    const std::string& path) {
  if (!node.is_object() || !node.contains(key)) {
    throw DatasetError(path + ": missing required field '" + std::string(key) + "'");
  }
  const json& child = node.at(std::string(key));
  if (child.type() != type) {
    throw DatasetError(path + "." + std::string(key) + ": expected " +
                       (type == json::value_t::array ? "array" : "string") + ", got " +
                       child.type_name());
  }
  return child;
}

void load_article(const json& article, const std::string& path, std::vector<QaExample>& out) {
  if (!article.is_object()) throw DatasetError(path + ": expected object");
  std::optional<std::string> title;
  if (article.contains("title") && article["title"].is_string()) {
    title = article["title"].get<std::string>();
  }
  const json& paragraphs = require(article, "paragraphs", json::value_t::array, path);
  for (std::size_t p = 0; p < paragraphs.size(); ++p) {
    const std::string ppath = path + ".paragraphs[" + std::to_string(p) + "]";
    const json& paragraph = paragraphs[p];
    if (!paragraph.is_object()) throw DatasetError(ppath + ": expected object");
    const auto& context = require(paragraph, "context", json::value_t::string, ppath);
    const json& qas = require(paragraph, "qas", json::value_t::array, ppath);
    for (std::size_t q = 0; q < qas.size(); ++q) {
      const std::string qpath = ppath + ".qas[" + std::to_string(q) + "]";
      const json& qa = qas[q];
      if (!qa.is_object()) throw DatasetError(qpath + ": expected object");
      QaExample example;
      example.id = require(qa, "id", json::value_t::string, qpath).get<std::string>();
      if (example.id.empty()) throw DatasetError(qpath + ".id: must be non-empty");
      example.title = title;
      example.context = context.get<std::string>();
      example.question = require(qa, "question", json::value_t::string, qpath).get<std::string>();
      const json& answers = require(qa, "answers", json::value_t::array, qpath);
      if (answers.empty()) throw DatasetError(qpath + ".answers: must be non-empty");
      for (std::size_t a = 0; a < answers.size(); ++a) {
        const std::string apath = qpath + ".answers[" + std::to_string(a) + "]";
        example.gold_answers.push_back(
            require(answers[a], "text", json::value_t::string, apath).get<std::string>());
      }
      out.push_back(std::move(example));
    }
  }
}

// --- answer selection ------------------------------------------------------

bool is_pure_numeral(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), is_digit);
}

struct Candidate {
  std::size_t first_seen = 0;
  std::set<std::string> reached_from;
};

// Lower is better; keyword candidates always rank last.
int preference(std::string_view value, bool is_keyword, QuestionType type) {
  if (is_keyword) return 9;
  const bool numeral = is_pure_numeral(value);
  switch (type) {
    case QuestionType::DateYear:
      if (numeral && value.size() == 4) return 0;
      return numeral ? 1 : 2;
    case QuestionType::Num:
      return numeral ? 0 : 1;
    default:
      return 0;
  }
}

std::string format_percent(double ratio) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f", ratio * 100.0);
  return buf;
}

}  // namespace

std::string_view to_string(QuestionType type) {
  switch (type) {
    case QuestionType::DateYear: return "DATE_YEAR";
    case QuestionType::Num: return "NUM";
    case QuestionType::What: return "WHAT";
    case QuestionType::DefineHowWhy: return "DEFINE_HOW_WHY";
    case QuestionType::Where: return "WHERE";
    case QuestionType::Which: return "WHICH";
    case QuestionType::Who: return "WHO";
    case QuestionType::Other: return "OTHER";
  }
  return "OTHER";
}

std::string_view column_label(QuestionType type) {
  switch (type) {
    case QuestionType::DateYear: return "Date/Yr";
    case QuestionType::Num: return "Num";
    case QuestionType::What: return "What";
    case QuestionType::DefineHowWhy: return "Define, How, Why";
    case QuestionType::Where: return "Where";
    case QuestionType::Which: return "Which";
    case QuestionType::Who: return "Who";
    case QuestionType::Other: return "Other";
  }
  return "Other";
}

std::vector<QaExample> parse_dataset(std::string_view json_text, std::string_view source) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw DatasetError(std::string(source) + ": invalid JSON: " + e.what());
  }
  std::vector<QaExample> out;
  const std::string base(source);
  if (root.is_array()) {
    for (std::size_t i = 0; i < root.size(); ++i) {
      load_article(root[i], base + ":[" + std::to_string(i) + "]", out);
    }
  } else if (root.is_object() && root.contains("data")) {
    const json& data = require(root, "data", json::value_t::array, base + ":$");
    for (std::size_t i = 0; i < data.size(); ++i) {
      load_article(data[i], base + ":data[" + std::to_string(i) + "]", out);
    }
  } else if (root.is_object()) {
    load_article(root, base + ":$", out);
  } else {
    throw DatasetError(base + ": expected an object or an array at top level");
  }
  return out;
}

std::vector<QaExample> load_dataset(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read dataset '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_dataset(buf.str(), path.string());
}

QuestionType classify_question(std::string_view question) {
  const auto w = question_words(question);
  if (has_phrase(w, {"kwa", "nini"}) || has_phrase(w, {"maana", "ya"}) ||
      has_word(w, {"kwanini", "vipi", "eleza", "fafanua", "jinsi"})) {
    return QuestionType::DefineHowWhy;
  }
  if (has_word(w, {"lini", "tarehe"}) || has_phrase(w, {"mwaka", "upi"}) ||
      has_phrase(w, {"mwaka", "gani"}) || has_phrase(w, {"mwaka", "wa", "ngapi"})) {
    return QuestionType::DateYear;
  }
  if (std::any_of(w.begin(), w.end(), [](const std::string& s) { return s.ends_with("ngapi"); }) ||
      has_phrase(w, {"kiasi", "gani"})) {
    return QuestionType::Num;
  }
  if (has_word(w, {"wapi", "mahali"})) return QuestionType::Where;
  if (has_word(w, {"nani"})) return QuestionType::Who;
  if (has_word(w, {"nini"})) return QuestionType::What;
  if (has_word(w, {"gani", "upi", "ipi", "yupi", "lipi", "kipi", "zipi", "yapi", "wepi"})) {
    return QuestionType::Which;
  }
  return QuestionType::Other;
}

const std::vector<std::string>& default_stop_words() {
  static const std::vector<std::string> words = {"upi", "gani", "nani", "nini",
                                                 "wapi", "lini", "ngapi", "je"};
  return words;
}

UnionQuery build_question_query(std::string_view question, const Lexicon& lexicon,
                                const QaOptions& options) {
  const auto verb_stems = lexicon.verb_stems();
  auto is_verb_stem = [&](const std::string& s) {
    return std::binary_search(verb_stems.begin(), verb_stems.end(), s);
  };
  const std::set<std::string> stop(options.stop_words.begin(), options.stop_words.end());

  UnionQuery query;
  std::set<std::string> seen;
  for (const auto& sentence : tag_text(question, lexicon, options.extraction.tagger)) {
    for (const Token& token : sentence.tokens) {
      const bool noun = is_noun(token.tag);
      if (!noun && token.tag != PosTag::V) continue;
      auto name = normalize(token);
      if (!name || stop.contains(*name) || !seen.insert(*name).second) continue;

      if (noun) {
        query.patterns.push_back(
            {Term::stem_of(*name), Term::variable("p"), Term::variable("o")});
        query.patterns.push_back(
            {Term::variable("s"), Term::variable("p"), Term::stem_of(*name)});
      }
      if (is_verb_stem(stem(*name))) {
        query.patterns.push_back(
            {Term::variable("s"), Term::stem_of(*name), Term::variable("o")});
      }
    }
  }
  if (query.patterns.empty()) {
    throw EmptyKeywordsError("no content keywords in question '" + std::string(question) + "'");
  }
  return query;
}

std::optional<std::string> select_answer(const UnionQuery& query,
                                         std::span<const Binding> bindings,
                                         QuestionType type) {
  std::set<std::string> keyword_stems;
  for (const auto& p : query.patterns) {
    for (const Term* term : {&p.subject, &p.predicate, &p.object}) {
      if (term->kind() == Term::Kind::Stem) keyword_stems.insert(term->value());
      if (term->kind() == Term::Kind::Bound) keyword_stems.insert(stem(term->value()));
    }
  }

  std::map<std::string, Candidate> candidates;
  std::size_t order = 0;
  for (const Binding& b : bindings) {
    if (b.branch >= query.patterns.size()) continue;
    const TriplePattern& pattern = query.patterns[b.branch];
    std::string reached_from;
    for (const Term* term : {&pattern.subject, &pattern.predicate, &pattern.object}) {
      if (!term->is_variable()) reached_from += term->to_string() + " ";
    }
    auto consider = [&](const std::string& value) {
      auto [it, inserted] = candidates.try_emplace(value);
      if (inserted) it->second.first_seen = order++;
      it->second.reached_from.insert(reached_from);
    };
    if (pattern.subject.is_variable()) consider(b.triple.subject);
    if (pattern.object.is_variable()) consider(b.triple.object);
  }

  const std::string* best = nullptr;
  std::tuple<int, std::ptrdiff_t, std::size_t> best_rank{};
  for (const auto& [value, candidate] : candidates) {
    const bool keyword = keyword_stems.contains(stem(value));
    std::tuple<int, std::ptrdiff_t, std::size_t> rank{
        preference(value, keyword, type),
        -static_cast<std::ptrdiff_t>(candidate.reached_from.size()), candidate.first_seen};
    if (!best || rank < best_rank) {
      best = &value;
      best_rank = rank;
    }
  }
  if (!best) return std::nullopt;
  return *best;
}

std::string normalize_answer(std::string_view answer) {
  std::string lowered;
  for (std::size_t i = 0; i < answer.size(); ++i) {
    char c = answer[i];
    if (c == ',' && i > 0 && i + 1 < answer.size() && is_digit(answer[i - 1]) &&
        is_digit(answer[i + 1])) {
      continue;
    }
    lowered.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  }
  std::string collapsed;
  bool pending_space = false;
  for (char c : lowered) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      pending_space = !collapsed.empty();
      continue;
    }
    if (pending_space) collapsed.push_back(' ');
    pending_space = false;
    collapsed.push_back(c);
  }
  auto strip = [](unsigned char c) { return std::ispunct(c) || std::isspace(c); };
  std::size_t b = 0;
  std::size_t e = collapsed.size();
  while (b < e && strip(static_cast<unsigned char>(collapsed[b]))) ++b;
  while (e > b && strip(static_cast<unsigned char>(collapsed[e - 1]))) --e;
  return collapsed.substr(b, e - b);
}

bool exact_match(const std::optional<std::string>& prediction,
                 std::span<const std::string> gold_answers) {
  if (!prediction) return false;
  const std::string p = normalize_answer(*prediction);
  if (p.empty()) return false;
  return std::any_of(gold_answers.begin(), gold_answers.end(),
                     [&](const std::string& g) { return normalize_answer(g) == p; });
}

QaOutcome answer_example(const QaExample& example, const Lexicon& lexicon,
                         const QaOptions& options) {
  QaOutcome outcome;
  outcome.type = classify_question(example.question);
  try {
    TripleStore store;
    for (auto& triple : extract_all(example.context, lexicon, options.extraction)) {
      store.insert(std::move(triple));
    }
    const UnionQuery query = build_question_query(example.question, lexicon, options);
    const auto bindings = execute_union(store, query);
    outcome.prediction = select_answer(query, bindings, outcome.type);
  } catch (const EmptyKeywordsError&) {
    outcome.prediction.reset();
  }
  outcome.correct = exact_match(outcome.prediction, example.gold_answers);
  return outcome;
}

// ---------------------------------------------------------------------------
// Report

void QaReport::add(QuestionType type, bool correct) {
  auto& c = per_type_[static_cast<std::size_t>(type)];
  ++c.total;
  if (correct) ++c.correct;
}

void QaReport::merge(const QaReport& other) {
  for (std::size_t i = 0; i < kQuestionTypeCount; ++i) {
    per_type_[i].total += other.per_type_[i].total;
    per_type_[i].correct += other.per_type_[i].correct;
  }
}

std::size_t QaReport::total() const {
  std::size_t n = 0;
  for (const auto& c : per_type_) n += c.total;
  return n;
}

std::size_t QaReport::correct() const {
  std::size_t n = 0;
  for (const auto& c : per_type_) n += c.correct;
  return n;
}

double QaReport::exact_match() const {
  const std::size_t n = total();
  return n == 0 ? 0.0 : static_cast<double>(correct()) / static_cast<double>(n);
}

QaReport evaluate(std::span<const QaExample> dataset, const Lexicon& lexicon,
                  const QaOptions& options, unsigned threads) {
  auto run = [&](std::size_t begin, std::size_t end) {
    QaReport part;
    for (std::size_t i = begin; i < end; ++i) {
      const auto outcome = answer_example(dataset[i], lexicon, options);
      part.add(outcome.type, outcome.correct);
    }
    return part;
  };
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(dataset.size())));
  if (threads <= 1) return run(0, dataset.size());

  std::vector<QaReport> parts(threads);
  std::vector<std::thread> workers;
  const std::size_t chunk = (dataset.size() + threads - 1) / threads;
  for (unsigned t = 0; t < threads; ++t) {
    const std::size_t begin = std::min(dataset.size(), t * chunk);
    const std::size_t end = std::min(dataset.size(), begin + chunk);
    workers.emplace_back([&, t, begin, end] { parts[t] = run(begin, end); });
  }
  for (auto& w : workers) w.join();
  QaReport report;
  for (const auto& p : parts) report.merge(p);
  return report;
}

std::string format_report_table(const QaReport& report) {
  std::vector<QuestionType> columns;
  for (auto type : kAllQuestionTypes) {
    if (type != QuestionType::Other || report.counts(type).total > 0) columns.push_back(type);
  }

  std::vector<std::string> header = {"Question Type"};
  std::vector<std::string> totals = {"Total"};
  std::vector<std::string> correct = {"Correct (EM)"};
  for (auto type : columns) {
    header.emplace_back(column_label(type));
    totals.push_back(std::to_string(report.counts(type).total));
    correct.push_back(std::to_string(report.counts(type).correct));
  }
  header.emplace_back("Total");
  totals.push_back(std::to_string(report.total()));
  correct.push_back(std::to_string(report.correct()));

  std::vector<std::size_t> width(header.size());
  for (std::size_t i = 0; i < header.size(); ++i) {
    width[i] = std::max({header[i].size(), totals[i].size(), correct[i].size()});
  }

  std::string out;
  auto row = [&](const std::vector<std::string>& cells) {
    std::string line;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i > 0) line += "  ";
      const std::string pad(width[i] - cells[i].size(), ' ');
      // Label column left-aligned, counts right-aligned.
      line += i == 0 ? cells[i] + pad : pad + cells[i];
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line + "\n";
  };
  row(header);
  row(totals);
  row(correct);
  out += "EM " + format_percent(report.exact_match()) + "%\n";
  return out;
}

std::string format_report_json(const QaReport& report) {
  nlohmann::ordered_json j;
  nlohmann::ordered_json types = nlohmann::ordered_json::object();
  for (auto type : kAllQuestionTypes) {
    const auto& c = report.counts(type);
    types[std::string(to_string(type))] = {{"total", c.total}, {"correct", c.correct}};
  }
  j["question_types"] = std::move(types);
  j["total"] = report.total();
  j["correct"] = report.correct();
  j["exact_match"] = report.exact_match();
  j["exact_match_percent"] = std::round(report.exact_match() * 1000.0) / 10.0;
  return j.dump(2) + "\n";
}

}  // namespace swasn
