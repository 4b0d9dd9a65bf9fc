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

// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"
#include "extractor.hpp"
#include "oracles.hpp"
#include "qa.hpp"
#include "store.hpp"
#include "support.hpp"

using namespace swasn;
using namespace swasn::testing;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && pass) {
      pass = false;
      detail = what;
    }
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string cli_cmd(const std::string& args) {
  return "'" + std::string(SWASN_CLI_PATH) + "' " + args + " 2>/dev/null";
}

std::string lexicon_flag() { return " --lexicon '" + data_path("lexicon/sw.tsv") + "'"; }

TripleStore store_of(const std::vector<Triple>& triples) {
  TripleStore s;
  for (const auto& t : triples) s.insert(t);
  return s;
}

Outcome table1_golden() {
  Outcome o;
  const auto t0 = Clock::now();
  const auto sentences = tag_text(chelsea_text(), bundled_lexicon());
  o.require(!sentences.empty(), "no sentences");
  if (!o.pass) return o;

  const std::vector<std::pair<std::string, PosTag>> pos = {
      {"Chelsea", PosTag::PROPN}, {"ni", PosTag::DEF_V},      {"klabu", PosTag::N},
      {"ya", PosTag::GEN_CON},    {"mpira", PosTag::N},       {"wa", PosTag::GEN_CON},
      {"miguu", PosTag::N},       {"nchini", PosTag::N},      {"Uingereza", PosTag::PROPN},
      {"na", PosTag::CC},         {"maskani", PosTag::N},     {"Fulham", PosTag::PROPN},
      {"London", PosTag::PROPN}};
  for (const auto& [surface, tag] : pos) {
    const auto& toks = sentences[0].tokens;
    auto it = std::find_if(toks.begin(), toks.end(), [&](const Token& t) { return t.surface == surface; });
    o.require(it != toks.end() && it->tag == tag, "POS of " + surface);
  }
  const auto phrases = split_on_comma(sentences[0]);
  o.require(phrases.size() == 2, "sentence 1 should split into two phrases");

  std::set<Spo> got;
  for (const auto& t : extract_sentences({sentences[0]})) got.emplace(t.subject, t.predicate, t.object);
  const std::set<Spo> expected = {
      {"chelsea", "ni", "klabu"},  {"football", "ni", "klabu"},   {"club", "ni", "klabu"},
      {"klabu", "ya", "mpira"},    {"mpira", "wa", "miguu"},      {"miguu", "ya", "nchini"},
      {"nchi", "ni", "uingereza"}, {"uingereza", "ni", "maskani"}, {"maskani", "ni", "fulham"},
      {"maskani", "ni", "london"}};
  o.require(got == expected, "triple set differs from the ten reference triples (" +
                                 std::to_string(got.size()) + " extracted)");
  const double dt = seconds_since(t0);
  o.require(dt < 1.0, "took " + std::to_string(dt) + " s");
  if (o.pass) o.detail = "10/10 triples";
  return o;
}

Outcome end_to_end_qa() {
  Outcome o;
  const auto t0 = Clock::now();
  const auto store = store_of(extract_all(chelsea_text(), bundled_lexicon()));
  const auto query = parse_query(read_file(data_path("queries/chelsea.rq")));
  o.require(query.patterns.size() == 3, "query should have three branches");
  const auto bindings = execute_union(store, query);
  const auto answer = select_answer(query, bindings, QuestionType::DateYear);
  o.require(answer == std::optional<std::string>("1905"),
            "selected answer was '" + answer.value_or("<none>") + "'");
  o.require(!bindings.empty() && bindings.back().triple == Triple("mwaka", "ni", "1905"),
            "last binding is not mwaka ni 1905");

  const auto ds = load_dataset(data_path("qa/chelsea.json"));
  const auto report = evaluate(ds, bundled_lexicon());
  o.require(report.exact_match() == 1.0, "in-process EM below 100%");
  const double dt = seconds_since(t0);
  o.require(dt < 1.0, "took " + std::to_string(dt) + " s");

  const auto r = run_command(cli_cmd("qa" + lexicon_flag() + " '" + data_path("qa/chelsea.json") + "'"));
  o.require(r.status == 0, "cli qa exited with " + std::to_string(r.status));
  o.require(r.out.find("EM 100.0%") != std::string::npos, "cli qa did not report EM 100.0%");
  if (o.pass) o.detail = "answer 1905, EM 100.0%";
  return o;
}

Outcome cross_product_law() {
  Outcome o;
  std::mt19937 rng(20211108);
  int cases = 0;
  for (; cases < 500; ++cases) {
    const int m = 1 + static_cast<int>(rng() % 8);
    const int n = 1 + static_cast<int>(rng() % 8);
    std::vector<Token> toks;
    for (int i = 0; i < m; ++i) toks.push_back(tok(random_word(rng) + "l" + std::to_string(i), rng() % 2 ? PosTag::N : PosTag::PROPN));
    toks.push_back(tok(random_word(rng), rng() % 2 ? PosTag::V : PosTag::DEF_V));
    for (int j = 0; j < n; ++j) toks.push_back(tok(random_word(rng) + "r" + std::to_string(j), PosTag::N));
    const auto triples = extract_verb_triples(phrase_of(toks));
    o.require(triples.size() == static_cast<std::size_t>(m * n),
              "m=" + std::to_string(m) + " n=" + std::to_string(n) + " gave " +
                  std::to_string(triples.size()));
  }
  const auto six = extract_verb_triples(
      phrase_of({tok("s1", PosTag::N), tok("s2", PosTag::N), tok("v", PosTag::V),
                 tok("o1", PosTag::N), tok("o2", PosTag::N), tok("o3", PosTag::N)}));
  std::vector<Spo> got;
  for (const auto& t : six) got.emplace_back(t.subject, t.predicate, t.object);
  const std::vector<Spo> expected = {{"s1", "v", "o1"}, {"s1", "v", "o2"}, {"s1", "v", "o3"},
                                     {"s2", "v", "o1"}, {"s2", "v", "o2"}, {"s2", "v", "o3"}};
  o.require(got == expected, "2x3 case not in LHS-major order");
  if (o.pass) o.detail = std::to_string(cases) + " random cases";
  return o;
}

Outcome turtle_round_trip() {
  Outcome o;
  std::mt19937 rng(4);
  int cases = 0;
  for (; cases < 200; ++cases) {
    const auto s = random_store(rng, 50, 12);
    o.require(parse_turtle(serialize_turtle(s)) == s, "round-trip mismatch in case " + std::to_string(cases));
  }
  const auto with = parse_turtle("@prefix : <http://testing.123> .\n:chelsea :ni :klabu .\n");
  const auto without = parse_turtle("@prefix : <http://testing.123>\n:chelsea :ni :klabu .\n");
  o.require(with == without && with.size() == 1, "prefix line with/without period differ");
  if (o.pass) o.detail = std::to_string(cases) + " random stores";
  return o;
}

Outcome query_oracle() {
  Outcome o;
  std::mt19937 rng(5);
  int cases = 0;
  for (; cases < 300; ++cases) {
    const int alphabet = 3 + static_cast<int>(rng() % 10);
    const auto store = random_store(rng, 50, alphabet);
    const auto q = random_query(rng, alphabet, 10);
    o.require(execute_union(store, q) == scan_oracle(store, q), "mismatch in case " + std::to_string(cases));
  }
  if (o.pass) o.detail = std::to_string(cases) + " random cases";
  return o;
}

Outcome mini_corpus() {
  Outcome o;
  const auto path = data_path("qa/mini_corpus.json");
  const auto raw = nlohmann::json::parse(read_file(path));
  std::set<std::string> reachable;
  std::size_t contexts = 0;
  for (const auto& art : raw["data"]) {
    for (const auto& para : art["paragraphs"]) {
      ++contexts;
      for (const auto& qa : para["qas"]) {
        if (qa.value("reachable", false)) reachable.insert(qa["id"].get<std::string>());
      }
    }
  }
  o.require(contexts >= 12, "only " + std::to_string(contexts) + " contexts");
  o.require(reachable.size() >= 10, "only " + std::to_string(reachable.size()) + " reachable");

  const auto ds = load_dataset(path);
  QaReport report;
  std::size_t answered = 0;
  std::set<QuestionType> covered;
  for (const auto& ex : ds) {
    const auto out = answer_example(ex, bundled_lexicon());
    report.add(out.type, out.correct);
    covered.insert(out.type);
    if (reachable.contains(ex.id)) {
      o.require(out.correct, ex.id + " answered '" + out.prediction.value_or("<none>") + "'");
      if (out.correct) ++answered;
    }
  }
  for (auto t : kAllQuestionTypes) {
    if (t != QuestionType::Other) o.require(covered.contains(t), "no " + std::string(to_string(t)) + " question");
  }
  const auto table = format_report_table(report);
  o.require(table.starts_with(
                "Question Type  Date/Yr  Num  What  Define, How, Why  Where  Which  Who  Total\n"),
            "table header differs from the reference layout");
  o.require(table.find("\nTotal ") != std::string::npos &&
                table.find("\nCorrect (EM) ") != std::string::npos,
            "table rows missing");
  if (o.pass) {
    char buf[128];
    std::snprintf(buf, sizeof buf, "%zu/%zu reachable answered, overall EM %.1f%%", answered,
                  reachable.size(), report.exact_match() * 100.0);
    o.detail = buf;
  }
  return o;
}

Outcome determinism() {
  Outcome o;
  const std::string extract = cli_cmd("extract" + lexicon_flag() + " '" + data_path("text/chelsea.txt") + "'");
  const auto e1 = run_command(extract), e2 = run_command(extract);
  o.require(e1.status == 0 && e2.status == 0, "cli extract failed");
  o.require(e1.out == e2.out && !e1.out.empty(), "cli extract output differs between runs");

  const std::string qa = cli_cmd("qa" + lexicon_flag() + " '" + data_path("qa/mini_corpus.json") + "'");
  const auto q1 = run_command(qa), q2 = run_command(qa);
  o.require(q1.status == 0 && q2.status == 0, "cli qa failed");
  o.require(q1.out == q2.out && !q1.out.empty(), "cli qa output differs between runs");

  auto ds = load_dataset(data_path("qa/mini_corpus.json"));
  const auto base = evaluate(ds, bundled_lexicon());
  std::mt19937 rng(7);
  for (int i = 0; i < 20; ++i) {
    std::shuffle(ds.begin(), ds.end(), rng);
    o.require(evaluate(ds, bundled_lexicon(), {}, 1 + i % 4) == base, "shuffled report differs");
  }
  if (o.pass) o.detail = "byte-identical reruns, 20 shuffles";
  return o;
}

Outcome stemmer_alignment() {
  Outcome o;
  o.require(stem("ilianzishwa") == stem("anzishwa"), "ilianzishwa vs anzishwa");
  o.require(stem("anzishwa") == stem("anza"), "anzishwa vs anza");
  const auto words = bundled_lexicon().surfaces();
  for (const auto& w : words) o.require(stem(stem(w)) == stem(w), "not idempotent on " + w);
  if (o.pass) o.detail = "stem = '" + stem("anza") + "', idempotent over " + std::to_string(words.size()) + " entries";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"AC1 reference triples from the first Chelsea sentence", table1_golden},
      {"AC2 end-to-end Chelsea question answered 1905", end_to_end_qa},
      {"AC3 verb cross product has m x n triples", cross_product_law},
      {"AC4 Turtle round-trip", turtle_round_trip},
      {"AC5 union query equals scan oracle", query_oracle},
      {"AC6 mini corpus answers reachable questions", mini_corpus},
      {"AC7 deterministic output and order-independent evaluation", determinism},
      {"AC8 stemmer alignment and idempotence", stemmer_alignment},
  };
  int failures = 0;
  for (const auto& [name, check] : criteria) {
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    std::printf("%s %s: %s\n", o.pass ? "PASS" : "FAIL", name, o.detail.c_str());
    if (!o.pass) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
