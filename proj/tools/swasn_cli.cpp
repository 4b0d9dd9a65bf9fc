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

// swasn-cli: tag, extract, query, qa and graph subcommands over libswasn.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "swasn/swasn.h"

namespace {

struct CliError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void check(swasn_status status, const std::string& what) {
  if (status != SWASN_OK) {
    throw CliError(what + ": " + swasn_last_error());
  }
}

template <typename T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};

using Lexicon = std::unique_ptr<swasn_lexicon, Deleter<swasn_lexicon, swasn_lexicon_free>>;
using Store = std::unique_ptr<swasn_store, Deleter<swasn_store, swasn_store_free>>;
using Query = std::unique_ptr<swasn_query, Deleter<swasn_query, swasn_query_free>>;
using Result = std::unique_ptr<swasn_result, Deleter<swasn_result, swasn_result_free>>;
using Dataset = std::unique_ptr<swasn_dataset, Deleter<swasn_dataset, swasn_dataset_free>>;
using Report = std::unique_ptr<swasn_report, Deleter<swasn_report, swasn_report_free>>;

// Takes ownership of a library-allocated string.
std::string take(char* s) {
  std::string out = s ? s : "";
  swasn_string_free(s);
  return out;
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CliError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Common {
  std::string lexicon_path;
  std::string prefix;
  bool no_other_rules = false;
  bool no_locative_split = false;
  bool no_propn_heuristic = false;
  int max_comma_recursion = 16;
  std::string format;
  std::string output = "-";

  swasn_options options() const {
    swasn_options o;
    swasn_options_init(&o);
    o.enable_other_rules = no_other_rules ? 0 : 1;
    o.enable_locative_split = no_locative_split ? 0 : 1;
    o.propn_heuristic = no_propn_heuristic ? 0 : 1;
    o.max_comma_recursion = max_comma_recursion;
    return o;
  }

  Lexicon lexicon() const {
    swasn_lexicon* lex = nullptr;
    if (lexicon_path.empty()) {
      check(swasn_lexicon_create(&lex), "lexicon");
    } else {
      check(swasn_lexicon_load(lexicon_path.c_str(), &lex), "lexicon");
    }
    return Lexicon(lex);
  }

  void write(const std::string& data) const {
    if (output == "-") {
      std::cout << data;
      std::cout.flush();
      if (!std::cout) throw CliError("failed to write standard output");
      return;
    }
    std::ofstream out(output, std::ios::binary | std::ios::trunc);
    if (!out) throw CliError("cannot open '" + output + "' for writing");
    out << data;
    if (!out.flush()) throw CliError("failed to write '" + output + "'");
  }
};

void add_common(CLI::App* cmd, Common& c, bool extraction, bool prefix,
                std::vector<std::string> formats, std::string default_format) {
  c.format = std::move(default_format);
  if (extraction) {
    cmd->add_option("--lexicon", c.lexicon_path, "Lexicon TSV (surface, tag, optional lemma)")
        ->check(CLI::ExistingFile);
    cmd->add_flag("--no-other-rules", c.no_other_rules, "Disable the non-verb triple rules");
    cmd->add_flag("--no-locative-split", c.no_locative_split,
                  "Keep locative -ni nouns whole");
    cmd->add_flag("--no-propn-heuristic", c.no_propn_heuristic,
                  "Do not tag capitalized unknown words as proper nouns");
    cmd->add_option("--max-comma-recursion", c.max_comma_recursion,
                    "Comma decomposition depth limit")
        ->check(CLI::PositiveNumber);
  }
  if (prefix) cmd->add_option("--prefix", c.prefix, "Base IRI of the store");
  cmd->add_option("--format", c.format, "Output format")
      ->check(CLI::IsMember(std::move(formats)))
      ->capture_default_str();
  cmd->add_option("-o,--output", c.output, "Output file, '-' for standard output");
}

Store load_turtle(const std::string& path) {
  const std::string text = read_input(path);
  swasn_store* store = nullptr;
  check(swasn_store_parse_turtle(text.c_str(), &store), path);
  return Store(store);
}

void cmd_tag(const Common& c, const std::string& input) {
  const std::string text = read_input(input);
  auto lex = c.lexicon();
  const auto opts = c.options();
  char* out = nullptr;
  check(swasn_tag_text(lex.get(), text.c_str(), &opts, &out), "tag");
  c.write(take(out));
}

void cmd_extract(const Common& c, const std::string& input) {
  const std::string text = read_input(input);
  auto lex = c.lexicon();
  const auto opts = c.options();
  swasn_store* raw = nullptr;
  check(swasn_store_create(c.prefix.empty() ? nullptr : c.prefix.c_str(), &raw), "store");
  Store store(raw);
  check(swasn_store_extract(store.get(), lex.get(), text.c_str(), &opts), "extract");

  char* out = nullptr;
  if (c.format == "dot") {
    check(swasn_store_to_dot(store.get(), &out), "dot");
    c.write(take(out));
  } else if (c.format == "json") {
    const std::string base = swasn_store_base_prefix(store.get());
    std::string json = "[";
    const size_t n = swasn_store_size(store.get());
    for (size_t i = 0; i < n; ++i) {
      const char *s, *p, *o;
      check(swasn_store_get(store.get(), i, &s, &p, &o), "store");
      json += i ? ",\n  " : "\n  ";
      json += "[\"" + base + "/" + s + "\", \"" + base + "/" + p + "\", \"" + base + "/" + o +
              "\"]";
    }
    json += n ? "\n]\n" : "]\n";
    c.write(json);
  } else {
    check(swasn_store_to_turtle(store.get(), &out), "turtle");
    c.write(take(out));
  }
}

void cmd_query(const Common& c, const std::string& turtle_path, const std::string& query_path,
               const std::string& question) {
  if (query_path.empty() == question.empty()) {
    throw CliError("give exactly one of a query file or --question");
  }
  auto store = load_turtle(turtle_path);
  swasn_query* raw = nullptr;
  if (!question.empty()) {
    auto lex = c.lexicon();
    const auto opts = c.options();
    check(swasn_query_from_question(lex.get(), question.c_str(), &opts, &raw), "question");
  } else {
    const std::string text = read_input(query_path);
    check(swasn_query_parse(text.c_str(), &raw), query_path);
  }
  Query query(raw);
  swasn_result* res = nullptr;
  check(swasn_store_execute(store.get(), query.get(), &res), "query");
  Result result(res);
  char* out = nullptr;
  if (c.format == "json") {
    check(swasn_result_to_json(result.get(), &out), "query");
  } else {
    check(swasn_result_format(result.get(), &out), "query");
  }
  c.write(take(out));
}

std::vector<std::string> read_stop_words(const std::string& path) {
  std::vector<std::string> words;
  std::istringstream in(read_input(path));
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto b = line.find_first_not_of(" \t");
    if (b == std::string::npos || line[b] == '#') continue;
    const auto e = line.find_last_not_of(" \t");
    words.push_back(line.substr(b, e - b + 1));
  }
  return words;
}

void cmd_qa(const Common& c, const std::string& dataset_path, unsigned threads,
            const std::string& stop_word_path) {
  swasn_dataset* raw = nullptr;
  check(swasn_dataset_load(dataset_path.c_str(), &raw), "dataset");
  Dataset dataset(raw);
  auto lex = c.lexicon();
  const auto opts = c.options();

  std::vector<std::string> stop_words;
  std::vector<const char*> stop_ptrs;
  if (!stop_word_path.empty()) {
    stop_words = read_stop_words(stop_word_path);
    for (const auto& w : stop_words) stop_ptrs.push_back(w.c_str());
  }
  swasn_report* rep = nullptr;
  check(swasn_evaluate(dataset.get(), lex.get(), &opts,
                       stop_word_path.empty() ? nullptr : stop_ptrs.data(), stop_ptrs.size(),
                       threads, &rep),
        "evaluate");
  Report report(rep);
  char* out = nullptr;
  if (c.format == "json") {
    check(swasn_report_to_json(report.get(), &out), "report");
  } else {
    check(swasn_report_to_table(report.get(), &out), "report");
  }
  c.write(take(out));
}

void cmd_graph(const Common& c, const std::string& turtle_path) {
  auto store = load_turtle(turtle_path);
  char* out = nullptr;
  check(swasn_store_to_dot(store.get(), &out), "dot");
  c.write(take(out));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Build semantic networks from Kiswahili text and answer questions over them",
               "swasn-cli"};
  app.set_version_flag("--version", std::string(swasn_version()));
  app.require_subcommand(1);

  Common tag_c, extract_c, query_c, qa_c, graph_c;
  std::string tag_in = "-", extract_in = "-", turtle_in, query_in, question, dataset_in,
              stop_words_in, graph_in = "-";
  unsigned threads = 1;

  auto* tag = app.add_subcommand("tag", "Print one surface<TAB>TAG line per token");
  tag->add_option("input", tag_in, "Text file, '-' for standard input");
  add_common(tag, tag_c, true, false, {"table"}, "table");

  auto* extract = app.add_subcommand("extract", "Extract triples from text");
  extract->add_option("input", extract_in, "Text file, '-' for standard input");
  add_common(extract, extract_c, true, true, {"turtle", "dot", "json"}, "turtle");

  auto* query = app.add_subcommand("query", "Run a union query against a Turtle store");
  query->add_option("turtle", turtle_in, "Turtle file, '-' for standard input")->required();
  query->add_option("query", query_in, "Query file");
  query->add_option("--question", question, "Build the query from a question instead");
  add_common(query, query_c, true, false, {"table", "json"}, "table");

  auto* qa = app.add_subcommand("qa", "Evaluate a SQuAD-style dataset");
  qa->add_option("dataset", dataset_in, "Dataset JSON")->required();
  qa->add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);
  qa->add_option("--stopwords", stop_words_in,
                 "File with one stop word per line, replacing the defaults");
  add_common(qa, qa_c, true, false, {"table", "json"}, "table");

  auto* graph = app.add_subcommand("graph", "Export a Turtle store as Graphviz DOT");
  graph->add_option("turtle", graph_in, "Turtle file, '-' for standard input");
  add_common(graph, graph_c, false, false, {"dot"}, "dot");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (*tag) cmd_tag(tag_c, tag_in);
    else if (*extract) cmd_extract(extract_c, extract_in);
    else if (*query) cmd_query(query_c, turtle_in, query_in, question);
    else if (*qa) cmd_qa(qa_c, dataset_in, threads, stop_words_in);
    else if (*graph) cmd_graph(graph_c, graph_in);
  } catch (const std::exception& e) {
    std::cerr << "swasn-cli: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
