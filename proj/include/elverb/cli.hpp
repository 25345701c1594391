// Copyright 2026 The elverb Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end: `verbalize`, `survey` and `eval`.
//
// Exit status: 0 on success, 1 on unreadable or malformed input, 2 when a
// requested class does not exist. Data goes to `out`, diagnostics to `err`.

#ifndef ELVERB_CLI_HPP
#define ELVERB_CLI_HPP

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "elverb/classifier.hpp"
#include "elverb/eval.hpp"
#include "elverb/model.hpp"
#include "elverb/parser.hpp"
#include "elverb/planner.hpp"
#include "elverb/realizer.hpp"
#include "elverb/survey.hpp"

namespace elverb {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr const char* kLexiconEnv = "ELVERB_LEXICON";

enum class OutputFormat { Text, Records };

struct RunConfig {
  std::string ontology_path;
  std::string lexicon_path;
  std::string class_selector = "all";  // an id or "all"
  std::string class_file;              // one id per line
  bool batch = false;
  bool elide_rolegroup = false;
  bool guess_articles = false;
  bool strict_parse = false;
  bool rst_debug = false;
  OutputFormat format = OutputFormat::Text;
};

namespace cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 1;
inline constexpr int kExitUnknownClass = 2;

inline Ontology load_with_lexicon(const std::string& path, const std::string& lexicon_path,
                                  bool strict, std::ostream& err) {
  std::vector<std::string> warnings;
  Ontology onto = parse_ontology(read_document(path), ParseOptions{strict}, &warnings);
  for (const auto& w : warnings) err << "warning: " << w << "\n";
  if (!lexicon_path.empty()) onto.lexicon = load_lexicon(read_document(lexicon_path));
  return onto;
}

inline std::vector<ClassId> select_classes(const Ontology& onto, const RunConfig& cfg) {
  std::vector<ClassId> ids;
  if (!cfg.class_file.empty()) {
    std::istringstream in(read_document(cfg.class_file).text);
    std::string line;
    while (std::getline(in, line)) {
      std::string id = detail::trim(line);
      if (!id.empty() && id.front() != '#') ids.emplace_back(id);
    }
  } else if (cfg.class_selector == "all") {
    ids.assign(onto.classes.begin(), onto.classes.end());
  } else {
    ids.emplace_back(cfg.class_selector);
  }
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return ids;
}

inline int verbalize(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  Ontology onto;
  try {
    onto = load_with_lexicon(cfg.ontology_path, cfg.lexicon_path, cfg.strict_parse, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }
  std::vector<ClassId> ids;
  try {
    ids = select_classes(onto, cfg);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }
  for (const auto& id : ids) {
    if (!onto.classes.contains(id)) {
      err << "error: unknown class " << id.iri << "\n";
      return kExitUnknownClass;
    }
  }
  const bool batch = cfg.batch || !cfg.class_file.empty() || cfg.class_selector == "all";
  RealizerOptions opts;
  opts.elide_rolegroup = cfg.elide_rolegroup;
  opts.guess_articles = cfg.guess_articles;
  Realizer realizer(onto.lexicon, opts);

  for (const auto& id : ids) {
    RstPlan plan = plan_frame(collect_frame(onto, id));
    Paragraph para = realizer.realize(plan);
    if (cfg.format == OutputFormat::Records) {
      std::size_t index = 0;
      auto emit = [&](const std::string& kind, const Sentence& s) {
        nlohmann::json rec = {{"class", id.iri}, {"index", index++}, {"kind", kind},
                              {"groups", s.groups}, {"text", s.text}};
        out << rec.dump() << "\n";
      };
      for (const auto& s : para.sentences) emit("sentence", s);
      if (!para.bullets.empty()) emit("bullet_intro", Sentence{para.bullet_intro, {}});
      for (const auto& s : para.bullets) emit("bullet", s);
      if (cfg.rst_debug) {
        nlohmann::json rec = {{"class", id.iri}, {"kind", "rst"}, {"text", render_tree(plan.root)}};
        out << rec.dump() << "\n";
      }
      continue;
    }
    if (batch) out << id.iri << "\n";
    if (cfg.rst_debug) out << render_tree(plan.root);
    out << para.text() << "\n";
    if (batch) out << "\n";
  }
  return kExitOk;
}

inline int survey(const std::string& corpus, const std::string& extension, bool strict,
                  std::ostream& out, std::ostream& err) {
  namespace fs = std::filesystem;
  std::error_code ec;
  if (!fs::is_directory(corpus, ec)) {
    err << "error: cannot read directory " << corpus << "\n";
    return kExitInput;
  }
  std::vector<fs::path> files;
  fs::recursive_directory_iterator it(corpus, fs::directory_options::skip_permission_denied, ec);
  if (ec) {
    err << "error: cannot read directory " << corpus << ": " << ec.message() << "\n";
    return kExitInput;
  }
  for (; it != fs::recursive_directory_iterator(); it.increment(ec)) {
    if (ec) break;
    if (it->is_regular_file() && it->path().extension() == extension) files.push_back(it->path());
  }
  std::sort(files.begin(), files.end());

  PatternStats stats;
  for (const auto& f : files) {
    try {
      stats.merge(survey_ontology(parse_ontology(read_document(f.string()), ParseOptions{strict})));
    } catch (const Error& e) {
      err << "skipped: " << e.what() << "\n";
      ++stats.skipped;
    }
  }
  out << emit_report(stats);
  err << "surveyed " << (files.size() - stats.skipped) << " file(s), skipped=" << stats.skipped
      << "\n";
  return kExitOk;
}

inline int eval(const std::string& reference_path, const std::string& candidate_path,
                const std::string& cls, bool mean_only, std::size_t cap, std::ostream& out,
                std::ostream& err) {
  Ontology ref, cand;
  try {
    ref = parse_ontology(read_document(reference_path));
    cand = parse_ontology(read_document(candidate_path));
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }
  ClassId id(cls);
  if (!ref.classes.contains(id) || !cand.classes.contains(id)) {
    err << "error: class " << cls << " is absent from "
        << (ref.classes.contains(id) ? candidate_path : reference_path) << "\n";
    return kExitUnknownClass;
  }
  SimilarityReport report;
  try {
    report = score_submission(collect_frame(cand, id), collect_frame(ref, id), cap);
  } catch (const EquivalentExplosion& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }
  if (mean_only) {
    out << format_score(report.mean) << "\n";
  } else {
    out << emit_similarity_csv(report);
  }
  err << "equivalent versions considered: " << report.versions_considered << "\n";
  return kExitOk;
}

}  // namespace cli

// Entry point shared by the executable and the tests. `args` excludes the
// program name.
inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Verbalize OWL-EL class descriptions as English paragraphs", "elverb"};
  app.require_subcommand(0, 1);
  bool show_version = false;
  app.add_flag("--version", show_version, "Print toolkit and grammar version");

  RunConfig cfg;
  if (const char* env = std::getenv(kLexiconEnv)) cfg.lexicon_path = env;
  std::string format = "text";
  auto* verb = app.add_subcommand("verbalize", "Write one paragraph per selected class");
  verb->add_option("--ontology", cfg.ontology_path, "Ontology file")->required();
  verb->add_option("--lexicon", cfg.lexicon_path, std::string("Label lexicon (TSV); default $") + kLexiconEnv);
  auto* cls_opt = verb->add_option("--class", cfg.class_selector, "Class id, or 'all'");
  verb->add_option("--class-file", cfg.class_file, "File with one class id per line")->excludes(cls_opt);
  verb->add_flag("--batch", cfg.batch, "Prefix each paragraph with its class id");
  verb->add_flag("--elide-rolegroup", cfg.elide_rolegroup, "Skip RoleGroup wrappers");
  verb->add_flag("--guess-articles", cfg.guess_articles, "Add a/an where the lexicon has none");
  verb->add_flag("--strict", cfg.strict_parse, "Reject undeclared entities");
  verb->add_flag("--rst-debug", cfg.rst_debug, "Also print the discourse tree");
  verb->add_option("--format", format, "text or records")->check(CLI::IsMember({"text", "records"}));

  std::string corpus, extension = ".ofs";
  bool survey_strict = false;
  auto* surv = app.add_subcommand("survey", "Tabulate per-class axiom patterns over a directory");
  surv->add_option("--corpus", corpus, "Directory of ontology files")->required();
  surv->add_option("--extension", extension, "Ontology file extension");
  surv->add_flag("--strict", survey_strict, "Reject undeclared entities");

  std::string reference, candidate, eval_class;
  bool mean_only = false;
  std::size_t cap = kDefaultEquivalentCap;
  auto* ev = app.add_subcommand("eval", "Score a re-coded class against its reference");
  ev->add_option("--reference", reference, "Reference ontology")->required();
  ev->add_option("--candidate", candidate, "Candidate ontology")->required();
  ev->add_option("--class", eval_class, "Class id")->required();
  ev->add_flag("--mean-only", mean_only, "Print only the mean similarity");
  ev->add_option("--cap", cap, "Maximum number of equivalent versions");

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return cli::kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return cli::kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return cli::kExitInput;
  }

  if (show_version) {
    out << "elverb " << kVersion << " (grammar " << kGrammarVersion << ")\n";
    return cli::kExitOk;
  }
  if (verb->parsed()) {
    cfg.format = format == "records" ? OutputFormat::Records : OutputFormat::Text;
    return cli::verbalize(cfg, out, err);
  }
  if (surv->parsed()) return cli::survey(corpus, extension, survey_strict, out, err);
  if (ev->parsed()) return cli::eval(reference, candidate, eval_class, mean_only, cap, out, err);
  out << app.help();
  return cli::kExitOk;
}

}  // namespace elverb

#endif  // ELVERB_CLI_HPP
