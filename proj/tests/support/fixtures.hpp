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

// Access to the golden fixtures listed in fixtures/manifest.json.

#ifndef ELVERB_TESTS_FIXTURES_HPP
#define ELVERB_TESTS_FIXTURES_HPP

#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "elverb/parser.hpp"

namespace testkit {

struct Fixture {
  std::string name;
  std::string group;
  std::string ontology;  // absolute paths
  std::string lexicon;
  std::string cls;
  std::string expected;
  bool elide_rolegroup = false;
};

inline std::string fixture_path(const std::string& rel) {
  return std::string(ELVERB_FIXTURES) + "/" + rel;
}

struct Manifest {
  std::size_t appendix_rows_required = 0;
  std::vector<Fixture> fixtures;

  std::vector<Fixture> in_group(const std::string& g) const {
    std::vector<Fixture> out;
    for (const auto& f : fixtures) {
      if (f.group == g) out.push_back(f);
    }
    return out;
  }

  const Fixture& named(const std::string& n) const {
    for (const auto& f : fixtures) {
      if (f.name == n) return f;
    }
    throw std::runtime_error("no fixture " + n);
  }
};

inline Manifest load_manifest() {
  std::ifstream in(fixture_path("manifest.json"));
  nlohmann::json j = nlohmann::json::parse(in);
  Manifest m;
  m.appendix_rows_required = j.at("appendix_rows_required").get<std::size_t>();
  for (const auto& f : j.at("fixtures")) {
    Fixture x;
    x.name = f.at("name");
    x.group = f.at("group");
    x.ontology = fixture_path(f.at("ontology"));
    x.lexicon = fixture_path(f.at("lexicon"));
    x.cls = f.at("class");
    x.expected = f.at("expected");
    x.elide_rolegroup = f.at("options").value("elide_rolegroup", false);
    m.fixtures.push_back(std::move(x));
  }
  return m;
}

inline elverb::Ontology load_fixture(const Fixture& f) {
  elverb::Ontology o = elverb::parse_ontology(elverb::read_document(f.ontology));
  o.lexicon = elverb::load_lexicon(elverb::read_document(f.lexicon));
  return o;
}

}  // namespace testkit

#endif  // ELVERB_TESTS_FIXTURES_HPP
