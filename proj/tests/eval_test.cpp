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

#include <gtest/gtest.h>

#include <set>

#include "elverb/eval.hpp"
#include "elverb/parser.hpp"
#include "support/fixtures.hpp"
#include "support/testkit.hpp"

namespace {

using namespace elverb;

TEST(Normalize, Examples) {
  EXPECT_EQ(normalize("SubClassOf:\n  City"), "subclassof city");
  EXPECT_EQ(normalize(""), "");
  EXPECT_EQ(normalize("  A,\tB.  "), "a b");
  EXPECT_EQ(normalize("and/or"), "andor");
}

TEST(Normalize, Idempotent) {
  testkit::Rng rng(1);
  const std::string alphabet = "aB c\t\n.,;:()-/Z";
  for (int i = 0; i < 500; ++i) {
    std::string s;
    const std::size_t n = rng.below(30);
    for (std::size_t k = 0; k < n; ++k) s += alphabet[rng.below(alphabet.size())];
    EXPECT_EQ(normalize(normalize(s)), normalize(s)) << s;
  }
}

TEST(Levenshtein, Examples) {
  EXPECT_EQ(levenshtein("same", "same"), 0u);
  EXPECT_EQ(levenshtein("kitten", "sitting"), 3u);
  EXPECT_EQ(testkit::oracle_levenshtein("kitten", "sitting"), 3u);
  EXPECT_EQ(levenshtein("", "abc"), 3u);
  EXPECT_EQ(levenshtein("abc", ""), 3u);
}

std::string random_string(testkit::Rng& rng, std::size_t max_len, const std::string& alphabet) {
  std::string s;
  const std::size_t n = rng.below(max_len + 1);
  for (std::size_t k = 0; k < n; ++k) s += alphabet[rng.below(alphabet.size())];
  return s;
}

TEST(Levenshtein, MetricAxioms) {
  testkit::Rng rng(4);
  for (int i = 0; i < 500; ++i) {
    auto a = random_string(rng, 10, "abc"), b = random_string(rng, 10, "abc"),
         c = random_string(rng, 10, "abc");
    EXPECT_EQ(levenshtein(a, a), 0u);
    EXPECT_EQ(levenshtein(a, b) == 0, a == b);
    EXPECT_EQ(levenshtein(a, b), levenshtein(b, a));
    EXPECT_LE(levenshtein(a, c), levenshtein(a, b) + levenshtein(b, c));
    EXPECT_EQ(levenshtein(a, b), testkit::oracle_levenshtein(a, b));
  }
}

TEST(Similarity, Examples) {
  EXPECT_DOUBLE_EQ(similarity("city", "city"), 1.0);
  EXPECT_DOUBLE_EQ(similarity("", "abcdefghij"), 0.0);
  EXPECT_DOUBLE_EQ(similarity("abcd", "abce"), 0.75);
  EXPECT_DOUBLE_EQ(similarity("", ""), 1.0);
}

TEST(Similarity, SymmetricAndBounded) {
  testkit::Rng rng(6);
  for (int i = 0; i < 500; ++i) {
    auto a = random_string(rng, 12, "xyz "), b = random_string(rng, 12, "xyz ");
    double s = similarity(a, b);
    EXPECT_DOUBLE_EQ(s, similarity(b, a));
    EXPECT_GE(s, 0.0);
    EXPECT_LE(s, 1.0);
    EXPECT_DOUBLE_EQ(similarity(a, a), 1.0);
  }
}

std::set<std::vector<std::string>> keys(const EquivalentSet& set) {
  std::set<std::vector<std::string>> out;
  for (const auto& v : set.versions) {
    std::vector<std::string> k;
    for (const auto& a : v) k.push_back(serialize_axiom(a));
    std::sort(k.begin(), k.end());
    out.insert(k);
  }
  return out;
}

TEST(Equivalents, SingleNamedSubclass) {
  auto set = enumerate_equivalents({SubClassOf{named(":A"), named(":B")}});
  EXPECT_EQ(set.versions.size(), 1u);
}

TEST(Equivalents, TwoConjuncts) {
  std::vector<Axiom> ref{SubClassOf{named(":A"), intersection({named(":B"), named(":C")})}};
  auto set = enumerate_equivalents(ref);
  EXPECT_EQ(set.versions.front(), ref);
  EXPECT_EQ(keys(set), testkit::oracle_subclass_versions(":A", {":B", ":C"}));
  EXPECT_EQ(set.versions.size(), 3u);
}

TEST(Equivalents, ThreeConjunctsAgainstOracle) {
  std::vector<Axiom> ref{
      SubClassOf{named(":A"), intersection({named(":B"), named(":C"), named(":D")})}};
  auto set = enumerate_equivalents(ref);
  auto oracle = testkit::oracle_subclass_versions(":A", {":B", ":C", ":D"});
  EXPECT_EQ(keys(set), oracle);
  EXPECT_EQ(set.versions.size(), oracle.size());
  EXPECT_EQ(set.versions.size(), 13u);
}

TEST(Equivalents, SplitAxiomsMergeBack) {
  std::vector<Axiom> ref{SubClassOf{named(":A"), named(":B")}, SubClassOf{named(":A"), named(":C")}};
  auto set = enumerate_equivalents(ref);
  EXPECT_EQ(keys(set), testkit::oracle_subclass_versions(":A", {":B", ":C"}));
}

TEST(Equivalents, NaryOperandPermutations) {
  auto set = enumerate_equivalents({EquivalentClasses{{named(":A"), named(":B"), named(":C")}}});
  EXPECT_EQ(set.versions.size(), 6u);
  auto dj = enumerate_equivalents({DisjointClasses{{named(":A"), named(":B")}},
                                   EquivalentClasses{{named(":A"), named(":B")}}});
  EXPECT_EQ(dj.versions.size(), 4u);
}

TEST(Equivalents, DistinctAndReferenceFirst) {
  testkit::Rng rng(12);
  auto classes = testkit::class_pool(5);
  auto props = testkit::property_pool(2);
  for (int i = 0; i < 100; ++i) {
    std::vector<Axiom> ref;
    const std::size_t n = 1 + rng.below(3);
    for (std::size_t k = 0; k < n; ++k) ref.push_back(testkit::random_axiom(rng, classes, props, 1));
    EquivalentSet set;
    try {
      set = enumerate_equivalents(ref, 5000);
    } catch (const EquivalentExplosion&) {
      continue;
    }
    EXPECT_EQ(set.versions.front(), ref);
    EXPECT_EQ(keys(set).size(), set.versions.size());
  }
}

TEST(Equivalents, CapIsEnforced) {
  std::vector<ClassExpression> ops;
  for (int i = 0; i < 8; ++i) ops.push_back(named(":C" + std::to_string(i)));
  EXPECT_THROW(enumerate_equivalents({EquivalentClasses{ops}}, 100), EquivalentExplosion);
  EXPECT_THROW(enumerate_equivalents({SubClassOf{named(":A"), intersection(ops)}}), EquivalentExplosion);
}

TEST(Assignment, MatchesPermutationOracle) {
  testkit::Rng rng(13);
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = 1 + rng.below(5), m = 1 + rng.below(5);
    std::vector<std::vector<double>> w(n, std::vector<double>(m));
    for (auto& row : w) {
      for (auto& x : row) x = double(rng.below(101)) / 100.0;
    }
    auto match = max_weight_assignment(w);
    ASSERT_EQ(match.size(), n);
    double total = 0.0;
    std::set<int> used;
    for (std::size_t i = 0; i < n; ++i) {
      if (match[i] < 0) continue;
      EXPECT_TRUE(used.insert(match[i]).second);
      total += w[i][std::size_t(match[i])];
    }
    EXPECT_EQ(used.size(), std::min(n, m));
    EXPECT_NEAR(total, testkit::oracle_assignment(w), 1e-9);
  }
}

ClassFrame frame(std::vector<Axiom> axioms) { return ClassFrame{ClassId(":A"), std::move(axioms)}; }

TEST(Score, IdenticalIsOne) {
  auto f = frame({SubClassOf{named(":A"), named(":B")}, EquivalentClasses{{named(":A"), named(":C")}}});
  auto r = score_submission(f, f);
  EXPECT_DOUBLE_EQ(r.mean, 1.0);
  EXPECT_EQ(r.best_version_index, 0u);
}

TEST(Score, ReorderedConjunctsAreOne) {
  auto ref = frame({SubClassOf{named(":A"), intersection({named(":B"), named(":C"), some(":p", named(":D"))})}});
  auto cand = frame({SubClassOf{named(":A"), intersection({some(":p", named(":D")), named(":C"), named(":B")})}});
  auto r = score_submission(cand, ref);
  EXPECT_DOUBLE_EQ(r.mean, 1.0);
  EXPECT_NE(r.best_version_index, 0u);
}

TEST(Score, SplitCandidateIsOne) {
  auto ref = frame({SubClassOf{named(":A"), intersection({named(":B"), named(":C")})}});
  auto cand = frame({SubClassOf{named(":A"), named(":C")}, SubClassOf{named(":A"), named(":B")}});
  EXPECT_DOUBLE_EQ(score_submission(cand, ref).mean, 1.0);
}

TEST(Score, MissingAxiomScoresZero) {
  auto ref = frame({SubClassOf{named(":A"), named(":B")}, SubClassOf{named(":X"), named(":A")},
                    DisjointClasses{{named(":A"), named(":Q")}}});
  auto cand = frame({SubClassOf{named(":A"), named(":B")}, DisjointClasses{{named(":A"), named(":Q")}}});
  auto r = score_submission(cand, ref);
  EXPECT_NEAR(r.mean, 2.0 / 3.0, 1e-12);
  std::size_t zeros = 0;
  for (const auto& s : r.per_axiom) zeros += s.candidate.empty() ? 1 : 0;
  EXPECT_EQ(zeros, 1u);
}

TEST(Score, ExtraCandidateAxiomsIgnored) {
  auto ref = frame({SubClassOf{named(":A"), named(":B")}});
  auto cand = frame({SubClassOf{named(":A"), named(":B")}, SubClassOf{named(":A"), named(":Z")}});
  EXPECT_DOUBLE_EQ(score_submission(cand, ref).mean, 1.0);
}

TEST(Score, MeanIsAverageOfRows) {
  auto ref = frame({SubClassOf{named(":A"), named(":Bee")}, SubClassOf{named(":Cat"), named(":A")}});
  auto cand = frame({SubClassOf{named(":A"), named(":Be")}, SubClassOf{named(":Cap"), named(":A")}});
  auto r = score_submission(cand, ref);
  double sum = 0.0;
  for (const auto& s : r.per_axiom) sum += s.score;
  EXPECT_NEAR(r.mean, sum / double(r.per_axiom.size()), 1e-12);
  EXPECT_GT(r.mean, 0.8);
  EXPECT_LT(r.mean, 1.0);
}

TEST(Score, SelfScoreOnRandomFrames) {
  testkit::Rng rng(19);
  auto classes = testkit::class_pool(5);
  auto props = testkit::property_pool(2);
  int scored = 0;
  for (int i = 0; i < 200; ++i) {
    std::vector<Axiom> axioms;
    const std::size_t n = 1 + rng.below(4);
    for (std::size_t k = 0; k < n; ++k) axioms.push_back(testkit::random_axiom(rng, classes, props, 1));
    ClassFrame f{ClassId(":C0"), axioms};
    try {
      EXPECT_DOUBLE_EQ(score_submission(f, f).mean, 1.0);
      ++scored;
    } catch (const EquivalentExplosion&) {
    }
  }
  EXPECT_GT(scored, 150);
}

TEST(Score, EveryEquivalentVersionScoresOne) {
  std::vector<Axiom> ref{
      SubClassOf{named(":A"), intersection({named(":B"), named(":C"), some(":p", named(":D"))})},
      EquivalentClasses{{named(":A"), named(":E")}}};
  auto set = enumerate_equivalents(ref);
  for (const auto& v : set.versions) {
    std::string text;
    for (const auto& a : v) text += serialize_axiom(a) + "\n";
    auto parsed = parse_ontology({text, ""});
    EXPECT_DOUBLE_EQ(score_submission(frame(parsed.axioms), frame(ref)).mean, 1.0);
  }
}

// Regression pin: reference row against an independent hand re-coding.
TEST(Score, OntologistRecodingPin) {
  auto ref = parse_ontology(read_document(testkit::fixture_path("appendix/row02.ofs")));
  auto cand = parse_ontology(read_document(testkit::fixture_path("eval/row02_recoded.ofs")));
  ClassId id(":IntracranialProcedure");
  auto r = score_submission(collect_frame(cand, id), collect_frame(ref, id));
  EXPECT_GT(r.mean, 0.0);
  EXPECT_LE(r.mean, 1.0);
  EXPECT_EQ(format_score(r.mean), "0.9793");
}

TEST(Report, CsvShape) {
  SimilarityReport r;
  r.per_axiom = {{"SubClassOf(:A :B)", "SubClassOf(:A :B)", 1.0}, {"X, Y", "", 0.0}};
  r.mean = 0.5;
  EXPECT_EQ(emit_similarity_csv(r),
            "reference_axiom,candidate_axiom,score\nSubClassOf(:A :B),SubClassOf(:A :B),1.0000\n"
            "\"X, Y\",,0.0000\nmean,0.5000\n");
}

}  // namespace
