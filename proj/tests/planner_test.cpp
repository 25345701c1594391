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

#include "elverb/planner.hpp"
#include "support/testkit.hpp"

namespace {

using namespace elverb;

const ClassId F(":F");

std::vector<ClassifiedAxiom> classify_all(const std::vector<Axiom>& axioms) {
  std::vector<ClassifiedAxiom> out;
  for (const auto& a : axioms) out.push_back(classify(a, F));
  return out;
}

std::vector<std::string> leaf_labels(const RstNode& root) {
  std::vector<std::string> out;
  for_each_leaf(root, [&](const Leaf& l) {
    for (const auto& ca : l.axioms) out.push_back(label(ca));
  });
  return out;
}

TEST(OrderGroups, PrecedenceWithinCategories) {
  auto cs = classify_all({EquivalentClasses{{named(":F"), some(":p", named(":A"))}},
                          SubClassOf{named(":F"), named(":A")},
                          EquivalentClasses{{named(":F"), named(":B")}}});
  auto b = order_groups(cs);
  ASSERT_EQ(b.simple_direct.size(), 2u);
  EXPECT_EQ(b.simple_direct[0].group, Group::Sc);
  EXPECT_EQ(b.simple_direct[1].group, Group::Ec);
  ASSERT_EQ(b.complex_direct.size(), 1u);
  EXPECT_EQ(b.complex_direct[0].group, Group::Ecr);
}

TEST(OrderGroups, DisjointUnionIsDropped) {
  auto b = order_groups(classify_all({DisjointUnion{F, {named(":A"), named(":B")}}}));
  EXPECT_TRUE(b.empty());
  ASSERT_EQ(b.dropped.size(), 1u);
  EXPECT_EQ(b.dropped[0].group, Group::Du);
}

TEST(OrderGroups, EmptyInput) {
  auto b = order_groups({});
  EXPECT_TRUE(b.empty());
  EXPECT_TRUE(b.dropped.empty());
  auto plan = build_rst(ClassFrame{F, {}}, {});
  EXPECT_EQ(leaf_count(plan.root), 0u);
  EXPECT_TRUE(is_valid_tree(plan.root));
}

TEST(OrderGroups, StableWithinGroup) {
  auto cs = classify_all({SubClassOf{named(":F"), named(":B")}, SubClassOf{named(":F"), named(":A")}});
  auto b = order_groups(cs);
  EXPECT_EQ(b.simple_direct[0].axiom, cs[0].axiom);
  EXPECT_EQ(b.simple_direct[1].axiom, cs[1].axiom);
}

TEST(BuildRst, SubclassOnlyIsSingleNucleus) {
  ClassFrame frame{F, {SubClassOf{named(":F"), named(":P")}, SubClassOf{named(":F"), named(":Q")},
                       SubClassOf{named(":F"), named(":R")}, SubClassOf{named(":Z"), named(":F")}}};
  auto plan = plan_frame(frame);
  ASSERT_EQ(plan.root.children.size(), 1u);
  const RstNode& simple = plan.root.children[0];
  EXPECT_EQ(simple.kind, NodeKind::Nucleus);
  EXPECT_EQ(leaf_count(plan.root), 2u);
  EXPECT_EQ(leaf_labels(plan.root), (std::vector<std::string>{"Sc1", "Sc1", "Sc1", "Sc1*"}));
  for (const auto& c : simple.children) EXPECT_EQ(c.kind, NodeKind::Nucleus);
  EXPECT_TRUE(is_valid_tree(plan.root));
}

TEST(BuildRst, ComplexDirectGetsAdditionally) {
  ClassFrame frame{F, {SubClassOf{named(":F"), named(":P")},
                       SubClassOf{named(":F"), some(":p", named(":Q"))}}};
  auto plan = plan_frame(frame);
  ASSERT_EQ(plan.root.children.size(), 2u);
  const RstNode& sat = plan.root.children[1];
  EXPECT_EQ(sat.kind, NodeKind::Satellite);
  EXPECT_EQ(sat.relation, RstRelation::Elaboration);
  EXPECT_EQ(sat.span()->connector, "Additionally");
}

TEST(BuildRst, ComplexOnlyHasNoConnector) {
  auto plan = plan_frame(ClassFrame{F, {SubClassOf{named(":F"), some(":p", named(":Q"))}}});
  ASSERT_EQ(plan.root.children.size(), 1u);
  EXPECT_EQ(plan.root.children[0].kind, NodeKind::Nucleus);
  EXPECT_TRUE(plan.root.children[0].span()->connector.empty());
}

TEST(BuildRst, ComplexDirectRelations) {
  auto plan = plan_frame(ClassFrame{
      F, {ClassAssertion{"n1", named(":F")}, EquivalentClasses{{named(":F"), some(":p", named(":A"))}},
          SubClassOf{named(":F"), some(":q", named(":B"))}}});
  const RstNode& block = plan.root.children[0];
  ASSERT_EQ(block.children.size(), 3u);
  EXPECT_EQ(block.children[0].leaf()->tmpl, Template::Members);
  EXPECT_EQ(block.children[0].kind, NodeKind::Satellite);
  EXPECT_EQ(block.children[0].relation, RstRelation::Elaboration);
  EXPECT_EQ(block.children[1].leaf()->tmpl, Template::ComplexKindOf);
  EXPECT_EQ(block.children[1].kind, NodeKind::Nucleus);
  EXPECT_FALSE(block.children[1].relation.has_value());
  EXPECT_EQ(block.children[2].leaf()->tmpl, Template::ComplexDefinedAs);
  EXPECT_EQ(block.children[2].relation, RstRelation::Condition);
  EXPECT_TRUE(is_valid_tree(plan.root));
}

TEST(BuildRst, TwoIndirectComplexFormAList) {
  auto plan = plan_frame(ClassFrame{
      F, {SubClassOf{named(":A"), some(":p", named(":F"))},
          EquivalentClasses{{named(":B"), intersection({named(":F"), named(":C")})}}}});
  ASSERT_EQ(plan.root.children.size(), 1u);
  const RstNode& list = plan.root.children[0];
  EXPECT_EQ(list.span()->connector, "Other relevant aspects");
  ASSERT_EQ(list.children.size(), 2u);
  for (const auto& c : list.children) {
    EXPECT_EQ(c.kind, NodeKind::Nucleus);
    EXPECT_EQ(c.relation, RstRelation::List);
  }
  EXPECT_TRUE(is_valid_tree(plan.root));
}

TEST(BuildRst, SingleIndirectUsesSingularConnector) {
  auto plan = plan_frame(ClassFrame{F, {SubClassOf{named(":F"), named(":P")},
                                        SubClassOf{named(":A"), some(":p", named(":F"))}}});
  EXPECT_EQ(plan.root.children.back().span()->connector, "Another relevant aspect");
}

TEST(BuildRst, IndirectSimpleAxiomsAreConverted) {
  auto plan = plan_frame(ClassFrame{
      F, {DisjointClasses{{named(":A"), named(":F")}}, EquivalentClasses{{named(":B"), named(":F")}}}});
  EXPECT_EQ(leaf_labels(plan.root), (std::vector<std::string>{"Ec1", "Dc1"}));
  std::vector<Template> t;
  for_each_leaf(plan.root, [&](const Leaf& l) { t.push_back(l.tmpl); });
  EXPECT_EQ(t, (std::vector<Template>{Template::DefinedAs, Template::DifferentFrom}));
}

TEST(SplitNamedConjunctions, SplitsAndDeduplicates) {
  ClassFrame frame{F, {SubClassOf{named(":F"), named(":A")},
                       SubClassOf{named(":F"), intersection({named(":A"), named(":B")})},
                       SubClassOf{named(":Z"), intersection({named(":F"), named(":B")})}}};
  auto out = split_named_conjunctions(frame);
  ASSERT_EQ(out.axioms.size(), 3u);
  EXPECT_EQ(out.axioms[1], Axiom(SubClassOf{named(":F"), named(":B")}));
  EXPECT_EQ(out.axioms[2], frame.axioms[2]);
}

TEST(RenderTree, OneLinePerNode) {
  auto plan = plan_frame(ClassFrame{F, {SubClassOf{named(":F"), named(":P")},
                                        SubClassOf{named(":F"), some(":p", named(":Q"))}}});
  std::string t = render_tree(plan.root);
  EXPECT_EQ(t,
            "Nucleus - Paragraph\n"
            "  Nucleus - SimpleDirect\n"
            "    Nucleus - Subclass\n"
            "      Nucleus - KindOf Sc1\n"
            "  Satellite Elaboration ComplexDirect \"Additionally\"\n"
            "    Nucleus - ComplexKindOf Scr1\n");
}

int category_rank(Template t) {
  switch (t) {
    case Template::KindOf:
    case Template::SpecialisedKinds:
    case Template::DefinedAs:
    case Template::DifferentFrom: return 0;
    case Template::ComplexKindOf:
    case Template::ComplexDefinedAs:
    case Template::Members: return 1;
    case Template::IndirectItem: return 2;
  }
  return 3;
}

TEST(BuildRst, RandomFramesRespectOrderAndCoverage) {
  testkit::Rng rng(77);
  auto classes = testkit::class_pool(5);
  auto props = testkit::property_pool(2);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<Axiom> axioms;
    const std::size_t n = rng.below(7);
    for (std::size_t i = 0; i < n; ++i) {
      Axiom a = testkit::random_axiom(rng, classes, props, 2);
      if (testkit::oracle_mentions(a, ":F")) axioms.push_back(a);
    }
    std::vector<std::string> with_f = classes;
    with_f.push_back(":F");
    for (std::size_t i = 0; i < 3; ++i) {
      Axiom a = testkit::random_axiom(rng, with_f, props, 1);
      if (testkit::oracle_mentions(a, ":F")) axioms.push_back(a);
    }
    ClassFrame frame{F, axioms};
    auto classified = classify_all(axioms);
    auto plan = build_rst(frame, classified);
    EXPECT_TRUE(is_valid_tree(plan.root));

    std::size_t planned = 0;
    for (const auto& ca : classified) planned += is_planned(ca.group) ? 1 : 0;
    std::size_t in_leaves = 0;
    int last_rank = -1, last_prec = -1;
    for_each_leaf(plan.root, [&](const Leaf& l) {
      int rank = category_rank(l.tmpl);
      EXPECT_GE(rank, last_rank);
      if (rank != last_rank) last_prec = -1;
      for (const auto& ca : l.axioms) {
        ++in_leaves;
        EXPECT_TRUE(is_planned(ca.group));
        EXPECT_GE(precedence(ca.group), last_prec);
        last_prec = precedence(ca.group);
      }
      last_rank = rank;
    });
    EXPECT_EQ(in_leaves, planned);
    EXPECT_EQ(plan.dropped.size(), classified.size() - planned);
  }
}

}  // namespace
