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

// Discourse planning: sorts classified axioms into the four categories and
// arranges them into a nucleus/satellite tree.
//
// Paragraph shape:
//
//   Paragraph
//     SimpleDirect                 nucleus
//       Subclass                   nucleus: kind-of leaf, specialised-kinds leaf
//       defined-as leaf            satellite, elaboration
//       different-from leaf        satellite, elaboration
//     ComplexDirect "Additionally" satellite, elaboration
//       complex kind-of leaf       nucleus
//       complex defined-as leaf    satellite, condition
//       members leaf               satellite, elaboration
//     Indirect                     satellite, elaboration
//       one leaf per axiom         nucleus, list
//
// Absent blocks produce no node; the first present child of any span is
// promoted to nucleus.

#ifndef ELVERB_PLANNER_HPP
#define ELVERB_PLANNER_HPP

#include <algorithm>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "elverb/classifier.hpp"
#include "elverb/model.hpp"
#include "elverb/parser.hpp"

namespace elverb {

enum class Category { SimpleDirect, ComplexDirect, SimpleIndirect, ComplexIndirect };

// Presentation order of groups inside a category: Sc, Ec, Dc, Ca, Scr, Ecr.
inline int precedence(Group g) {
  switch (g) {
    case Group::Sc: return 0;
    case Group::Ec: return 1;
    case Group::Dc: return 2;
    case Group::Ca: return 3;
    case Group::Scr: return 4;
    case Group::Ecr: return 5;
    default: return 6;
  }
}

inline bool is_planned(Group g) {
  return g != Group::Car && g != Group::Dcr && g != Group::Du;
}

struct GroupBuckets {
  std::vector<ClassifiedAxiom> simple_direct;
  std::vector<ClassifiedAxiom> complex_direct;
  std::vector<ClassifiedAxiom> simple_indirect;
  std::vector<ClassifiedAxiom> complex_indirect;
  std::vector<ClassifiedAxiom> dropped;  // Car, Dcr, Du: never realized

  bool empty() const {
    return simple_direct.empty() && complex_direct.empty() && simple_indirect.empty() &&
           complex_indirect.empty();
  }
};

inline std::optional<Category> category_of(const ClassifiedAxiom& ca) {
  if (!is_planned(ca.group)) return std::nullopt;
  const bool direct = ca.directness == Directness::Direct;
  if (ca.group == Group::Ca) return Category::ComplexDirect;
  if (is_complex(ca.group)) return direct ? Category::ComplexDirect : Category::ComplexIndirect;
  return direct ? Category::SimpleDirect : Category::SimpleIndirect;
}

inline GroupBuckets order_groups(std::span<const ClassifiedAxiom> classified) {
  GroupBuckets b;
  for (const auto& ca : classified) {
    auto cat = category_of(ca);
    if (!cat) {
      b.dropped.push_back(ca);
      continue;
    }
    switch (*cat) {
      case Category::SimpleDirect: b.simple_direct.push_back(ca); break;
      case Category::ComplexDirect: b.complex_direct.push_back(ca); break;
      case Category::SimpleIndirect: b.simple_indirect.push_back(ca); break;
      case Category::ComplexIndirect: b.complex_indirect.push_back(ca); break;
    }
  }
  auto by_precedence = [](const ClassifiedAxiom& a, const ClassifiedAxiom& b) {
    return precedence(a.group) < precedence(b.group);
  };
  for (auto* v : {&b.simple_direct, &b.complex_direct, &b.simple_indirect, &b.complex_indirect}) {
    std::stable_sort(v->begin(), v->end(), by_precedence);
  }
  return b;
}

// Rewrites SubClassOf(F, ObjectIntersectionOf(N1 ... Nk)) over named Ni into
// k plain subclass axioms, then drops structural duplicates. Only axioms with
// the designated class as subject are rewritten.
inline ClassFrame split_named_conjunctions(const ClassFrame& frame) {
  ClassFrame out{frame.designated, {}};
  auto push_unique = [&](Axiom a) {
    if (std::find(out.axioms.begin(), out.axioms.end(), a) == out.axioms.end()) {
      out.axioms.push_back(std::move(a));
    }
  };
  for (const auto& axiom : frame.axioms) {
    const auto* sc = std::get_if<SubClassOf>(&axiom);
    const Intersection* conj = sc ? sc->super.as_intersection() : nullptr;
    if (sc && sc->sub.is(frame.designated) && conj &&
        std::all_of(conj->operands.begin(), conj->operands.end(),
                    [](const ClassExpression& e) { return e.is_named(); })) {
      for (const auto& op : conj->operands) push_unique(SubClassOf{sc->sub, op});
    } else {
      push_unique(axiom);
    }
  }
  return out;
}

enum class RstRelation { Elaboration, Condition, List };
enum class NodeKind { Nucleus, Satellite };
enum class Block { Paragraph, SimpleDirect, Subclass, ComplexDirect, Indirect };

enum class Template {
  KindOf,            // Sc1
  SpecialisedKinds,  // inverted Sc2
  DefinedAs,         // Ec1
  DifferentFrom,     // Dc1
  ComplexKindOf,     // Scr1
  ComplexDefinedAs,  // Ecr1
  Members,           // Ca
  IndirectItem,      // any axiom still indirect
};

inline std::string_view to_string(RstRelation r) {
  switch (r) {
    case RstRelation::Elaboration: return "Elaboration";
    case RstRelation::Condition: return "Condition";
    case RstRelation::List: return "List";
  }
  return "?";
}

inline std::string_view to_string(Block b) {
  switch (b) {
    case Block::Paragraph: return "Paragraph";
    case Block::SimpleDirect: return "SimpleDirect";
    case Block::Subclass: return "Subclass";
    case Block::ComplexDirect: return "ComplexDirect";
    case Block::Indirect: return "Indirect";
  }
  return "?";
}

inline std::string_view to_string(Template t) {
  switch (t) {
    case Template::KindOf: return "KindOf";
    case Template::SpecialisedKinds: return "SpecialisedKinds";
    case Template::DefinedAs: return "DefinedAs";
    case Template::DifferentFrom: return "DifferentFrom";
    case Template::ComplexKindOf: return "ComplexKindOf";
    case Template::ComplexDefinedAs: return "ComplexDefinedAs";
    case Template::Members: return "Members";
    case Template::IndirectItem: return "IndirectItem";
  }
  return "?";
}

struct Span {
  Block block;
  std::string connector;  // discourse marker introducing the span, may be empty
};

struct Leaf {
  Template tmpl;
  std::vector<ClassifiedAxiom> axioms;
};

struct RstNode {
  NodeKind kind = NodeKind::Nucleus;
  std::optional<RstRelation> relation;
  std::variant<Span, Leaf> payload;
  std::vector<RstNode> children;

  const Leaf* leaf() const { return std::get_if<Leaf>(&payload); }
  const Span* span() const { return std::get_if<Span>(&payload); }
};

struct RstPlan {
  ClassId designated;
  RstNode root;
  std::vector<ClassifiedAxiom> dropped;
};

namespace detail {

inline RstNode leaf_node(Template t, std::vector<ClassifiedAxiom> axioms, NodeKind kind,
                         std::optional<RstRelation> rel) {
  return RstNode{kind, rel, Leaf{t, std::move(axioms)}, {}};
}

// First present child becomes the nucleus and loses its relation.
inline void promote_first(std::vector<RstNode>& children) {
  if (children.empty()) return;
  children.front().kind = NodeKind::Nucleus;
  children.front().relation.reset();
  for (std::size_t i = 1; i < children.size(); ++i) {
    if (!children[i].relation) children[i].relation = RstRelation::Elaboration;
  }
}

template <typename Pred>
std::vector<ClassifiedAxiom> take(const std::vector<ClassifiedAxiom>& v, Pred pred) {
  std::vector<ClassifiedAxiom> out;
  std::copy_if(v.begin(), v.end(), std::back_inserter(out), pred);
  return out;
}

}  // namespace detail

// Builds the paragraph tree. Indirect simple Sc/Ec/Dc axioms are converted to
// direct form first; only complex indirect axioms reach the indirect list.
inline RstPlan build_rst(const ClassFrame& frame, std::span<const ClassifiedAxiom> classified) {
  std::vector<ClassifiedAxiom> converted;
  converted.reserve(classified.size());
  for (const auto& ca : classified) {
    const bool simple_indirect = ca.directness == Directness::Indirect &&
                                 (ca.group == Group::Sc || ca.group == Group::Ec ||
                                  ca.group == Group::Dc);
    converted.push_back(simple_indirect ? to_direct(ca, frame.designated) : ca);
  }
  GroupBuckets b = order_groups(converted);
  auto group_is = [](Group g) { return [g](const ClassifiedAxiom& ca) { return ca.group == g; }; };

  RstPlan plan{frame.designated, RstNode{NodeKind::Nucleus, std::nullopt, Span{Block::Paragraph, {}}, {}},
               b.dropped};
  auto& blocks = plan.root.children;

  if (!b.simple_direct.empty()) {
    RstNode simple{NodeKind::Nucleus, std::nullopt, Span{Block::SimpleDirect, {}}, {}};
    auto kind_of = detail::take(b.simple_direct, [](const ClassifiedAxiom& ca) {
      return ca.group == Group::Sc && !ca.inverted;
    });
    auto specialised = detail::take(b.simple_direct, [](const ClassifiedAxiom& ca) {
      return ca.group == Group::Sc && ca.inverted;
    });
    if (!kind_of.empty() || !specialised.empty()) {
      RstNode sub{NodeKind::Nucleus, std::nullopt, Span{Block::Subclass, {}}, {}};
      if (!kind_of.empty()) {
        sub.children.push_back(
            detail::leaf_node(Template::KindOf, std::move(kind_of), NodeKind::Nucleus, std::nullopt));
      }
      if (!specialised.empty()) {
        sub.children.push_back(detail::leaf_node(Template::SpecialisedKinds, std::move(specialised),
                                                 NodeKind::Nucleus, RstRelation::Elaboration));
      }
      sub.children.front().relation.reset();
      simple.children.push_back(std::move(sub));
    }
    if (auto ec = detail::take(b.simple_direct, group_is(Group::Ec)); !ec.empty()) {
      simple.children.push_back(detail::leaf_node(Template::DefinedAs, std::move(ec),
                                                  NodeKind::Satellite, RstRelation::Elaboration));
    }
    if (auto dc = detail::take(b.simple_direct, group_is(Group::Dc)); !dc.empty()) {
      simple.children.push_back(detail::leaf_node(Template::DifferentFrom, std::move(dc),
                                                  NodeKind::Satellite, RstRelation::Elaboration));
    }
    detail::promote_first(simple.children);
    blocks.push_back(std::move(simple));
  }

  if (!b.complex_direct.empty()) {
    // Leaves follow group precedence (Ca before Scr and Ecr); the nucleus is
    // the subclass leaf when there is one.
    RstNode complex{NodeKind::Satellite, RstRelation::Elaboration, Span{Block::ComplexDirect, {}}, {}};
    if (auto ca = detail::take(b.complex_direct, group_is(Group::Ca)); !ca.empty()) {
      complex.children.push_back(detail::leaf_node(Template::Members, std::move(ca),
                                                   NodeKind::Satellite, RstRelation::Elaboration));
    }
    if (auto scr = detail::take(b.complex_direct, group_is(Group::Scr)); !scr.empty()) {
      complex.children.push_back(detail::leaf_node(Template::ComplexKindOf, std::move(scr),
                                                   NodeKind::Satellite, RstRelation::Elaboration));
    }
    if (auto ecr = detail::take(b.complex_direct, group_is(Group::Ecr)); !ecr.empty()) {
      complex.children.push_back(detail::leaf_node(Template::ComplexDefinedAs, std::move(ecr),
                                                   NodeKind::Satellite, RstRelation::Condition));
    }
    auto nucleus = std::find_if(complex.children.begin(), complex.children.end(), [](const RstNode& n) {
      return n.leaf()->tmpl == Template::ComplexKindOf;
    });
    if (nucleus == complex.children.end()) {
      nucleus = std::find_if(complex.children.begin(), complex.children.end(), [](const RstNode& n) {
        return n.leaf()->tmpl == Template::ComplexDefinedAs;
      });
    }
    if (nucleus == complex.children.end()) nucleus = complex.children.begin();
    nucleus->kind = NodeKind::Nucleus;
    nucleus->relation.reset();
    if (!blocks.empty()) std::get<Span>(complex.payload).connector = "Additionally";
    blocks.push_back(std::move(complex));
  }

  std::vector<ClassifiedAxiom> indirect = b.simple_indirect;
  indirect.insert(indirect.end(), b.complex_indirect.begin(), b.complex_indirect.end());
  if (!indirect.empty()) {
    RstNode list{NodeKind::Satellite, RstRelation::Elaboration,
                 Span{Block::Indirect, indirect.size() == 1 ? "Another relevant aspect"
                                                            : "Other relevant aspects"},
                 {}};
    for (auto& ca : indirect) {
      list.children.push_back(
          detail::leaf_node(Template::IndirectItem, {ca}, NodeKind::Nucleus, RstRelation::List));
    }
    blocks.push_back(std::move(list));
  }

  if (!blocks.empty()) {
    blocks.front().kind = NodeKind::Nucleus;
    blocks.front().relation.reset();
  }
  return plan;
}

// Splits named conjunctions, classifies every frame axiom and plans.
inline RstPlan plan_frame(const ClassFrame& frame) {
  ClassFrame prepared = split_named_conjunctions(frame);
  std::vector<ClassifiedAxiom> classified;
  for (const auto& a : prepared.axioms) classified.push_back(classify(a, prepared.designated));
  return build_rst(prepared, classified);
}

template <typename Fn>
void for_each_leaf(const RstNode& node, Fn&& fn) {
  if (const Leaf* l = node.leaf()) fn(*l);
  for (const auto& c : node.children) for_each_leaf(c, fn);
}

inline std::size_t leaf_count(const RstNode& node) {
  std::size_t n = 0;
  for_each_leaf(node, [&](const Leaf&) { ++n; });
  return n;
}

namespace detail {

inline bool valid_below(const RstNode& node) {
  const bool list_parent =
      std::any_of(node.children.begin(), node.children.end(),
                  [](const RstNode& c) { return c.relation == RstRelation::List; });
  for (const auto& c : node.children) {
    if (c.kind == NodeKind::Satellite && !c.relation) return false;
    if (list_parent && c.kind != NodeKind::Nucleus) return false;
    if (!valid_below(c)) return false;
  }
  return node.leaf() == nullptr || node.children.empty();
}

}  // namespace detail

// Root has no relation, every satellite has one, and list siblings are nuclei.
inline bool is_valid_tree(const RstNode& root) {
  return !root.relation && root.kind == NodeKind::Nucleus && detail::valid_below(root);
}

// One node per line: kind, relation ("-" for none), then the block or the
// leaf template with the labels of its axioms.
inline std::string render_tree(const RstNode& node, int depth = 0) {
  std::string line(std::size_t(depth) * 2, ' ');
  line += node.kind == NodeKind::Nucleus ? "Nucleus" : "Satellite";
  line += ' ';
  line += node.relation ? std::string(to_string(*node.relation)) : std::string("-");
  line += ' ';
  if (const Span* s = node.span()) {
    line += to_string(s->block);
    if (!s->connector.empty()) line += " \"" + s->connector + "\"";
  } else {
    const Leaf* l = node.leaf();
    line += to_string(l->tmpl);
    for (const auto& ca : l->axioms) line += " " + label(ca);
  }
  line += '\n';
  for (const auto& c : node.children) line += render_tree(c, depth + 1);
  return line;
}

}  // namespace elverb

#endif  // ELVERB_PLANNER_HPP
