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

// Axiom group labels (Sc, Scr, Ec, ...), directness with respect to a
// designated class, and per-class pattern labels such as "EcEcrScr".

#ifndef ELVERB_CLASSIFIER_HPP
#define ELVERB_CLASSIFIER_HPP

#include <algorithm>
#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "elverb/errors.hpp"
#include "elverb/model.hpp"

namespace elverb {

enum class Group { Ca, Car, Dc, Dcr, Du, Ec, Ecr, Sc, Scr };

inline constexpr std::array<Group, 9> kAllGroups = {Group::Ca, Group::Car, Group::Dc,
                                                    Group::Dcr, Group::Du, Group::Ec,
                                                    Group::Ecr, Group::Sc, Group::Scr};

inline std::string_view to_string(Group g) {
  switch (g) {
    case Group::Ca: return "Ca";
    case Group::Car: return "Car";
    case Group::Dc: return "Dc";
    case Group::Dcr: return "Dcr";
    case Group::Du: return "Du";
    case Group::Ec: return "Ec";
    case Group::Ecr: return "Ecr";
    case Group::Sc: return "Sc";
    case Group::Scr: return "Scr";
  }
  return "?";
}

// Complex groups carry the trailing 'r'. Du has no complex counterpart.
inline bool is_complex(Group g) {
  return g == Group::Car || g == Group::Dcr || g == Group::Ecr || g == Group::Scr;
}

enum class Directness { Direct, Indirect };

struct ClassifiedAxiom {
  Axiom axiom;
  Group group = Group::Sc;
  Directness directness = Directness::Direct;
  // Set when an indirect SubClassOf is read from the super class's side.
  bool inverted = false;

  bool operator==(const ClassifiedAxiom&) const = default;
};

// "Sc1", "Ecr2", "Ca", with a trailing '*' for inverted subclass axioms.
inline std::string label(const ClassifiedAxiom& ca) {
  std::string s(to_string(ca.group));
  if (ca.group != Group::Ca && ca.group != Group::Car) {
    s += ca.directness == Directness::Direct ? '1' : '2';
  }
  if (ca.inverted) s += '*';
  return s;
}

inline bool is_simple_axiom(const Axiom& axiom) {
  for (const ClassExpression* op : operands(axiom)) {
    if (!op->is_named()) return false;
  }
  return true;
}

inline ClassifiedAxiom classify(const Axiom& axiom, const ClassId& designated) {
  if (!mentions(axiom, designated)) {
    throw NotInFrame("axiom does not mention " + designated.iri);
  }
  const bool simple = is_simple_axiom(axiom);
  ClassifiedAxiom out{axiom};
  std::visit(
      [&](const auto& a) {
        using T = std::decay_t<decltype(a)>;
        if constexpr (std::is_same_v<T, SubClassOf>) {
          out.group = simple ? Group::Sc : Group::Scr;
          out.directness = a.sub.is(designated) ? Directness::Direct : Directness::Indirect;
        } else if constexpr (std::is_same_v<T, EquivalentClasses>) {
          out.group = simple ? Group::Ec : Group::Ecr;
          out.directness =
              a.operands.front().is(designated) ? Directness::Direct : Directness::Indirect;
        } else if constexpr (std::is_same_v<T, DisjointClasses>) {
          out.group = simple ? Group::Dc : Group::Dcr;
          out.directness =
              a.operands.front().is(designated) ? Directness::Direct : Directness::Indirect;
        } else if constexpr (std::is_same_v<T, ClassAssertion>) {
          out.group = simple ? Group::Ca : Group::Car;
          out.directness = Directness::Direct;
        } else {
          out.group = Group::Du;
          out.directness =
              a.union_class == designated ? Directness::Direct : Directness::Indirect;
        }
      },
      axiom);
  return out;
}

// Re-focuses an indirect simple Sc/Ec/Dc axiom on the designated class.
// Subclass axioms are flagged as inverted; n-ary axioms move the designated
// class to the front, keeping the remaining operands in order.
inline ClassifiedAxiom to_direct(const ClassifiedAxiom& ca, const ClassId& designated) {
  if (ca.directness == Directness::Direct) return ca;
  if (ca.group != Group::Sc && ca.group != Group::Ec && ca.group != Group::Dc) {
    throw NotConvertible("cannot convert " + label(ca) + " to direct form");
  }
  ClassifiedAxiom out = ca;
  out.directness = Directness::Direct;
  if (ca.group == Group::Sc) {
    out.inverted = true;
    return out;
  }
  auto move_front = [&](std::vector<ClassExpression>& ops) {
    auto it = std::find_if(ops.begin(), ops.end(),
                           [&](const ClassExpression& e) { return e.is(designated); });
    if (it == ops.end()) throw NotConvertible("designated class is not an operand");
    std::rotate(ops.begin(), it, it + 1);
  };
  if (auto* ec = std::get_if<EquivalentClasses>(&out.axiom)) move_front(ec->operands);
  if (auto* dc = std::get_if<DisjointClasses>(&out.axiom)) move_front(dc->operands);
  return out;
}

// Distinct group labels of a frame, ASCII-sorted and concatenated.
struct PatternLabel {
  std::string value;
  auto operator<=>(const PatternLabel&) const = default;
  bool contains(Group g) const {
    return std::find(groups.begin(), groups.end(), g) != groups.end();
  }
  std::vector<Group> groups;
};

inline PatternLabel pattern_label(const ClassFrame& frame) {
  std::vector<std::string_view> names;
  std::vector<Group> groups;
  for (const auto& axiom : frame.axioms) {
    Group g = classify(axiom, frame.designated).group;
    if (std::find(groups.begin(), groups.end(), g) == groups.end()) groups.push_back(g);
  }
  std::sort(groups.begin(), groups.end(),
            [](Group a, Group b) { return to_string(a) < to_string(b); });
  PatternLabel p;
  for (Group g : groups) p.value += to_string(g);
  p.groups = std::move(groups);
  return p;
}

}  // namespace elverb

#endif  // ELVERB_CLASSIFIER_HPP
