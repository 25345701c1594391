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

// In-memory representation of the OWL-EL subset: class expressions, axioms,
// ontologies and the usage-based frame of a designated class.

#ifndef ELVERB_MODEL_HPP
#define ELVERB_MODEL_HPP

#include <algorithm>
#include <cassert>
#include <compare>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "elverb/errors.hpp"

namespace elverb {

// Opaque identifier, tagged so class and property ids do not mix.
template <typename Tag>
struct Id {
  std::string iri;

  Id() = default;
  explicit Id(std::string text) : iri(std::move(text)) {}

  bool empty() const { return iri.empty(); }
  auto operator<=>(const Id&) const = default;
};

struct ClassTag {};
struct PropertyTag {};
using ClassId = Id<ClassTag>;
using PropertyId = Id<PropertyTag>;

// Heap-allocated value with deep-copy semantics; lets variants recurse.
template <typename T>
class Box {
 public:
  Box(T value) : ptr_(std::make_unique<T>(std::move(value))) {}
  Box(const Box& other) : ptr_(std::make_unique<T>(*other.ptr_)) {}
  Box(Box&&) noexcept = default;
  Box& operator=(const Box& other) {
    if (this != &other) ptr_ = std::make_unique<T>(*other.ptr_);
    return *this;
  }
  Box& operator=(Box&&) noexcept = default;

  const T& operator*() const { return *ptr_; }
  const T* operator->() const { return ptr_.get(); }

  friend bool operator==(const Box& a, const Box& b) { return *a == *b; }

 private:
  std::unique_ptr<T> ptr_;
};

struct ClassExpression;

struct Named {
  ClassId id;
  bool operator==(const Named&) const = default;
};

struct Intersection {
  std::vector<ClassExpression> operands;  // at least two, source order
  bool operator==(const Intersection&) const = default;
};

struct Existential {
  PropertyId property;
  Box<ClassExpression> filler;
  bool operator==(const Existential&) const = default;
};

struct ClassExpression {
  std::variant<Named, Intersection, Existential> node;

  ClassExpression(Named n) : node(std::move(n)) {}
  ClassExpression(Intersection i) : node(std::move(i)) {}
  ClassExpression(Existential e) : node(std::move(e)) {}

  bool operator==(const ClassExpression&) const = default;

  bool is_named() const { return std::holds_alternative<Named>(node); }
  const Named* as_named() const { return std::get_if<Named>(&node); }
  const Intersection* as_intersection() const { return std::get_if<Intersection>(&node); }
  const Existential* as_existential() const { return std::get_if<Existential>(&node); }

  bool is(const ClassId& id) const {
    const Named* n = as_named();
    return n != nullptr && n->id == id;
  }
};

inline ClassExpression named(std::string iri) { return Named{ClassId(std::move(iri))}; }

inline ClassExpression intersection(std::vector<ClassExpression> operands) {
  return Intersection{std::move(operands)};
}

inline ClassExpression some(std::string property, ClassExpression filler) {
  return Existential{PropertyId(std::move(property)), Box<ClassExpression>(std::move(filler))};
}

struct SubClassOf {
  ClassExpression sub;
  ClassExpression super;
  bool operator==(const SubClassOf&) const = default;
};

struct EquivalentClasses {
  std::vector<ClassExpression> operands;
  bool operator==(const EquivalentClasses&) const = default;
};

struct DisjointClasses {
  std::vector<ClassExpression> operands;
  bool operator==(const DisjointClasses&) const = default;
};

// Individuals are plain tokens; they only occur here.
struct ClassAssertion {
  std::string individual;
  ClassExpression type;
  bool operator==(const ClassAssertion&) const = default;
};

struct DisjointUnion {
  ClassId union_class;
  std::vector<ClassExpression> disjuncts;
  bool operator==(const DisjointUnion&) const = default;
};

using Axiom =
    std::variant<SubClassOf, EquivalentClasses, DisjointClasses, ClassAssertion, DisjointUnion>;

enum class Article { None, A, An, The };

inline const char* to_string(Article a) {
  switch (a) {
    case Article::A: return "a";
    case Article::An: return "an";
    case Article::The: return "the";
    case Article::None: break;
  }
  return "";
}

struct LexEntry {
  std::string id;  // class or property iri
  std::string preferred_name;
  Article article = Article::None;
  std::optional<std::string> property_phrase;
  // Word placed between a property phrase and its filler; overrides the
  // "has ... in" heuristic when present (an empty string means a plain space).
  std::optional<std::string> joiner;
};

using Lexicon = std::map<std::string, LexEntry>;

struct Ontology {
  std::set<ClassId> classes;
  std::set<PropertyId> properties;
  std::set<std::string> individuals;
  std::vector<Axiom> axioms;
  Lexicon lexicon;
};

struct ClassFrame {
  ClassId designated;
  std::vector<Axiom> axioms;
};

// Visits every named class in an expression, depth first, source order.
template <typename Fn>
void for_each_class(const ClassExpression& expr, Fn&& fn) {
  if (const auto* n = expr.as_named()) {
    fn(n->id);
  } else if (const auto* i = expr.as_intersection()) {
    for (const auto& op : i->operands) for_each_class(op, fn);
  } else if (const auto* e = expr.as_existential()) {
    for_each_class(*e->filler, fn);
  }
}

template <typename Fn>
void for_each_property(const ClassExpression& expr, Fn&& fn) {
  if (const auto* i = expr.as_intersection()) {
    for (const auto& op : i->operands) for_each_property(op, fn);
  } else if (const auto* e = expr.as_existential()) {
    fn(e->property);
    for_each_property(*e->filler, fn);
  }
}

// Top-level class-expression operands of an axiom, in argument order.
inline std::vector<const ClassExpression*> operands(const Axiom& axiom) {
  std::vector<const ClassExpression*> out;
  std::visit(
      [&](const auto& a) {
        using T = std::decay_t<decltype(a)>;
        if constexpr (std::is_same_v<T, SubClassOf>) {
          out = {&a.sub, &a.super};
        } else if constexpr (std::is_same_v<T, EquivalentClasses> ||
                             std::is_same_v<T, DisjointClasses>) {
          for (const auto& op : a.operands) out.push_back(&op);
        } else if constexpr (std::is_same_v<T, ClassAssertion>) {
          out = {&a.type};
        } else {
          for (const auto& op : a.disjuncts) out.push_back(&op);
        }
      },
      axiom);
  return out;
}

template <typename Fn>
void for_each_class(const Axiom& axiom, Fn&& fn) {
  if (const auto* du = std::get_if<DisjointUnion>(&axiom)) fn(du->union_class);
  for (const ClassExpression* op : operands(axiom)) for_each_class(*op, fn);
}

inline bool mentions(const ClassExpression& expr, const ClassId& cls) {
  if (const auto* n = expr.as_named()) return n->id == cls;
  if (const auto* i = expr.as_intersection()) {
    return std::any_of(i->operands.begin(), i->operands.end(),
                       [&](const ClassExpression& op) { return mentions(op, cls); });
  }
  return mentions(*expr.as_existential()->filler, cls);
}

inline bool mentions(const Axiom& axiom, const ClassId& cls) {
  if (const auto* du = std::get_if<DisjointUnion>(&axiom); du && du->union_class == cls) {
    return true;
  }
  for (const ClassExpression* op : operands(axiom)) {
    if (mentions(*op, cls)) return true;
  }
  return false;
}

// Usage-based view: every axiom that mentions the class, in ontology order.
inline ClassFrame collect_frame(const Ontology& ontology, const ClassId& cls) {
  if (!ontology.classes.contains(cls)) throw UnknownClass(cls.iri);
  ClassFrame frame{cls, {}};
  for (const auto& axiom : ontology.axioms) {
    if (mentions(axiom, cls)) frame.axioms.push_back(axiom);
  }
  return frame;
}

}  // namespace elverb

#endif  // ELVERB_MODEL_HPP
