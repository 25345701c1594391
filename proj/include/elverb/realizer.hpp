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

// Surface realization: turns a planned paragraph tree into English text using
// a fixed template catalogue, list aggregation and lexicon-driven articles.
//
// Articles are applied to noun phrases in subject position and inside
// rendered class expressions. Aggregated lists of named classes (kind-of,
// specialised-kinds, defined-as, different-from objects) and the designated
// class inside connective phrases use the bare preferred name.

#ifndef ELVERB_REALIZER_HPP
#define ELVERB_REALIZER_HPP

#include <algorithm>
#include <cctype>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "elverb/classifier.hpp"
#include "elverb/model.hpp"
#include "elverb/planner.hpp"

namespace elverb {

struct RealizerOptions {
  bool elide_rolegroup = false;
  bool guess_articles = false;
  std::string rolegroup_property = ":RoleGroup";
};

enum class Role { Subject, Object, Clause };

struct NounPhrase {
  std::string text;
  bool article_applied = false;
};

struct Sentence {
  std::string text;
  std::vector<std::string> groups;  // labels of the axioms that produced it
};

struct Paragraph {
  std::vector<Sentence> sentences;
  std::string bullet_intro;
  std::vector<Sentence> bullets;

  bool empty() const { return sentences.empty() && bullets.empty(); }

  std::string text() const {
    std::string out;
    for (const auto& s : sentences) {
      if (!out.empty()) out += ' ';
      out += s.text;
    }
    if (!bullets.empty()) {
      if (!out.empty()) out += ' ';
      out += bullet_intro;
      for (const auto& b : bullets) out += "\n- " + b.text;
    }
    return out;
  }
};

// Uppercases the first alphabetic character.
inline std::string capitalize_first(std::string s) {
  for (char& c : s) {
    if (std::isalpha(static_cast<unsigned char>(c))) {
      c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
      break;
    }
  }
  return s;
}

// "a", "a and b", "a, b and c" (no serial comma).
inline std::string join_list(std::span<const std::string> items) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i > 0) out += (i + 1 == items.size()) ? " and " : ", ";
    out += items[i];
  }
  return out;
}

enum class Aggregate { KindOf, SpecialisedKinds, DefinedAs, DifferentFrom };

// Combines same-subject statements into one sentence.
inline std::string aggregate(Aggregate tmpl, std::string_view subject,
                             std::span<const std::string> objects) {
  const std::string list = join_list(objects);
  const std::string subj(subject);
  switch (tmpl) {
    case Aggregate::KindOf: return capitalize_first(subj + " is a kind of " + list + ".");
    case Aggregate::SpecialisedKinds:
      return objects.size() == 1 ? "A more specialised kind of " + subj + " is " + list + "."
                                 : "More specialised kinds of " + subj + " are " + list + ".";
    case Aggregate::DefinedAs: return capitalize_first(subj + " is defined as " + list + ".");
    case Aggregate::DifferentFrom: return "Also " + subj + " is different from " + list + ".";
  }
  return {};
}

class Realizer {
 public:
  Realizer(const Lexicon& lexicon, RealizerOptions options = {})
      : lexicon_(lexicon), options_(std::move(options)) {}

  // Preferred name, or the id without its leading ':'.
  std::string name(const std::string& id) const {
    if (auto it = lexicon_.find(id); it != lexicon_.end()) return it->second.preferred_name;
    return id.size() > 1 && id.front() == ':' ? id.substr(1) : id;
  }

  Article article(const std::string& id) const {
    Article a = Article::None;
    if (auto it = lexicon_.find(id); it != lexicon_.end()) a = it->second.article;
    if (a == Article::None && options_.guess_articles) {
      std::string n = name(id);
      if (!n.empty()) {
        char c = static_cast<char>(std::tolower(static_cast<unsigned char>(n.front())));
        a = std::string_view("aeiou").find(c) != std::string_view::npos ? Article::An : Article::A;
      }
    }
    return a;
  }

  NounPhrase noun_phrase(const ClassId& id) const {
    Article a = article(id.iri);
    if (a == Article::None) return {name(id.iri), false};
    return {std::string(to_string(a)) + " " + name(id.iri), true};
  }

  std::string property_clause(const Existential& e) const {
    std::string phrase;
    std::optional<std::string> joiner;
    if (auto it = lexicon_.find(e.property.iri); it != lexicon_.end()) {
      phrase = it->second.property_phrase.value_or(it->second.preferred_name);
      joiner = it->second.joiner;
    } else {
      phrase = name(e.property.iri);
    }
    std::string glue = " ";
    if (joiner) {
      if (!joiner->empty()) glue = " " + *joiner + " ";
    } else if (phrase == "has" || phrase.rfind("has ", 0) == 0) {
      glue = " in ";
    }
    return phrase + glue + render_expression(*e.filler, Role::Object).text;
  }

  NounPhrase render_expression(const ClassExpression& expr, Role role) const {
    if (const auto* n = expr.as_named()) {
      NounPhrase np = noun_phrase(n->id);
      if (role == Role::Clause) np.text = "is " + np.text;
      return np;
    }
    if (const auto* e = expr.as_existential()) {
      if (elided(*e)) return render_expression(*e->filler, role);
      return {property_clause(*e), false};
    }
    const auto& ops = expr.as_intersection()->operands;
    if (role == Role::Clause) return {"is " + render_expression(expr, Role::Object).text, false};
    if (role == Role::Object &&
        std::all_of(ops.begin(), ops.end(), [](const ClassExpression& c) { return c.is_named(); })) {
      std::vector<std::string> items;
      bool any_article = false;
      for (const auto& op : ops) {
        NounPhrase np = noun_phrase(op.as_named()->id);
        any_article |= np.article_applied;
        items.push_back(std::move(np.text));
      }
      return {join_list(items), any_article};
    }
    auto head = std::find_if(ops.begin(), ops.end(), [](const ClassExpression& c) { return c.is_named(); });
    NounPhrase out = head == ops.end() ? NounPhrase{"something", false} : noun_phrase(head->as_named()->id);
    std::vector<std::string> parts;
    for (auto it = ops.begin(); it != ops.end(); ++it) {
      if (it != head) clauses(*it, parts);
    }
    std::string joined;
    for (std::size_t i = 0; i < parts.size(); ++i) joined += (i ? ", and " : "") + parts[i];
    out.text += " that " + joined;
    return out;
  }

  Paragraph realize(const RstPlan& plan) const {
    Paragraph para;
    const ClassId& focus = plan.designated;
    const std::string subject = noun_phrase(focus).text;
    const std::string bare = name(focus.iri);
    realize_node(plan.root, focus, subject, bare, para);
    for (auto& s : para.sentences) s.text = capitalize_first(std::move(s.text));
    for (auto& s : para.bullets) s.text = capitalize_first(std::move(s.text));
    return para;
  }

  // The axiom stated from its own subject's point of view, no final period.
  std::string direct_form(const Axiom& axiom) const {
    return std::visit(
        [&](const auto& a) -> std::string {
          using T = std::decay_t<decltype(a)>;
          if constexpr (std::is_same_v<T, SubClassOf>) {
            const char* verb = a.super.as_intersection() ? " is defined as " : " is a kind of ";
            return render_expression(a.sub, Role::Subject).text + verb +
                   render_expression(a.super, Role::Object).text;
          } else if constexpr (std::is_same_v<T, EquivalentClasses> ||
                               std::is_same_v<T, DisjointClasses>) {
            const char* verb = std::is_same_v<T, EquivalentClasses> ? " is defined as "
                                                                    : " is different from ";
            std::vector<std::string> rest;
            for (std::size_t i = 1; i < a.operands.size(); ++i) {
              rest.push_back(render_expression(a.operands[i], Role::Object).text);
            }
            return render_expression(a.operands.front(), Role::Subject).text + verb +
                   join_list(rest);
          } else if constexpr (std::is_same_v<T, ClassAssertion>) {
            return name(a.individual) + " is " + render_expression(a.type, Role::Object).text;
          } else {
            std::vector<std::string> rest;
            for (const auto& d : a.disjuncts) rest.push_back(render_expression(d, Role::Object).text);
            return noun_phrase(a.union_class).text + " is exactly one of " + join_list(rest);
          }
        },
        axiom);
  }

 private:
  bool elided(const Existential& e) const {
    return options_.elide_rolegroup && e.property.iri == options_.rolegroup_property;
  }

  // Clause fragments for a conjunct that follows the head noun.
  void clauses(const ClassExpression& expr, std::vector<std::string>& out) const {
    if (const auto* n = expr.as_named()) {
      out.push_back("is " + noun_phrase(n->id).text);
    } else if (const auto* e = expr.as_existential()) {
      if (elided(*e)) {
        clauses(*e->filler, out);
      } else {
        out.push_back(property_clause(*e));
      }
    } else {
      for (const auto& op : expr.as_intersection()->operands) clauses(op, out);
    }
  }

  static void add_unique(std::vector<std::string>& v, std::string s) {
    if (std::find(v.begin(), v.end(), s) == v.end()) v.push_back(std::move(s));
  }

  static std::vector<std::string> labels(std::span<const ClassifiedAxiom> axioms) {
    std::vector<std::string> out;
    for (const auto& ca : axioms) add_unique(out, label(ca));
    return out;
  }

  // Bare names of every operand except the designated class.
  std::vector<std::string> other_names(std::span<const ClassifiedAxiom> axioms,
                                       const ClassId& focus) const {
    std::vector<std::string> out;
    for (const auto& ca : axioms) {
      for (const ClassExpression* op : operands(ca.axiom)) {
        if (!op->is(focus)) add_unique(out, bare_or_rendered(*op));
      }
    }
    return out;
  }

  std::string bare_or_rendered(const ClassExpression& e) const {
    if (const auto* n = e.as_named()) return name(n->id.iri);
    return render_expression(e, Role::Object).text;
  }

  void realize_leaf(const Leaf& leaf, const ClassId& focus, const std::string& subject,
                    const std::string& bare, Paragraph& para) const {
    std::vector<std::string> groups = labels(leaf.axioms);
    switch (leaf.tmpl) {
      case Template::KindOf:
        para.sentences.push_back(
            {aggregate(Aggregate::KindOf, subject, other_names(leaf.axioms, focus)), groups});
        break;
      case Template::SpecialisedKinds:
        para.sentences.push_back(
            {aggregate(Aggregate::SpecialisedKinds, bare, other_names(leaf.axioms, focus)), groups});
        break;
      case Template::DefinedAs: {
        auto objects = other_names(leaf.axioms, focus);
        if (para.sentences.empty()) {
          para.sentences.push_back({aggregate(Aggregate::DefinedAs, subject, objects), groups});
        } else {
          Sentence& last = para.sentences.back();
          last.text.pop_back();
          last.text += ", and " + subject + " is defined as " + join_list(objects) + ".";
          for (auto& g : groups) add_unique(last.groups, g);
        }
        break;
      }
      case Template::DifferentFrom:
        para.sentences.push_back(
            {aggregate(Aggregate::DifferentFrom, subject, other_names(leaf.axioms, focus)), groups});
        break;
      case Template::ComplexKindOf:
      case Template::ComplexDefinedAs:
      case Template::Members:
      case Template::IndirectItem:
        break;  // composed by the enclosing span
    }
  }

  // Members are collected separately so they always close the sentence.
  void complex_parts(const Leaf& leaf, const ClassId& focus, std::vector<std::string>& parts,
                     std::vector<std::string>& members) const {
    for (const auto& ca : leaf.axioms) {
      if (const auto* sc = std::get_if<SubClassOf>(&ca.axiom)) {
        parts.push_back("is a kind of " + render_expression(sc->super, Role::Object).text);
      } else if (const auto* ec = std::get_if<EquivalentClasses>(&ca.axiom)) {
        for (const auto& op : ec->operands) {
          if (!op.is(focus)) parts.push_back("is defined as " + render_expression(op, Role::Object).text);
        }
      } else if (const auto* as = std::get_if<ClassAssertion>(&ca.axiom)) {
        add_unique(members, name(as->individual));
      }
    }
  }

  void realize_node(const RstNode& node, const ClassId& focus, const std::string& subject,
                    const std::string& bare, Paragraph& para) const {
    if (const Leaf* leaf = node.leaf()) {
      realize_leaf(*leaf, focus, subject, bare, para);
      return;
    }
    const Span& span = *node.span();
    if (span.block == Block::ComplexDirect) {
      std::vector<std::string> parts, members, groups;
      for (const auto& child : node.children) {
        complex_parts(*child.leaf(), focus, parts, members);
        for (auto& g : labels(child.leaf()->axioms)) add_unique(groups, g);
      }
      if (!members.empty()) parts.push_back("has members " + join_list(members));
      std::string text = span.connector.empty() ? "" : span.connector + ", ";
      text += subject;
      for (std::size_t i = 0; i < parts.size(); ++i) text += (i ? ", and " : " ") + parts[i];
      para.sentences.push_back({text + ".", groups});
      return;
    }
    if (span.block == Block::Indirect) {
      std::vector<Sentence> items;
      for (const auto& child : node.children) {
        const Leaf& leaf = *child.leaf();
        items.push_back({direct_form(leaf.axioms.front().axiom), labels(leaf.axioms)});
      }
      if (items.size() == 1) {
        para.sentences.push_back(
            {span.connector + " of " + bare + " is that " + items.front().text + ".",
             items.front().groups});
      } else {
        para.bullet_intro = span.connector + " of " + bare + " are:";
        for (std::size_t i = 0; i < items.size(); ++i) {
          items[i].text = capitalize_first(items[i].text) + (i + 1 == items.size() ? "." : ";");
          para.bullets.push_back(std::move(items[i]));
        }
      }
      return;
    }
    for (const auto& child : node.children) realize_node(child, focus, subject, bare, para);
  }

  const Lexicon& lexicon_;
  RealizerOptions options_;
};

inline NounPhrase render_expression(const ClassExpression& expr, const Lexicon& lexicon, Role role,
                                    const RealizerOptions& options = {}) {
  return Realizer(lexicon, options).render_expression(expr, role);
}

inline Paragraph realize(const RstPlan& plan, const Lexicon& lexicon,
                         const RealizerOptions& options = {}) {
  return Realizer(lexicon, options).realize(plan);
}

// Frame of one class through classification, planning and realization.
inline Paragraph verbalize(const Ontology& ontology, const ClassId& cls,
                           const RealizerOptions& options = {}) {
  return realize(plan_frame(collect_frame(ontology, cls)), ontology.lexicon, options);
}

}  // namespace elverb

#endif  // ELVERB_REALIZER_HPP
