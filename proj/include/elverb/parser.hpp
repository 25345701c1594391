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

// Reader and writer for the functional-style ontology subset and for the
// tab-separated label lexicon.
//
// Ontology grammar:
//
//   document   := "Ontology(" [iri] item* ")" | item*
//   item       := declaration | axiom
//   declaration:= "Declaration(" ("Class" | "ObjectProperty" | "NamedIndividual") "(" id ")" ")"
//   axiom      := "SubClassOf(" ce ce ")"
//               | "EquivalentClasses(" ce ce+ ")"
//               | "DisjointClasses(" ce ce+ ")"
//               | "ClassAssertion(" ce id ")"
//               | "DisjointUnion(" id ce ce+ ")"
//   ce         := id | "ObjectIntersectionOf(" ce ce+ ")" | "ObjectSomeValuesFrom(" id ce ")"
//   id         := ":" name-char+
//
// "#" starts a comment that runs to the end of the line.

#ifndef ELVERB_PARSER_HPP
#define ELVERB_PARSER_HPP

#include <cctype>
#include <cstddef>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "elverb/errors.hpp"
#include "elverb/model.hpp"

namespace elverb {

inline constexpr const char* kGrammarVersion = "ofs-el-subset/1";

struct SourceDocument {
  std::string text;
  std::string path;
};

inline SourceDocument read_document(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return SourceDocument{buf.str(), path};
}

struct ParseOptions {
  // Reject ids used in axioms without a matching declaration.
  bool strict = false;
};

namespace detail {

enum class TokenKind { Word, Id, Iri, Open, Close, End };

struct Token {
  TokenKind kind = TokenKind::End;
  std::string text;
  std::size_t line = 1;
  std::size_t column = 1;
};

inline bool is_name_char(char c) {
  return !std::isspace(static_cast<unsigned char>(c)) && c != '(' && c != ')' && c != '#';
}

class Lexer {
 public:
  Lexer(std::string_view text, std::string path) : text_(text), path_(std::move(path)) {}

  std::vector<Token> run() {
    std::vector<Token> tokens;
    while (true) {
      skip_space();
      Token tok;
      tok.line = line_;
      tok.column = column_;
      if (pos_ >= text_.size()) {
        tokens.push_back(tok);
        return tokens;
      }
      char c = text_[pos_];
      if (c == '(') {
        tok.kind = TokenKind::Open;
        tok.text = "(";
        advance();
      } else if (c == ')') {
        tok.kind = TokenKind::Close;
        tok.text = ")";
        advance();
      } else if (c == '<') {
        std::size_t start = pos_;
        while (pos_ < text_.size() && text_[pos_] != '>' && text_[pos_] != '\n') advance();
        if (pos_ >= text_.size() || text_[pos_] != '>') {
          throw ParseError(path_, tok.line, tok.column, std::string(text_.substr(start, pos_ - start)),
                           {"'>'"});
        }
        advance();
        tok.kind = TokenKind::Iri;
        tok.text = std::string(text_.substr(start, pos_ - start));
      } else {
        std::size_t start = pos_;
        while (pos_ < text_.size() && is_name_char(text_[pos_])) advance();
        tok.text = std::string(text_.substr(start, pos_ - start));
        tok.kind = tok.text.front() == ':' ? TokenKind::Id : TokenKind::Word;
        if (tok.kind == TokenKind::Id && tok.text.size() == 1) {
          throw ParseError(path_, tok.line, tok.column, tok.text, {"identifier"});
        }
      }
      tokens.push_back(std::move(tok));
    }
  }

 private:
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  void skip_space() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        return;
      }
    }
  }

  std::string_view text_;
  std::string path_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

inline const std::set<std::string>& axiom_keywords() {
  static const std::set<std::string> kw = {"Declaration",    "SubClassOf",     "EquivalentClasses",
                                           "DisjointClasses", "ClassAssertion", "DisjointUnion"};
  return kw;
}

class Parser {
 public:
  Parser(std::vector<Token> tokens, std::string path)
      : tokens_(std::move(tokens)), path_(std::move(path)) {}

  struct Result {
    Ontology ontology;
    std::set<std::string> declared_classes;
    std::set<std::string> declared_properties;
    std::set<std::string> declared_individuals;
  };

  Result document() {
    Result r;
    if (peek().kind == TokenKind::Word && peek().text == "Ontology") {
      next();
      expect(TokenKind::Open, "'('");
      if (peek().kind == TokenKind::Iri || peek().kind == TokenKind::Id) next();
      while (peek().kind != TokenKind::Close) item(r);
      next();
      if (peek().kind != TokenKind::End) fail({"end of input"});
    } else {
      while (peek().kind != TokenKind::End) item(r);
    }
    return r;
  }

  ClassExpression expression() {
    const Token& t = peek();
    if (t.kind == TokenKind::Id) return Named{ClassId(next().text)};
    if (t.kind == TokenKind::Word && t.text == "ObjectIntersectionOf") {
      next();
      expect(TokenKind::Open, "'('");
      std::vector<ClassExpression> ops;
      ops.push_back(expression());
      ops.push_back(expression());
      while (peek().kind != TokenKind::Close) ops.push_back(expression());
      next();
      return Intersection{std::move(ops)};
    }
    if (t.kind == TokenKind::Word && t.text == "ObjectSomeValuesFrom") {
      next();
      expect(TokenKind::Open, "'('");
      PropertyId prop(expect(TokenKind::Id, "property id").text);
      ClassExpression filler = expression();
      expect(TokenKind::Close, "')'");
      return Existential{std::move(prop), Box<ClassExpression>(std::move(filler))};
    }
    fail({"class id", "ObjectIntersectionOf", "ObjectSomeValuesFrom"});
  }

  const Token& peek() const { return tokens_[pos_]; }

 private:
  const Token& next() {
    const Token& t = tokens_[pos_];
    if (t.kind != TokenKind::End) ++pos_;
    return t;
  }

  [[noreturn]] void fail(std::set<std::string> expected) const {
    const Token& t = peek();
    throw ParseError(path_, t.line, t.column, t.text, std::move(expected));
  }

  const Token& expect(TokenKind kind, const std::string& what) {
    if (peek().kind != kind) fail({what});
    return next();
  }

  void keyword(const std::string& word) {
    if (peek().kind != TokenKind::Word || peek().text != word) fail({word});
    next();
  }

  // Operands of an n-ary axiom: at least `min` expressions, up to ')'.
  std::vector<ClassExpression> expression_list(std::size_t min) {
    std::vector<ClassExpression> ops;
    while (ops.size() < min) ops.push_back(expression());
    while (peek().kind != TokenKind::Close) ops.push_back(expression());
    next();
    return ops;
  }

  void item(Result& r) {
    const Token& t = peek();
    if (t.kind != TokenKind::Word || !axiom_keywords().contains(t.text)) {
      std::set<std::string> expected = axiom_keywords();
      expected.insert("')'");
      fail(expected);
    }
    std::string kw = next().text;
    expect(TokenKind::Open, "'('");
    auto& axioms = r.ontology.axioms;
    if (kw == "Declaration") {
      const Token& kind = peek();
      if (kind.kind != TokenKind::Word ||
          (kind.text != "Class" && kind.text != "ObjectProperty" && kind.text != "NamedIndividual")) {
        fail({"Class", "ObjectProperty", "NamedIndividual"});
      }
      std::string k = next().text;
      expect(TokenKind::Open, "'('");
      std::string id = expect(TokenKind::Id, "identifier").text;
      expect(TokenKind::Close, "')'");
      expect(TokenKind::Close, "')'");
      if (k == "Class") {
        r.declared_classes.insert(id);
      } else if (k == "ObjectProperty") {
        r.declared_properties.insert(id);
      } else {
        r.declared_individuals.insert(id);
      }
    } else if (kw == "SubClassOf") {
      ClassExpression sub = expression();
      ClassExpression super = expression();
      expect(TokenKind::Close, "')'");
      axioms.push_back(SubClassOf{std::move(sub), std::move(super)});
    } else if (kw == "EquivalentClasses") {
      axioms.push_back(EquivalentClasses{expression_list(2)});
    } else if (kw == "DisjointClasses") {
      axioms.push_back(DisjointClasses{expression_list(2)});
    } else if (kw == "ClassAssertion") {
      ClassExpression type = expression();
      std::string ind = expect(TokenKind::Id, "individual id").text;
      expect(TokenKind::Close, "')'");
      axioms.push_back(ClassAssertion{std::move(ind), std::move(type)});
    } else {
      ClassId cls(expect(TokenKind::Id, "class id").text);
      axioms.push_back(DisjointUnion{std::move(cls), expression_list(2)});
    }
  }

  std::vector<Token> tokens_;
  std::string path_;
  std::size_t pos_ = 0;
};

}  // namespace detail

// Parses a whole document. In lenient mode ids referenced but not declared
// are declared implicitly and reported through `warnings`.
inline Ontology parse_ontology(const SourceDocument& doc, const ParseOptions& options = {},
                               std::vector<std::string>* warnings = nullptr) {
  detail::Parser parser(detail::Lexer(doc.text, doc.path).run(), doc.path);
  auto r = parser.document();
  Ontology& onto = r.ontology;
  for (const auto& c : r.declared_classes) onto.classes.insert(ClassId(c));
  for (const auto& p : r.declared_properties) onto.properties.insert(PropertyId(p));
  onto.individuals = r.declared_individuals;

  std::set<std::string> reported;
  auto undeclared = [&](const std::string& id) {
    if (options.strict) throw UndeclaredEntity(id);
    if (warnings != nullptr && reported.insert(id).second) {
      warnings->push_back((doc.path.empty() ? std::string("<input>") : doc.path) +
                          ": auto-declared " + id);
    }
  };
  for (const auto& axiom : onto.axioms) {
    for_each_class(axiom, [&](const ClassId& c) {
      if (!r.declared_classes.contains(c.iri)) {
        undeclared(c.iri);
        onto.classes.insert(c);
      }
    });
    for (const ClassExpression* op : operands(axiom)) {
      for_each_property(*op, [&](const PropertyId& p) {
        if (!r.declared_properties.contains(p.iri)) {
          undeclared(p.iri);
          onto.properties.insert(p);
        }
      });
    }
    if (const auto* ca = std::get_if<ClassAssertion>(&axiom)) {
      if (!r.declared_individuals.contains(ca->individual)) {
        undeclared(ca->individual);
        onto.individuals.insert(ca->individual);
      }
    }
  }
  return onto;
}

inline ClassExpression parse_expression(std::string_view text) {
  detail::Parser parser(detail::Lexer(text, "").run(), "");
  ClassExpression e = parser.expression();
  if (parser.peek().kind != detail::TokenKind::End) {
    const auto& t = parser.peek();
    throw ParseError("", t.line, t.column, t.text, {"end of input"});
  }
  return e;
}

inline void serialize(const ClassExpression& expr, std::string& out) {
  if (const auto* n = expr.as_named()) {
    out += n->id.iri;
  } else if (const auto* i = expr.as_intersection()) {
    out += "ObjectIntersectionOf(";
    for (std::size_t k = 0; k < i->operands.size(); ++k) {
      if (k > 0) out += ' ';
      serialize(i->operands[k], out);
    }
    out += ')';
  } else {
    const auto* e = expr.as_existential();
    out += "ObjectSomeValuesFrom(" + e->property.iri + " ";
    serialize(*e->filler, out);
    out += ')';
  }
}

inline std::string serialize(const ClassExpression& expr) {
  std::string out;
  serialize(expr, out);
  return out;
}

// Canonical single-line rendering; parses back to an equal axiom.
inline std::string serialize_axiom(const Axiom& axiom) {
  std::string out;
  auto list = [&](const std::vector<ClassExpression>& ops) {
    for (const auto& op : ops) {
      out += ' ';
      serialize(op, out);
    }
  };
  std::visit(
      [&](const auto& a) {
        using T = std::decay_t<decltype(a)>;
        if constexpr (std::is_same_v<T, SubClassOf>) {
          out += "SubClassOf(";
          serialize(a.sub, out);
          out += ' ';
          serialize(a.super, out);
        } else if constexpr (std::is_same_v<T, EquivalentClasses>) {
          out += "EquivalentClasses(";
          serialize(a.operands.front(), out);
          list({a.operands.begin() + 1, a.operands.end()});
        } else if constexpr (std::is_same_v<T, DisjointClasses>) {
          out += "DisjointClasses(";
          serialize(a.operands.front(), out);
          list({a.operands.begin() + 1, a.operands.end()});
        } else if constexpr (std::is_same_v<T, ClassAssertion>) {
          out += "ClassAssertion(";
          serialize(a.type, out);
          out += ' ' + a.individual;
        } else {
          out += "DisjointUnion(" + a.union_class.iri;
          list(a.disjuncts);
        }
      },
      axiom);
  out += ')';
  return out;
}

inline Axiom parse_axiom(std::string_view text) {
  Ontology o = parse_ontology(SourceDocument{std::string(text), ""});
  if (o.axioms.size() != 1) throw Error("expected exactly one axiom");
  return o.axioms.front();
}

inline std::string serialize_ontology(const Ontology& onto) {
  std::string out = "Ontology(\n";
  for (const auto& c : onto.classes) out += "Declaration(Class(" + c.iri + "))\n";
  for (const auto& p : onto.properties) out += "Declaration(ObjectProperty(" + p.iri + "))\n";
  for (const auto& i : onto.individuals) out += "Declaration(NamedIndividual(" + i + "))\n";
  for (const auto& a : onto.axioms) out += serialize_axiom(a) + "\n";
  out += ")\n";
  return out;
}

namespace detail {

inline std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> cols;
  std::size_t start = 0;
  while (true) {
    std::size_t tab = line.find('\t', start);
    cols.push_back(line.substr(start, tab == std::string::npos ? std::string::npos : tab - start));
    if (tab == std::string::npos) break;
    start = tab + 1;
  }
  return cols;
}

inline std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

}  // namespace detail

// Columns: id, preferred_name, [article], [property_phrase], [joiner].
// Later rows override earlier rows for the same id.
inline Lexicon load_lexicon(const SourceDocument& doc) {
  Lexicon lex;
  std::istringstream in(doc.text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::string stripped = detail::trim(line);
    if (stripped.empty() || stripped.front() == '#') continue;
    auto cols = detail::split_tabs(line);
    if (cols.size() < 2 || cols.size() > 5) {
      throw LexiconFormatError(doc.path, lineno,
                               "expected 2 to 5 tab-separated columns, found " +
                                   std::to_string(cols.size()));
    }
    LexEntry e;
    e.id = detail::trim(cols[0]);
    e.preferred_name = detail::trim(cols[1]);
    if (e.id.empty() || e.preferred_name.empty()) {
      throw LexiconFormatError(doc.path, lineno, "empty id or preferred name");
    }
    if (cols.size() > 2) {
      std::string art = detail::trim(cols[2]);
      if (art == "a") {
        e.article = Article::A;
      } else if (art == "an") {
        e.article = Article::An;
      } else if (art == "the") {
        e.article = Article::The;
      } else if (!art.empty() && art != "none") {
        throw LexiconFormatError(doc.path, lineno, "unknown article '" + art + "'");
      }
    }
    if (cols.size() > 3) {
      std::string phrase = detail::trim(cols[3]);
      if (!phrase.empty()) e.property_phrase = phrase;
    }
    if (cols.size() > 4) e.joiner = detail::trim(cols[4]);
    lex[e.id] = std::move(e);
  }
  return lex;
}

}  // namespace elverb

#endif  // ELVERB_PARSER_HPP
