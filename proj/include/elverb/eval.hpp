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

// Round-trip scoring of a re-coded class description against its reference:
// layout-insensitive normalization, edit distance, length-normalized
// similarity, the family of syntactically equivalent reference versions, and
// an optimal one-to-one pairing of axioms.

#ifndef ELVERB_EVAL_HPP
#define ELVERB_EVAL_HPP

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <cstdio>
#include <limits>
#include <numeric>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "elverb/errors.hpp"
#include "elverb/model.hpp"
#include "elverb/parser.hpp"

namespace elverb {

inline constexpr std::size_t kDefaultEquivalentCap = 10000;

// Case-folded, punctuation removed, whitespace runs collapsed, trimmed.
inline std::string normalize(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  bool pending_space = false;
  for (char ch : text) {
    auto c = static_cast<unsigned char>(ch);
    if (std::isspace(c)) {
      pending_space = !out.empty();
      continue;
    }
    if (std::ispunct(c)) continue;
    if (pending_space) out += ' ';
    pending_space = false;
    out += static_cast<char>(std::tolower(c));
  }
  return out;
}

// Edit distance over bytes with unit-cost insert, delete and substitute.
inline std::size_t levenshtein(std::string_view a, std::string_view b) {
  if (a.size() < b.size()) std::swap(a, b);
  std::vector<std::size_t> prev(b.size() + 1), cur(b.size() + 1);
  std::iota(prev.begin(), prev.end(), std::size_t{0});
  for (std::size_t i = 1; i <= a.size(); ++i) {
    cur[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      std::size_t sub = prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
      cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, sub});
    }
    std::swap(prev, cur);
  }
  return prev[b.size()];
}

// (L - distance) / L with L the longer length; 1 when both are empty.
inline double similarity(std::string_view candidate, std::string_view reference) {
  const std::size_t len = std::max(candidate.size(), reference.size());
  if (len == 0) return 1.0;
  const double d = double(levenshtein(candidate, reference));
  return std::max(0.0, (double(len) - d) / double(len));
}

struct EquivalentSet {
  std::vector<std::vector<Axiom>> versions;  // versions[0] is the reference
};

namespace detail {

// Throws once a running product passes the cap.
inline std::size_t checked_mul(std::size_t a, std::size_t b, std::size_t cap) {
  if (a != 0 && b > cap / a) throw EquivalentExplosion(cap);
  if (a * b > cap) throw EquivalentExplosion(cap);
  return a * b;
}

template <typename T>
std::vector<std::vector<T>> cartesian(const std::vector<std::vector<T>>& choices, std::size_t cap) {
  std::size_t total = 1;
  for (const auto& c : choices) total = checked_mul(total, c.size(), cap);
  std::vector<std::vector<T>> out;
  out.reserve(total);
  if (total == 0) return out;
  std::vector<std::size_t> idx(choices.size(), 0);
  while (true) {
    std::vector<T> pick;
    pick.reserve(choices.size());
    for (std::size_t k = 0; k < choices.size(); ++k) pick.push_back(choices[k][idx[k]]);
    out.push_back(std::move(pick));
    std::size_t k = choices.size();
    while (k > 0) {
      --k;
      if (++idx[k] < choices[k].size()) break;
      idx[k] = 0;
      if (k == 0) return out;
    }
    if (choices.empty()) return out;
  }
}

inline void dedup_expressions(std::vector<ClassExpression>& v) {
  std::set<std::string> seen;
  std::vector<ClassExpression> out;
  for (auto& e : v) {
    if (seen.insert(serialize(e)).second) out.push_back(std::move(e));
  }
  v = std::move(out);
}

inline std::vector<ClassExpression> expression_variants(const ClassExpression& e, std::size_t cap);

// Every ordering of the operands combined with every variant of each operand.
inline std::vector<std::vector<ClassExpression>> operand_orderings(
    const std::vector<ClassExpression>& ops, std::size_t cap) {
  std::vector<std::vector<ClassExpression>> per_op;
  for (const auto& op : ops) per_op.push_back(expression_variants(op, cap));
  std::vector<std::size_t> perm(ops.size());
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::vector<std::vector<ClassExpression>> out;
  do {
    std::vector<std::vector<ClassExpression>> choices;
    for (std::size_t i : perm) choices.push_back(per_op[i]);
    for (auto& combo : cartesian(choices, cap)) {
      out.push_back(std::move(combo));
      if (out.size() > cap) throw EquivalentExplosion(cap);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

inline std::vector<ClassExpression> expression_variants(const ClassExpression& e, std::size_t cap) {
  std::vector<ClassExpression> out;
  if (e.is_named()) {
    out.push_back(e);
  } else if (const auto* ex = e.as_existential()) {
    for (auto& f : expression_variants(*ex->filler, cap)) {
      out.push_back(Existential{ex->property, Box<ClassExpression>(std::move(f))});
    }
  } else {
    for (auto& ops : operand_orderings(e.as_intersection()->operands, cap)) {
      out.push_back(Intersection{std::move(ops)});
    }
  }
  dedup_expressions(out);
  return out;
}

inline std::string version_key(const std::vector<Axiom>& axioms) {
  std::vector<std::string> parts;
  for (const auto& a : axioms) parts.push_back(serialize_axiom(a));
  std::sort(parts.begin(), parts.end());
  std::string key;
  for (const auto& p : parts) key += p + '\n';
  return key;
}

inline void dedup_versions(std::vector<std::vector<Axiom>>& v) {
  std::set<std::string> seen;
  std::vector<std::vector<Axiom>> out;
  for (auto& x : v) {
    if (seen.insert(version_key(x)).second) out.push_back(std::move(x));
  }
  v = std::move(out);
}

// All set partitions of {0..n-1}; blocks ordered by their smallest element.
inline void set_partitions(std::size_t n, std::size_t i, std::vector<std::vector<std::size_t>>& blocks,
                           std::vector<std::vector<std::vector<std::size_t>>>& out) {
  if (i == n) {
    out.push_back(blocks);
    return;
  }
  for (std::size_t k = 0; k < blocks.size(); ++k) {  // indices: recursion grows `blocks`
    blocks[k].push_back(i);
    set_partitions(n, i + 1, blocks, out);
    blocks[k].pop_back();
  }
  blocks.push_back({i});
  set_partitions(n, i + 1, blocks, out);
  blocks.pop_back();
}

inline void flatten_conjuncts(const ClassExpression& e, std::vector<ClassExpression>& out) {
  if (const auto* i = e.as_intersection()) {
    for (const auto& op : i->operands) out.push_back(op);
  } else {
    out.push_back(e);
  }
}

// Alternatives for all subclass axioms sharing one subject: every split of
// the pooled super-side conjuncts into separate axioms, each block in every
// order.
inline std::vector<std::vector<Axiom>> subclass_group_alternatives(
    const std::vector<const SubClassOf*>& group, std::size_t cap) {
  std::vector<std::vector<Axiom>> alts;
  std::vector<Axiom> original;
  for (const auto* sc : group) original.push_back(*sc);
  alts.push_back(original);

  std::vector<ClassExpression> pool;
  for (const auto* sc : group) flatten_conjuncts(sc->super, pool);
  dedup_expressions(pool);

  std::vector<std::vector<std::vector<std::size_t>>> partitions;
  std::vector<std::vector<std::size_t>> scratch;
  set_partitions(pool.size(), 0, scratch, partitions);

  for (const auto& sub : expression_variants(group.front()->sub, cap)) {
    for (const auto& blocks : partitions) {
      std::vector<std::vector<Axiom>> per_block;
      for (const auto& block : blocks) {
        std::vector<Axiom> choices;
        if (block.size() == 1) {
          for (auto& v : expression_variants(pool[block.front()], cap)) {
            choices.push_back(SubClassOf{sub, std::move(v)});
          }
        } else {
          std::vector<ClassExpression> ops;
          for (std::size_t i : block) ops.push_back(pool[i]);
          for (auto& o : operand_orderings(ops, cap)) {
            choices.push_back(SubClassOf{sub, Intersection{std::move(o)}});
          }
        }
        per_block.push_back(std::move(choices));
      }
      for (auto& combo : cartesian(per_block, cap)) {
        alts.push_back(std::move(combo));
        if (alts.size() > cap + 1) throw EquivalentExplosion(cap);
      }
    }
  }
  dedup_versions(alts);
  return alts;
}

inline std::vector<std::vector<Axiom>> axiom_alternatives(const Axiom& axiom, std::size_t cap) {
  std::vector<std::vector<Axiom>> alts;
  std::visit(
      [&](const auto& a) {
        using T = std::decay_t<decltype(a)>;
        if constexpr (std::is_same_v<T, EquivalentClasses> || std::is_same_v<T, DisjointClasses>) {
          for (auto& ops : operand_orderings(a.operands, cap)) alts.push_back({T{std::move(ops)}});
        } else if constexpr (std::is_same_v<T, ClassAssertion>) {
          for (auto& t : expression_variants(a.type, cap)) {
            alts.push_back({ClassAssertion{a.individual, std::move(t)}});
          }
        } else if constexpr (std::is_same_v<T, DisjointUnion>) {
          for (auto& ops : operand_orderings(a.disjuncts, cap)) {
            alts.push_back({DisjointUnion{a.union_class, std::move(ops)}});
          }
        } else {
          alts.push_back({a});
        }
      },
      axiom);
  dedup_versions(alts);
  return alts;
}

}  // namespace detail

// Versions logically equivalent to `reference` under conjunct reordering,
// splitting and merging of subclass axioms over a shared subject, and
// reordering of equivalence, disjointness and union operands. The order of
// axioms within a version is not varied.
inline EquivalentSet enumerate_equivalents(const std::vector<Axiom>& reference,
                                           std::size_t cap = kDefaultEquivalentCap) {
  std::vector<std::vector<std::vector<Axiom>>> units;
  std::vector<std::string> group_keys;
  std::vector<std::vector<const SubClassOf*>> groups;
  std::vector<int> unit_group;  // index into groups, or -1

  for (const auto& axiom : reference) {
    if (const auto* sc = std::get_if<SubClassOf>(&axiom)) {
      std::string key = serialize(sc->sub);
      auto it = std::find(group_keys.begin(), group_keys.end(), key);
      if (it != group_keys.end()) {
        groups[std::size_t(it - group_keys.begin())].push_back(sc);
        continue;
      }
      group_keys.push_back(key);
      groups.push_back({sc});
      units.emplace_back();
      unit_group.push_back(int(groups.size() - 1));
    } else {
      units.push_back(detail::axiom_alternatives(axiom, cap));
      unit_group.push_back(-1);
    }
  }
  for (std::size_t u = 0; u < units.size(); ++u) {
    if (unit_group[u] >= 0) {
      units[u] = detail::subclass_group_alternatives(groups[std::size_t(unit_group[u])], cap);
    }
  }

  EquivalentSet set;
  set.versions.push_back(reference);
  for (auto& combo : detail::cartesian(units, cap)) {
    std::vector<Axiom> version;
    for (auto& part : combo) version.insert(version.end(), part.begin(), part.end());
    set.versions.push_back(std::move(version));
  }
  detail::dedup_versions(set.versions);
  if (set.versions.size() > cap) throw EquivalentExplosion(cap);
  return set;
}

// Maximum-weight one-to-one assignment. Returns, for each row, the matched
// column or -1. Rows or columns left over are unmatched.
inline std::vector<int> max_weight_assignment(const std::vector<std::vector<double>>& weight) {
  const std::size_t rows = weight.size();
  const std::size_t cols = rows == 0 ? 0 : weight.front().size();
  std::vector<int> result(rows, -1);
  if (rows == 0 || cols == 0) return result;
  const bool transpose = rows > cols;
  const std::size_t n = transpose ? cols : rows;  // n <= m
  const std::size_t m = transpose ? rows : cols;
  auto cost = [&](std::size_t i, std::size_t j) {
    return -(transpose ? weight[j - 1][i - 1] : weight[i - 1][j - 1]);
  };
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> u(n + 1, 0.0), v(m + 1, 0.0);
  std::vector<std::size_t> p(m + 1, 0), way(m + 1, 0);
  for (std::size_t i = 1; i <= n; ++i) {
    p[0] = i;
    std::size_t j0 = 0;
    std::vector<double> minv(m + 1, inf);
    std::vector<bool> used(m + 1, false);
    do {
      used[j0] = true;
      const std::size_t i0 = p[j0];
      double delta = inf;
      std::size_t j1 = 0;
      for (std::size_t j = 1; j <= m; ++j) {
        if (used[j]) continue;
        const double cur = cost(i0, j) - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (std::size_t j = 0; j <= m; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      const std::size_t j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0 != 0);
  }
  for (std::size_t j = 1; j <= m; ++j) {
    if (p[j] == 0) continue;
    if (transpose) {
      result[j - 1] = int(p[j] - 1);
    } else {
      result[p[j] - 1] = int(j - 1);
    }
  }
  return result;
}

struct AxiomScore {
  std::string reference;
  std::string candidate;  // empty when unmatched
  double score = 0.0;
};

struct SimilarityReport {
  std::vector<AxiomScore> per_axiom;
  double mean = 0.0;
  std::size_t best_version_index = 0;
  std::size_t versions_considered = 0;
};

// Scores `candidate` against the best-matching equivalent version of
// `reference`. Each reference axiom pairs with at most one candidate axiom;
// unmatched reference axioms score 0 and extra candidate axioms are ignored.
inline SimilarityReport score_submission(const ClassFrame& candidate, const ClassFrame& reference,
                                         std::size_t cap = kDefaultEquivalentCap) {
  std::vector<std::string> cand_text;
  std::vector<std::string> cand_norm;
  for (const auto& a : candidate.axioms) {
    cand_text.push_back(serialize_axiom(a));
    cand_norm.push_back(normalize(cand_text.back()));
  }
  EquivalentSet set = enumerate_equivalents(reference.axioms, cap);

  std::unordered_map<std::string, std::vector<double>> cache;
  auto row_for = [&](const std::string& ref_norm) -> const std::vector<double>& {
    auto it = cache.find(ref_norm);
    if (it != cache.end()) return it->second;
    std::vector<double> row;
    for (const auto& c : cand_norm) row.push_back(similarity(c, ref_norm));
    return cache.emplace(ref_norm, std::move(row)).first->second;
  };

  SimilarityReport best;
  best.mean = -1.0;
  for (std::size_t v = 0; v < set.versions.size(); ++v) {
    const auto& version = set.versions[v];
    std::vector<std::vector<double>> weight;
    for (const auto& a : version) weight.push_back(row_for(normalize(serialize_axiom(a))));
    auto match = max_weight_assignment(weight);
    double total = 0.0;
    for (std::size_t i = 0; i < version.size(); ++i) {
      if (match[i] >= 0) total += weight[i][std::size_t(match[i])];
    }
    const double mean = version.empty() ? 1.0 : total / double(version.size());
    if (mean > best.mean) {
      best.mean = mean;
      best.best_version_index = v;
      best.per_axiom.clear();
      for (std::size_t i = 0; i < version.size(); ++i) {
        AxiomScore s{serialize_axiom(version[i]), {}, 0.0};
        if (match[i] >= 0) {
          s.candidate = cand_text[std::size_t(match[i])];
          s.score = weight[i][std::size_t(match[i])];
        }
        best.per_axiom.push_back(std::move(s));
      }
    }
  }
  best.versions_considered = set.versions.size();
  return best;
}

namespace detail {

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace detail

inline std::string format_score(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

inline std::string emit_similarity_csv(const SimilarityReport& report) {
  std::string out = "reference_axiom,candidate_axiom,score\n";
  for (const auto& row : report.per_axiom) {
    out += detail::csv_field(row.reference) + "," + detail::csv_field(row.candidate) + "," +
           format_score(row.score) + "\n";
  }
  out += "mean," + format_score(report.mean) + "\n";
  return out;
}

}  // namespace elverb

#endif  // ELVERB_EVAL_HPP
