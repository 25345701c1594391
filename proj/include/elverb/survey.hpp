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

// Corpus-level pattern statistics: how often each per-class pattern label
// occurs, and how often each group and communicative role appears among the
// observed patterns.

#ifndef ELVERB_SURVEY_HPP
#define ELVERB_SURVEY_HPP

#include <algorithm>
#include <array>
#include <cctype>
#include <cstddef>
#include <cstdio>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "elverb/classifier.hpp"
#include "elverb/model.hpp"

namespace elverb {

enum class CommunicativeRole { Taxonomy, Definition, Distinction, Illustration, Alternatives };

inline constexpr std::array<CommunicativeRole, 5> kAllRoles = {
    CommunicativeRole::Taxonomy, CommunicativeRole::Definition, CommunicativeRole::Distinction,
    CommunicativeRole::Illustration, CommunicativeRole::Alternatives};

inline std::string_view to_string(CommunicativeRole r) {
  switch (r) {
    case CommunicativeRole::Taxonomy: return "taxonomy";
    case CommunicativeRole::Definition: return "definition";
    case CommunicativeRole::Distinction: return "distinction";
    case CommunicativeRole::Illustration: return "illustration";
    case CommunicativeRole::Alternatives: return "alternatives";
  }
  return "?";
}

inline CommunicativeRole role_of(Group g) {
  switch (g) {
    case Group::Sc:
    case Group::Scr: return CommunicativeRole::Taxonomy;
    case Group::Ec:
    case Group::Ecr: return CommunicativeRole::Definition;
    case Group::Dc:
    case Group::Dcr: return CommunicativeRole::Distinction;
    case Group::Ca:
    case Group::Car: return CommunicativeRole::Illustration;
    case Group::Du: break;
  }
  return CommunicativeRole::Alternatives;
}

// Label used in reports for classes that no axiom mentions.
inline constexpr std::string_view kEmptyPattern = "(none)";

struct PatternStats {
  std::map<std::string, std::size_t> per_pattern;  // "" is the empty pattern
  std::size_t total_classes = 0;
  std::size_t skipped = 0;  // inputs that could not be read

  std::size_t nonempty_classes() const {
    auto it = per_pattern.find("");
    return total_classes - (it == per_pattern.end() ? 0 : it->second);
  }

  // Distinct non-empty patterns observed.
  std::size_t distinct_patterns() const {
    std::size_t n = 0;
    for (const auto& [p, c] : per_pattern) n += (!p.empty() && c > 0) ? 1 : 0;
    return n;
  }

  // Number of distinct patterns containing the group.
  std::size_t group_containment(Group g) const {
    std::size_t n = 0;
    for (const auto& [p, c] : per_pattern) {
      if (c > 0 && pattern_contains(p, g)) ++n;
    }
    return n;
  }

  std::size_t role_containment(CommunicativeRole r) const {
    std::size_t n = 0;
    for (const auto& [p, c] : per_pattern) {
      if (c == 0) continue;
      for (Group g : kAllGroups) {
        if (role_of(g) == r && pattern_contains(p, g)) {
          ++n;
          break;
        }
      }
    }
    return n;
  }

  // Fractions over the distinct patterns observed.
  std::map<Group, double> group_frequency() const {
    std::map<Group, double> out;
    const std::size_t d = distinct_patterns();
    for (Group g : kAllGroups) out[g] = d == 0 ? 0.0 : double(group_containment(g)) / double(d);
    return out;
  }

  std::map<CommunicativeRole, double> role_frequency() const {
    std::map<CommunicativeRole, double> out;
    const std::size_t d = distinct_patterns();
    for (CommunicativeRole r : kAllRoles) {
      out[r] = d == 0 ? 0.0 : double(role_containment(r)) / double(d);
    }
    return out;
  }

  PatternStats& merge(const PatternStats& other) {
    for (const auto& [p, c] : other.per_pattern) per_pattern[p] += c;
    total_classes += other.total_classes;
    skipped += other.skipped;
    return *this;
  }

  bool operator==(const PatternStats&) const = default;

  // Splits a pattern string back into its group labels.
  static std::vector<Group> groups_of(std::string_view pattern) {
    std::vector<Group> out;
    std::size_t i = 0;
    while (i < pattern.size()) {
      std::size_t j = i + 1;
      while (j < pattern.size() && std::islower(static_cast<unsigned char>(pattern[j]))) ++j;
      std::string_view tok = pattern.substr(i, j - i);
      for (Group g : kAllGroups) {
        if (to_string(g) == tok) out.push_back(g);
      }
      i = j;
    }
    return out;
  }

  static bool pattern_contains(std::string_view pattern, Group g) {
    auto gs = groups_of(pattern);
    return std::find(gs.begin(), gs.end(), g) != gs.end();
  }
};

inline PatternStats survey_ontology(const Ontology& onto) {
  PatternStats stats;
  for (const auto& cls : onto.classes) {
    ++stats.per_pattern[pattern_label(collect_frame(onto, cls)).value];
    ++stats.total_classes;
  }
  return stats;
}

inline PatternStats survey(std::span<const Ontology> corpus) {
  PatternStats stats;
  for (const auto& onto : corpus) stats.merge(survey_ontology(onto));
  return stats;
}

namespace detail {

inline std::string fixed4(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

template <typename Key>
std::vector<std::pair<Key, double>> by_descending(const std::map<Key, double>& m,
                                                  auto name_of) {
  std::vector<std::pair<Key, double>> rows(m.begin(), m.end());
  std::stable_sort(rows.begin(), rows.end(), [&](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return name_of(a.first) < name_of(b.first);
  });
  return rows;
}

}  // namespace detail

// CSV report, sections separated by a blank line:
//   pattern,count,fraction            fraction over all classes
//   pattern,count,fraction_nonempty   fraction over classes with a non-empty frame
//   role,fraction                     fraction of distinct patterns containing the role
//   group,fraction                    fraction of distinct patterns containing the group
// Rows are sorted by descending count (or fraction), then label.
inline std::string emit_report(const PatternStats& stats) {
  std::vector<std::pair<std::string, std::size_t>> patterns;
  for (const auto& [p, c] : stats.per_pattern) {
    if (c > 0) patterns.emplace_back(p, c);
  }
  std::stable_sort(patterns.begin(), patterns.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  auto shown = [](const std::string& p) { return p.empty() ? std::string(kEmptyPattern) : p; };

  std::string out = "pattern,count,fraction\n";
  for (const auto& [p, c] : patterns) {
    out += shown(p) + "," + std::to_string(c) + "," +
           detail::fixed4(double(c) / double(stats.total_classes)) + "\n";
  }
  out += "\npattern,count,fraction_nonempty\n";
  const std::size_t nonempty = stats.nonempty_classes();
  for (const auto& [p, c] : patterns) {
    if (p.empty()) continue;
    out += p + "," + std::to_string(c) + "," + detail::fixed4(double(c) / double(nonempty)) + "\n";
  }
  out += "\nrole,fraction\n";
  if (stats.distinct_patterns() > 0) {
    auto name = [](CommunicativeRole r) { return to_string(r); };
    for (const auto& [r, f] : detail::by_descending(stats.role_frequency(), name)) {
      out += std::string(to_string(r)) + "," + detail::fixed4(f) + "\n";
    }
  }
  out += "\ngroup,fraction\n";
  if (stats.distinct_patterns() > 0) {
    for (const auto& [g, f] : detail::by_descending(stats.group_frequency(),
                                                    [](Group g) { return to_string(g); })) {
      out += std::string(to_string(g)) + "," + detail::fixed4(f) + "\n";
    }
  }
  return out;
}

}  // namespace elverb

#endif  // ELVERB_SURVEY_HPP
