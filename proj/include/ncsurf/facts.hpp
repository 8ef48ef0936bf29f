// Copyright 2026 the ncsurf authors
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

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

// Declared and derived facts about lines, line pairs and algebras, plus the
// forward-chaining engine that closes a fact set under the fixed rule
// families.  Only the implications behind the rules are encoded; a derived
// fact remembers the rule and premises that produced it.

namespace ncsurf {

enum class predicate {
  // conditions on a single line L = R/J
  ext1_ideal_self_zero,         // Ext^1(J,J) = 0
  ext1_line_self_zero,          // Ext^1(L,L) = 0
  end_series_matches_ring,      // hilb End(J) = hilb R (contractibility)
  hom_ideal_line_shifted_plane, // hilb Hom(J,L) = s/(1-s)^2
  self_intersection_minus_one,  // (L.L) = -1

  // conditions on a pair of lines with distinct divisors
  ext1_ideal_pair_zero,         // Ext^1(J,J') = 0
  hom_ext_series_match,         // hilb Ext^1(L,L') = hilb Hom(L,L')
  hom_ideal_pair_gap_single,    // hilb R - hilb Hom(J,J') = 1/(1-s)
  hom_ideal_line_plane,         // hilb Hom(J,L') = 1/(1-s)^2
  intersection_zero,            // (L.L') = 0

  // conditions on a pair of non-isomorphic lines
  ext1_ideal_pair_two_terms,    // hilb Ext^1(J,J') = s^-1 + 1
  x_series_shifted_geometric,   // X(L,L') = s^-1/(1-s)
  hom_ideal_pair_gap_double,    // hilb R - hilb Hom(J,J') = (1+s)/(1-s)
  hom_ideal_line_lowered_plane, // hilb Hom(J,L') = s^-1/(1-s)^2
  intersection_one,             // (L.L') = 1

  // auxiliary facts
  ideal_localisation_projective,   // J[g^-1]_0 projective
  pdim_line_localisation_finite,   // pdim L[g^-1]_0 finite
  qgr_smooth,                      // the quotient category is smooth
  nonsplit_self_extension,         // a nonsplit extension of L by L exists
  ring_localisation_simple,        // R[g^-1]_0 is simple
  exceptional_line,                // L arose as the exceptional line of a blowup
  end_ring_identified,             // End(J) identified with a named blowup
  no_line_at_exceptional_divisor,  // optional assumption slot; never consumed
  assume_smooth_forces_minus_one,  // optional assumption enabling one extra rule
};

std::string_view predicate_name(predicate p);
std::optional<predicate> predicate_from_name(std::string_view name);

enum class provenance_kind { declared, axiom, derived };
std::string_view provenance_name(provenance_kind k);

struct fact {
  std::string subject;
  predicate pred;
  bool value = true;
  provenance_kind prov = provenance_kind::declared;
  std::string rule;                   // rule id when derived
  std::vector<std::string> premises;  // rendered premise keys when derived
  std::string detail;                 // optional payload

  std::string key() const;  // "subject predicate=value"
};

class fact_base {
 public:
  // Appends unless the same (subject, predicate, value) is already present.
  // A fact and its negation may coexist; queries report the contradiction.
  void add(fact f);
  bool has(const std::string& subject, predicate p, bool value) const;
  // The asserted value, or nullopt when unknown or contradictory.
  std::optional<bool> value(const std::string& subject, predicate p) const;
  bool contradictory(const std::string& subject, predicate p) const;
  std::vector<std::string> contradictions() const;
  const std::vector<fact>& all() const { return facts_; }
  const fact* find(const std::string& subject, predicate p, bool value) const;

  fact_base without_subject(const std::string& subject) const;

  // Set equality of the asserted (subject, predicate, value) triples.
  friend bool same_assertions(const fact_base& a, const fact_base& b);

 private:
  std::vector<fact> facts_;
};

// Rule engine.  Literals address their subject through a slot so one rule
// table serves every instantiation.
enum class rule_slot { line_a, line_b, algebra, pair };

struct rule_literal {
  rule_slot slot;
  predicate pred;
  bool value = true;
};

struct inference_rule {
  std::string id;
  std::vector<rule_literal> premises;
  rule_literal conclusion;
};

// A -> B together with the contrapositive; for several premises each
// premise also gets the corresponding contrapositive rule.
std::vector<inference_rule> implication_rules(const std::string& id,
                                              std::vector<rule_literal> premises,
                                              rule_literal conclusion);
// A <-> B in both truth values.
std::vector<inference_rule> equivalence_rules(const std::string& id,
                                              rule_literal a, rule_literal b);

// The rule family for a single line over its algebra: the chain of
// equivalent (-1)-conditions, the one-way step to the End-series match, the
// projective-ideal upgrade, the smoothness bridge, the blowup provenance
// rule and the self-extension obstruction.
std::vector<inference_rule> self_intersection_rules();
// The equivalences for distinct lines with distinct divisors.
std::vector<inference_rule> zero_intersection_rules();
// The ladder for non-isomorphic lines, any divisors.
std::vector<inference_rule> one_intersection_rules();

struct rule_subjects {
  std::string line_a;
  std::string line_b;
  std::string algebra;
  std::string pair;
  const std::string& resolve(rule_slot slot) const;
};

struct inference_result {
  fact_base closure;
  bool contradiction = false;
  std::vector<std::string> contradictions;
  std::vector<std::string> notes;
};

// Forward chaining to the fixpoint; monotone, deterministic, and
// order-independent for a fixed rule table.
inference_result run_rules(const fact_base& start,
                           const std::vector<inference_rule>& rules,
                           const rule_subjects& subjects);

std::string_view rule_description(std::string_view rule_id);

}  // namespace ncsurf
