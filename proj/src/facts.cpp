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

#include "ncsurf/facts.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace ncsurf {

namespace {

struct predicate_entry {
  predicate pred;
  std::string_view name;
};

constexpr predicate_entry kPredicates[] = {
    {predicate::ext1_ideal_self_zero, "ext1-ideal-self-zero"},
    {predicate::ext1_line_self_zero, "ext1-line-self-zero"},
    {predicate::end_series_matches_ring, "end-series-matches-ring"},
    {predicate::hom_ideal_line_shifted_plane, "hom-ideal-line-shifted-plane"},
    {predicate::self_intersection_minus_one, "self-intersection-minus-one"},
    {predicate::ext1_ideal_pair_zero, "ext1-ideal-pair-zero"},
    {predicate::hom_ext_series_match, "hom-ext-series-match"},
    {predicate::hom_ideal_pair_gap_single, "hom-ideal-pair-gap-single"},
    {predicate::hom_ideal_line_plane, "hom-ideal-line-plane"},
    {predicate::intersection_zero, "intersection-zero"},
    {predicate::ext1_ideal_pair_two_terms, "ext1-ideal-pair-two-terms"},
    {predicate::x_series_shifted_geometric, "x-series-shifted-geometric"},
    {predicate::hom_ideal_pair_gap_double, "hom-ideal-pair-gap-double"},
    {predicate::hom_ideal_line_lowered_plane, "hom-ideal-line-lowered-plane"},
    {predicate::intersection_one, "intersection-one"},
    {predicate::ideal_localisation_projective, "ideal-localisation-projective"},
    {predicate::pdim_line_localisation_finite, "pdim-line-localisation-finite"},
    {predicate::qgr_smooth, "qgr-smooth"},
    {predicate::nonsplit_self_extension, "nonsplit-self-extension"},
    {predicate::ring_localisation_simple, "ring-localisation-simple"},
    {predicate::exceptional_line, "exceptional-line"},
    {predicate::end_ring_identified, "end-ring-identified"},
    {predicate::no_line_at_exceptional_divisor, "no-line-at-exceptional-divisor"},
    {predicate::assume_smooth_forces_minus_one, "assume-smooth-forces-minus-one"},
};

struct rule_doc {
  std::string_view id;
  std::string_view text;
};

constexpr rule_doc kRuleDocs[] = {
    {"minus-one-equivalences",
     "the four (-1)-conditions on a line stand or fall together"},
    {"minus-one-gives-end-match",
     "vanishing line self-extensions force the End-series match"},
    {"projective-ideal-upgrade",
     "with a projective localised ideal the End-series match upgrades to the full chain"},
    {"smooth-implies-projective-ideal",
     "a smooth quotient category makes every localised line ideal projective"},
    {"pdim-projective-equivalence",
     "finite projective dimension of the localised line is the same as a projective localised ideal"},
    {"exceptional-line-contractible",
     "an exceptional line of a blowup satisfies the End-series match"},
    {"nonsplit-self-extension-obstructs",
     "a nonsplit self-extension rules out vanishing line self-extensions"},
    {"assumed-smooth-minus-one",
     "optional assumption: on a smooth quotient category every line has self-intersection -1"},
    {"zero-intersection-equivalences",
     "the four zero-intersection conditions on a divisor-disjoint pair stand or fall together"},
    {"zero-intersection-gives-gap",
     "matching Hom and Ext series force the single-gap Hom series between the ideals"},
    {"zero-intersection-projective-upgrade",
     "with a projective localised ideal the single-gap condition upgrades to the full chain"},
    {"one-intersection-ladder",
     "the two-term Ext series between the ideals forces the positive-intersection chain"},
    {"one-intersection-equivalences",
     "the three positive-intersection conditions stand or fall together"},
    {"one-intersection-gives-gap",
     "the two-term Ext series forces the double-gap Hom series between the ideals"},
    {"one-intersection-projective-upgrade",
     "with a projective (-1)-line in the pair the positive-intersection chain closes up"},
};

}  // namespace

std::string_view predicate_name(predicate p) {
  for (const auto& e : kPredicates)
    if (e.pred == p) return e.name;
  throw std::logic_error("unnamed predicate");
}

std::optional<predicate> predicate_from_name(std::string_view name) {
  for (const auto& e : kPredicates)
    if (e.name == name) return e.pred;
  return std::nullopt;
}

std::string_view provenance_name(provenance_kind k) {
  switch (k) {
    case provenance_kind::declared: return "declared";
    case provenance_kind::axiom: return "axiom";
    case provenance_kind::derived: return "derived";
  }
  return "";
}

std::string_view rule_description(std::string_view rule_id) {
  for (const auto& d : kRuleDocs)
    if (d.id == rule_id) return d.text;
  return "";
}

std::string fact::key() const {
  std::string out = subject;
  out += " ";
  out += predicate_name(pred);
  out += value ? "=true" : "=false";
  return out;
}

void fact_base::add(fact f) {
  if (has(f.subject, f.pred, f.value)) return;
  facts_.push_back(std::move(f));
}

bool fact_base::has(const std::string& subject, predicate p, bool value) const {
  return find(subject, p, value) != nullptr;
}

const fact* fact_base::find(const std::string& subject, predicate p,
                            bool value) const {
  for (const auto& f : facts_)
    if (f.subject == subject && f.pred == p && f.value == value) return &f;
  return nullptr;
}

std::optional<bool> fact_base::value(const std::string& subject,
                                     predicate p) const {
  bool has_true = has(subject, p, true);
  bool has_false = has(subject, p, false);
  if (has_true == has_false) return std::nullopt;
  return has_true;
}

bool fact_base::contradictory(const std::string& subject, predicate p) const {
  return has(subject, p, true) && has(subject, p, false);
}

std::vector<std::string> fact_base::contradictions() const {
  std::vector<std::string> out;
  std::set<std::pair<std::string, predicate>> seen;
  for (const auto& f : facts_) {
    auto key = std::make_pair(f.subject, f.pred);
    if (seen.count(key)) continue;
    if (contradictory(f.subject, f.pred)) {
      out.push_back(f.subject + " " + std::string(predicate_name(f.pred)));
      seen.insert(key);
    }
  }
  return out;
}

fact_base fact_base::without_subject(const std::string& subject) const {
  fact_base out;
  for (const auto& f : facts_)
    if (f.subject != subject) out.facts_.push_back(f);
  return out;
}

bool same_assertions(const fact_base& a, const fact_base& b) {
  auto keys = [](const fact_base& fb) {
    std::set<std::string> out;
    for (const auto& f : fb.facts_) out.insert(f.key());
    return out;
  };
  return keys(a) == keys(b);
}

std::vector<inference_rule> implication_rules(const std::string& id,
                                              std::vector<rule_literal> premises,
                                              rule_literal conclusion) {
  std::vector<inference_rule> out;
  out.push_back({id, premises, conclusion});
  rule_literal negated_conclusion{conclusion.slot, conclusion.pred,
                                  !conclusion.value};
  for (size_t i = 0; i < premises.size(); ++i) {
    std::vector<rule_literal> contra;
    for (size_t j = 0; j < premises.size(); ++j)
      if (j != i) contra.push_back(premises[j]);
    contra.push_back(negated_conclusion);
    out.push_back(
        {id, contra, {premises[i].slot, premises[i].pred, !premises[i].value}});
  }
  return out;
}

std::vector<inference_rule> equivalence_rules(const std::string& id,
                                              rule_literal a, rule_literal b) {
  std::vector<inference_rule> out;
  out.push_back({id, {a}, b});
  out.push_back({id, {b}, a});
  out.push_back({id, {{a.slot, a.pred, !a.value}}, {b.slot, b.pred, !b.value}});
  out.push_back({id, {{b.slot, b.pred, !b.value}}, {a.slot, a.pred, !a.value}});
  return out;
}

namespace {

void append(std::vector<inference_rule>& dst, std::vector<inference_rule> src) {
  for (auto& r : src) dst.push_back(std::move(r));
}

rule_literal lit(rule_slot slot, predicate p, bool value = true) {
  return rule_literal{slot, p, value};
}

std::vector<inference_rule> self_rules_for(rule_slot line) {
  using p = predicate;
  std::vector<inference_rule> out;
  append(out, equivalence_rules("minus-one-equivalences",
                                lit(line, p::ext1_ideal_self_zero),
                                lit(line, p::ext1_line_self_zero)));
  append(out, equivalence_rules("minus-one-equivalences",
                                lit(line, p::ext1_line_self_zero),
                                lit(line, p::hom_ideal_line_shifted_plane)));
  append(out, equivalence_rules("minus-one-equivalences",
                                lit(line, p::hom_ideal_line_shifted_plane),
                                lit(line, p::self_intersection_minus_one)));
  append(out, implication_rules("minus-one-gives-end-match",
                                {lit(line, p::ext1_line_self_zero)},
                                lit(line, p::end_series_matches_ring)));
  append(out, implication_rules("projective-ideal-upgrade",
                                {lit(line, p::ideal_localisation_projective),
                                 lit(line, p::end_series_matches_ring)},
                                lit(line, p::ext1_ideal_self_zero)));
  append(out, implication_rules("smooth-implies-projective-ideal",
                                {lit(rule_slot::algebra, p::qgr_smooth)},
                                lit(line, p::ideal_localisation_projective)));
  append(out, equivalence_rules("pdim-projective-equivalence",
                                lit(line, p::ideal_localisation_projective),
                                lit(line, p::pdim_line_localisation_finite)));
  append(out, implication_rules("exceptional-line-contractible",
                                {lit(line, p::exceptional_line)},
                                lit(line, p::end_series_matches_ring)));
  append(out, implication_rules("nonsplit-self-extension-obstructs",
                                {lit(line, p::nonsplit_self_extension)},
                                lit(line, p::ext1_line_self_zero, false)));
  append(out, implication_rules(
                  "assumed-smooth-minus-one",
                  {lit(rule_slot::algebra, p::assume_smooth_forces_minus_one),
                   lit(rule_slot::algebra, p::qgr_smooth)},
                  lit(line, p::self_intersection_minus_one)));
  return out;
}

}  // namespace

std::vector<inference_rule> self_intersection_rules() {
  return self_rules_for(rule_slot::line_a);
}

std::vector<inference_rule> zero_intersection_rules() {
  using p = predicate;
  const auto pr = rule_slot::pair;
  std::vector<inference_rule> out;
  append(out, equivalence_rules("zero-intersection-equivalences",
                                lit(pr, p::ext1_ideal_pair_zero),
                                lit(pr, p::hom_ext_series_match)));
  append(out, equivalence_rules("zero-intersection-equivalences",
                                lit(pr, p::hom_ext_series_match),
                                lit(pr, p::hom_ideal_line_plane)));
  append(out, equivalence_rules("zero-intersection-equivalences",
                                lit(pr, p::hom_ideal_line_plane),
                                lit(pr, p::intersection_zero)));
  append(out, implication_rules("zero-intersection-gives-gap",
                                {lit(pr, p::hom_ext_series_match)},
                                lit(pr, p::hom_ideal_pair_gap_single)));
  for (auto line : {rule_slot::line_a, rule_slot::line_b})
    append(out,
           implication_rules("zero-intersection-projective-upgrade",
                             {lit(line, p::ideal_localisation_projective),
                              lit(pr, p::hom_ideal_pair_gap_single)},
                             lit(pr, p::ext1_ideal_pair_zero)));
  return out;
}

std::vector<inference_rule> one_intersection_rules() {
  using p = predicate;
  const auto pr = rule_slot::pair;
  std::vector<inference_rule> out;
  append(out, implication_rules("one-intersection-ladder",
                                {lit(pr, p::ext1_ideal_pair_two_terms)},
                                lit(pr, p::x_series_shifted_geometric)));
  append(out, equivalence_rules("one-intersection-equivalences",
                                lit(pr, p::x_series_shifted_geometric),
                                lit(pr, p::hom_ideal_line_lowered_plane)));
  append(out, equivalence_rules("one-intersection-equivalences",
                                lit(pr, p::hom_ideal_line_lowered_plane),
                                lit(pr, p::intersection_one)));
  append(out, implication_rules("one-intersection-gives-gap",
                                {lit(pr, p::ext1_ideal_pair_two_terms)},
                                lit(pr, p::hom_ideal_pair_gap_double)));
  for (auto line : {rule_slot::line_a, rule_slot::line_b}) {
    append(out,
           implication_rules("one-intersection-projective-upgrade",
                             {lit(line, p::ideal_localisation_projective),
                              lit(line, p::self_intersection_minus_one),
                              lit(pr, p::x_series_shifted_geometric)},
                             lit(pr, p::hom_ideal_pair_gap_double)));
    append(out,
           implication_rules("one-intersection-projective-upgrade",
                             {lit(line, p::ideal_localisation_projective),
                              lit(line, p::self_intersection_minus_one),
                              lit(pr, p::hom_ideal_pair_gap_double)},
                             lit(pr, p::ext1_ideal_pair_two_terms)));
  }
  return out;
}

const std::string& rule_subjects::resolve(rule_slot slot) const {
  switch (slot) {
    case rule_slot::line_a: return line_a;
    case rule_slot::line_b: return line_b;
    case rule_slot::algebra: return algebra;
    case rule_slot::pair: return pair;
  }
  throw std::logic_error("bad rule slot");
}

inference_result run_rules(const fact_base& start,
                           const std::vector<inference_rule>& rules,
                           const rule_subjects& subjects) {
  inference_result out;
  out.closure = start;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& rule : rules) {
      bool fire = true;
      std::vector<std::string> premise_keys;
      for (const auto& prem : rule.premises) {
        const std::string& subject = subjects.resolve(prem.slot);
        if (!out.closure.has(subject, prem.pred, prem.value)) {
          fire = false;
          break;
        }
        fact probe;
        probe.subject = subject;
        probe.pred = prem.pred;
        probe.value = prem.value;
        premise_keys.push_back(probe.key());
      }
      if (!fire) continue;
      const std::string& subject = subjects.resolve(rule.conclusion.slot);
      if (out.closure.has(subject, rule.conclusion.pred, rule.conclusion.value))
        continue;
      fact derived;
      derived.subject = subject;
      derived.pred = rule.conclusion.pred;
      derived.value = rule.conclusion.value;
      derived.prov = provenance_kind::derived;
      derived.rule = rule.id;
      derived.premises = premise_keys;
      out.closure.add(std::move(derived));
      changed = true;
    }
  }
  out.contradictions = out.closure.contradictions();
  out.contradiction = !out.contradictions.empty();
  return out;
}

}  // namespace ncsurf
