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

#include "ncsurf/scenario.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "ncsurf/intersection.hpp"

namespace ncsurf {

namespace {

using nlohmann::json;

long parse_long(const std::string& word) {
  try {
    size_t used = 0;
    long out = std::stol(word, &used);
    if (used != word.size()) throw std::invalid_argument("");
    return out;
  } catch (const std::exception&) {
    throw parse_error("bad integer literal: " + word);
  }
}

std::vector<std::string> split_words(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  std::string word;
  while (in >> word) out.push_back(word);
  return out;
}

// Every record is (step, anchor, value, provenance); the writer refuses
// anything else so the structured stream stays schema-clean.
class reporter {
 public:
  reporter(const run_options& options, std::ostream& out)
      : options_(options), out_(out) {}

  void emit(const std::string& step, const std::string& anchor,
            const json& value, const std::string& provenance) {
    if (options_.structured) {
      json record{{"step", step},
                  {"anchor", anchor},
                  {"value", value},
                  {"provenance", provenance}};
      check_schema(record);
      out_ << record.dump() << "\n";
      return;
    }
    out_ << "[" << step << "] ";
    if (value.is_string())
      out_ << value.get<std::string>();
    else
      out_ << value.dump();
    out_ << "  (" << anchor << "; " << provenance << ")\n";
  }

 private:
  static void check_schema(const json& record) {
    if (!record.is_object() || record.size() != 4 ||
        !record.contains("step") || !record["step"].is_string() ||
        !record.contains("anchor") || !record["anchor"].is_string() ||
        !record.contains("value") || record["value"].is_null() ||
        !record.contains("provenance") || !record["provenance"].is_string())
      throw std::logic_error("malformed report record");
  }

  const run_options& options_;
  std::ostream& out_;
};

std::string provenance_of(const fact& f) {
  std::string out(provenance_name(f.prov));
  if (f.prov == provenance_kind::derived) out += "(" + f.rule + ")";
  return out;
}

// Accumulates curve/bind/relate declarations until an algebra freezes them
// into an immutable context.
struct context_builder {
  genericity_context ctx;
  bool frozen = false;

  std::optional<bound_model<rational_field>> rational_model;
  std::optional<bound_model<prime_field>> prime_model;

  std::shared_ptr<const genericity_context> freeze() {
    if (rational_model)
      ctx.bind(oracle_binding(*rational_model));
    else if (prime_model)
      ctx.bind(oracle_binding(*prime_model));
    frozen = true;
    return std::make_shared<genericity_context>(std::move(ctx));
  }
};

struct scenario_state {
  context_builder builder;
  std::shared_ptr<const genericity_context> ctx;
  std::optional<algebra_descriptor> algebra;
  std::map<std::string, line_module_ref> lines;
  std::vector<std::string> exceptional_ids;
  int exceptional_counter = 0;
  int step = 0;

  std::string step_name(const std::string& command) const {
    char buf[16];
    std::snprintf(buf, sizeof buf, "%02d ", step);
    return std::string(buf) + command;
  }

  void require_algebra() const {
    if (!algebra)
      throw precondition_error("no algebra declared yet; add an 'algebra' line");
  }

  void require_unfrozen() const {
    if (builder.frozen)
      throw precondition_error(
          "the curve context is frozen once an algebra is declared");
  }

  const line_module_ref& line(const std::string& id) const {
    if (id == "last") {
      if (exceptional_ids.empty())
        throw precondition_error("no exceptional line yet");
      return lines.at(exceptional_ids.back());
    }
    auto it = lines.find(id);
    if (it == lines.end())
      throw precondition_error("unknown line id: " + id);
    return it->second;
  }

  std::string fact_subject(const std::string& token) const {
    if (token == "algebra") {
      require_algebra();
      return algebra_subject(*algebra);
    }
    if (token.rfind("pair:", 0) == 0) {
      std::string rest = token.substr(5);
      size_t comma = rest.find(',');
      if (comma == std::string::npos)
        throw parse_error("pair subject must be pair:<idA>,<idB>");
      require_algebra();
      return "pair(" + line_subject(*algebra, line(rest.substr(0, comma))) +
             "," + line_subject(*algebra, line(rest.substr(comma + 1))) + ")";
    }
    require_algebra();
    return line_subject(*algebra, line(token));
  }
};

mpq_class parse_rational(const std::string& text) {
  try {
    mpq_class out(text);
    out.canonicalize();
    return out;
  } catch (const std::exception&) {
    throw parse_error("bad rational literal: " + text);
  }
}

std::pair<std::string, std::string> parse_point_pair(const std::string& text) {
  // "(x,y)" with exact field literals inside
  if (text.size() < 5 || text.front() != '(' || text.back() != ')')
    throw parse_error("point literal must look like (x,y): " + text);
  std::string inner = text.substr(1, text.size() - 2);
  size_t comma = inner.find(',');
  if (comma == std::string::npos)
    throw parse_error("point literal must look like (x,y): " + text);
  return {inner.substr(0, comma), inner.substr(comma + 1)};
}

// "curve Q: a=0 b=-2; t=(3,5)"  or  "curve F1000003: a=0 b=7; t=(2,3)"
void exec_curve(scenario_state& state, const std::string& line) {
  state.require_unfrozen();
  std::string text = line.substr(std::string("curve").size());
  auto strip = [](std::string s) {
    size_t a = s.find_first_not_of(" \t");
    size_t b = s.find_last_not_of(" \t");
    return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
  };
  size_t colon = text.find(':');
  if (colon == std::string::npos) throw parse_error("curve line needs ':'");
  std::string field_tag = strip(text.substr(0, colon));
  std::string rest = strip(text.substr(colon + 1));
  size_t semi = rest.find(';');
  if (semi == std::string::npos)
    throw parse_error("curve line needs '; t=(x,y)'");
  std::string coeffs = strip(rest.substr(0, semi));
  std::string tpart = strip(rest.substr(semi + 1));

  std::string a_str, b_str;
  for (const auto& word : split_words(coeffs)) {
    if (word.rfind("a=", 0) == 0) a_str = word.substr(2);
    else if (word.rfind("b=", 0) == 0) b_str = word.substr(2);
    else throw parse_error("unexpected token in curve coefficients: " + word);
  }
  if (a_str.empty() || b_str.empty())
    throw parse_error("curve line needs a= and b=");
  if (tpart.rfind("t=", 0) != 0) throw parse_error("curve line needs t=(x,y)");
  auto [tx, ty] = parse_point_pair(strip(tpart.substr(2)));

  if (field_tag == "Q") {
    weierstrass_curve<rational_field> curve(rational_field{},
                                            parse_rational(a_str),
                                            parse_rational(b_str));
    auto t = curve.make_point(parse_rational(tx), parse_rational(ty));
    auto guard = order_guard(curve, t, 100);
    if (!guard.ok)
      throw precondition_error(
          "the translation point is torsion: " + std::to_string(guard.offending) +
          " times t is the identity");
    state.builder.rational_model =
        bound_model<rational_field>{std::move(curve), std::move(t), {}};
    state.builder.prime_model.reset();
    return;
  }
  if (field_tag.size() > 1 && field_tag[0] == 'F') {
    mpz_class p(field_tag.substr(1));
    prime_field F(p);
    weierstrass_curve<prime_field> curve(F, F.reduce(mpz_class(a_str)),
                                         F.reduce(mpz_class(b_str)));
    auto t = curve.make_point(F.reduce(mpz_class(tx)), F.reduce(mpz_class(ty)));
    auto guard = order_guard(curve, t, 400);
    if (!guard.ok)
      throw precondition_error(
          "the translation point is torsion: " + std::to_string(guard.offending) +
          " times t is the identity");
    state.builder.prime_model =
        bound_model<prime_field>{std::move(curve), std::move(t), {}};
    state.builder.rational_model.reset();
    return;
  }
  throw parse_error("curve field must be Q or F<prime>: " + field_tag);
}

void exec_bind(scenario_state& state, const std::vector<std::string>& words) {
  state.require_unfrozen();
  if (words.size() != 3) throw parse_error("bind <orbit> (x,y)");
  auto [x, y] = parse_point_pair(words[2]);
  if (state.builder.rational_model) {
    auto& model = *state.builder.rational_model;
    model.orbit_base[words[1]] =
        model.curve.make_point(parse_rational(x), parse_rational(y));
    return;
  }
  if (state.builder.prime_model) {
    auto& model = *state.builder.prime_model;
    const auto& F = model.curve.field();
    model.orbit_base[words[1]] =
        model.curve.make_point(F.reduce(mpz_class(x)), F.reduce(mpz_class(y)));
    return;
  }
  throw precondition_error("bind needs a curve declared first");
}

smoothness parse_smoothness(const std::string& word) {
  if (word == "smooth") return smoothness::smooth;
  if (word == "not-smooth") return smoothness::not_smooth;
  if (word == "unknown") return smoothness::unknown;
  throw parse_error("smoothness must be smooth|not-smooth|unknown: " + word);
}

void report_algebra(const scenario_state& state, reporter& rep,
                    const std::string& step, const run_options& options) {
  const algebra_descriptor& A = *state.algebra;
  json value{{"degree", A.degree()},
             {"twist", A.tcr.twist.to_string()},
             {"smoothness", std::string(smoothness_name(A.smooth))},
             {"history-depth", A.history.size()},
             {"hilb-R", hilb_R(A).to_string()},
             {"hilb-B", hilb_B(A.tcr).to_string()}};
  rep.emit(step, "g-divisible-accumulation", value, "computed");
  for (const auto& f : A.facts.all())
    rep.emit(step, "fact " + std::string(predicate_name(f.pred)),
             json{{"subject", f.subject},
                  {"value", f.value},
                  {"detail", f.detail}},
             provenance_of(f));
  if (options.trace) {
    long hi = options.window;
    auto counts = h0_window(A.tcr, divisor{}, divisor{}, 0, hi);
    for (long n = 0; n <= hi; ++n) {
      divisor D = saturated_degree_divisor(A.tcr, divisor{}, divisor{}, n);
      rep.emit(step, "riemann-roch-sections",
               json{{"n", n},
                    {"divisor", D.to_string()},
                    {"h0", counts[static_cast<size_t>(n)]}},
               "computed");
    }
  }
}

int exec_all(std::istream& in, const run_options& options, std::ostream& out,
             std::ostream& err) {
  scenario_state state;
  reporter rep(options, out);
  std::string raw;
  int line_no = 0;
  bool contradiction_seen = false;
  try {
    while (std::getline(in, raw)) {
      ++line_no;
      std::string line = raw;
      size_t hash = line.find('#');
      if (hash != std::string::npos) line = line.substr(0, hash);
      auto words = split_words(line);
      if (words.empty()) continue;
      ++state.step;
      const std::string& cmd = words[0];

      if (cmd == "curve") {
        exec_curve(state, line);
        rep.emit(state.step_name("curve"), "oracle-binding",
                 json("curve model declared and guarded"), "declared");
      } else if (cmd == "bind") {
        exec_bind(state, words);
        rep.emit(state.step_name("bind"), "oracle-binding",
                 json("orbit " + words[1] + " bound"), "declared");
      } else if (cmd == "relate") {
        state.require_unfrozen();
        if (words.size() != 4) throw parse_error("relate <orbitA> <orbitB> <k>");
        state.builder.ctx.declare_relation(
            {words[1], words[2], parse_long(words[3])});
        rep.emit(state.step_name("relate"), "declared-orbit-relation",
                 json(words[1] + " = tau^" + words[3] + " " + words[2]),
                 "declared");
      } else if (cmd == "algebra") {
        if (words.size() < 2) throw parse_error("algebra <divisor> [smoothness]");
        if (state.algebra)
          throw precondition_error("the scenario already has an algebra");
        // the divisor may contain spaces; recover it from the raw line
        size_t pos = line.find("algebra") + 7;
        std::string rest = line.substr(pos);
        smoothness smooth = smoothness::unknown;
        auto tail_words = split_words(rest);
        if (!tail_words.empty()) {
          const std::string& last = tail_words.back();
          if (last == "smooth" || last == "not-smooth" || last == "unknown") {
            smooth = parse_smoothness(last);
            size_t cut = rest.rfind(last);
            rest = rest.substr(0, cut);
          }
        }
        divisor M = divisor::parse(rest);
        if (!state.ctx) state.ctx = state.builder.freeze();
        state.algebra = make_elliptic_algebra(state.ctx, M, smooth);
        report_algebra(state, rep, state.step_name("algebra"), options);
      } else if (cmd == "blowup") {
        state.require_algebra();
        if (words.size() < 2) throw parse_error("blowup <point> [pdim=...]");
        curve_point p = curve_point::parse(words[1]);
        pdim_state hint = pdim_state::unknown;
        if (words.size() >= 3) {
          if (words[2] == "pdim=finite") hint = pdim_state::finite;
          else if (words[2] == "pdim=infinite") hint = pdim_state::infinite;
          else throw parse_error("blowup option must be pdim=finite|infinite");
        }
        blowup_result r = blowup(*state.algebra, p, hint);
        state.algebra = r.algebra;
        std::string id = "L" + std::to_string(++state.exceptional_counter);
        state.lines[id] = r.exceptional;
        state.exceptional_ids.push_back(id);
        rep.emit(state.step_name("blowup"), "blowup-twist-drop",
                 json{{"point", p.to_string()},
                      {"degree", state.algebra->degree()},
                      {"twist", state.algebra->tcr.twist.to_string()},
                      {"exceptional", id},
                      {"exceptional-divisor", r.exceptional.div_point.to_string()},
                      {"smoothness",
                       std::string(smoothness_name(state.algebra->smooth))}},
                 "computed");
      } else if (cmd == "blowdown") {
        state.require_algebra();
        if (words.size() != 2) throw parse_error("blowdown last|<line-id>");
        line_module_ref L = state.line(words[1]);
        hilbert_series before = hilb_R(*state.algebra);
        algebra_descriptor down = blowdown(*state.algebra, L);
        hilbert_series delta = hilb_R(down) - before;
        state.algebra = std::move(down);
        if (words[1] == "last" ||
            (!state.exceptional_ids.empty() &&
             state.exceptional_ids.back() == words[1]))
          state.exceptional_ids.pop_back();
        rep.emit(state.step_name("blowdown"), "blowdown-twist-raise",
                 json{{"degree", state.algebra->degree()},
                      {"twist", state.algebra->tcr.twist.to_string()},
                      {"series-delta", delta.to_string()},
                      {"smoothness",
                       std::string(smoothness_name(state.algebra->smooth))}},
                 "computed");
      } else if (cmd == "line") {
        state.require_algebra();
        if (words.size() < 3) throw parse_error("line <id> <point> [side] [shift]");
        line_module_ref ref{curve_point::parse(words[2]), module_side::right, 0};
        if (words.size() >= 4) {
          if (words[3] == "left") ref.side = module_side::left;
          else if (words[3] != "right") throw parse_error("side must be left|right");
        }
        if (words.size() >= 5) ref.shift = parse_long(words[4]);
        state.lines[words[1]] = ref;
        rep.emit(state.step_name("line"), "line-module-declared",
                 json{{"id", words[1]},
                      {"divisor-point", ref.div_point.to_string()},
                      {"series", line_series(ref).to_string()}},
                 "declared");
      } else if (cmd == "facts") {
        state.require_algebra();
        if (words.size() >= 2 && words[1] == "add") {
          if (words.size() < 5) throw parse_error(
              "facts add <subject> <predicate> <true|false>");
          fact f;
          f.subject = state.fact_subject(words[2]);
          auto p = predicate_from_name(words[3]);
          if (!p) throw parse_error("unknown predicate: " + words[3]);
          f.pred = *p;
          if (words[4] == "true") f.value = true;
          else if (words[4] == "false") f.value = false;
          else throw parse_error("fact value must be true|false");
          f.prov = provenance_kind::declared;
          state.algebra->facts.add(f);
          rep.emit(state.step_name("facts"), "fact " + words[3],
                   json{{"subject", f.subject}, {"value", f.value}},
                   "declared");
        } else if (words.size() == 3 && words[1] == "load") {
          std::ifstream fin(words[2]);
          if (!fin) throw precondition_error("cannot open fact file: " + words[2]);
          std::string fact_line;
          while (std::getline(fin, fact_line)) {
            size_t fhash = fact_line.find('#');
            if (fhash != std::string::npos) fact_line = fact_line.substr(0, fhash);
            auto fw = split_words(fact_line);
            if (fw.empty()) continue;
            if (fw.size() < 3)
              throw parse_error("fact file line needs <subject> <predicate> <bool>");
            fact f;
            f.subject = state.fact_subject(fw[0]);
            auto p = predicate_from_name(fw[1]);
            if (!p) throw parse_error("unknown predicate: " + fw[1]);
            f.pred = *p;
            f.value = fw[2] == "true";
            f.prov = (fw.size() >= 4 && fw[3] == "axiom")
                         ? provenance_kind::axiom
                         : provenance_kind::declared;
            state.algebra->facts.add(f);
          }
          rep.emit(state.step_name("facts"), "fact-file-loaded", json(words[2]),
                   "declared");
        } else {
          throw parse_error("facts add ... | facts load <path>");
        }
      } else if (cmd == "intersect" || cmd == "infer") {
        state.require_algebra();
        if (words.size() < 2 || words.size() > 3)
          throw parse_error(std::string(cmd) + " <idA> [<idB>]");
        line_module_ref A = state.line(words[1]);
        line_module_ref B = state.line(words.size() == 3 ? words[2] : words[1]);
        pair_relation rel = classify_pair(*state.ctx, A, B);
        std::string sub_a = line_subject(*state.algebra, A);
        std::string sub_b = line_subject(*state.algebra, B);
        std::string pair_subject = "pair(" + sub_a + "," + sub_b + ")";
        rule_subjects subj{sub_a, sub_b, algebra_subject(*state.algebra),
                           pair_subject};
        if (cmd == "intersect") {
          ledger_candidates led = ledger(rel);
          json rel_value{{"kind", rel.kind == pair_kind::same_line  ? "same-line"
                                  : rel.kind == pair_kind::on_orbit ? "on-orbit"
                                                                    : "off-orbit"}};
          if (rel.kind == pair_kind::on_orbit) rel_value["offset"] = rel.j;
          rel_value["hom"] = led.H.to_string();
          rel_value["ext"] = led.E.to_string();
          rep.emit(state.step_name("intersect"), "point-quotient-ledger",
                   rel_value, "computed");
          for (const auto& entry : led.entries(rel))
            rep.emit(state.step_name("intersect"), "connecting-image-dichotomy",
                     json{{"C", entry.C.to_string()},
                          {"X", entry.X.to_string()},
                          {"dot", entry.dot}},
                     "computed");
          line_hom_result hom = line_hom_candidates(rel);
          rep.emit(state.step_name("intersect"),
                   hom.conditional ? "line-hom-candidate" : "line-hom-exact",
                   json{{"series", hom.series.to_string()},
                        {"conditional", hom.conditional}},
                   "computed");
          if (rel.kind == pair_kind::same_line)
            rep.emit(state.step_name("intersect"), "line-endomorphisms-central",
                     json("hilb End(L) = 1 / (1-s)"), "computed");
        }
        fact_base seeded = state.algebra->facts;
        if (state.algebra->smooth != smoothness::unknown) {
          fact f;
          f.subject = algebra_subject(*state.algebra);
          f.pred = predicate::qgr_smooth;
          f.value = state.algebra->smooth == smoothness::smooth;
          f.prov = provenance_kind::axiom;
          seeded.add(f);
        }
        inference_result closure = infer(seeded, rel, subj);
        for (const auto& f : closure.closure.all()) {
          if (f.prov != provenance_kind::derived) continue;
          rep.emit(state.step_name(cmd), "rule " + f.rule,
                   json{{"subject", f.subject},
                        {"predicate", std::string(predicate_name(f.pred))},
                        {"value", f.value},
                        {"premises", f.premises}},
                   provenance_of(f));
        }
        for (const auto& note : closure.notes)
          rep.emit(state.step_name(cmd), "coverage-note", json(note), "computed");
        if (closure.contradiction) {
          for (const auto& c : closure.contradictions)
            rep.emit(state.step_name(cmd), "contradiction", json(c), "derived");
          contradiction_seen = true;
        }
      } else if (cmd == "tilde") {
        // tilde <base series> ; <multiplicity series>
        size_t pos = line.find("tilde") + 5;
        std::string rest = line.substr(pos);
        size_t semi = rest.find(';');
        if (semi == std::string::npos)
          throw parse_error("tilde <base series> ; <multiplicity series>");
        hilbert_series base = hilbert_series::parse(rest.substr(0, semi));
        hilbert_series p_s = hilbert_series::parse(rest.substr(semi + 1));
        tilde_report rep_data = tilde_extension_series(base, p_s);
        rep.emit(state.step_name("tilde"), "contraction-tail-series",
                 json{{"base", rep_data.base.to_string()},
                      {"multiplicity", rep_data.multiplicity.to_string()},
                      {"extension", rep_data.extension.to_string()},
                      {"ext1", rep_data.ext1.to_string()}},
                 "computed");
      } else if (cmd == "report") {
        state.require_algebra();
        report_algebra(state, rep, state.step_name("report"), options);
      } else {
        throw parse_error("unknown command: " + cmd);
      }
    }
  } catch (const parse_error& e) {
    err << "parse error (line " << line_no << "): " << e.what() << "\n";
    return kExitParse;
  } catch (const precondition_error& e) {
    err << "precondition failure (line " << line_no << "): " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const std::invalid_argument& e) {
    err << "precondition failure (line " << line_no << "): " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const inconsistency_error& e) {
    err << "inconsistency (line " << line_no << "): " << e.what() << "\n";
    return kExitInconsistent;
  } catch (const std::exception& e) {
    err << "error (line " << line_no << "): " << e.what() << "\n";
    return kExitInconsistent;
  }
  return contradiction_seen ? kExitInconsistent : kExitOk;
}

}  // namespace

int run_scenario_text(std::string_view text, const run_options& options,
                      std::ostream& out, std::ostream& err) {
  std::istringstream in{std::string(text)};
  return exec_all(in, options, out, err);
}

int run_scenario_file(const std::string& path, const run_options& options,
                      std::ostream& out, std::ostream& err) {
  std::ifstream in(path);
  if (!in) {
    err << "cannot open scenario file: " << path << "\n";
    return kExitParse;
  }
  return exec_all(in, options, out, err);
}

int run_builtin_pathology(const run_options& options, std::ostream& out,
                         std::ostream& err) {
  reporter rep(options, out);
  try {
    auto ctx = std::make_shared<genericity_context>();
    algebra_descriptor T = make_elliptic_algebra(
        ctx, divisor::of_point(curve_point{"M", 0}, 9), smoothness::smooth);
    curve_point p{"P", 0};
    twice_blown_up_data data = twice_blown_up_report(T, p);

    rep.emit("reproduce-section9", "blowup-twist-drop",
             json{{"degrees", data.degrees}}, "computed");
    rep.emit("reproduce-section9", "line-ideal-degree-one", json(data.dim_J1), "computed");
    rep.emit("reproduce-section9", "overring-double-extension",
             json(data.y_mod_r.to_string()), "axiom");
    rep.emit("reproduce-section9", "exceptional-lines-coincide",
             json(data.lines_isomorphic), "axiom");
    rep.emit("reproduce-section9", "iterated-blowup-not-smooth",
             json{{"base", std::string(smoothness_name(data.base))},
                  {"once", std::string(smoothness_name(data.once))},
                  {"twice", std::string(smoothness_name(data.twice))}},
             "derived(pdim-projective-equivalence)");
    rep.emit("reproduce-section9", "contract-despite-positive-self-intersection",
             json{{"end-series-matches-ring", data.contractibility_holds},
                  {"self-intersection-minus-one-excluded",
                   data.minus_one_excluded},
                  {"contradiction", data.contradiction}},
             "derived(nonsplit-self-extension-obstructs)");
    rep.emit("reproduce-section9", "undefined-alternating-sum",
             json{{"prefix", data.profile.prefix},
                  {"tail", data.profile.tail},
                  {"undefined", data.ms_undefined}},
             "axiom");
    rep.emit("reproduce-section9", "blowdown-twist-raise", json(data.final_degree),
             "computed");
    for (const auto& f : data.closure.closure.all())
      rep.emit("reproduce-section9", "fact " + std::string(predicate_name(f.pred)),
               json{{"subject", f.subject}, {"value", f.value}},
               provenance_of(f));
    if (data.contradiction) return kExitInconsistent;
  } catch (const precondition_error& e) {
    err << "precondition failure: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInconsistent;
  }
  return kExitOk;
}

}  // namespace ncsurf
