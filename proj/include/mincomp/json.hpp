#pragma once
// JSON views of the reports. Integers that fit in int64 are numbers, larger ones decimal strings.

#include "cyclic.hpp"
#include "epclass.hpp"
#include "parse.hpp"

#include <json.hpp>

namespace mincomp::json {

using Json = nlohmann::ordered_json;

inline Json num(const Int& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(v);
  return v.str();
}

inline Json num(const std::optional<Int>& v) { return v ? num(*v) : Json(nullptr); }

inline Json ints(const std::vector<Int>& v) {
  Json a = Json::array();
  for (auto& x : v) a.push_back(num(x));
  return a;
}

inline Json rational(const Rational& q) { return str(q); }

inline Json window(const Window& w) { return Json{{"lo", num(w.lo)}, {"hi", num(w.hi)}}; }

inline Json residues(const CyclicSet& s) {
  Json a = Json::array();
  for (auto r : s.residues()) a.push_back(r);
  return a;
}

inline const char* kind_name(IntegerSet::Kind k) {
  switch (k) {
    case IntegerSet::Kind::Finite: return "finite";
    case IntegerSet::Kind::EP: return "ep";
    case IntegerSet::Kind::Lazy: return "lazy";
    case IntegerSet::Kind::TwoSided: return "two-sided";
  }
  return "?";
}

inline Json set(const IntegerSet& s) { return Json{{"kind", kind_name(s.kind())}, {"expression", print(s)}}; }

inline Json mac_report(const MacReport& r) {
  Json w = Json::array();
  for (auto& d : r.witnesses) w.push_back(Json{{"c", num(d.c)}, {"w", num(d.w())}, {"z", num(d.z)}});
  return Json{{"verdict", to_string(r.verdict)},
              {"covered", r.covered},
              {"coverage_window", window(r.coverage_window)},
              {"inspect_window", window(r.inspect_window)},
              {"failing", num(r.failing)},
              {"zone", window(r.zone)},
              {"inspected", r.inspected},
              {"witnesses", w},
              {"caveat", r.caveat}};
}

inline Json refutation(const RefutationEvidence& e) {
  Json surv = Json::array();
  for (auto& W : e.survivors) surv.push_back(ints(W));
  Json samples = Json::array();
  for (auto& s : e.samples)
    samples.push_back(Json{{"W", ints(s.W)}, {"c", num(s.c)}, {"reason", s.reason}, {"z", num(s.z)}});
  return Json{{"radius", e.radius},
              {"w_size_max", e.w_size_max},
              {"coverage_window", window(e.coverage_window)},
              {"inspect_window", window(e.inspect_window)},
              {"inspect_complete", e.inspect_complete},
              {"candidates", e.candidates},
              {"covering", e.covering},
              {"refuted", e.refuted},
              {"gap_citations", e.gap_citations},
              {"survivors", surv},
              {"samples", samples}};
}

// one JSON-lines record
inline Json trace_step(const TraceStep& s) {
  Json h = Json::array();
  for (auto& r : s.h_values) h.push_back(Json{{"from", r.from}, {"to", r.to}, {"h_from", num(r.h_from)}});
  Json added = Json::array();
  for (auto& [lo, hi] : s.added_sets) added.push_back(Json::array({num(lo), num(hi)}));
  return Json{{"phase", s.phase},
              {"i", s.i},
              {"y", num(s.y)},
              {"t", num(s.t)},
              {"x", num(s.x)},
              {"z", num(s.z)},
              {"k", num(s.k)},
              {"h_values", h},
              {"added_sets", added},
              {"z_increase_ok", s.z_increase_ok ? Json(*s.z_increase_ok) : Json(nullptr)},
              {"exploration", s.exploration}};
}

inline Json trace(const ConstructionTrace& t) {
  Json steps = Json::array();
  for (auto& s : t.steps) steps.push_back(trace_step(s));
  return Json{{"shift", num(t.shift)}, {"steps", steps}};
}

inline std::string trace_lines(const ConstructionTrace& t) {
  std::string out;
  for (auto& s : t.steps) out += trace_step(s).dump() + "\n";
  return out;
}

inline Json cyclic_answer(const CyclicMacAnswer& a) {
  return Json{{"m", a.m},
              {"C", residues(a.C)},
              {"arises", a.arises},
              {"witness", a.witness_W ? residues(*a.witness_W) : Json(nullptr)},
              {"exhausted", a.exhausted},
              {"candidates", a.candidates}};
}

inline Json bound_report(const BoundReport& r) {
  Json ext = Json::array();
  for (auto& e : r.extremal)
    ext.push_back(Json{{"k", e.k}, {"max_c", e.max_c}, {"C", residues(e.C)}, {"W", residues(e.W)}});
  return Json{{"order", r.order}, {"pairs_checked", r.pairs_checked}, {"violations", r.violations}, {"extremal", ext}};
}

inline Json cayley(const CayleyResult& c) {
  return Json{{"n", c.n},
              {"P", residues(c.P)},
              {"gamma", c.gamma},
              {"upper_gamma", c.upper_gamma},
              {"gamma_witness", residues(c.gamma_witness)},
              {"upper_witness", residues(c.upper_witness)}};
}

inline Json density(const DensityReport& d) {
  return Json{{"upper_banach", rational(d.upper_banach)},
              {"lower_banach", rational(d.lower_banach)},
              {"eventual_density", rational(d.eventual_density)},
              {"two_sided", d.two_sided},
              {"convention", d.convention}};
}

inline Json partition(const YPartition& y) {
  Json a = Json::array();
  for (auto l : y.labels) a.push_back(to_string(l));
  return a;
}

inline Json necessary(const NecessaryResult& n) {
  Json y = Json::object();
  for (auto& [a, r] : n.y) y[std::to_string(a)] = r;
  return Json{{"pass", n.pass},
              {"witness", n.witness ? partition(*n.witness) : Json(nullptr)},
              {"y", y},
              {"labelings", n.labelings}};
}

inline Json verdict(const ClassifierVerdict& v) {
  Json c4 = Json::array();
  for (auto& t : v.condition4)
    c4.push_back(Json{{"a", t.a}, {"possible", t.possible}, {"first_uncovered", num(t.first_uncovered)}});
  return Json{{"verdict", to_string(v.verdict)},
              {"reason", to_string(v.reason)},
              {"density", Json{{"pass", v.density.pass}, {"lhs", v.density.lhs}, {"rhs", v.density.rhs}}},
              {"prime_bound", Json{{"status", to_string(v.prime.status)},
                                   {"bound", rational(v.prime.bound)},
                                   {"tight", v.prime.tight}}},
              {"necessary", v.necessary ? necessary(*v.necessary) : Json(nullptr)},
              {"condition4_required", v.condition4_required},
              {"condition4", c4},
              {"route", v.route},
              {"W", v.W ? set(*v.W) : Json(nullptr)},
              {"report", v.report ? mac_report(*v.report) : Json(nullptr)},
              {"notes", v.notes}};
}

}  // namespace mincomp::json
