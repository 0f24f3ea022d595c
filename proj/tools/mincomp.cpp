// mincomp: command-line front end for sumsets and minimal complements.
//
// exit 0: definitive answer (proved on the stated window, or a finite exhaustive result)
// exit 2: unknown or evidence only
// exit 1: error

#include <mincomp/mincomp.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace mincomp;
using json::Json;

namespace {

struct Flags {
  std::string window;
  std::int64_t depth = 4;
  std::int64_t max_modulus = 0;  // 0: environment or default
  bool json = false;
  std::uint64_t budget = kDefaultBudget;
  std::string trace;
};

struct Report {
  std::string verdict;
  int code = 0;
  Json body = Json::object();
  std::vector<std::string> text;
};

Window parse_window(const std::string& s, Window fallback) {
  if (s.empty()) return fallback;
  auto colon = s.find(':', 1);
  if (colon == std::string::npos) throw Error("--window: expected lo:hi, got '" + s + "'");
  Int lo, hi;
  try {
    lo = Int(s.substr(0, colon));
    hi = Int(s.substr(colon + 1));
  } catch (const std::runtime_error&) {
    throw Error("--window: expected lo:hi, got '" + s + "'");
  }
  if (lo > hi) throw Error("--window: lo exceeds hi");
  return Window(lo, hi);
}

std::vector<std::int64_t> parse_residues(const std::string& s) {
  std::vector<std::int64_t> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size() || used == 0) throw Error("residue list: bad entry '" + item + "'");
    out.push_back(v);
  }
  return out;
}

std::int64_t cap_of(const Flags& f) { return f.max_modulus > 0 ? f.max_modulus : max_modulus(); }

std::vector<Int> finite_elements(const std::string& expr) {
  auto S = parse_set_expression(expr);
  if (!S.is_finite()) throw Error("expected a finite set, got '" + expr + "'");
  return S.elements();
}

std::string list(const std::vector<Int>& v, std::size_t cap = 40) {
  std::string out;
  for (std::size_t i = 0; i < v.size() && i < cap; ++i) out += (i ? "," : "") + abbrev(v[i]);
  if (v.size() > cap) out += ",... (" + std::to_string(v.size()) + " total)";
  return "{" + out + "}";
}

std::string list(const CyclicSet& s) {
  std::string out;
  for (auto r : s.residues()) out += (out.empty() ? "" : ",") + std::to_string(r);
  return "{" + out + "} mod " + std::to_string(s.m);
}

std::string win(const Window& w) { return "[" + abbrev(w.lo) + ", " + abbrev(w.hi) + "]"; }

void write_trace(const Flags& f, const ConstructionTrace& t) {
  if (f.trace.empty()) return;
  std::ofstream out(f.trace);
  if (!out) throw Error("--trace: cannot open '" + f.trace + "'");
  out << json::trace_lines(t);
}

void add_mac_text(Report& r, const MacReport& m, const std::string& label) {
  r.text.push_back(label + to_string(m.verdict) + " on coverage " + win(m.coverage_window) + ", inspect " +
                   win(m.inspect_window));
  if (m.failing) r.text.push_back(label + "failing element " + abbrev(*m.failing));
  for (std::size_t i = 0; i < m.witnesses.size() && i < 12; ++i) {
    auto& w = m.witnesses[i];
    r.text.push_back("  c=" + abbrev(w.c) + " dependent z=" + abbrev(w.z) + " (w=" + abbrev(w.w()) + ")");
  }
  if (m.witnesses.size() > 12) r.text.push_back("  ... " + std::to_string(m.witnesses.size()) + " witnesses");
  r.text.push_back("caveat: " + m.caveat);
}

// ---- commands ----

Report cmd_sumset(const Flags& f, const std::string& c, const std::string& w) {
  auto C = parse_set_expression(c), W = parse_set_expression(w);
  auto win_ = parse_window(f.window, Window(-10, 10));
  auto s = minkowski_window(C, W, win_);
  Report r;
  r.verdict = s.complete ? "Complete" : "Partial";
  r.code = s.complete ? 0 : 2;
  r.body = Json{{"C", json::set(C)}, {"W", json::set(W)}, {"window", json::window(s.window)},
                {"elements", json::ints(s.elements)}, {"complete", s.complete}, {"support", s.support}};
  r.text.push_back("C + W on " + win(s.window) + ": " + list(s.elements, 200));
  if (!s.complete) r.text.push_back("partial: " + s.support);
  return r;
}

Report cmd_gap(const Flags& f, const std::string& s) {
  auto S = parse_set_expression(s);
  auto w = parse_window(f.window, Window(0, 1000));
  auto g = gap(S, w);
  Report r;
  r.verdict = "Computed";
  r.body = Json{{"S", json::set(S)}, {"window", json::window(w)}, {"gap", json::num(g)}};
  r.text.push_back("largest gap on " + win(w) + ": " + abbrev(g));
  return r;
}

Report cmd_verify(const Flags& f, const std::string& c, const std::string& w, const std::string& inspect) {
  auto C = parse_set_expression(c), W = parse_set_expression(w);
  auto cov = parse_window(f.window, Window(-10, 10));
  auto ins = parse_window(inspect, cov);
  auto m = verify_mac(C, W, cov, ins);
  Report r;
  r.verdict = to_string(m.verdict);
  // without a finite W a missing dependent may lie past the searched zone
  r.code = m.verdict == MacVerdict::MinimalityFails && !W.is_finite() ? 2 : 0;
  r.body = Json{{"C", json::set(C)}, {"W", json::set(W)}, {"report", json::mac_report(m)}};
  add_mac_text(r, m, "");
  return r;
}

Report cmd_cominimal(const Flags& f, const std::string& c) {
  auto C = parse_set_expression(c);
  auto w = parse_window(f.window, Window(-10, 10));
  auto p = build_cominimal(C, w, f.budget);
  write_trace(f, p.trace);
  Report r;
  r.code = p.certified ? 0 : 2;
  r.verdict = p.certified ? to_string(MacVerdict::CertifiedOnWindow)
              : p.c_report.verdict != MacVerdict::CertifiedOnWindow ? to_string(p.c_report.verdict)
                                                                     : to_string(p.w_report.verdict);
  std::vector<Int> W = p.W.is_finite() ? p.W.elements() : std::vector<Int>{};
  r.body = Json{{"C", json::set(C)},
                {"W", json::ints(W)},
                {"W_full_size", p.W_full.size()},
                {"certified", p.certified},
                {"certified_window", json::window(p.certified_window)},
                {"support", json::window(p.support)},
                {"c_report", json::mac_report(p.c_report)},
                {"w_report", json::mac_report(p.w_report)},
                {"trace", json::trace(p.trace)}};
  r.text.push_back("C = " + print(C));
  r.text.push_back("W (pruned prefix, " + std::to_string(W.size()) + " of " + std::to_string(p.W_full.size()) +
                   " elements) = " + list(W, 24));
  r.text.push_back("construction steps: " + std::to_string(p.trace.steps.size()) + ", shift " + abbrev(p.trace.shift));
  add_mac_text(r, p.c_report, "C minimal for W: ");
  add_mac_text(r, p.w_report, "W minimal for C: ");
  return r;
}

Report cmd_refute(const Flags& f, const std::string& c, std::int64_t wmax, std::int64_t radius) {
  auto C = parse_set_expression(c);
  auto e = refute_mac_bounded(C, wmax, radius);
  Report r;
  r.verdict = "EvidenceOnly";
  r.code = 2;
  r.body = Json{{"C", json::set(C)}, {"evidence", json::refutation(e)}};
  r.text.push_back("finite W with |W| <= " + std::to_string(wmax) + " inside [-" + std::to_string(radius) + ", " +
                   std::to_string(radius) + "], 0 in W");
  r.text.push_back("candidates " + std::to_string(e.candidates) + ", covering " + std::to_string(e.covering) +
                   ", refuted " + std::to_string(e.refuted) + " (gap citations " + std::to_string(e.gap_citations) +
                   ")");
  r.text.push_back("survivors: " + std::to_string(e.survivors.size()));
  for (std::size_t i = 0; i < e.survivors.size() && i < 10; ++i) r.text.push_back("  W = " + list(e.survivors[i]));
  r.text.push_back(std::string("inspection ") + (e.inspect_complete ? "complete" : "partial") + " on " +
                   win(e.inspect_window));
  (void)f;
  return r;
}

Report cmd_solve(const Flags& f, std::int64_t m, const std::string& res) {
  check_modulus(m, cap_of(f), "solve-cyclic");
  auto rs = parse_residues(res);
  auto C = CyclicSet::of(m, rs);
  auto a = solve_arises(C, cap_of(f));
  Report r;
  r.verdict = a.arises ? "Arises" : a.exhausted ? "DoesNotArise" : "Undecided";
  r.code = a.arises || a.exhausted ? 0 : 2;
  r.body = json::cyclic_answer(a);
  r.text.push_back("C = " + list(a.C));
  r.text.push_back("candidates examined: " + std::to_string(a.candidates));
  if (a.witness_W) {
    r.text.push_back("witness W = " + list(*a.witness_W));
    auto lift = quotient_lift(IntegerSet::from_shape(periodic_shape(m, C.residues())), a);
    r.body["lift"] = Json{{"W", json::ints(lift.W)},
                          {"size_preserved", lift.size_preserved},
                          {"report", json::mac_report(lift.report)}};
    r.text.push_back("lift to Z: C + mZ with W = " + list(lift.W) + ": " + to_string(lift.report.verdict) + " on " +
                     win(lift.report.coverage_window));
  }
  return r;
}

Report cmd_enum(const Flags& f, std::int64_t m, const std::string& res) {
  check_modulus(m, cap_of(f), "enum-min-complements");
  auto W = CyclicSet::of(m, parse_residues(res));
  auto all = enumerate_minimal_complements(W, cap_of(f));
  Report r;
  r.verdict = "Enumerated";
  Json cs = Json::array();
  for (auto& c : all) cs.push_back(json::residues(c));
  r.body = Json{{"m", m}, {"W", json::residues(W)}, {"count", all.size()}, {"complements", cs}};
  r.text.push_back("W = " + list(W));
  r.text.push_back(std::to_string(all.size()) + " minimal complements");
  for (std::size_t i = 0; i < all.size() && i < 50; ++i) r.text.push_back("  " + list(all[i]));
  return r;
}

Report cmd_cayley(const Flags&, std::int64_t n) {
  auto c = cayley_domination(n);
  Report r;
  r.verdict = "Computed";
  r.body = json::cayley(c);
  r.text.push_back("n = " + std::to_string(n) + ", P = " + list(c.P));
  r.text.push_back("gamma = " + std::to_string(c.gamma) + ", witness " + list(c.gamma_witness));
  r.text.push_back("upper_gamma = " + std::to_string(c.upper_gamma) + ", witness " + list(c.upper_witness));
  return r;
}

Report cmd_classify(const Flags& f, const std::string& s, bool certify) {
  auto S = parse_set_expression(s);
  if (!S.is_ep()) throw Error("classify-ep: expected an eventually periodic set (ep:...)");
  ClassifyOptions o;
  o.certify = certify;
  o.window = parse_window(f.window, o.window);
  auto v = classify(S.ep(), o);
  Report r;
  r.verdict = to_string(v.verdict);
  r.code = v.definitive() ? 0 : 2;
  r.body = Json{{"S", json::set(S)}, {"result", json::verdict(v)}};
  r.text.push_back("S = " + print(S));
  if (v.reason != RuleReason::None) r.text.push_back(std::string("reason: ") + to_string(v.reason));
  r.text.push_back("density check 2|A| <= m + |F|: " + std::to_string(v.density.lhs) + " <= " +
                   std::to_string(v.density.rhs) + (v.density.pass ? " holds" : " fails"));
  r.text.push_back(std::string("prime bound: ") + to_string(v.prime.status));
  if (v.necessary) {
    std::string lab;
    if (v.necessary->witness)
      for (auto l : v.necessary->witness->labels) lab += std::to_string(static_cast<int>(l));
    r.text.push_back(std::string("labeling: ") + (v.necessary->pass ? lab : "none") + " (" +
                     std::to_string(v.necessary->labelings) + " candidates)");
  }
  if (!v.route.empty()) r.text.push_back("route: " + v.route);
  if (v.report) add_mac_text(r, *v.report, "certificate: ");
  for (auto& n : v.notes) r.text.push_back("note: " + n);
  return r;
}

Report cmd_density(const Flags&, const std::string& s, bool two_sided, std::int64_t bound) {
  Report r;
  r.verdict = "Computed";
  if (bound > 0) {
    auto b = check_minimal_sumset_bound(bound, true);
    r.verdict = b.violations ? "BoundViolated" : "BoundHolds";
    r.body = Json{{"sumset_bound", json::bound_report(b)}};
    r.text.push_back("|G| = " + std::to_string(bound) + ": " + std::to_string(b.pairs_checked) + " pairs, " +
                     std::to_string(b.violations) + " violations of |C| <= k/(2k-1)|G|");
    for (auto& e : b.extremal)
      r.text.push_back("  k=" + std::to_string(e.k) + " max |C| = " + std::to_string(e.max_c) + " at C=" + list(e.C) +
                       " W=" + list(e.W));
    return r;
  }
  if (s.empty()) throw Error("density: a set expression or --sumset-bound is required");
  auto S = parse_set_expression(s);
  if (S.is_lazy()) throw Unsupported("density: lazy sets have no exact density here");
  auto d = S.is_ep() ? density(S.ep(), two_sided) : density(S.shape());
  r.body = Json{{"S", json::set(S)}, {"density", json::density(d)}};
  r.text.push_back("upper Banach density " + str(d.upper_banach) + ", lower " + str(d.lower_banach) +
                   ", eventual " + str(d.eventual_density));
  r.text.push_back("convention: " + d.convention);
  return r;
}

Report cmd_cover(const Flags& f, const std::string& kind, const std::vector<std::string>& args) {
  auto need = [&](std::size_t n, const char* usage) {
    if (args.size() != n) throw Error(std::string("cover-construct ") + kind + ": usage " + usage);
  };
  Report r;
  r.verdict = "Constructed";
  if (kind == "d") {
    need(1, "d <C> [--depth N]");
    auto C = parse_set_expression(args[0]);
    auto d = build_d(C, f.depth, f.budget);
    write_trace(f, d.trace);
    r.body = Json{{"kind", kind}, {"C", json::set(C)}, {"depth", f.depth}, {"D", json::ints(d.D)},
                  {"covered_lo", json::num(d.covered_lo)}, {"next_uncovered", json::num(d.next_uncovered)},
                  {"trace", json::trace(d.trace)}};
    r.text.push_back("D = " + list(d.D));
    r.text.push_back("C + D covers [" + abbrev(d.covered_lo) + ", 0]; next uncovered " + abbrev(d.next_uncovered));
    return r;
  }
  if (kind == "w") {
    need(1, "w <C> [--depth N]");
    auto C = parse_set_expression(args[0]);
    auto w = build_w(C, f.depth, f.budget);
    write_trace(f, w.trace);
    Json wit = Json::array();
    for (auto& d : w.witnesses) wit.push_back(Json{{"c", json::num(d.c)}, {"z", json::num(d.z)}});
    r.body = Json{{"kind", kind}, {"C", json::set(C)}, {"depth", f.depth}, {"W", json::ints(w.W)},
                  {"z", json::ints(w.z)}, {"witnesses", wit}, {"support", json::window(w.support)},
                  {"coverage", json::window(w.coverage)}, {"z_increase_all", w.z_increase_all},
                  {"trace", json::trace(w.trace)}};
    r.text.push_back("W = " + list(w.W, 24));
    r.text.push_back("z = " + list(w.z));
    r.text.push_back("C + W covers " + win(w.coverage) + "; counts exact on " + win(w.support));
    return r;
  }
  if (kind == "rest") {
    need(2, "rest <F finite> <W>");
    auto F = finite_elements(args[0]);
    auto W = parse_set_expression(args[1]);
    auto rc = finite_rest_cover(F, W);
    r.body = Json{{"kind", kind}, {"F", json::ints(F)}, {"W", json::set(W)}, {"W_prime", json::set(rc.W)},
                  {"witnesses", json::ints(rc.witnesses)}, {"checked", json::window(rc.checked)}};
    r.text.push_back("W' = " + print(rc.W));
    r.text.push_back("witnesses " + list(rc.witnesses) + " checked on " + win(rc.checked));
    return r;
  }
  if (kind == "ray") {
    need(3, "ray <F finite> <m> <top>");
    auto F = finite_elements(args[0]);
    RayTarget T{parse_residues(args[1]).at(0), Int(args[2]), {}};
    auto rc = minimal_ray_cover(F, T);
    if (!rc) {
      r.verdict = "NoTiling";
      r.body = Json{{"kind", kind}, {"F", json::ints(F)}, {"m", T.m}, {"top", json::num(T.top)}, {"W", nullptr},
                    {"witnesses", Json::array()}};
      r.text.push_back("F + W = T has no solution W");
      return r;
    }
    r.body = Json{{"kind", kind}, {"F", json::ints(F)}, {"m", T.m}, {"top", json::num(T.top)},
                  {"W", json::set(rc->W)}, {"witnesses", json::ints(rc->witnesses)}};
    r.text.push_back("W = " + print(rc->W));
    r.text.push_back("witnesses " + list(rc->witnesses));
    return r;
  }
  if (kind == "remark") {
    need(1, "remark <F finite, F in 3N+1> [--window lo:hi]");
    auto F = finite_elements(args[0]);
    auto fam = build_remark_family(F, parse_window(f.window, Window(-30, 30)));
    r.verdict = to_string(fam.report.verdict);
    r.code = fam.report.verdict == MacVerdict::CertifiedOnWindow ? 0 : 2;
    r.body = Json{{"kind", kind}, {"C", json::set(fam.C)}, {"Y", json::set(fam.Y)}, {"W_prime", json::set(fam.W_prime)},
                  {"f_witnesses", json::ints(fam.f_witnesses)}, {"report", json::mac_report(fam.report)}};
    r.text.push_back("C = " + print(fam.C) + ", Y = " + print(fam.Y));
    add_mac_text(r, fam.report, "");
    return r;
  }
  if (kind == "suff") {
    need(1, "suff <S ep> [--window lo:hi]");
    auto S = parse_set_expression(args[0]);
    if (!S.is_ep()) throw Error("cover-construct suff: expected an eventually periodic set");
    auto nec = check_necessary(S.ep());
    auto s = build_thm_suff(S.ep(), nec, parse_window(f.window, Window(-30, 30)));
    r.verdict = to_string(s.report.verdict);
    r.code = s.report.verdict == MacVerdict::CertifiedOnWindow ? 0 : 2;
    Json cls = Json::array();
    for (auto& c : s.classes)
      cls.push_back(Json{{"a0", json::num(c.a0)}, {"y", c.y}, {"W_a", json::set(c.W_a)},
                         {"f_witnesses", json::ints(c.f_witnesses)}});
    r.body = Json{{"kind", kind}, {"C", json::set(s.C)}, {"W", json::set(s.W)}, {"necessary", json::necessary(nec)},
                  {"classes", cls}, {"report", json::mac_report(s.report)}};
    r.text.push_back("C = " + print(s.C) + ", W = " + print(s.W));
    add_mac_text(r, s.report, "");
    return r;
  }
  throw Error("cover-construct: unknown kind '" + kind + "' (d, w, rest, ray, remark, suff)");
}

void emit(const Flags& f, const std::string& command, Report& r) {
  if (f.json) {
    Json out{{"command", command}, {"verdict", r.verdict}, {"exit_code", r.code}};
    for (auto& [k, v] : r.body.items()) out[k] = v;
    std::cout << out.dump(2) << "\n";
    return;
  }
  std::cout << command << ": " << r.verdict << "\n";
  for (auto& line : r.text) std::cout << line << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minkowski sums and minimal additive complements of integer sets"};
  app.require_subcommand(1);
  app.fallthrough();

  Flags f;
  app.add_option("--window", f.window, "window lo:hi");
  app.add_option("--depth", f.depth, "construction depth")->check(CLI::NonNegativeNumber);
  app.add_option("--max-modulus", f.max_modulus, "cap on the cyclic modulus (overrides MINCOMP_MAX_MODULUS)")
      ->check(CLI::Range(1, 64));
  app.add_flag("--json", f.json, "JSON report on stdout");
  app.add_option("--budget", f.budget, "enumerator steps per construction step");
  app.add_option("--trace", f.trace, "write the construction trace as JSON lines to this file");

  std::string a, b, inspect, kind;
  std::int64_t n = 0, wmax = 3, radius = 40, bound = 0;
  bool two_sided = false, no_certify = false;
  std::vector<std::string> rest;
  std::string command;

  auto sub = [&](const char* name, const char* help) {
    auto* s = app.add_subcommand(name, help);
    s->callback([&command, s] { command = s->get_name(); });
    return s;
  };

  auto* sumset = sub("sumset", "C + W on a window");
  sumset->add_option("C", a)->required();
  sumset->add_option("W", b)->required();

  auto* gapc = sub("gap", "largest gap of S on a window");
  gapc->add_option("S", a)->required();

  auto* verify = sub("verify-mac", "is C a minimal complement of W, restricted to a window");
  verify->add_option("C", a)->required();
  verify->add_option("W", b)->required();
  verify->add_option("--inspect", inspect, "window of C elements to inspect (default: --window)");

  auto* comin = sub("build-cominimal", "co-minimal pair for a lacunary set");
  comin->add_option("C", a)->required();

  auto* refute = sub("refute", "bounded search for finite W making C minimal");
  refute->add_option("C", a)->required();
  refute->add_option("--w-size-max", wmax)->check(CLI::Range(1, 8));
  refute->add_option("--radius", radius)->check(CLI::Range(1, 100000));

  auto* solve = sub("solve-cyclic", "does C in Z/m arise as a minimal complement");
  solve->add_option("m", n)->required();
  solve->add_option("residues", a)->required();

  auto* enumc = sub("enum-min-complements", "all minimal complements of W in Z/m");
  enumc->add_option("m", n)->required();
  enumc->add_option("residues", a)->required();

  auto* cay = sub("cayley-dom", "domination numbers of the unitary Cayley graph on Z/n");
  cay->add_option("n", n)->required();

  auto* cls = sub("classify-ep", "classify an eventually periodic set");
  cls->add_option("S", a)->required();
  cls->add_flag("--no-certify", no_certify, "skip the certifying constructions");

  auto* dens = sub("density", "Banach densities, or the sumset-minimal size bound on Z/n");
  dens->add_option("S", a);
  dens->add_flag("--two-sided", two_sided, "treat an ep set as its periodic extension");
  dens->add_option("--sumset-bound", bound, "sweep Z/n for the bound |C| <= k/(2k-1) n")->check(CLI::Range(1, 14));

  auto* cover = sub("cover-construct", "constructions: d, w, rest, ray, remark, suff");
  cover->add_option("kind", kind)->required();
  cover->add_option("args", rest);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  try {
    Report r;
    if (command == "sumset") r = cmd_sumset(f, a, b);
    else if (command == "gap") r = cmd_gap(f, a);
    else if (command == "verify-mac") r = cmd_verify(f, a, b, inspect);
    else if (command == "build-cominimal") r = cmd_cominimal(f, a);
    else if (command == "refute") r = cmd_refute(f, a, wmax, radius);
    else if (command == "solve-cyclic") r = cmd_solve(f, n, a);
    else if (command == "enum-min-complements") r = cmd_enum(f, n, a);
    else if (command == "cayley-dom") r = cmd_cayley(f, n);
    else if (command == "classify-ep") r = cmd_classify(f, a, !no_certify);
    else if (command == "density") r = cmd_density(f, a, two_sided, bound);
    else if (command == "cover-construct") r = cmd_cover(f, kind, rest);
    else throw Error("no command");
    emit(f, command, r);
    return r.code;
  } catch (const std::exception& e) {
    if (f.json) std::cout << Json{{"command", command}, {"error", e.what()}, {"exit_code", 1}}.dump(2) << "\n";
    std::cerr << "mincomp " << command << ": " << e.what() << "\n";
    return 1;
  }
}
