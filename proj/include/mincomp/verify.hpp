#pragma once
// Dependence certificates, window MAC verification, pruning, bounded refutation.

#include "cyclic_set.hpp"
#include "sumset.hpp"

#include <map>

namespace mincomp {

// z = c + (z - c) is the only representation of z in C + W
struct DependenceWitness {
  Int c, z;
  Int w() const { return z - c; }
};

enum class MacVerdict { CertifiedOnWindow, CoverageFails, MinimalityFails };

inline const char* to_string(MacVerdict v) {
  switch (v) {
    case MacVerdict::CertifiedOnWindow: return "CertifiedOnWindow";
    case MacVerdict::CoverageFails: return "CoverageFails";
    case MacVerdict::MinimalityFails: return "MinimalityFails";
  }
  return "?";
}

inline constexpr const char* kWindowCaveat =
    "window certificate only: C+W covers the coverage window and every inspected element has a uniquely "
    "represented dependent inside the searched zone; this is not a proof of the minimal-complement property "
    "for infinite sets";

struct MacReport {
  Window coverage_window, inspect_window;
  bool covered = false;
  std::vector<DependenceWitness> witnesses;
  MacVerdict verdict = MacVerdict::CoverageFails;
  std::optional<Int> failing;  // uncovered z, or c with no dependent
  Window zone;                 // last zone searched for dependents
  std::size_t inspected = 0;
  std::string caveat = kWindowCaveat;
};

struct MacOptions {
  std::optional<Window> witness_zone;  // fixed zone, no widening
  Int initial_slack = 16;
  Int max_slack = 1 << 14;
};

namespace detail {

inline RepTable exact_table(const IntegerSet& C, const IntegerSet& W, const Window& w, const char* who) {
  RepTable t = rep_table(C, W, w);
  if (!t.exact)
    throw Error(std::string(who) + ": representation counts not certifiable on " + str(w.lo) + ".." + str(w.hi) +
                " (" + t.support + ")");
  return t;
}

inline std::vector<Int> dependents_in(const Int& c, const IntegerSet& W, const RepTable& t) {
  std::vector<Int> out;
  for (auto& w : W.enumerate(t.window.lo - c, t.window.hi - c))
    if (t.at(c + w) == 1) out.push_back(c + w);
  return out;
}

}  // namespace detail

inline std::vector<Int> dependents(const Int& c, const IntegerSet& C, const IntegerSet& W, const Window& zone) {
  if (!C.member(c)) throw Error("dependents: " + str(c) + " is not in C");
  return detail::dependents_in(c, W, detail::exact_table(C, W, zone, "dependents"));
}

inline MacReport verify_mac(const IntegerSet& C, const IntegerSet& W, const Window& coverage, const Window& inspect,
                            const MacOptions& opt = {}) {
  MacReport r;
  r.coverage_window = coverage;
  r.inspect_window = inspect;
  RepTable cov = rep_table(C, W, coverage);
  if (auto z = first_uncovered(cov)) {
    if (!cov.exact) throw Error("verify_mac: coverage not certifiable (" + cov.support + ")");
    r.verdict = MacVerdict::CoverageFails;
    r.failing = *z;
    return r;
  }
  r.covered = true;

  auto todo = C.enumerate(inspect.lo, inspect.hi);
  r.inspected = todo.size();
  std::map<Int, Int> found;  // c -> smallest dependent
  auto search = [&](const Window& zone) {
    r.zone = zone;
    RepTable t = detail::exact_table(C, W, zone, "verify_mac");
    std::vector<Int> rest;
    for (auto& c : todo) {
      auto d = detail::dependents_in(c, W, t);
      if (d.empty())
        rest.push_back(c);
      else
        found.emplace(c, d.front());
    }
    todo.swap(rest);
  };
  if (opt.witness_zone) {
    search(*opt.witness_zone);
  } else if (!W.is_lazy() && !W.empty() && W.bounded_below() && W.bounded_above()) {
    // dependents of c lie in c + W
    if (todo.empty()) {
    } else if (W.max() - W.min() <= Int(1 << 16)) {
      search(Window(todo.front() + W.min(), todo.back() + W.max()));
    } else {
      // W is spread out: test the points c + w one at a time
      r.zone = Window(todo.front() + W.min(), todo.back() + W.max());
      std::vector<Int> rest;
      for (auto& c : todo) {
        std::optional<Int> dep;
        for (auto& w : W.elements()) {
          auto t = detail::exact_table(C, W, Window(c + w, c + w), "verify_mac");
          if (t.counts[0] == 1) {
            dep = c + w;
            break;
          }
        }
        if (dep)
          found.emplace(c, *dep);
        else
          rest.push_back(c);
      }
      todo.swap(rest);
    }
  } else {
    Int lo = std::min(coverage.lo, inspect.lo), hi = std::max(coverage.hi, inspect.hi);
    for (Int s = opt.initial_slack; !todo.empty() && s <= opt.max_slack; s *= 2) search(Window(lo - s, hi + s));
  }
  for (auto& [c, z] : found) r.witnesses.push_back({c, z});
  if (!todo.empty()) {
    r.verdict = MacVerdict::MinimalityFails;
    r.failing = todo.front();
  } else {
    r.verdict = MacVerdict::CertifiedOnWindow;
  }
  return r;
}

// Re-check every witness by direct pair enumeration over W ∩ (z - C-range).
inline bool revalidate(const MacReport& r, const IntegerSet& C, const IntegerSet& W) {
  for (auto& wit : r.witnesses) {
    if (!C.member(wit.c) || !W.member(wit.w())) return false;
    auto t = rep_table(C, W, Window(wit.z, wit.z));
    if (!t.exact || t.counts[0] != 1) return false;
  }
  for (auto z = r.coverage_window.lo; r.covered && z <= r.coverage_window.hi; ++z)
    if (rep_table(C, W, Window(z, z)).counts[0] == 0) return false;
  return true;
}

// ---- pruning ----

inline CyclicSet prune_to_minimal(const CyclicSet& A, const CyclicSet& B) {
  if (!minkowski_cyclic(A, B).is_full()) throw Error("prune_to_minimal: A+B is not the whole group");
  CyclicSet out = A;
  for (auto r : A.residues()) {
    CyclicSet t = out;
    t.bits &= ~(std::uint64_t{1} << r);
    if (t.bits && minkowski_cyclic(t, B).is_full()) out = t;
  }
  return out;
}

// Finite A against any B over a target window: greedy ascending removal while A'+B ⊇ target.
inline std::vector<Int> prune_to_minimal(const std::vector<Int>& A, const IntegerSet& B, const Window& target) {
  auto n = to_size(target.length());
  std::vector<std::uint32_t> cnt(n, 0);
  std::vector<std::vector<std::size_t>> hits(A.size());
  for (std::size_t i = 0; i < A.size(); ++i)
    for (auto& b : B.enumerate(target.lo - A[i], target.hi - A[i])) {
      auto k = to_size(A[i] + b - target.lo);
      hits[i].push_back(k);
      ++cnt[k];
    }
  for (std::size_t k = 0; k < n; ++k)
    if (!cnt[k]) throw Error("prune_to_minimal: " + str(target.lo + k) + " not covered");
  std::vector<char> keep(A.size(), 1);
  for (std::size_t i = 0; i < A.size(); ++i) {
    bool needed = false;
    for (auto k : hits[i]) needed |= cnt[k] == 1;
    if (needed) continue;
    keep[i] = 0;
    for (auto k : hits[i]) --cnt[k];
  }
  std::vector<Int> out;
  for (std::size_t i = 0; i < A.size(); ++i)
    if (keep[i]) out.push_back(A[i]);
  return out;
}

// ---- bounded refutation ----

struct RefutationSample {
  std::vector<Int> W;
  Int c;
  std::string reason;  // "no-dependent" or "gap-obstruction"
  std::optional<Int> z;
};

struct RefutationEvidence {
  std::int64_t radius = 0, w_size_max = 0;
  Window coverage_window, inspect_window;
  bool inspect_complete = false;  // every element of C is decided by the inspected range
  std::uint64_t candidates = 0, covering = 0, refuted = 0, gap_citations = 0;
  std::vector<std::vector<Int>> survivors;
  std::vector<RefutationSample> samples;
};

struct RefuteOptions {
  std::int64_t w_size_min = 1;
  std::uint64_t candidate_limit = 20'000'000;
  std::size_t sample_cap = 20;
};

namespace detail {

inline Window refute_inspect(const IntegerSet& C, std::int64_t radius, bool& complete) {
  Int r2 = 2 * Int(radius);
  if (C.is_lazy()) {
    complete = false;
    return Window(C.min(), std::max(C.min(), Int(4 * radius)));
  }
  const auto& t = C.shape();
  complete = true;
  Int lo = C.bounded_below() ? (C.empty() ? Int(0) : C.min()) : t.lo_cut - r2 - t.m;
  Int hi = C.bounded_above() ? (C.empty() ? Int(0) : C.max()) : t.hi_cut + r2 + t.m;
  if (lo > hi) hi = lo;
  // a little extra room so small-radius sweeps still see the pattern near the origin
  return Window(std::min(lo, Int(-radius)), std::max(hi, Int(radius)));
}

}  // namespace detail

inline RefutationEvidence refute_mac_bounded(const IntegerSet& C, std::int64_t w_size_max, std::int64_t radius,
                                             const RefuteOptions& opt = {}) {
  if (radius < 1 || w_size_max < 1) throw Error("refute: radius and w_size_max must be positive");
  if (!C.bounded_below() && C.is_lazy()) throw Unsupported("refute: C must be bounded below or eventually periodic");
  RefutationEvidence ev;
  ev.radius = radius;
  ev.w_size_max = w_size_max;
  ev.coverage_window = Window(-radius / 2, radius / 2);
  ev.inspect_window = detail::refute_inspect(C, radius, ev.inspect_complete);

  // candidate count check before doing anything
  {
    long double total = 0, binom = 1;
    std::int64_t n = 2 * radius + 1;
    for (std::int64_t k = 1; k <= w_size_max && k <= n; ++k) {
      binom = binom * (n - k + 1) / k;
      if (k >= opt.w_size_min) total += binom;
    }
    if (total > static_cast<long double>(opt.candidate_limit))
      throw LimitExceeded("refute: " + std::to_string(static_cast<unsigned long long>(total)) +
                          " candidates exceed the limit " + std::to_string(opt.candidate_limit));
  }

  // membership of C on [inspect.lo - 2r, inspect.hi + 2r]
  Int base = ev.inspect_window.lo - 2 * radius;
  Int top = ev.inspect_window.hi + 2 * radius;
  auto len = to_size(top - base + 1);
  if (len > kMaxTableWindow) throw LimitExceeded("refute: inspection range too long");
  std::vector<char> in(len, 0);
  for (auto& x : C.enumerate(base, top)) in[to_size(x - base)] = 1;
  auto memb = [&](std::int64_t v) {  // v relative to base
    return v >= 0 && static_cast<std::size_t>(v) < len && in[v];
  };
  const std::int64_t zb = to_i64(ev.coverage_window.lo - base), ze = to_i64(ev.coverage_window.hi - base);
  std::vector<std::int64_t> elems;
  for (auto& x : C.enumerate(ev.inspect_window.lo, ev.inspect_window.hi)) elems.push_back(to_i64(x - base));

  std::vector<std::int64_t> W;
  auto covers = [&]() {
    for (std::int64_t z = zb; z <= ze; ++z) {
      bool hit = false;
      for (auto w : W) hit |= memb(z - w);
      if (!hit) return false;
    }
    return true;
  };
  auto has_dependent = [&](std::int64_t c) {
    for (auto w : W) {
      bool unique = true;
      for (auto w2 : W)
        if (w2 != w && memb(c + w - w2)) unique = false;
      if (unique) return true;
    }
    return false;
  };
  auto record = [&](std::int64_t c) {
    ++ev.refuted;
    std::vector<Int> ws;
    for (auto w : W) ws.push_back(w);
    RefutationSample s{ws, base + c, "no-dependent", std::nullopt};
    // finite-complement obstruction: a run (c0, c1) of C longer than g(W) + 2 + span(W)
    if (W.size() >= 2) {
      std::int64_t g = 0;
      for (std::size_t i = 1; i < W.size(); ++i) g = std::max(g, W[i] - W[i - 1]);
      std::int64_t thr = g + 2 + (W.back() - W.front()), prev = -1;
      for (std::int64_t v = 0; v < static_cast<std::int64_t>(len); ++v) {
        if (in[v]) continue;
        if (prev >= 0 && v - prev > thr && !has_dependent(prev + g + 1)) {
          ++ev.gap_citations;
          s.reason = "gap-obstruction";
          s.c = base + prev + g + 1;
          s.z = s.c;
          break;
        }
        prev = v;
      }
    }
    if (ev.samples.size() < opt.sample_cap) ev.samples.push_back(std::move(s));
  };
  // lexicographic enumeration of subsets of [-radius, radius]
  std::function<void(std::int64_t)> rec = [&](std::int64_t from) {
    if (static_cast<std::int64_t>(W.size()) >= opt.w_size_min) {
      ++ev.candidates;
      if (covers()) {
        ++ev.covering;
        std::optional<std::int64_t> bad;
        for (auto c : elems)
          if (!has_dependent(c)) {
            bad = c;
            break;
          }
        if (bad)
          record(*bad);
        else {
          std::vector<Int> ws(W.begin(), W.end());
          ev.survivors.push_back(std::move(ws));
        }
      }
    }
    if (static_cast<std::int64_t>(W.size()) == w_size_max) return;
    for (std::int64_t w = from; w <= radius; ++w) {
      W.push_back(w);
      rec(w + 1);
      W.pop_back();
    }
  };
  rec(-radius);
  return ev;
}

}  // namespace mincomp
