#pragma once
// Constructions: the filling-negatives set D, the complement W built on top of it, co-minimal pairs.

#include "verify.hpp"
#include "ypartition.hpp"

#include <queue>

namespace mincomp {

inline constexpr std::uint64_t kDefaultBudget = 1'000'000;

// h(j) = h_from + (j - from) for j in [from, to]
struct HRun {
  std::int64_t from = 0, to = 0;
  Int h_from;
};

struct TraceStep {
  std::string phase;  // "d": filling negatives, "w": complement steps
  std::int64_t i = 0;
  std::optional<Int> y, t, x, z, k;
  std::vector<HRun> h_values;
  std::vector<std::pair<Int, Int>> added_sets;  // closed intervals appended to D or W
  std::optional<bool> z_increase_ok;           // z_i > c_i + z_{i-1}
  std::uint64_t exploration = 0;
};

struct ConstructionTrace {
  Int shift = 0;  // C was translated by +shift internally so that c_1 >= 1
  std::vector<TraceStep> steps;
};

struct DResult {
  std::vector<Int> D;  // sorted, in the caller's coordinates
  ConstructionTrace trace;
  Int covered_lo;      // C + D ⊇ [covered_lo, 0]
  Int next_uncovered;  // max of Z_{<=0} \ (C + D)
  Int future_lo;       // later steps add nothing to C + D in (next_uncovered, future_lo)
};

namespace detail {

inline Int shift_for(const IntegerSet& C) {
  if (!C.is_lazy()) throw Unsupported("construction needs a lazy (generator-backed) set C");
  Int c1 = C.at(0);
  return c1 >= 1 ? Int(0) : Int(1 - c1);
}

class Budget {
 public:
  explicit Budget(std::uint64_t cap) : cap_(cap) {}
  void spend(const char* what, std::int64_t step) {
    if (++used_ > cap_)
      throw LimitExceeded(std::string("exploration budget exhausted (") + what + ", step " + std::to_string(step) +
                          ", budget " + std::to_string(cap_) + ")");
  }
  std::uint64_t used() const { return used_; }
  void reset() { used_ = 0; }

 private:
  std::uint64_t cap_, used_ = 0;
};

// Sorted stream of (C + D) ∩ [0, inf) with the running maximum gap.
class GapStream {
 public:
  GapStream(const LazyState& c, const std::vector<Int>& D) : c_(c) {
    for (auto& d : D) {
      Int v = c_.ceil(-d) + d;
      heap_.push({v, d});
    }
  }
  // is g([0, x) ∩ (C + D)) >= j ?
  bool at_least(const Int& x, const Int& j, Budget& b, std::int64_t step) {
    while ((!have_gap_ || gap_ < j) && !heap_.empty() && heap_.top().v < x) {
      b.spend("gap stream", step);
      Item it = heap_.top();
      heap_.pop();
      if (!prev_ || it.v != *prev_) {
        if (prev_) {
          Int g = it.v - *prev_;
          if (!have_gap_ || g > gap_) gap_ = g, have_gap_ = true;
        }
        prev_ = it.v;
      }
      heap_.push({c_.succ(it.v - it.d) + it.d, it.d});
    }
    return have_gap_ && gap_ >= j;
  }

 private:
  struct Item {
    Int v, d;
    bool operator<(const Item& o) const { return v > o.v; }  // min-heap
  };
  const LazyState& c_;
  std::priority_queue<Item> heap_;
  std::optional<Int> prev_;
  Int gap_;
  bool have_gap_ = false;
};

// Walks the function h of the filling-negatives construction for a fixed D.
class HChain {
 public:
  HChain(const LazyState& c, const std::vector<Int>& D, Budget& b, std::int64_t step)
      : c_(c), stream_(c, D), b_(b), step_(step) {}

  // advance to h(j) for j = last + 1; returns c_{h(j)}
  const Int& next() {
    ++j_;
    Int J = j_;
    // smallest n > h(j-1): start at the element after c_{h(j-1)} (c_1 when j = 1)
    if (j_ == 1) {
      n_ = 1;
      cn_ = c_.at(0);
    } else {
      step_forward();
    }
    while (true) {
      Int nxt = c_.succ(cn_);
      if (nxt - cn_ < J) {  // (a) fails; jump if the generator knows where wide gaps are
        b_.spend("h search", step_);
        if (auto g = c_.generator().wide_gap_from(cn_, J)) {
          if (*g != cn_) {
            cn_ = *g;
            n_ = c_.rank(cn_) + 1;
          } else {
            step_forward();
          }
          continue;
        }
        step_forward();
        continue;
      }
      if (!stream_.at_least(nxt, J, b_, step_)) {  // (b)
        b_.spend("h search", step_);
        step_forward();
        continue;
      }
      break;
    }
    // run-length record
    if (!runs_.empty() && runs_.back().to == j_ - 1 && runs_.back().h_from + (j_ - runs_.back().from) == n_)
      runs_.back().to = j_;
    else
      runs_.push_back({j_, j_, n_});
    return cn_;
  }
  std::int64_t arg() const { return j_; }
  const Int& h() const { return n_; }
  const Int& value() const { return cn_; }
  std::vector<HRun> take_runs() { return std::move(runs_); }

 private:
  void step_forward() {
    cn_ = c_.succ(cn_);
    ++n_;
  }
  const LazyState& c_;
  GapStream stream_;
  Budget& b_;
  std::int64_t step_;
  std::int64_t j_ = 0;
  Int n_ = 0, cn_;
  std::vector<HRun> runs_;
};

// max of Z_{<=0} \ (C + D), scanning down from `from`; runs of C are skipped when the generator knows them
inline Int max_uncovered(const LazyState& c, const std::vector<Int>& D, Int from, Budget& b, std::int64_t step) {
  for (;;) {
    const Int* hit = nullptr;
    for (auto& d : D)
      if (c.contains(from - d)) {
        hit = &d;
        break;
      }
    if (!hit) return from;
    b.spend("uncovered scan", step);
    if (auto u = c.generator().run_start(from - *hit))
      from = *u + *hit - 1;
    else
      --from;
  }
}

// Filling negatives on a set with c_1 >= 1. Runs steps while keep_going(i, y_i) holds.
template <class Keep>
DResult run_d(const IntegerSet& C, std::uint64_t budget, Keep&& keep_going) {
  auto st = C.lazy_state();
  const LazyState& c = *st;
  DResult r;
  std::vector<Int> D{-c.at(0)};
  {
    TraceStep s;
    s.phase = "d";
    s.i = 0;
    s.x = D[0];
    s.added_sets.push_back({D[0], D[0]});
    r.trace.steps.push_back(std::move(s));
  }
  Budget b(budget);
  Int y = max_uncovered(c, D, 0, b, 0);
  for (std::int64_t i = 1; keep_going(i, y); ++i) {
    b.reset();
    if (y > -i) throw Error("construction invariant y_i <= -i violated at step " + std::to_string(i));
    HChain h(c, D, b, i);
    while (h.arg() < i) h.next();
    Int t = c.succ(h.value()) - y;  // c_{h(i)+1} - y_i
    if (t > Int(std::numeric_limits<std::int64_t>::max() / 2))
      throw LimitExceeded("t_" + std::to_string(i) + " too large to walk h");
    std::int64_t ti = to_i64(t);
    while (h.arg() < ti) h.next();
    Int x = y - h.value();
    TraceStep s;
    s.phase = "d";
    s.i = i;
    s.y = y;
    s.t = t;
    s.x = x;
    s.h_values = h.take_runs();
    s.added_sets.push_back({x, x});
    D.insert(std::upper_bound(D.begin(), D.end(), x), x);
    y = max_uncovered(c, D, y, b, i);
    s.exploration = b.used();
    r.trace.steps.push_back(std::move(s));
  }
  // the next element x_{d+1} (and every later one) reaches [0, inf) only from c_{h(d+1)+1} on
  const auto next = static_cast<std::int64_t>(r.trace.steps.size());
  try {
    b.reset();
    HChain h(c, D, b, next);
    while (h.arg() < next) h.next();
    r.future_lo = c.succ(h.value());
  } catch (const LimitExceeded&) {
    r.future_lo = c.at(static_cast<std::size_t>(next));  // c_{d+2}, since h(j) >= j
  }
  r.D = std::move(D);
  r.next_uncovered = y;
  r.covered_lo = y + 1;
  return r;
}

inline void unshift(DResult& r, const Int& s) {
  r.trace.shift = s;
  if (s == 0) return;
  for (auto& d : r.D) d += s;
}

}  // namespace detail

inline DResult build_d(const IntegerSet& C, std::int64_t depth, std::uint64_t budget = kDefaultBudget) {
  if (depth < 0) throw Error("build_d: depth must be nonnegative");
  if (!C.gap_promise()) throw Error("build_d: C carries no gap promise");
  Int s = detail::shift_for(C);
  auto Cs = translate(C, s);
  auto r = detail::run_d(Cs, budget, [&](std::int64_t i, const Int&) { return i <= depth; });
  // postcondition: C + D ⊇ [-depth, 0] with finitely many representations each
  auto t = rep_table(Cs, IntegerSet::finite(r.D), Window(-depth, 0));
  for (auto k : t.counts)
    if (k == 0 || k == kInfinite || !t.exact) throw Error("build_d: coverage postcondition failed");
  detail::unshift(r, s);
  return r;
}

// ---- the complement W ----

struct WResult {
  IntegerSet C;              // as given
  std::vector<Int> D;        // W_0
  std::vector<Int> W;        // W_depth, sorted
  std::vector<DependenceWitness> witnesses;  // (c_i, z_i)
  std::vector<Int> z;                        // z_1..z_depth
  ConstructionTrace trace;
  Window support;    // representation counts of C + W are exact here for the infinite construction
  Window coverage;   // C + W ⊇ coverage
  bool z_increase_all = true;
  bool stalled = false;  // the next z lies past what D certifies
};

namespace detail {

struct WState {
  std::vector<Int> W;
  void add(const Int& v) { W.push_back(v); }
  void add_range(const Int& a, const Int& b) {
    if (b - a > Int(10'000'000)) throw LimitExceeded("W step interval too long");
    for (Int v = a; v <= b; ++v) W.push_back(v);
  }
  IntegerSet set() const { return IntegerSet::finite(W); }
};

// Runs the complement steps on a shifted C (c_1 >= 1) with the given D. Stops when done(i, z_i) is true
// after step i, or marks the result stalled when the next z is past what D certifies.

template <class Done>
WResult run_w(const IntegerSet& Cs, const DResult& d, std::uint64_t budget, Done&& done) {
  auto st = Cs.lazy_state();
  const LazyState& c = *st;
  const Int exact_hi = d.future_lo - 1;
  WResult r;
  r.D = d.D;
  r.trace = d.trace;
  WState ws;
  ws.W = d.D;
  std::vector<Int> cs{c.at(0)};  // c_1, c_2, ...
  auto cidx = [&](std::int64_t i) -> Int {  // c_i, 1-based (by value: cs may grow)
    while (static_cast<std::int64_t>(cs.size()) < i + 1) cs.push_back(c.succ(cs.back()));
    return cs[i - 1];
  };
  Int prev_z;
  Int kmax = 0;
  Budget b(budget);
  for (std::int64_t i = 1;; ++i) {
    // z_i: least uncovered natural number
    auto W = ws.set();
    Int lo = i == 1 ? Int(0) : prev_z, len = 256;
    std::optional<Int> z;
    while (!z) {
      b.spend("z search", i);
      if (lo + len - 1 > exact_hi) {
        auto t = rep_table(Cs, W, Window(lo, exact_hi));
        z = first_uncovered(t);
        break;
      }
      auto t = rep_table(Cs, W, Window(lo, lo + len - 1));
      z = first_uncovered(t);
      if (!z) {
        lo += len;
        len *= 2;
        if (len > Int(kMaxTableWindow)) throw LimitExceeded("z search window too long");
      }
    }
    if (!z) {
      r.stalled = true;
      break;
    }
    // k_i = g(C ∩ [c_1, c_{i+1}])
    Int gap = cidx(i + 1) - cidx(i);
    kmax = std::max(kmax, gap);
    Int k = kmax;
    const Int ci = cidx(i);
    TraceStep s;
    s.phase = "w";
    s.i = i;
    s.z = *z;
    s.k = k;
    if (i > 1) {
      s.z_increase_ok = *z > ci + prev_z;
      r.z_increase_all = r.z_increase_all && *s.z_increase_ok;
    }
    Int single = *z - ci, a = 1 + *z - cidx(1), e = k + *z - cidx(1);
    ws.add(single);
    ws.add_range(a, e);
    s.added_sets.push_back({single, single});
    s.added_sets.push_back({a, e});
    s.exploration = b.used();
    r.trace.steps.push_back(std::move(s));
    r.witnesses.push_back({ci, *z});
    r.z.push_back(*z);
    prev_z = *z;
    if (done(i, *z)) break;
  }
  std::sort(ws.W.begin(), ws.W.end());
  ws.W.erase(std::unique(ws.W.begin(), ws.W.end()), ws.W.end());
  r.W = std::move(ws.W);
  if (r.z.empty()) {
    r.support = r.coverage = Window(d.next_uncovered + 1, Int(-1));
    return r;
  }
  r.support = Window(d.next_uncovered + 1, std::min(exact_hi, prev_z));
  // proof display: C + W_i ⊇ (-inf, c_{i+1} - c_1 + k_i + z_i), cut to what D certifies
  r.coverage = Window(d.covered_lo, std::min(exact_hi, Int(cidx(r.z.size() + 1) - cidx(1) + kmax + prev_z - 1)));
  return r;
}

inline void unshift(WResult& r, const Int& s) {
  r.trace.shift = s;
  if (s == 0) return;
  for (auto& v : r.D) v += s;
  for (auto& v : r.W) v += s;
  for (auto& w : r.witnesses) w.c -= s;
}

}  // namespace detail

// depth steps of the complement construction on top of D of depth at least d_depth (default: depth).
// D is deepened until every z_i is certified by it; a deeper D covers more of the negative side.
inline WResult build_w(const IntegerSet& C, std::int64_t depth, std::uint64_t budget = kDefaultBudget,
                       std::int64_t d_depth = -1) {
  if (depth < 1) throw Error("build_w: depth must be at least 1");
  if (!C.gap_promise()) throw Error("build_w: C carries no gap promise");
  Int s = detail::shift_for(C);
  auto Cs = translate(C, s);
  for (std::int64_t dd = std::max(depth, d_depth);; dd += 2) {
    auto d = detail::run_d(Cs, budget, [&](std::int64_t i, const Int&) { return i <= dd; });
    auto r = detail::run_w(Cs, d, budget, [&](std::int64_t i, const Int&) { return i >= depth; });
    if (!r.stalled) {
      r.C = C;
      detail::unshift(r, s);
      return r;
    }
    if (dd > std::max(depth, d_depth) + 64) throw LimitExceeded("build_w: D depth needed exceeds depth + 64");
  }
}

// ---- co-minimal pairs ----

struct CoMinimalPair {
  IntegerSet C, W;           // W: the pruned finite prefix
  std::vector<Int> W_full;   // unpruned prefix
  ConstructionTrace trace;
  Window certified_window, support;
  MacReport c_report, w_report;
  bool certified = false;
};

inline CoMinimalPair build_cominimal(const IntegerSet& C, const Window& window, std::uint64_t budget = kDefaultBudget) {
  if (!C.gap_promise()) throw Error("build_cominimal: C carries no gap promise");
  Int s = detail::shift_for(C);
  auto Cs = translate(C, s);
  // C + W is the same set in both coordinates, so the window does not move
  const Int lo = window.lo, hi = window.hi;
  auto need_c = C.count_in(C.at(0), window.hi);       // elements of C up to the window top
  std::int64_t extra = 0;
  std::optional<WResult> partial;  // stalled but already past the window
  for (;;) {
    WResult w;
    try {
      auto d = detail::run_d(Cs, budget, [&](std::int64_t i, const Int& y) {
        return y >= std::min(lo, Int(0)) || i <= extra;
      });
      w = detail::run_w(Cs, d, budget, [&](std::int64_t i, const Int& z) { return z > hi && Int(i) >= need_c; });
      if (w.stalled || w.support.hi < hi) {
        if (w.support.hi >= hi) partial = w;
        if (extra > 64) throw LimitExceeded("build_cominimal: D depth needed exceeds 64 extra steps");
        extra = static_cast<std::int64_t>(d.trace.steps.size());
        continue;
      }
    } catch (const LimitExceeded&) {
      // D cannot be deepened; let verification judge the prefix already built
      if (!partial) throw;
      w = std::move(*partial);
    }
    const Int Z = w.support.hi;
    Window zone(std::min(lo, Int(0)), Z);  // inside the exact support
    auto Wp = prune_to_minimal(w.W, Cs, zone);
    CoMinimalPair out;
    out.trace = w.trace;
    out.trace.shift = s;
    std::vector<Int> Wfull = w.W, Wpr = Wp;
    for (auto& v : Wfull) v += s;
    for (auto& v : Wpr) v += s;
    out.C = C;
    out.W = IntegerSet::finite(Wpr);
    out.W_full = Wfull;
    out.certified_window = window;
    out.support = w.support;
    MacOptions opt;
    opt.witness_zone = zone;
    out.c_report = verify_mac(C, out.W, window, window, opt);
    out.w_report = verify_mac(out.W, C, window, Window(Wpr.front(), Wpr.back()), opt);
    out.certified = out.c_report.verdict == MacVerdict::CertifiedOnWindow &&
                    out.w_report.verdict == MacVerdict::CertifiedOnWindow;
    return out;
  }
}

// ---- finite rest covers ----

struct RestCover {
  IntegerSet W;
  std::vector<Int> witnesses;  // witnesses[i] is covered by F + W' only through F[i]
  Window checked;
};

// F + W ⊇ N. Returns W' with F + W' = F + W on which no proper subset of F keeps the sum.
inline RestCover finite_rest_cover(std::vector<Int> F, const IntegerSet& W) {
  if (F.empty()) throw Error("finite_rest_cover: F is empty");
  if (W.is_lazy()) throw Unsupported("finite_rest_cover: W must be eventually periodic");
  std::sort(F.begin(), F.end());
  F.erase(std::unique(F.begin(), F.end()), F.end());
  const auto k = static_cast<std::int64_t>(F.size());
  const Int f1 = F.front(), fk = F.back() - f1;
  const Int L = 4 * k * fk + 8;
  auto FS = IntegerSet::finite(F);
  RestCover out;
  out.checked = Window(-L, L);
  {
    auto t = rep_table(FS, W, Window(0, L));
    if (auto z = first_uncovered(t)) throw Error("finite_rest_cover: F + W misses " + str(*z) + ", not a cover of N");
  }
  // normalized so that f_1 = 0; the sum F + W does not move
  auto Wn = translate(W, f1);
  std::vector<Int> removed;
  for (std::int64_t i = 1; i <= k; ++i)
    for (std::int64_t j = 0; j < k; ++j)
      if (j != i - 1) removed.push_back(2 * i * fk - (F[j] - f1));
  auto Wp = subtract(unite(Wn, IntegerSet::from_shape(naturals_shape())), IntegerSet::finite(removed));
  out.W = translate(Wp, -f1);

  auto before = rep_table(FS, W, out.checked), after = rep_table(FS, out.W, out.checked);
  for (std::size_t q = 0; q < before.counts.size(); ++q)
    if ((before.counts[q] > 0) != (after.counts[q] > 0))
      throw Error("finite_rest_cover: sum changed at " + str(out.checked.lo + q));
  for (std::int64_t i = 1; i <= k; ++i) {
    Int z = 2 * i * fk;
    std::vector<Int> Fi = F;
    Fi.erase(Fi.begin() + (i - 1));
    if (rep_table(IntegerSet::finite(Fi), out.W, Window(z, z)).counts[0] != 0 ||
        rep_table(FS, out.W, Window(z, z)).counts[0] != 1)
      throw Error("finite_rest_cover: minimality witness " + str(z) + " failed");
    out.witnesses.push_back(z);
  }
  return out;
}

// F + W = T for a descending ray T with every element of F needed; nullopt when no W tiles T.
struct RayCover {
  Representability rep;
  IntegerSet W;
  std::vector<Int> witnesses;  // in T, one per element of F (sorted F)
};

inline std::optional<RayCover> minimal_ray_cover(const std::vector<Int>& F, const RayTarget& T) {
  RayCover rc;
  rc.rep = is_sumset_representable(F, T);
  if (!rc.rep.possible) return std::nullopt;
  const auto& Fs = rc.rep.F_scaled;  // min 0
  const Int span = Fs.back();
  Int hmin = 0;
  for (auto& h : T.holes) hmin = std::min(hmin, Int((h - T.top) / T.m));
  const Int L = 1 - hmin;  // -T' ⊇ [L, inf)
  // reflect to an ascending cover of N, then apply the rest cover there
  std::vector<Int> G;
  for (auto it = Fs.rbegin(); it != Fs.rend(); ++it) G.push_back(span - *it);
  auto Us = subtract(IntegerSet::from_shape(ray_below(rc.rep.w_top_scaled)), IntegerSet::finite(rc.rep.excluded_scaled));
  auto V = translate(reflect(Us), -span - L);
  auto cov = finite_rest_cover(G, V);
  auto Up = reflect(translate(cov.W, span + L));
  Int f0 = *std::min_element(F.begin(), F.end());
  rc.W = IntegerSet::from_shape(affine(Up.shape(), T.m, T.top - f0));
  for (auto it = cov.witnesses.rbegin(); it != cov.witnesses.rend(); ++it) rc.witnesses.push_back(T.top - T.m * (*it + L));
  return rc;
}

// ---- 3N ∪ F with F ⊆ 3N + 1 ----

struct RemarkFamily {
  IntegerSet C, Y, W_prime;
  std::vector<Int> f_witnesses;
  MacReport report;
};

inline RemarkFamily build_remark_family(std::vector<Int> F, const Window& window) {
  if (F.empty()) throw Error("build_remark_family: F is empty");
  for (auto& f : F)
    if (f < 0 || mod(f, 3) != 1) throw Error("build_remark_family: " + str(f) + " is not in 3N+1");
  RemarkFamily r;
  r.C = IntegerSet::ep(3, {Int(0)}, {}, F);
  // F + W' = -3Z_{>0}: 0 itself is already 0 + 0
  auto rc = minimal_ray_cover(F, RayTarget{3, -3, {}});
  if (!rc) throw Error("build_remark_family: no tiling of -3Z_{>0}");
  r.W_prime = rc->W;
  r.f_witnesses = rc->witnesses;
  r.Y = unite(unite(IntegerSet::finite({0}), IntegerSet::from_shape(periodic_shape(3, {1}))), r.W_prime);
  r.report = verify_mac(r.C, r.Y, window, window);
  return r;
}

// ---- the sufficiency construction (m prime, m ≡ 2 mod 3, |F_(m)| = 1, |A| = (m+1)/3) ----

struct ThmSuffClass {
  Int a0;      // progression start
  std::int64_t y = 0;  // y_a residue, used as its own representative
  IntegerSet W_a;      // minimal tiling of the class gap, before the shift by y_a
  std::vector<Int> f_witnesses;
};

struct ThmSuffResult {
  IntegerSet C, W;
  std::vector<ThmSuffClass> classes;
  MacReport report;
};

inline void check_thm_suff_hypotheses(const EPSet& S) {
  auto fr = S.F_res();
  auto a = static_cast<std::int64_t>(S.A_res().size());
  if (!is_prime(S.m)) throw Error("sufficiency construction: m = " + std::to_string(S.m) + " is not prime");
  if (S.m % 3 != 2) throw Error("sufficiency construction: m is not 2 mod 3");
  if (fr.size() != 1) throw Error("sufficiency construction: F must occupy exactly one residue class");
  if (3 * a != S.m + 1) throw Error("sufficiency construction: |A| must equal (m+1)/3");
}

inline ThmSuffResult build_thm_suff(const EPSet& S, const NecessaryResult& nec, const Window& window) {
  check_thm_suff_hypotheses(S);
  if (!nec.pass) throw Error("sufficiency construction: no labeling witness");
  ThmSuffResult r;
  r.C = IntegerSet::ep(S);
  IntegerSet W;
  for (auto& a0 : S.A) {
    auto a = mod(a0, S.m);
    ThmSuffClass cl;
    cl.a0 = a0;
    cl.y = nec.y.at(a);
    RayTarget T{S.m, a0 - S.m, {}};
    for (auto& b : S.B)
      if (mod(b, S.m) == a) T.holes.push_back(b);
    auto rc = minimal_ray_cover(S.F, T);
    if (!rc) throw Error("sufficiency construction: the gap of class " + std::to_string(a) + " is not F + W");
    cl.W_a = rc->W;
    cl.f_witnesses = rc->witnesses;
    W = unite(W, unite(IntegerSet::finite({cl.y}), translate(rc->W, cl.y)));
    r.classes.push_back(std::move(cl));
  }
  r.W = W;
  r.report = verify_mac(r.C, r.W, window, window);
  return r;
}

}  // namespace mincomp
