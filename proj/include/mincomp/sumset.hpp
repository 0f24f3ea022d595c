#pragma once

#include "cyclic_set.hpp"
#include "intset.hpp"

#include <optional>

namespace mincomp {

inline constexpr std::uint64_t kInfinite = std::numeric_limits<std::uint64_t>::max();
inline constexpr std::size_t kMaxTableWindow = 100'000'000;
inline constexpr std::size_t kLazySample = 4096;

// Representation counts of every z in a window.
struct RepTable {
  Window window;
  std::vector<std::uint64_t> counts;
  bool exact = true;
  std::string support;  // what was examined; meaningful when !exact

  std::uint64_t at(const Int& z) const { return counts[to_size(z - window.lo)]; }
};

struct WindowedSum {
  Window window;
  std::vector<Int> elements;
  bool complete = true;
  std::string support;
};

struct RepCount {
  Int z;
  std::optional<std::uint64_t> count;  // nullopt = infinitely many
  bool exact = true;
};

namespace detail {

inline void bump(std::uint64_t& c) {
  if (c != kInfinite && c + 1 != kInfinite) ++c;
}

class TableBuilder {
 public:
  explicit TableBuilder(const Window& w) : w_(w) {
    Int len = w.length();
    if (len > Int(kMaxTableWindow)) throw LimitExceeded("window longer than " + std::to_string(kMaxTableWindow));
    t_.window = w;
    t_.counts.assign(to_size(len), 0);
  }
  // every y in ys gives the pair (x, y)
  void add(const Int& x, const std::vector<Int>& ys) {
    for (auto& y : ys) {
      Int z = x + y;
      if (z < w_.lo || z > w_.hi) continue;
      bump(t_.counts[to_size(z - w_.lo)]);
    }
  }
  void infinite(const Int& z) { t_.counts[to_size(z - w_.lo)] = kInfinite; }
  RepTable done() { return std::move(t_); }
  RepTable& table() { return t_; }

 private:
  Window w_;
  RepTable t_;
};

inline std::vector<Int> low_part(const TwoSidedSet& t, const Int& a, const Int& b) {
  std::vector<Int> out;
  append_residues(out, t.low, t.m, a, std::min(b, Int(t.lo_cut - 1)));
  return out;
}
inline std::vector<Int> high_part(const TwoSidedSet& t, const Int& a, const Int& b) {
  std::vector<Int> out;
  append_residues(out, t.high, t.m, std::max(a, Int(t.hi_cut + 1)), b);
  return out;
}

// Both sets bounded below: only c <= hi - min W and w <= hi - min C can reach the window.
inline RepTable table_bounded(const IntegerSet& C, const IntegerSet& W, const Window& w) {
  TableBuilder tb(w);
  if (C.empty() || W.empty()) return tb.done();
  Int c0 = C.min(), w0 = W.min();
  if (w.hi < c0 + w0) return tb.done();
  Int cn = C.count_in(c0, w.hi - w0), wn = W.count_in(w0, w.hi - c0);
  const IntegerSet& X = cn <= wn ? C : W;
  const IntegerSet& Y = cn <= wn ? W : C;
  Int xmin = cn <= wn ? c0 : w0, ymin = cn <= wn ? w0 : c0;
  for (auto& x : X.enumerate(xmin, w.hi - ymin)) tb.add(x, Y.enumerate(std::max(ymin, Int(w.lo - x)), w.hi - x));
  return tb.done();
}

// Structured shapes, split into low tail / middle / high tail on each side.
inline RepTable table_shapes(const TwoSidedSet& C, const TwoSidedSet& W, const Window& w) {
  TableBuilder tb(w);
  const Int &lo = w.lo, &hi = w.hi;
  for (auto& c : C.mid) tb.add(c, enumerate(W, lo - c, hi - c));
  for (auto& x : W.mid) {
    tb.add(x, low_part(C, lo - x, hi - x));
    tb.add(x, high_part(C, lo - x, hi - x));
  }
  if (C.has_low() && W.has_low()) {
    Int a = lo - W.lo_cut + 1, b = C.lo_cut - 1;
    for (auto& c : low_part(C, a, b)) tb.add(c, low_part(W, lo - c, std::min(Int(hi - c), Int(W.lo_cut - 1))));
  }
  if (C.has_high() && W.has_high()) {
    Int a = C.hi_cut + 1, b = hi - W.hi_cut - 1;
    for (auto& c : high_part(C, a, b)) tb.add(c, high_part(W, std::max(Int(lo - c), Int(W.hi_cut + 1)), hi - c));
  }
  // one coordinate to -inf, the other to +inf: a pair exists iff infinitely many do
  std::int64_t M = lcm64(C.m, W.m);
  auto cross = [&](const TwoSidedSet& L, const TwoSidedSet& H) {
    if (!L.has_low() || !H.has_high()) return;
    for (Int z = lo; z <= hi; ++z) {
      Int t0 = std::max(Int(H.hi_cut + 1), Int(z - L.lo_cut + 1));
      for (std::int64_t k = 0; k < M; ++k) {
        Int h = t0 + k;
        if (H.high[mod(h, H.m)] && L.low[mod(z - h, L.m)]) {
          tb.infinite(z);
          break;
        }
      }
    }
  };
  cross(C, W);
  cross(W, C);
  return tb.done();
}

}  // namespace detail

// Counts of pairs (c, w), c + w = z, for each z in the window.
inline RepTable rep_table(const IntegerSet& C, const IntegerSet& W, const Window& w,
                          std::size_t lazy_sample = kLazySample) {
  if (!C.is_lazy() && !W.is_lazy()) return detail::table_shapes(C.shape(), W.shape(), w);
  if (C.bounded_below() && W.bounded_below()) return detail::table_bounded(C, W, w);
  // a lazy set against a set unbounded below: pairs with huge c and very negative w are not decidable
  const IntegerSet& L = C.is_lazy() ? C : W;
  const IntegerSet& O = C.is_lazy() ? W : C;
  detail::TableBuilder tb(w);
  auto st = L.lazy_state();
  for (std::size_t i = 0; i < lazy_sample; ++i) {
    Int x = st->at(i);
    tb.add(x, O.enumerate(w.lo - x, w.hi - x));
  }
  RepTable t = tb.done();
  t.exact = false;
  t.support = "lazy indices [0," + std::to_string(lazy_sample) + ") against the unbounded-below side";
  return t;
}

inline WindowedSum minkowski_window(const IntegerSet& C, const IntegerSet& W, const Window& w) {
  RepTable t = rep_table(C, W, w);
  WindowedSum s;
  s.window = w;
  s.complete = t.exact;
  s.support = t.exact ? "exact" : t.support;
  for (std::size_t i = 0; i < t.counts.size(); ++i)
    if (t.counts[i]) s.elements.push_back(w.lo + Int(i));
  return s;
}

inline RepCount rep_count(const Int& z, const IntegerSet& C, const IntegerSet& W,
                          std::size_t lazy_sample = kLazySample) {
  RepTable t = rep_table(C, W, Window(z, z), lazy_sample);
  RepCount r;
  r.z = z;
  r.exact = t.exact;
  if (t.counts[0] != kInfinite) r.count = t.counts[0];
  return r;
}

// Largest consecutive difference of S on the window.
inline Int gap(const IntegerSet& S, const Window& w) {
  auto v = S.enumerate(w.lo, w.hi);
  if (v.size() < 2) throw Error("gap: fewer than two elements in window");
  Int g = 0;
  for (std::size_t i = 1; i < v.size(); ++i) g = std::max(g, Int(v[i] - v[i - 1]));
  return g;
}

inline Int gap(const std::vector<Int>& sorted) {
  if (sorted.size() < 2) throw Error("gap: fewer than two elements");
  Int g = 0;
  for (std::size_t i = 1; i < sorted.size(); ++i) g = std::max(g, Int(sorted[i] - sorted[i - 1]));
  return g;
}

// First z of the window missing from C + W, if any.
inline std::optional<Int> first_uncovered(const RepTable& t) {
  for (std::size_t i = 0; i < t.counts.size(); ++i)
    if (!t.counts[i]) return t.window.lo + Int(i);
  return std::nullopt;
}

}  // namespace mincomp
