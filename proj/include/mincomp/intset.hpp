#pragma once

#include "core.hpp"
#include "lazy.hpp"

#include <algorithm>
#include <memory>
#include <optional>
#include <set>

namespace mincomp {

inline constexpr std::size_t kEnumerateLimit = 50'000'000;

// Periodic low tail, explicit middle, periodic high tail:
//   z <  lo_cut : low[z mod m]
//   z >  hi_cut : high[z mod m]
//   otherwise   : z in mid
struct TwoSidedSet {
  std::int64_t m = 1;
  std::vector<bool> low{false}, high{false};
  Int lo_cut = 0, hi_cut = -1;
  std::vector<Int> mid;

  bool has_low() const { return std::find(low.begin(), low.end(), true) != low.end(); }
  bool has_high() const { return std::find(high.begin(), high.end(), true) != high.end(); }

  bool member(const Int& z) const {
    if (z < lo_cut) return low[mod(z, m)];
    if (z > hi_cut) return high[mod(z, m)];
    return std::binary_search(mid.begin(), mid.end(), z);
  }

  friend bool operator==(const TwoSidedSet&, const TwoSidedSet&) = default;
};

inline Int count_residue(const Int& a, const Int& b, std::int64_t r, std::int64_t m) {
  if (a > b) return 0;
  return floor_div(b - r, m) - floor_div(a - 1 - r, m);
}

inline Int count_in(const TwoSidedSet& t, const Int& a, const Int& b) {
  if (a > b) return 0;
  Int n = 0;
  Int la = a, lb = std::min(b, Int(t.lo_cut - 1));
  if (la <= lb)
    for (std::int64_t r = 0; r < t.m; ++r)
      if (t.low[r]) n += count_residue(la, lb, r, t.m);
  Int ha = std::max(a, Int(t.hi_cut + 1)), hb = b;
  if (ha <= hb)
    for (std::int64_t r = 0; r < t.m; ++r)
      if (t.high[r]) n += count_residue(ha, hb, r, t.m);
  auto lo = std::lower_bound(t.mid.begin(), t.mid.end(), a);
  auto hi = std::upper_bound(t.mid.begin(), t.mid.end(), b);
  if (lo < hi) n += Int(hi - lo);
  return n;
}

inline void append_residues(std::vector<Int>& out, const std::vector<bool>& pat, std::int64_t m, const Int& a,
                            const Int& b) {
  if (a > b) return;
  std::vector<Int> part;
  for (std::int64_t r = 0; r < m; ++r) {
    if (!pat[r]) continue;
    Int x = a + mod(Int(r) - a, m);
    for (; x <= b; x += m) {
      part.push_back(x);
      if (part.size() > kEnumerateLimit) throw LimitExceeded("window enumeration too large");
    }
  }
  std::sort(part.begin(), part.end());
  out.insert(out.end(), part.begin(), part.end());
}

inline std::vector<Int> enumerate(const TwoSidedSet& t, const Int& a, const Int& b) {
  std::vector<Int> out;
  if (a > b) return out;
  if (count_in(t, a, b) > kEnumerateLimit) throw LimitExceeded("window enumeration too large");
  append_residues(out, t.low, t.m, a, std::min(b, Int(t.lo_cut - 1)));
  auto lo = std::lower_bound(t.mid.begin(), t.mid.end(), a);
  auto hi = std::upper_bound(t.mid.begin(), t.mid.end(), b);
  if (lo < hi) out.insert(out.end(), lo, hi);
  append_residues(out, t.high, t.m, std::max(a, Int(t.hi_cut + 1)), b);
  return out;
}

namespace detail {

inline bool periodic_with(const std::vector<bool>& pat, std::int64_t d) {
  for (std::size_t i = 0; i < pat.size(); ++i)
    if (pat[i] != pat[i % d]) return false;
  return true;
}

inline std::vector<bool> fold(const std::vector<bool>& pat, std::int64_t d) {
  return std::vector<bool>(pat.begin(), pat.begin() + d);
}

inline std::vector<bool> expand(const std::vector<bool>& pat, std::int64_t m) {
  std::vector<bool> out(m);
  for (std::int64_t i = 0; i < m; ++i) out[i] = pat[i % pat.size()];
  return out;
}

}  // namespace detail

inline TwoSidedSet canonical(TwoSidedSet t) {
  if (t.m < 1 || (std::int64_t)t.low.size() != t.m || (std::int64_t)t.high.size() != t.m)
    throw Error("two-sided set: malformed period data");
  std::sort(t.mid.begin(), t.mid.end());
  t.mid.erase(std::unique(t.mid.begin(), t.mid.end()), t.mid.end());
  if (!t.mid.empty() && (t.mid.front() < t.lo_cut || t.mid.back() > t.hi_cut))
    throw Error("two-sided set: explicit elements outside the cut range");
  for (std::int64_t d = 1; d <= t.m; ++d) {
    if (t.m % d) continue;
    if (detail::periodic_with(t.low, d) && detail::periodic_with(t.high, d)) {
      t.low = detail::fold(t.low, d);
      t.high = detail::fold(t.high, d);
      t.m = d;
      break;
    }
  }
  // absorb boundary points that already follow the tail rule
  std::size_t first = 0, last = t.mid.size();
  while (t.lo_cut <= t.hi_cut) {
    bool in = first < last && t.mid[first] == t.lo_cut;
    if (in != t.low[mod(t.lo_cut, t.m)]) break;
    if (in) ++first;
    ++t.lo_cut;
  }
  while (t.lo_cut <= t.hi_cut) {
    bool in = first < last && t.mid[last - 1] == t.hi_cut;
    if (in != t.high[mod(t.hi_cut, t.m)]) break;
    if (in) --last;
    --t.hi_cut;
  }
  t.mid = std::vector<Int>(t.mid.begin() + first, t.mid.begin() + last);
  if (t.lo_cut > t.hi_cut) {
    if (t.low == t.high) {
      t.lo_cut = 0;
    } else {
      Int b = t.lo_cut;
      while (t.low[mod(b - 1, t.m)] == t.high[mod(b - 1, t.m)]) --b;
      t.lo_cut = b;
    }
    t.hi_cut = t.lo_cut - 1;
  }
  return t;
}

inline TwoSidedSet finite_shape(std::vector<Int> elems) {
  TwoSidedSet t;
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  if (!elems.empty()) {
    t.lo_cut = elems.front();
    t.hi_cut = elems.back();
  }
  t.mid = std::move(elems);
  return t;
}

// Two-sided periodic set m*Z + residues.
inline TwoSidedSet periodic_shape(std::int64_t m, const std::vector<std::int64_t>& residues) {
  if (m < 1) throw Error("period must be positive");
  TwoSidedSet t;
  t.m = m;
  t.low.assign(m, false);
  for (auto r : residues) t.low[mod(r, m)] = true;
  t.high = t.low;
  return canonical(t);
}

// Pointwise combination of two shapes.
template <class Op>
TwoSidedSet combine(const TwoSidedSet& a, const TwoSidedSet& b, Op op) {
  TwoSidedSet t;
  t.m = lcm64(a.m, b.m);
  t.low.assign(t.m, false);
  t.high.assign(t.m, false);
  for (std::int64_t r = 0; r < t.m; ++r) {
    t.low[r] = op(a.low[r % a.m], b.low[r % b.m]);
    t.high[r] = op(a.high[r % a.m], b.high[r % b.m]);
  }
  t.lo_cut = std::min(a.lo_cut, b.lo_cut);
  t.hi_cut = std::max(a.hi_cut, b.hi_cut);
  if (t.lo_cut <= t.hi_cut) {
    // candidates: explicit elements of either side plus tail points inside the range
    std::vector<Int> cand;
    auto add = [&](const TwoSidedSet& s) {
      auto part = enumerate(s, t.lo_cut, t.hi_cut);
      cand.insert(cand.end(), part.begin(), part.end());
    };
    add(a);
    add(b);
    // points in neither set may still satisfy op (e.g. complement); scan if cheap
    if (op(false, false)) {
      if (t.hi_cut - t.lo_cut > Int(kEnumerateLimit)) throw LimitExceeded("combine: range too large");
      for (Int z = t.lo_cut; z <= t.hi_cut; ++z) cand.push_back(z);
    }
    std::sort(cand.begin(), cand.end());
    cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
    for (auto& z : cand)
      if (op(a.member(z), b.member(z))) t.mid.push_back(z);
  }
  return canonical(t);
}

inline TwoSidedSet shift(const TwoSidedSet& s, const Int& d) {
  TwoSidedSet t = s;
  t.lo_cut += d;
  t.hi_cut += d;
  for (auto& x : t.mid) x += d;
  std::int64_t k = mod(d, s.m);
  for (std::int64_t r = 0; r < s.m; ++r) {
    t.low[(r + k) % s.m] = s.low[r];
    t.high[(r + k) % s.m] = s.high[r];
  }
  return canonical(t);
}

inline TwoSidedSet negate(const TwoSidedSet& s) {
  TwoSidedSet t;
  t.m = s.m;
  t.low.assign(s.m, false);
  t.high.assign(s.m, false);
  for (std::int64_t r = 0; r < s.m; ++r) {
    t.low[mod(-r, s.m)] = s.high[r];
    t.high[mod(-r, s.m)] = s.low[r];
  }
  t.lo_cut = -s.hi_cut;
  t.hi_cut = -s.lo_cut;
  for (auto it = s.mid.rbegin(); it != s.mid.rend(); ++it) t.mid.push_back(-*it);
  return canonical(t);
}

// x -> offset + scale*x
inline TwoSidedSet affine(const TwoSidedSet& s, std::int64_t scale, const Int& offset) {
  if (scale < 1) throw Error("affine: scale must be positive");
  TwoSidedSet t;
  t.m = s.m * scale;
  t.low.assign(t.m, false);
  t.high.assign(t.m, false);
  for (std::int64_t r = 0; r < s.m; ++r) {
    std::int64_t img = mod(offset + Int(scale) * r, t.m);
    t.low[img] = s.low[r];
    t.high[img] = s.high[r];
  }
  t.lo_cut = offset + Int(scale) * s.lo_cut;
  t.hi_cut = offset + Int(scale) * s.hi_cut;
  for (auto& x : s.mid) t.mid.push_back(offset + Int(scale) * x);
  return canonical(t);
}

// (m N + A) u B u F in canonical form.
struct EPSet {
  std::int64_t m = 1;
  std::vector<Int> A, B, F;
  TwoSidedSet shape;  // same set, for the kernels

  std::vector<std::int64_t> A_res() const {
    std::vector<std::int64_t> r;
    for (auto& a : A) r.push_back(mod(a, m));
    std::sort(r.begin(), r.end());
    return r;
  }
  std::vector<std::int64_t> F_res() const {
    std::vector<std::int64_t> r;
    for (auto& f : F) r.push_back(mod(f, m));
    std::sort(r.begin(), r.end());
    r.erase(std::unique(r.begin(), r.end()), r.end());
    return r;
  }
  // progression start for residue r, if r is a tail class
  std::optional<Int> start_of(std::int64_t r) const {
    for (auto& a : A)
      if (mod(a, m) == mod(r, m)) return a;
    return std::nullopt;
  }
  bool member(const Int& z) const { return shape.member(z); }
  friend bool operator==(const EPSet& x, const EPSet& y) {
    return x.m == y.m && x.A == y.A && x.B == y.B && x.F == y.F;
  }
};

inline EPSet ep_canonicalize(std::int64_t m, std::vector<Int> A, std::vector<Int> B, std::vector<Int> F) {
  if (m <= 0) throw Error("ep: period m must be positive");
  if (A.empty()) throw Error("ep: A must be nonempty");
  std::vector<Int> all;
  all.insert(all.end(), A.begin(), A.end());
  all.insert(all.end(), B.begin(), B.end());
  all.insert(all.end(), F.begin(), F.end());
  Int lo = *std::min_element(all.begin(), all.end());
  Int hi = *std::max_element(all.begin(), all.end());
  if (hi - lo > Int(kEnumerateLimit)) throw LimitExceeded("ep: finite part spans too wide a range");

  // smallest start per class (several starts in one class collapse to the least)
  std::vector<std::optional<Int>> start(m);
  for (auto& a : A) {
    auto r = mod(a, m);
    if (!start[r] || a < *start[r]) start[r] = a;
  }
  std::set<Int> extra(B.begin(), B.end());
  extra.insert(F.begin(), F.end());
  auto raw_member = [&](const Int& z) {
    auto r = mod(z, m);
    if (start[r] && z >= *start[r]) return true;
    return extra.count(z) > 0;
  };

  TwoSidedSet t;
  t.m = m;
  t.low.assign(m, false);
  t.high.assign(m, false);
  for (std::int64_t r = 0; r < m; ++r) t.high[r] = start[r].has_value();
  t.lo_cut = lo;
  t.hi_cut = hi;
  for (Int z = lo; z <= hi; ++z)
    if (raw_member(z)) t.mid.push_back(z);
  t = canonical(t);

  EPSet e;
  e.m = t.m;
  e.shape = t;
  for (std::int64_t r = 0; r < t.m; ++r) {
    if (!t.high[r]) continue;
    Int x = t.hi_cut + 1 + mod(Int(r) - (t.hi_cut + 1), t.m);
    while (t.member(x - t.m)) x -= t.m;
    e.A.push_back(x);
  }
  std::sort(e.A.begin(), e.A.end());
  for (auto& z : t.mid) {
    auto r = mod(z, t.m);
    if (!t.high[r])
      e.F.push_back(z);
    else if (z < *e.start_of(r))
      e.B.push_back(z);
  }
  return e;
}

class IntegerSet {
 public:
  enum class Kind { Finite, EP, Lazy, TwoSided };

  IntegerSet() : shape_(std::make_shared<TwoSidedSet>()) {}

  static IntegerSet finite(std::vector<Int> elems) {
    IntegerSet s;
    s.kind_ = Kind::Finite;
    s.shape_ = std::make_shared<TwoSidedSet>(finite_shape(std::move(elems)));
    return s;
  }
  static IntegerSet finite(std::initializer_list<long long> xs) {
    std::vector<Int> v;
    for (auto x : xs) v.emplace_back(x);
    return finite(std::move(v));
  }
  static IntegerSet ep(EPSet e) {
    IntegerSet s;
    s.kind_ = Kind::EP;
    s.shape_ = std::make_shared<TwoSidedSet>(e.shape);
    s.ep_ = std::make_shared<EPSet>(std::move(e));
    return s;
  }
  static IntegerSet ep(std::int64_t m, std::vector<Int> A, std::vector<Int> B = {}, std::vector<Int> F = {}) {
    return ep(ep_canonicalize(m, std::move(A), std::move(B), std::move(F)));
  }
  static IntegerSet lazy(std::shared_ptr<const Generator> g) {
    IntegerSet s;
    s.kind_ = Kind::Lazy;
    s.lazy_ = std::make_shared<LazyState>(std::move(g));
    return s;
  }
  // Normalizes: finite shapes become Finite, bounded-below ones become EP.
  static IntegerSet from_shape(TwoSidedSet t) {
    t = canonical(std::move(t));
    if (!t.has_low() && !t.has_high()) return finite(t.mid);
    if (!t.has_low()) {
      std::vector<Int> starts;
      for (std::int64_t r = 0; r < t.m; ++r)
        if (t.high[r]) starts.push_back(t.hi_cut + 1 + mod(Int(r) - (t.hi_cut + 1), t.m));
      return ep(ep_canonicalize(t.m, starts, {}, t.mid));
    }
    IntegerSet s;
    s.kind_ = Kind::TwoSided;
    s.shape_ = std::make_shared<TwoSidedSet>(std::move(t));
    return s;
  }

  Kind kind() const { return kind_; }
  bool is_lazy() const { return kind_ == Kind::Lazy; }
  bool is_finite() const { return kind_ == Kind::Finite; }
  bool is_ep() const { return kind_ == Kind::EP; }

  const TwoSidedSet& shape() const {
    if (!shape_) throw Unsupported("lazy set has no periodic shape");
    return *shape_;
  }
  const EPSet& ep() const {
    if (!ep_) throw Unsupported("set is not eventually periodic");
    return *ep_;
  }
  const std::shared_ptr<const LazyState>& lazy_state() const {
    if (!lazy_) throw Unsupported("set is not lazy");
    return lazy_;
  }
  const std::vector<Int>& elements() const {
    if (kind_ != Kind::Finite) throw Unsupported("set is not finite");
    return shape_->mid;
  }

  bool gap_promise() const { return lazy_ && lazy_->generator().gap_promise(); }

  bool bounded_below() const { return is_lazy() || !shape_->has_low(); }
  bool bounded_above() const { return !is_lazy() && !shape_->has_high(); }
  bool empty() const { return kind_ == Kind::Finite && shape_->mid.empty(); }

  Int min() const {
    if (!bounded_below() || empty()) throw Error("set has no minimum");
    if (is_lazy()) return lazy_->at(0);
    const auto& t = *shape_;
    return t.mid.empty() ? first_tail_point(t) : std::min(t.mid.front(), first_tail_point(t));
  }
  Int max() const {
    if (!bounded_above() || empty()) throw Error("set has no maximum");
    return shape_->mid.back();
  }

  // c_{i+1} for lazy sets (i is 0-based)
  Int at(std::size_t i) const { return lazy_state()->at(i); }

  bool member(const Int& z) const {
    if (is_lazy()) return lazy_->contains(z);
    return shape_->member(z);
  }

  Int count_in(const Int& a, const Int& b) const {
    if (a > b) return 0;
    if (is_lazy()) return lazy_->rank(b + 1) - lazy_->rank(a);
    return mincomp::count_in(*shape_, a, b);
  }

  std::vector<Int> enumerate(const Int& a, const Int& b) const {
    if (a > b) return {};
    if (!is_lazy()) return mincomp::enumerate(*shape_, a, b);
    std::vector<Int> out;
    for (Int v = lazy_->ceil(a); v <= b; v = lazy_->succ(v)) {
      out.push_back(v);
      if (out.size() > kEnumerateLimit) throw LimitExceeded("window enumeration too large");
    }
    return out;
  }

 private:
  static Int first_tail_point(const TwoSidedSet& t) {
    Int best;
    bool have = false;
    for (std::int64_t r = 0; r < t.m; ++r) {
      if (!t.high[r]) continue;
      Int x = t.hi_cut + 1 + mod(Int(r) - (t.hi_cut + 1), t.m);
      if (!have || x < best) best = x, have = true;
    }
    if (!have) return t.mid.empty() ? Int(0) : t.mid.front();
    return best;
  }

  Kind kind_ = Kind::Finite;
  std::shared_ptr<const TwoSidedSet> shape_;
  std::shared_ptr<const EPSet> ep_;
  std::shared_ptr<const LazyState> lazy_;
};

inline bool member(const IntegerSet& s, const Int& z) { return s.member(z); }

inline std::vector<Int> enumerate_window(const IntegerSet& s, const Window& w) { return s.enumerate(w.lo, w.hi); }

struct DensityReport {
  Rational upper_banach, lower_banach, eventual_density;
  bool two_sided = false;
  std::string convention;
};

inline DensityReport density(const EPSet& s, bool two_sided) {
  DensityReport d;
  d.eventual_density = Rational(Int(s.A.size()), Int(s.m));
  d.two_sided = two_sided;
  d.upper_banach = d.eventual_density;
  if (two_sided) {
    d.lower_banach = d.eventual_density;
    d.convention = "periodic extension A_(m) + mZ";
  } else {
    d.lower_banach = 0;
    d.convention = "one-sided set: lower density 0 (empty windows to the left), upper = tail density";
  }
  return d;
}

// Exact densities of a shape: windows far left see the low pattern, far right the high one.
inline DensityReport density(const TwoSidedSet& t) {
  auto frac = [&](const std::vector<bool>& p) {
    return Rational(Int(std::count(p.begin(), p.end(), true)), Int(t.m));
  };
  DensityReport d;
  d.two_sided = true;
  Rational a = frac(t.low), b = frac(t.high);
  d.upper_banach = std::max(a, b);
  d.lower_banach = std::min(a, b);
  d.eventual_density = b;
  d.convention = "two-sided: extremes over the two tails";
  return d;
}

class ShiftGen : public Generator {
 public:
  ShiftGen(std::shared_ptr<const LazyState> base, Int t) : base_(std::move(base)), t_(std::move(t)) {}
  std::string expression() const override {
    return "shift(" + t_.str() + "," + base_->generator().expression() + ")";
  }
  Int at(std::size_t i) const override { return base_->at(i) + t_; }
  bool gap_promise() const override { return base_->generator().gap_promise(); }
  std::size_t lower_index(const Int& v, const Getter&) const override { return base_->lower_index(v - t_); }
  std::optional<Int> ceil_value(const Int& v) const override { return base_->ceil(v - t_) + t_; }
  std::optional<Int> successor(const Int& c) const override { return base_->succ(c - t_) + t_; }
  std::optional<Int> rank(const Int& v) const override { return base_->rank(v - t_); }
  std::optional<Int> wide_gap_from(const Int& v, const Int& j) const override {
    if (auto r = base_->generator().wide_gap_from(v - t_, j)) return *r + t_;
    return std::nullopt;
  }
  std::optional<Int> run_start(const Int& c) const override {
    if (auto r = base_->generator().run_start(c - t_)) return *r + t_;
    return std::nullopt;
  }
  const std::shared_ptr<const LazyState>& base_ptr() const { return base_; }
  const Int& offset() const { return t_; }

 private:
  std::shared_ptr<const LazyState> base_;
  Int t_;
};

inline IntegerSet translate(const IntegerSet& s, const Int& t) {
  switch (s.kind()) {
    case IntegerSet::Kind::Finite: {
      std::vector<Int> v = s.elements();
      for (auto& x : v) x += t;
      return IntegerSet::finite(std::move(v));
    }
    case IntegerSet::Kind::EP: {
      const auto& e = s.ep();
      auto sh = [&](std::vector<Int> v) {
        for (auto& x : v) x += t;
        return v;
      };
      return IntegerSet::ep(ep_canonicalize(e.m, sh(e.A), sh(e.B), sh(e.F)));
    }
    case IntegerSet::Kind::Lazy: {
      if (t == 0) return s;
      if (auto* g = dynamic_cast<const ShiftGen*>(&s.lazy_state()->generator()))
        return IntegerSet::lazy(std::make_shared<ShiftGen>(g->base_ptr(), g->offset() + t));
      return IntegerSet::lazy(std::make_shared<ShiftGen>(s.lazy_state(), t));
    }
    case IntegerSet::Kind::TwoSided:
      return IntegerSet::from_shape(shift(s.shape(), t));
  }
  throw Error("translate: bad kind");
}

inline IntegerSet reflect(const IntegerSet& s) {
  if (s.is_lazy()) throw Unsupported("reflect of an unbounded-above lazy set needs a window");
  return IntegerSet::from_shape(negate(s.shape()));
}

// Lazy sets: materialize S ∩ w, then negate.
inline IntegerSet reflect(const IntegerSet& s, const Window& w) {
  if (!s.is_lazy()) return reflect(s);
  auto v = s.enumerate(w.lo, w.hi);
  for (auto& x : v) x = -x;
  return IntegerSet::finite(std::move(v));
}

inline IntegerSet unite(const IntegerSet& a, const IntegerSet& b) {
  return IntegerSet::from_shape(combine(a.shape(), b.shape(), [](bool x, bool y) { return x || y; }));
}
inline IntegerSet intersect(const IntegerSet& a, const IntegerSet& b) {
  return IntegerSet::from_shape(combine(a.shape(), b.shape(), [](bool x, bool y) { return x && y; }));
}
inline IntegerSet subtract(const IntegerSet& a, const IntegerSet& b) {
  return IntegerSet::from_shape(combine(a.shape(), b.shape(), [](bool x, bool y) { return x && !y; }));
}

// Non-negative integers and the negative ray, as shapes.
inline TwoSidedSet naturals_shape() {
  TwoSidedSet t;
  t.high = {true};
  t.lo_cut = 0;
  t.hi_cut = -1;
  return t;
}
inline TwoSidedSet ray_below(const Int& x) {  // (-inf, x]
  TwoSidedSet t;
  t.low = {true};
  t.lo_cut = x + 1;
  t.hi_cut = x;
  return canonical(t);
}
inline TwoSidedSet ray_above(const Int& x) {  // [x, inf)
  TwoSidedSet t;
  t.high = {true};
  t.lo_cut = x;
  t.hi_cut = x - 1;
  return canonical(t);
}

// membership equality on a window, the workhorse for tests and round trips
inline bool same_on(const IntegerSet& a, const IntegerSet& b, const Window& w) {
  return a.enumerate(w.lo, w.hi) == b.enumerate(w.lo, w.hi);
}

}  // namespace mincomp
