#pragma once
// Necessary conditions for an eventually periodic set to arise as a minimal complement,
// and the tiling test behind the class-by-class condition.

#include "cyclic_set.hpp"
#include "intset.hpp"
#include "sumset.hpp"

#include <array>
#include <map>

namespace mincomp {

enum class YLabel : std::uint8_t { Absent = 0, Plus = 1, Minus = 2, Zero = 3, PlusAndMinus = 4 };

inline const char* to_string(YLabel l) {
  switch (l) {
    case YLabel::Absent: return "absent";
    case YLabel::Plus: return "plus";
    case YLabel::Minus: return "minus";
    case YLabel::Zero: return "zero";
    case YLabel::PlusAndMinus: return "plus_and_minus";
  }
  return "?";
}

struct YPartition {
  std::int64_t m = 1;
  std::vector<YLabel> labels;  // per residue

  std::uint64_t mask_of(bool (*pick)(YLabel)) const {
    std::uint64_t b = 0;
    for (std::size_t r = 0; r < labels.size(); ++r)
      if (pick(labels[r])) b |= std::uint64_t{1} << r;
    return b;
  }
  std::uint64_t plus() const {
    return mask_of([](YLabel l) { return l == YLabel::Plus || l == YLabel::PlusAndMinus; });
  }
  std::uint64_t minus() const {
    return mask_of([](YLabel l) { return l == YLabel::Minus || l == YLabel::PlusAndMinus; });
  }
  std::uint64_t zero() const {
    return mask_of([](YLabel l) { return l == YLabel::Zero; });
  }
  std::uint64_t all() const { return plus() | minus() | zero(); }
};

// ---- arithmetic checks ----

struct DensityCheck {
  bool pass = true;
  std::int64_t lhs = 0, rhs = 0;  // 2|A_(m)| <= m + |F_(m)|
};

inline DensityCheck check_density_cor(const EPSet& S) {
  DensityCheck d;
  d.lhs = 2 * static_cast<std::int64_t>(S.A_res().size());
  d.rhs = S.m + static_cast<std::int64_t>(S.F_res().size());
  d.pass = d.lhs <= d.rhs;
  return d;
}

enum class PrimeBoundStatus { Pass, RuledOut, NotApplicable };

inline const char* to_string(PrimeBoundStatus s) {
  switch (s) {
    case PrimeBoundStatus::Pass: return "pass";
    case PrimeBoundStatus::RuledOut: return "ruled_out";
    case PrimeBoundStatus::NotApplicable: return "not_applicable";
  }
  return "?";
}

struct PrimeBoundCheck {
  PrimeBoundStatus status = PrimeBoundStatus::NotApplicable;
  Rational bound;       // |F|/(2|F|+1) * (m+1)
  bool tight = false;   // |A| > |F|/(2|F|+1) * m: the class-by-class tiling becomes mandatory
};

inline PrimeBoundCheck check_prime_bound(const EPSet& S) {
  PrimeBoundCheck p;
  if (!is_prime(S.m)) return p;
  auto a = static_cast<std::int64_t>(S.A_res().size()), f = static_cast<std::int64_t>(S.F_res().size());
  p.bound = Rational(f * (S.m + 1), 2 * f + 1);
  p.status = Rational(a) <= p.bound ? PrimeBoundStatus::Pass : PrimeBoundStatus::RuledOut;
  p.tight = Rational(a) > Rational(f * S.m, 2 * f + 1);
  return p;
}

// ---- the labeling search ----

struct NecessaryResult {
  bool pass = false;
  std::optional<YPartition> witness;      // lexicographically smallest labeling
  std::map<std::int64_t, std::int64_t> y;  // a residue -> smallest admissible y_a residue
  std::uint64_t labelings = 0;            // candidates examined by both passes
};

inline constexpr std::int64_t kYSearchCap = 10;  // 5^10 labelings

namespace detail {

inline std::uint64_t bit(std::int64_t r) { return std::uint64_t{1} << r; }

struct YCheck {
  std::int64_t m;
  std::uint64_t full, A, F;
  std::vector<std::int64_t> a_res, f_res;

  std::uint64_t sum(std::uint64_t x, std::uint64_t y) const { return sum_bits(x, y, m); }

  // smallest y_a for residue a, or -1
  std::int64_t y_for(std::int64_t a, std::uint64_t Yp, std::uint64_t Ym, std::uint64_t Y0) const {
    std::uint64_t allowed = sum(F, Ym) & ~(sum(A & ~bit(a), Y0) | sum(A, Ym | Yp));
    for (std::int64_t y = 0; y < m; ++y)
      if ((Y0 & bit(y)) && (allowed & bit(mod(a + y, m)))) return y;
    return -1;
  }

  bool holds(std::uint64_t Yp, std::uint64_t Ym, std::uint64_t Y0) const {
    std::uint64_t Ybar = Yp | Ym | Y0;
    // (1)
    if ((sum(A, Ybar) | sum(F, Yp)) != full) return false;
    if (sum(A | F, Ym) != full) return false;
    // (2)
    for (auto a : a_res)
      if (y_for(a, Yp, Ym, Y0) < 0) return false;
    // (3)
    std::uint64_t AYm = sum(A, Ym);
    for (auto f : f_res)
      if ((sum(bit(f), Ybar) & ~AYm) == 0) return false;
    return true;
  }
};

inline YCheck ycheck_of(const EPSet& S) {
  YCheck c{S.m, CyclicSet::full_mask(S.m), 0, 0, S.A_res(), S.F_res()};
  for (auto a : c.a_res) c.A |= bit(a);
  for (auto f : c.f_res) c.F |= bit(f);
  return c;
}

// Is there any satisfying labeling? A labeling stays valid when Y_+ grows by Y_-: A + (Y_- ∪ Y_+) and Ybar
// do not change and F + Y_+ only grows. So it suffices to search disjoint (Y_-, Y_0, P) with Y_+ = Y_- ∪ P.
inline bool exists_labeling(const YCheck& c, std::uint64_t& examined) {
  const std::uint64_t full = c.full;
  for (std::uint64_t Ym = 1; Ym <= full; ++Ym) {
    if (c.sum(c.A | c.F, Ym) != full) continue;
    const std::uint64_t comp = full & ~Ym;
    for (std::uint64_t Y0 = comp; Y0; Y0 = (Y0 - 1) & comp) {
      // (2) only gets harder as P grows
      bool ok = true;
      for (auto a : c.a_res)
        if (c.y_for(a, Ym, Ym, Y0) < 0) {
          ok = false;
          break;
        }
      if (!ok) continue;
      // (1) and (3) only get easier as P grows
      const std::uint64_t R = comp & ~Y0, Ybar = Ym | Y0 | R;
      if ((c.sum(c.A, Ybar) | c.sum(c.F, Ym | R)) != full) continue;
      std::uint64_t AYm = c.sum(c.A, Ym);
      for (auto f : c.f_res)
        if ((c.sum(bit(f), Ybar) & ~AYm) == 0) ok = false;
      if (!ok) continue;
      for (std::uint64_t P = R;; P = (P - 1) & R) {
        ++examined;
        if (c.holds(Ym | P, Ym, Y0)) return true;
        if (!P) break;
      }
    }
  }
  return false;
}

}  // namespace detail

inline bool satisfies_necessary(const EPSet& S, const YPartition& Y) {
  return detail::ycheck_of(S).holds(Y.plus(), Y.minus(), Y.zero());
}

inline NecessaryResult check_necessary(const EPSet& S, std::int64_t cap = kYSearchCap) {
  if (S.m > cap)
    throw LimitExceeded("labeling search: modulus " + std::to_string(S.m) + " exceeds cap " + std::to_string(cap));
  auto c = detail::ycheck_of(S);
  NecessaryResult r;
  if (!detail::exists_labeling(c, r.labelings)) return r;
  const auto m = static_cast<std::size_t>(S.m);
  std::vector<std::uint8_t> dig(m, 0);
  // residue 0 is the most significant digit, so counting up from the last digit is lexicographic order
  for (;;) {
    ++r.labelings;
    std::uint64_t Yp = 0, Ym = 0, Y0 = 0;
    for (std::size_t k = 0; k < m; ++k) {
      auto b = std::uint64_t{1} << k;
      switch (dig[k]) {
        case 1: Yp |= b; break;
        case 2: Ym |= b; break;
        case 3: Y0 |= b; break;
        case 4: Yp |= b, Ym |= b; break;
        default: break;
      }
    }
    // (2) needs some y_a in Y0 and some element of Y_-
    if (Y0 && Ym && c.holds(Yp, Ym, Y0)) {
      YPartition Y{S.m, {}};
      for (auto d : dig) Y.labels.push_back(static_cast<YLabel>(d));
      for (auto a : c.a_res) r.y[a] = c.y_for(a, Yp, Ym, Y0);
      r.witness = std::move(Y);
      r.pass = true;
      return r;
    }
    std::size_t k = m;
    while (k > 0 && dig[k - 1] == 4) dig[--k] = 0;
    if (k == 0) break;
    ++dig[k - 1];
  }
  return r;
}

// ---- tiling of a descending ray ----

// T = {t : t ≡ top (mod m), t <= top} \ holes
struct RayTarget {
  std::int64_t m = 1;
  Int top;
  std::vector<Int> holes;

  bool member(const Int& t) const {
    return t <= top && mod(t - top, m) == 0 && std::find(holes.begin(), holes.end(), t) == holes.end();
  }
};

struct Representability {
  bool possible = false;
  IntegerSet W;                     // maximal candidate {w : F + w ⊆ T}
  std::optional<Int> first_uncovered;  // evidence when impossible
  Window checked;                   // window of T on which F + W* = T was compared
  // scaled coordinates: t = top + m t', w = top - min F + m w', f = min F + m f'
  std::vector<Int> F_scaled;
  Int w_top_scaled;                 // W*' = (-inf, w_top'] \ excluded'
  std::vector<Int> excluded_scaled;
};

inline Representability is_sumset_representable(std::vector<Int> F, RayTarget T) {
  if (F.empty()) throw Error("is_sumset_representable: F is empty");
  if (T.m < 1) throw Error("is_sumset_representable: modulus must be positive");
  std::sort(F.begin(), F.end());
  F.erase(std::unique(F.begin(), F.end()), F.end());
  for (auto& f : F)
    if (mod(f - F[0], T.m) != 0) throw Unsupported("is_sumset_representable: F spans several residue classes");
  for (auto& h : T.holes)
    if (h > T.top || mod(h - T.top, T.m) != 0) throw Error("is_sumset_representable: hole outside the target class");
  const Int f0 = F[0];
  Representability r;
  for (auto& f : F) r.F_scaled.push_back((f - f0) / T.m);
  std::vector<Int> H;
  for (auto& h : T.holes) H.push_back((h - T.top) / T.m);
  std::sort(H.begin(), H.end());
  H.erase(std::unique(H.begin(), H.end()), H.end());
  const Int span = r.F_scaled.back();
  // W*' = {w' <= -span} minus translates of the holes
  r.w_top_scaled = -span;
  for (auto& h : H)
    for (auto& f : r.F_scaled)
      if (h - f <= r.w_top_scaled) r.excluded_scaled.push_back(h - f);
  std::sort(r.excluded_scaled.begin(), r.excluded_scaled.end());
  r.excluded_scaled.erase(std::unique(r.excluded_scaled.begin(), r.excluded_scaled.end()), r.excluded_scaled.end());
  // past the last hole (going down) T' is a full ray; span + 2 more steps settle it
  Int lo = (H.empty() ? Int(0) : H.front()) - span - 2;
  auto in_w = [&](const Int& w) {
    return w <= r.w_top_scaled && !std::binary_search(r.excluded_scaled.begin(), r.excluded_scaled.end(), w);
  };
  for (Int t = 0; t >= lo; --t) {
    if (std::binary_search(H.begin(), H.end(), t)) continue;
    bool hit = false;
    for (auto& f : r.F_scaled) hit = hit || in_w(t - f);
    if (!hit) {
      r.first_uncovered = T.top + T.m * t;
      break;
    }
  }
  r.checked = Window(T.top + T.m * lo, T.top);
  r.possible = !r.first_uncovered;
  auto excl = IntegerSet::finite(r.excluded_scaled);
  auto Ws = subtract(IntegerSet::from_shape(ray_below(r.w_top_scaled)), excl);
  r.W = IntegerSet::from_shape(affine(Ws.shape(), T.m, T.top - f0));
  return r;
}

}  // namespace mincomp
