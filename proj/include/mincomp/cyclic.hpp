#pragma once
// Exhaustive solving in Z/mZ.

#include "verify.hpp"

#include <cstdlib>
#include <numeric>

namespace mincomp {

inline constexpr std::int64_t kDefaultMaxModulus = 24;

// MINCOMP_MAX_MODULUS overrides the default cap
inline std::int64_t max_modulus() {
  if (const char* e = std::getenv("MINCOMP_MAX_MODULUS")) {
    char* end = nullptr;
    long v = std::strtol(e, &end, 10);
    if (end != e && *end == '\0' && v >= 1 && v <= 64) return v;
  }
  return kDefaultMaxModulus;
}

inline void check_modulus(std::int64_t m, std::int64_t cap, const char* who) {
  if (m < 1) throw Error(std::string(who) + ": modulus must be positive");
  if (m > cap)
    throw LimitExceeded(std::string(who) + ": modulus " + std::to_string(m) + " exceeds the cap " +
                        std::to_string(cap) + " (raise --max-modulus or MINCOMP_MAX_MODULUS)");
}

namespace detail {

// cnt[z] = #{(c, w) : c + w = z}
inline void rep_counts(std::uint64_t C, std::uint64_t W, std::int64_t m, std::uint8_t* cnt) {
  std::fill(cnt, cnt + m, 0);
  for (std::uint64_t a = C; a; a &= a - 1) {
    int c = std::countr_zero(a);
    for (std::uint64_t b = W; b; b &= b - 1) {
      int z = c + std::countr_zero(b);
      ++cnt[z >= m ? z - m : z];
    }
  }
}

// every c has some z = c + w represented once
inline bool all_dependent(std::uint64_t C, std::uint64_t W, std::int64_t m, const std::uint8_t* cnt) {
  for (std::uint64_t a = C; a; a &= a - 1) {
    int c = std::countr_zero(a);
    bool dep = false;
    for (std::uint64_t b = W; b && !dep; b &= b - 1) {
      int z = c + std::countr_zero(b);
      dep = cnt[z >= m ? z - m : z] == 1;
    }
    if (!dep) return false;
  }
  return true;
}

// next mask with the same popcount (Gosper)
inline std::uint64_t next_combination(std::uint64_t x) {
  std::uint64_t u = x & -x, v = x + u;
  return v + (((v ^ x) / u) >> 2);
}

}  // namespace detail

// C + W = Z/mZ and no proper subset of C is a complement to W
inline bool is_mac(const CyclicSet& C, const CyclicSet& W) {
  if (C.m != W.m) throw Error("is_mac: modulus mismatch");
  std::uint8_t cnt[64];
  detail::rep_counts(C.bits, W.bits, C.m, cnt);
  for (std::int64_t z = 0; z < C.m; ++z)
    if (!cnt[z]) return false;
  return detail::all_dependent(C.bits, W.bits, C.m, cnt);
}

// every proper subset D ⊂ C has D + W ≠ C + W
inline bool is_sumset_minimal(const CyclicSet& C, const CyclicSet& W) {
  std::uint8_t cnt[64];
  detail::rep_counts(C.bits, W.bits, C.m, cnt);
  return detail::all_dependent(C.bits, W.bits, C.m, cnt);
}

struct CyclicMacAnswer {
  std::int64_t m = 1;
  CyclicSet C;
  bool arises = false;
  std::optional<CyclicSet> witness_W;
  bool exhausted = false;  // every candidate W was examined
  std::uint64_t candidates = 0;
};

// W ranges over sets containing 0 (translates of a witness are witnesses), by popcount then mask.
inline CyclicMacAnswer solve_arises(const CyclicSet& C, std::int64_t cap = max_modulus()) {
  const std::int64_t m = C.m;
  check_modulus(m, cap, "solve_arises");
  if (!C.bits) throw Error("solve_arises: C must be nonempty");
  CyclicMacAnswer ans;
  ans.m = m;
  ans.C = C;
  const int sc = C.size();
  std::uint8_t cnt[64];
  for (int k = 1; k <= m; ++k) {
    // a complement needs |C||W| >= m; a minimal one with k >= 2 obeys |C|(2k-1) <= k m
    if (static_cast<std::int64_t>(sc) * k < m) continue;
    if (k >= 2 && static_cast<std::int64_t>(sc) * (2 * k - 1) > k * m) continue;
    const int rest = k - 1;  // bits chosen among residues 1..m-1
    std::uint64_t x = rest == 0 ? 0 : (std::uint64_t{1} << rest) - 1;
    const std::uint64_t limit = m - 1 >= 64 ? ~std::uint64_t{0} : std::uint64_t{1} << (m - 1);
    while (true) {
      std::uint64_t W = (x << 1) | 1;
      ++ans.candidates;
      detail::rep_counts(C.bits, W, m, cnt);
      bool full = true;
      for (std::int64_t z = 0; z < m && full; ++z) full = cnt[z] != 0;
      if (full && detail::all_dependent(C.bits, W, m, cnt)) {
        ans.arises = true;
        ans.witness_W = CyclicSet(m, W);
        return ans;
      }
      if (rest == 0) break;
      x = detail::next_combination(x);
      if (x >= limit) break;
    }
  }
  ans.exhausted = true;
  return ans;
}

// Depth-first search over residues in increasing order: C is built up while every chosen c keeps a
// private residue, and a residue is abandoned only if it can still be covered later.
// visit(mask) is called for every minimal complement; returning false stops the search.
// cut(chosen, remaining) returning true abandons a branch; with fix_zero only sets containing 0 are produced.
struct NoCut {
  bool operator()(std::int64_t, std::int64_t) const { return false; }
};

template <class Visit, class Cut = NoCut>
void for_each_minimal_complement(const CyclicSet& W, Visit&& visit, Cut&& cut = {}, bool fix_zero = false) {
  const std::int64_t m = W.m;
  std::vector<std::uint64_t> nb(m);  // residues covered by c: c + W
  for (std::int64_t c = 0; c < m; ++c) nb[c] = rotl(W.bits, c, m);
  // last candidate c that can still cover residue z
  std::vector<std::int64_t> last(m, -1);
  for (std::int64_t c = 0; c < m; ++c)
    for (std::int64_t z = 0; z < m; ++z)
      if ((nb[c] >> z) & 1) last[z] = std::max(last[z], c);
  std::vector<std::int64_t> chosen;
  std::vector<std::uint8_t> cnt(m, 0);
  bool stop = false;
  std::function<void(std::int64_t)> rec = [&](std::int64_t v) {
    if (stop) return;
    // every chosen element still has a private residue
    for (auto c : chosen) {
      bool priv = false;
      for (std::uint64_t b = nb[c]; b && !priv; b &= b - 1) priv = cnt[std::countr_zero(b)] == 1;
      if (!priv) return;
    }
    // residues whose last chance has passed must be covered
    for (std::int64_t z = 0; z < m; ++z)
      if (!cnt[z] && last[z] < v) return;
    if (v == m) {
      std::uint64_t mask = 0;
      for (auto c : chosen) mask |= std::uint64_t{1} << c;
      if (!visit(mask)) stop = true;
      return;
    }
    if (cut(static_cast<std::int64_t>(chosen.size()), m - v)) return;
    chosen.push_back(v);
    for (std::uint64_t b = nb[v]; b; b &= b - 1) ++cnt[std::countr_zero(b)];
    rec(v + 1);
    for (std::uint64_t b = nb[v]; b; b &= b - 1) --cnt[std::countr_zero(b)];
    chosen.pop_back();
    if (!(fix_zero && v == 0)) rec(v + 1);
  };
  rec(0);
}

inline std::vector<CyclicSet> enumerate_minimal_complements(const CyclicSet& W, std::int64_t cap = max_modulus()) {
  check_modulus(W.m, cap, "enumerate_minimal_complements");
  if (!W.bits) throw Error("enumerate_minimal_complements: W must be nonempty");
  std::vector<CyclicSet> out;
  for_each_minimal_complement(W, [&](std::uint64_t mask) {
    out.push_back(CyclicSet(W.m, mask));
    return true;
  });
  std::sort(out.begin(), out.end(), [](const CyclicSet& a, const CyclicSet& b) {
    return a.size() != b.size() ? a.size() < b.size() : a.bits < b.bits;
  });
  return out;
}

// ---- quotient lifting ----

struct LiftResult {
  std::vector<Int> W;  // one representative in [0, m) per witness residue
  MacReport report;
  bool size_preserved = false;
};

inline LiftResult quotient_lift(const IntegerSet& C, const CyclicMacAnswer& ans) {
  if (C.is_lazy() || C.bounded_below() || C.bounded_above())
    throw Error("quotient_lift: C must be a two-sided periodic set");
  const auto& t = C.shape();
  if (t.lo_cut <= t.hi_cut || t.low != t.high) throw Error("quotient_lift: C is not periodic");
  if (!ans.arises || !ans.witness_W) throw Error("quotient_lift: the cyclic answer carries no witness");
  const std::int64_t m = ans.m;
  if (m % t.m != 0) throw Error("quotient_lift: modulus does not match the period of C");
  for (std::int64_t r = 0; r < m; ++r)
    if (ans.C.contains(r) != C.member(r)) throw Error("quotient_lift: answer is for a different set");
  LiftResult out;
  for (auto r : ans.witness_W->residues()) out.W.push_back(r);
  auto Wi = IntegerSet::finite(out.W);
  Window win(-m, 2 * m - 1);  // length 3m
  out.report = verify_mac(C, Wi, win, win);
  out.size_preserved = static_cast<int>(out.W.size()) == ans.witness_W->size();
  return out;
}

// ---- |C| <= k/(2k-1) |G| for sumset-minimal C ----

struct BoundExtremal {
  std::int64_t k = 0, max_c = 0;
  CyclicSet C, W;
};

struct BoundReport {
  std::int64_t order = 1;
  std::uint64_t pairs_checked = 0, violations = 0;
  std::vector<BoundExtremal> extremal;  // per k >= 2 that occurs
};

// C, W both contain 0 (each side may be translated independently). sweep=false checks only k=2.
inline BoundReport check_minimal_sumset_bound(std::int64_t n, bool sweep, std::int64_t cap = 14) {
  check_modulus(n, cap, "check_minimal_sumset_bound");
  BoundReport rep;
  rep.order = n;
  const std::uint64_t half = std::uint64_t{1} << (n - 1);
  std::map<std::int64_t, BoundExtremal> best;
  std::uint8_t cnt[64];
  for (std::uint64_t wx = 0; wx < half; ++wx) {
    std::uint64_t W = (wx << 1) | 1;
    std::int64_t k = std::popcount(W);
    if (k < 2 || (!sweep && k != 2)) continue;
    for (std::uint64_t cx = 0; cx < half; ++cx) {
      std::uint64_t C = (cx << 1) | 1;
      detail::rep_counts(C, W, n, cnt);
      if (!detail::all_dependent(C, W, n, cnt)) continue;
      ++rep.pairs_checked;
      std::int64_t sc = std::popcount(C);
      if (sc * (2 * k - 1) > k * n) ++rep.violations;
      auto& b = best[k];
      if (sc > b.max_c) b = {k, sc, CyclicSet(n, C), CyclicSet(n, W)};
    }
  }
  for (auto& [k, b] : best) rep.extremal.push_back(b);
  return rep;
}

// ---- unitary Cayley graph domination ----

struct CayleyResult {
  std::int64_t n = 0;
  CyclicSet P;
  std::int64_t gamma = 0, upper_gamma = 0;
  CyclicSet gamma_witness, upper_witness;
};

inline CyclicSet unit_closed_set(std::int64_t n) {
  CyclicSet P(n, 1);
  for (std::int64_t x = 1; x < n; ++x)
    if (std::gcd(x, n) == 1) P.bits |= std::uint64_t{1} << x;
  return P;
}

inline CayleyResult cayley_domination(std::int64_t n, std::int64_t cap = 40) {
  if (n < 2) throw Error("cayley_domination: n must be at least 2");
  check_modulus(n, std::min<std::int64_t>(cap, 64), "cayley_domination");
  CayleyResult r;
  r.n = n;
  r.P = unit_closed_set(n);
  // gamma: smallest complement, 0 in C by translation
  std::uint8_t cnt[64];
  for (std::int64_t k = 1; k <= n && !r.gamma; ++k) {
    const int rest = static_cast<int>(k - 1);
    std::uint64_t x = rest == 0 ? 0 : (std::uint64_t{1} << rest) - 1;
    const std::uint64_t limit = std::uint64_t{1} << (n - 1);
    while (true) {
      std::uint64_t C = (x << 1) | 1;
      detail::rep_counts(C, r.P.bits, n, cnt);
      bool full = true;
      for (std::int64_t z = 0; z < n && full; ++z) full = cnt[z] != 0;
      if (full) {
        r.gamma = k;
        r.gamma_witness = CyclicSet(n, C);
        break;
      }
      if (rest == 0) break;
      x = detail::next_combination(x);
      if (x >= limit) break;
    }
  }
  // upper gamma: largest minimal complement, 0 in C by translation; |P| = k >= 2 caps the size at k n / (2k - 1)
  std::int64_t k = r.P.size();
  std::int64_t bound = k >= 2 ? (k * n) / (2 * k - 1) : n;
  r.upper_gamma = 0;
  for_each_minimal_complement(
      r.P,
      [&](std::uint64_t mask) {
        std::int64_t s = std::popcount(mask);
        if (s > r.upper_gamma) {
          r.upper_gamma = s;
          r.upper_witness = CyclicSet(n, mask);
        }
        return r.upper_gamma < bound;
      },
      [&](std::int64_t chosen, std::int64_t remaining) {
        return chosen + remaining <= r.upper_gamma || chosen >= bound + 1;
      },
      true);
  return r;
}

}  // namespace mincomp
