#pragma once

#include "core.hpp"

#include <bit>
#include <cstdint>
#include <vector>

namespace mincomp {

// Subset of Z/mZ as an m-bit mask, m <= 64.
struct CyclicSet {
  std::int64_t m = 1;
  std::uint64_t bits = 0;

  CyclicSet() = default;
  CyclicSet(std::int64_t mod, std::uint64_t b) : m(mod), bits(b & full_mask(mod)) {
    if (mod < 1 || mod > 64) throw Error("cyclic set: modulus must be in [1,64]");
  }
  static CyclicSet of(std::int64_t mod, const std::vector<std::int64_t>& residues) {
    CyclicSet s(mod, 0);
    for (auto r : residues) s.bits |= std::uint64_t{1} << mincomp::mod(r, mod);
    return s;
  }
  static CyclicSet full(std::int64_t mod) { return CyclicSet(mod, full_mask(mod)); }

  static std::uint64_t full_mask(std::int64_t m) { return m >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << m) - 1; }

  bool contains(std::int64_t r) const { return (bits >> mincomp::mod(r, m)) & 1; }
  int size() const { return std::popcount(bits); }
  bool is_full() const { return bits == full_mask(m); }
  std::vector<std::int64_t> residues() const {
    std::vector<std::int64_t> out;
    for (std::int64_t r = 0; r < m; ++r)
      if (contains(r)) out.push_back(r);
    return out;
  }
  friend bool operator==(const CyclicSet&, const CyclicSet&) = default;
};

// rotate an m-bit mask left by k (i.e. translate the set by +k)
inline std::uint64_t rotl(std::uint64_t x, std::int64_t k, std::int64_t m) {
  k = mod(k, m);
  if (k == 0) return x;
  std::uint64_t mask = CyclicSet::full_mask(m);
  return ((x << k) | (x >> (m - k))) & mask;
}

inline CyclicSet translate(const CyclicSet& s, std::int64_t t) { return CyclicSet(s.m, rotl(s.bits, t, s.m)); }

inline CyclicSet negate(const CyclicSet& s) {
  CyclicSet out(s.m, 0);
  for (std::int64_t r = 0; r < s.m; ++r)
    if (s.contains(r)) out.bits |= std::uint64_t{1} << mod(-r, s.m);
  return out;
}

inline std::uint64_t sum_bits(std::uint64_t a, std::uint64_t b, std::int64_t m) {
  std::uint64_t out = 0;
  while (a) {
    int i = std::countr_zero(a);
    a &= a - 1;
    out |= rotl(b, i, m);
  }
  return out;
}

inline CyclicSet minkowski_cyclic(const CyclicSet& a, const CyclicSet& b) {
  if (a.m != b.m) throw Error("minkowski_cyclic: modulus mismatch");
  return CyclicSet(a.m, sum_bits(a.bits, b.bits, a.m));
}

}  // namespace mincomp
