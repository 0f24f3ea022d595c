#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace mincomp {

// expression templates off: results bind to auto and ?: safely
using Int = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;
using Rational =
    boost::multiprecision::number<boost::multiprecision::rational_adaptor<boost::multiprecision::cpp_int_backend<>>,
                                  boost::multiprecision::et_off>;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
// a precondition the caller can fix (bad input, unsupported variant)
struct Unsupported : Error {
  using Error::Error;
};
// some budget or cap was hit; never silently truncated
struct LimitExceeded : Error {
  using Error::Error;
};

struct Window {
  Int lo, hi;  // inclusive
  Window() = default;
  Window(Int l, Int h) : lo(std::move(l)), hi(std::move(h)) {
    if (lo > hi) throw Error("window: lo > hi");
  }
  Int length() const { return hi - lo + 1; }
  bool contains(const Int& z) const { return lo <= z && z <= hi; }
  friend bool operator==(const Window&, const Window&) = default;
};

inline std::int64_t to_i64(const Int& v) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
    throw LimitExceeded("integer does not fit in 64 bits: " + v.str());
  return v.convert_to<std::int64_t>();
}

inline std::size_t to_size(const Int& v) {
  if (v < 0) throw Error("negative size");
  if (v > Int(std::numeric_limits<std::size_t>::max())) throw LimitExceeded("size overflow");
  return v.convert_to<std::size_t>();
}

// residue in [0, m)
inline std::int64_t mod(const Int& z, std::int64_t m) {
  Int r = z % m;
  if (r < 0) r += m;
  return r.convert_to<std::int64_t>();
}

inline std::int64_t mod(std::int64_t z, std::int64_t m) {
  std::int64_t r = z % m;
  return r < 0 ? r + m : r;
}

inline Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline Int ceil_div(const Int& a, const Int& b) { return -floor_div(-a, b); }

inline std::int64_t lcm64(std::int64_t a, std::int64_t b) {
  std::int64_t l = std::lcm(a, b);
  if (l <= 0 || l > (std::int64_t{1} << 40)) throw LimitExceeded("period lcm too large");
  return l;
}

inline bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline std::string str(const Int& v) { return v.str(); }

inline std::string str(const Rational& q) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

// Short form for huge integers in human-readable output.
inline std::string abbrev(const Int& v, std::size_t max_digits = 40) {
  std::string s = v.str();
  std::size_t digits = s.size() - (s[0] == '-' ? 1 : 0);
  if (digits <= max_digits) return s;
  std::string head = s.substr(0, (s[0] == '-' ? 1 : 0) + 12);
  return head + "...(" + std::to_string(digits) + " digits)";
}

}  // namespace mincomp
