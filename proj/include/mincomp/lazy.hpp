#pragma once

#include "core.hpp"

#include <cmath>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>

namespace mincomp {

// Strictly increasing integer sequence, addressed by 0-based index.
class Generator {
 public:
  using Getter = std::function<Int(std::size_t)>;
  virtual ~Generator() = default;
  virtual std::string expression() const = 0;
  virtual Int at(std::size_t i) const = 0;
  // value at index i given the value at i - 1 (sequential fast path)
  virtual Int next(const Int& prev, std::size_t i) const {
    (void)prev;
    return at(i);
  }
  virtual bool gap_promise() const { return true; }

  // Value-based navigation. nullopt means "fall back to index search"; overriding these
  // lets sets with astronomically large indices be walked by value.
  virtual std::optional<Int> ceil_value(const Int&) const { return std::nullopt; }  // least element >= v
  virtual std::optional<Int> successor(const Int&) const { return std::nullopt; }   // element after element c
  virtual std::optional<Int> rank(const Int&) const { return std::nullopt; }        // #elements < v
  // least element c >= v with succ(c) - c >= j
  virtual std::optional<Int> wide_gap_from(const Int&, const Int&) const { return std::nullopt; }
  // for an element c: least u with [u, c] inside the set
  virtual std::optional<Int> run_start(const Int&) const { return std::nullopt; }
  // smallest i with get(i) >= v; get is the memoizing accessor
  virtual std::size_t lower_index(const Int& v, const Getter& get) const {
    if (get(0) >= v) return 0;
    std::size_t lo = 0, hi = 1;  // get(lo) < v
    while (get(hi) < v) {
      lo = hi;
      if (hi > (std::size_t{1} << 40)) throw LimitExceeded("lazy search beyond index 2^40");
      hi *= 2;
    }
    while (hi - lo > 1) {
      std::size_t mid = lo + (hi - lo) / 2;
      if (get(mid) < v)
        lo = mid;
      else
        hi = mid;
    }
    return hi;
  }

 protected:
  static std::size_t adjust(std::size_t k, const Int& v, const Getter& get) {
    while (get(k) < v) ++k;
    while (k > 0 && get(k - 1) >= v) --k;
    return k;
  }
};

class PowerGen : public Generator {
 public:
  explicit PowerGen(std::int64_t base) : b_(base) {
    if (base < 2) throw Error("powers: base must be >= 2");
  }
  std::string expression() const override {
    if (b_ == 2) return "gen:pow2";
    if (b_ == 3) return "gen:pow3";
    return "gen:powers(base=" + std::to_string(b_) + ")";
  }
  Int at(std::size_t i) const override { return boost::multiprecision::pow(Int(b_), static_cast<unsigned>(i)); }
  Int next(const Int& prev, std::size_t) const override { return prev * b_; }
  std::optional<Int> successor(const Int& c) const override { return c * b_; }
  std::size_t lower_index(const Int& v, const Getter& get) const override {
    if (v <= 1) return 0;
    double bits = static_cast<double>(boost::multiprecision::msb(v));
    auto k = static_cast<std::size_t>(std::max(0.0, std::floor(bits / std::log2(double(b_))) - 1));
    return adjust(k, v, get);
  }
  std::int64_t base() const { return b_; }

 private:
  std::int64_t b_;
};

// 2^(i+1) - 1
class MersenneGen : public Generator {
 public:
  std::string expression() const override { return "gen:mersenne"; }
  Int at(std::size_t i) const override { return (Int(1) << (i + 1)) - 1; }
  Int next(const Int& prev, std::size_t) const override { return 2 * prev + 1; }
  std::optional<Int> successor(const Int& c) const override { return 2 * c + 1; }
  std::size_t lower_index(const Int& v, const Getter& get) const override {
    if (v <= 1) return 0;
    auto k = static_cast<std::size_t>(boost::multiprecision::msb(v));
    return adjust(k > 0 ? k - 1 : 0, v, get);
  }
};

// i^d for i >= 0
class PolyGen : public Generator {
 public:
  explicit PolyGen(unsigned degree) : d_(degree) {
    if (d_ < 2 || d_ > 3) throw Error("poly generator: degree 2 or 3");
  }
  std::string expression() const override { return d_ == 2 ? "gen:squares" : "gen:cubes"; }
  Int at(std::size_t i) const override { return boost::multiprecision::pow(Int(i), d_); }

 private:
  unsigned d_;
};

// x_0 = start, x_{n+1} = max(x_n + 1, ceil(lambda * x_n)), lambda = p/q > 1
class LacunaryGen : public Generator {
 public:
  LacunaryGen(Rational lambda, Int start) : lambda_(std::move(lambda)), start_(std::move(start)) {
    if (lambda_ <= 1) throw Error("lacunary: lambda must exceed 1");
    if (start_ < 1) throw Error("lacunary: start must be positive");
  }
  std::string expression() const override {
    return "gen:lacunary(lambda=" + str(lambda_) + ",start=" + start_.str() + ")";
  }
  Int at(std::size_t i) const override {
    Int x = start_;
    for (std::size_t k = 1; k <= i; ++k) x = next(x, k);
    return x;
  }
  Int next(const Int& prev, std::size_t) const override {
    using boost::multiprecision::denominator;
    using boost::multiprecision::numerator;
    Int up = ceil_div(numerator(lambda_) * prev, denominator(lambda_));
    return up > prev ? up : prev + 1;
  }
  std::optional<Int> successor(const Int& c) const override { return next(c, 0); }
  const Rational& lambda() const { return lambda_; }

 private:
  Rational lambda_;
  Int start_;
};

// union over k >= 0 of [4^k, 2*4^k); all navigation is closed form in the bit length
class IntervalUnionGen : public Generator {
 public:
  std::string expression() const override { return "interval-union:2^2k..2^2k+1"; }
  Int at(std::size_t i) const override {
    Int idx = i;
    Int p = 1, first = 0;  // p = 4^k, first = (4^k - 1)/3
    while (first + p <= idx) {
      first += p;
      p *= 4;
    }
    return p + (idx - first);
  }
  std::size_t lower_index(const Int& v, const Getter&) const override { return to_size(*rank(v)); }
  std::optional<Int> ceil_value(const Int& v) const override {
    if (v <= 1) return Int(1);
    Int p = block(v);
    return v < 2 * p ? v : 4 * p;
  }
  std::optional<Int> successor(const Int& c) const override {
    Int p = block(c);
    return c + 1 < 2 * p ? c + 1 : 4 * p;
  }
  std::optional<Int> rank(const Int& v) const override {
    if (v <= 1) return Int(0);
    Int p = block(v);
    return (p - 1) / 3 + std::min(Int(v - p), p);
  }
  std::optional<Int> run_start(const Int& c) const override { return block(c); }
  // only block ends 2*4^k - 1 are followed by gaps (of 2*4^k + 1)
  std::optional<Int> wide_gap_from(const Int& v, const Int& j) const override {
    if (j <= 1) return ceil_value(v);
    Int need = std::max(Int(v + 1), Int(j - 1));  // 2*4^k >= need
    Int p = need <= 2 ? Int(1) : block((need + 1) / 2);
    while (2 * p < need) p *= 4;
    while (p > 1 && 2 * (p / 4) >= need) p /= 4;
    return 2 * p - 1;
  }

 private:
  static Int block(const Int& v) {  // largest 4^k <= v, v >= 1
    auto b = boost::multiprecision::msb(v);
    return Int(1) << (b - b % 2);
  }
};

// Arbitrary user sequence (tests, library callers).
class FunctionGen : public Generator {
 public:
  FunctionGen(std::string name, std::function<Int(std::size_t)> fn, bool gap_promise)
      : name_(std::move(name)), fn_(std::move(fn)), promise_(gap_promise) {}
  std::string expression() const override { return name_; }
  Int at(std::size_t i) const override { return fn_(i); }
  bool gap_promise() const override { return promise_; }

 private:
  std::string name_;
  std::function<Int(std::size_t)> fn_;
  bool promise_;
};

// Memoizing, monotonicity-checking front end shared by all copies of a lazy set.
class LazyState {
 public:
  explicit LazyState(std::shared_ptr<const Generator> g) : gen_(std::move(g)) {}

  const Generator& generator() const { return *gen_; }

  Int at(std::size_t i) const {
    std::lock_guard<std::mutex> lock(mu_);
    return at_locked(i);
  }

  std::size_t lower_index(const Int& v) const {
    std::lock_guard<std::mutex> lock(mu_);
    return gen_->lower_index(v, [this](std::size_t k) { return at_locked(k); });
  }

  Int ceil(const Int& v) const {
    if (auto r = gen_->ceil_value(v)) return *r;
    return at(lower_index(v));
  }
  // c must be an element
  Int succ(const Int& c) const {
    Int n;
    if (auto r = gen_->successor(c))
      n = std::move(*r);
    else
      n = at(lower_index(c) + 1);
    if (n <= c) throw Error("lazy enumerator not strictly increasing after " + abbrev(c) + " (" + gen_->expression() + ")");
    return n;
  }
  Int rank(const Int& v) const {
    if (auto r = gen_->rank(v)) return *r;
    return Int(lower_index(v));
  }
  bool contains(const Int& v) const { return v >= at(0) && ceil(v) == v; }

  std::size_t horizon() const {
    std::lock_guard<std::mutex> lock(mu_);
    return prefix_.size();
  }

  // bounds on the memoized prefix
  static constexpr std::size_t kPrefixCap = std::size_t{1} << 22;
  static constexpr unsigned kPrefixBits = 2048;
  static constexpr std::size_t kSparseCap = 4096;

 private:
  Int at_locked(std::size_t i) const {
    if (i < prefix_.size()) return prefix_[i];
    bool small = prefix_.empty() || boost::multiprecision::msb(abs(prefix_.back()) + 1) < kPrefixBits;
    if (i < kPrefixCap && small && i < prefix_.size() + 65536) {
      if (prefix_.empty()) prefix_.push_back(gen_->at(0));
      while (prefix_.size() <= i) {
        Int v = gen_->next(prefix_.back(), prefix_.size());
        if (v <= prefix_.back())
          throw Error("lazy enumerator not strictly increasing at index " + std::to_string(prefix_.size()) +
                      " (" + gen_->expression() + ")");
        prefix_.push_back(std::move(v));
      }
      return prefix_[i];
    }
    auto it = sparse_.find(i);
    if (it != sparse_.end()) return it->second;
    if (sparse_.size() >= kSparseCap) sparse_.clear();
    Int v = gen_->at(i);
    if (!prefix_.empty() && i >= prefix_.size() && v <= prefix_.back())
      throw Error("lazy enumerator not strictly increasing past horizon (" + gen_->expression() + ")");
    sparse_.emplace(i, v);
    return v;
  }

  std::shared_ptr<const Generator> gen_;
  mutable std::mutex mu_;
  mutable std::vector<Int> prefix_;
  mutable std::map<std::size_t, Int> sparse_;
};

// Sequential walk c_i, c_{i+1}, ... with monotonicity checks and no memo growth.
class LazyCursor {
 public:
  LazyCursor(std::shared_ptr<const LazyState> s, std::size_t start)
      : s_(std::move(s)), i_(start), v_(s_->at(start)) {}
  std::size_t index() const { return i_; }
  const Int& value() const { return v_; }
  void advance() {
    ++i_;
    Int nv = i_ < LazyState::kPrefixCap && i_ < s_->horizon() ? s_->at(i_) : s_->generator().next(v_, i_);
    if (nv <= v_)
      throw Error("lazy enumerator not strictly increasing at index " + std::to_string(i_) + " (" +
                  s_->generator().expression() + ")");
    v_ = std::move(nv);
  }

 private:
  std::shared_ptr<const LazyState> s_;
  std::size_t i_;
  Int v_;
};

}  // namespace mincomp
