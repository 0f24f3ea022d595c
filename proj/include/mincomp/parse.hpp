#pragma once

#include "intset.hpp"

#include <cctype>
#include <map>
#include <sstream>

namespace mincomp {

struct ParseError : Error {
  std::size_t column;  // 1-based, in the original text
  ParseError(const std::string& msg, std::size_t col)
      : Error("parse error at column " + std::to_string(col) + ": " + msg), column(col) {}
};

namespace detail {

class Parser {
 public:
  explicit Parser(const std::string& text) {
    for (std::size_t i = 0; i < text.size(); ++i) {
      if (std::isspace(static_cast<unsigned char>(text[i]))) continue;
      s_.push_back(text[i]);
      col_.push_back(i + 1);
    }
    col_.push_back(text.size() + 1);
  }

  IntegerSet parse_all() {
    IntegerSet s = expr();
    if (p_ != s_.size()) fail("trailing input");
    return s;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, col_[std::min(p_, s_.size())]); }

  bool eat(const std::string& lit) {
    if (s_.compare(p_, lit.size(), lit) == 0) {
      p_ += lit.size();
      return true;
    }
    return false;
  }
  void expect(const std::string& lit) {
    if (!eat(lit)) fail("expected '" + lit + "'");
  }
  bool at_end() const { return p_ >= s_.size(); }

  Int integer() {
    std::size_t st = p_;
    if (p_ < s_.size() && (s_[p_] == '-' || s_[p_] == '+')) ++p_;
    std::size_t ds = p_;
    while (p_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[p_]))) ++p_;
    if (p_ == ds) {
      p_ = st;
      fail("expected integer");
    }
    std::string t = s_.substr(st, p_ - st);
    if (t[0] == '+') t.erase(0, 1);
    return Int(t);
  }

  std::int64_t small_int() {
    std::size_t st = p_;
    Int v = integer();
    if (v > Int(1) << 40 || v < -(Int(1) << 40)) {
      p_ = st;
      fail("integer out of range");
    }
    return v.convert_to<std::int64_t>();
  }

  Rational rational() {
    bool neg = p_ < s_.size() && s_[p_] == '-';
    Int whole = integer();
    if (eat("/")) {
      std::size_t st = p_;
      Int den = integer();
      if (den <= 0) {
        p_ = st;
        fail("denominator must be positive");
      }
      return Rational(whole, den);
    }
    if (eat(".")) {
      std::size_t ds = p_;
      while (p_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[p_]))) ++p_;
      if (p_ == ds) fail("expected digits after '.'");
      std::string frac = s_.substr(ds, p_ - ds);
      Int den = boost::multiprecision::pow(Int(10), static_cast<unsigned>(frac.size()));
      Int num = Int(frac);
      return Rational(neg ? whole * den - num : whole * den + num, den);
    }
    return Rational(whole);
  }

  std::vector<Int> int_list() {
    std::vector<Int> v;
    if (at_end() || s_[p_] == ';' || s_[p_] == ')') return v;
    v.push_back(integer());
    while (eat(",")) v.push_back(integer());
    return v;
  }

  std::string ident() {
    std::size_t st = p_;
    while (p_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[p_])) || s_[p_] == '_')) ++p_;
    if (p_ == st) fail("expected name");
    return s_.substr(st, p_ - st);
  }

  // key=value;key=value... where every value is an integer list
  std::map<std::string, std::vector<Int>> fields(const std::vector<std::string>& allowed) {
    std::map<std::string, std::vector<Int>> out;
    while (true) {
      std::size_t st = p_;
      std::string k = ident();
      if (std::find(allowed.begin(), allowed.end(), k) == allowed.end()) {
        p_ = st;
        fail("unknown key '" + k + "'");
      }
      if (out.count(k)) {
        p_ = st;
        fail("duplicate key '" + k + "'");
      }
      expect("=");
      out[k] = int_list();
      if (!eat(";")) break;
      if (at_end()) break;
    }
    return out;
  }

  static std::int64_t one_small(const std::vector<Int>& v, const char* what, std::size_t col) {
    if (v.size() != 1) throw ParseError(std::string(what) + " needs exactly one value", col);
    if (v[0] > Int(1) << 40 || v[0] < -(Int(1) << 40)) throw ParseError(std::string(what) + " out of range", col);
    return v[0].convert_to<std::int64_t>();
  }

  IntegerSet expr() {
    std::size_t st = p_;
    if (eat("fin:")) return IntegerSet::finite(int_list());
    if (eat("ep:")) {
      std::size_t c = col_[p_];
      auto f = fields({"m", "A", "B", "F"});
      if (!f.count("m") || !f.count("A")) throw ParseError("ep: needs m and A", c);
      std::int64_t m = one_small(f["m"], "m", c);
      if (m <= 0) throw ParseError("ep: m must be positive", c);
      if (f["A"].empty()) throw ParseError("ep: A must be nonempty", c);
      return IntegerSet::ep(ep_canonicalize(m, f["A"], f["B"], f["F"]));
    }
    if (eat("per:")) {
      std::size_t c = col_[p_];
      auto f = fields({"m", "R"});
      if (!f.count("m") || !f.count("R")) throw ParseError("per: needs m and R", c);
      std::int64_t m = one_small(f["m"], "m", c);
      if (m <= 0) throw ParseError("per: m must be positive", c);
      std::vector<std::int64_t> r;
      for (auto& x : f["R"]) r.push_back(mod(x, m));
      return IntegerSet::from_shape(periodic_shape(m, r));
    }
    if (eat("ts:")) {
      std::size_t c = col_[p_];
      auto f = fields({"m", "L", "H", "lo", "hi", "M"});
      if (!f.count("m") || !f.count("lo") || !f.count("hi")) throw ParseError("ts: needs m, lo, hi", c);
      TwoSidedSet t;
      t.m = one_small(f["m"], "m", c);
      if (t.m <= 0) throw ParseError("ts: m must be positive", c);
      t.low.assign(t.m, false);
      t.high.assign(t.m, false);
      for (auto& x : f["L"]) t.low[mod(x, t.m)] = true;
      for (auto& x : f["H"]) t.high[mod(x, t.m)] = true;
      if (f["lo"].size() != 1 || f["hi"].size() != 1) throw ParseError("ts: lo/hi need one value", c);
      t.lo_cut = f["lo"][0];
      t.hi_cut = f["hi"][0];
      t.mid = f["M"];
      if (t.lo_cut > t.hi_cut + 1) throw ParseError("ts: lo > hi + 1", c);
      for (auto& x : t.mid)
        if (x < t.lo_cut || x > t.hi_cut) throw ParseError("ts: M element outside [lo,hi]", c);
      return IntegerSet::from_shape(t);
    }
    if (eat("interval-union:")) {
      expect("2^2k..2^2k+1");
      return IntegerSet::lazy(std::make_shared<IntervalUnionGen>());
    }
    if (eat("shift(")) {
      Int t = integer();
      expect(",");
      IntegerSet inner = expr();
      expect(")");
      return translate(inner, t);
    }
    if (eat("gen:")) return generator();
    p_ = st;
    fail("expected one of fin:, ep:, per:, ts:, gen:, interval-union:, shift(");
  }

  IntegerSet generator() {
    std::size_t st = p_;
    std::string name = ident();
    std::map<std::string, Rational> args;
    if (eat("(")) {
      if (!eat(")")) {
        while (true) {
          std::string k = ident();
          expect("=");
          args[k] = rational();
          if (eat(")")) break;
          expect(",");
        }
      }
    }
    auto need_int = [&](const std::string& k, const Rational& dflt) -> Int {
      Rational v = args.count(k) ? args[k] : dflt;
      if (boost::multiprecision::denominator(v) != 1) throw ParseError(k + " must be an integer", col_[st]);
      return boost::multiprecision::numerator(v);
    };
    auto check_keys = [&](std::initializer_list<const char*> ok) {
      for (auto& [k, v] : args) {
        bool good = false;
        for (auto* o : ok) good = good || k == o;
        if (!good) throw ParseError("unknown argument '" + k + "' for " + name, col_[st]);
      }
    };
    if (name == "pow2") {
      check_keys({});
      return IntegerSet::lazy(std::make_shared<PowerGen>(2));
    }
    if (name == "pow3") {
      check_keys({});
      return IntegerSet::lazy(std::make_shared<PowerGen>(3));
    }
    if (name == "powers") {
      check_keys({"base"});
      Int b = need_int("base", 2);
      if (b < 2 || b > 1'000'000) throw ParseError("powers: base out of range", col_[st]);
      return IntegerSet::lazy(std::make_shared<PowerGen>(b.convert_to<std::int64_t>()));
    }
    if (name == "mersenne") {
      check_keys({});
      return IntegerSet::lazy(std::make_shared<MersenneGen>());
    }
    if (name == "squares" || name == "cubes") {
      check_keys({});
      return IntegerSet::lazy(std::make_shared<PolyGen>(name == "squares" ? 2 : 3));
    }
    if (name == "lacunary") {
      check_keys({"lambda", "start"});
      Rational lam = args.count("lambda") ? args["lambda"] : Rational(2);
      Int start = need_int("start", 1);
      if (lam <= 1) throw ParseError("lacunary: lambda must exceed 1", col_[st]);
      if (start < 1) throw ParseError("lacunary: start must be positive", col_[st]);
      return IntegerSet::lazy(std::make_shared<LacunaryGen>(lam, start));
    }
    p_ = st;
    fail("unknown generator '" + name + "'");
  }

  std::string s_;
  std::vector<std::size_t> col_;
  std::size_t p_ = 0;
};

inline std::string join(const std::vector<Int>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + v[i].str();
  return out;
}

inline std::string join_res(const std::vector<bool>& pat) {
  std::string out;
  for (std::size_t r = 0; r < pat.size(); ++r)
    if (pat[r]) out += (out.empty() ? "" : ",") + std::to_string(r);
  return out;
}

}  // namespace detail

inline IntegerSet parse_set_expression(const std::string& text) { return detail::Parser(text).parse_all(); }

inline std::string print(const IntegerSet& s) {
  using detail::join;
  switch (s.kind()) {
    case IntegerSet::Kind::Finite:
      return "fin:" + join(s.elements());
    case IntegerSet::Kind::EP: {
      const auto& e = s.ep();
      std::string out = "ep:m=" + std::to_string(e.m) + ";A=" + join(e.A);
      if (!e.B.empty()) out += ";B=" + join(e.B);
      if (!e.F.empty()) out += ";F=" + join(e.F);
      return out;
    }
    case IntegerSet::Kind::Lazy:
      return s.lazy_state()->generator().expression();
    case IntegerSet::Kind::TwoSided: {
      const auto& t = s.shape();
      if (t.low == t.high && t.mid.empty()) return "per:m=" + std::to_string(t.m) + ";R=" + detail::join_res(t.low);
      return "ts:m=" + std::to_string(t.m) + ";L=" + detail::join_res(t.low) + ";H=" + detail::join_res(t.high) +
             ";lo=" + t.lo_cut.str() + ";hi=" + t.hi_cut.str() + ";M=" + join(t.mid);
    }
  }
  return {};
}

}  // namespace mincomp
