#pragma once
// Classifier for eventually periodic sets: does S arise as a minimal complement of some W?

#include "construct.hpp"
#include "ypartition.hpp"

namespace mincomp {

enum class Verdict { RuledOut, NecessaryPass, ArisesCertified, Unknown };
enum class RuleReason { None, DensityCor, PrimeBound, NoYPartition, NoCondition4 };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::RuledOut: return "RuledOut";
    case Verdict::NecessaryPass: return "NecessaryPass";
    case Verdict::ArisesCertified: return "ArisesCertified";
    case Verdict::Unknown: return "Unknown";
  }
  return "?";
}
inline const char* to_string(RuleReason r) {
  switch (r) {
    case RuleReason::None: return "None";
    case RuleReason::DensityCor: return "DensityCor";
    case RuleReason::PrimeBound: return "PrimeBound";
    case RuleReason::NoYPartition: return "NoYPartition";
    case RuleReason::NoCondition4: return "NoCondition4";
  }
  return "?";
}

struct ClassTiling {
  std::int64_t a = 0;
  bool possible = false;
  std::optional<Int> first_uncovered;
};

struct ClassifierVerdict {
  Verdict verdict = Verdict::Unknown;
  RuleReason reason = RuleReason::None;
  DensityCheck density;
  PrimeBoundCheck prime;
  std::optional<NecessaryResult> necessary;
  bool condition4_required = false;
  std::vector<ClassTiling> condition4;
  std::string route;               // construction used for ArisesCertified
  std::optional<IntegerSet> W;
  std::optional<MacReport> report;
  std::vector<std::string> notes;

  bool definitive() const { return verdict == Verdict::RuledOut || verdict == Verdict::ArisesCertified; }
};

struct ClassifyOptions {
  bool certify = true;
  Window window{-30, 30};
  std::int64_t y_cap = kYSearchCap;
};

namespace detail {

inline RayTarget class_gap(const EPSet& S, const Int& a0) {
  RayTarget T{S.m, a0 - S.m, {}};
  for (auto& b : S.B)
    if (mod(b - a0, S.m) == 0) T.holes.push_back(b);
  return T;
}

// 3N ∪ F with F ⊆ 3N+1
inline bool remark_shape(const EPSet& S) {
  if (S.m != 3 || S.A.size() != 1 || S.A[0] != 0 || !S.B.empty() || S.F.empty()) return false;
  for (auto& f : S.F)
    if (f < 0 || mod(f, 3) != 1) return false;
  return true;
}

inline bool suff_shape(const EPSet& S) {
  return is_prime(S.m) && S.m % 3 == 2 && S.F_res().size() == 1 &&
         3 * static_cast<std::int64_t>(S.A_res().size()) == S.m + 1;
}

}  // namespace detail

inline ClassifierVerdict classify(const EPSet& S, const ClassifyOptions& opt = {}) {
  ClassifierVerdict v;
  v.density = check_density_cor(S);
  if (!v.density.pass) {
    v.verdict = Verdict::RuledOut;
    v.reason = RuleReason::DensityCor;
    return v;
  }
  v.prime = check_prime_bound(S);
  if (v.prime.status == PrimeBoundStatus::RuledOut) {
    v.verdict = Verdict::RuledOut;
    v.reason = RuleReason::PrimeBound;
    return v;
  }
  v.necessary = check_necessary(S, opt.y_cap);
  if (!v.necessary->pass) {
    v.verdict = Verdict::RuledOut;
    v.reason = RuleReason::NoYPartition;
    return v;
  }
  v.condition4_required = v.prime.status == PrimeBoundStatus::Pass && v.prime.tight;
  if (v.condition4_required) {
    if (S.F_res().size() != 1) {
      v.verdict = Verdict::Unknown;
      v.notes.push_back("class-by-class tiling with F in several residue classes is not decided");
      return v;
    }
    for (auto& a0 : S.A) {
      auto rep = is_sumset_representable(S.F, detail::class_gap(S, a0));
      v.condition4.push_back({mod(a0, S.m), rep.possible, rep.first_uncovered});
      if (!rep.possible) {
        v.verdict = Verdict::RuledOut;
        v.reason = RuleReason::NoCondition4;
        return v;
      }
    }
  }
  if (!opt.certify) {
    v.verdict = Verdict::NecessaryPass;
    return v;
  }
  if (detail::suff_shape(S) && v.condition4_required) {
    auto r = build_thm_suff(S, *v.necessary, opt.window);
    v.route = S.m == 2 ? "evens-odds" : "thm-suff";
    v.W = r.W;
    v.report = r.report;
  } else if (detail::remark_shape(S)) {
    auto r = build_remark_family(S.F, opt.window);
    v.route = "remark-3N";
    v.W = r.Y;
    v.report = r.report;
    v.notes.push_back("arises, does not have: no set of this form has a minimal complement");
  } else {
    v.verdict = Verdict::Unknown;
    v.notes.push_back("necessary conditions hold; no construction applies");
    return v;
  }
  if (v.report->verdict == MacVerdict::CertifiedOnWindow) {
    v.verdict = Verdict::ArisesCertified;
  } else {
    v.verdict = Verdict::Unknown;
    v.notes.push_back(std::string("construction did not certify: ") + to_string(v.report->verdict));
  }
  return v;
}

}  // namespace mincomp
