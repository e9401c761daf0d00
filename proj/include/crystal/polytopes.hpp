#pragma once

// H-descriptions of the string cone and of the two string polytopes, integer
// point enumeration, and the Weyl dimension and character oracles.

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <numeric>
#include <optional>
#include <set>

#include "crystal/string_crystal.hpp"

namespace crystal {

enum class Relation { ge, le };
enum class SystemKind { cone, bz, nz };

inline std::string to_string(Relation r) { return r == Relation::ge ? ">=" : "<="; }
inline std::string to_string(SystemKind k) {
  switch (k) {
    case SystemKind::cone: return "cone";
    case SystemKind::bz: return "bz";
    case SystemKind::nz: return "nz";
  }
  return "?";
}

struct LinearForm {
  IntVec coeffs;
  Relation relation = Relation::ge;
  long rhs = 0;
  std::string provenance;  // "cone", "bz" or "nz"
  int color = 0;           // 0 when not tied to a color
  int path = -1;           // index into the path set, or the eta position for bz forms

  bool holds(const IntVec& x) const {
    const long v = dot(coeffs, x);
    return relation == Relation::ge ? v >= rhs : v <= rhs;
  }

  std::string str() const {
    std::string out;
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
      const int c = coeffs[k];
      if (c == 0) continue;
      if (!out.empty()) out += c > 0 ? " + " : " - ";
      else if (c < 0) out += "-";
      if (std::abs(c) != 1) out += std::to_string(std::abs(c));
      out += "x" + std::to_string(k + 1);
    }
    if (out.empty()) out = "0";
    return out + " " + to_string(relation) + " " + std::to_string(rhs);
  }
};

class InequalitySystem {
 public:
  InequalitySystem(ReducedWord word, SystemKind kind, IntVec lambda) : word_(std::move(word)), kind_(kind), lambda_(std::move(lambda)) {}

  /// Adds the form unless an equivalent one (same gcd-normalized <= form) is present.
  void add(LinearForm f) {
    auto key = normalized(f);
    if (keys_.insert(std::move(key)).second) forms_.push_back(std::move(f));
  }

  const ReducedWord& word() const noexcept { return word_; }
  SystemKind kind() const noexcept { return kind_; }
  const IntVec& lambda() const noexcept { return lambda_; }
  const std::vector<LinearForm>& forms() const noexcept { return forms_; }

 private:
  static std::pair<IntVec, long> normalized(const LinearForm& f) {
    IntVec c = f.coeffs;
    long b = f.rhs;
    if (f.relation == Relation::ge) {
      for (int& v : c) v = -v;
      b = -b;
    }
    int g = 0;
    for (int v : c) g = std::gcd(g, v);
    if (g > 1 && b % g == 0) {
      for (int& v : c) v /= g;
      b /= g;
    }
    return {c, b};
  }

  ReducedWord word_;
  SystemKind kind_;
  IntVec lambda_;
  std::vector<LinearForm> forms_;
  std::set<std::pair<IntVec, long>> keys_;
};

inline InequalitySystem string_cone_ineqs(const ReducedWord& w) {
  InequalitySystem sys(w, SystemKind::cone, {});
  const auto& ctx = context(w);
  for (int a = 1; a < w.n(); ++a) {
    const auto& ps = ctx.rigorous(a).paths;
    for (std::size_t j = 0; j < ps.size(); ++j) sys.add({ps[j].r(), Relation::ge, 0, "cone", a, static_cast<int>(j)});
  }
  return sys;
}

inline InequalitySystem bz_ineqs(const ReducedWord& w, const IntVec& lambda) {
  const IntVec l = check_lambda(w.n(), lambda);
  InequalitySystem cone = string_cone_ineqs(w);
  InequalitySystem sys(w, SystemKind::bz, l);
  for (const auto& f : cone.forms()) sys.add(f);
  const int len = w.length();
  for (int k = 0; k < len; ++k) {
    IntVec row(len, 0);
    row[k] = 1;
    for (int j = k + 1; j < len; ++j) row[j] = cartan(w.letters()[k], w.letters()[j]);
    sys.add({row, Relation::le, l[w.letters()[k] - 1], "bz", w.letters()[k], k});
  }
  return sys;
}

inline InequalitySystem nz_ineqs(const ReducedWord& w, const IntVec& lambda) {
  const IntVec l = check_lambda(w.n(), lambda);
  InequalitySystem cone = string_cone_ineqs(w);
  InequalitySystem sys(w, SystemKind::nz, l);
  for (const auto& f : cone.forms()) sys.add(f);
  const auto& ctx = context(w);
  for (int a = 1; a < w.n(); ++a) {
    const auto& ps = ctx.crossings(a).paths;
    for (std::size_t j = 0; j < ps.size(); ++j) sys.add({ps[j].r(), Relation::le, l[a - 1], "nz", a, static_cast<int>(j)});
  }
  return sys;
}

inline std::optional<std::size_t> first_violation(const InequalitySystem& sys, const IntVec& x) {
  for (std::size_t j = 0; j < sys.forms().size(); ++j)
    if (!sys.forms()[j].holds(x)) return j;
  return std::nullopt;
}

inline bool satisfies(const InequalitySystem& sys, const IntVec& x) { return !first_violation(sys, x); }

namespace detail {

inline long floor_div(long a, long b) { return a / b - ((a % b != 0) && ((a < 0) != (b < 0))); }
inline long ceil_div(long a, long b) { return -floor_div(-a, b); }

struct PointSearch {
  int len;
  long budget;
  std::vector<std::vector<const LinearForm*>> by_lead;  // forms whose first nonzero coefficient is at k
  IntVec x;
  std::vector<IntVec> out;

  void run(int k, long used) {
    if (k < 0) {
      out.push_back(x);
      return;
    }
    long lo = 0, hi = budget - used;
    for (const LinearForm* f : by_lead[k]) {
      long rest = 0;
      for (int j = k + 1; j < len; ++j) rest += static_cast<long>(f->coeffs[j]) * x[j];
      // c * x_k  (rel)  rhs - rest
      long c = f->coeffs[k], b = f->rhs - rest;
      if (f->relation == Relation::ge) {
        c = -c;
        b = -b;
      }
      if (c > 0) hi = std::min(hi, floor_div(b, c));
      else lo = std::max(lo, ceil_div(b, c));
    }
    for (long v = lo; v <= hi; ++v) {
      x[k] = static_cast<int>(v);
      run(k - 1, used + v);
    }
    x[k] = 0;
  }
};

}  // namespace detail

/// Integer points of the system in N^N with coordinate sum at most the bound. The bound
/// defaults to the height of lambda - w0 lambda for polytopes and must be given for the cone.
inline std::vector<IntVec> lattice_points(const InequalitySystem& sys, std::optional<int> sum_bound = std::nullopt) {
  const int len = sys.word().length();
  long budget;
  if (sum_bound) budget = *sum_bound;
  else if (sys.kind() != SystemKind::cone) budget = depth_bound(sys.word().n(), sys.lambda());
  else throw Error("lattice_points: the string cone is unbounded; give a coordinate-sum bound");
  detail::PointSearch search{len, budget, std::vector<std::vector<const LinearForm*>>(len), IntVec(len, 0), {}};
  for (const auto& f : sys.forms()) {
    int lead = -1;
    for (int k = 0; k < len; ++k)
      if (f.coeffs[k] != 0) {
        lead = k;
        break;
      }
    if (lead < 0) {
      if (!f.holds(IntVec(len, 0))) return {};
      continue;
    }
    search.by_lead[lead].push_back(&f);
  }
  search.run(len - 1, 0);
  std::sort(search.out.begin(), search.out.end());
  return std::move(search.out);
}

/// Weyl dimension formula for sl_n.
inline long long weyl_dim(int n, const IntVec& lambda) {
  const IntVec l = check_lambda(n, lambda);
  using boost::multiprecision::cpp_int;
  cpp_int num = 1, den = 1;
  for (int k = 1; k < n; ++k)
    for (int m = k + 1; m <= n; ++m) {
      int s = m - k;
      for (int j = k; j < m; ++j) s += l[j - 1];
      num *= s;
      den *= m - k;
    }
  if (num % den != 0) throw Error("internal error: Weyl dimension not integral");
  return static_cast<long long>(num / den);
}

/// Multiset of weights lambda - sum x_k alpha_{i_k}, in epsilon coordinates.
inline std::map<Weight, int> character(const std::vector<IntVec>& points, const ReducedWord& w, const IntVec& lambda) {
  std::map<Weight, int> out;
  for (const auto& x : points) ++out[string_weight(w, lambda, x)];
  return out;
}

}  // namespace crystal
