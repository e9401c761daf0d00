#pragma once

// Bundled verification suites. Each suite runs a family of checks over all
// reduced words of small rank and reports pass/fail with counterexamples.

#include <chrono>
#include <deque>
#include <random>

#include "crystal/json.hpp"

namespace crystal::verify {

struct Config {
  int n = 3;           // exhaustive suites cover ranks 3..min(n,4); n = 5 selects the smoke subset
  int lambda_cap = 2;  // dominant weights with entries 0..cap
  Options opt;
  unsigned seed = 20240601;
  int sampled_words = 200;
  int psi_points = 1000;
};

struct Check {
  std::string name;
  long checked = 0;
  long failed = 0;
  std::vector<std::string> counterexamples;  // first five

  bool passed() const { return failed == 0 && checked > 0; }

  template <class Describe>
  void record(bool ok, Describe&& describe) {
    ++checked;
    if (ok) return;
    ++failed;
    if (counterexamples.size() < 5) counterexamples.push_back(describe());
  }
};

struct SuiteReport {
  std::string suite;
  std::deque<Check> checks;  // stable references while checks are added
  double seconds = 0;

  Check& check(const std::string& name) {
    for (auto& c : checks)
      if (c.name == name) return c;
    checks.push_back({name});
    return checks.back();
  }
  bool passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed(); });
  }
};

namespace detail {

inline std::string vec(const IntVec& x) { return "(" + join(x) + ")"; }
inline std::string at(const ReducedWord& w, const IntVec& x) { return "word " + w.str() + " x=" + vec(x); }

inline std::vector<int> exhaustive_ranks(const Config& cfg) {
  std::vector<int> out;
  for (int n = 3; n <= std::min(cfg.n, 4); ++n) out.push_back(n);
  return out;
}

inline std::vector<IntVec> weights_up_to(int n, int cap) {
  std::vector<IntVec> out{IntVec(n - 1, 0)};
  for (int k = 0; k < n - 1; ++k) {
    std::vector<IntVec> next;
    for (const auto& l : out)
      for (int v = 0; v <= cap; ++v) {
        IntVec m = l;
        m[k] = v;
        next.push_back(m);
      }
    out = std::move(next);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline int height(const IntVec& x) { return std::accumulate(x.begin(), x.end(), 0); }

// Cone lattice points of coordinate sum at most the bound, memoized per word.
class ConeCache {
 public:
  const std::vector<IntVec>& points(const ReducedWord& w, int bound) {
    auto& entry = map_[w];
    if (entry.first < bound || entry.second.empty()) entry = {bound, lattice_points(string_cone_ineqs(w), bound)};
    return entry.second;
  }
  std::vector<IntVec> points_within(const ReducedWord& w, int bound) {
    std::vector<IntVec> out;
    for (const auto& x : points(w, bound))
      if (height(x) <= bound) out.push_back(x);
    return out;
  }

 private:
  std::map<ReducedWord, std::pair<int, std::vector<IntVec>>> map_;
};

inline int max_depth(int n, int cap) { return depth_bound(n, IntVec(n - 1, cap)); }

inline std::vector<ReducedWord> sampled_words(int n, int count, unsigned seed) {
  auto all = enumerate_words(n);
  std::mt19937 rng(seed);
  std::vector<ReducedWord> out;
  std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
  for (int t = 0; t < count; ++t) out.push_back(all[pick(rng)]);
  return out;
}

// Reduced words of w0 by direct backtracking: append s_i whenever it lengthens the word.
inline std::set<std::vector<int>> backtrack_words(int n) {
  std::set<std::vector<int>> out;
  std::vector<int> perm(n), letters;
  std::iota(perm.begin(), perm.end(), 1);
  const int len = positive_root_count(n);
  std::function<void()> rec = [&] {
    if (static_cast<int>(letters.size()) == len) {
      out.insert(letters);
      return;
    }
    for (int i = 1; i < n; ++i) {
      if (perm[i - 1] > perm[i]) continue;
      std::swap(perm[i - 1], perm[i]);
      letters.push_back(i);
      rec();
      letters.pop_back();
      std::swap(perm[i - 1], perm[i]);
    }
  };
  rec();
  return out;
}

inline std::optional<CrossingPath> find_path(const CrossingSet& set, const IntVec& positions, const IntVec& arrivals) {
  for (const auto& g : set.paths)
    if (g.positions() == positions && g.arrival_wires() == arrivals) return g;
  return std::nullopt;
}

}  // namespace detail

class Runner {
 public:
  explicit Runner(Config cfg) : cfg_(std::move(cfg)) {}

  static const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"paper-example", "intro-formula", "words",         "order",           "fs-identity",
                                                "s-sums",        "wt-identity",   "levels",        "dimensions",      "nz-membership",
                                                "graphs",        "axioms",        "psi-coherence", "route-agreement", "star",
                                                "tensor-oracle"};
    return names;
  }

  static bool smoke_suite(const std::string& s) {
    return s == "paper-example" || s == "fs-identity" || s == "s-sums" || s == "wt-identity" || s == "levels";
  }

  /// Suites run by "all" at this configuration.
  std::vector<std::string> plan(const std::string& suite) const {
    if (suite != "all") {
      if (std::find(suite_names().begin(), suite_names().end(), suite) == suite_names().end())
        throw Error("unknown suite " + suite);
      if (cfg_.n >= 5 && !smoke_suite(suite)) throw Error("suite " + suite + " supports n <= 4");
      return {suite};
    }
    std::vector<std::string> out;
    for (const auto& s : suite_names())
      if (cfg_.n <= 4 || smoke_suite(s)) out.push_back(s);
    return out;
  }

  SuiteReport run(const std::string& suite) {
    if (cfg_.n < 2 || cfg_.n > 5) throw Error("verify supports 2 <= n <= 5");
    if (cfg_.lambda_cap < 0) throw Error("lambda cap must be nonnegative");
    SuiteReport rep{suite, {}, 0};
    const auto start = std::chrono::steady_clock::now();
    if (suite == "paper-example") worked_example(rep);
    else if (suite == "intro-formula") intro_formula(rep);
    else if (suite == "words") words(rep);
    else if (suite == "order") order(rep);
    else if (suite == "fs-identity") fs_identity(rep);
    else if (suite == "s-sums") s_sums(rep);
    else if (suite == "wt-identity") wt_identity(rep);
    else if (suite == "levels") levels(rep);
    else if (suite == "dimensions") dimensions(rep);
    else if (suite == "nz-membership") nz_membership(rep);
    else if (suite == "graphs") graphs(rep);
    else if (suite == "axioms") axioms(rep);
    else if (suite == "psi-coherence") psi_coherence(rep);
    else if (suite == "route-agreement") route_agreement(rep);
    else if (suite == "star") star(rep);
    else if (suite == "tensor-oracle") tensor_oracle(rep);
    else throw Error("unknown suite " + suite);
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rep;
  }

 private:
  // Exhaustive words for ranks up to 4, plus sampled words at n = 5.
  std::vector<ReducedWord> identity_words() const {
    std::vector<ReducedWord> out;
    for (int n : detail::exhaustive_ranks(cfg_))
      for (auto& w : enumerate_words(n)) out.push_back(w);
    if (cfg_.n == 5)
      for (auto& w : detail::sampled_words(5, cfg_.sampled_words, cfg_.seed)) out.push_back(w);
    return out;
  }

  // Any structure check that throws is recorded as a failure of that check.
  template <class Body>
  void guarded(Check& c, const std::string& where, Body&& body) {
    try {
      body();
    } catch (const std::exception& ex) {
      c.record(false, [&] { return where + ": " + ex.what(); });
    }
  }

  void worked_example(SuiteReport& rep) {
    const ReducedWord w = parse_word("2,1,2,3,4,3,2,1,3,2");
    const auto& ctx = context(w);
    auto& words = rep.check("word is reduced for w0 with n=5");
    words.record(w.n() == 5 && permutation_of(w) == Permutation::longest(5), [] { return "permutation mismatch"; });

    auto& refl = rep.check("reflection ordering prefix");
    const auto ord = reflection_ordering(w);
    const std::vector<Inversion> expected{{2, 3}, {1, 3}, {1, 2}, {1, 4}, {1, 5}, {4, 5}, {2, 5}, {3, 5}, {2, 4}, {3, 4}};
    refl.record(ord == expected, [&] {
      std::string s;
      for (const auto& inv : ord) s += to_string(inv);
      return "got " + s;
    });
    auto& vertex = rep.check("first vertex labels");
    const Vertex& v1 = ctx.diagram().vertex(1);
    vertex.record(v1.inversion == Inversion{2, 3} && v1.level == 1, [&] { return "vertex 1 is " + to_string(v1.inversion); });

    auto& path = rep.check("path through v32 v31 v12 v25 v24 v45 v41");
    auto& turn = rep.check("turning points v31 v12 v24");
    auto& rv = rep.check("r vector");
    auto& sv = rep.check("s vector");
    auto& prec = rep.check("gamma' precedes gamma");
    auto& count = rep.check("all color 3 paths valid");
    const auto& set = ctx.crossings(3);
    for (const auto& g : set.paths) count.record(!validate_path(ctx.diagram(), g), [&] { return "invalid path " + detail::vec(g.positions()); });
    const auto gamma = detail::find_path(set, {1, 2, 3, 7, 9, 6, 4}, {3, 3, 1, 2, 2, 4, 4});
    path.record(gamma.has_value(), [] { return "path missing from the color 3 crossings"; });
    if (!gamma) return;
    std::vector<std::pair<int, int>> labels;
    for (int s = 0; s < gamma->length(); ++s)
      if (gamma->turning()[s]) labels.emplace_back(gamma->steps()[s].arrival_wire, gamma->steps()[s].other_wire);
    turn.record(labels == std::vector<std::pair<int, int>>{{3, 1}, {1, 2}, {2, 4}}, [&] { return "turning positions " + detail::vec(turning_points(*gamma)); });
    rv.record(gamma->r() == IntVec{0, -1, 1, 0, 0, 0, 0, 0, 1, 0}, [&] { return "r = " + detail::vec(gamma->r()); });
    sv.record(gamma->s() == IntVec{-1, 0, 0, 1, 0, -1, 1, 0, 1, 0}, [&] { return "s = " + detail::vec(gamma->s()); });
    const auto gprime = detail::find_path(set, {1, 3, 4}, {3, 2, 1});
    prec.record(gprime && precedes(ctx.geometry(), *gprime, *gamma), [] { return "gamma' missing or not below gamma"; });
  }

  void intro_formula(SuiteReport& rep) {
    const ReducedWord w = parse_word("1,2,1");
    const IntVec lambda{2, 2};
    auto& size = rep.check("27 lattice points");
    auto& f = rep.check("f2 two-branch formula");
    auto& gate = rep.check("f2 undefined exactly when phi2 = 0");
    const auto pts = lattice_points(bz_ineqs(w, lambda));
    size.record(pts.size() == 27, [&] { return std::to_string(pts.size()) + " points"; });
    for (const auto& x : pts) {
      const auto y = bz_f(w, lambda, x, 2);
      const int phi = bz_phi(w, lambda, x, 2);
      gate.record((phi > 0) == y.has_value(), [&] { return detail::at(w, x); });
      if (phi <= 0) continue;
      const IntVec expect = x[0] <= x[1] - x[2] ? IntVec{x[0], x[1] + 1, x[2]} : IntVec{x[0] - 1, x[1] + 1, x[2] + 1};
      f.record(y == expect, [&] { return detail::at(w, x) + " gives " + (y ? detail::vec(*y) : "0") + ", expected " + detail::vec(expect); });
    }
  }

  void words(SuiteReport& rep) {
    auto& closure = rep.check("move closure equals backtracking enumeration");
    auto& reduced = rep.check("enumerated words are reduced");
    auto& refl = rep.check("reflection ordering is a reflection ordering");
    auto& moves = rep.check("moves preserve reducedness and are involutive");
    auto& paths = rep.check("move paths replay");
    auto& perm = rep.check("permutations");
    perm.record(permutation_of(parse_word("1,2,1")).images() == std::vector<int>{3, 2, 1}, [] { return "(1,2,1)"; });
    perm.record(permutation_of(parse_word("1")).images() == std::vector<int>{2, 1}, [] { return "(1)"; });
    perm.record(!is_reduced_longest(3, std::vector<int>{1, 1, 2}), [] { return "(1,1,2) accepted"; });
    for (int n = 2; n <= std::max(3, std::min(cfg_.n, 4)); ++n) {
      const auto ws = enumerate_words(n);
      std::set<std::vector<int>> got;
      for (const auto& w : ws) got.insert(w.letters());
      closure.record(got == detail::backtrack_words(n), [&] { return "n=" + std::to_string(n); });
      for (const auto& w : ws) {
        reduced.record(is_reduced_longest(n, w.letters()), [&] { return w.str(); });
        const auto ord = reflection_ordering(w);
        std::map<Inversion, int> index;
        for (std::size_t k = 0; k < ord.size(); ++k) index[ord[k]] = static_cast<int>(k);
        bool ok = static_cast<int>(index.size()) == positive_root_count(n);
        for (int p = 1; p <= n && ok; ++p)
          for (int q = p + 1; q <= n && ok; ++q)
            for (int r = q + 1; r <= n && ok; ++r) {
              const int i = index[{p, q}], j = index[{p, r}], k = index[{q, r}];
              ok = (i < j && j < k) || (k < j && j < i);
            }
        refl.record(ok, [&] { return w.str(); });
        for (const auto& m : applicable_moves(w.letters())) {
          bool good = false;
          try {
            const ReducedWord v = apply_move(w, m);
            good = apply_move(v, m) == w;
          } catch (const Error&) {
          }
          moves.record(good, [&] { return w.str() + " " + to_string(m); });
        }
      }
      for (const auto& w1 : ws)
        for (const auto& w2 : ws) {
          ReducedWord cur = w1;
          for (const auto& m : move_path(w1, w2)) cur = apply_move(cur, m);
          paths.record(cur == w2, [&] { return w1.str() + " -> " + w2.str(); });
        }
    }
  }

  void order(SuiteReport& rep) {
    auto& refl = rep.check("reflexive");
    auto& anti = rep.check("antisymmetric");
    auto& trans = rep.check("transitive");
    auto& valid = rep.check("paths pass the independent validator");
    auto& nonempty = rep.check("path sets nonempty");
    for (int n : detail::exhaustive_ranks(cfg_))
      for (const auto& w : enumerate_words(n)) {
        const auto& ctx = context(w);
        for (int a = 1; a < n; ++a)
          for (const CrossingSet* set : {&ctx.crossings(a), &ctx.rigorous(a)}) {
            const std::size_t m = set->paths.size();
            nonempty.record(m > 0, [&] { return w.str() + " color " + std::to_string(a); });
            for (std::size_t i = 0; i < m; ++i) {
              valid.record(!validate_path(ctx.diagram(), set->paths[i]), [&] { return w.str() + " path " + detail::vec(set->paths[i].positions()); });
              refl.record(precedes(ctx.geometry(), set->paths[i], set->paths[i]), [&] { return w.str(); });
              for (std::size_t j = 0; j < m; ++j) {
                if (i != j) anti.record(!(set->order[i][j] && set->order[j][i]), [&] { return w.str() + " color " + std::to_string(a); });
                for (std::size_t k = 0; k < m; ++k)
                  if (set->order[i][j] && set->order[j][k])
                    trans.record(set->order[i][k], [&] { return w.str() + " color " + std::to_string(a); });
              }
            }
          }
      }
  }

  void fs_identity(SuiteReport& rep) {
    auto& c = rep.check("r = F(s) on every crossing");
    for (const auto& w : identity_words()) {
      const auto& ctx = context(w);
      for (int a = 1; a < w.n(); ++a)
        for (const auto& g : ctx.crossings(a).paths)
          c.record(g.r() == F_map(w, g.s()), [&] { return w.str() + " color " + std::to_string(a) + " path " + detail::vec(g.positions()); });
    }
  }

  void s_sums(SuiteReport& rep) {
    auto& c = rep.check("letter sums of s are delta_ab");
    for (const auto& w : identity_words()) {
      const auto& ctx = context(w);
      for (int a = 1; a < w.n(); ++a)
        for (const auto& g : ctx.crossings(a).paths)
          for (int b = 1; b < w.n(); ++b) {
            int sum = 0;
            for (int k = 0; k < w.length(); ++k)
              if (w.letters()[k] == b) sum += g.s()[k];
            c.record(sum == (a == b ? 1 : 0), [&] { return w.str() + " color " + std::to_string(a) + " letter " + std::to_string(b); });
          }
    }
  }

  void wt_identity(SuiteReport& rep) {
    auto& c = rep.check("<G(x), s> - <x, r> = wt(x)(h_a)");
    std::mt19937 rng(cfg_.seed + 1);
    std::uniform_int_distribution<int> lam(0, std::max(1, cfg_.lambda_cap));
    for (const auto& w : identity_words()) {
      const auto& ctx = context(w);
      for (int t = 0; t < 10; ++t) {
        const IntVec x = random_cone_point(w, rng, 1 + t);
        IntVec lambda(w.rank());
        for (int& v : lambda) v = lam(rng);
        const IntVec gx = sub(lambda_bar(w, lambda), F_map(w, x));
        for (int a = 1; a < w.n(); ++a)
          for (const auto& g : ctx.crossings(a).paths) {
            const long diff = dot(gx, g.s()) - dot(x, g.r());
            c.record(diff == wt_pairing(w, lambda, x, a), [&] { return detail::at(w, x) + " lambda " + detail::vec(lambda) + " color " + std::to_string(a); });
          }
      }
    }
  }

  void levels(SuiteReport& rep) {
    auto& c = rep.check("level change equals s at every step");
    auto& ends = rep.check("levels a at entry and a+1 at exit");
    for (const auto& w : identity_words()) {
      const auto& ctx = context(w);
      for (int a = 1; a < w.n(); ++a)
        for (const auto& g : ctx.crossings(a).paths) {
          for (int s = 0; s < g.length(); ++s)
            c.record(level_out(ctx.diagram(), g, s) - level_in(ctx.diagram(), g, s) == g.s()[g.steps()[s].position - 1],
                     [&] { return w.str() + " color " + std::to_string(a) + " step " + std::to_string(s + 1); });
          ends.record(level_in(ctx.diagram(), g, 0) == a && level_out(ctx.diagram(), g, g.length() - 1) == a + 1,
                      [&] { return w.str() + " color " + std::to_string(a) + " path " + detail::vec(g.positions()); });
        }
    }
  }

  void dimensions(SuiteReport& rep) {
    auto& card = rep.check("|BZ| = |NZ| = Weyl dimension");
    auto& spot = rep.check("spot dimensions");
    auto& chars = rep.check("BZ and NZ characters agree and do not depend on the word");
    auto& bzdef = rep.check("BZ inequalities match eta <= lambda on cone points");
    auto& closure = rep.check("f images stay in the polytopes");
    auto& cone = rep.check("cone points of height <= d are the B(infinity) elements of depth <= d");
    auto& hw = rep.check("highest weight has multiplicity one");
    spot.record(weyl_dim(3, {1, 1}) == 8 && weyl_dim(3, {1, 0}) == 3 && weyl_dim(4, {1, 1, 1}) == 64, [] { return "weyl_dim"; });
    spot.record(lattice_points(bz_ineqs(parse_word("1,2,1"), {1, 1})).size() == 8, [] { return "bz (1,2,1) (1,1)"; });
    spot.record(lattice_points(nz_ineqs(parse_word("1,2,1"), {1, 0})).size() == 3, [] { return "nz (1,2,1) (1,0)"; });
    for (int n : detail::exhaustive_ranks(cfg_)) {
      const int depth = n == 3 ? 6 : 4;
      std::map<IntVec, std::map<Weight, int>> reference;
      for (const auto& w : enumerate_words(n)) {
        guarded(cone, w.str(), [&] {
          auto g = generate_graph(structures::binf(w), std::nullopt, depth);
          auto gs = generate_graph(structures::star(w), std::nullopt, depth);
          const auto pts = cones_.points_within(w, depth);
          cone.record(g.nodes == pts && gs.nodes == pts, [&] { return w.str(); });
        });
        const auto& cpts = cones_.points(w, detail::max_depth(n, cfg_.lambda_cap));
        for (const auto& lambda : detail::weights_up_to(n, cfg_.lambda_cap)) {
          const auto bz = lattice_points(bz_ineqs(w, lambda));
          const auto nz = lattice_points(nz_ineqs(w, lambda));
          const long long dim = weyl_dim(n, lambda);
          const std::string where = w.str() + " lambda " + detail::vec(lambda);
          card.record(static_cast<long long>(bz.size()) == dim && static_cast<long long>(nz.size()) == dim,
                      [&] { return where + ": " + std::to_string(bz.size()) + ", " + std::to_string(nz.size()) + " vs " + std::to_string(dim); });
          const auto cb = character(bz, w, lambda), cn = character(nz, w, lambda);
          auto [it, fresh] = reference.emplace(lambda, cb);
          chars.record(cb == cn && it->second == cb, [&] { return where; });
          hw.record(cb.count(dominant_weight(n, lambda)) && cb.at(dominant_weight(n, lambda)) == 1, [&] { return where; });
          std::vector<IntVec> filtered;
          const int bound = depth_bound(n, lambda);
          for (const auto& x : cpts) {
            if (detail::height(x) > bound) continue;
            const IntVec e = eta(w, x);
            bool ok = true;
            for (int k = 0; k < w.length() && ok; ++k) ok = e[k] <= lambda[w.letters()[k] - 1];
            if (ok) filtered.push_back(x);
          }
          bzdef.record(filtered == bz, [&] { return where; });
          const std::set<IntVec> bzs(bz.begin(), bz.end()), nzs(nz.begin(), nz.end());
          for (int a = 1; a < n; ++a) {
            for (const auto& x : bz) {
              auto y = bz_f(w, lambda, x, a);
              closure.record(!y || bzs.contains(*y), [&] { return "bz " + where + " x " + detail::vec(x); });
            }
            for (const auto& x : nz) {
              auto y = nz_f(w, lambda, x, a, cfg_.opt);
              closure.record(!y || nzs.contains(*y), [&] { return "nz " + where + " x " + detail::vec(x); });
            }
          }
        }
      }
    }
  }

  void nz_membership(SuiteReport& rep) {
    auto& defn = rep.check("NZ inequalities match eps* <= lambda on cone points");
    auto& graph = rep.check("NZ inequalities match the NZ crystal graph");
    for (int n : detail::exhaustive_ranks(cfg_))
      for (const auto& w : enumerate_words(n)) {
        const auto& cpts = cones_.points(w, detail::max_depth(n, cfg_.lambda_cap));
        for (const auto& lambda : detail::weights_up_to(n, cfg_.lambda_cap)) {
          const std::string where = w.str() + " lambda " + detail::vec(lambda);
          const auto nz = lattice_points(nz_ineqs(w, lambda));
          std::vector<IntVec> filtered;
          const int bound = depth_bound(n, lambda);
          for (const auto& x : cpts) {
            if (detail::height(x) > bound) continue;
            bool ok = true;
            for (int a = 1; a < n && ok; ++a) ok = eps_star(w, x, a) <= lambda[a - 1];
            if (ok) filtered.push_back(x);
          }
          defn.record(filtered == nz, [&] { return where; });
          guarded(graph, where, [&] { graph.record(generate_graph(structures::nz(w, lambda, cfg_.opt)).nodes == nz, [&] { return where; }); });
        }
      }
  }

  void graphs(SuiteReport& rep) {
    auto& route = rep.check("crossing formula graph equals the Psi-route graph");
    auto& lus = rep.check("crossing formula graph equals the G-conjugated Lusztig graph");
    auto& nodes = rep.check("graph vertices are the polytope points");
    auto& iso = rep.check("BZ and NZ graphs are isomorphic crystals");
    auto& lsize = rep.check("Lusztig graph has Weyl dimension many vertices");
    auto note = [](Check& c, const GraphReport& r, const std::string& where) {
      c.record(r.equal, [&] { return where + ": " + (r.discrepancies.empty() ? std::string("?") : r.discrepancies.front()); });
    };
    for (int n : detail::exhaustive_ranks(cfg_))
      for (const auto& w : enumerate_words(n))
        for (const auto& lambda : detail::weights_up_to(n, cfg_.lambda_cap)) {
          const std::string where = w.str() + " lambda " + detail::vec(lambda);
          guarded(route, where, [&] {
            const auto g1 = generate_graph(structures::bz(w, lambda, cfg_.opt));
            const auto g2 = generate_graph(structures::bz_via_lusztig(w, lambda));
            const auto g3 = generate_graph(structures::bz_psi_route(w, lambda, cfg_.opt));
            note(route, compare_graphs(g1, g3), where);
            note(lus, compare_graphs(g1, g2), where);
            nodes.record(g1.nodes == lattice_points(bz_ineqs(w, lambda)), [&] { return where; });
            const auto gn = generate_graph(structures::nz(w, lambda, cfg_.opt));
            iso.record(canonical_isomorphism(g1, gn).has_value(), [&] { return where; });
            const auto gl = generate_graph(structures::lusztig(w, lambda, cfg_.opt));
            lsize.record(static_cast<long long>(gl.nodes.size()) == weyl_dim(n, lambda), [&] { return where; });
          });
        }
  }

  void axioms(SuiteReport& rep) {
    auto& fin = rep.check("axioms on B(lambda) structures");
    auto& inf = rep.check("axioms on B(infinity) structures, depth bounded");
    auto run = [&](Check& c, const CrystalStructure& s, std::optional<int> depth, const std::string& where) {
      guarded(c, where + " " + s.name, [&] {
        const auto g = generate_graph(s, std::nullopt, depth);
        const auto r = check_axioms(s, g);
        c.record(r.equal, [&] { return where + " " + s.name + ": " + r.discrepancies.front(); });
      });
    };
    for (int n : detail::exhaustive_ranks(cfg_))
      for (const auto& w : enumerate_words(n)) {
        const int depth = n == 3 ? 6 : 4;
        for (const auto& s : {structures::binf(w), structures::binf_tensor(w), structures::star(w, cfg_.opt),
                              structures::star_psi_route(w, cfg_.opt), structures::lusztig(w, std::nullopt, cfg_.opt),
                              structures::lusztig_phi_route(w)})
          run(inf, s, depth, w.str());
        for (const auto& lambda : detail::weights_up_to(n, cfg_.lambda_cap)) {
          const std::string where = w.str() + " lambda " + detail::vec(lambda);
          for (const auto& s : {structures::bz(w, lambda, cfg_.opt), structures::bz_psi_route(w, lambda, cfg_.opt),
                                structures::bz_via_lusztig(w, lambda), structures::nz(w, lambda, cfg_.opt),
                                structures::nz_tensor(w, lambda), structures::lusztig(w, lambda, cfg_.opt)})
            run(fin, s, std::nullopt, where);
        }
      }
  }

  void psi_coherence(SuiteReport& rep) {
    auto& invol = rep.check("3-move map is involutive on cone points");
    auto& round = rep.check("psi(w2,w1) o psi(w1,w2) = id");
    auto& compose = rep.check("psi(w1,w3) = psi(w2,w3) o psi(w1,w2)");
    auto& transp = rep.check("transport consistency of B(infinity) string data");
    auto& example = rep.check("psi example (2,3,1)");
    guarded(example, "example", [&] {
      example.record(psi(parse_word("1,2,1"), parse_word("2,1,2"), {2, 3, 1}, cfg_.opt) == IntVec{1, 3, 2}, [] { return "(2,3,1)"; });
    });
    std::mt19937 rng(cfg_.seed + 2);
    for (int n : detail::exhaustive_ranks(cfg_)) {
      const auto ws = enumerate_words(n);
      for (const auto& w : ws) {
        for (const auto& m : applicable_moves(w.letters())) {
          if (m.kind != MoveKind::three) continue;
          for (int t = 0; t < 50; ++t) {
            const IntVec x = random_cone_point(w, rng, t % 12);
            const IntVec y = psi_move(w.letters(), m, x, cfg_.opt.psi);
            invol.record(psi_move(apply_move_letters(w.letters(), m), m, y, cfg_.opt.psi) == x, [&] { return detail::at(w, x) + " " + to_string(m); });
          }
        }
        std::vector<IntVec> pts;
        for (int t = 0; t < cfg_.psi_points; ++t) pts.push_back(random_cone_point(w, rng, t % 16));
        for (const auto& v : ws)
          for (const auto& x : pts) {
            bool ok = false;
            try {
              ok = psi(v, w, psi(w, v, x, cfg_.opt), cfg_.opt) == x;
            } catch (const Error&) {
            }
            round.record(ok, [&] { return detail::at(w, x) + " via " + v.str(); });
          }
      }
      std::uniform_int_distribution<std::size_t> pick(0, ws.size() - 1);
      std::uniform_int_distribution<int> color(1, n - 1);
      for (int t = 0; t < 200; ++t) {
        const auto &w1 = ws[pick(rng)], &w2 = ws[pick(rng)], &w3 = ws[pick(rng)];
        for (int k = 0; k < 10; ++k) {
          const IntVec x = random_cone_point(w1, rng, k + 2);
          bool ok = false;
          try {
            ok = psi(w1, w3, x, cfg_.opt) == psi(w2, w3, psi(w1, w2, x, cfg_.opt), cfg_.opt);
          } catch (const Error&) {
          }
          compose.record(ok, [&] { return detail::at(w1, x) + " via " + w2.str() + " to " + w3.str(); });
        }
        IntVec x1(w1.length(), 0), x2(w2.length(), 0);
        for (int k = 0; k < 12; ++k) {
          const int a = color(rng);
          x1 = binf_f(w1, x1, a);
          x2 = binf_f(w2, x2, a);
        }
        bool ok = false;
        try {
          ok = psi(w1, w2, x1, cfg_.opt) == x2;
        } catch (const Error&) {
        }
        transp.record(ok, [&] { return detail::at(w1, x1) + " to " + w2.str(); });
      }
    }
  }

  void route_agreement(SuiteReport& rep) {
    auto& eps = rep.check("eps* by crossings equals eps* by Psi");
    auto& ops = rep.check("f* and e* by crossings equal the Psi route");
    auto& leps = rep.check("Lusztig crossing formula equals the Phi route");
    auto& conj = rep.check("G o psi = phi_transition o G");
    auto& golden = rep.check("phi_transition golden value");
    golden.record(phi_transition(parse_word("1,2,1"), parse_word("2,1,2"), {1, 0, 0}) == IntVec{0, 0, 1}, [] { return "(1,0,0)"; });
    std::mt19937 rng(cfg_.seed + 3);
    for (int n : detail::exhaustive_ranks(cfg_)) {
      const auto ws = enumerate_words(n);
      std::uniform_int_distribution<int> coord(0, 3);
      for (std::size_t i = 0; i < ws.size(); ++i) {
        const auto& w = ws[i];
        for (int t = 0; t < cfg_.psi_points; ++t) {
          const IntVec x = random_cone_point(w, rng, t % 14);
          for (int a = 1; a < n; ++a)
            guarded(ops, detail::at(w, x), [&] {
              eps.record(eps_star(w, x, a) == eps_star_psi(w, x, a, cfg_.opt), [&] { return detail::at(w, x) + " color " + std::to_string(a); });
              ops.record(star_f(w, x, a) == star_f_psi(w, x, a, cfg_.opt) && star_e(w, x, a, cfg_.opt) == star_e_psi(w, x, a, cfg_.opt),
                         [&] { return detail::at(w, x) + " color " + std::to_string(a); });
            });
        }
        for (int t = 0; t < 200; ++t) {
          IntVec y(w.length());
          for (int& v : y) v = coord(rng);
          for (int a = 1; a < n; ++a)
            guarded(leps, detail::at(w, y), [&] {
              leps.record(lusztig_eps(w, y, a) == lusztig_eps_phi(w, y, a) && lusztig_f(w, y, a) == lusztig_f_phi(w, y, a) &&
                              lusztig_e(w, y, a, std::nullopt, cfg_.opt) == lusztig_e_phi(w, y, a),
                          [&] { return detail::at(w, y) + " color " + std::to_string(a); });
            });
        }
        for (const auto* v : {&ws[(i + 1) % ws.size()], &ws.front(), &ws.back()})
          for (const auto& lambda : detail::weights_up_to(n, cfg_.lambda_cap))
            for (const auto& x : lattice_points(bz_ineqs(w, lambda)))
              guarded(conj, detail::at(w, x), [&] {
                conj.record(G_map(*v, lambda, psi(w, *v, x, cfg_.opt)) == phi_transition(w, *v, G_map(w, lambda, x)),
                            [&] { return detail::at(w, x) + " to " + v->str() + " lambda " + detail::vec(lambda); });
              });
      }
    }
  }

  void star(SuiteReport& rep) {
    auto& invol = rep.check("star o star = id");
    auto& additive = rep.check("iota0 star map is additive");
    auto& det = rep.check("iota0 star matrix is unimodular");
    auto& inverse = rep.check("matrix times reverse matrix is the identity");
    auto& referee = rep.check("iota0 star map agrees with the transport referee");
    auto& closed = rep.check("closed form of string data from Lusztig data on iota0");
    auto& squares = rep.check("commutative squares close");
    auto& inter = rep.check("star intertwines f with f*");
    auto& image = rep.check("star maps BZ points onto NZ points");
    auto& example = rep.check("iota0 word");
    example.record(iota0(3).letters() == std::vector<int>{1, 2, 1} && iota0(4).letters() == std::vector<int>{1, 2, 1, 3, 2, 1}, [] { return "iota0"; });
    std::mt19937 rng(cfg_.seed + 4);
    for (int n : detail::exhaustive_ranks(cfg_)) {
      const auto ws = enumerate_words(n);
      const ReducedWord i0 = iota0(n), i0s = star_word(i0);
      const int depth = n == 3 ? 4 : 3;
      for (const auto& w : ws)
        for (const auto& v : ws)
          for (const auto& x : cones_.points_within(w, depth))
            guarded(invol, detail::at(w, x), [&] {
              invol.record(star_string(v, w, star_string(w, v, x, cfg_.opt), cfg_.opt) == x, [&] { return detail::at(w, x) + " via " + v.str(); });
            });
      Matrix m;
      guarded(additive, "n=" + std::to_string(n), [&] {
        m = star_matrix_iota0(n, cfg_.seed, 100);
        additive.record(true, [] { return ""; });
      });
      if (!m.empty()) {
        const long long d = determinant(m);
        det.record(d == 1 || d == -1, [&] { return "determinant " + std::to_string(d); });
        guarded(inverse, "n=" + std::to_string(n), [&] {
          const Matrix minv = inverse_unimodular(m);
          for (int t = 0; t < 100; ++t) {
            const IntVec y = random_cone_point(i0s, rng, t % 12);
            const IntVec back = star_string(i0s, i0, y, cfg_.opt);
            inverse.record(apply_matrix(m, back) == y && apply_matrix(minv, y) == back, [&] { return detail::at(i0s, y); });
          }
        });
        const auto src = structures::star(i0, cfg_.opt), dst = structures::binf(i0s);
        for (const auto& x : cones_.points_within(i0, depth + 1))
          guarded(referee, detail::at(i0, x), [&] {
            referee.record(apply_matrix(m, x) == transport(x, src, dst) && transport(x, src, dst, false) == transport(x, src, dst),
                           [&] { return detail::at(i0, x); });
          });
      }
      // Lusztig data: all of N^N up to coordinate sum depth+1
      std::vector<IntVec> lpts{IntVec(i0.length(), 0)};
      for (std::size_t head = 0; head < lpts.size(); ++head)
        for (int k = 0; k < i0.length(); ++k) {
          IntVec y = lpts[head];
          ++y[k];
          if (detail::height(y) <= depth + 1 && std::find(lpts.begin(), lpts.end(), y) == lpts.end()) lpts.push_back(y);
        }
      for (const auto& x : lpts)
        guarded(squares, detail::at(i0, x), [&] {
          closed.record(string_of_lusztig(i0, x) == lusztig_to_string_iota0(n, x), [&] { return detail::at(i0, x); });
          for (const auto& [from, to] : {std::pair{i0, i0s}, std::pair{i0s, i0}}) {
            const auto [w2, x2] = star_lusztig(from, x);
            const IntVec lhs = star_string(from, to, string_of_lusztig(from, x), cfg_.opt);
            const IntVec rhs = string_of_lusztig(to, phi_transition(w2, to, x2));
            squares.record(lhs == rhs, [&] { return detail::at(from, x); });
          }
        });
      for (const auto& v : ws)
        for (const auto& x : cones_.points_within(i0, depth))
          for (int a = 1; a < n; ++a)
            guarded(inter, detail::at(i0, x), [&] {
              inter.record(star_string(i0, v, binf_f(i0, x, a), cfg_.opt) == star_f(v, star_string(i0, v, x, cfg_.opt), a),
                           [&] { return detail::at(i0, x) + " to " + v.str() + " color " + std::to_string(a); });
            });
      for (const auto& lambda : detail::weights_up_to(n, cfg_.lambda_cap))
        guarded(image, "lambda " + detail::vec(lambda), [&] {
          std::vector<IntVec> img;
          for (const auto& x : lattice_points(bz_ineqs(i0, lambda))) img.push_back(star_string(i0, i0s, x, cfg_.opt));
          std::sort(img.begin(), img.end());
          image.record(img == lattice_points(nz_ineqs(i0s, lambda)), [&] { return "lambda " + detail::vec(lambda); });
        });
    }
  }

  void tensor_oracle(SuiteReport& rep) {
    auto& binfg = rep.check("B(infinity) graph equals the tensor product graph");
    auto& stats = rep.check("eps and phi agree with the tensor product rule");
    auto& nzg = rep.check("NZ graph equals the tensor product with R_lambda");
    auto& emb = rep.check("Kashiwara embedding check");
    auto& bzset = rep.check("BZ vertices are the B(infinity) elements with eta <= lambda");
    auto& rule = rep.check("elementary tensor rule");
    auto& tr = rep.check("transport between words equals psi");
    {
      const TensorElement t{3, {Factor::elem(1, 0), Factor::elem(1, 0)}};
      const auto y = tensor_f(t, 1);
      rule.record(y && *y == TensorElement{3, {Factor::elem(1, 0), Factor::elem(1, -1)}}, [] { return "b1(0) (x) b1(0)"; });
    }
    for (int n : detail::exhaustive_ranks(cfg_))
      for (const auto& w : enumerate_words(n)) {
        guarded(binfg, w.str(), [&] {
          const auto s1 = structures::binf(w), s2 = structures::binf_tensor(w);
          const auto g1 = generate_graph(s1, std::nullopt, 6), g2 = generate_graph(s2, std::nullopt, 6);
          binfg.record(compare_graphs(g1, g2).equal, [&] { return w.str(); });
          for (const auto& x : g1.nodes)
            for (int a = 1; a < n; ++a)
              stats.record(s1.eps(x, a) == s2.eps(x, a) && s1.phi(x, a) == s2.phi(x, a) && s1.wt(x) == s2.wt(x),
                           [&] { return detail::at(w, x) + " color " + std::to_string(a); });
        });
        if (n == 3)
          for (const auto& x : cones_.points_within(w, 5))
            for (int a = 1; a < n; ++a) emb.record(embedding_check(w, x, a), [&] { return detail::at(w, x); });
        const auto& cpts = cones_.points(w, detail::max_depth(n, cfg_.lambda_cap));
        for (const auto& lambda : detail::weights_up_to(n, cfg_.lambda_cap)) {
          const std::string where = w.str() + " lambda " + detail::vec(lambda);
          guarded(nzg, where, [&] {
            nzg.record(compare_graphs(generate_graph(structures::nz(w, lambda, cfg_.opt)), generate_graph(structures::nz_tensor(w, lambda))).equal,
                       [&] { return where; });
            const auto bz = generate_graph(structures::bz(w, lambda, cfg_.opt)).nodes;
            std::vector<IntVec> filtered;
            for (const auto& x : cpts) {
              if (detail::height(x) > depth_bound(n, lambda)) continue;
              const IntVec e = eta(w, x);
              bool ok = true;
              for (int k = 0; k < w.length() && ok; ++k) ok = e[k] <= lambda[w.letters()[k] - 1];
              if (ok) filtered.push_back(x);
            }
            bzset.record(filtered == bz, [&] { return where; });
          });
        }
      }
    for (int n : detail::exhaustive_ranks(cfg_)) {
      const auto ws = enumerate_words(n);
      const auto src = structures::binf(ws.front());
      for (const auto& v : ws) {
        const auto dst = structures::binf(v);
        for (const auto& x : cones_.points_within(ws.front(), 4))
          guarded(tr, detail::at(ws.front(), x), [&] {
            tr.record(transport(x, src, dst) == psi(ws.front(), v, x, cfg_.opt), [&] { return detail::at(ws.front(), x) + " to " + v.str(); });
          });
      }
    }
  }

  Config cfg_;
  detail::ConeCache cones_;
};

inline json::Json to_json(const SuiteReport& rep) {
  json::Json checks = json::Json::array();
  for (const auto& c : rep.checks)
    checks.push_back({{"name", c.name}, {"passed", c.passed()}, {"checked", c.checked}, {"failed", c.failed}, {"counterexamples", c.counterexamples}});
  return {{"suite", rep.suite}, {"passed", rep.passed()}, {"checks", checks}};
}

}  // namespace crystal::verify
