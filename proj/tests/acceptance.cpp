// Acceptance checks, one line per criterion. `acceptance N` runs criterion N only;
// the exit code is nonzero when any selected criterion fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

#include "crystal/cli.hpp"

using namespace crystal;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass;
  std::string detail;
};

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string summary(const verify::SuiteReport& rep) {
  std::ostringstream out;
  for (const auto& c : rep.checks)
    if (!c.passed()) {
      out << c.name << " failed " << c.failed << "/" << c.checked;
      if (!c.counterexamples.empty()) out << " e.g. " << c.counterexamples.front();
      return out.str();
    }
  std::size_t total = 0;
  for (const auto& c : rep.checks) total += c.checked;
  out << rep.checks.size() << " checks, " << total << " cases";
  return out.str();
}

Outcome suite(const std::string& name, int n, double limit, Options opt = {}) {
  verify::Config cfg;
  cfg.n = n;
  cfg.opt = opt;
  const auto t0 = Clock::now();
  const auto rep = verify::Runner(cfg).run(name);
  const double dt = seconds_since(t0);
  std::ostringstream out;
  out << name << " n=" << n << ": " << summary(rep) << " in " << dt << " s";
  if (dt >= limit) out << " (limit " << limit << " s)";
  return {rep.passed() && dt < limit, out.str()};
}

Outcome all_of(std::vector<Outcome> parts) {
  Outcome o{true, ""};
  for (auto& p : parts) {
    o.pass = o.pass && p.pass;
    o.detail += (o.detail.empty() ? "" : "; ") + p.detail;
  }
  return o;
}

Outcome criterion_3() {
  const auto t0 = Clock::now();
  Outcome o = suite("dimensions", 4, 120);
  bool spots = true;
  for (const auto& [n, l, d] : {std::tuple{3, IntVec{1, 1}, 8}, std::tuple{3, IntVec{1, 0}, 3}, std::tuple{4, IntVec{1, 1, 1}, 64}}) {
    const auto w = iota0(n);
    spots = spots && weyl_dim(n, l) == d && lattice_points(bz_ineqs(w, l)).size() == std::size_t(d) &&
            lattice_points(nz_ineqs(w, l)).size() == std::size_t(d);
  }
  o.pass = o.pass && spots && seconds_since(t0) < 120;
  o.detail += spots ? "; spot values 8, 3, 64" : "; spot values differ";
  return o;
}

Outcome criterion_5() {
  std::vector<Outcome> parts;
  for (const char* s : {"fs-identity", "s-sums", "wt-identity", "levels"}) {
    parts.push_back(suite(s, 4, 600));
    parts.push_back(suite(s, 5, 600));
  }
  return all_of(std::move(parts));
}

Outcome criterion_7() {
  Options lit;
  lit.psi = PsiVariant::literal;
  Outcome good = suite("psi-coherence", 4, 600);
  Outcome bad = suite("psi-coherence", 4, 600, lit);
  return {good.pass && !bad.pass, good.detail + "; literal 3-move variant " + (bad.pass ? "unexpectedly passes" : "fails as expected")};
}

Outcome criterion_8() {
  Outcome o = suite("star", 4, 600);
  const Matrix expected{{0, 0, 1}, {1, 1, -1}, {1, 0, 0}};
  const Matrix m = star_matrix_iota0(3);
  std::ostringstream out;
  for (const auto& row : m) out << "[" << join(row) << "]";
  const bool literal = m == expected;
  const long long d = determinant(m);
  o.pass = o.pass && literal && (d == 1 || d == -1);
  o.detail += "; n=3 matrix " + out.str() + " det " + std::to_string(d) + (literal ? "" : ", expected [0,0,1][1,1,-1][1,0,0]");
  return o;
}

Outcome cli_verify(int n, double limit) {
  const std::string ns = std::to_string(n);
  std::vector<std::string> args{"crystal", "verify", "--suite", "all", "--n", ns, "--lambda-cap", "2"};
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  std::ostringstream out, err;
  const auto t0 = Clock::now();
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  const double dt = seconds_since(t0);
  std::ostringstream d;
  d << "verify --suite all --n " << n << ": exit " << code << " in " << dt << " s (limit " << limit << " s)";
  return {code == 0 && dt < limit, d.str()};
}

const std::vector<std::function<Outcome()>>& criteria() {
  static const std::vector<std::function<Outcome()>> list{
      [] { return suite("paper-example", 5, 1); },
      [] { return suite("intro-formula", 3, 1); },
      criterion_3,
      [] { return suite("graphs", 4, 300); },
      criterion_5,
      [] { return suite("axioms", 4, 900); },
      criterion_7,
      criterion_8,
      [] { return suite("nz-membership", 4, 600); },
      [] { return all_of({cli_verify(4, 600), cli_verify(5, 300)}); },
  };
  return list;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<int> selected;
  for (int i = 1; i < argc; ++i) selected.push_back(std::atoi(argv[i]));
  if (selected.empty())
    for (int i = 1; i <= 10; ++i) selected.push_back(i);
  bool ok = true;
  for (int c : selected) {
    if (c < 1 || c > 10) {
      std::cerr << "no criterion " << c << "\n";
      return 2;
    }
    Outcome o;
    try {
      o = criteria()[c - 1]();
    } catch (const std::exception& ex) {
      o = {false, std::string("error: ") + ex.what()};
    }
    std::cout << "criterion " << c << ": " << (o.pass ? "PASS" : "FAIL") << " - " << o.detail << std::endl;
    ok = ok && o.pass;
  }
  return ok ? 0 : 1;
}
