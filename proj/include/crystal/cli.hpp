#pragma once

// Command-line front end. run() parses argv, executes one subcommand and
// returns the exit code: 0 success, 1 verification failure, 2 usage error.

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

#include "crystal/verify.hpp"

namespace crystal::cli {

using json::Json;

struct Flags {
  std::string format = "json";
  std::string psi_variant = "involutive";
  std::string e_sign = "corrected";
  std::string nz_tie_break = "consistent";
  std::string word, word_from, word_to, from, to, lambda, x, kind, structure, op, data = "string", suite = "all";
  int a = 0, n = 3, lambda_cap = 2, depth = 4, bound = -1;
  bool points = false;
};

namespace detail {

inline Options options(const Flags& f) {
  Options opt;
  opt.psi = f.psi_variant == "paper" ? PsiVariant::literal : PsiVariant::involutive;
  opt.e_sign = f.e_sign == "paper" ? ESign::literal : ESign::corrected;
  opt.nz = f.nz_tie_break == "paper" ? NzTieBreak::literal : NzTieBreak::consistent;
  return opt;
}

inline ReducedWord need_word(const std::string& text, const char* flag) {
  if (text.empty()) throw CLI::ValidationError(flag, "required");
  return parse_word(text);
}

inline IntVec need_vector(const std::string& text, const char* flag) {
  if (text.empty()) throw CLI::ValidationError(flag, "required");
  return parse_int_list(text);
}

inline std::optional<IntVec> maybe_lambda(const Flags& f) {
  if (f.lambda.empty()) return std::nullopt;
  return parse_int_list(f.lambda);
}

inline CrystalStructure make_structure(const Flags& f, const ReducedWord& w) {
  const Options opt = options(f);
  const auto lambda = maybe_lambda(f);
  const std::string s = f.data == "lusztig" ? "lusztig" : f.structure;
  if (s == "binf") return structures::binf(w);
  if (s == "star") return structures::star(w, opt);
  if (s == "lusztig") return structures::lusztig(w, lambda, opt);
  if (!lambda) throw CLI::ValidationError("--lambda", "required for structure " + s);
  if (s == "bz") return structures::bz(w, *lambda, opt);
  if (s == "nz") return structures::nz(w, *lambda, opt);
  throw CLI::ValidationError("--structure", "unknown structure " + s);
}

inline void require_domain(const Flags& f, const ReducedWord& w, const IntVec& x) {
  if (static_cast<int>(x.size()) != w.length()) throw Error("--x has length " + std::to_string(x.size()) + ", expected " + std::to_string(w.length()));
  const auto lambda = maybe_lambda(f);
  const std::string s = f.data == "lusztig" ? "lusztig" : f.structure;
  if (s == "lusztig") {
    if (!nonnegative(x)) throw Error("Lusztig data must be nonnegative");
    if (lambda) require_lusztig(w, *lambda, x);
  } else if (s == "bz") {
    require_bz(w, *lambda, x);
  } else if (s == "nz") {
    require_nz(w, *lambda, x);
  } else if (!context(w).in_string_cone(x)) {
    throw Error("x=(" + join(x) + ") is outside the string cone of " + w.str());
  }
}

inline std::string inequality_text(const InequalitySystem& sys) {
  std::string out;
  for (const auto& f : sys.forms()) {
    out += f.str() + "  [" + f.provenance;
    if (f.color) out += " a=" + std::to_string(f.color);
    if (f.path >= 0) out += " #" + std::to_string(f.path);
    out += "]\n";
  }
  return out;
}

inline std::string points_text(const std::vector<IntVec>& pts) {
  std::string out;
  for (const auto& p : pts) out += join(p) + "\n";
  return out;
}

inline std::string path_text(const CrossingPath& g) {
  std::string out = to_string(g.kind()) + " a=" + std::to_string(g.color()) + " vertices";
  for (const auto& st : g.steps()) out += " v" + std::to_string(st.arrival_wire) + "," + std::to_string(st.other_wire) + "@" + std::to_string(st.position);
  const auto turning = turning_points(g);
  out += " | turning " + join(IntVec(turning.begin(), turning.end()));
  return out + " | r " + join(g.r()) + " | s " + join(g.s()) + "\n";
}

}  // namespace detail

/// Runs the command line; output goes to out, diagnostics to err.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Flags f;
  CLI::App app{"Crystal combinatorics of reduced words for the longest permutation"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", f.format, "Output format")->check(CLI::IsMember({"json", "text", "dot"}));
  app.add_option("--psi-variant", f.psi_variant, "3-move rule of the string transition maps")->check(CLI::IsMember({"involutive", "paper"}));
  app.add_option("--e-sign", f.e_sign, "Sign of the s-vector step in e operators")->check(CLI::IsMember({"corrected", "paper"}));
  app.add_option("--nz-tie-break", f.nz_tie_break, "Argmax positions used by NZ operators")->check(CLI::IsMember({"consistent", "paper"}));

  auto* words = app.add_subcommand("words", "Reduced words, moves and reflection orderings");
  words->require_subcommand(1);
  auto* wlist = words->add_subcommand("list", "All reduced words of w0");
  wlist->add_option("--n", f.n, "Rank parameter")->required()->check(CLI::Range(2, 6));
  auto* winfo = words->add_subcommand("info", "Permutation, reflection ordering and applicable moves");
  winfo->add_option("--word", f.word)->required();
  auto* wpath = words->add_subcommand("path", "Move path between two words");
  wpath->add_option("--from", f.from)->required();
  wpath->add_option("--to", f.to)->required();

  auto* diagram = app.add_subcommand("diagram", "Wiring diagrams");
  diagram->require_subcommand(1);
  auto* dshow = diagram->add_subcommand("show", "Vertices with inversions and levels");
  dshow->add_option("--word", f.word)->required();

  auto* crossings = app.add_subcommand("crossings", "Crossings and rigorous paths");
  crossings->require_subcommand(1);
  auto* clist = crossings->add_subcommand("list", "Paths of one color with r and s vectors");
  clist->add_option("--word", f.word)->required();
  clist->add_option("--a", f.a)->required();
  clist->add_option("--kind", f.kind = "crossing")->check(CLI::IsMember({"crossing", "rigorous"}));

  auto* cone = app.add_subcommand("cone", "String cone inequalities");
  cone->add_option("--word", f.word)->required();
  cone->add_flag("--points", f.points, "Also list lattice points up to --bound");
  cone->add_option("--bound", f.bound, "Coordinate-sum bound for --points");

  auto* polytope = app.add_subcommand("polytope", "BZ or NZ string polytope");
  polytope->add_option("--word", f.word)->required();
  polytope->add_option("--lambda", f.lambda)->required();
  polytope->add_option("--kind", f.kind)->required()->check(CLI::IsMember({"bz", "nz"}));
  polytope->add_flag("--points", f.points, "Also list lattice points");

  auto* op = app.add_subcommand("op", "Crystal operators");
  op->require_subcommand(1);
  auto* apply = op->add_subcommand("apply", "Apply f, e or eps to one datum");
  apply->add_option("--word", f.word)->required();
  apply->add_option("--structure", f.structure = "binf")->check(CLI::IsMember({"binf", "star", "bz", "nz", "lusztig"}));
  apply->add_option("--data", f.data, "string or lusztig data")->check(CLI::IsMember({"string", "lusztig"}));
  apply->add_option("--lambda", f.lambda);
  apply->add_option("--x", f.x)->required();
  apply->add_option("--op", f.op)->required()->check(CLI::IsMember({"f", "e", "eps", "phi"}));
  apply->add_option("--a", f.a)->required();

  auto* star = app.add_subcommand("star", "The *-involution on string data");
  star->require_subcommand(0, 1);
  star->add_option("--word-from", f.word_from);
  star->add_option("--word-to", f.word_to);
  star->add_option("--x", f.x);
  auto* smatrix = star->add_subcommand("matrix", "Matrix of the linear map for iota0");
  smatrix->add_option("--n", f.n)->required()->check(CLI::Range(2, 6));

  auto* crystal = app.add_subcommand("crystal", "Crystal graphs");
  crystal->require_subcommand(1);
  auto* graph = crystal->add_subcommand("graph", "Generate a crystal graph");
  graph->add_option("--word", f.word)->required();
  graph->add_option("--lambda", f.lambda);
  graph->add_option("--structure", f.structure = "bz")->check(CLI::IsMember({"binf", "star", "bz", "nz", "lusztig"}));
  graph->add_option("--depth", f.depth, "Depth bound for B(infinity) structures")->check(CLI::Range(0, 40));

  auto* verify = app.add_subcommand("verify", "Run verification suites");
  verify->add_option("--suite", f.suite);
  verify->add_option("--n", f.n)->check(CLI::Range(2, 5));
  verify->add_option("--lambda-cap", f.lambda_cap)->check(CLI::Range(0, 4));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, er;
    const int code = app.exit(e, o, er);
    out << o.str();
    err << er.str();
    return code == 0 ? 0 : 2;
  }

  const bool text = f.format == "text";
  auto emit = [&](const Json& j, const std::string& plain) { out << (text ? plain : j.dump(2) + "\n"); };
  try {
    if (f.format == "dot" && !graph->parsed()) throw CLI::ValidationError("--format", "dot output is only available for crystal graph");
    const Options opt = detail::options(f);

    if (wlist->parsed()) {
      const auto ws = enumerate_words(f.n);
      Json arr = Json::array();
      std::string plain;
      for (const auto& w : ws) {
        arr.push_back(json::encode(w));
        plain += w.str() + "\n";
      }
      emit({{"n", f.n}, {"count", ws.size()}, {"words", arr}}, plain);
    } else if (winfo->parsed()) {
      const ReducedWord w = parse_word(f.word);
      Json refl = Json::array(), moves = Json::array();
      std::string plain = "word " + w.str() + "\nn " + std::to_string(w.n()) + "\npermutation " + join(permutation_of(w).images()) + "\nreflection ordering";
      for (const auto& inv : reflection_ordering(w)) {
        refl.push_back(json::encode(inv));
        plain += " " + to_string(inv);
      }
      plain += "\nmoves";
      for (const auto& m : applicable_moves(w.letters())) {
        moves.push_back(to_string(m));
        plain += " " + to_string(m);
      }
      emit({{"word", json::encode(w)}, {"n", w.n()}, {"length", w.length()}, {"permutation", permutation_of(w).images()},
            {"reflection_ordering", refl}, {"moves", moves}},
           plain + "\n");
    } else if (wpath->parsed()) {
      const ReducedWord from = parse_word(f.from), to = parse_word(f.to);
      if (from.n() != to.n()) throw Error("words of different rank");
      Json moves = Json::array(), trail = Json::array({json::encode(from)});
      std::string plain;
      ReducedWord cur = from;
      for (const auto& m : move_path(from, to)) {
        cur = apply_move(cur, m);
        moves.push_back(to_string(m));
        trail.push_back(json::encode(cur));
        plain += to_string(m) + " -> " + cur.str() + "\n";
      }
      emit({{"from", json::encode(from)}, {"to", json::encode(to)}, {"moves", moves}, {"words", trail}}, plain.empty() ? "(empty path)\n" : plain);
    } else if (dshow->parsed()) {
      const WiringDiagram d(parse_word(f.word));
      emit(json::encode(d), d.ascii());
    } else if (clist->parsed()) {
      const ReducedWord w = parse_word(f.word);
      const auto& ctx = context(w);
      const auto& set = f.kind == "rigorous" ? ctx.rigorous(f.a) : ctx.crossings(f.a);
      Json arr = Json::array();
      std::string plain;
      for (const auto& g : set.paths) {
        arr.push_back(json::encode(g));
        plain += detail::path_text(g);
      }
      Json order = Json::array();
      for (const auto& row : set.order) {
        Json r = Json::array();
        for (bool b : row) r.push_back(b);
        order.push_back(r);
      }
      emit({{"word", json::encode(w)}, {"a", f.a}, {"kind", f.kind}, {"paths", arr}, {"precedes", order}}, plain);
    } else if (cone->parsed()) {
      const ReducedWord w = parse_word(f.word);
      const auto sys = string_cone_ineqs(w);
      Json j = json::encode(sys);
      std::string plain = detail::inequality_text(sys);
      if (f.points) {
        if (f.bound < 0) throw CLI::ValidationError("--bound", "required with --points for the unbounded cone");
        const auto pts = lattice_points(sys, f.bound);
        j["points"] = pts;
        plain += detail::points_text(pts);
      }
      emit(j, plain);
    } else if (polytope->parsed()) {
      const ReducedWord w = parse_word(f.word);
      const IntVec lambda = parse_int_list(f.lambda);
      const auto sys = f.kind == "bz" ? bz_ineqs(w, lambda) : nz_ineqs(w, lambda);
      Json j = json::encode(sys);
      std::string plain = detail::inequality_text(sys);
      if (f.points) {
        const auto pts = lattice_points(sys);
        j["points"] = pts;
        j["count"] = pts.size();
        j["weyl_dim"] = weyl_dim(w.n(), lambda);
        plain += detail::points_text(pts);
      }
      emit(j, plain);
    } else if (apply->parsed()) {
      const ReducedWord w = parse_word(f.word);
      const IntVec x = parse_int_list(f.x);
      if (f.a < 1 || f.a >= w.n()) throw CLI::ValidationError("--a", "color out of range");
      if ((f.structure == "bz" || f.structure == "nz") && f.lambda.empty()) throw CLI::ValidationError("--lambda", "required for " + f.structure);
      detail::require_domain(f, w, x);
      const auto s = detail::make_structure(f, w);
      Json result;
      std::string plain;
      if (f.op == "eps" || f.op == "phi") {
        const int v = f.op == "eps" ? s.eps(x, f.a) : s.phi(x, f.a);
        result = v;
        plain = std::to_string(v);
      } else {
        const auto y = f.op == "f" ? s.f(x, f.a) : s.e(x, f.a);
        result = y ? Json(*y) : Json(nullptr);
        plain = y ? join(*y) : "0";
      }
      emit({{"structure", s.name}, {"word", json::encode(w)}, {"x", x}, {"op", f.op}, {"a", f.a}, {"result", result},
            {"epsilon", s.eps(x, f.a)}, {"phi", s.phi(x, f.a)}, {"weight", s.wt(x)}},
           plain + "\n");
    } else if (smatrix->parsed()) {
      const Matrix m = star_matrix_iota0(f.n);
      std::string plain;
      for (const auto& row : m) plain += join(row, " ") + "\n";
      emit({{"n", f.n}, {"from", json::encode(iota0(f.n))}, {"to", json::encode(star_word(iota0(f.n)))}, {"matrix", m}, {"determinant", determinant(m)}},
           plain);
    } else if (star->parsed()) {
      const ReducedWord from = detail::need_word(f.word_from, "--word-from"), to = detail::need_word(f.word_to, "--word-to");
      const IntVec x = detail::need_vector(f.x, "--x");
      const IntVec y = star_string(from, to, x, opt);
      emit({{"from", json::encode(from)}, {"to", json::encode(to)}, {"x", x}, {"result", y}}, join(y) + "\n");
    } else if (graph->parsed()) {
      const ReducedWord w = parse_word(f.word);
      const auto s = detail::make_structure(f, w);
      const auto g = generate_graph(s, std::nullopt, s.finite ? std::nullopt : std::optional<int>(f.depth));
      if (f.format == "dot") {
        out << json::to_dot(g);
      } else {
        std::string plain;
        for (const auto& e : g.edges) plain += join(g.nodes[e.source]) + " -" + std::to_string(e.color) + "-> " + join(g.nodes[e.target]) + "\n";
        emit(json::encode(g), plain);
      }
    } else if (verify->parsed()) {
      verify::Config cfg;
      cfg.n = f.n;
      cfg.lambda_cap = f.lambda_cap;
      cfg.opt = opt;
      verify::Runner runner(cfg);
      const auto plan = runner.plan(f.suite);
      Json suites = Json::array();
      std::string plain;
      bool ok = true;
      for (const auto& name : plan) {
        const auto rep = runner.run(name);
        ok = ok && rep.passed();
        suites.push_back(verify::to_json(rep));
        plain += name + ": " + (rep.passed() ? "PASS" : "FAIL") + "\n";
        for (const auto& c : rep.checks) {
          plain += "  " + std::string(c.passed() ? "ok   " : "FAIL ") + c.name + " (" + std::to_string(c.checked - c.failed) + "/" + std::to_string(c.checked) + ")\n";
          for (const auto& ce : c.counterexamples) plain += "       " + ce + "\n";
        }
      }
      emit({{"suite", f.suite}, {"n", f.n}, {"lambda_cap", f.lambda_cap}, {"psi_variant", f.psi_variant}, {"e_sign", f.e_sign},
            {"nz_tie_break", f.nz_tie_break}, {"passed", ok}, {"suites", suites}},
           plain);
      return ok ? 0 : 1;
    }
  } catch (const CLI::Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

}  // namespace crystal::cli
