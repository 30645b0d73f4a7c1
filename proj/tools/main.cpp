#include "cvcurves/realization.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace cvc;

namespace {

// input problems exit with 1, unrealized roots with 2
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<int> parse_list(const std::string& s) {
  std::string t = s;
  for (char& c : t)
    if (c == ',') c = ' ';
  std::istringstream in(t);
  std::vector<int> out;
  for (std::string tok; in >> tok;) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw InputError("not an integer: '" + tok + "'");
    }
  }
  return out;
}

Quiver load_quiver(const std::string& path) {
  Quiver q = read_quiver_file(path);
  Diagnostics d = validate_quiver(q);
  if (!d.valid) throw InputError("invalid quiver: " + (d.errors.empty() ? std::string() : d.errors.front()));
  return q;
}

Perm parse_pi(const std::string& s, const Quiver& q) {
  Perm p = parse_list(s);
  if (static_cast<int>(p.size()) != q.n) throw InputError("--pi needs " + std::to_string(q.n) + " entries");
  if (!in_P_Q(q, p)) throw InputError("--pi is not compatible with the quiver orientation");
  return p;
}

Mode parse_mode(const std::string& m) {
  if (m == "nd") return Mode::nd;
  if (m == "strict") return Mode::strict;
  throw InputError("--mode must be nd or strict");
}

void write_outputs(const std::string& dir, const std::string& report, const std::string& json) {
  std::cout << report;
  if (dir.empty()) return;
  std::filesystem::create_directories(dir);
  std::ofstream(std::filesystem::path(dir) / "report.txt") << report;
  std::ofstream(std::filesystem::path(dir) / "summary.json") << json;
}

int run_roots(const std::string& path) {
  Quiver q = load_quiver(path);
  auto [t, tp] = classify_graph(q);
  if (t == GraphType::AffineA || t == GraphType::Other) throw InputError("quiver is not of finite type");
  auto roots = positive_roots(cartan_matrix(q));
  std::sort(roots.begin(), roots.end(), root_less);
  std::cout << "type " << type_name(t, q.n) << " roots " << roots.size() << "\n";
  for (auto& r : roots) std::cout << format_vec(r) << "\n";
  return 0;
}

int run_cvectors(const std::string& path, const std::string& seq, bool enumerate, int depth) {
  Quiver q = load_quiver(path);
  if (enumerate) {
    auto r = enumerate_c_vectors(q, depth);
    std::cout << "states " << r.states << " exhaustive " << (r.exhaustive ? "yes" : "no") << " vectors "
              << r.vectors.size() << "\n";
    for (auto& v : r.vectors) std::cout << format_vec(v) << "\n";
    return 0;
  }
  std::vector<int> s = parse_list(seq);
  for (int k : s)
    if (k < 1 || k > q.n) throw InputError("mutation index out of range: " + std::to_string(k));
  // written as a composition: the rightmost mutation acts first
  std::reverse(s.begin(), s.end());
  Quiver m = mutate_sequence(framed(q), s);
  auto cs = c_vectors(m);
  for (int i = 0; i < q.n; ++i) std::cout << "c" << i + 1 << " " << format_vec(cs[i]) << "\n";
  return 0;
}

int run_find(const std::string& path, const std::string& root, const std::string& pi_s, const std::string& mode,
             int budget, std::uint64_t seed, const std::string& format) {
  Quiver q = load_quiver(path);
  Vec alpha = parse_vec(root);
  if (alpha.size() != q.n) throw InputError("--root needs " + std::to_string(q.n) + " entries");
  Mat a = cartan_matrix(q);
  auto [t, tp] = classify_graph(q);
  bool finite = t != GraphType::AffineA && t != GraphType::Other;
  auto pos = finite ? positive_roots(a) : std::vector<Vec>{};
  if (finite && std::find(pos.begin(), pos.end(), alpha) == pos.end()) throw InputError("not a positive root of this quiver");
  RealizerOptions ro;
  ro.mode = parse_mode(mode);
  ro.search.mode = ro.mode;
  ro.search.budget = budget;
  ro.seed = seed;
  std::vector<Fixture> fx;
  if (t == GraphType::E7 || t == GraphType::E8) fx = load_fixtures(default_fixture_dir());
  Realizer R(q, ro, fx);
  std::optional<Realization> r;
  if (!pi_s.empty()) r = R.realize_fixed(parse_pi(pi_s, q), alpha);
  else r = R.descent_construct(alpha);
  if (!r) {
    std::cout << "unrealized " << format_vec(alpha) << "\n" << R.last_trace();
    return 2;
  }
  std::cout << "pi";
  for (int v : r->pi) std::cout << " " << v;
  std::cout << "\nmethod " << method_name(r->method) << "\n" << format_diagram(r->diagram);
  std::cout << render(r->diagram, format);
  return 0;
}

int run_verify(const std::string& path, const std::string& mode, bool any_pi, int budget, int jobs,
               std::uint64_t seed, const std::string& out) {
  Quiver q = load_quiver(path);
  VerifyOptions vo;
  vo.mode = parse_mode(mode);
  vo.any_pi = any_pi;
  vo.budget = budget;
  vo.jobs = jobs;
  vo.seed = seed;
  RealizationReport rep;
  try {
    rep = verify_theorem(q, vo);
  } catch (const NotFiniteType& e) {
    throw InputError(e.what());
  }
  auto [t, tp] = classify_graph(q);
  write_outputs(out, format_report(rep, t, tp), summary_json(rep));
  return rep.unrealized == 0 ? 0 : 2;
}

int run_affine(int k, int l, int g, int sample, std::uint64_t seed, int budget, const std::string& out) {
  if (k < 0 || l < 0 || k + l < 1 || g < 1) throw InputError("affine needs k, l >= 0, k + l >= 1, g >= 1");
  auto rep = verify_affine_a(k, l, g, sample, seed, budget);
  write_outputs(out, format_report(rep, GraphType::AffineA, {}), summary_json(rep));
  return rep.unrealized == 0 ? 0 : 2;
}

int run_e8(const std::string& path, const std::string& schedule, std::uint64_t node_limit, const std::string& out) {
  Quiver q = path.empty() ? e8_reference_quiver() : load_quiver(path);
  if (classify_graph(q).first != GraphType::E8) throw InputError("not an E8 quiver");
  auto rep = e8_campaign(q, parse_list(schedule), node_limit);
  auto [t, tp] = classify_graph(q);
  std::ostringstream o;
  o << format_report(rep.report, t, tp);
  o << "\nresidual roots " << rep.residual.size() << " permutations " << rep.pis_checked << "\n";
  auto name = [](Order x) {
    switch (x) {
      case Order::less: return "less";
      case Order::greater: return "greater";
      case Order::equal: return "equal";
      default: return "incomparable";
    }
  };
  for (auto& r : rep.residual) {
    o << "residual " << format_vec(r.root) << " c+ " << format_vec(r.c_plus) << " (" << name(r.order_plus) << ") c- "
      << format_vec(r.c_minus) << " (" << name(r.order_minus) << ") no_descent " << r.no_descent
      << " all_pi_no_descent " << r.all_pi_no_descent << " leaf_rule " << r.leaf_rule_applies << " search";
    for (auto [b, f] : r.search_log) o << " " << b << (f ? ":found" : ":none");
    o << "\n";
  }
  write_outputs(out, o.str(), summary_json(rep.report));
  return 0;
}

int run_render(const std::string& path, int n, const std::string& format) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  ArcDiagram d = parse_diagram(buf.str(), n);
  if (d.n < 1) throw InputError("diagram needs n (line 'n <k>' or --n)");
  if (!is_non_self_crossing(d)) std::cerr << "warning: diagram is self-crossing\n";
  std::cout << render(d, format);
  return 0;
}

int run_audit(const std::string& dir) {
  auto fx = load_fixtures(dir.empty() ? default_fixture_dir() : dir);
  int bad = 0;
  for (const auto& f : fx) {
    Mat a = cartan_matrix(f.quiver);
    bool pq = in_P_Q(f.quiver, f.pi);
    CurveClass c = classify(f.diagram, f.pi, a);
    bool ok = pq && is_non_self_crossing(f.diagram) && c.root == f.root && c.non_decreasing;
    bad += ok ? 0 : 1;
    std::cout << f.name << " " << (ok ? "ok" : "FAIL") << " crossings " << f.diagram.m() << " pi_in_P_Q " << pq
              << " root " << format_vec(c.root) << " expected " << format_vec(f.root) << " nd " << c.non_decreasing
              << "\n";
  }
  std::cout << "rows " << fx.size() << " failing " << bad << "\n";
  return bad == 0 ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"c-vectors and non-self-crossing curves"};
  app.require_subcommand(1);

  std::string quiver, seq, root, pi, mode = "nd", out, format = "ascii", schedule = "8,10,12,14,16,18,20", dir;
  int budget = -1, jobs = 1, depth = -1, n = 0, k = 1, l = 1, g = 3, sample = 20;
  std::uint64_t seed = 1, node_limit = 20000000;
  bool enumerate = false, any_pi = false;

  auto* roots = app.add_subcommand("roots", "list the positive roots");
  roots->add_option("quiver", quiver, "quiver file")->required();

  auto* cvec = app.add_subcommand("cvectors", "c-vectors after a mutation sequence");
  cvec->add_option("quiver", quiver, "quiver file")->required();
  cvec->add_option("--seq", seq, "mutations as a composition, e.g. 1,2,3 for mu1 mu2 mu3");
  cvec->add_flag("--enumerate", enumerate, "breadth-first closure of the exchange graph");
  cvec->add_option("--depth", depth, "closure depth, negative for the full closure");

  auto* find = app.add_subcommand("find", "find a curve for one root");
  find->add_option("quiver", quiver, "quiver file")->required();
  find->add_option("--root", root, "root coefficients")->required();
  find->add_option("--pi", pi, "permutation images, e.g. 1,2,4,5,3");
  find->add_option("--mode", mode, "nd or strict");
  find->add_option("--budget", budget, "max crossings for the search");
  find->add_option("--seed", seed, "seed for permutation sampling");
  find->add_option("--format", format, "ascii or svg")->check(CLI::IsMember({"ascii", "svg"}));

  auto* verify = app.add_subcommand("verify", "realize every positive root");
  verify->add_option("quiver", quiver, "quiver file");
  verify->add_option("--mode", mode, "nd or strict");
  verify->add_flag("--any-pi", any_pi, "check every permutation separately");
  verify->add_option("--budget", budget, "max crossings for the search");
  verify->add_option("--jobs", jobs, "worker threads");
  verify->add_option("--seed", seed, "seed for sampling");
  verify->add_option("--out", out, "directory for report.txt and summary.json");
  auto* affine = verify->add_subcommand("affine", "affine A family with one source and one sink");
  affine->add_option("--k", k, "interior length of the first path");
  affine->add_option("--l", l, "interior length of the second path");
  affine->add_option("--g", g, "largest g");
  affine->add_option("--sample", sample, "roots cross-checked by search");
  affine->add_option("--seed", seed, "sample seed");
  affine->add_option("--budget", budget, "search budget");
  affine->add_option("--out", out, "output directory");
  auto* e8 = verify->add_subcommand("e8", "E8 campaign");
  e8->add_option("quiver", quiver, "E8 quiver file (default: the reference orientation)");
  e8->add_option("--schedule", schedule, "search budgets for residual roots");
  e8->add_option("--node-limit", node_limit, "node limit per search");
  e8->add_option("--out", out, "output directory");

  auto* rend = app.add_subcommand("render", "draw a diagram file");
  rend->add_option("diagram", quiver, "diagram file")->required();
  rend->add_option("--n", n, "number of marked points");
  rend->add_option("--format", format, "ascii or svg")->check(CLI::IsMember({"ascii", "svg"}));

  auto* fixtures = app.add_subcommand("fixtures", "table fixtures");
  auto* audit = fixtures->add_subcommand("audit", "re-verify every transcribed row");
  audit->add_option("--dir", dir, "fixture directory");
  fixtures->require_subcommand(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  try {
    if (*roots) return run_roots(quiver);
    if (*cvec) return run_cvectors(quiver, seq, enumerate, depth);
    if (*find) return run_find(quiver, root, pi, mode, budget, seed, format);
    if (*affine) return run_affine(k, l, g, sample, seed, budget, out);
    if (*e8) return run_e8(quiver, schedule, node_limit, out);
    if (*verify) {
      if (quiver.empty()) throw InputError("verify needs a quiver file");
      return run_verify(quiver, mode, any_pi, budget, jobs, seed, out);
    }
    if (*rend) return run_render(quiver, n, format);
    if (*audit) return run_audit(dir);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const ParseError& e) {
    std::cerr << "error: line " << e.line << ": " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
