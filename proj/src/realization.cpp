#include "cvcurves/realization.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#ifndef CVC_FIXTURE_DIR
#define CVC_FIXTURE_DIR "fixtures/e7"
#endif

namespace cvc {

std::string method_name(Method m) {
  switch (m) {
    case Method::gamma: return "gamma";
    case Method::type_a_closed_form: return "type_a_closed_form";
    case Method::subquiver_lift: return "subquiver_lift";
    case Method::leaf_loop: return "leaf_loop";
    case Method::coxeter_lift: return "coxeter_lift";
    case Method::orbit_base: return "orbit_base";
    case Method::table_fixture: return "table_fixture";
    case Method::bounded_search: return "bounded_search";
    case Method::none: return "none";
  }
  return "none";
}

namespace {

std::vector<int> key_of(const Vec& v) { return std::vector<int>(v.data(), v.data() + v.size()); }

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  if (!in) throw std::runtime_error("cannot read " + p.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<int> read_ints(const std::string& s) {
  std::istringstream in(s);
  std::vector<int> r;
  int x;
  while (in >> x) r.push_back(x);
  return r;
}

Quiver opposite(const Quiver& q) {
  Quiver r;
  r.n = q.n;
  r.frozen = q.frozen;
  for (auto& [e, m] : q.arrows) r.add_arrow(e.second, e.first, m);
  return r;
}

// Neighbours of v inside V in the underlying graph.
int degree_in(const Quiver& q, int v, const std::set<int>& V) {
  int d = 0;
  for (int u : V)
    if (u != v && (q.arrow_count(u, v) || q.arrow_count(v, u))) ++d;
  return d;
}

// Vertices of V along the path, if the induced graph is a simple path.
std::optional<std::vector<int>> path_order(const Quiver& q, const std::set<int>& V) {
  int ends = 0, start = 0;
  for (int v : V) {
    int d = degree_in(q, v, V);
    if (d > 2) return std::nullopt;
    for (int u : V)
      if (u != v && q.arrow_count(u, v) + q.arrow_count(v, u) > 1) return std::nullopt;
    if (d <= 1) {
      ++ends;
      if (!start) start = v;
    }
  }
  if (V.size() > 1 && ends != 2) return std::nullopt;
  std::vector<int> order{start};
  std::set<int> seen{start};
  while (order.size() < V.size()) {
    int cur = order.back(), nxt = 0;
    for (int u : V)
      if (!seen.count(u) && (q.arrow_count(u, cur) || q.arrow_count(cur, u))) nxt = u;
    if (!nxt) return std::nullopt;
    order.push_back(nxt);
    seen.insert(nxt);
  }
  return order;
}

bool is_real_root(const Mat& a, const Vec& v) {
  if (!is_positive(v)) return false;
  // symmetric form (v, v) = v^T A v / 1 with A = 2I - adjacency
  long long s = 0;
  for (int i = 0; i < v.size(); ++i)
    for (int j = 0; j < v.size(); ++j) s += static_cast<long long>(v(i)) * a(i, j) * v(j);
  return s == 2;
}

}  // namespace

std::string default_fixture_dir() { return CVC_FIXTURE_DIR; }

std::vector<Fixture> load_fixtures(const std::string& dir) {
  namespace fs = std::filesystem;
  std::vector<Fixture> out;
  if (!fs::is_directory(dir)) return out;
  std::vector<fs::path> rows;
  for (auto& e : fs::directory_iterator(dir))
    if (e.is_directory()) rows.push_back(e.path());
  std::sort(rows.begin(), rows.end());
  for (auto& p : rows) {
    Fixture f;
    f.name = p.filename().string();
    f.quiver = parse_quiver(slurp(p / "quiver.txt"));
    f.pi = read_ints(slurp(p / "pi.txt"));
    f.diagram = parse_diagram(slurp(p / "diagram.txt"), f.quiver.n);
    auto r = read_ints(slurp(p / "root.txt"));
    f.root = Vec::Map(r.data(), static_cast<Eigen::Index>(r.size()));
    out.push_back(std::move(f));
  }
  return out;
}

ArcDiagram leaf_loop_extend(const ArcDiagram& d, int leaf, const Perm& pi, const Mat&) {
  if (pi.front() == leaf) return leaf_loop(d, true);
  if (pi.back() == leaf) return leaf_loop(d, false);
  throw std::invalid_argument("leaf is not an end of pi");
}

ArcDiagram coxeter_lift(const ArcDiagram& d, const Perm&, const Mat&, int dir) { return c_wrap(d, dir); }

Realizer::Realizer(const Quiver& q, RealizerOptions opt, std::vector<Fixture> fixtures)
    : q_(q), opt_(opt), fixtures_(std::move(fixtures)) {
  a_ = cartan_matrix(q);
  auto [t, tp] = classify_graph(q);
  type_ = t;
  to_std_ = tp;
}

const std::vector<Perm>& Realizer::permutations() {
  if (!perms_ready_) {
    perms_ = capped_permutations(q_, opt_.pi_cap, opt_.pi_sample, opt_.seed);
    perms_ready_ = true;
  }
  return perms_;
}

std::optional<Realization> Realizer::realize_fixed(const Perm& pi, const Vec& alpha) {
  trace_.clear();
  if (auto r = fixed(pi, alpha, false)) return r;
  if (opt_.use_search) return fixed(pi, alpha, true);
  return std::nullopt;
}

std::optional<Realization> Realizer::descent_construct(const Vec& alpha) {
  trace_.clear();
  const auto& perms = permutations();
  for (const auto& pi : perms)
    if (auto r = fixed(pi, alpha, false)) return r;
  if (opt_.use_search)
    for (const auto& pi : perms)
      if (auto r = fixed(pi, alpha, true)) return r;
  return std::nullopt;
}

void Realizer::seed(const Realization& r, const Vec& alpha) {
  for (auto& memo : memo_) {
    for (auto it = memo.begin(); it != memo.end();) it = it->second ? std::next(it) : memo.erase(it);
    memo[{r.pi, key_of(alpha)}] = r;
  }
}

std::optional<Realization> Realizer::fixed(const Perm& piV, const Vec& alpha, bool allow_search) {
  auto key = std::make_pair(piV, key_of(alpha));
  auto& memo = memo_[allow_search ? 1 : 0];
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  // A search-enabled lookup can reuse a search-free success.
  if (allow_search) {
    auto it = memo_[0].find(key);
    if (it != memo_[0].end() && it->second) return memo[key] = it->second;
  }
  memo[key] = std::nullopt;  // guards against cycles in the recursion
  auto r = attempt(piV, alpha, allow_search);
  memo[key] = r;
  return r;
}

std::optional<Realization> Realizer::fixture_for(const Perm& piV, const Vec& alpha) {
  // tables are for E7; they also serve E7 full subquivers of E8
  if (static_cast<int>(piV.size()) != 7 || fixtures_.empty()) return std::nullopt;
  if (type_ != GraphType::E7 && type_ != GraphType::E8) return std::nullopt;
  std::vector<int> V(piV.begin(), piV.end());
  if (!is_connected_subset(q_, V)) return std::nullopt;
  SubQuiver sq = subquiver_restrict(q_, V);
  auto [st, tp] = classify_graph(sq.q);
  if (st != GraphType::E7) return std::nullopt;
  std::vector<int> to_new(q_.n + 1, 0);
  for (std::size_t j = 0; j < sq.labels.size(); ++j) to_new[sq.labels[j]] = static_cast<int>(j) + 1;
  Quiver qp = relabel(sq.q, tp);
  Perm pp;
  for (int v : piV) pp.push_back(tp[to_new[v]]);
  Vec ap = Vec::Zero(7);
  for (int v : V) ap(tp[to_new[v]] - 1) = alpha(v - 1);
  for (const auto& f : fixtures_) {
    if (f.root != ap) continue;
    std::optional<ArcDiagram> d;
    if (f.quiver == qp && f.pi == pp) d = f.diagram;
    else if (opposite(f.quiver) == qp && reversed(f.pi) == pp) d = mirror(f.diagram);
    if (!d) continue;
    if (verifies(*d, piV, a_, alpha, opt_.mode)) return Realization{piV, *d, Method::table_fixture, {}};
    trace_ += "fixture " + f.name + " failed verification\n";
  }
  return std::nullopt;
}

std::optional<Realization> Realizer::attempt(const Perm& piV, const Vec& alpha, bool allow_search) {
  const int k = static_cast<int>(piV.size());
  const Mode mode = opt_.mode;
  auto ok = [&](const ArcDiagram& d) { return verifies(d, piV, a_, alpha, mode); };
  auto done = [&](const ArcDiagram& d, Method m) -> std::optional<Realization> {
    if (ok(d)) return Realization{piV, d, m, {}};
    trace_ += method_name(m) + " candidate failed verification for " + format_vec(alpha) + "\n";
    return std::nullopt;
  };
  std::set<int> V(piV.begin(), piV.end());
  std::vector<int> supp;
  for (int v = 1; v <= q_.n; ++v)
    if (alpha(v - 1) > 0) supp.push_back(v);
  for (int v : supp)
    if (!V.count(v)) return std::nullopt;

  // simple root
  if (height(alpha) == 1) {
    int pos = static_cast<int>(std::find(piV.begin(), piV.end(), supp[0]) - piV.begin()) + 1;
    if (auto r = done(gamma(k, pos), Method::gamma)) return r;
  }

  // proper support: realize on the support and lift
  if (static_cast<int>(supp.size()) < k) {
    Perm sub = phi(piV, supp);
    if (auto s = fixed(sub, alpha, allow_search)) {
      std::vector<int> positions;
      for (int v : sub) positions.push_back(static_cast<int>(std::find(piV.begin(), piV.end(), v) - piV.begin()) + 1);
      ArcDiagram d = lift(s->diagram, k, positions);
      if (auto r = done(d, Method::subquiver_lift)) {
        r->stats = s->stats;
        return r;
      }
    }
    return std::nullopt;
  }

  // type A interval with its unimodal order
  if (k > 1 && alpha.maxCoeff() == 1) {
    if (auto order = path_order(q_, V)) {
      for (int flip = 0; flip < 2; ++flip) {
        std::vector<int> P = *order;
        if (flip) std::reverse(P.begin(), P.end());
        std::vector<int> to_path(q_.n + 1, 0);
        for (int j = 0; j < k; ++j) to_path[P[j]] = j + 1;
        Quiver qp;
        qp.n = k;
        for (auto& [e, m] : q_.arrows)
          if (to_path[e.first] && to_path[e.second]) qp.add_arrow(to_path[e.first], to_path[e.second], m);
        Perm psi = unimodal_psi(qp);
        Perm psiV;
        for (int x : psi) psiV.push_back(P[x - 1]);
        if (psiV != piV) continue;
        if (auto r = done(construct_type_a_strict(qp, 1, k), Method::type_a_closed_form)) return r;
      }
    }
  }

  // loop around a leaf at either end of pi
  if (k > 1) {
    for (int end = 0; end < 2; ++end) {
      int leaf = end == 0 ? piV.front() : piV.back();
      if (degree_in(q_, leaf, V) != 1 || alpha(leaf - 1) != 1) continue;
      Vec rest = alpha;
      rest(leaf - 1) = 0;
      if (simple_reflection(a_, leaf, rest) != alpha || !is_real_root(a_, rest)) continue;
      Perm sub(piV);
      sub.erase(end == 0 ? sub.begin() : sub.end() - 1);
      auto s = fixed(sub, rest, allow_search);
      if (!s) continue;
      std::vector<int> positions;
      for (int j = 0; j < k - 1; ++j) positions.push_back(end == 0 ? j + 2 : j + 1);
      ArcDiagram d = leaf_loop_extend(lift(s->diagram, k, positions), leaf, piV, a_);
      if (auto r = done(d, Method::leaf_loop)) {
        r->stats = s->stats;
        return r;
      }
    }
  }

  // Coxeter descent
  for (int dir : {+1, -1}) {
    Vec lower = coxeter_apply(a_, piV, alpha, -dir);
    if (!is_positive(lower) || !strictly_dominated(lower, alpha)) continue;
    auto s = fixed(piV, lower, allow_search);
    if (!s) continue;
    if (auto r = done(coxeter_lift(s->diagram, piV, a_, dir), Method::coxeter_lift)) {
      r->stats = s->stats;
      return r;
    }
  }
  for (int i = 1; i <= k; ++i) {
    if (theta(a_, piV, i) == alpha)
      if (auto r = done(straight_curve(k, i, true), Method::orbit_base)) return r;
    CrossingWord w{i, {}};
    for (int j = i - 1; j >= 1; --j) w.rays.push_back(j);
    if (word_root(a_, piV, w) == alpha)
      if (auto r = done(straight_curve(k, i, false), Method::orbit_base)) return r;
  }

  if (opt_.use_fixtures)
    if (auto r = fixture_for(piV, alpha)) return r;

  if (allow_search) {
    SearchOptions so = opt_.search;
    so.mode = mode;
    SearchResult sr = bounded_search(a_, piV, alpha, so);
    if (sr.diagram) return Realization{piV, *sr.diagram, Method::bounded_search, sr.stats};
    trace_ += "search exhausted for " + format_vec(alpha) + " nodes " + std::to_string(sr.stats.nodes) + "\n";
  }
  return std::nullopt;
}

std::vector<Perm> capped_permutations(const Quiver& q, std::size_t cap, std::size_t sample, std::uint64_t seed) {
  std::size_t total = count_P_Q(q);
  if (total <= cap) return enumerate_P_Q(q);
  // random topological sorts, deduplicated and sorted
  std::mt19937_64 rng(seed);
  std::set<Perm> got;
  const int n = q.n;
  for (std::size_t tries = 0; got.size() < sample && tries < 50 * sample; ++tries) {
    std::vector<int> indeg(n + 1, 0);
    for (auto& [e, m] : q.arrows) ++indeg[e.second];
    std::vector<bool> used(n + 1, false);
    Perm p;
    while (static_cast<int>(p.size()) < n) {
      std::vector<int> avail;
      for (int v = 1; v <= n; ++v)
        if (!used[v] && indeg[v] == 0) avail.push_back(v);
      int v = avail[std::uniform_int_distribution<std::size_t>(0, avail.size() - 1)(rng)];
      used[v] = true;
      p.push_back(v);
      for (auto& [e, m] : q.arrows)
        if (e.first == v) --indeg[e.second];
    }
    got.insert(p);
  }
  return {got.begin(), got.end()};
}

namespace {

RootEntry entry_from(const Vec& alpha, const std::optional<Realization>& r, const Mat& a) {
  RootEntry e;
  e.root = alpha;
  if (!r) return e;
  e.realized = true;
  e.pi = r->pi;
  e.diagram = r->diagram;
  e.method = r->method;
  e.crossings = r->diagram.m();
  e.word_length = static_cast<int>(crossing_word(r->diagram).rays.size());
  e.stats = r->stats;
  (void)a;
  return e;
}

std::string quiver_id(const Quiver& q) {
  std::string s = "n" + std::to_string(q.n);
  for (auto& [e, m] : q.arrows) {
    s += ":" + std::to_string(e.first) + ">" + std::to_string(e.second);
    if (m > 1) s += "x" + std::to_string(m);
  }
  return s;
}

std::vector<Vec> sorted_roots(const Mat& a) {
  auto roots = positive_roots(a);
  std::sort(roots.begin(), roots.end(), root_less);
  return roots;
}

}  // namespace

RealizationReport verify_theorem(const Quiver& q, const VerifyOptions& opt) {
  Diagnostics dg = validate_quiver(q);
  if (!dg.valid) throw std::invalid_argument("invalid quiver: " + (dg.errors.empty() ? std::string() : dg.errors[0]));
  if (dg.type == GraphType::AffineA || dg.type == GraphType::Other)
    throw NotFiniteType("quiver is not of finite type " + type_name(dg.type, q.n));
  RealizerOptions ro;
  ro.mode = opt.mode;
  ro.use_search = opt.use_search;
  ro.search.budget = opt.budget;
  ro.search.mode = opt.mode;
  ro.pi_cap = opt.pi_cap;
  ro.pi_sample = opt.pi_sample;
  ro.seed = opt.seed;
  std::vector<Fixture> fx;
  if (dg.type == GraphType::E7 || dg.type == GraphType::E8) fx = load_fixtures(opt.fixture_dir.empty() ? default_fixture_dir() : opt.fixture_dir);

  RealizationReport rep;
  rep.quiver_id = quiver_id(q);
  rep.mode = opt.mode == Mode::strict ? "strict" : "nd";
  rep.seed = opt.seed;
  rep.budget = opt.budget;
  const Mat a = cartan_matrix(q);
  const auto roots = sorted_roots(a);

  if (!opt.any_pi) {
    Realizer R(q, ro, fx);
    for (const auto& alpha : roots) {
      auto r = R.descent_construct(alpha);
      RootEntry e = entry_from(alpha, r, a);
      if (!r) e.note = R.last_trace();
      rep.entries.push_back(std::move(e));
    }
  } else {
    auto perms = capped_permutations(q, opt.pi_cap, opt.pi_sample, opt.seed);
    const int jobs = std::max(1, opt.jobs);
    std::vector<std::vector<RootEntry>> per(perms.size());
    auto work = [&](std::size_t from) {
      Realizer R(q, ro, fx);
      for (std::size_t p = from; p < perms.size(); p += jobs)
        for (const auto& alpha : roots) {
          auto r = R.realize_fixed(perms[p], alpha);
          RootEntry e = entry_from(alpha, r, a);
          if (!r) {
            e.pi = perms[p];
            e.note = R.last_trace();
          }
          per[p].push_back(std::move(e));
        }
    };
    std::vector<std::thread> pool;
    for (int j = 1; j < jobs; ++j) pool.emplace_back(work, static_cast<std::size_t>(j));
    work(0);
    for (auto& t : pool) t.join();
    for (auto& v : per)
      for (auto& e : v) rep.entries.push_back(std::move(e));
    rep.notes.push_back("permutations checked: " + std::to_string(perms.size()));
  }
  if (dg.type == GraphType::A && opt.mode == Mode::nd) {
    auto s = verify_type_a_strict(q);
    rep.notes.push_back("type A strict closed form: " + std::to_string(s.realized) + "/" + std::to_string(s.total));
  }
  rep.tally();
  return rep;
}

RealizationReport verify_type_a_strict(const Quiver& q) {
  auto [t, to_std] = classify_graph(q);
  if (t != GraphType::A) throw std::invalid_argument("not a type A quiver");
  const int n = q.n;
  Quiver qp = relabel(q, to_std);
  std::vector<int> from_std(n + 1);
  for (int v = 1; v <= n; ++v) from_std[to_std[v]] = v;
  Perm psi = unimodal_psi(qp);
  Perm pi;
  for (int x : psi) pi.push_back(from_std[x]);
  const Mat a = cartan_matrix(q);
  RealizationReport rep;
  rep.quiver_id = quiver_id(q);
  rep.mode = "strict";
  for (int l = 1; l <= n; ++l)
    for (int m = l; m <= n; ++m) {
      Vec alpha = Vec::Zero(n);
      for (int p = l; p <= m; ++p) alpha(from_std[p] - 1) = 1;
      RootEntry e;
      e.root = alpha;
      e.pi = pi;
      ArcDiagram d = construct_type_a_strict(qp, l, m);
      e.diagram = d;
      e.method = Method::type_a_closed_form;
      e.crossings = d.m();
      e.word_length = static_cast<int>(crossing_word(d).rays.size());
      e.realized = verifies(d, pi, a, alpha, Mode::strict);
      if (!e.realized) e.note = "closed form failed verification";
      rep.entries.push_back(std::move(e));
    }
  std::sort(rep.entries.begin(), rep.entries.end(),
            [](const RootEntry& x, const RootEntry& y) { return root_less(x.root, y.root); });
  rep.tally();
  return rep;
}

Quiver affine_a_quiver(int k, int l) {
  if (k < 0 || l < 0 || k + l < 1) throw std::invalid_argument("affine A needs k + l >= 1");
  Quiver q;
  q.n = k + l + 2;
  const int s = 1, t = q.n;
  int prev = s;
  for (int i = 1; i <= k; ++i) {
    q.add_arrow(prev, 1 + i);
    prev = 1 + i;
  }
  q.add_arrow(prev, t);
  prev = s;
  for (int j = 1; j <= l; ++j) {
    q.add_arrow(prev, k + 1 + j);
    prev = k + 1 + j;
  }
  q.add_arrow(prev, t);
  return q;
}

std::vector<AffineRoot> affine_a_roots(int k, int l, int g_max) {
  const int n = k + l + 2;
  std::vector<AffineRoot> out;
  std::set<std::vector<int>> seen;
  for (int g = 1; g <= g_max; ++g)
    for (int variant = 0; variant < 2; ++variant)
      for (int u = 0; u <= k; ++u)
        for (int v = 0; v <= l; ++v) {
          int head = variant == 0 ? g : g - 1, rest = variant == 0 ? g - 1 : g;
          Vec r = Vec::Constant(n, rest);
          r(0) = head;
          for (int i = 1; i <= u; ++i) r(i) = head;
          for (int j = 1; j <= v; ++j) r(k + j) = head;
          if (!is_positive(r)) continue;
          if (!seen.insert(key_of(r)).second) continue;
          out.push_back({r, g, u, v, variant});
        }
  std::sort(out.begin(), out.end(), [](const AffineRoot& x, const AffineRoot& y) { return root_less(x.root, y.root); });
  return out;
}

RealizationReport verify_affine_a(int k, int l, int g_max, int sample, std::uint64_t seed, int budget) {
  Quiver q = affine_a_quiver(k, l);
  const int n = q.n;
  Perm pi(n);
  for (int i = 0; i < n; ++i) pi[i] = i + 1;
  RealizerOptions ro;
  ro.use_search = false;
  ro.use_fixtures = false;
  Realizer R(q, ro);
  const Mat a = R.cartan();
  RealizationReport rep;
  rep.quiver_id = "affineA:" + std::to_string(k) + "," + std::to_string(l);
  rep.mode = "nd";
  rep.seed = seed;
  rep.budget = budget;
  auto roots = affine_a_roots(k, l, g_max);
  for (const auto& ar : roots) {
    auto r = R.realize_fixed(pi, ar.root);
    RootEntry e = entry_from(ar.root, r, a);
    e.note = "g=" + std::to_string(ar.g) + " u=" + std::to_string(ar.u) + " v=" + std::to_string(ar.v) +
             " form=" + std::to_string(ar.variant + 1);
    if (!r) e.note += " " + R.last_trace();
    rep.entries.push_back(std::move(e));
  }
  if (sample > 0) {
    std::mt19937_64 rng(seed);
    std::vector<std::size_t> idx(roots.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::shuffle(idx.begin(), idx.end(), rng);
    idx.resize(std::min<std::size_t>(idx.size(), sample));
    std::sort(idx.begin(), idx.end());
    int found = 0;
    for (std::size_t i : idx) {
      SearchOptions so;
      so.budget = budget;
      so.node_limit = 2000000;
      auto sr = bounded_search(a, pi, roots[i].root, so);
      if (sr.diagram) ++found;
      rep.notes.push_back("search " + format_vec(roots[i].root) + " " + (sr.diagram ? "found" : "not found") +
                          " crossings " + std::to_string(sr.diagram ? sr.diagram->m() : 0) + " nodes " +
                          std::to_string(sr.stats.nodes));
    }
    rep.notes.push_back("search cross-check: " + std::to_string(found) + "/" + std::to_string(idx.size()));
  }
  rep.tally();
  return rep;
}

Vec from_display(GraphType t, int n, const std::vector<int>& values) {
  if (static_cast<int>(values.size()) != n) throw std::invalid_argument("display needs n values");
  std::vector<int> order;
  if (t == GraphType::D) {
    for (int p = 1; p <= n - 3; ++p) order.push_back(p);
    order.push_back(n);
    order.push_back(n - 1);
    order.push_back(n - 2);
  } else if (t == GraphType::E6 || t == GraphType::E7 || t == GraphType::E8) {
    for (int p = 2; p <= n - 3; ++p) order.push_back(p);
    order.push_back(n);
    order.push_back(n - 2);
    order.push_back(1);
    order.push_back(n - 1);
  } else {
    for (int p = 1; p <= n; ++p) order.push_back(p);
  }
  Vec r = Vec::Zero(n);
  for (int i = 0; i < n; ++i) r(order[i] - 1) = values[i];
  return r;
}

Quiver e8_reference_quiver() {
  Quiver q;
  q.n = 8;
  for (auto [t, h] : std::vector<std::pair<int, int>>{{1, 6}, {2, 3}, {3, 4}, {5, 4}, {8, 5}, {8, 7}, {8, 6}})
    q.add_arrow(t, h);
  return q;
}

Perm e8_reference_pi() { return {1, 2, 3, 8, 7, 6, 5, 4}; }

std::vector<Vec> e8_residual_roots() {
  const std::vector<std::vector<int>> rows = {
      {1, 2, 2, 2, 3, 2, 1, 1}, {1, 2, 2, 2, 3, 2, 1, 2}, {1, 2, 2, 3, 3, 2, 1, 1}, {1, 2, 2, 3, 3, 2, 1, 2},
      {1, 2, 3, 3, 3, 2, 1, 1}, {1, 2, 2, 3, 4, 2, 1, 2}, {1, 2, 2, 3, 4, 3, 1, 2}, {1, 2, 3, 3, 4, 2, 1, 2},
      {1, 2, 3, 3, 4, 3, 1, 2}, {1, 2, 3, 4, 4, 2, 1, 2}, {1, 2, 3, 3, 4, 3, 2, 2}, {1, 2, 3, 4, 4, 3, 1, 2},
      {1, 2, 3, 4, 5, 3, 1, 2}, {1, 2, 3, 4, 5, 3, 1, 3}, {1, 2, 3, 4, 5, 3, 2, 2}, {1, 2, 3, 4, 5, 4, 2, 2}};
  std::vector<Vec> out;
  for (const auto& r : rows) out.push_back(from_display(GraphType::E8, 8, r));
  return out;
}

E8Report e8_campaign(const Quiver& q, const std::vector<int>& budget_schedule, std::uint64_t node_limit) {
  auto [t, to_std] = classify_graph(q);
  if (t != GraphType::E8) throw std::invalid_argument("not an E8 quiver");
  const int n = q.n;
  std::vector<int> from_std(n + 1);
  for (int v = 1; v <= n; ++v) from_std[to_std[v]] = v;
  auto to_user = [&](const Vec& p) {
    Vec r(n);
    for (int v = 1; v <= n; ++v) r(v - 1) = p(to_std[v] - 1);
    return r;
  };
  RealizerOptions ro;
  ro.use_search = false;
  Realizer R(q, ro, load_fixtures(default_fixture_dir()));
  const Mat a = R.cartan();
  E8Report out;
  out.report.quiver_id = quiver_id(q);
  out.report.mode = "nd";
  for (const auto& alpha : sorted_roots(a)) {
    auto r = R.descent_construct(alpha);
    out.report.entries.push_back(entry_from(alpha, r, a));
  }
  const auto& perms = R.permutations();
  out.pis_checked = perms.size();
  Perm pi0 = perms.front();
  std::set<int> all;
  for (int v = 1; v <= n; ++v) all.insert(v);
  if (q == e8_reference_quiver()) pi0 = e8_reference_pi();
  std::vector<Vec> residual_roots;
  for (const auto& rp : e8_residual_roots()) residual_roots.push_back(to_user(rp));
  std::stable_sort(residual_roots.begin(), residual_roots.end(),
                   [](const Vec& x, const Vec& y) { return height(x) < height(y); });
  for (const auto& root : residual_roots) {
    E8Residual res;
    res.root = root;
    res.c_plus = coxeter_apply(a, pi0, res.root, +1);
    res.c_minus = coxeter_apply(a, pi0, res.root, -1);
    res.order_plus = leq_D(res.c_plus, res.root);
    res.order_minus = leq_D(res.c_minus, res.root);
    res.no_descent = res.order_plus != Order::less && res.order_minus != Order::less;
    res.all_pi_no_descent = true;
    for (const auto& pi : perms)
      for (int dir : {+1, -1})
        if (leq_D(coxeter_apply(a, pi, res.root, dir), res.root) == Order::less) res.all_pi_no_descent = false;
    for (int v = 1; v <= n; ++v) {
      if (degree_in(q, v, all) != 1 || res.root(v - 1) != 1) continue;
      Vec rest = res.root;
      rest(v - 1) = 0;
      if (simple_reflection(a, v, rest) == res.root && is_real_root(a, rest)) res.leaf_rule_applies = true;
    }
    auto it = std::find_if(out.report.entries.begin(), out.report.entries.end(),
                           [&](const RootEntry& e) { return e.root == res.root; });
    if (it != out.report.entries.end() && !it->realized) {
      // earlier witnesses may already open a descent
      if (auto r = R.descent_construct(res.root)) {
        *it = entry_from(res.root, r, a);
      } else {
        for (int b : budget_schedule) {
          SearchOptions so;
          so.budget = b;
          so.node_limit = node_limit;
          auto sr = bounded_search(a, pi0, res.root, so);
          res.search_log.push_back({b, static_cast<bool>(sr.diagram)});
          it->stats = sr.stats;
          if (sr.diagram) {
            Realization found{pi0, *sr.diagram, Method::bounded_search, sr.stats};
            *it = entry_from(res.root, found, a);
            R.seed(found, res.root);
            break;
          }
        }
      }
    }
    out.residual.push_back(std::move(res));
  }
  for (auto& e : out.report.entries)
    if (!e.realized)
      if (auto r = R.descent_construct(e.root)) e = entry_from(e.root, r, a);
  out.report.tally();
  return out;
}

}  // namespace cvc
