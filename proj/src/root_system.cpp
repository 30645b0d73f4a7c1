#include "cvcurves/root_system.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <set>
#include <sstream>

namespace cvc {

Mat cartan_matrix(const Quiver& q) {
  const int n = q.mutable_count();
  Mat a = Mat::Zero(n, n);
  for (int i = 0; i < n; ++i) a(i, i) = 2;
  for (auto& [e, m] : q.arrows) {
    auto [s, t] = e;
    if (s > n || t > n) continue;
    a(s - 1, t - 1) -= m;
    a(t - 1, s - 1) -= m;
  }
  return a;
}

Vec simple_root(int n, int i) {
  Vec r = Vec::Zero(n);
  r(i - 1) = 1;
  return r;
}

int height(const Vec& r) { return r.sum(); }

bool is_positive(const Vec& r) { return r.minCoeff() >= 0 && r.maxCoeff() > 0; }
bool is_negative(const Vec& r) { return r.maxCoeff() <= 0 && r.minCoeff() < 0; }
Vec make_positive(const Vec& r) { return is_negative(r) ? Vec(-r) : r; }

Vec simple_reflection(const Mat& a, int i, Vec r) {
  r(i - 1) -= a.row(i - 1).dot(r);
  return r;
}

bool root_less(const Vec& a, const Vec& b) {
  int ha = height(a), hb = height(b);
  if (ha != hb) return ha < hb;
  return std::lexicographical_compare(a.data(), a.data() + a.size(), b.data(), b.data() + b.size());
}

std::vector<Vec> positive_roots(const Mat& a) {
  const int n = static_cast<int>(a.rows());
  auto cmp = [](const Vec& x, const Vec& y) { return root_less(x, y); };
  std::set<Vec, decltype(cmp)> seen(cmp);
  std::vector<Vec> frontier;
  for (int i = 1; i <= n; ++i) {
    frontier.push_back(simple_root(n, i));
    seen.insert(frontier.back());
  }
  const int bound = 10 * n * n;
  int rounds = 0;
  while (!frontier.empty()) {
    if (++rounds > bound) throw NotFiniteType("root closure exceeded " + std::to_string(bound) + " rounds");
    std::vector<Vec> next;
    for (auto& r : frontier)
      for (int i = 1; i <= n; ++i) {
        Vec s = simple_reflection(a, i, r);
        if (is_positive(s) && seen.insert(s).second) next.push_back(s);
      }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

Order leq_D(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("rank mismatch");
  bool le = true, ge = true;
  for (int i = 0; i < a.size(); ++i) {
    if (a(i) > b(i)) le = false;
    if (a(i) < b(i)) ge = false;
  }
  if (le && ge) return Order::equal;
  if (le) return Order::less;
  if (ge) return Order::greater;
  return Order::incomparable;
}

bool dominated(const Vec& a, const Vec& b) { return (b - a).minCoeff() >= 0; }
bool strictly_dominated(const Vec& a, const Vec& b) { return dominated(a, b) && a != b; }

Perm inverse_perm(const Perm& pi) {
  int mx = 0;
  for (int v : pi) mx = std::max(mx, v);
  Perm inv(mx + 1, 0);
  for (std::size_t k = 0; k < pi.size(); ++k) inv[pi[k]] = static_cast<int>(k) + 1;
  return inv;
}

Perm reversed(const Perm& pi) { return Perm(pi.rbegin(), pi.rend()); }

bool in_P_Q(const Quiver& q, const Perm& pi) {
  if (static_cast<int>(pi.size()) != q.n) return false;
  std::vector<int> chk(pi.begin(), pi.end());
  std::sort(chk.begin(), chk.end());
  for (int k = 0; k < q.n; ++k)
    if (chk[k] != k + 1) return false;
  Perm inv = inverse_perm(pi);
  for (auto& [e, m] : q.arrows)
    if (inv[e.first] > inv[e.second]) return false;
  return true;
}

namespace {

void extensions(const Quiver& q, std::vector<int>& indeg, const std::vector<std::vector<int>>& out,
                Perm& cur, std::vector<Perm>& res, std::size_t limit, std::size_t* count) {
  if (static_cast<int>(cur.size()) == q.n) {
    ++*count;
    if (limit == 0 || res.size() < limit) res.push_back(cur);
    return;
  }
  for (int v = 1; v <= q.n; ++v) {
    if (indeg[v] != 0) continue;
    indeg[v] = -1;
    for (int w : out[v]) --indeg[w];
    cur.push_back(v);
    extensions(q, indeg, out, cur, res, limit, count);
    cur.pop_back();
    for (int w : out[v]) ++indeg[w];
    indeg[v] = 0;
    if (limit != 0 && res.size() >= limit) return;
  }
}

}  // namespace

std::vector<Perm> enumerate_P_Q(const Quiver& q, std::size_t limit) {
  std::vector<int> indeg(q.n + 1, 0);
  std::vector<std::vector<int>> out(q.n + 1);
  for (auto& [e, m] : q.arrows) {
    out[e.first].push_back(e.second);
    ++indeg[e.second];
  }
  std::vector<Perm> res;
  Perm cur;
  std::size_t count = 0;
  extensions(q, indeg, out, cur, res, limit, &count);
  return res;
}

std::size_t count_P_Q(const Quiver& q) {
  // dynamic programming over subsets closed under predecessors
  const int n = q.n;
  std::vector<unsigned> pred(n, 0);
  for (auto& [e, m] : q.arrows) pred[e.second - 1] |= 1u << (e.first - 1);
  std::vector<std::size_t> ways(1u << n, 0);
  ways[0] = 1;
  for (unsigned s = 0; s < (1u << n); ++s) {
    if (!ways[s]) continue;
    for (int v = 0; v < n; ++v)
      if (!(s >> v & 1) && (pred[v] & ~s) == 0) ways[s | 1u << v] += ways[s];
  }
  return ways[(1u << n) - 1];
}

Vec coxeter_apply(const Mat& a, const Perm& pi, Vec r, int dir) {
  if (dir > 0)
    for (auto it = pi.rbegin(); it != pi.rend(); ++it) r = simple_reflection(a, *it, r);
  else
    for (int v : pi) r = simple_reflection(a, v, r);
  return r;
}

int coxeter_order(const Mat& a, const Perm& pi) {
  const int n = static_cast<int>(a.rows());
  std::vector<Vec> cur;
  for (int i = 1; i <= n; ++i) cur.push_back(simple_root(n, i));
  for (int h = 1; h <= 1000; ++h) {
    bool id = true;
    for (int i = 1; i <= n; ++i) {
      cur[i - 1] = coxeter_apply(a, pi, cur[i - 1], 1);
      id = id && cur[i - 1] == simple_root(n, i);
    }
    if (id) return h;
  }
  throw NotFiniteType("Coxeter element has no finite order below 1000");
}

int coxeter_order(const Mat& a) {
  Perm id(a.rows());
  for (int k = 0; k < a.rows(); ++k) id[k] = k + 1;
  return coxeter_order(a, id);
}

Vec theta(const Mat& a, const Perm& pi, int i) {
  const int n = static_cast<int>(a.rows());
  Vec r = simple_root(n, pi[i - 1]);
  for (int k = i + 1; k <= static_cast<int>(pi.size()); ++k) r = simple_reflection(a, pi[k - 1], r);
  return r;
}

std::vector<CoxeterOrbit> omega_orbits(const Mat& a, const Perm& pi) {
  const int h = coxeter_order(a, pi);
  std::vector<CoxeterOrbit> res;
  for (int i = 1; i <= static_cast<int>(pi.size()); ++i) {
    CoxeterOrbit o{i, {}};
    Vec r = theta(a, pi, i);
    for (int k = 0; k < h; ++k) {
      o.elements.push_back(r);
      r = coxeter_apply(a, pi, r, 1);
    }
    res.push_back(std::move(o));
  }
  return res;
}

bool is_unimodal(const Perm& pi) {
  const int n = static_cast<int>(pi.size());
  int k = 0;
  while (k + 1 < n && pi[k] < pi[k + 1]) ++k;
  if (pi[k] != n) return false;
  while (k + 1 < n && pi[k] > pi[k + 1]) ++k;
  return k == n - 1;
}

Perm unimodal_psi(const Quiver& q) {
  const int n = q.n;
  for (auto& [e, m] : q.arrows)
    if (std::abs(e.first - e.second) != 1 || m != 1)
      throw std::invalid_argument("unimodal_psi needs the path labeling 1 - 2 - ... - n");
  if (static_cast<int>(q.arrows.size()) != n - 1)
    throw std::invalid_argument("unimodal_psi needs a type-A path");
  Perm up, down;
  for (int i = 1; i < n; ++i) {
    if (q.arrow_count(i, i + 1)) up.push_back(i);
    else if (q.arrow_count(i + 1, i)) down.push_back(i);
    else throw std::invalid_argument("missing edge in path");
  }
  Perm pi = up;
  pi.push_back(n);
  pi.insert(pi.end(), down.rbegin(), down.rend());
  return pi;
}

Quiver unimodal_omega(const Perm& pi) {
  if (!is_unimodal(pi)) throw std::invalid_argument("permutation is not unimodal");
  const int n = static_cast<int>(pi.size());
  Perm inv = inverse_perm(pi);
  Quiver q;
  q.n = n;
  for (int i = 1; i < n; ++i) {
    if (inv[i] < inv[n]) q.add_arrow(i, i + 1);
    else q.add_arrow(i + 1, i);
  }
  return q;
}

bool is_connected_subset(const Quiver& q, const std::vector<int>& V) {
  if (V.empty()) return false;
  std::set<int> vs(V.begin(), V.end()), seen{V[0]};
  std::vector<int> st{V[0]};
  while (!st.empty()) {
    int v = st.back();
    st.pop_back();
    for (auto& [e, m] : q.arrows) {
      int w = e.first == v ? e.second : e.second == v ? e.first : 0;
      if (w && vs.count(w) && seen.insert(w).second) st.push_back(w);
    }
  }
  return seen.size() == vs.size();
}

SubQuiver subquiver_restrict(const Quiver& q, const std::vector<int>& V) {
  if (!is_connected_subset(q, V)) throw std::invalid_argument("vertex subset is not connected");
  SubQuiver s;
  s.labels = V;
  std::sort(s.labels.begin(), s.labels.end());
  std::vector<int> to_new(q.n + 1, 0);
  for (std::size_t j = 0; j < s.labels.size(); ++j) to_new[s.labels[j]] = static_cast<int>(j) + 1;
  s.q.n = static_cast<int>(s.labels.size());
  for (auto& [e, m] : q.arrows)
    if (to_new[e.first] && to_new[e.second]) s.q.add_arrow(to_new[e.first], to_new[e.second], m);
  return s;
}

Perm phi(const Perm& pi, const std::vector<int>& V) {
  std::set<int> vs(V.begin(), V.end());
  Perm r;
  for (int v : pi)
    if (vs.count(v)) r.push_back(v);
  return r;
}

Perm phi_preimage(const Perm& pi_sub, const Quiver& q) {
  std::vector<std::set<int>> out(q.n + 1);
  std::vector<int> indeg(q.n + 1, 0);
  auto edge = [&](int a, int b) {
    if (out[a].insert(b).second) ++indeg[b];
  };
  for (auto& [e, m] : q.arrows) edge(e.first, e.second);
  for (std::size_t k = 0; k + 1 < pi_sub.size(); ++k) edge(pi_sub[k], pi_sub[k + 1]);
  std::priority_queue<int, std::vector<int>, std::greater<int>> ready;
  for (int v = 1; v <= q.n; ++v)
    if (indeg[v] == 0) ready.push(v);
  Perm pi;
  while (!ready.empty()) {
    int v = ready.top();
    ready.pop();
    pi.push_back(v);
    for (int w : out[v])
      if (--indeg[w] == 0) ready.push(w);
  }
  if (static_cast<int>(pi.size()) != q.n) throw std::logic_error("no extension of the sub-permutation");
  return pi;
}

std::string format_vec(const Vec& r) {
  std::ostringstream o;
  for (int i = 0; i < r.size(); ++i) o << (i ? " " : "") << r(i);
  return o.str();
}

Vec parse_vec(const std::string& s) {
  std::istringstream in(s);
  std::vector<int> v;
  std::string tok;
  while (in >> tok) {
    for (char& c : tok)
      if (c == ',') c = ' ';
    std::istringstream t(tok);
    int x;
    while (t >> x) v.push_back(x);
  }
  Vec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r(i) = v[i];
  return r;
}

std::string display_root(GraphType t, const std::vector<int>& to_std, const Vec& r) {
  const int n = static_cast<int>(r.size());
  std::vector<int> coef(n + 1, 0);
  for (int v = 1; v <= n; ++v) {
    int p = to_std.size() > static_cast<std::size_t>(v) ? to_std[v] : v;
    coef[p] = r(v - 1);
  }
  std::vector<int> row;
  int branch = 0;
  if (t == GraphType::D) {
    for (int p = 1; p <= n - 3; ++p) row.push_back(p);
    row.push_back(n);
    row.push_back(n - 1);
    branch = n - 2;
  } else if (t == GraphType::E6 || t == GraphType::E7 || t == GraphType::E8) {
    for (int p = 2; p <= n - 3; ++p) row.push_back(p);
    row.push_back(n);
    row.push_back(n - 2);
    row.push_back(1);
    branch = n - 1;
  } else {
    return format_vec(r);
  }
  std::ostringstream o;
  std::size_t center_col = 0;
  std::string line;
  for (std::size_t k = 0; k < row.size(); ++k) {
    if (k) line += ' ';
    if (row[k] == n) center_col = line.size();
    line += std::to_string(coef[row[k]]);
  }
  o << line << "\n" << std::string(center_col, ' ') << coef[branch];
  return o.str();
}

}  // namespace cvc
