#include "cvcurves/quiver.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <functional>
#include <numeric>
#include <sstream>

namespace cvc {

int Quiver::arrow_count(int tail, int head) const {
  auto it = arrows.find({tail, head});
  return it == arrows.end() ? 0 : it->second;
}

void Quiver::add_arrow(int tail, int head, int mult) {
  if (mult == 0) return;
  int& m = arrows[{tail, head}];
  m += mult;
  if (m == 0) arrows.erase({tail, head});
}

bool Quiver::operator<(const Quiver& o) const {
  if (n != o.n) return n < o.n;
  if (frozen != o.frozen) return frozen < o.frozen;
  return arrows < o.arrows;
}

ParseError::ParseError(int line_no, const std::string& msg)
    : std::runtime_error("line " + std::to_string(line_no) + ": " + msg), line(line_no) {}

std::string type_name(GraphType t, int n) {
  switch (t) {
    case GraphType::A: return "A" + std::to_string(n);
    case GraphType::D: return "D" + std::to_string(n);
    case GraphType::E6: return "E6";
    case GraphType::E7: return "E7";
    case GraphType::E8: return "E8";
    case GraphType::AffineA: return "affine-A" + std::to_string(n - 1);
    case GraphType::Other: return "other";
  }
  return "other";
}

bool is_acyclic(const Quiver& q) {
  std::vector<int> indeg(q.n + 1, 0);
  std::vector<std::vector<int>> out(q.n + 1);
  for (auto& [e, m] : q.arrows) {
    if (q.is_frozen(e.first) || q.is_frozen(e.second)) continue;
    out[e.first].push_back(e.second);
    ++indeg[e.second];
  }
  std::vector<int> stack;
  for (int v = 1; v <= q.n; ++v)
    if (!q.is_frozen(v) && indeg[v] == 0) stack.push_back(v);
  int seen = 0;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    ++seen;
    for (int w : out[v])
      if (--indeg[w] == 0) stack.push_back(w);
  }
  return seen == q.mutable_count();
}

namespace {

using Adj = std::vector<std::vector<int>>;

Adj underlying(const Quiver& q) {
  Adj adj(q.n + 1);
  for (auto& [e, m] : q.arrows) {
    auto [a, b] = e;
    if (q.is_frozen(a) || q.is_frozen(b)) continue;
    if (std::find(adj[a].begin(), adj[a].end(), b) == adj[a].end()) {
      adj[a].push_back(b);
      adj[b].push_back(a);
    }
  }
  for (auto& l : adj) std::sort(l.begin(), l.end());
  return adj;
}

// Walk from `from` through `first` along degree-2 vertices until a leaf.
std::vector<int> arm(const Adj& adj, int from, int first) {
  std::vector<int> out{first};
  int prev = from, cur = first;
  while (adj[cur].size() == 2) {
    int nxt = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
    prev = cur;
    cur = nxt;
    out.push_back(cur);
  }
  return out;
}

std::vector<int> pick(std::vector<std::vector<int>> cands) {
  if (cands.empty()) return {};
  for (auto& c : cands) {
    bool id = true;
    for (std::size_t v = 1; v < c.size(); ++v) id = id && c[v] == static_cast<int>(v);
    if (id) return c;
  }
  return *std::min_element(cands.begin(), cands.end());
}

}  // namespace

std::pair<GraphType, std::vector<int>> classify_graph(const Quiver& q) {
  const int n = q.n;
  if (!q.frozen.empty() || n == 0) return {GraphType::Other, {}};
  for (auto& [e, m] : q.arrows)
    if (m > 1) return {GraphType::Other, {}};
  Adj adj = underlying(q);
  // connectivity
  std::vector<char> seen(n + 1, 0);
  std::vector<int> st{1};
  seen[1] = 1;
  int cnt = 0;
  while (!st.empty()) {
    int v = st.back();
    st.pop_back();
    ++cnt;
    for (int w : adj[v])
      if (!seen[w]) seen[w] = 1, st.push_back(w);
  }
  if (cnt != n) return {GraphType::Other, {}};
  int edges = 0, maxdeg = 0;
  for (int v = 1; v <= n; ++v) {
    edges += static_cast<int>(adj[v].size());
    maxdeg = std::max(maxdeg, static_cast<int>(adj[v].size()));
  }
  edges /= 2;
  if (edges == n && maxdeg == 2 && n >= 3) return {GraphType::AffineA, {}};
  if (edges != n - 1) return {GraphType::Other, {}};

  std::vector<std::vector<int>> cands;
  if (maxdeg <= 2) {
    if (n == 1) return {GraphType::A, {0, 1}};
    for (int v = 1; v <= n; ++v) {
      if (adj[v].size() != 1) continue;
      std::vector<int> path{v};
      auto rest = arm(adj, v, adj[v][0]);
      path.insert(path.end(), rest.begin(), rest.end());
      std::vector<int> lab(n + 1, 0);
      for (int k = 0; k < n; ++k) lab[path[k]] = k + 1;
      cands.push_back(lab);
    }
    return {GraphType::A, pick(cands)};
  }
  int center = -1;
  for (int v = 1; v <= n; ++v) {
    int d = static_cast<int>(adj[v].size());
    if (d > 3) return {GraphType::Other, {}};
    if (d == 3) {
      if (center != -1) return {GraphType::Other, {}};
      center = v;
    }
  }
  std::vector<std::vector<int>> arms;
  for (int w : adj[center]) arms.push_back(arm(adj, center, w));
  std::vector<int> idx{0, 1, 2};
  std::vector<int> lens;
  for (auto& a : arms) lens.push_back(static_cast<int>(a.size()));
  std::vector<int> sl = lens;
  std::sort(sl.begin(), sl.end());
  GraphType t;
  if (sl[0] == 1 && sl[1] == 1) t = GraphType::D;
  else if (sl[0] == 1 && sl[1] == 2 && sl[2] == 2) t = GraphType::E6;
  else if (sl[0] == 1 && sl[1] == 2 && sl[2] == 3) t = GraphType::E7;
  else if (sl[0] == 1 && sl[1] == 2 && sl[2] == 4) t = GraphType::E8;
  else return {GraphType::Other, {}};

  do {
    const auto& a0 = arms[idx[0]];
    const auto& a1 = arms[idx[1]];
    const auto& a2 = arms[idx[2]];
    std::vector<int> lab(n + 1, 0);
    lab[center] = n;
    if (t == GraphType::D) {
      // a0 = n-1, a1 = n-2, a2 = the long arm n-3, ..., 1
      if (a0.size() != 1 || a1.size() != 1) continue;
      lab[a0[0]] = n - 1;
      lab[a1[0]] = n - 2;
      for (std::size_t k = 0; k < a2.size(); ++k) lab[a2[k]] = n - 3 - static_cast<int>(k);
    } else {
      // a0 = n-1 below the center, a1 = (n-2, 1), a2 = (n-3, ..., 2)
      if (a0.size() != 1 || a1.size() != 2 || static_cast<int>(a2.size()) != n - 4) continue;
      lab[a0[0]] = n - 1;
      lab[a1[0]] = n - 2;
      lab[a1[1]] = 1;
      for (std::size_t k = 0; k < a2.size(); ++k) lab[a2[k]] = n - 3 - static_cast<int>(k);
    }
    cands.push_back(lab);
  } while (std::next_permutation(idx.begin(), idx.end()));
  return {t, pick(cands)};
}

Diagnostics validate_quiver(const Quiver& q) {
  Diagnostics d;
  auto fail = [&](const std::string& s) {
    d.valid = false;
    d.errors.push_back(s);
  };
  for (auto& [e, m] : q.arrows) {
    auto [a, b] = e;
    if (a < 1 || a > q.n || b < 1 || b > q.n)
      fail("arrow (" + std::to_string(a) + "," + std::to_string(b) + ") out of range");
    else if (a == b)
      fail("loop at vertex " + std::to_string(a));
    else if (a < b && q.arrow_count(b, a) > 0)
      fail("2-cycle between " + std::to_string(a) + " and " + std::to_string(b));
    if (m < 0) fail("negative multiplicity");
  }
  if (d.valid && !is_acyclic(q)) fail("mutable part has a directed cycle");
  if (d.valid) {
    auto [t, lab] = classify_graph(q);
    d.type = t;
    d.to_std = lab;
  }
  return d;
}

Quiver relabel(const Quiver& q, const std::vector<int>& to_new) {
  Quiver r;
  r.n = q.n;
  for (auto& [e, m] : q.arrows) r.add_arrow(to_new[e.first], to_new[e.second], m);
  for (int f : q.frozen) r.frozen.insert(to_new[f]);
  return r;
}

Mat exchange_matrix(const Quiver& q) {
  Mat b = Mat::Zero(q.n, q.n);
  for (auto& [e, m] : q.arrows) {
    b(e.first - 1, e.second - 1) += m;
    b(e.second - 1, e.first - 1) -= m;
  }
  return b;
}

Quiver framed(const Quiver& q) {
  if (!q.frozen.empty()) throw std::invalid_argument("quiver is already framed");
  Quiver f = q;
  f.n = 2 * q.n;
  for (int i = 1; i <= q.n; ++i) {
    f.add_arrow(i, q.n + i);
    f.frozen.insert(q.n + i);
  }
  return f;
}

Quiver mutate(const Quiver& q, int i) {
  if (i < 1 || i > q.n) throw std::invalid_argument("mutation vertex out of range");
  if (q.is_frozen(i)) throw std::invalid_argument("mutation at frozen vertex " + std::to_string(i));
  std::vector<std::pair<int, int>> in, out;
  for (auto& [e, m] : q.arrows) {
    if (e.second == i) in.push_back({e.first, m});
    if (e.first == i) out.push_back({e.second, m});
  }
  Quiver r = q;
  for (auto [j, a] : in)
    for (auto [k, b] : out) {
      if (q.is_frozen(j) && q.is_frozen(k))
        throw std::logic_error("mutation would create a frozen-frozen arrow");
      r.add_arrow(j, k, a * b);
    }
  for (auto [j, a] : in) {
    r.arrows.erase({j, i});
    r.add_arrow(i, j, a);
  }
  for (auto [k, b] : out) {
    r.arrows.erase({i, k});
    r.add_arrow(k, i, b);
  }
  // cancel 2-cycles
  std::vector<std::pair<int, int>> keys;
  for (auto& [e, m] : r.arrows) keys.push_back(e);
  for (auto [a, b] : keys) {
    if (a > b) continue;
    int ab = r.arrow_count(a, b), ba = r.arrow_count(b, a);
    int c = std::min(ab, ba);
    if (c > 0) {
      r.add_arrow(a, b, -c);
      r.add_arrow(b, a, -c);
    }
  }
  return r;
}

Quiver mutate_sequence(const Quiver& q, const std::vector<int>& seq) {
  Quiver r = q;
  for (int i : seq) r = mutate(r, i);
  return r;
}

std::vector<Vec> c_vectors(const Quiver& q) {
  const int m = q.mutable_count();
  if (q.frozen.empty() || 2 * m != q.n)
    throw std::invalid_argument("c-vectors need a framed quiver");
  for (int j = m + 1; j <= q.n; ++j)
    if (!q.is_frozen(j)) throw std::invalid_argument("c-vectors need frozen vertices n+1..2n");
  std::vector<Vec> cs;
  for (int i = 1; i <= m; ++i) {
    Vec c(m);
    for (int j = 1; j <= m; ++j) c(j - 1) = q.arrow_count(i, m + j) - q.arrow_count(m + j, i);
    cs.push_back(c);
  }
  return cs;
}

namespace {
bool vec_less(const Vec& a, const Vec& b) {
  return std::lexicographical_compare(a.data(), a.data() + a.size(), b.data(), b.data() + b.size());
}
}  // namespace

EnumerationResult enumerate_c_vectors(const Quiver& q, int depth) {
  EnumerationResult res;
  bool exhaustive = depth < 0;
  if (exhaustive) {
    auto t = classify_graph(q).first;
    if (t == GraphType::AffineA || t == GraphType::Other) {
      exhaustive = false;
      depth = 10;
    }
  }
  res.exhaustive = exhaustive;
  const int m = q.n;
  std::set<Quiver> seen;
  std::deque<std::pair<Quiver, int>> queue;
  Quiver f = framed(q);
  seen.insert(f);
  queue.push_back({f, 0});
  auto cmp = [](const Vec& a, const Vec& b) { return vec_less(a, b); };
  std::set<Vec, decltype(cmp)> vs(cmp);
  while (!queue.empty()) {
    auto [s, d] = queue.front();
    queue.pop_front();
    for (auto& c : c_vectors(s)) vs.insert(c);
    if (!exhaustive && d >= depth) continue;
    for (int i = 1; i <= m; ++i) {
      Quiver t = mutate(s, i);
      if (seen.insert(t).second) queue.push_back({t, d + 1});
    }
  }
  res.states = seen.size();
  res.vectors.assign(vs.begin(), vs.end());
  return res;
}

Quiver parse_quiver(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  Quiver q;
  bool have_n = false;
  while (std::getline(in, line)) {
    ++line_no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string key;
    if (!(ls >> key)) continue;
    if (key == "n") {
      if (have_n) throw ParseError(line_no, "duplicate n");
      if (!(ls >> q.n) || q.n <= 0) throw ParseError(line_no, "expected positive vertex count");
      have_n = true;
    } else if (key == "arrow") {
      if (!have_n) throw ParseError(line_no, "arrow before n");
      int a, b, m = 1;
      if (!(ls >> a >> b)) throw ParseError(line_no, "expected 'arrow <tail> <head>'");
      if (!(ls >> m)) m = 1;
      if (a < 1 || a > q.n || b < 1 || b > q.n) throw ParseError(line_no, "vertex out of range");
      if (m <= 0) throw ParseError(line_no, "multiplicity must be positive");
      q.add_arrow(a, b, m);
    } else {
      throw ParseError(line_no, "unknown keyword '" + key + "'");
    }
    std::string extra;
    if (ls >> extra) throw ParseError(line_no, "trailing token '" + extra + "'");
  }
  if (!have_n) throw ParseError(line_no, "missing 'n' line");
  return q;
}

Quiver read_quiver_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_quiver(ss.str());
}

std::string format_quiver(const Quiver& q) {
  std::ostringstream o;
  o << "n " << q.n << "\n";
  for (auto& [e, m] : q.arrows) {
    o << "arrow " << e.first << " " << e.second;
    if (m != 1) o << " " << m;
    o << "\n";
  }
  return o.str();
}

}  // namespace cvc
