#include "cvcurves/curve.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace cvc {

namespace {

// J_k index of a non-integer position; J_n is unbounded to the right.
int interval_of(const Rat& x, int n) {
  if (x < 0) return 0;
  long long k = x.numerator() / x.denominator();
  return static_cast<int>(std::min<long long>(k, n));
}

bool is_integer(const Rat& x) { return x.denominator() == 1; }

struct Chord {
  Rat lo, hi;
};

bool interleave(const Chord& a, const Chord& b) {
  return (a.lo < b.lo && b.lo < a.hi && a.hi < b.hi) || (b.lo < a.lo && a.lo < b.hi && b.hi < a.hi);
}

Rat endpoint_e(const ArcDiagram& d, int k) { return k == 0 ? Rat(d.start) : d.crossings[k - 1]; }
Rat endpoint_f(const ArcDiagram& d, int k) { return k == d.m() ? Rat(0) : d.crossings[k]; }

}  // namespace

ArcDiagram gamma(int n, int i) {
  if (i < 1 || i > n) throw std::invalid_argument("gamma: start out of range");
  ArcDiagram d;
  d.n = n;
  d.start = i;
  return d;
}

bool positions_valid(const ArcDiagram& d) {
  if (d.start < 1 || d.start > d.n) return false;
  std::vector<Rat> xs = d.crossings;
  for (auto& x : xs) {
    if (x <= 0) return false;
    if (is_integer(x) && x >= 1 && x <= d.n) return false;
  }
  std::sort(xs.begin(), xs.end());
  return std::adjacent_find(xs.begin(), xs.end()) == xs.end();
}

bool is_non_self_crossing(const ArcDiagram& d) {
  if (!positions_valid(d)) return false;
  std::vector<Chord> up, low;
  for (int k = 0; k <= d.m(); ++k) {
    Rat e = endpoint_e(d, k), f = endpoint_f(d, k);
    Chord c{std::min(e, f), std::max(e, f)};
    (d.arc_is_lower(k) ? low : up).push_back(c);
  }
  for (auto* side : {&up, &low})
    for (std::size_t a = 0; a < side->size(); ++a)
      for (std::size_t b = a + 1; b < side->size(); ++b)
        if (interleave((*side)[a], (*side)[b])) return false;
  return true;
}

std::vector<SignedRay> raw_signed_word(const ArcDiagram& d) {
  std::vector<SignedRay> w;
  for (int k = 0; k <= d.m(); ++k) {
    if (d.arc_is_lower(k)) continue;
    Rat u = endpoint_e(d, k), v = endpoint_f(d, k);
    if (u < v) {
      for (int j = 1; j <= d.n; ++j)
        if (u < j && j < v) w.push_back({j, +1});
    } else {
      for (int j = d.n; j >= 1; --j)
        if (v < j && j < u) w.push_back({j, -1});
    }
  }
  return w;
}

CrossingWord raw_crossing_word(const ArcDiagram& d) {
  CrossingWord w{d.start, {}};
  for (auto& r : raw_signed_word(d)) w.rays.push_back(r.ray);
  return w;
}

CrossingWord crossing_word(const ArcDiagram& d) {
  std::vector<SignedRay> st;
  for (auto& r : raw_signed_word(d)) {
    if (!st.empty() && st.back().ray == r.ray && st.back().sign == -r.sign) st.pop_back();
    else st.push_back(r);
  }
  std::size_t skip = 0;
  while (skip < st.size() && st[skip].ray == d.start) ++skip;
  CrossingWord w{d.start, {}};
  for (std::size_t k = skip; k < st.size(); ++k) w.rays.push_back(st[k].ray);
  return w;
}

Vec word_root(const Mat& a, const Perm& pi, const CrossingWord& w) {
  Vec r = simple_root(static_cast<int>(a.rows()), pi[w.start - 1]);
  for (int j : w.rays) r = simple_reflection(a, pi[j - 1], r);
  return r;
}

Vec associated_root(const ArcDiagram& d, const Perm& pi, const Mat& a) {
  return make_positive(word_root(a, pi, crossing_word(d)));
}

CurveClass classify_word(const CrossingWord& w, const Perm& pi, const Mat& a) {
  CurveClass c;
  Vec r = simple_root(static_cast<int>(a.rows()), pi[w.start - 1]);
  c.intermediate_roots.push_back(r);
  c.positive = true;
  c.non_decreasing = true;
  c.strictly_increasing = true;
  for (int j : w.rays) {
    Vec next = simple_reflection(a, pi[j - 1], r);
    if (!is_positive(next)) c.positive = false;
    if (!dominated(r, next)) c.non_decreasing = false;
    if (!strictly_dominated(r, next)) c.strictly_increasing = false;
    r = next;
    c.intermediate_roots.push_back(r);
  }
  c.root = make_positive(r);
  return c;
}

CurveClass classify(const ArcDiagram& d, const Perm& pi, const Mat& a) {
  return classify_word(crossing_word(d), pi, a);
}

ArcDiagram normalize(const ArcDiagram& d) {
  std::map<int, std::vector<Rat>> by;
  for (auto& x : d.crossings) by[interval_of(x, d.n)].push_back(x);
  std::map<Rat, Rat> to;
  for (auto& [k, xs] : by) {
    std::sort(xs.begin(), xs.end());
    const long long c = static_cast<long long>(xs.size());
    for (long long r = 0; r < c; ++r) to[xs[r]] = Rat(k) + Rat(r + 1, c + 1);
  }
  ArcDiagram out = d;
  for (auto& x : out.crossings) x = to.at(x);
  return out;
}

ArcDiagram reduce(const ArcDiagram& input) {
  ArcDiagram d = input;
  auto none_between = [&](const Rat& lo, const Rat& hi, int skip1, int skip2) {
    for (int j = 0; j < d.m(); ++j) {
      if (j == skip1 || j == skip2) continue;
      if (lo < d.crossings[j] && d.crossings[j] < hi) return false;
    }
    return true;
  };
  bool changed = true;
  while (changed) {
    changed = false;
    for (int k = 0; k + 1 < d.m(); ++k) {
      Rat x = d.crossings[k], y = d.crossings[k + 1];
      if (interval_of(x, d.n) != interval_of(y, d.n)) continue;
      if (!none_between(std::min(x, y), std::max(x, y), k, k + 1)) continue;
      d.crossings.erase(d.crossings.begin() + k, d.crossings.begin() + k + 2);
      changed = true;
      break;
    }
    if (changed) continue;
    if (d.m() >= 1) {
      Rat x = d.crossings[0], s(d.start);
      Rat diff = x > s ? x - s : s - x;
      if (diff < 1 && none_between(std::min(x, s), std::max(x, s), 0, -1)) {
        d.crossings.erase(d.crossings.begin());
        changed = true;
      }
    }
  }
  return normalize(d);
}

namespace {

struct NewPoint {
  bool is_z = false;
  Rat pos;       // for mapped points
  bool upper = false;  // side of the exit arc for z points
  Rat y;         // outer endpoint of the exit arc
  int zclass = 0;  // -1 left collar, +1 right collar
  Rat place;     // assigned position
};

}  // namespace

ArcDiagram braid_apply(const ArcDiagram& d, int i, bool inverse) {
  if (i < 1 || i >= d.n) throw std::invalid_argument("braid generator out of range");
  const Rat lo(i), hi(i + 1);
  auto inner_x = [&](const Rat& x) { return lo < x && x < hi; };
  auto is_inner = [&](int k, bool e_side) {
    // endpoint of arc k: e_side -> x_k or the start; otherwise x_{k+1} or b
    if (e_side) return k == 0 ? (d.start == i || d.start == i + 1) : inner_x(d.crossings[k - 1]);
    return k == d.m() ? false : inner_x(d.crossings[k]);
  };
  std::vector<NewPoint> pts;
  for (int k = 0; k <= d.m(); ++k) {
    bool ein = is_inner(k, true), fin = is_inner(k, false);
    bool upper = !d.arc_is_lower(k);
    if (ein != fin) {
      NewPoint z;
      z.is_z = true;
      z.upper = upper;
      z.y = ein ? endpoint_f(d, k) : endpoint_e(d, k);
      // sigma_i: upper exits gain a point right of p_{i+1}, lower exits
      // left of p_i; the inverse swaps the collars
      z.zclass = (upper != inverse) ? +1 : -1;
      pts.push_back(z);
    }
    if (k < d.m()) {
      NewPoint p;
      Rat x = d.crossings[k];
      p.pos = fin ? Rat(2 * i + 1) - x : x;
      p.place = p.pos;
      pts.push_back(p);
    }
  }
  // theta-ascending key of an exit
  auto theta_less = [&](const NewPoint& a, const NewPoint& b) {
    // both on the same side
    if (a.upper) {
      int ga = a.y > hi ? 0 : 1, gb = b.y > hi ? 0 : 1;
      if (ga != gb) return ga < gb;
      return a.y < b.y;
    }
    int ga = a.y < lo ? 0 : 1, gb = b.y < lo ? 0 : 1;
    if (ga != gb) return ga < gb;
    return a.y > b.y;
  };
  for (int cls : {-1, +1}) {
    std::vector<NewPoint*> zs;
    for (auto& p : pts)
      if (p.is_z && p.zclass == cls) zs.push_back(&p);
    if (zs.empty()) continue;
    // all exits in one collar come from the same side
    bool ascending;  // position ascending with theta ascending
    if (!inverse) ascending = (cls == -1);   // lower exits on the left, upper on the right
    else ascending = (cls == +1);            // lower exits on the right, upper on the left
    std::sort(zs.begin(), zs.end(), [&](NewPoint* a, NewPoint* b) { return theta_less(*a, *b); });
    if (!ascending) std::reverse(zs.begin(), zs.end());
    Rat a, b;
    if (cls == -1) {
      a = Rat(i - 1);
      for (auto& x : d.crossings)
        if (interval_of(x, d.n) == i - 1 && x > a) a = x;
      b = lo;
    } else {
      a = hi;
      b = Rat(i + 2);
      for (auto& x : d.crossings)
        if (interval_of(x, d.n) == i + 1 && x < b) b = x;
    }
    const long long c = static_cast<long long>(zs.size());
    for (long long r = 0; r < c; ++r) zs[r]->place = a + (b - a) * Rat(r + 1, c + 1);
  }
  ArcDiagram out;
  out.n = d.n;
  out.start = d.start == i ? i + 1 : d.start == i + 1 ? i : d.start;
  for (auto& p : pts) out.crossings.push_back(p.place);
  if (!is_non_self_crossing(out)) throw std::logic_error("braid surgery produced a self-crossing diagram");
  return reduce(out);
}

ArcDiagram braid_word_apply(const ArcDiagram& d, const std::vector<int>& gens) {
  ArcDiagram r = d;
  for (int g : gens) r = braid_apply(r, std::abs(g), g < 0);
  return r;
}

ArcDiagram c_wrap(const ArcDiagram& d, int dir) {
  Rat right(d.n + 1), left(1);
  for (auto& x : d.crossings) {
    if (x >= right) right = x + 1;
    if (x < left) left = x;
  }
  left = left / 2;
  ArcDiagram out = d;
  if (dir > 0) {
    out.crossings.push_back(right);
    out.crossings.push_back(left);
  } else {
    out.crossings.push_back(left);
    out.crossings.push_back(right);
  }
  return reduce(out);
}

ArcDiagram mirror(const ArcDiagram& d) {
  ArcDiagram out = d;
  out.start = d.n + 1 - d.start;
  Rat top(d.n + 1);
  for (auto& x : d.crossings)
    if (x > d.n && x + 1 > top) top = x + 1;
  // crossings beyond p_n map into (0,1) keeping their order reversed
  for (auto& x : out.crossings) {
    if (x > d.n) x = (top - x) / (top - d.n);
    else x = Rat(d.n + 1) - x;
  }
  return normalize(out);
}

ArcDiagram lift(const ArcDiagram& sub_in, int n, const std::vector<int>& positions) {
  const ArcDiagram sub = normalize(sub_in);
  const int k = sub.n;
  if (static_cast<int>(positions.size()) != k) throw std::invalid_argument("lift: position count");
  // tokens along L; id >= 0 is a crossing index, id < 0 is marked point -id
  std::vector<int> order;
  std::vector<char> kept(n + 1, 0);
  for (int p : positions) kept[p] = 1;
  auto other_upper_end = [&](int c) {
    // crossing c (0-based) is endpoint of arcs c and c+1
    int arc = sub.arc_is_lower(c) ? c + 1 : c;
    return arc == c ? endpoint_e(sub, c) : endpoint_f(sub, c + 1);
  };
  std::map<int, std::vector<int>> gap;  // sub interval -> crossing ids
  for (int c = 0; c < sub.m(); ++c) gap[interval_of(sub.crossings[c], k)].push_back(c);
  for (auto& [q, ids] : gap)
    std::sort(ids.begin(), ids.end(), [&](int a, int b) { return sub.crossings[a] < sub.crossings[b]; });
  for (int q = 0; q <= k; ++q) {
    int from = q == 0 ? 1 : positions[q - 1] + 1;
    int to = q == k ? n : positions[q] - 1;
    std::vector<int> ignored;
    for (int p = from; p <= to; ++p) ignored.push_back(-p);
    auto& ids = gap[q];
    std::size_t spot = 0;
    if (q == k) spot = ids.size();
    else if (q > 0)
      for (std::size_t t = 0; t < ids.size(); ++t)
        if (other_upper_end(ids[t]) < sub.crossings[ids[t]]) spot = t + 1;
    for (std::size_t t = 0; t < spot; ++t) order.push_back(ids[t]);
    order.insert(order.end(), ignored.begin(), ignored.end());
    for (std::size_t t = spot; t < ids.size(); ++t) order.push_back(ids[t]);
    if (q < k) order.push_back(-positions[q]);
  }
  // place crossings between marked points; leave room for dips next to
  // ignored points by spacing generously (normalize cleans up later)
  std::vector<Rat> place(sub.m());
  std::vector<int> tok_index(sub.m());
  {
    int last = 0;
    std::vector<int> run;
    auto flush = [&](int right_mark) {
      const long long c = static_cast<long long>(run.size());
      (void)right_mark;
      for (long long r = 0; r < c; ++r) place[run[r]] = Rat(last) + Rat(r + 1, c + 1);
      run.clear();
    };
    for (std::size_t t = 0; t < order.size(); ++t) {
      int id = order[t];
      if (id >= 0) {
        run.push_back(id);
        tok_index[id] = static_cast<int>(t);
      } else {
        flush(-id);
        last = -id;
      }
    }
    flush(n + 1);
  }
  auto full_pos = [&](int sub_arc, bool e_side) -> Rat {
    if (e_side) return sub_arc == 0 ? Rat(positions[sub.start - 1]) : place[sub_arc - 1];
    return sub_arc == sub.m() ? Rat(0) : place[sub_arc];
  };
  // dips: for each upper arc, the ignored blocks it spans
  struct Dip {
    int arc;
    int block_lo, block_hi;  // ignored marked positions
    Rat span;
    Rat l, r;
  };
  std::vector<Dip> dips;
  std::vector<std::pair<int, int>> blocks;
  for (int p = 1; p <= n; ++p) {
    if (kept[p]) continue;
    int e = p;
    while (e + 1 <= n && !kept[e + 1]) ++e;
    blocks.push_back({p, e});
    p = e;
  }
  for (int a = 0; a <= sub.m(); ++a) {
    if (sub.arc_is_lower(a)) continue;
    Rat u = full_pos(a, true), v = full_pos(a, false);
    Rat lo = std::min(u, v), hi = std::max(u, v);
    for (auto [bl, bh] : blocks)
      if (lo < bl && bh < hi) dips.push_back({a, bl, bh, hi - lo, 0, 0});
  }
  // dip placement: the widest upper arc takes the innermost dip
  for (auto [bl, bh] : blocks) {
    std::vector<Dip*> ds;
    for (auto& dp : dips)
      if (dp.block_lo == bl) ds.push_back(&dp);
    if (ds.empty()) continue;
    std::sort(ds.begin(), ds.end(), [](Dip* x, Dip* y) { return x->span < y->span; });
    Rat left_bound(bl - 1), right_bound(bh + 1);
    for (auto& x : place) {
      if (x < bl && x > left_bound) left_bound = x;
      if (x > bh && x < right_bound) right_bound = x;
    }
    const long long c = static_cast<long long>(ds.size());
    for (long long r = 0; r < c; ++r) {
      ds[r]->l = left_bound + (Rat(bl) - left_bound) * Rat(r + 1, c + 1);
      ds[r]->r = right_bound - (right_bound - Rat(bh)) * Rat(r + 1, c + 1);
    }
  }
  ArcDiagram out;
  out.n = n;
  out.start = positions[sub.start - 1];
  for (int a = 0; a <= sub.m(); ++a) {
    if (!sub.arc_is_lower(a)) {
      Rat u = full_pos(a, true), v = full_pos(a, false);
      std::vector<Dip*> ds;
      for (auto& dp : dips)
        if (dp.arc == a) ds.push_back(&dp);
      std::sort(ds.begin(), ds.end(), [](Dip* x, Dip* y) { return x->block_lo < y->block_lo; });
      if (u > v) std::reverse(ds.begin(), ds.end());
      for (auto* dp : ds) {
        if (u < v) {
          out.crossings.push_back(dp->l);
          out.crossings.push_back(dp->r);
        } else {
          out.crossings.push_back(dp->r);
          out.crossings.push_back(dp->l);
        }
      }
    }
    if (a < sub.m()) out.crossings.push_back(place[a]);
  }
  if (!is_non_self_crossing(out)) {
    std::string pos;
    for (int p : positions) pos += std::to_string(p) + " ";
    throw std::logic_error("lift produced a self-crossing diagram: n " + std::to_string(n) + " positions " + pos +
                           "sub " + format_diagram(sub) + " out " + format_diagram(out));
  }
  return reduce(out);
}

ArcDiagram leaf_loop(const ArcDiagram& d, bool at_left) {
  if (d.n < 2) throw std::invalid_argument("leaf_loop needs two marked points");
  const int p = at_left ? 1 : d.n;
  if (d.start == p) throw std::invalid_argument("leaf_loop: curve starts at the leaf");
  for (auto& x : d.crossings)
    if (interval_of(x, d.n) == (at_left ? 0 : d.n))
      throw std::invalid_argument("leaf_loop: curve passes beyond the leaf");
  for (int j : raw_crossing_word(d).rays)
    if (j == p) throw std::invalid_argument("leaf_loop: curve crosses the leaf ray");
  ArcDiagram out = d;
  if (at_left) {
    Rat b(2);
    for (auto& x : d.crossings)
      if (interval_of(x, d.n) == 1 && x < b) b = x;
    out.crossings.push_back((Rat(1) + b) / 2);
    out.crossings.push_back(Rat(1, 2));
  } else {
    Rat a(d.n - 1);
    for (auto& x : d.crossings)
      if (interval_of(x, d.n) == d.n - 1 && x > a) a = x;
    out.crossings.push_back((a + Rat(d.n)) / 2);
    out.crossings.push_back(Rat(2 * d.n + 1, 2));
  }
  if (!is_non_self_crossing(out)) throw std::logic_error("leaf loop produced a self-crossing diagram");
  return reduce(out);
}

ArcDiagram straight_curve(int n, int i, bool to_right) {
  ArcDiagram d = gamma(n, i);
  d.crossings.push_back(to_right ? Rat(2 * n + 1, 2) : Rat(1, 2));
  return reduce(d);
}

std::vector<int> sigma_interval(int i, int j, bool inverse) {
  std::vector<int> g;
  int s = inverse ? -1 : 1;
  if (i < j)
    for (int t = i; t < j; ++t) g.push_back(s * t);
  else
    for (int t = i - 1; t >= j; --t) g.push_back(s * t);
  return g;
}

ArcDiagram construct_type_a_strict(const Quiver& q, int l, int m) {
  if (l > m || l < 1 || m > q.n) throw std::invalid_argument("construct_type_a_strict: need 1 <= l <= m <= n");
  Perm pi = unimodal_psi(q);
  Perm inv = inverse_perm(pi);
  ArcDiagram d = gamma(q.n, inv[l]);
  for (int i = l; i < m; ++i) {
    int a = inv[i], b = inv[i + 1];
    std::vector<int> gens;
    if (a < b) {
      gens.push_back(a);
      auto rest = sigma_interval(a + 1, b, true);
      gens.insert(gens.end(), rest.begin(), rest.end());
    } else {
      gens.push_back(-(a - 1));
      auto rest = sigma_interval(a - 1, b, false);
      gens.insert(gens.end(), rest.begin(), rest.end());
    }
    d = braid_word_apply(d, gens);
  }
  return d;
}

std::string format_rat(const Rat& q) {
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

Rat parse_rat(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(std::stoll(s));
    return Rat(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
  } catch (const std::exception&) {
    throw std::invalid_argument("bad rational '" + s + "'");
  }
}

std::string format_diagram(const ArcDiagram& d) {
  std::ostringstream o;
  o << "start " << d.start << "\ncrossings";
  for (auto& x : d.crossings) o << " " << format_rat(x);
  o << "\n";
  return o.str();
}

ArcDiagram parse_diagram(const std::string& text, int n) {
  std::istringstream in(text);
  std::string line;
  ArcDiagram d;
  d.n = n;
  bool have_start = false;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string key;
    if (!(ls >> key)) continue;
    if (key == "n") {
      ls >> d.n;
    } else if (key == "start") {
      if (!(ls >> d.start)) throw ParseError(line_no, "expected start vertex");
      have_start = true;
    } else if (key == "crossings") {
      std::string tok;
      while (ls >> tok) d.crossings.push_back(parse_rat(tok));
    } else {
      throw ParseError(line_no, "unknown keyword '" + key + "'");
    }
  }
  if (!have_start) throw ParseError(line_no, "missing start line");
  if (!positions_valid(d)) throw std::invalid_argument("diagram positions invalid");
  return d;
}

namespace {

struct Layout {
  std::map<Rat, int> column;  // position -> column
  int width = 0;
};

Layout layout(const ArcDiagram& d) {
  std::vector<Rat> all{Rat(0)};
  for (int j = 1; j <= d.n; ++j) all.push_back(Rat(j));
  for (auto& x : d.crossings) all.push_back(x);
  std::sort(all.begin(), all.end());
  Layout l;
  for (std::size_t t = 0; t < all.size(); ++t) l.column[all[t]] = 2 * static_cast<int>(t);
  l.width = 2 * static_cast<int>(all.size()) - 1;
  return l;
}

struct DrawChord {
  int c0, c1;
  int depth;
};

std::vector<DrawChord> side_chords(const ArcDiagram& d, const Layout& l, bool lower) {
  std::vector<DrawChord> cs;
  for (int k = 0; k <= d.m(); ++k) {
    if (d.arc_is_lower(k) != lower) continue;
    int a = l.column.at(endpoint_e(d, k)), b = l.column.at(endpoint_f(d, k));
    cs.push_back({std::min(a, b), std::max(a, b), 1});
  }
  // depth = 1 + deepest nested chord
  std::sort(cs.begin(), cs.end(), [](auto& x, auto& y) { return x.c1 - x.c0 < y.c1 - y.c0; });
  for (std::size_t a = 0; a < cs.size(); ++a)
    for (std::size_t b = 0; b < a; ++b)
      if (cs[a].c0 <= cs[b].c0 && cs[b].c1 <= cs[a].c1) cs[a].depth = std::max(cs[a].depth, cs[b].depth + 1);
  return cs;
}

}  // namespace

std::string render(const ArcDiagram& d, const std::string& format) {
  Layout l = layout(d);
  auto up = side_chords(d, l, false), low = side_chords(d, l, true);
  int hu = 0, hl = 0;
  for (auto& c : up) hu = std::max(hu, c.depth);
  for (auto& c : low) hl = std::max(hl, c.depth);
  if (format == "svg") {
    const int sx = 12, sy = 10, pad = 10;
    int w = l.width * sx + 2 * pad, h = (hu + hl + 2) * sy + 2 * pad;
    int base = pad + (hu + 1) * sy;
    std::ostringstream o;
    o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h << "\">\n";
    o << "<line x1=\"0\" y1=\"" << base << "\" x2=\"" << w << "\" y2=\"" << base
      << "\" stroke=\"#bbb\"/>\n";
    for (auto* side : {&up, &low})
      for (auto& c : *side) {
        int sgn = side == &up ? -1 : 1;
        int yy = base + sgn * c.depth * sy;
        o << "<path d=\"M " << pad + c.c0 * sx << " " << base << " V " << yy << " H " << pad + c.c1 * sx
          << " V " << base << "\" fill=\"none\" stroke=\"black\"/>\n";
      }
    for (int j = 1; j <= d.n; ++j) {
      int x = pad + l.column.at(Rat(j)) * sx;
      o << "<circle cx=\"" << x << "\" cy=\"" << base << "\" r=\"3\" fill=\""
        << (j == d.start ? "red" : "black") << "\"/>\n";
    }
    o << "<text x=\"" << pad << "\" y=\"" << h - 2 << "\" font-size=\"10\">b</text>\n</svg>\n";
    return o.str();
  }
  const int rows = hu + hl + 1;
  std::vector<std::string> g(rows, std::string(l.width, ' '));
  const int base = hu;
  for (auto* side : {&up, &low})
    for (auto& c : *side) {
      int sgn = side == &up ? -1 : 1;
      int yy = base + sgn * c.depth;
      for (int x = c.c0; x <= c.c1; ++x) g[yy][x] = '-';
      for (int y = std::min(base, yy) + (sgn < 0 ? 0 : 1); y <= std::max(base, yy) - (sgn < 0 ? 1 : 0); ++y) {
        g[y][c.c0] = '|';
        g[y][c.c1] = '|';
      }
      g[yy][c.c0] = '+';
      g[yy][c.c1] = '+';
    }
  for (auto& x : d.crossings) g[base][l.column.at(x)] = 'x';
  for (int j = 1; j <= d.n; ++j) g[base][l.column.at(Rat(j))] = j == d.start ? '*' : static_cast<char>('0' + j % 10);
  g[base][0] = 'b';
  std::ostringstream o;
  for (auto& r : g) {
    auto end = r.find_last_not_of(' ');
    o << (end == std::string::npos ? "" : r.substr(0, end + 1)) << "\n";
  }
  return o.str();
}

}  // namespace cvc
