#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cvcurves/realization.hpp"

#include <random>

using namespace cvc;

namespace {

Quiver make(int n, std::vector<std::pair<int, int>> arrows) {
  Quiver q;
  q.n = n;
  for (auto [t, h] : arrows) q.add_arrow(t, h);
  return q;
}

Quiver path_quiver(int n, unsigned orient) {
  Quiver q;
  q.n = n;
  for (int i = 1; i < n; ++i) {
    if (orient >> (i - 1) & 1) q.add_arrow(i + 1, i);
    else q.add_arrow(i, i + 1);
  }
  return q;
}

ArcDiagram diagram(int n, int start, std::vector<Rat> xs) {
  ArcDiagram d;
  d.n = n;
  d.start = start;
  d.crossings = std::move(xs);
  return d;
}

Perm identity(int n) {
  Perm p(n);
  for (int i = 0; i < n; ++i) p[i] = i + 1;
  return p;
}

// Random reduced diagram: a random braid applied to a random gamma_i.
ArcDiagram random_diagram(std::mt19937_64& rng, int n, int len) {
  ArcDiagram d = gamma(n, std::uniform_int_distribution<int>(1, n)(rng));
  for (int t = 0; t < len; ++t) {
    int g = std::uniform_int_distribution<int>(1, n - 1)(rng);
    d = braid_apply(d, g, rng() & 1);
  }
  return d;
}

}  // namespace

TEST_CASE("gamma is the straight drop") {
  ArcDiagram g = gamma(4, 3);
  CHECK(g.m() == 0);
  CHECK(is_non_self_crossing(g));
  CHECK(crossing_word(g) == CrossingWord{3, {}});
}

TEST_CASE("sigma interval on gamma_i") {
  for (int n = 2; n <= 6; ++n)
    for (int i = 1; i < n; ++i)
      for (int j = i + 1; j <= n; ++j) {
        ArcDiagram d = braid_word_apply(gamma(n, i), sigma_interval(i, j, false));
        CrossingWord expect{j, {}};
        for (int k = j - 1; k >= i; --k) expect.rays.push_back(k);
        CHECK(crossing_word(d) == expect);
        CHECK(raw_crossing_word(d) == expect);
      }
}

TEST_CASE("single generators on neighbouring gammas") {
  CHECK(crossing_word(braid_apply(gamma(4, 2), 2, false)) == CrossingWord{3, {2}});
  CHECK(crossing_word(braid_apply(gamma(4, 2), 2, true)) == CrossingWord{3, {}});
  CHECK(crossing_word(braid_apply(gamma(4, 3), 2, false)) == CrossingWord{2, {}});
  CHECK(crossing_word(braid_apply(gamma(4, 3), 2, true)) == CrossingWord{2, {3}});
  // far generators leave gamma alone
  CHECK(braid_apply(gamma(5, 1), 3, false) == gamma(5, 1));
}

TEST_CASE("braid relations on random diagrams") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 3 + trial % 4;
    ArcDiagram d = random_diagram(rng, n, 1 + trial % 6);
    int i = std::uniform_int_distribution<int>(1, n - 1)(rng);
    CAPTURE(format_diagram(d));
    CAPTURE(i);
    // inverse pairs
    CHECK(crossing_word(braid_apply(braid_apply(d, i, false), i, true)) == crossing_word(d));
    CHECK(crossing_word(braid_apply(braid_apply(d, i, true), i, false)) == crossing_word(d));
    // braid relation
    if (i + 1 <= n - 1) {
      ArcDiagram l = braid_word_apply(d, {i, i + 1, i});
      ArcDiagram r = braid_word_apply(d, {i + 1, i, i + 1});
      CHECK(crossing_word(l) == crossing_word(r));
    }
    // far commutation
    for (int j = i + 2; j <= n - 1; ++j)
      CHECK(crossing_word(braid_word_apply(d, {i, j})) == crossing_word(braid_word_apply(d, {j, i})));
  }
}

TEST_CASE("reduced diagrams are fixed by reduce") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    ArcDiagram d = random_diagram(rng, 3 + trial % 4, trial % 7);
    REQUIRE(is_non_self_crossing(d));
    ArcDiagram r = reduce(d);
    CHECK(reduce(r) == r);
    CHECK(crossing_word(r) == crossing_word(d));
    CHECK(raw_crossing_word(r) == crossing_word(r));
  }
}

TEST_CASE("empty bigon and start spin are removed") {
  ArcDiagram bigon = diagram(3, 1, {Rat(5, 2), Rat(13, 5)});
  REQUIRE(is_non_self_crossing(bigon));
  CHECK(reduce(bigon) == gamma(3, 1));
  ArcDiagram spin = diagram(3, 2, {Rat(5, 2), Rat(3, 2)});
  REQUIRE(is_non_self_crossing(spin));
  CHECK(raw_crossing_word(spin) == CrossingWord{2, {2}});
  CHECK(crossing_word(spin) == CrossingWord{2, {}});
  CHECK(reduce(spin) == gamma(3, 2));
}

TEST_CASE("self-crossing diagrams are rejected") {
  // upper chords (3/2, 3) and (5/2, 7/2) interleave
  ArcDiagram bad = diagram(3, 3, {Rat(3, 2), Rat(5, 2), Rat(7, 2)});
  CHECK_FALSE(is_non_self_crossing(bad));
  ArcDiagram on_point = diagram(3, 1, {Rat(2)});
  CHECK_FALSE(positions_valid(on_point));
}

TEST_CASE("three curves on 1 -> 2 -> 3 with root alpha_2") {
  Quiver q = make(3, {{1, 2}, {2, 3}});
  Mat a = cartan_matrix(q);
  Perm pi = identity(3);
  REQUIRE(enumerate_P_Q(q) == std::vector<Perm>{pi});
  Vec a2 = simple_root(3, 2);

  ArcDiagram t1 = gamma(3, 2);
  ArcDiagram t2 = diagram(3, 3, {Rat(3, 2), Rat(7, 2)});
  ArcDiagram t3 = diagram(3, 2, {Rat(1, 3), Rat(10, 3), Rat(8, 3), Rat(2, 3), Rat(3, 2), Rat(7, 3), Rat(11, 3)});
  for (auto* d : {&t1, &t2, &t3}) REQUIRE(is_non_self_crossing(*d));
  CHECK(crossing_word(t2) == CrossingWord{3, {2, 3}});
  CHECK(crossing_word(t3) == CrossingWord{2, {1, 3, 1, 3}});

  CurveClass c1 = classify(t1, pi, a), c2 = classify(t2, pi, a), c3 = classify(t3, pi, a);
  CHECK(c1.root == a2);
  CHECK(c2.root == a2);
  CHECK(c3.root == a2);
  CHECK(c1.strictly_increasing);
  CHECK(c1.non_decreasing);
  CHECK(c2.positive);
  CHECK_FALSE(c2.non_decreasing);
  CHECK(c3.positive);
  CHECK_FALSE(c3.non_decreasing);
  // the implication chain strict => nd => positive
  for (auto* c : {&c1, &c2, &c3}) {
    if (c->strictly_increasing) CHECK(c->non_decreasing);
    if (c->non_decreasing) CHECK(c->positive);
  }
}

TEST_CASE("classification chain on random curves") {
  std::mt19937_64 rng(3);
  Quiver q = make(5, {{1, 2}, {3, 2}, {3, 4}, {4, 5}});
  Mat a = cartan_matrix(q);
  for (int trial = 0; trial < 400; ++trial) {
    ArcDiagram d = random_diagram(rng, 5, trial % 8);
    Perm pi = enumerate_P_Q(q)[trial % count_P_Q(q)];
    CurveClass c = classify(d, pi, a);
    if (c.strictly_increasing) CHECK(c.non_decreasing);
    if (c.non_decreasing) CHECK(c.positive);
    CHECK(is_positive(c.root));
    CHECK(c.intermediate_roots.front() == simple_root(5, pi[d.start - 1]));
  }
}

TEST_CASE("type A strict curve on the six-vertex example") {
  // 1 -> 2 -> 3 <- 4 -> 5 -> 6
  Quiver q = make(6, {{1, 2}, {2, 3}, {4, 3}, {4, 5}, {5, 6}});
  Perm pi = unimodal_psi(q);
  REQUIRE(pi == Perm{1, 2, 4, 5, 6, 3});
  ArcDiagram d = construct_type_a_strict(q, 1, 6);
  CHECK(is_non_self_crossing(d));
  CrossingWord w = crossing_word(d);
  // vertex word 6 | 5 4 3 2 1
  CHECK(pi[w.start - 1] == 6);
  std::vector<int> verts;
  for (int r : w.rays) verts.push_back(pi[r - 1]);
  CHECK(verts == std::vector<int>{5, 4, 3, 2, 1});
  CurveClass c = classify(d, pi, cartan_matrix(q));
  CHECK(c.strictly_increasing);
  CHECK(c.root == Vec::Ones(6));
}

TEST_CASE("type A strict curves for all intervals") {
  for (int n = 1; n <= 6; ++n)
    for (unsigned o = 0; o < (1u << (n - 1)); ++o) {
      Quiver q = path_quiver(n, o);
      Perm pi = unimodal_psi(q);
      Mat a = cartan_matrix(q);
      for (int l = 1; l <= n; ++l)
        for (int m = l; m <= n; ++m) {
          ArcDiagram d = construct_type_a_strict(q, l, m);
          Vec want = Vec::Zero(n);
          want.segment(l - 1, m - l + 1).setOnes();
          CAPTURE(n);
          CAPTURE(o);
          CAPTURE(l);
          CAPTURE(m);
          CHECK(verifies(d, pi, a, want, Mode::strict));
        }
    }
}

TEST_CASE("Coxeter wrap applies c_pi to the signed root") {
  std::mt19937_64 rng(9);
  Quiver q = make(4, {{1, 2}, {3, 2}, {4, 3}});
  Mat a = cartan_matrix(q);
  for (int trial = 0; trial < 200; ++trial) {
    ArcDiagram d = random_diagram(rng, 4, trial % 6);
    Perm pi = enumerate_P_Q(q)[trial % count_P_Q(q)];
    Vec r = word_root(a, pi, raw_crossing_word(d));
    for (int dir : {+1, -1}) {
      ArcDiagram w = c_wrap(d, dir);
      CHECK(is_non_self_crossing(w));
      Vec want = coxeter_apply(a, pi, r, dir);
      // a curve only determines its root up to sign
      CHECK(make_positive(word_root(a, pi, crossing_word(w))) == make_positive(want));
    }
  }
}

TEST_CASE("mirror with the reversed permutation keeps the root") {
  std::mt19937_64 rng(21);
  Quiver q = make(5, {{1, 2}, {3, 2}, {3, 4}, {5, 4}});
  Mat a = cartan_matrix(q);
  for (int trial = 0; trial < 200; ++trial) {
    ArcDiagram d = random_diagram(rng, 5, trial % 7);
    Perm pi = enumerate_P_Q(q)[trial % count_P_Q(q)];
    ArcDiagram m = mirror(d);
    CHECK(is_non_self_crossing(m));
    CHECK(classify(m, reversed(pi), a).root == classify(d, pi, a).root);
    CHECK(mirror(m) == normalize(d));
  }
}

TEST_CASE("lift under ignored points keeps the root") {
  std::mt19937_64 rng(17);
  Quiver q = make(6, {{1, 2}, {2, 3}, {4, 3}, {4, 5}, {6, 5}});
  Mat a = cartan_matrix(q);
  for (int trial = 0; trial < 300; ++trial) {
    // choose 3 kept positions out of 6
    std::vector<int> pos = {1, 2, 3, 4, 5, 6};
    std::shuffle(pos.begin(), pos.end(), rng);
    pos.resize(3);
    std::sort(pos.begin(), pos.end());
    Perm pi = {1, 2, 3, 4, 5, 6};
    std::shuffle(pi.begin(), pi.end(), rng);
    Perm sub;
    for (int p : pos) sub.push_back(pi[p - 1]);
    ArcDiagram s = random_diagram(rng, 3, trial % 6);
    ArcDiagram l = lift(s, 6, pos);
    CAPTURE(format_diagram(s));
    CHECK(is_non_self_crossing(l));
    CHECK(classify(l, pi, a).root == classify(s, sub, a).root);
    CHECK(classify(l, pi, a).non_decreasing == classify(s, sub, a).non_decreasing);
  }
}

TEST_CASE("leaf loop adds the leaf") {
  // D5 root (0,1,1,1,1;1) grows to the E6 root (1,1,1,1,1;1) by looping at vertex 1
  Quiver e6 = make(6, {{1, 4}, {2, 3}, {3, 6}, {4, 6}, {5, 6}});
  REQUIRE(classify_graph(e6).first == GraphType::E6);
  Mat a = cartan_matrix(e6);
  Vec d5 = from_display(GraphType::E6, 6, {1, 1, 1, 1, 0, 1});
  Vec full = from_display(GraphType::E6, 6, {1, 1, 1, 1, 1, 1});
  Perm pi;
  for (const Perm& p : enumerate_P_Q(e6))
    if (p.front() == 1) {
      pi = p;
      break;
    }
  REQUIRE_FALSE(pi.empty());
  Realizer R(e6, {});
  Perm sub(pi.begin() + 1, pi.end());
  auto s = R.realize_fixed(pi, d5);
  REQUIRE(s);
  ArcDiagram g = leaf_loop_extend(s->diagram, 1, pi, a);
  CHECK(verifies(g, pi, a, full, Mode::nd));
  // a curve that already crosses the leaf ray is refused
  ArcDiagram crossing = braid_word_apply(gamma(6, 1), sigma_interval(1, 3, false));
  CHECK_THROWS(leaf_loop(crossing, true));
}

TEST_CASE("straight curves give theta") {
  Quiver q = make(5, {{1, 2}, {3, 2}, {3, 4}, {5, 4}});
  Mat a = cartan_matrix(q);
  for (const Perm& pi : enumerate_P_Q(q))
    for (int i = 1; i <= 5; ++i) {
      ArcDiagram d = straight_curve(5, i, true);
      CHECK(is_non_self_crossing(d));
      CHECK(word_root(a, pi, crossing_word(d)) == theta(a, pi, i));
    }
}

TEST_CASE("diagram text round trip and rendering") {
  ArcDiagram d = diagram(3, 2, {Rat(1, 3), Rat(10, 3), Rat(8, 3), Rat(2, 3), Rat(3, 2), Rat(7, 3), Rat(11, 3)});
  CHECK(parse_diagram(format_diagram(d), 3) == d);
  CHECK_THROWS(parse_diagram("start 2\ncrossings 2/1\n", 3));
  std::string art = render(d, "ascii");
  CHECK(art.find('*') != std::string::npos);
  std::string svg = render(d, "svg");
  CHECK(svg.rfind("<svg", 0) == 0);
}
