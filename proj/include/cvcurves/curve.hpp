#pragma once

#include "cvcurves/root_system.hpp"

#include <boost/rational.hpp>

#include <string>
#include <vector>

namespace cvc {

using Rat = boost::rational<long long>;

// Marked points p_1..p_n sit at the integers 1..n of the line L, the
// basepoint b counts as position 0 on the lower side.  The curve runs from
// p_start through the crossings x_1..x_m to b; arc k joins x_k and x_{k+1}
// (x_0 = p_start, x_{m+1} = b) and lies below L iff m - k is even.
struct ArcDiagram {
  int n = 0;
  int start = 1;
  std::vector<Rat> crossings;

  int m() const { return static_cast<int>(crossings.size()); }
  bool arc_is_lower(int k) const { return (m() - k) % 2 == 0; }
  bool operator==(const ArcDiagram& o) const = default;
};

struct CrossingWord {
  int start = 0;
  std::vector<int> rays;
  bool operator==(const CrossingWord& o) const = default;
};

struct SignedRay {
  int ray;
  int sign;  // +1 crossing left to right
  bool operator==(const SignedRay& o) const = default;
};

struct CurveClass {
  bool positive = false;
  bool non_decreasing = false;
  bool strictly_increasing = false;
  std::vector<Vec> intermediate_roots;  // r_0 = alpha_pi(k0), r_i after i reflections
  Vec root;                             // final root made positive
};

ArcDiagram gamma(int n, int i);

bool positions_valid(const ArcDiagram& d);
bool is_non_self_crossing(const ArcDiagram& d);

// Word read off the arcs as drawn, before any simplification.
std::vector<SignedRay> raw_signed_word(const ArcDiagram& d);
CrossingWord raw_crossing_word(const ArcDiagram& d);
// Isotopy invariant word: free reduction plus removal of leading turns
// around the start point.
CrossingWord crossing_word(const ArcDiagram& d);

// Signed result s_pi(k_m) ... s_pi(k_1) alpha_pi(k_0).
Vec word_root(const Mat& a, const Perm& pi, const CrossingWord& w);
Vec associated_root(const ArcDiagram& d, const Perm& pi, const Mat& a);
CurveClass classify_word(const CrossingWord& w, const Perm& pi, const Mat& a);
CurveClass classify(const ArcDiagram& d, const Perm& pi, const Mat& a);

// Canonical positions: the r-th of c crossings in J_k (k < x < k+1) sits at
// k + r/(c+1).
ArcDiagram normalize(const ArcDiagram& d);
ArcDiagram reduce(const ArcDiagram& d);

// inverse = false applies sigma_i, true applies sigma_i^{-1}.
ArcDiagram braid_apply(const ArcDiagram& d, int i, bool inverse);
// sigma_{[i,j]} gamma_i style products; gens are applied left to right,
// positive entries sigma_g, negative entries sigma_{|g|}^{-1}.
ArcDiagram braid_word_apply(const ArcDiagram& d, const std::vector<int>& gens);

ArcDiagram c_wrap(const ArcDiagram& d, int dir);

// Reflect the picture left to right: position x -> n + 1 - x.
ArcDiagram mirror(const ArcDiagram& d);

// Embed a diagram on k = positions.size() marked points into n points; the
// sub point q goes to positions[q-1] and the curve passes below every
// other marked point.
ArcDiagram lift(const ArcDiagram& sub, int n, const std::vector<int>& positions);

// Loop around the leftmost (at_left) or rightmost marked point at the end
// of the curve, appending one crossing of that point's ray.
ArcDiagram leaf_loop(const ArcDiagram& d, bool at_left);

// Start at p_i and cross rays i+1..n (to_right) or i-1..1, then drop to b.
ArcDiagram straight_curve(int n, int i, bool to_right);

// Strictly increasing type-A curve for alpha_l + ... + alpha_m; q must use
// the path labeling and pi = unimodal_psi(q).
ArcDiagram construct_type_a_strict(const Quiver& q, int l, int m);
std::vector<int> sigma_interval(int i, int j, bool inverse);

std::string render(const ArcDiagram& d, const std::string& format);

std::string format_diagram(const ArcDiagram& d);
ArcDiagram parse_diagram(const std::string& text, int n);
std::string format_rat(const Rat& q);
Rat parse_rat(const std::string& s);

}  // namespace cvc
