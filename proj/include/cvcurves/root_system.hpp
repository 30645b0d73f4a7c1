#pragma once

#include "cvcurves/quiver.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cvc {

// pi[k-1] is the vertex at position k.  For subquivers the entries are the
// original vertex labels.
using Perm = std::vector<int>;

struct NotFiniteType : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Mat cartan_matrix(const Quiver& q);

Vec simple_root(int n, int i);
int height(const Vec& r);
bool is_positive(const Vec& r);  // all >= 0 and nonzero
bool is_negative(const Vec& r);
Vec make_positive(const Vec& r);  // negates all-nonpositive vectors

Vec simple_reflection(const Mat& a, int i, Vec r);

// Canonical order: height, then lexicographic on coefficients.
bool root_less(const Vec& a, const Vec& b);

std::vector<Vec> positive_roots(const Mat& a);

enum class Order { less, equal, greater, incomparable };
Order leq_D(const Vec& a, const Vec& b);
bool dominated(const Vec& a, const Vec& b);  // a <=_D b
bool strictly_dominated(const Vec& a, const Vec& b);

bool in_P_Q(const Quiver& q, const Perm& pi);
// Linear extensions in lexicographic order.  `limit` caps the output.
std::vector<Perm> enumerate_P_Q(const Quiver& q, std::size_t limit = 0);
std::size_t count_P_Q(const Quiver& q);

// dir = +1 applies s_pi(1) ... s_pi(n) (rightmost first); -1 the inverse.
Vec coxeter_apply(const Mat& a, const Perm& pi, Vec r, int dir);
int coxeter_order(const Mat& a);
int coxeter_order(const Mat& a, const Perm& pi);

// theta_i = s_pi(n) ... s_pi(i+1) alpha_pi(i), i is a position (1-based).
Vec theta(const Mat& a, const Perm& pi, int i);

struct CoxeterOrbit {
  int i;
  std::vector<Vec> elements;  // c^k theta_i, k = 0..h-1
};
std::vector<CoxeterOrbit> omega_orbits(const Mat& a, const Perm& pi);

// Type A on the standard path labeling 1 - 2 - ... - n.
bool is_unimodal(const Perm& pi);
Perm unimodal_psi(const Quiver& q);
Quiver unimodal_omega(const Perm& pi);

struct SubQuiver {
  Quiver q;                 // relabeled to 1..k
  std::vector<int> labels;  // labels[j-1] = original label of new vertex j
};
SubQuiver subquiver_restrict(const Quiver& q, const std::vector<int>& V);
bool is_connected_subset(const Quiver& q, const std::vector<int>& V);
Perm phi(const Perm& pi, const std::vector<int>& V);
// Some pi in P_Q whose restriction to the vertices of pi_sub is pi_sub.
Perm phi_preimage(const Perm& pi_sub, const Quiver& q);

Perm inverse_perm(const Perm& pi);  // position of each vertex, 1-based
Perm reversed(const Perm& pi);

// Standard-label display: one row for A, two rows (branch below) for D/E.
std::string display_root(GraphType t, const std::vector<int>& to_std, const Vec& r);
std::string format_vec(const Vec& r);
Vec parse_vec(const std::string& s);

}  // namespace cvc
