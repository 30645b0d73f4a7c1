#pragma once

#include "cvcurves/curve.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace cvc {

enum class Method {
  gamma,
  type_a_closed_form,
  subquiver_lift,
  leaf_loop,
  coxeter_lift,
  orbit_base,
  table_fixture,
  bounded_search,
  none
};
std::string method_name(Method m);

enum class Mode { nd, strict };

struct SearchOptions {
  int budget = -1;           // max crossings; < 0 means 2*height + n
  bool prune_nd = true;      // (a) drop prefixes that decrease
  bool prune_bound = true;   // (b) drop prefixes exceeding alpha
  Mode mode = Mode::nd;
  std::uint64_t node_limit = 0;  // 0 = unlimited
};

struct SearchStats {
  std::uint64_t nodes = 0;
  int budget = 0;
  bool hit_node_limit = false;
};

struct SearchResult {
  std::optional<ArcDiagram> diagram;
  SearchStats stats;
};

int default_budget(const Vec& alpha, int n);

// Diagram on pi.size() marked points; marked point q carries vertex pi[q-1].
SearchResult bounded_search(const Mat& a, const Perm& pi, const Vec& alpha, const SearchOptions& opt);

// Diagram checks used for every emitted curve.
bool verifies(const ArcDiagram& d, const Perm& pi, const Mat& a, const Vec& alpha, Mode mode);

struct Realization {
  Perm pi;
  ArcDiagram diagram;
  Method method = Method::none;
  SearchStats stats;
};

// Transcribed table row, stored in standard E7 labels.
struct Fixture {
  std::string name;
  Quiver quiver;
  Perm pi;
  ArcDiagram diagram;
  Vec root;
};
std::vector<Fixture> load_fixtures(const std::string& dir);
std::string default_fixture_dir();

ArcDiagram leaf_loop_extend(const ArcDiagram& d, int leaf, const Perm& pi, const Mat& a);
ArcDiagram coxeter_lift(const ArcDiagram& d, const Perm& pi, const Mat& a, int dir);

struct RealizerOptions {
  Mode mode = Mode::nd;
  bool use_search = true;
  bool use_fixtures = true;
  SearchOptions search;
  std::size_t pi_cap = 5040;
  std::size_t pi_sample = 100;
  std::uint64_t seed = 1;
};

class Realizer {
 public:
  Realizer(const Quiver& q, RealizerOptions opt, std::vector<Fixture> fixtures = {});

  // Realize alpha with the given full permutation.
  std::optional<Realization> realize_fixed(const Perm& pi, const Vec& alpha);
  // Union over P_Q (capped or sampled); first success in P_Q order.
  std::optional<Realization> descent_construct(const Vec& alpha);

  const std::vector<Perm>& permutations();
  // Record an externally found curve and forget cached failures.
  void seed(const Realization& r, const Vec& alpha);
  const Quiver& quiver() const { return q_; }
  const Mat& cartan() const { return a_; }
  GraphType type() const { return type_; }
  const std::vector<int>& to_std() const { return to_std_; }
  std::string last_trace() const { return trace_; }

 private:
  std::optional<Realization> fixed(const Perm& piV, const Vec& alpha, bool allow_search);
  std::optional<Realization> attempt(const Perm& piV, const Vec& alpha, bool allow_search);
  std::optional<Realization> fixture_for(const Perm& piV, const Vec& alpha);

  Quiver q_;
  Mat a_;
  GraphType type_;
  std::vector<int> to_std_;
  RealizerOptions opt_;
  std::vector<Fixture> fixtures_;
  std::vector<Perm> perms_;
  bool perms_ready_ = false;
  std::map<std::pair<Perm, std::vector<int>>, std::optional<Realization>> memo_[2];
  std::string trace_;
};

struct RootEntry {
  Vec root;
  bool realized = false;
  Perm pi;
  ArcDiagram diagram;
  Method method = Method::none;
  int word_length = 0;
  int crossings = 0;
  SearchStats stats;
  std::string note;
};

struct RealizationReport {
  std::string quiver_id;
  std::string mode;
  std::uint64_t seed = 0;
  int budget = -1;
  std::vector<RootEntry> entries;
  int total = 0;
  int realized = 0;
  int unrealized = 0;
  std::vector<std::string> notes;
  void tally();
  std::map<std::string, int> histogram() const;
};

std::string format_report(const RealizationReport& r, GraphType t, const std::vector<int>& to_std);
std::string summary_json(const RealizationReport& r);

struct VerifyOptions {
  Mode mode = Mode::nd;
  bool any_pi = false;  // check every pi (capped) instead of the union
  int budget = -1;
  std::size_t pi_cap = 5040;
  std::size_t pi_sample = 100;
  std::uint64_t seed = 1;
  int jobs = 1;
  bool use_search = true;
  std::string fixture_dir;
};

// Permutations used for "every pi" checks: all of P_Q up to the cap,
// otherwise a seeded sample.
std::vector<Perm> capped_permutations(const Quiver& q, std::size_t cap, std::size_t sample, std::uint64_t seed);

RealizationReport verify_theorem(const Quiver& q, const VerifyOptions& opt);

// Type A with pi = psi(Q): every root by the closed-form strict curve.
RealizationReport verify_type_a_strict(const Quiver& q);

struct AffineRoot {
  Vec root;
  int g, u, v;
  int variant;  // 0: g on the source side, 1: g on the sink side
};
Quiver affine_a_quiver(int k, int l);
std::vector<AffineRoot> affine_a_roots(int k, int l, int g_max);
RealizationReport verify_affine_a(int k, int l, int g_max, int sample, std::uint64_t seed, int budget);

struct E8Residual {
  Vec root;
  Order order_plus = Order::equal;    // c_pi alpha against alpha
  Order order_minus = Order::equal;   // c_pi^-1 alpha against alpha
  bool no_descent = false;            // neither image is strictly below alpha
  bool all_pi_no_descent = false;     // same for every pi checked
  bool leaf_rule_applies = false;
  Vec c_plus, c_minus;
  std::vector<std::pair<int, bool>> search_log;  // (budget, found)
};
struct E8Report {
  RealizationReport report;
  std::vector<E8Residual> residual;
  std::size_t pis_checked = 0;
};
Quiver e8_reference_quiver();
Perm e8_reference_pi();
std::vector<Vec> e8_residual_roots();  // in standard E8 labels
E8Report e8_campaign(const Quiver& q, const std::vector<int>& budget_schedule, std::uint64_t node_limit);

// Roots given in the two-row display order of the standard labels.
Vec from_display(GraphType t, int n, const std::vector<int>& values);

}  // namespace cvc
