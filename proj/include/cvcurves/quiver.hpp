#pragma once

#include <Eigen/Core>

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cvc {

using Vec = Eigen::VectorXi;
using Mat = Eigen::MatrixXi;

// Vertices are 1-based. Arrows are a multiset keyed by (tail, head).
struct Quiver {
  int n = 0;
  std::map<std::pair<int, int>, int> arrows;
  std::set<int> frozen;

  int arrow_count(int tail, int head) const;
  void add_arrow(int tail, int head, int mult = 1);
  int mutable_count() const { return n - static_cast<int>(frozen.size()); }
  bool is_frozen(int v) const { return frozen.count(v) > 0; }

  bool operator==(const Quiver& o) const = default;
  bool operator<(const Quiver& o) const;
};

struct ParseError : std::runtime_error {
  int line;
  ParseError(int line_no, const std::string& msg);
};

enum class GraphType { A, D, E6, E7, E8, AffineA, Other };

std::string type_name(GraphType t, int n);

struct Diagnostics {
  bool valid = true;
  std::vector<std::string> errors;
  GraphType type = GraphType::Other;
  // to_std[v] is the standard label of user vertex v (index 0 unused);
  // empty unless type is A, D or E.
  std::vector<int> to_std;
};

Diagnostics validate_quiver(const Quiver& q);

// Underlying graph class and the user -> standard label bijection.  The
// identity is preferred whenever the user labels already follow the
// convention.
std::pair<GraphType, std::vector<int>> classify_graph(const Quiver& q);

Quiver relabel(const Quiver& q, const std::vector<int>& to_new);

Mat exchange_matrix(const Quiver& q);

Quiver framed(const Quiver& q);
Quiver mutate(const Quiver& q, int i);
Quiver mutate_sequence(const Quiver& q, const std::vector<int>& seq);

// Columns of the framed state, one vector per mutable vertex.
std::vector<Vec> c_vectors(const Quiver& q);

struct EnumerationResult {
  std::vector<Vec> vectors;  // distinct c-vectors, sorted
  std::size_t states = 0;
  bool exhaustive = false;
};

// depth < 0 requests the full exchange-graph closure (finite type only).
EnumerationResult enumerate_c_vectors(const Quiver& q, int depth);

bool is_acyclic(const Quiver& q);

Quiver parse_quiver(const std::string& text);
Quiver read_quiver_file(const std::string& path);
std::string format_quiver(const Quiver& q);

}  // namespace cvc
