#include "cvcurves/realization.hpp"

#include <algorithm>

namespace cvc {

int default_budget(const Vec& alpha, int n) { return 2 * height(alpha) + n; }

bool verifies(const ArcDiagram& d, const Perm& pi, const Mat& a, const Vec& alpha, Mode mode) {
  if (d.n != static_cast<int>(pi.size())) return false;
  if (!is_non_self_crossing(d)) return false;
  CurveClass c = classify(d, pi, a);
  if (c.root != alpha) return false;
  return mode == Mode::strict ? c.strictly_increasing : c.non_decreasing;
}

namespace {

constexpr int kStart = -1;
constexpr int kBase = -2;

// Depth-first construction of reduced diagrams.  Upper arcs always cross
// at least one ray, lower arcs always join two different gaps, so every
// reduced diagram within the budget is reachable.
class Search {
 public:
  Search(const Mat& a, const Perm& pi, const Vec& alpha, const SearchOptions& opt)
      : a_(a), pi_(pi), alpha_(alpha), opt_(opt), k_(static_cast<int>(pi.size())) {
    budget_ = opt.budget < 0 ? default_budget(alpha, k_) : opt.budget;
    lists_.assign(k_ + 1, {});
  }

  SearchResult run() {
    SearchResult res;
    res.stats.budget = budget_;
    for (int s = 1; s <= k_ && !found_ && !aborted_; ++s) {
      if (opt_.prune_bound && alpha_(pi_[s - 1] - 1) <= 0) continue;
      start_ = s;
      roots_.assign(1, simple_root(static_cast<int>(a_.rows()), pi_[s - 1]));
      valid_.assign(1, true);
      for (bool first_lower : {true, false}) {
        if (found_ || aborted_) break;
        extend(kStart, first_lower);
      }
    }
    res.stats.nodes = nodes_;
    res.stats.hit_node_limit = aborted_;
    if (found_) res.diagram = witness_;
    return res;
  }

 private:
  std::pair<int, int> key(int code) const {
    if (code == kBase) return {-1, 0};
    if (code == kStart) return {2 * start_, 0};
    int c = interval_[code];
    const auto& l = lists_[c];
    int idx = static_cast<int>(std::find(l.begin(), l.end(), code) - l.begin());
    return {2 * c + 1, idx};
  }

  bool chord_ok(int side, int p, int q) const {
    auto kp = key(p), kq = key(q);
    auto lo = std::min(kp, kq), hi = std::max(kp, kq);
    for (auto [c, d] : chords_[side]) {
      auto kc = key(c), kd = key(d);
      auto clo = std::min(kc, kd), chi = std::max(kc, kd);
      bool in_c = lo < clo && clo < hi, in_d = lo < chi && chi < hi;
      bool out_c = clo < lo || clo > hi, out_d = chi < lo || chi > hi;
      if ((in_c && out_d) || (in_d && out_c)) return false;
    }
    return true;
  }

  int interval_of_code(int code) const { return code == kStart ? -1 : interval_[code]; }

  int new_point(int c, int idx) {
    int id = static_cast<int>(interval_.size());
    interval_.push_back(c);
    lists_[c].insert(lists_[c].begin() + idx, id);
    return id;
  }

  void drop_point(int id) {
    int c = interval_[id];
    auto& l = lists_[c];
    l.erase(std::find(l.begin(), l.end(), id));
    interval_.pop_back();
  }

  void record() {
    ArcDiagram d;
    d.n = k_;
    d.start = start_;
    std::vector<Rat> pos(interval_.size());
    for (int c = 0; c <= k_; ++c) {
      const long long cnt = static_cast<long long>(lists_[c].size());
      for (long long r = 0; r < cnt; ++r) pos[lists_[c][r]] = Rat(c) + Rat(r + 1, cnt + 1);
    }
    for (int id : path_) d.crossings.push_back(pos[id]);
    witness_ = d;
    found_ = true;
  }

  bool step_ok(const Vec& prev, const Vec& next) const {
    if (opt_.mode == Mode::strict) return strictly_dominated(prev, next);
    return dominated(prev, next);
  }

  void extend(int cur, bool next_lower) {
    if (found_ || aborted_) return;
    ++nodes_;
    if (opt_.node_limit && nodes_ > opt_.node_limit) {
      aborted_ = true;
      return;
    }
    const int m = static_cast<int>(path_.size());
    if (next_lower) {
      if (valid_.back() && roots_.back() == alpha_ && chord_ok(1, kBase, cur)) {
        record();
        return;
      }
      if (m + 2 > budget_) return;
      int here = interval_of_code(cur);
      for (int c = 0; c <= k_; ++c) {
        if (cur == kStart ? (c == start_ - 1 || c == start_) : c == here) continue;
        int len = static_cast<int>(lists_[c].size());
        for (int idx = 0; idx <= len; ++idx) {
          int id = new_point(c, idx);
          if (chord_ok(1, cur, id)) {
            chords_[1].push_back({cur, id});
            path_.push_back(id);
            extend(id, false);
            path_.pop_back();
            chords_[1].pop_back();
          }
          drop_point(id);
          if (found_ || aborted_) return;
        }
      }
      return;
    }
    if (m + 1 > budget_) return;
    for (int dir : {+1, -1}) {
      // rays crossed leaving `cur` in direction dir
      int first_ray, base_interval;
      if (cur == kStart) {
        first_ray = start_ + dir;
        base_interval = dir > 0 ? start_ : start_ - 1;
      } else {
        int c = interval_[cur];
        first_ray = dir > 0 ? c + 1 : c;
        base_interval = c;
      }
      std::size_t pushed = 0;
      for (int L = 1;; ++L) {
        int j = first_ray + dir * (L - 1);
        if (j < 1 || j > k_) break;
        Vec next = simple_reflection(a_, pi_[j - 1], roots_.back());
        bool ok = valid_.back() && step_ok(roots_.back(), next);
        if (!ok && opt_.prune_nd) break;
        if (opt_.prune_bound && !dominated(next, alpha_)) break;
        roots_.push_back(next);
        valid_.push_back(ok);
        ++pushed;
        int end_interval = base_interval + dir * L;
        int len = static_cast<int>(lists_[end_interval].size());
        for (int idx = 0; idx <= len; ++idx) {
          int id = new_point(end_interval, idx);
          if (chord_ok(0, cur, id)) {
            chords_[0].push_back({cur, id});
            path_.push_back(id);
            extend(id, true);
            path_.pop_back();
            chords_[0].pop_back();
          }
          drop_point(id);
          if (found_ || aborted_) break;
        }
        if (found_ || aborted_) break;
      }
      for (std::size_t t = 0; t < pushed; ++t) {
        roots_.pop_back();
        valid_.pop_back();
      }
      if (found_ || aborted_) return;
    }
  }

  const Mat& a_;
  const Perm& pi_;
  Vec alpha_;
  SearchOptions opt_;
  int k_;
  int budget_ = 0;
  int start_ = 1;
  std::vector<int> interval_;
  std::vector<std::vector<int>> lists_;
  std::vector<std::pair<int, int>> chords_[2];
  std::vector<int> path_;
  std::vector<Vec> roots_;
  std::vector<char> valid_;
  std::uint64_t nodes_ = 0;
  bool found_ = false;
  bool aborted_ = false;
  ArcDiagram witness_;
};

}  // namespace

SearchResult bounded_search(const Mat& a, const Perm& pi, const Vec& alpha, const SearchOptions& opt) {
  Search s(a, pi, alpha, opt);
  SearchResult r = s.run();
  if (r.diagram) {
    ArcDiagram red = reduce(*r.diagram);
    if (!verifies(red, pi, a, alpha, opt.mode)) throw std::logic_error("search witness failed re-verification");
    r.diagram = red;
  }
  return r;
}

}  // namespace cvc
