#include "cvcurves/realization.hpp"

#include <nlohmann/json.hpp>

#include <sstream>

namespace cvc {

void RealizationReport::tally() {
  total = static_cast<int>(entries.size());
  realized = 0;
  for (const auto& e : entries) realized += e.realized ? 1 : 0;
  unrealized = total - realized;
}

std::map<std::string, int> RealizationReport::histogram() const {
  std::map<std::string, int> h;
  for (const auto& e : entries) ++h[method_name(e.realized ? e.method : Method::none)];
  return h;
}

namespace {

std::string perm_str(const Perm& p) {
  std::string s;
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? " " : "") + std::to_string(p[i]);
  return s;
}

std::string word_str(const CrossingWord& w) {
  std::string s = "(" + std::to_string(w.start) + ", [";
  for (std::size_t i = 0; i < w.rays.size(); ++i) s += (i ? "," : "") + std::to_string(w.rays[i]);
  return s + "])";
}

}  // namespace

std::string format_report(const RealizationReport& r, GraphType t, const std::vector<int>& to_std) {
  std::ostringstream o;
  o << "quiver " << r.quiver_id << "\n";
  o << "mode " << r.mode << "\n";
  o << "seed " << r.seed << "\n";
  o << "budget " << (r.budget < 0 ? std::string("default") : std::to_string(r.budget)) << "\n";
  o << "roots " << r.total << " realized " << r.realized << " unrealized " << r.unrealized << "\n";
  for (auto& [m, c] : r.histogram()) o << "method " << m << " " << c << "\n";
  for (const auto& n : r.notes) o << "note " << n << "\n";
  o << "\n";
  for (const auto& e : r.entries) {
    o << "root " << format_vec(e.root);
    std::string disp = display_root(t, to_std, e.root);
    if (disp.find('\n') != std::string::npos) {
      for (auto& ch : disp)
        if (ch == '\n') ch = '/';
      o << " [" << disp << "]";
    }
    o << "\n";
    if (!e.realized) {
      o << "  unrealized";
      if (!e.pi.empty()) o << " pi " << perm_str(e.pi);
      o << "\n";
      std::istringstream notes(e.note);
      for (std::string line; std::getline(notes, line);)
        if (!line.empty()) o << "  note " << line << "\n";
      continue;
    }
    o << "  pi " << perm_str(e.pi) << "\n";
    o << "  method " << method_name(e.method) << " crossings " << e.crossings << " word_length " << e.word_length
      << "\n";
    o << "  word " << word_str(crossing_word(e.diagram)) << "\n";
    std::string d = format_diagram(e.diagram);
    std::istringstream ds(d);
    for (std::string line; std::getline(ds, line);) o << "  " << line << "\n";
    if (e.method == Method::bounded_search) o << "  search nodes " << e.stats.nodes << "\n";
    if (!e.note.empty()) o << "  note " << e.note << "\n";
  }
  return o.str();
}

std::string summary_json(const RealizationReport& r) {
  nlohmann::ordered_json j;
  j["quiver"] = r.quiver_id;
  j["mode"] = r.mode;
  j["seed"] = r.seed;
  j["budget"] = r.budget;
  j["total"] = r.total;
  j["realized"] = r.realized;
  j["unrealized"] = r.unrealized;
  j["methods"] = r.histogram();
  int max_len = 0, max_cross = 0;
  std::map<int, int> lengths;
  nlohmann::ordered_json missing = nlohmann::json::array();
  for (const auto& e : r.entries) {
    if (!e.realized) {
      missing.push_back(format_vec(e.root));
      continue;
    }
    max_len = std::max(max_len, e.word_length);
    max_cross = std::max(max_cross, e.crossings);
    ++lengths[e.word_length];
  }
  nlohmann::ordered_json lh = nlohmann::json::object();
  for (auto& [l, c] : lengths) lh[std::to_string(l)] = c;
  j["word_length_histogram"] = lh;
  j["max_word_length"] = max_len;
  j["max_crossings"] = max_cross;
  j["unrealized_roots"] = missing;
  j["notes"] = r.notes;
  return j.dump(2) + "\n";
}

}  // namespace cvc
