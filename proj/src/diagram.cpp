#include "foxcolor/diagram.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "foxcolor/errors.hpp"
#include "json.hpp"

namespace foxcolor {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

// Disjoint-set forest over edge labels.
class LabelUnion {
 public:
  explicit LabelUnion(int size) : parent_(size) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    // Keep the smaller label as root so roots are arc ids.
    if (b < a) std::swap(a, b);
    parent_[b] = a;
  }

 private:
  std::vector<int> parent_;
};

int count_components(const PdCode& pd) {
  const int edges = pd.edge_count();
  if (edges == 0) return 1;
  // Each label occurs at two (crossing, position) places; a strand enters at
  // one position and leaves through the opposite one.
  std::vector<std::vector<std::pair<int, int>>> places(edges + 1);
  for (int c = 0; c < pd.crossing_count(); ++c) {
    for (int p = 0; p < 4; ++p) places[pd.crossings[c][p]].emplace_back(c, p);
  }
  std::vector<bool> seen(edges + 1, false);
  int components = 0;
  for (int start = 1; start <= edges; ++start) {
    if (seen[start]) continue;
    ++components;
    int label = start;
    auto at = places[label][1];
    while (!seen[label]) {
      seen[label] = true;
      const int next = pd.crossings[at.first][(at.second + 2) % 4];
      const auto& pl = places[next];
      const auto opposite = std::make_pair(at.first, (at.second + 2) % 4);
      at = (pl[0] == opposite) ? pl[1] : pl[0];
      label = next;
    }
  }
  return components;
}

}  // namespace

PdCode parse_pd(std::string_view text) {
  const auto body = trim(text);
  if (body == "unknot") return PdCode{};

  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(body);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError("malformed PD code: " + std::string(e.what()));
  }
  if (!doc.is_array()) {
    throw InputError("malformed PD code: expected a list of quadruples");
  }
  if (doc.empty()) {
    throw InputError(
        "empty crossing list; the crossing-free diagram is written \"unknot\"");
  }

  PdCode raw;
  for (const auto& quad : doc) {
    if (!quad.is_array() || quad.size() != 4) {
      throw InputError("malformed PD code: crossing " + quad.dump() +
                       " is not a quadruple");
    }
    std::array<int, 4> crossing{};
    for (std::size_t i = 0; i < 4; ++i) {
      if (!quad[i].is_number_integer() || quad[i].get<long long>() <= 0 ||
          quad[i].get<long long>() > 1'000'000'000) {
        throw InputError("malformed PD code: edge label " + quad[i].dump() +
                         " is not a positive integer");
      }
      crossing[i] = quad[i].get<int>();
    }
    raw.crossings.push_back(crossing);
  }

  std::map<int, int> occurrences;
  for (const auto& c : raw.crossings) {
    for (int label : c) ++occurrences[label];
  }
  for (const auto& [label, count] : occurrences) {
    if (count != 2) {
      throw InputError("edge label " + std::to_string(label) + " appears " +
                       std::to_string(count) +
                       (count == 1 ? " time" : " times") +
                       "; every edge label must appear exactly twice");
    }
  }

  std::map<int, int> rank;
  for (const auto& entry : occurrences) {
    const int next = static_cast<int>(rank.size()) + 1;
    rank.emplace(entry.first, next);
  }
  for (auto& c : raw.crossings) {
    for (int& label : c) label = rank.at(label);
  }
  return raw;
}

std::string format_pd(const PdCode& pd) {
  if (pd.is_unknot()) return "unknot";
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < pd.crossings.size(); ++i) {
    if (i) out << ',';
    const auto& c = pd.crossings[i];
    out << '[' << c[0] << ',' << c[1] << ',' << c[2] << ',' << c[3] << ']';
  }
  out << ']';
  return out.str();
}

PlanarDiagram::PlanarDiagram(PdCode pd) : pd_(std::move(pd)) {
  const int edges = pd_.edge_count();
  if (edges == 0) {
    arc_ids_ = {1};
    return;
  }

  LabelUnion arcs(edges + 1);
  for (const auto& c : pd_.crossings) arcs.unite(c[1], c[3]);

  edge_arc_.assign(edges + 1, -1);
  for (int label = 1; label <= edges; ++label) {
    const int root = arcs.find(label);
    if (root == label) arc_ids_.push_back(label);
  }
  for (int label = 1; label <= edges; ++label) {
    const int root = arcs.find(label);
    edge_arc_[label] = static_cast<int>(
        std::lower_bound(arc_ids_.begin(), arc_ids_.end(), root) -
        arc_ids_.begin());
  }
  relations_.reserve(pd_.crossings.size());
  for (const auto& c : pd_.crossings) {
    relations_.push_back({edge_arc_[c[0]], edge_arc_[c[2]], edge_arc_[c[1]]});
  }
  components_ = count_components(pd_);
}

int PlanarDiagram::arc_of_edge(int label) const {
  if (pd_.is_unknot()) {
    if (label == 1) return 0;
  } else if (label >= 1 && label < static_cast<int>(edge_arc_.size())) {
    return edge_arc_[label];
  }
  throw InputError("no edge labelled " + std::to_string(label));
}

PlanarDiagram build_diagram(const PdCode& pd) { return PlanarDiagram(pd); }

}  // namespace foxcolor
