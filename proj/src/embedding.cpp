#include "embedding.hpp"

#include <algorithm>
#include <climits>
#include <string>

#include "foxcolor/errors.hpp"

namespace foxcolor::detail {

Embedding Embedding::from_pd(const PdCode& pd) {
  Embedding e;
  e.crossings = pd.crossing_count();
  e.mate.assign(4 * e.crossings, -1);
  e.hint.assign(4 * e.crossings, 0);
  std::vector<int> first(pd.edge_count() + 1, -1);
  for (int c = 0; c < e.crossings; ++c) {
    for (int p = 0; p < 4; ++p) {
      const int label = pd.crossings[c][p];
      const int s = slot(c, p);
      if (first[label] < 0) {
        first[label] = s;
      } else {
        e.link(first[label], s, label);
      }
    }
  }
  return e;
}

int Embedding::add_crossing() {
  mate.resize(mate.size() + 4, -1);
  hint.resize(hint.size() + 4, 0);
  return crossings++;
}

void Embedding::link(int a, int b, int label_hint) {
  mate[a] = b;
  mate[b] = a;
  hint[a] = label_hint;
  hint[b] = label_hint;
}

std::pair<int, int> Embedding::edge_slots(int label) const {
  for (int s = 0; s < 4 * crossings; ++s) {
    if (hint[s] == label) return {std::min(s, mate[s]), std::max(s, mate[s])};
  }
  throw InputError("no edge labelled " + std::to_string(label));
}

std::vector<std::vector<int>> Embedding::faces() const {
  std::vector<std::vector<int>> result;
  std::vector<bool> seen(4 * crossings, false);
  for (int s = 0; s < 4 * crossings; ++s) {
    if (seen[s]) continue;
    std::vector<int> face;
    int dart = s;
    do {
      seen[dart] = true;
      face.push_back(dart);
      dart = cw_next(mate[dart]);
    } while (dart != s);
    result.push_back(std::move(face));
  }
  return result;
}

Embedding Embedding::without_crossings(const std::vector<bool>& removed) const {
  std::vector<int> new_index(crossings, -1);
  int survivors = 0;
  for (int c = 0; c < crossings; ++c) {
    if (!removed[c]) new_index[c] = survivors++;
  }

  Embedding out;
  out.crossings = survivors;
  out.mate.assign(4 * survivors, -1);
  out.hint.assign(4 * survivors, 0);

  auto merge_hint = [](int a, int b) {
    if (a == 0) return b;
    if (b == 0) return a;
    return std::min(a, b);
  };

  std::vector<bool> used(4 * crossings, false);
  for (int s = 0; s < 4 * crossings; ++s) {
    if (removed[crossing_of(s)]) continue;
    int t = mate[s];
    int h = hint[s];
    int guard = 4 * crossings + 4;
    while (removed[crossing_of(t)]) {
      used[t] = true;
      const int u = opposite(t);
      used[u] = true;
      h = merge_hint(h, hint[u]);
      t = mate[u];
      if (--guard < 0) throw InputError("inconsistent diagram during rewrite");
    }
    const int ns = slot(new_index[crossing_of(s)], position_of(s));
    const int nt = slot(new_index[crossing_of(t)], position_of(t));
    out.mate[ns] = nt;
    out.hint[ns] = h;
  }

  int loops = 0;
  for (int s = 0; s < 4 * crossings; ++s) {
    if (!removed[crossing_of(s)] || used[s]) continue;
    ++loops;
    int t = s;
    do {
      used[t] = true;
      used[mate[t]] = true;
      t = opposite(mate[t]);
    } while (!used[t]);
  }
  if (loops > 0 && !(survivors == 0 && loops == 1)) {
    throw InputError("move would leave a crossing-free component");
  }
  return out;
}

PdCode Embedding::render() const {
  if (crossings == 0) return PdCode{};

  struct Component {
    std::vector<std::pair<int, int>> edges;  // (leaving slot, arriving slot)
    int key_hint = INT_MAX;
    int key_slot = INT_MAX;
  };

  std::vector<bool> seen(4 * crossings, false);
  std::vector<Component> components;
  for (int s = 0; s < 4 * crossings; ++s) {
    if (seen[s]) continue;
    Component comp;
    int leave = s;
    do {
      const int arrive = mate[leave];
      seen[leave] = seen[arrive] = true;
      comp.edges.emplace_back(leave, arrive);
      leave = opposite(arrive);
    } while (leave != s);

    // Start at the lowest surviving label, or the lowest slot if none.
    std::size_t start = 0;
    int best_hint = INT_MAX;
    int best_slot = INT_MAX;
    for (std::size_t i = 0; i < comp.edges.size(); ++i) {
      const auto [a, b] = comp.edges[i];
      const int h = hint[a] > 0 ? hint[a] : INT_MAX;
      const int lo = std::min(a, b);
      if (h < best_hint || (h == best_hint && lo < best_slot)) {
        best_hint = h;
        best_slot = lo;
        start = i;
      }
    }
    std::rotate(comp.edges.begin(), comp.edges.begin() + start,
                comp.edges.end());

    // Keep whichever direction agrees with more of the existing
    // incoming-under positions.
    int forward = 0;
    int backward = 0;
    for (const auto& [a, b] : comp.edges) {
      if (position_of(b) == 0) ++forward;
      if (position_of(a) == 2) ++forward;
      if (position_of(a) == 0) ++backward;
      if (position_of(b) == 2) ++backward;
    }
    if (backward > forward) {
      std::reverse(comp.edges.begin() + 1, comp.edges.end());
      for (auto& e : comp.edges) std::swap(e.first, e.second);
    }
    comp.key_hint = best_hint;
    comp.key_slot = best_slot;
    components.push_back(std::move(comp));
  }

  std::sort(components.begin(), components.end(),
            [](const Component& x, const Component& y) {
              if (x.key_hint != y.key_hint) return x.key_hint < y.key_hint;
              return x.key_slot < y.key_slot;
            });

  std::vector<int> label(4 * crossings, 0);
  std::vector<bool> arriving(4 * crossings, false);
  int next = 1;
  for (const auto& comp : components) {
    for (const auto& [a, b] : comp.edges) {
      label[a] = label[b] = next++;
      arriving[b] = true;
    }
  }

  PdCode pd;
  pd.crossings.reserve(crossings);
  for (int c = 0; c < crossings; ++c) {
    const int r = arriving[slot(c, 0)] ? 0 : 2;
    pd.crossings.push_back({label[slot(c, r)], label[slot(c, r + 1)],
                            label[slot(c, r + 2)], label[slot(c, r + 3)]});
  }
  return pd;
}

}  // namespace foxcolor::detail
