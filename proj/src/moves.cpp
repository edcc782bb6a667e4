#include <algorithm>
#include <charconv>
#include <map>
#include <set>
#include <string>

#include "embedding.hpp"
#include "foxcolor/diagram.hpp"
#include "foxcolor/errors.hpp"

namespace foxcolor {
namespace {

using detail::Embedding;

// Kink layouts for R1 insertion: positions of the edge towards the first
// endpoint, the edge towards the second endpoint, and the two loop ends.
// The four rows cover both sides of the strand and both crossing choices.
constexpr int kKinkLayouts[4][4] = {
    {0, 1, 2, 3},
    {1, 2, 3, 0},
    {0, 3, 1, 2},
    {1, 0, 2, 3},
};

std::vector<int> sorted_labels(const Embedding& e, const std::vector<int>& face) {
  std::vector<int> labels;
  for (int dart : face) labels.push_back(e.hint[dart]);
  std::sort(labels.begin(), labels.end());
  return labels;
}

bool distinct_crossings(const std::vector<int>& face) {
  std::set<int> seen;
  for (int dart : face) seen.insert(Embedding::crossing_of(dart));
  return seen.size() == face.size();
}

bool is_kink_edge(int a, int b) {
  if (Embedding::crossing_of(a) != Embedding::crossing_of(b)) return false;
  const int gap = (Embedding::position_of(a) - Embedding::position_of(b) + 4) % 4;
  return gap == 1 || gap == 3;
}

// Bigon whose first edge is over (or under) at both of its crossings.
bool is_reducible_bigon(const Embedding& e, const std::vector<int>& face) {
  if (face.size() != 2 || !distinct_crossings(face)) return false;
  const int d0 = face[0];
  return Embedding::is_over(d0) == Embedding::is_over(e.mate[d0]);
}

// Triangle with one strand over at both of its crossings.
bool is_movable_triangle(const Embedding& e, const std::vector<int>& face) {
  if (face.size() != 3 || !distinct_crossings(face)) return false;
  for (int dart : face) {
    if (Embedding::is_over(dart) && Embedding::is_over(e.mate[dart])) return true;
  }
  return false;
}

// Faces matching a site's edge set and the given pattern, in face order.
template <typename Pattern>
std::vector<std::vector<int>> matching_faces(const Embedding& e,
                                             std::vector<int> edges,
                                             Pattern pattern) {
  std::sort(edges.begin(), edges.end());
  std::vector<std::vector<int>> out;
  for (auto& face : e.faces()) {
    if (sorted_labels(e, face) == edges && pattern(e, face)) {
      out.push_back(std::move(face));
    }
  }
  return out;
}

const std::vector<int>& pick(const std::vector<std::vector<int>>& faces,
                             const MoveSite& site, const char* what) {
  if (faces.empty()) {
    throw InputError(std::string("no ") + what + " with edges " +
                     format_site(site));
  }
  if (site.variant < 0 || site.variant >= static_cast<int>(faces.size())) {
    throw InputError("variant out of range for " + format_site(site));
  }
  return faces[site.variant];
}

void require_edges(const MoveSite& site, std::size_t count) {
  if (site.edges.size() != count) {
    throw InputError(std::string(to_string(site.kind)) + " takes " +
                     std::to_string(count) + " edge label(s)");
  }
}

Embedding r1_insert(Embedding e, const MoveSite& site) {
  require_edges(site, 1);
  if (site.variant < 0 || site.variant > 3) {
    throw InputError("R1_insert variant must be 0..3");
  }
  const auto& layout = kKinkLayouts[site.variant];
  const int label = site.edges[0];
  if (e.crossings == 0) {
    if (label != 1) throw InputError("no edge labelled " + std::to_string(label));
    const int x = e.add_crossing();
    e.link(Embedding::slot(x, layout[0]), Embedding::slot(x, layout[1]), 1);
    e.link(Embedding::slot(x, layout[2]), Embedding::slot(x, layout[3]), 0);
    return e;
  }
  const auto [a, b] = e.edge_slots(label);
  const int x = e.add_crossing();
  e.link(a, Embedding::slot(x, layout[0]), label);
  e.link(b, Embedding::slot(x, layout[1]), 0);
  e.link(Embedding::slot(x, layout[2]), Embedding::slot(x, layout[3]), 0);
  return e;
}

Embedding r1_delete(const Embedding& e, const MoveSite& site) {
  require_edges(site, 1);
  if (e.crossings == 0) throw InputError("the unknot has no kink");
  const auto [a, b] = e.edge_slots(site.edges[0]);
  if (!is_kink_edge(a, b)) {
    throw InputError("edge " + std::to_string(site.edges[0]) +
                     " is not the loop of a kink");
  }
  std::vector<bool> removed(e.crossings, false);
  removed[Embedding::crossing_of(a)] = true;
  return e.without_crossings(removed);
}

std::vector<std::vector<int>> common_faces(const Embedding& e, int x, int y) {
  std::vector<std::vector<int>> out;
  for (auto& face : e.faces()) {
    bool has_x = false;
    bool has_y = false;
    for (int dart : face) {
      has_x = has_x || e.hint[dart] == x;
      has_y = has_y || e.hint[dart] == y;
    }
    if (has_x && has_y) out.push_back(std::move(face));
  }
  return out;
}

Embedding r2_insert(Embedding e, const MoveSite& site) {
  require_edges(site, 2);
  const int x = site.edges[0];  // pushed over
  const int y = site.edges[1];
  if (x == y) throw InputError("R2_insert needs two distinct edges");
  e.edge_slots(x);
  e.edge_slots(y);
  const auto faces = common_faces(e, x, y);
  if (faces.empty()) {
    throw InputError("edges " + std::to_string(x) + " and " +
                     std::to_string(y) + " share no face");
  }
  const auto& face = pick(faces, site, "common face");

  // Walking the face with it on the left, y runs from py to qy and x from
  // qx to px.
  int py = -1;
  int px = -1;
  for (int dart : face) {
    if (py < 0 && e.hint[dart] == y) py = dart;
    if (px < 0 && e.hint[dart] == x) px = e.mate[dart];
  }
  const int qy = e.mate[py];
  const int qx = e.mate[px];

  // A = [y1, x2, y2, x1], B = [y2, x2, y3, x3], x over y at both.
  const int a = e.add_crossing();
  const int b = e.add_crossing();
  using E = Embedding;
  e.link(py, E::slot(a, 0), y);
  e.link(E::slot(a, 2), E::slot(b, 0), 0);
  e.link(E::slot(b, 2), qy, 0);
  e.link(px, E::slot(a, 3), x);
  e.link(E::slot(a, 1), E::slot(b, 1), 0);
  e.link(E::slot(b, 3), qx, 0);
  return e;
}

Embedding r2_delete(const Embedding& e, const MoveSite& site) {
  require_edges(site, 2);
  const auto faces = matching_faces(e, site.edges, is_reducible_bigon);
  const auto& face = pick(faces, site, "reducible bigon");
  std::vector<bool> removed(e.crossings, false);
  for (int dart : face) removed[Embedding::crossing_of(dart)] = true;
  return e.without_crossings(removed);
}

Embedding r3(const Embedding& e, const MoveSite& site) {
  require_edges(site, 3);
  const auto faces = matching_faces(e, site.edges, is_movable_triangle);
  const auto& face = pick(faces, site, "movable triangle");
  using E = Embedding;

  // Face darts leave A along AB, B along BC, C along CA. Around each corner
  // (counterclockwise from the dart): A: AB, CA, a1, a2; B: BC, AB, b2, b1;
  // C: CA, BC, c2, c1. The outer edges a1, b1 lie on strand AB, b2, c1 on
  // BC and c2, a2 on CA.
  const int d0 = face[0];
  const int d1 = face[1];
  const int d2 = face[2];
  const int ca = E::crossing_of(d0);
  const int cb = E::crossing_of(d1);
  const int cc = E::crossing_of(d2);
  const int pa = E::position_of(d0);
  const int pb = E::position_of(d1);
  const int pc = E::position_of(d2);

  // After the move every strand meets its two crossings in reverse order:
  //   A' = [nAB, nCA, b1, c2]  (strands AB, CA)
  //   B' = [c1, a1, nBC, nAB]  (strands BC, AB)
  //   C' = [nBC, a2, b2, nCA]  (strands BC, CA)
  // each rotated by one when needed to keep the old over/under choice.
  const int ra = (pa % 2 == 0) ? 0 : 1;
  const int rb = (pb % 2 == 0) ? 0 : 1;
  const int rc = (pc % 2 == 0) ? 1 : 0;
  auto at = [](int crossing, int position, int rot) {
    return E::slot(crossing, position + rot);
  };

  const std::map<int, int> outer = {
      {E::slot(ca, pa + 2), at(cb, 1, rb)},  // a1
      {E::slot(ca, pa + 3), at(cc, 1, rc)},  // a2
      {E::slot(cb, pb + 3), at(ca, 2, ra)},  // b1
      {E::slot(cb, pb + 2), at(cc, 2, rc)},  // b2
      {E::slot(cc, pc + 3), at(cb, 0, rb)},  // c1
      {E::slot(cc, pc + 2), at(ca, 3, ra)},  // c2
  };

  Embedding out = e;
  for (const auto& [old_slot, new_slot] : outer) {
    const int far = e.mate[old_slot];
    const auto it = outer.find(far);
    const int new_far = (it == outer.end()) ? far : it->second;
    out.link(new_slot, new_far, e.hint[old_slot]);
  }
  out.link(at(ca, 0, ra), at(cb, 3, rb), e.hint[d0]);
  out.link(at(ca, 1, ra), at(cc, 3, rc), e.hint[d2]);
  out.link(at(cb, 2, rb), at(cc, 0, rc), e.hint[d1]);
  return out;
}

template <typename Pattern>
std::vector<MoveSite> face_sites(const Embedding& e, MoveKind kind,
                                 Pattern pattern) {
  std::map<std::vector<int>, int> seen;
  std::vector<MoveSite> out;
  for (const auto& face : e.faces()) {
    if (!pattern(e, face)) continue;
    auto labels = sorted_labels(e, face);
    const int variant = seen[labels]++;
    out.push_back({kind, std::move(labels), variant});
  }
  return out;
}

}  // namespace

std::string_view to_string(MoveKind kind) {
  switch (kind) {
    case MoveKind::R1Insert: return "R1_insert";
    case MoveKind::R1Delete: return "R1_delete";
    case MoveKind::R2Insert: return "R2_insert";
    case MoveKind::R2Delete: return "R2_delete";
    case MoveKind::R3: return "R3";
  }
  return "?";
}

MoveKind parse_move_kind(std::string_view text) {
  for (MoveKind k : {MoveKind::R1Insert, MoveKind::R1Delete, MoveKind::R2Insert,
                     MoveKind::R2Delete, MoveKind::R3}) {
    if (to_string(k) == text) return k;
  }
  throw InputError("unknown move kind '" + std::string(text) + "'");
}

std::string format_site(const MoveSite& site) {
  std::string out(to_string(site.kind));
  out += ':';
  for (std::size_t i = 0; i < site.edges.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(site.edges[i]);
  }
  out += ':' + std::to_string(site.variant);
  return out;
}

MoveSite parse_site(std::string_view text) {
  auto parse_int = [&](std::string_view s) {
    int value = 0;
    const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || end != s.data() + s.size()) {
      throw InputError("bad number '" + std::string(s) + "' in move site");
    }
    return value;
  };
  const auto first = text.find(':');
  if (first == std::string_view::npos) {
    throw InputError("move site must look like KIND:e1,e2:variant");
  }
  MoveSite site;
  site.kind = parse_move_kind(text.substr(0, first));
  auto rest = text.substr(first + 1);
  const auto second = rest.find(':');
  auto edge_text = rest.substr(0, second);
  if (second != std::string_view::npos) {
    site.variant = parse_int(rest.substr(second + 1));
  }
  while (!edge_text.empty()) {
    const auto comma = edge_text.find(',');
    site.edges.push_back(parse_int(edge_text.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    edge_text = edge_text.substr(comma + 1);
  }
  return site;
}

PlanarDiagram apply_move(const PlanarDiagram& d, const MoveSite& site) {
  const auto e = Embedding::from_pd(d.pd());
  Embedding result;
  switch (site.kind) {
    case MoveKind::R1Insert: result = r1_insert(e, site); break;
    case MoveKind::R1Delete: result = r1_delete(e, site); break;
    case MoveKind::R2Insert: result = r2_insert(e, site); break;
    case MoveKind::R2Delete: result = r2_delete(e, site); break;
    case MoveKind::R3: result = r3(e, site); break;
  }
  return PlanarDiagram(result.render());
}

std::vector<MoveSite> find_sites(const PlanarDiagram& d, MoveKind kind) {
  const auto e = Embedding::from_pd(d.pd());
  std::vector<MoveSite> out;
  switch (kind) {
    case MoveKind::R1Insert: {
      const int edges = std::max(1, d.pd().edge_count());
      for (int label = 1; label <= edges; ++label) {
        for (int v = 0; v < 4; ++v) out.push_back({kind, {label}, v});
      }
      break;
    }
    case MoveKind::R1Delete:
      for (int label = 1; label <= d.pd().edge_count(); ++label) {
        const auto [a, b] = e.edge_slots(label);
        if (is_kink_edge(a, b)) out.push_back({kind, {label}, 0});
      }
      break;
    case MoveKind::R2Insert: {
      std::map<std::pair<int, int>, int> faces_per_pair;
      for (const auto& face : e.faces()) {
        std::set<int> labels;
        for (int dart : face) labels.insert(e.hint[dart]);
        for (int x : labels) {
          for (int y : labels) {
            if (x != y) ++faces_per_pair[{x, y}];
          }
        }
      }
      for (const auto& [pair, count] : faces_per_pair) {
        for (int v = 0; v < count; ++v) {
          out.push_back({kind, {pair.first, pair.second}, v});
        }
      }
      break;
    }
    case MoveKind::R2Delete:
      out = face_sites(e, kind, is_reducible_bigon);
      break;
    case MoveKind::R3:
      out = face_sites(e, kind, is_movable_triangle);
      break;
  }
  return out;
}

MoveSite random_site(const PlanarDiagram& d, std::mt19937_64& rng,
                     const VariantOptions& options) {
  std::vector<std::vector<MoveSite>> choices;
  std::vector<MoveKind> kinds = {MoveKind::R1Insert, MoveKind::R2Insert};
  if (options.allow_deletions) {
    kinds.push_back(MoveKind::R1Delete);
    kinds.push_back(MoveKind::R2Delete);
  }
  if (options.allow_r3) kinds.push_back(MoveKind::R3);
  for (MoveKind kind : kinds) {
    auto sites = find_sites(d, kind);
    if (!sites.empty()) choices.push_back(std::move(sites));
  }
  std::uniform_int_distribution<std::size_t> pick_kind(0, choices.size() - 1);
  const auto& sites = choices[pick_kind(rng)];
  std::uniform_int_distribution<std::size_t> pick_site(0, sites.size() - 1);
  return sites[pick_site(rng)];
}

std::vector<PlanarDiagram> move_variants(const PlanarDiagram& d, int count,
                                         std::uint64_t seed,
                                         const VariantOptions& options) {
  std::mt19937_64 rng(seed);
  std::vector<PlanarDiagram> out;
  PlanarDiagram current = d;
  for (int i = 0; i < count; ++i) {
    // Deleting the last crossings of a link component is not representable;
    // such sites are skipped in favour of another draw.
    for (int attempt = 0;; ++attempt) {
      const auto site = random_site(current, rng, options);
      try {
        current = apply_move(current, site);
        break;
      } catch (const InputError&) {
        if (attempt > 64) throw;
      }
    }
    out.push_back(current);
  }
  return out;
}

int face_count(const PlanarDiagram& d) {
  if (d.pd().is_unknot()) return 2;
  return static_cast<int>(Embedding::from_pd(d.pd()).faces().size());
}

}  // namespace foxcolor
