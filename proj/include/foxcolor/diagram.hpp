#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace foxcolor {

/// Planar diagram code. Each crossing lists four edge labels read
/// counterclockwise starting from the incoming under-edge, so the
/// under-strand occupies positions 0 and 2 and the over-strand 1 and 3.
/// An empty crossing list is the crossing-free unknot.
struct PdCode {
  std::vector<std::array<int, 4>> crossings;

  int crossing_count() const { return static_cast<int>(crossings.size()); }
  int edge_count() const { return 2 * crossing_count(); }
  bool is_unknot() const { return crossings.empty(); }

  friend bool operator==(const PdCode&, const PdCode&) = default;
};

/// Parses "[[a,b,c,d],...]" or the token "unknot". Labels are relabelled
/// to 1..E preserving their order. Throws InputError naming the first
/// label that does not occur exactly twice.
PdCode parse_pd(std::string_view text);

/// Inverse of parse_pd for normalized codes ("unknot" for no crossings).
std::string format_pd(const PdCode& pd);

/// One row of the coloring system: under_in + under_out - 2 * over = 0,
/// all three given as arc indices.
struct CrossingRelation {
  int under_in = 0;
  int under_out = 0;
  int over = 0;

  friend bool operator==(const CrossingRelation&,
                         const CrossingRelation&) = default;
};

/// A PD code together with its arcs. Arcs are the classes of edge labels
/// glued along over-strands; they are indexed 0..arc_count()-1 in
/// ascending order of their smallest edge label, which also serves as the
/// arc's public id.
class PlanarDiagram {
 public:
  explicit PlanarDiagram(PdCode pd);

  const PdCode& pd() const { return pd_; }
  int crossing_count() const { return pd_.crossing_count(); }
  int arc_count() const { return static_cast<int>(arc_ids_.size()); }
  int component_count() const { return components_; }

  /// Smallest edge label of each arc; {1} for the crossing-free unknot.
  const std::vector<int>& arc_ids() const { return arc_ids_; }
  /// Arc index containing the given edge label (1-based).
  int arc_of_edge(int label) const;
  const std::vector<CrossingRelation>& relations() const { return relations_; }

 private:
  PdCode pd_;
  std::vector<int> edge_arc_;  // indexed by label, slot 0 unused
  std::vector<int> arc_ids_;
  std::vector<CrossingRelation> relations_;
  int components_ = 1;
};

PlanarDiagram build_diagram(const PdCode& pd);

// ---------------------------------------------------------------------------
// Reidemeister moves

enum class MoveKind { R1Insert, R1Delete, R2Insert, R2Delete, R3 };

std::string_view to_string(MoveKind kind);
MoveKind parse_move_kind(std::string_view text);

/// Where a move applies, in terms of the target diagram's edge labels.
///
///  R1Insert  edges = {e}; variant 0..3 picks the side of the kink and
///            which pass is on top. On the unknot use e = 1.
///  R1Delete  edges = {loop edge of the kink}.
///  R2Insert  edges = {x, y}: a finger of x is pushed over y. x and y must
///            share a face; variant indexes their common faces.
///  R2Delete  edges = the two edges of a bigon whose one strand is over at
///            both of its crossings.
///  R3        edges = the three edges of a triangular face with one strand
///            over at both of its crossings; variant disambiguates faces
///            with identical edge sets.
struct MoveSite {
  MoveKind kind = MoveKind::R1Insert;
  std::vector<int> edges;
  int variant = 0;

  friend bool operator==(const MoveSite&, const MoveSite&) = default;
};

std::string format_site(const MoveSite& site);
/// Parses "KIND:e1,e2,...:variant" (variant optional).
MoveSite parse_site(std::string_view text);

/// Rewrites the diagram. Edge labels of the result are renumbered
/// consecutively along each component, components ordered by their lowest
/// surviving label. Throws InputError if the site does not apply.
PlanarDiagram apply_move(const PlanarDiagram& d, const MoveSite& site);

/// Every site of the given kind that apply_move accepts.
std::vector<MoveSite> find_sites(const PlanarDiagram& d, MoveKind kind);

struct VariantOptions {
  bool allow_deletions = true;
  bool allow_r3 = false;
};

/// A uniformly chosen move kind among the applicable ones, then a uniformly
/// chosen site of that kind.
MoveSite random_site(const PlanarDiagram& d, std::mt19937_64& rng,
                     const VariantOptions& options = {});

/// count diagrams, each obtained from the previous one (starting at d) by
/// one random move.
std::vector<PlanarDiagram> move_variants(const PlanarDiagram& d, int count,
                                         std::uint64_t seed,
                                         const VariantOptions& options = {});

/// Number of faces of the diagram's planar map (n + 2 for a connected
/// diagram with n >= 1 crossings).
int face_count(const PlanarDiagram& d);

// ---------------------------------------------------------------------------
// Embedded knot table

/// Names available to catalog(), in table order.
const std::vector<std::string>& catalog_names();

/// Stored PD code for a knot name such as "3_1" or "9_40". Throws
/// InputError for unknown names.
PdCode catalog(std::string_view name);

}  // namespace foxcolor
