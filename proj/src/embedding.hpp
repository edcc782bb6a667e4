#pragma once

#include <vector>

#include "foxcolor/diagram.hpp"

namespace foxcolor::detail {

// Slot-level view of a diagram used for rewriting. Crossing c owns slots
// 4c..4c+3 in counterclockwise order; slots 4c and 4c+2 carry the
// under-strand. mate[s] is the slot at the other end of the edge leaving s.
// An embedding without crossings is the single crossing-free loop.
// hint[s] remembers the label the edge had before rewriting (0 for edges
// created by a move); both ends of an edge carry the same hint.
struct Embedding {
  int crossings = 0;
  std::vector<int> mate;
  std::vector<int> hint;

  static Embedding from_pd(const PdCode& pd);

  static int crossing_of(int slot) { return slot / 4; }
  static int position_of(int slot) { return slot % 4; }
  static int slot(int crossing, int position) {
    return 4 * crossing + ((position % 4) + 4) % 4;
  }
  static int opposite(int s) { return slot(s / 4, s % 4 + 2); }
  static int ccw_next(int s) { return slot(s / 4, s % 4 + 1); }
  static int cw_next(int s) { return slot(s / 4, s % 4 + 3); }
  static bool is_over(int s) { return s % 4 % 2 == 1; }

  int add_crossing();
  void link(int a, int b, int label_hint);

  // Slots (a, b) holding the edge with the given hint label.
  std::pair<int, int> edge_slots(int label) const;

  // Faces as cyclic lists of darts; a dart is the slot an edge leaves from,
  // traversed with the face on its left.
  std::vector<std::vector<int>> faces() const;

  // Drops the given crossings and reconnects the strands straight through
  // them. Throws InputError if a crossing-free component would remain in a
  // diagram that still has crossings.
  Embedding without_crossings(const std::vector<bool>& removed) const;

  // Canonical PD code: labels consecutive along each component.
  PdCode render() const;
};

}  // namespace foxcolor::detail
