#pragma once

#include <array>
#include <utility>
#include <vector>

#include "knotpoly/diagram.hpp"

// Shared between the diagram machinery and the braid closure construction;
// not part of the public surface.

namespace knotpoly {

/// Opposite slot within a crossing: under runs 0<->2, over runs 1<->3.
inline int across(int slot) { return (slot + 2) % 4; }

// Re-emits a PD code from crossing tuples whose arcs may have been fused
// pairwise (closure arcs, smoothings). Walks every component, assigns fresh
// consecutive arc ids along the walk, and rotates each tuple so the incoming
// under-strand sits in slot 0. Components are visited by ascending smallest
// old arc id; fused cycles that no longer meet any crossing become free
// circles.
struct RebuildSpec {
  std::vector<std::array<int, 4>> tuples;     // surviving crossings, old arc ids
  std::vector<int> enter_over;                // per tuple: over slot the walk enters by (oriented mode)
  int enter_under = 0;                        // 0 keeps orientation, 2 reverses it
  bool oriented = false;                      // false: walk picks directions freely
  std::vector<std::pair<int, int>> merges;    // arc pairs fused into one strand
  int free_circles = 0;
};

PDCode rebuild_pd(const RebuildSpec& spec);

}  // namespace knotpoly
