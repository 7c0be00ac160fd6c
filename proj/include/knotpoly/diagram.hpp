#pragma once

#include <array>
#include <vector>

#include "knotpoly/laurent.hpp"

namespace knotpoly {

// Oriented link diagram as a PD code. Each crossing is a 4-tuple of arc ids
// listed counterclockwise starting from the incoming under-strand arc, so the
// under-strand runs slot 0 -> slot 2 and the over-strand occupies slots 1 and
// 3. Arcs are the diagram edges between consecutive crossing passages, with
// ids consecutive along each oriented component; every id occurs exactly
// twice across all slots. Zero-crossing components are carried in
// free_circles since tuples cannot express them.
struct PDCode {
  std::vector<std::array<int, 4>> crossings;
  int free_circles = 0;

  size_t crossing_count() const { return crossings.size(); }
  bool operator==(const PDCode& rhs) const = default;
};

// Orientation and component data derived from a PD code. over_in_slot[k] is 1
// or 3 depending on which over slot the over-strand enters crossing k by.
// Construction validates the code (arc-twice rule, traversability, numbering
// consecutive along each oriented component) and throws std::invalid_argument
// on violations.
struct DiagramInfo {
  explicit DiagramInfo(const PDCode& pd);

  int components;                      // closed arc cycles (free circles not included)
  std::vector<int> over_in_slot;       // per crossing: 1 or 3
  std::vector<std::pair<int, int>> component_ranges;  // [min,max] arc id per component
};

/// +1 iff the over-strand runs from slot 3 to slot 1 (d to b).
int crossing_sign(const PDCode& pd, int k);
int diagram_writhe(const PDCode& pd);
/// Total component count, free circles included.
int component_count(const PDCode& pd);

enum class Smoothing : char { A, B };

/// Loop count after replacing every crossing by the chosen smoothing.
/// A joins slots {0,1} and {2,3}; B joins slots {0,3} and {1,2}.
int resolve_state(const PDCode& pd, const std::vector<Smoothing>& state);

/// Exact Kauffman bracket by full state-sum enumeration, parallelized over
/// the state space for large diagrams. Throws std::length_error when the
/// crossing count exceeds the limit.
LaurentPoly kauffman_bracket(const PDCode& pd, int crossing_limit = 24);

/// Number of circles after the orientation-compatible smoothing of every
/// crossing.
int seifert_circles(const PDCode& pd);

struct SkeinTriple {
  PDCode l_plus, l_minus, l_zero;
};

/// The positive/negative/oriented-smoothed variants at crossing k; identical
/// elsewhere.
SkeinTriple skein_triple(const PDCode& pd, int k);

/// Swap over/under at every crossing.
PDCode mirror(const PDCode& pd);

/// Reverse every component's orientation (arcs renumbered accordingly).
PDCode reverse_orientation(const PDCode& pd);

/// Delete crossing k, joining its strands by the unoriented A- or B-smoothing,
/// and renumber. Components may merge, split, or become free circles.
PDCode smooth_crossing(const PDCode& pd, int k, Smoothing s);

/// Disjoint union with m extra circles.
PDCode with_free_circles(PDCode pd, int m);

}  // namespace knotpoly
