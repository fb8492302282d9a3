#pragma once

#include "regionalg/delta.hpp"
#include "regionalg/region.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace regionalg {

/// Infinitely many congruent-up-to-scale pieces inside `node`'s interval,
/// accumulating at `anchor` from the given side.  Pieces live in children
/// `first`, then successors toward the ray direction; each piece is the
/// closure of `residual` scaled into its child.  The anchor itself belongs
/// to the denoted set.
struct Tail {
  Path node;
  Dyadic anchor;
  bool from_left; // pieces approach the anchor from the left (up-ray side)
  std::int64_t first;
  Region residual; // nonzero and constrained, eventually constant along the ray

  std::string str() const;
  friend bool operator==(const Tail &, const Tail &) = default;
};

/// Exact symbolic closure cl_I(f(region)): a finite interval set plus
/// finitely many accumulation tails.
struct ClosureSketch {
  IntervalSet solid;
  std::vector<Tail> tails;

  std::string str() const;
};

ClosureSketch closure_sketch(const Region &r);

/// Solid part plus all tail pieces with child indices |n| <= N, anchors
/// excluded: the closure of the ray-truncated region.
IntervalSet materialize(const ClosureSketch &s, std::int64_t N);

/// Region with every ZSet of every box (within its constrained depth)
/// intersected with [-N..N].
Region truncate_rays(const Region &r, std::int64_t N);

/// A region whose closure sketch is exactly the given interval set: per
/// interval, the maximal run of whole children plus ray boxes toward each
/// endpoint.  Throws when an interval leaves [0,1].
Region region_from_intervals(const IntervalSet &s);

} // namespace regionalg
