#pragma once

#include "regionalg/delta.hpp"
#include "regionalg/region.hpp"

#include <optional>

namespace regionalg {

/// Geometric realization used for closure decisions: cl_I keeps the
/// endpoints 0 and 1, cl_I' drops them, the circle identifies them.
enum class Space { UnitInterval, OpenInterval, Circle };

/// Whether the closures of the images of two boxes intersect, decided by
/// recursion over the subdivision tree.  At each level the closures can
/// only meet inside a shared child, at a boundary shared by adjacent
/// children, or at an accumulation endpoint of the node itself.
bool box_contact(const Box &x, const Box &y, Space space);

/// Same decision, additionally producing a dyadic point common to both
/// closures (for the circle the identified point is reported as 1).
std::optional<Dyadic> box_contact_point(const Box &x, const Box &y, Space space);

/// Closure intersection of region images: some box pair touches.
bool geo_region_contact(const Region &a, const Region &b, Space space);

std::optional<Dyadic> geo_region_contact_point(const Region &a, const Region &b,
                                               Space space);

} // namespace regionalg
