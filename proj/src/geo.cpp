#include "regionalg/geo.hpp"

namespace regionalg {

namespace {

// Level-indexed recursion; level 1 is the whole space.  A box closure
// contains its node's left endpoint iff its trace at the node's depth has a
// down ray (children never contain parent endpoints), and symmetrically on
// the right.
bool rec(const Box &x, const Box &y, Space space, int level) {
  ZSet sx = x.trace(level), sy = y.trace(level);
  bool top = level == 1;

  if (!top || space == Space::UnitInterval) {
    if (sx.has_up_ray() && sy.has_up_ray()) return true;
    if (sx.has_down_ray() && sy.has_down_ray()) return true;
  } else if (space == Space::Circle) {
    if ((sx.has_up_ray() || sx.has_down_ray()) &&
        (sy.has_up_ray() || sy.has_down_ray()))
      return true;
  }

  if (sx.intersects(sy) && rec(x, y, space, level + 1)) return true;

  // Adjacent children sharing a boundary point: the lower side must reach
  // its right endpoint, the upper side its left endpoint.
  if (sx.shift_up().intersects(sy) && x.trace(level + 1).has_up_ray() &&
      y.trace(level + 1).has_down_ray())
    return true;
  if (sy.shift_up().intersects(sx) && y.trace(level + 1).has_up_ray() &&
      x.trace(level + 1).has_down_ray())
    return true;

  return false;
}

std::optional<Dyadic> rec_point(const Box &x, const Box &y, Space space,
                                int level, const Dyadic &a, const Dyadic &b) {
  ZSet sx = x.trace(level), sy = y.trace(level);
  bool top = level == 1;

  if (!top || space == Space::UnitInterval) {
    if (sx.has_up_ray() && sy.has_up_ray()) return b;
    if (sx.has_down_ray() && sy.has_down_ray()) return a;
  } else if (space == Space::Circle) {
    if ((sx.has_up_ray() || sx.has_down_ray()) &&
        (sy.has_up_ray() || sy.has_down_ray()))
      return Dyadic(1);
  }

  ZSet shared = sx.intersect(sy);
  if (!shared.is_empty()) {
    std::int64_t n = shared.smallest_abs_member();
    DyInterval c = delta_child(a, b, n);
    if (auto p = rec_point(x, y, space, level + 1, c.lo, c.hi)) return p;
  }

  ZSet upper = sx.shift_up().intersect(sy);
  if (!upper.is_empty() && x.trace(level + 1).has_up_ray() &&
      y.trace(level + 1).has_down_ray())
    return delta_child(a, b, upper.smallest_abs_member()).lo;
  ZSet upper2 = sy.shift_up().intersect(sx);
  if (!upper2.is_empty() && y.trace(level + 1).has_up_ray() &&
      x.trace(level + 1).has_down_ray())
    return delta_child(a, b, upper2.smallest_abs_member()).lo;

  return std::nullopt;
}

} // namespace

bool box_contact(const Box &x, const Box &y, Space space) {
  return rec(x, y, space, 1);
}

std::optional<Dyadic> box_contact_point(const Box &x, const Box &y, Space space) {
  return rec_point(x, y, space, 1, Dyadic(0), Dyadic(1));
}

bool geo_region_contact(const Region &a, const Region &b, Space space) {
  for (const Box &x : a.boxes())
    for (const Box &y : b.boxes())
      if (box_contact(x, y, space)) return true;
  return false;
}

std::optional<Dyadic> geo_region_contact_point(const Region &a, const Region &b,
                                               Space space) {
  for (const Box &x : a.boxes())
    for (const Box &y : b.boxes())
      if (auto p = box_contact_point(x, y, space)) return p;
  return std::nullopt;
}

} // namespace regionalg
