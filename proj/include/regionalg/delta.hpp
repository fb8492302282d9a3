#pragma once

#include "regionalg/dyadic.hpp"
#include "regionalg/path.hpp"

#include <string>
#include <vector>

namespace regionalg {

/// Closed dyadic subinterval of [0,1].
struct DyInterval {
  Dyadic lo, hi;
  std::string str() const { return "[" + lo.str() + ", " + hi.str() + "]"; }
  bool contains(const Dyadic &x) const { return lo <= x && x <= hi; }
  friend bool operator==(const DyInterval &, const DyInterval &) = default;
};

/// The closed interval Delta_{t.j} inside Delta_t = [a,b]: right-anchored
/// halving for j > 0, left-anchored for j < 0.
DyInterval delta_child(const Dyadic &a, const Dyadic &b, std::int64_t j);

/// Delta interval of a path from [0,1]; the root maps to [0,1] itself.
DyInterval delta_interval(const Path &t);

/// Child index whose interval contains x, given a < x < b.  When x is a
/// shared endpoint of two siblings, prefer_right picks the child having x
/// as its left endpoint.
std::int64_t locate_child(const Dyadic &a, const Dyadic &b, const Dyadic &x,
                          bool prefer_right);

/// Finite union of disjoint closed dyadic intervals; touching intervals
/// are merged on insertion.
class IntervalSet {
public:
  IntervalSet() = default;
  explicit IntervalSet(std::vector<DyInterval> v) {
    for (auto &iv : v) add(iv);
  }

  void add(const DyInterval &iv);
  void add_all(const IntervalSet &o) {
    for (const auto &iv : o.v_) add(iv);
  }

  const std::vector<DyInterval> &intervals() const { return v_; }
  bool empty() const { return v_.empty(); }

  bool contains(const Dyadic &x) const {
    for (const auto &iv : v_)
      if (iv.contains(x)) return true;
    return false;
  }
  bool contains(const DyInterval &iv) const {
    for (const auto &j : v_)
      if (j.lo <= iv.lo && iv.hi <= j.hi) return true;
    return false;
  }
  bool contains_set(const IntervalSet &o) const {
    for (const auto &iv : o.v_)
      if (!contains(iv)) return false;
    return true;
  }
  bool intersects(const IntervalSet &o) const {
    for (const auto &a : v_)
      for (const auto &b : o.v_)
        if (a.lo <= b.hi && b.lo <= a.hi) return true;
    return false;
  }
  IntervalSet intersect(const IntervalSet &o) const {
    IntervalSet out;
    for (const auto &a : v_)
      for (const auto &b : o.v_) {
        Dyadic lo = std::max(a.lo, b.lo), hi = std::min(a.hi, b.hi);
        if (lo <= hi && lo < hi) out.add({lo, hi});
      }
    return out;
  }

  /// Total length of this set minus the other (degenerate slivers count 0).
  Dyadic length_outside(const IntervalSet &o) const;

  std::string str() const {
    if (v_.empty()) return "∅";
    std::string s;
    for (std::size_t i = 0; i < v_.size(); ++i) {
      if (i) s += " ∪ ";
      s += v_[i].str();
    }
    return s;
  }

  friend bool operator==(const IntervalSet &, const IntervalSet &) = default;

private:
  std::vector<DyInterval> v_; // sorted, disjoint, separated
};

} // namespace regionalg
