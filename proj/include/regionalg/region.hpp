#pragma once

#include "regionalg/path.hpp"
#include "regionalg/zset.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace regionalg {

/// One cylinder box of the free product ⊕_i P(Z0): a finite conjunction of
/// level constraints phi_i(S_i).  Stored constraints are proper and
/// nonempty; an absent level is unconstrained.
class Box {
public:
  Box() = default;

  /// Rejects empty constraints; full constraints are dropped.
  static std::optional<Box> make(std::map<int, ZSet> constraints) {
    Box b;
    for (auto &[lvl, s] : constraints) {
      if (s.is_empty()) return std::nullopt;
      if (!s.is_full()) b.c_.emplace(lvl, std::move(s));
    }
    return b;
  }

  static Box top() { return Box(); }

  static Box cone(const Path &t) {
    Box b;
    for (std::size_t i = 1; i <= t.level(); ++i)
      b.c_.emplace(static_cast<int>(i), ZSet::singleton(t.at(i)));
    return b;
  }

  const std::map<int, ZSet> &constraints() const { return c_; }
  bool is_top() const { return c_.empty(); }
  int max_level() const { return c_.empty() ? 0 : c_.rbegin()->first; }

  /// Constraint at a level; full when absent.
  ZSet trace(int level) const {
    auto it = c_.find(level);
    return it == c_.end() ? ZSet::full() : it->second;
  }
  const ZSet *trace_ptr(int level) const {
    auto it = c_.find(level);
    return it == c_.end() ? nullptr : &it->second;
  }
  bool constrained(int level) const { return c_.count(level) != 0; }

  std::optional<Box> with(int level, const ZSet &s) const {
    std::map<int, ZSet> m = c_;
    if (s.is_empty()) return std::nullopt;
    if (s.is_full()) m.erase(level);
    else m[level] = s;
    Box b;
    b.c_ = std::move(m);
    return b;
  }

  std::optional<Box> meet(const Box &o) const {
    Box out = *this;
    for (const auto &[lvl, s] : o.c_) {
      ZSet t = out.trace(lvl).intersect(s);
      if (t.is_empty()) return std::nullopt;
      if (t.is_full()) out.c_.erase(lvl);
      else out.c_[lvl] = std::move(t);
    }
    return out;
  }

  /// Levelwise containment: this ≤ o as elements of the algebra.
  bool below(const Box &o) const {
    for (const auto &[lvl, s] : o.c_)
      if (!trace(lvl).intersect(s.complement()).is_empty()) return false;
    return true;
  }

  /// Residual box one level down: constraints shifted by -1, level-1 dropped.
  Box residual() const {
    Box b;
    for (const auto &[lvl, s] : c_)
      if (lvl > 1) b.c_.emplace(lvl - 1, s);
    return b;
  }

  /// Box prefixed by a cone: levels shifted up by t.level() under cone(t).
  Box prepended(const Path &t) const {
    Box b = Box::cone(t);
    int k = static_cast<int>(t.level());
    for (const auto &[lvl, s] : c_) b.c_.emplace(lvl + k, s);
    return b;
  }

  friend bool operator==(const Box &, const Box &) = default;
  friend bool operator<(const Box &a, const Box &b) { return a.c_ < b.c_; }

private:
  std::map<int, ZSet> c_;
};

/// Element of the dense subalgebra A: a finite join of boxes (DNF, not
/// necessarily disjoint).  Equality is decided by region_leq both ways,
/// never representationally.
class Region {
public:
  Region() = default;
  explicit Region(Box b) { boxes_.push_back(std::move(b)); }
  explicit Region(std::vector<Box> bs) : boxes_(std::move(bs)) { absorb(); }

  static Region zero() { return Region(); }
  static Region one() { return Region(Box::top()); }
  static Region cone(const Path &t) { return Region(Box::cone(t)); }
  static Region phi(int level, const ZSet &s);

  const std::vector<Box> &boxes() const { return boxes_; }
  bool is_zero() const { return boxes_.empty(); }

  friend Region join(const Region &a, const Region &b) {
    std::vector<Box> bs = a.boxes_;
    bs.insert(bs.end(), b.boxes_.begin(), b.boxes_.end());
    return Region(std::move(bs));
  }

  friend Region meet(const Region &a, const Region &b) {
    std::vector<Box> bs;
    for (const Box &x : a.boxes_)
      for (const Box &y : b.boxes_)
        if (auto m = x.meet(y)) bs.push_back(std::move(*m));
    return Region(std::move(bs));
  }

  Region complement() const;

  friend bool region_leq(const Region &a, const Region &b);
  friend bool region_eq(const Region &a, const Region &b) {
    return region_leq(a, b) && region_leq(b, a);
  }

  /// The derived ray criterion for membership in the bounded ideal of the
  /// real-line model: every box constrains level 1 to a finite set, which
  /// holds exactly when the closure avoids both 0 and 1.
  bool level1_finite() const {
    for (const Box &b : boxes_)
      if (!b.trace(1).is_finite()) return false;
    return true;
  }

  std::string str() const;

private:
  void absorb();

  std::vector<Box> boxes_;
};

Region join(const Region &a, const Region &b);
Region meet(const Region &a, const Region &b);
bool region_leq(const Region &a, const Region &b);
bool region_eq(const Region &a, const Region &b);

/// The generator families: B0 cones, B1 q-elements, B2 interval rays.
struct Generator {
  enum class Kind { Cone, Q, RayUp, RayDown };
  Kind kind = Kind::Cone;
  Path t;          // Cone, Q
  std::int64_t n = 1; // Q parameter / ray index, >= 1

  static Generator cone(Path p) { return {Kind::Cone, std::move(p), 0}; }
  static Generator q(Path p, std::int64_t n) { return {Kind::Q, std::move(p), n}; }
  static Generator ray_up(std::int64_t n) { return {Kind::RayUp, Path(), n}; }
  static Generator ray_down(std::int64_t n) { return {Kind::RayDown, Path(), n}; }

  std::string str() const;
  friend bool operator==(const Generator &, const Generator &) = default;
};

/// Region denoted by a generator.  Q(t,n) expands per (b_- ∧ succ) ∨ (b ∧ pred);
/// Q on the root path is rejected.
Region make_generator(const Generator &g);

} // namespace regionalg
