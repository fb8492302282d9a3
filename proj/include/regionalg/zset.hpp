#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace regionalg {

/// Z0 = Z \ {0} with the order inherited from Z, so -1 and 1 are neighbours.
inline std::int64_t zo_succ(std::int64_t n) { return n == -1 ? 1 : n + 1; }
inline std::int64_t zo_pred(std::int64_t n) { return n == 1 ? -1 : n - 1; }

/// Subset of Z0 stored as sorted maximal runs.  A run [lo,hi] denotes
/// [lo,hi] ∩ Z0, so a run may span 0 without ever containing it.  Ray
/// endpoints use the INF sentinels; {} is the empty set and {(-INF,+INF)}
/// is all of Z0.
class ZSet {
public:
  static constexpr std::int64_t NEG_INF = std::numeric_limits<std::int64_t>::min();
  static constexpr std::int64_t POS_INF = std::numeric_limits<std::int64_t>::max();

  struct Run {
    std::int64_t lo, hi;
    friend bool operator==(const Run &, const Run &) = default;
  };

  ZSet() = default;

  static ZSet empty() { return ZSet(); }
  static ZSet full() { return of({{NEG_INF, POS_INF}}); }
  static ZSet singleton(std::int64_t n) { return of({{n, n}}); }
  static ZSet range(std::int64_t a, std::int64_t b) { return of({{a, b}}); }
  static ZSet up_ray(std::int64_t from) { return of({{from, POS_INF}}); }
  static ZSet down_ray(std::int64_t upto) { return of({{NEG_INF, upto}}); }
  /// succ(n) = {y : y > n} and pred(n) = {y : y < n} in Z0.
  static ZSet succ_of(std::int64_t n) { return up_ray(zo_succ(n)); }
  static ZSet pred_of(std::int64_t n) { return down_ray(zo_pred(n)); }

  static ZSet of(std::vector<Run> runs) {
    ZSet s;
    s.runs_ = std::move(runs);
    s.normalize();
    return s;
  }

  const std::vector<Run> &runs() const { return runs_; }

  bool is_empty() const { return runs_.empty(); }
  bool is_full() const {
    return runs_.size() == 1 && runs_[0].lo == NEG_INF && runs_[0].hi == POS_INF;
  }
  bool has_up_ray() const { return !runs_.empty() && runs_.back().hi == POS_INF; }
  bool has_down_ray() const { return !runs_.empty() && runs_.front().lo == NEG_INF; }
  bool is_finite() const { return !has_up_ray() && !has_down_ray(); }

  bool contains(std::int64_t n) const {
    if (n == 0) return false;
    for (const Run &r : runs_)
      if (r.lo <= n && n <= r.hi) return true;
    return false;
  }

  ZSet unite(const ZSet &o) const {
    std::vector<Run> rs = runs_;
    rs.insert(rs.end(), o.runs_.begin(), o.runs_.end());
    return of(std::move(rs));
  }

  ZSet intersect(const ZSet &o) const {
    std::vector<Run> rs;
    for (const Run &a : runs_)
      for (const Run &b : o.runs_) {
        std::int64_t lo = std::max(a.lo, b.lo), hi = std::min(a.hi, b.hi);
        if (lo <= hi) rs.push_back({lo, hi});
      }
    return of(std::move(rs));
  }

  ZSet complement() const {
    std::vector<Run> rs;
    std::int64_t next = NEG_INF;
    for (const Run &r : runs_) {
      if (r.lo != NEG_INF) rs.push_back({next, r.lo - 1});
      next = (r.hi == POS_INF) ? POS_INF : r.hi + 1;
    }
    if (next != POS_INF) rs.push_back({next, POS_INF});
    else if (runs_.empty()) rs.push_back({NEG_INF, POS_INF});
    return of(std::move(rs));
  }

  bool intersects(const ZSet &o) const { return !intersect(o).is_empty(); }

  /// Image under the Z0 successor map (so [-3,-1] maps to [-2,1]).
  ZSet shift_up() const {
    std::vector<Run> rs;
    for (const Run &r : runs_)
      rs.push_back({r.lo == NEG_INF ? NEG_INF : zo_succ(r.lo),
                    r.hi == POS_INF ? POS_INF : zo_succ(r.hi)});
    return of(std::move(rs));
  }
  ZSet shift_down() const {
    std::vector<Run> rs;
    for (const Run &r : runs_)
      rs.push_back({r.lo == NEG_INF ? NEG_INF : zo_pred(r.lo),
                    r.hi == POS_INF ? POS_INF : zo_pred(r.hi)});
    return of(std::move(rs));
  }

  /// Member with the least |n| (ties: the positive one).  Requires nonempty.
  std::int64_t smallest_abs_member() const;

  /// Splits into the down-ray end, finite runs, and the up-ray start.
  struct Decomposition {
    std::optional<std::int64_t> down_end;  // set is (-inf, down_end] ∪ ...
    std::vector<Run> finite;               // finite middle runs, zero-free view
    std::optional<std::int64_t> up_start;  // ... ∪ [up_start, +inf)
  };
  Decomposition decompose() const;

  /// Enumerates members of finite runs in ascending order (skips 0).
  template <typename F> static void for_each_member(const Run &r, F &&f) {
    for (std::int64_t n = r.lo; n <= r.hi; ++n)
      if (n != 0) f(n);
  }

  std::string str() const;

  friend bool operator==(const ZSet &, const ZSet &) = default;
  friend bool operator<(const ZSet &a, const ZSet &b) {
    auto key = [](const Run &r) { return std::pair(r.lo, r.hi); };
    return std::lexicographical_compare(
        a.runs_.begin(), a.runs_.end(), b.runs_.begin(), b.runs_.end(),
        [&](const Run &x, const Run &y) { return key(x) < key(y); });
  }

private:
  void normalize();

  std::vector<Run> runs_;
};

} // namespace regionalg
