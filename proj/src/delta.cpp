#include "regionalg/delta.hpp"

#include <algorithm>
#include <stdexcept>

namespace regionalg {

DyInterval delta_child(const Dyadic &a, const Dyadic &b, std::int64_t j) {
  if (j == 0) throw std::invalid_argument("0 is not a child index");
  Dyadic d = b - a;
  if (j > 0) {
    unsigned k = static_cast<unsigned>(j);
    return {b - d.div_pow2(k), b - d.div_pow2(k + 1)};
  }
  unsigned k = static_cast<unsigned>(-j);
  return {a + d.div_pow2(k + 1), a + d.div_pow2(k)};
}

DyInterval delta_interval(const Path &t) {
  DyInterval iv{Dyadic(0), Dyadic(1)};
  for (std::int64_t j : t.entries()) iv = delta_child(iv.lo, iv.hi, j);
  return iv;
}

std::int64_t locate_child(const Dyadic &a, const Dyadic &b, const Dyadic &x,
                          bool prefer_right) {
  if (!(a < x && x < b)) throw std::invalid_argument("point not interior to the node");
  Dyadic m = Dyadic::mid(a, b);
  if (x > m || (x == m && prefer_right)) {
    std::int64_t j = 1;
    for (;;) {
      DyInterval c = delta_child(a, b, j);
      if (x < c.hi) return j;
      if (x == c.hi) return prefer_right ? j + 1 : j;
      ++j;
    }
  }
  std::int64_t j = -1;
  for (;;) {
    DyInterval c = delta_child(a, b, j);
    if (x > c.lo) return j;
    if (x == c.lo) return prefer_right ? j : zo_pred(j);
    --j;
  }
}

void IntervalSet::add(const DyInterval &iv) {
  if (!(iv.lo < iv.hi)) throw std::invalid_argument("interval needs lo < hi");
  std::vector<DyInterval> out;
  DyInterval cur = iv;
  for (const auto &j : v_) {
    if (j.hi < cur.lo || cur.hi < j.lo) {
      out.push_back(j);
    } else {
      cur.lo = std::min(cur.lo, j.lo);
      cur.hi = std::max(cur.hi, j.hi);
    }
  }
  out.push_back(cur);
  std::sort(out.begin(), out.end(),
            [](const DyInterval &x, const DyInterval &y) { return x.lo < y.lo; });
  v_ = std::move(out);
}

Dyadic IntervalSet::length_outside(const IntervalSet &o) const {
  Dyadic total(0);
  for (const auto &iv : v_) {
    Dyadic covered(0);
    for (const auto &j : o.v_) {
      Dyadic lo = std::max(iv.lo, j.lo), hi = std::min(iv.hi, j.hi);
      if (lo < hi) covered = covered + (hi - lo);
    }
    total = total + (iv.hi - iv.lo) - covered;
  }
  return total;
}

} // namespace regionalg
