#include "regionalg/zset.hpp"

#include <algorithm>

namespace regionalg {

namespace {

// Least element of Z0 strictly above x (x may be 0 or a set endpoint).
std::int64_t next_z0(std::int64_t x) {
  if (x == ZSet::POS_INF) return ZSet::POS_INF;
  std::int64_t n = x + 1;
  return n == 0 ? 1 : n;
}

} // namespace

void ZSet::normalize() {
  // Clamp endpoints into Z0 and drop runs whose Z0 part is empty.
  std::vector<Run> rs;
  for (Run r : runs_) {
    if (r.lo == 0) r.lo = 1;
    if (r.hi == 0) r.hi = -1;
    if (r.lo > r.hi) continue;
    if (r.lo == 0 && r.hi == 0) continue;
    rs.push_back(r);
  }
  std::sort(rs.begin(), rs.end(),
            [](const Run &a, const Run &b) { return a.lo < b.lo || (a.lo == b.lo && a.hi < b.hi); });
  std::vector<Run> out;
  for (const Run &r : rs) {
    if (!out.empty() && (r.lo <= out.back().hi || next_z0(out.back().hi) >= r.lo)) {
      out.back().hi = std::max(out.back().hi, r.hi);
    } else {
      out.push_back(r);
    }
  }
  runs_ = std::move(out);
}

std::int64_t ZSet::smallest_abs_member() const {
  std::int64_t best = 0;
  bool have = false;
  for (const Run &r : runs_) {
    // Candidate nearest to zero within the run.
    std::int64_t c;
    if (r.lo <= 1 && 1 <= r.hi) c = 1;
    else if (r.lo <= -1 && -1 <= r.hi) c = -1;
    else if (r.lo > 0) c = (r.lo == NEG_INF) ? 1 : r.lo;
    else c = (r.hi == POS_INF) ? 1 : r.hi;
    if (c == 0) continue;
    if (!have || std::abs(c) < std::abs(best) ||
        (std::abs(c) == std::abs(best) && c > best)) {
      best = c;
      have = true;
    }
  }
  return best;
}

ZSet::Decomposition ZSet::decompose() const {
  Decomposition d;
  for (const Run &r : runs_) {
    bool down = r.lo == NEG_INF, up = r.hi == POS_INF;
    if (down && up) {
      d.down_end = -1;
      d.up_start = 1;
    } else if (down) {
      d.down_end = r.hi;
    } else if (up) {
      d.up_start = r.lo;
    } else {
      d.finite.push_back(r);
    }
  }
  return d;
}

std::string ZSet::str() const {
  std::string s = "{";
  bool first = true;
  for (const Run &r : runs_) {
    if (!first) s += ", ";
    first = false;
    bool down = r.lo == NEG_INF, up = r.hi == POS_INF;
    if (down && up) s += "..";
    else if (down) s += ".." + std::to_string(r.hi);
    else if (up) s += std::to_string(r.lo) + "..";
    else if (r.lo == r.hi) s += std::to_string(r.lo);
    else s += std::to_string(r.lo) + ".." + std::to_string(r.hi);
  }
  return s + "}";
}

} // namespace regionalg
