#include "regionalg/region.hpp"

#include <algorithm>
#include <stdexcept>

namespace regionalg {

Region Region::phi(int level, const ZSet &s) {
  if (s.is_empty()) return Region::zero();
  if (s.is_full()) return Region::one();
  std::map<int, ZSet> m;
  m.emplace(level, s);
  return Region(*Box::make(std::move(m)));
}

void Region::absorb() {
  // Drop boxes below another box; keeps the earlier of equals.
  std::vector<Box> out;
  for (std::size_t i = 0; i < boxes_.size(); ++i) {
    bool drop = false;
    for (std::size_t j = 0; j < boxes_.size() && !drop; ++j) {
      if (i == j) continue;
      if (boxes_[i] == boxes_[j]) drop = j < i;
      else if (boxes_[i].below(boxes_[j])) drop = true;
    }
    if (!drop) out.push_back(boxes_[i]);
  }
  std::sort(out.begin(), out.end());
  boxes_ = std::move(out);
}

Region Region::complement() const {
  if (boxes_.empty()) return one();
  Region acc = one();
  for (const Box &b : boxes_) {
    std::vector<Box> parts;
    for (const auto &[lvl, s] : b.constraints()) {
      std::map<int, ZSet> m;
      m.emplace(lvl, s.complement());
      if (auto bx = Box::make(std::move(m))) parts.push_back(std::move(*bx));
    }
    if (b.is_top()) return zero();
    acc = meet(acc, Region(std::move(parts)));
    if (acc.is_zero()) return acc;
  }
  return acc;
}

namespace {

// box ≤ join of boxes: peel the first cover box and recurse on the
// uncovered levelwise remainders.  Sound because the levels are an
// independent family: a box vanishes only when some level empties.
bool box_covered(const Box &x, const std::vector<Box> &ys, std::size_t from) {
  for (std::size_t j = from; j < ys.size(); ++j)
    if (x.below(ys[j])) return true;
  if (from >= ys.size()) return false;
  const Box &y = ys[from];
  std::vector<Box> rest_pieces;
  for (const auto &[lvl, s] : y.constraints()) {
    ZSet diff = x.trace(lvl).intersect(s.complement());
    if (diff.is_empty()) continue;
    auto piece = x.with(lvl, diff);
    if (piece) rest_pieces.push_back(std::move(*piece));
  }
  if (y.is_top()) return true;
  for (const Box &p : rest_pieces)
    if (!box_covered(p, ys, from + 1)) return false;
  return true;
}

} // namespace

bool region_leq(const Region &a, const Region &b) {
  for (const Box &x : a.boxes())
    if (!box_covered(x, b.boxes(), 0)) return false;
  return true;
}

std::string Region::str() const {
  if (boxes_.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < boxes_.size(); ++i) {
    if (i) s += " + ";
    const Box &b = boxes_[i];
    if (b.is_top()) {
      s += "1";
      continue;
    }
    bool first = true;
    for (const auto &[lvl, zs] : b.constraints()) {
      if (!first) s += "*";
      first = false;
      s += "phi(" + std::to_string(lvl) + "," + zs.str() + ")";
    }
  }
  return s;
}

std::string Generator::str() const {
  switch (kind) {
  case Kind::Cone: {
    std::string s = "cone(";
    for (std::size_t i = 0; i < t.entries().size(); ++i) {
      if (i) s += ",";
      s += std::to_string(t.entries()[i]);
    }
    return s + ")";
  }
  case Kind::Q: {
    std::string s = "q(";
    for (std::size_t i = 0; i < t.entries().size(); ++i) {
      if (i) s += ",";
      s += std::to_string(t.entries()[i]);
    }
    return s + ";" + std::to_string(n) + ")";
  }
  case Kind::RayUp:
    return "up(" + std::to_string(n) + ")";
  case Kind::RayDown:
    return "down(" + std::to_string(n) + ")";
  }
  return "?";
}

Region make_generator(const Generator &g) {
  switch (g.kind) {
  case Generator::Kind::Cone:
    return Region::cone(g.t);
  case Generator::Kind::Q: {
    if (g.t.is_root()) throw std::invalid_argument("q requires a nonempty path");
    if (g.n < 1) throw std::invalid_argument("q parameter must be positive");
    int next = static_cast<int>(g.t.level()) + 1;
    Box lower = Box::cone(g.t.tlam());
    Box upper = Box::cone(g.t);
    auto b1 = lower.with(next, ZSet::succ_of(g.n));
    auto b2 = upper.with(next, ZSet::pred_of(-g.n));
    return Region({std::move(*b1), std::move(*b2)});
  }
  case Generator::Kind::RayUp:
    if (g.n < 1) throw std::invalid_argument("ray index must be positive");
    return Region::phi(1, ZSet::succ_of(g.n));
  case Generator::Kind::RayDown:
    if (g.n < 1) throw std::invalid_argument("ray index must be positive");
    return Region::phi(1, ZSet::pred_of(-g.n));
  }
  throw std::logic_error("unreachable");
}

} // namespace regionalg
