#include "regionalg/sketch.hpp"

#include <stdexcept>

namespace regionalg {

namespace {

Region residual_region(const Box &b, int off) {
  Box out;
  for (const auto &[lvl, s] : b.constraints())
    if (lvl > off) {
      auto shifted = out.with(lvl - off, s);
      out = std::move(*shifted);
    }
  return Region(out);
}

void sketch_box(const Box &bx, int off, const Path &node, const Dyadic &a,
                const Dyadic &b, ClosureSketch &out) {
  if (bx.max_level() <= off) { // full residual: the whole node interval
    out.solid.add({a, b});
    return;
  }
  ZSet s = bx.trace(off + 1);
  bool res_full = bx.max_level() <= off + 1;
  auto dec = s.decompose();

  if (dec.down_end) {
    if (res_full)
      out.solid.add({a, delta_child(a, b, *dec.down_end).hi});
    else
      out.tails.push_back(
          Tail{node, a, false, *dec.down_end, residual_region(bx, off + 1)});
  }
  if (dec.up_start) {
    if (res_full)
      out.solid.add({delta_child(a, b, *dec.up_start).lo, b});
    else
      out.tails.push_back(
          Tail{node, b, true, *dec.up_start, residual_region(bx, off + 1)});
  }
  for (const auto &run : dec.finite) {
    if (res_full) {
      // Run-closure: consecutive children share endpoints, so one interval.
      out.solid.add(
          {delta_child(a, b, run.lo).lo, delta_child(a, b, run.hi).hi});
    } else {
      ZSet::for_each_member(run, [&](std::int64_t n) {
        DyInterval c = delta_child(a, b, n);
        sketch_box(bx, off + 1, node.child(n), c.lo, c.hi, out);
      });
    }
  }
}

} // namespace

std::string Tail::str() const {
  return "tail(node=" + node.str() + ", anchor=" + anchor.str() +
         ", side=" + (from_left ? "left" : "right") +
         ", from=" + std::to_string(first) + ", residual=" + residual.str() +
         ")";
}

std::string ClosureSketch::str() const {
  std::string s = solid.str();
  for (const Tail &t : tails) {
    if (!s.empty() && s != "∅") s += " ∪ ";
    else s.clear();
    s += t.str();
  }
  if (s.empty()) s = "∅";
  return s;
}

ClosureSketch closure_sketch(const Region &r) {
  ClosureSketch out;
  for (const Box &b : r.boxes())
    sketch_box(b, 0, Path::root(), Dyadic(0), Dyadic(1), out);

  // Drop tails whose hull already lies inside a solid interval.
  std::vector<Tail> kept;
  for (Tail &t : out.tails) {
    DyInterval node = delta_interval(t.node);
    DyInterval firstc = delta_child(node.lo, node.hi, t.first);
    DyInterval hull = t.from_left ? DyInterval{firstc.lo, t.anchor}
                                  : DyInterval{t.anchor, firstc.hi};
    bool dup = false;
    for (const Tail &k : kept) dup = dup || k == t;
    if (!dup && !out.solid.contains(hull)) kept.push_back(std::move(t));
  }
  out.tails = std::move(kept);
  return out;
}

IntervalSet materialize(const ClosureSketch &s, std::int64_t N) {
  IntervalSet out = s.solid;
  for (const Tail &t : s.tails) {
    DyInterval node = delta_interval(t.node);
    for (std::int64_t n = t.first; std::llabs(n) <= N;
         n = t.from_left ? zo_succ(n) : zo_pred(n)) {
      DyInterval c = delta_child(node.lo, node.hi, n);
      ClosureSketch piece;
      for (const Box &b : t.residual.boxes())
        sketch_box(b, 0, t.node.child(n), c.lo, c.hi, piece);
      out.add_all(materialize(piece, N));
    }
  }
  return out;
}

Region truncate_rays(const Region &r, std::int64_t N) {
  std::vector<Box> boxes;
  for (const Box &b : r.boxes()) {
    Box nb = b;
    bool dead = false;
    for (int lvl = 1; lvl <= b.max_level() && !dead; ++lvl) {
      ZSet cut = nb.trace(lvl).intersect(ZSet::range(-N, N));
      if (cut.is_empty()) dead = true;
      else nb = *nb.with(lvl, cut);
    }
    if (!dead) boxes.push_back(std::move(nb));
  }
  return Region(std::move(boxes));
}

namespace {

void rfi_rec(const Path &node, const Dyadic &a, const Dyadic &b,
             const Dyadic &u, const Dyadic &v, std::vector<Box> &out) {
  int lvl = static_cast<int>(node.level()) + 1;
  if (u == a && v == b) {
    out.push_back(Box::cone(node));
    return;
  }
  if (u == a) {
    std::int64_t c = locate_child(a, b, v, false);
    DyInterval ci = delta_child(a, b, c);
    if (ci.hi == v) {
      out.push_back(*Box::cone(node).with(lvl, ZSet::down_ray(c)));
      return;
    }
    out.push_back(*Box::cone(node).with(lvl, ZSet::down_ray(zo_pred(c))));
    rfi_rec(node.child(c), ci.lo, ci.hi, ci.lo, v, out);
    return;
  }
  if (v == b) {
    std::int64_t c = locate_child(a, b, u, true);
    DyInterval ci = delta_child(a, b, c);
    if (ci.lo == u) {
      out.push_back(*Box::cone(node).with(lvl, ZSet::up_ray(c)));
      return;
    }
    out.push_back(*Box::cone(node).with(lvl, ZSet::up_ray(zo_succ(c))));
    rfi_rec(node.child(c), ci.lo, ci.hi, u, ci.hi, out);
    return;
  }
  std::int64_t cu = locate_child(a, b, u, true);
  std::int64_t cv = locate_child(a, b, v, false);
  if (cu == cv) {
    DyInterval ci = delta_child(a, b, cu);
    rfi_rec(node.child(cu), ci.lo, ci.hi, u, v, out);
    return;
  }
  DyInterval iu = delta_child(a, b, cu), iv = delta_child(a, b, cv);
  std::int64_t start = cu, end = cv;
  if (iu.lo != u) {
    start = zo_succ(cu);
    rfi_rec(node.child(cu), iu.lo, iu.hi, u, iu.hi, out);
  }
  if (iv.hi != v) {
    end = zo_pred(cv);
    rfi_rec(node.child(cv), iv.lo, iv.hi, iv.lo, v, out);
  }
  if (start <= end)
    out.push_back(*Box::cone(node).with(lvl, ZSet::range(start, end)));
}

} // namespace

Region region_from_intervals(const IntervalSet &s) {
  Dyadic zero(0), one(1);
  std::vector<Box> boxes;
  for (const DyInterval &iv : s.intervals()) {
    if (iv.lo < zero || iv.hi > one)
      throw std::invalid_argument("interval endpoints must lie in [0,1]");
    rfi_rec(Path::root(), zero, one, iv.lo, iv.hi, boxes);
  }
  return Region(std::move(boxes));
}

} // namespace regionalg
