#pragma once

#include "regionalg/zset.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace regionalg {

enum class StepDir { Up, Down };

inline std::int64_t zo_step(std::int64_t n, StepDir dir) {
  if (n == 0) throw std::invalid_argument("0 is not in Z0");
  return dir == StepDir::Up ? zo_succ(n) : zo_pred(n);
}

/// Finite sequence over Z0: a node of the tree T0, with the empty path as
/// the root.
class Path {
public:
  Path() = default;
  explicit Path(std::vector<std::int64_t> entries) : entries_(std::move(entries)) {
    for (std::int64_t e : entries_)
      if (e == 0) throw std::invalid_argument("path entries must be nonzero");
  }

  static Path root() { return Path(); }

  const std::vector<std::int64_t> &entries() const { return entries_; }
  std::size_t level() const { return entries_.size(); }
  bool is_root() const { return entries_.empty(); }
  std::int64_t at(std::size_t i) const { return entries_.at(i - 1); } // 1-based
  std::int64_t last() const { return entries_.back(); }

  Path child(std::int64_t n) const {
    Path p = *this;
    p.entries_.push_back(n);
    if (n == 0) throw std::invalid_argument("0 is not in Z0");
    return p;
  }

  Path parent() const {
    Path p = *this;
    p.entries_.pop_back();
    return p;
  }

  /// t_lambda: same path with the last entry replaced by its Z0-predecessor.
  Path tlam() const {
    if (is_root()) throw std::invalid_argument("t_lambda is undefined at the root");
    Path p = *this;
    p.entries_.back() = zo_pred(p.entries_.back());
    return p;
  }

  enum class Relation { Equal, FirstExtendsSecond, SecondExtendsFirst, Incomparable };

  static Relation relation(const Path &t, const Path &u) {
    std::size_t k = std::min(t.level(), u.level());
    for (std::size_t i = 0; i < k; ++i)
      if (t.entries_[i] != u.entries_[i]) return Relation::Incomparable;
    if (t.level() == u.level()) return Relation::Equal;
    return t.level() > u.level() ? Relation::FirstExtendsSecond
                                 : Relation::SecondExtendsFirst;
  }

  /// u is a prefix of t (equality allowed).
  static bool extends(const Path &t, const Path &u) {
    auto r = relation(t, u);
    return r == Relation::Equal || r == Relation::FirstExtendsSecond;
  }
  static bool comparable(const Path &t, const Path &u) {
    return relation(t, u) != Relation::Incomparable;
  }

  std::string str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(entries_[i]);
    }
    return s + ")";
  }

  friend bool operator==(const Path &, const Path &) = default;
  friend bool operator<(const Path &a, const Path &b) {
    return a.entries_ < b.entries_;
  }

private:
  std::vector<std::int64_t> entries_;
};

} // namespace regionalg
