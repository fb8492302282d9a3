#pragma once

#include "regionalg/model.hpp"
#include "regionalg/region.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace regionalg {

/// The printed case tables of the real-line relation sigma on B0 ∪ B1,
/// applied after ordering the arguments by level.  Ray generators are
/// rejected here; they only exist in the interval relation.
bool sigma_contact(const Generator &g1, const Generator &g2);

/// The interval relation sigma' on B0 ∪ B1 ∪ B2: agrees with sigma on
/// B0 ∪ B1 and adds the ray rows.
bool sigma_prime_contact(const Generator &g1, const Generator &g2);

/// Generators of the tree presentation (RC(T0*), tau, B_T0).
struct TreeGen {
  bool is_d = false; // c_t when false, d_{t n} when true
  Path t;
  std::int64_t n = 1;

  static TreeGen c(Path t) { return {false, std::move(t), 0}; }
  static TreeGen d(Path t, std::int64_t n) { return {true, std::move(t), n}; }
  std::string str() const;
};

/// The tau case tables, written exactly as printed (all level orders).
bool tau_contact(const TreeGen &a, const TreeGen &b);

/// The isomorphism h: c_t -> a_t, d_{tn} -> Q_{a_t n}.
Region tree_translate(const TreeGen &g);

/// Membership in the bounded ideal of the model.
bool is_bounded(const Region &a, const ModelId &model);

struct ContactWitness {
  Dyadic point;                                       // common closure point
  std::optional<std::pair<Region, Region>> bounded_parts; // c <= a, d <= b in B
  std::optional<std::pair<Generator, Generator>> generators;
};

struct ContactVerdict {
  bool value = false;
  std::optional<ContactWitness> witness;
};

/// Contact in the model: bounded sub-elements in contact for the real
/// line (decided exactly by sketches clipped to (0,1)), plain closure
/// intersection for the compact models.
ContactVerdict contact(const Region &a, const Region &b, const ModelId &model);

/// Complement inside the model's algebra (b* ∧ u in a relativization).
Region model_complement(const Region &b, const ModelId &model);

/// Negated contact on bounded arguments; rejects unbounded input.
bool separated_bounded(const Region &c, const Region &d, const ModelId &model);

/// a << b: not contact(a, b*).
bool well_inside(const Region &a, const Region &b, const ModelId &model);

/// Generator covers witnessing separation as in the cover formulation:
/// c <= ∨ c_i, d <= ∨ d_j with every pair non-contacting under the case
/// tables.  A semi-decision: nullopt means "not found within the caps",
/// never "in contact".
struct SeparationCovers {
  std::vector<Generator> left, right;
};
std::optional<SeparationCovers> cover_search(const Region &c, const Region &d,
                                             const ModelId &model,
                                             int max_depth = 6,
                                             int max_width = 64);

} // namespace regionalg
