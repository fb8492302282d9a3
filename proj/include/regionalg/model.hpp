#pragma once

#include "regionalg/geo.hpp"
#include "regionalg/region.hpp"

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace regionalg {

/// Identifies which algebra a query runs in: the real line (A, sigma, B),
/// the unit interval (A, sigma'), the circle (A, C_{sigma,B}), finite sums
/// of these, or a relativization to a principal ideal.
class ModelId {
public:
  enum class Kind { RealLine, UnitInterval, Circle, ProductReal, Torus, Cube, Relative };

  static ModelId real_line() { return ModelId(Kind::RealLine); }
  static ModelId unit_interval() { return ModelId(Kind::UnitInterval); }
  static ModelId circle() { return ModelId(Kind::Circle); }
  static ModelId product_real(std::vector<std::string> coords) {
    return product(Kind::ProductReal, std::move(coords));
  }
  static ModelId torus(std::vector<std::string> coords) {
    return product(Kind::Torus, std::move(coords));
  }
  static ModelId cube(std::vector<std::string> coords) {
    return product(Kind::Cube, std::move(coords));
  }
  static ModelId relative(ModelId base, Region u) {
    if (u.is_zero()) throw std::invalid_argument("relativization unit must be nonzero");
    if (base.is_product() || base.kind() == Kind::Relative)
      throw std::invalid_argument("relativization base must be a 1-d model");
    ModelId m(Kind::Relative);
    m.base_ = std::make_shared<ModelId>(std::move(base));
    m.rel_u_ = std::move(u);
    return m;
  }

  /// Default coordinate names for real:n style descriptors.
  static std::vector<std::string> default_coords(int n) {
    static const char *abc[] = {"x", "y", "z", "w"};
    std::vector<std::string> v;
    for (int i = 0; i < n; ++i)
      v.push_back(i < 4 ? abc[i] : "x" + std::to_string(i + 1));
    return v;
  }

  Kind kind() const { return kind_; }
  bool is_product() const {
    return kind_ == Kind::ProductReal || kind_ == Kind::Torus || kind_ == Kind::Cube;
  }
  const std::vector<std::string> &coords() const { return coords_; }
  const ModelId &base() const { return *base_; }
  const Region &rel_unit() const { return rel_u_; }

  /// Geometric space of a 1-d model (Relative resolves to its base).
  Space space() const {
    switch (kind_) {
    case Kind::RealLine: return Space::OpenInterval;
    case Kind::UnitInterval: return Space::UnitInterval;
    case Kind::Circle: return Space::Circle;
    case Kind::Relative: return base_->space();
    default: throw std::logic_error("space() on a product model");
    }
  }

  /// Factor space of a product model.
  Space factor_space() const {
    switch (kind_) {
    case Kind::ProductReal: return Space::OpenInterval;
    case Kind::Torus: return Space::Circle;
    case Kind::Cube: return Space::UnitInterval;
    default: throw std::logic_error("factor_space() on a 1-d model");
    }
  }

  /// Whether everything is bounded (the NCA cases).
  bool compact() const {
    switch (kind_) {
    case Kind::RealLine:
    case Kind::ProductReal: return false;
    case Kind::Relative: return base_->compact() || rel_u_.level1_finite();
    default: return true;
    }
  }

  std::string str() const;

private:
  explicit ModelId(Kind k) : kind_(k) {}
  static ModelId product(Kind k, std::vector<std::string> coords) {
    if (coords.empty()) throw std::invalid_argument("product model needs coordinates");
    ModelId m(k);
    m.coords_ = std::move(coords);
    return m;
  }

  Kind kind_;
  std::vector<std::string> coords_;
  std::shared_ptr<ModelId> base_;
  Region rel_u_;
};

} // namespace regionalg
