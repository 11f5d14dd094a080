#pragma once

#include "a2cf/rng.hpp"
#include "a2cf/types.hpp"

namespace a2cf {

enum class MaskGranularity {
  WholeForce,    // one Bernoulli draw gates all six components
  PerComponent,  // six independent Bernoulli draws
};

// Random mask of the assistive force: each masked entry is dropped with
// probability zeta, so the motion agent occasionally has to act unassisted.
struct MaskConfig {
  double zeta = 0.2;
  MaskGranularity granularity = MaskGranularity::WholeForce;

  void validate() const {
    if (!(zeta >= 0.0 && zeta <= 1.0))
      throw std::invalid_argument("mask: zeta must be in [0,1]");
  }
};

// 0/1 mask vector; P(entry = 0) = zeta in both granularities.
Vec6 sample_mask(const MaskConfig& cfg, RngStream& rng);

// Componentwise product M (.) F.
SpatialForce apply_mask(const Vec6& mask, const SpatialForce& F);

}  // namespace a2cf
