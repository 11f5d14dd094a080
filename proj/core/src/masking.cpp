#include "a2cf/masking.hpp"

namespace a2cf {

Vec6 sample_mask(const MaskConfig& cfg, RngStream& rng) {
  cfg.validate();
  Vec6 mask;
  if (cfg.granularity == MaskGranularity::WholeForce) {
    const double v = rng.bernoulli(cfg.zeta) ? 0.0 : 1.0;
    mask.setConstant(v);
  } else {
    for (int i = 0; i < 6; ++i) mask[i] = rng.bernoulli(cfg.zeta) ? 0.0 : 1.0;
  }
  return mask;
}

SpatialForce apply_mask(const Vec6& mask, const SpatialForce& F) {
  Vec6 v = F.to6();
  for (int i = 0; i < 6; ++i) v[i] *= mask[i];
  return SpatialForce::from6(v);
}

}  // namespace a2cf
