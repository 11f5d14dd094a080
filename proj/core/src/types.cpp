#include "a2cf/types.hpp"

namespace a2cf {

double norm6(const Vec6& x) {
  double sq = 0.0;
  for (int i = 0; i < 6; ++i) {
    if (!std::isfinite(x[i])) throw std::invalid_argument("norm6: non-finite component");
    sq += x[i] * x[i];
  }
  return std::sqrt(sq);
}

SpatialForce clamp_to_bound(const SpatialForce& F, const ForceBound& bound) {
  Vec6 v = F.to6();
  for (int i = 0; i < 6; ++i) {
    const double b = bound.eta[i];
    if (v[i] > b) v[i] = b;
    if (v[i] < -b) v[i] = -b;
  }
  return SpatialForce::from6(v);
}

}  // namespace a2cf
