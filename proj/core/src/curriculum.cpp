#include "a2cf/curriculum.hpp"

namespace a2cf {

CurriculumState CurriculumState::init(const ForceBound& eta0, double epsilon, double delta) {
  CurriculumState s;
  s.eta = eta0;
  s.eta0 = eta0;
  s.epsilon = epsilon;
  s.delta = delta;
  s.validate();
  return s;
}

void CurriculumState::validate() const {
  if (!(delta > 0.0 && delta < 1.0)) throw std::invalid_argument("curriculum: delta must be in (0,1)");
  if (!(epsilon > 0.0 && epsilon < 1.0)) throw std::invalid_argument("curriculum: epsilon must be in (0,1)");
  if (!(growth_cap >= 1.0)) throw std::invalid_argument("curriculum: growth_cap must be >= 1");
  eta.validate();
  eta0.validate();
}

namespace {
inline void scale_inplace(Vec6& eta, double factor) {
  for (int i = 0; i < 6; ++i) eta[i] = eta[i] * factor;
}
}  // namespace

CurriculumState update_bound(const CurriculumState& state, double force_norm,
                             bool skill_learned) {
  if (!std::isfinite(force_norm) || force_norm < 0.0)
    throw std::invalid_argument("update_bound: force_norm must be finite and >= 0");

  CurriculumState next = state;
  next.cap_hit = false;
  const double bound_norm = norm6(state.eta.eta);

  if (force_norm < (1.0 - state.epsilon) * bound_norm) {
    scale_inplace(next.eta.eta, 1.0 - state.delta);
  } else if (force_norm > (1.0 + state.epsilon) * bound_norm) {
    scale_inplace(next.eta.eta, 1.0 + state.delta);
    const double cap = state.growth_cap * norm6(state.eta0.eta);
    const double grown = norm6(next.eta.eta);
    if (grown > cap && grown > 0.0) {
      scale_inplace(next.eta.eta, cap / grown);
      next.cap_hit = true;
    }
  }

  if (skill_learned && state.stack_skill_decay) {
    scale_inplace(next.eta.eta, 1.0 - state.delta);
  } else if (skill_learned) {
    // non-stacking variant: skill decay fires only when the usage branch did not
    if (norm6(next.eta.eta) == bound_norm) scale_inplace(next.eta.eta, 1.0 - state.delta);
  }

  next.iteration = state.iteration + 1;
  return next;
}

double aggregate_force_norm(const std::vector<Vec6>& applied_forces) {
  if (applied_forces.empty())
    throw std::invalid_argument("aggregate_force_norm: empty batch");
  double sum = 0.0;
  for (const Vec6& f : applied_forces) sum += norm6(f);
  return sum / static_cast<double>(applied_forces.size());
}

bool is_negligible(const ForceBound& eta) { return norm6(eta.eta) < 0.1; }

bool gate_force_reward(const SkillProgress& progress) {
  if (!(progress.progress >= 0.0 && progress.progress <= 1.0))
    throw std::invalid_argument("gate_force_reward: progress must be in [0,1]");
  return progress.progress >= 0.8;
}

}  // namespace a2cf
