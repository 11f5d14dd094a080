#pragma once

#include <vector>

#include "a2cf/types.hpp"

namespace a2cf {

// Hypercube-based assistive force bound schedule. The bound shrinks (or
// grows) as one scalar factor applied uniformly to all six components, so
// the task-dependent ratios of the initial distribution are preserved for
// the whole run.
struct CurriculumState {
  ForceBound eta;            // current half-widths eta_k
  ForceBound eta0;           // initial half-widths eta_0
  double epsilon = 0.5;      // dead-band half-width
  double delta = 0.2;        // multiplicative step
  long iteration = 0;        // updates applied so far
  double growth_cap = 4.0;   // ||eta|| never exceeds growth_cap * ||eta0||
  bool stack_skill_decay = true;  // skill decay may fire on top of the usage branch
  bool cap_hit = false;      // set when the last update ran into the growth cap

  static CurriculumState init(const ForceBound& eta0, double epsilon = 0.5,
                              double delta = 0.2);
  void validate() const;
};

struct SkillProgress {
  double progress = 0.0;        // in [0, 1]
  bool is_skill_learned = false;
};

// One curriculum iteration:
//   if ||F|| < (1-eps)*||eta||: eta *= (1-delta)
//   else if ||F|| > (1+eps)*||eta||: eta *= (1+delta)
//   if skill_learned: eta *= (1-delta)
// The two blocks are sequential, so shrink and skill decay can both fire in
// one call. Each firing block is exactly one componentwise multiply.
CurriculumState update_bound(const CurriculumState& state, double force_norm,
                             bool skill_learned);

// Mean of norm6 over the applied (post-mask, post-clamp) force samples of one
// training iteration. Throws on an empty batch.
double aggregate_force_norm(const std::vector<Vec6>& applied_forces);

// True once the bound has decayed below the 0.1 N withdrawal threshold.
bool is_negligible(const ForceBound& eta);

// The force penalty only enters the reward once the motion agent has reached
// 80% of the skill acquisition target (boundary inclusive).
bool gate_force_reward(const SkillProgress& progress);

}  // namespace a2cf
