#pragma once

#include <Eigen/Core>

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace a2cf {

using Vec2 = Eigen::Vector2d;
using Vec3 = Eigen::Vector3d;
using Vec6 = Eigen::Matrix<double, 6, 1>;
using VecX = Eigen::VectorXd;
using MatX = Eigen::MatrixXd;

// Euclidean norm of a 6-vector. Summation runs in index order so the result
// is reproducible bit-for-bit across builds.
double norm6(const Vec6& x);

inline bool all_finite(const VecX& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (!std::isfinite(v[i])) return false;
  }
  return true;
}

// 6-D spatial wrench applied at the base link: linear force f and moment m.
// Planar worlds keep the out-of-plane components (f_y, m_x, m_z) at zero.
struct SpatialForce {
  Vec3 f = Vec3::Zero();
  Vec3 m = Vec3::Zero();

  Vec6 to6() const {
    Vec6 v;
    v << f, m;
    return v;
  }
  static SpatialForce from6(const Vec6& v) {
    SpatialForce F;
    F.f = v.head<3>();
    F.m = v.tail<3>();
    return F;
  }
  bool finite() const {
    for (int i = 0; i < 3; ++i) {
      if (!std::isfinite(f[i]) || !std::isfinite(m[i])) return false;
    }
    return true;
  }
  double norm() const { return norm6(to6()); }
};

// Per-dimension half-widths of the assistive-force hypercube. norm() == 0
// means the assistive channel is fully withdrawn.
struct ForceBound {
  Vec6 eta = Vec6::Zero();

  ForceBound() = default;
  explicit ForceBound(const Vec6& e) : eta(e) { validate(); }
  static ForceBound from_fm(const Vec3& f, const Vec3& m) {
    Vec6 v;
    v << f, m;
    return ForceBound(v);
  }
  void validate() const {
    for (int i = 0; i < 6; ++i) {
      if (!std::isfinite(eta[i]) || eta[i] < 0.0)
        throw std::invalid_argument("ForceBound: components must be finite and >= 0");
    }
  }
  double norm() const { return norm6(eta); }
  bool is_zero() const { return norm() == 0.0; }
};

// Componentwise clamp of F into the hypercube [-eta_i, +eta_i].
SpatialForce clamp_to_bound(const SpatialForce& F, const ForceBound& bound);

// Robot-visible observation tuple.
struct Observation {
  Vec3 w = Vec3::Zero();   // angular velocity, base frame
  Vec3 g = Vec3::Zero();   // gravity projection in base frame
  VecX q;                  // observable joint positions
  VecX q_dot;              // observable joint velocities
  VecX a_prev;             // previous motion action
  VecX c;                  // task command

  Eigen::Index dim() const { return 6 + q.size() + q_dot.size() + a_prev.size() + c.size(); }
  VecX flatten() const {
    VecX v(dim());
    v << w, g, q, q_dot, a_prev, c;
    return v;
  }
};

// Simulation-only extras. Never serialized into deployment-mode policy inputs.
struct PrivilegedState {
  ForceBound eta_current;
  Vec3 v_lin = Vec3::Zero();       // true base linear velocity
  double friction = 0.0;           // episode ground friction coefficient
  double mass_offset = 0.0;        // payload randomization
  Vec2 com_offset = Vec2::Zero();  // center-of-mass shift
  VecX terrain_samples;            // ground heights around the base
  Vec2 disturbance = Vec2::Zero(); // most recent push velocity

  Eigen::Index dim() const { return 6 + 3 + 1 + 1 + 2 + terrain_samples.size() + 2; }
  VecX flatten() const {
    VecX v(dim());
    v << eta_current.eta, v_lin, friction, mass_offset, com_offset, terrain_samples, disturbance;
    return v;
  }
};

// Joint motion action (desired joint positions) plus the assistive wrench.
struct CompositeAction {
  VecX motion;
  SpatialForce assist;
};

// Backflip FSM state. Transitions only along Stand->Crouch->Jump->Air->Land.
enum class Phase : int { Stand = 0, Crouch = 1, Jump = 2, Air = 3, Land = 4 };

inline const char* phase_name(Phase p) {
  switch (p) {
    case Phase::Stand:  return "stand";
    case Phase::Crouch: return "crouch";
    case Phase::Jump:   return "jump";
    case Phase::Air:    return "air";
    case Phase::Land:   return "land";
  }
  return "?";
}

}  // namespace a2cf
