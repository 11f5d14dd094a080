#pragma once

#include <functional>
#include <vector>

#include "a2cf/types.hpp"

namespace a2cf {

// Minimal deterministic planar (x-z plane + pitch) rigid-body world.
//
// Generalized coordinates are [x, z, theta, q_0 .. q_{K-1}]: a floating base
// plus up to a handful of depth-1 joints, each carrying a point mass at its
// link end and/or a rotor inertia. Dynamics come from the exact mass matrix
// and velocity-product terms of this small Lagrangian system; contact is a
// spring-damper normal force with regularized Coulomb friction. Integration
// is semi-implicit Euler at the configured substep.

struct JointConfig {
  enum class Kind { Revolute, Prismatic };
  Kind kind = Kind::Revolute;
  Vec2 mount = Vec2::Zero();   // attachment point, body frame
  Vec2 axis = Vec2(0, -1);     // prismatic slide direction, body frame (unit)
  double angle_offset = 0.0;   // revolute link direction at q = 0, body frame
  double length = 0.0;         // revolute lever arm to the point mass
  double base_extension = 0.0; // prismatic extension at q = 0
  double mass = 0.0;           // point mass at the link end
  double rotor_inertia = 0.0;  // revolute: spins with theta + q; prismatic: reflected mass
  double damping = 0.0;
  double q_min = -1e9;         // hard stop (stiff spring) + reward soft limit
  double q_max = 1e9;
  double torque_limit = 1e9;
  double kp = 0.0;
  double kd = 0.0;
  double q_default = 0.0;      // nominal pose, also the PD target at reset
};

struct FootConfig {
  int joint = -1;              // -1: fixed to the base at `offset`; else at joint link end
  Vec2 offset = Vec2::Zero();  // body frame, used when joint == -1
  double wheel_radius = 0.0;   // > 0: rolling contact (slip = material velocity)
  int wheel_joint = -1;        // spin coordinate for wheel feet
};

struct PhysicsConfig {
  double dt_sim = 0.001;
  int substeps_per_env_step = 20;  // dt_sim * substeps must equal 0.02 s
  double gravity = 9.81;
  double friction = 0.8;

  double base_mass = 8.0;
  double base_inertia = 0.3;
  std::vector<JointConfig> joints;
  std::vector<FootConfig> feet;

  double contact_stiffness = 4.0e4;  // penetration < 5 mm under body weight
  double contact_damping = 600.0;
  double tangent_stiffness = 800.0;  // viscous regularization of Coulomb friction
  double limit_stiffness = 2.0e4;
  double limit_damping = 100.0;

  double explosion_bound = 1.0e3;    // any |state| beyond this flags the episode terminal
  bool fixed_base = false;

  double env_dt() const { return dt_sim * substeps_per_env_step; }
  void validate() const;
};

struct BodyState {
  Vec2 pos = Vec2::Zero();
  double theta = 0.0;          // unwrapped pitch: a full flip is a 2*pi change
  Vec2 vel = Vec2::Zero();
  double omega = 0.0;
  VecX q;
  VecX q_dot;
};

struct ContactState {
  struct Foot {
    bool in_contact = false;
    Vec2 foot_velocity = Vec2::Zero();  // contact-material velocity (slip for wheels)
    double normal_force = 0.0;
  };
  std::vector<Foot> feet;
};

using TerrainFn = std::function<double(double)>;

// tau = kp.(q_des - q) - kd.q_dot, componentwise, clamped to tau_limit.
VecX pd_torque(const VecX& q_des, const VecX& q, const VecX& q_dot,
               const VecX& kp, const VecX& kd, const VecX& tau_limit);

// Unit gravity direction expressed in the base frame: theta = 0 gives
// [0, 0, -1], theta = pi/2 gives [-1, 0, 0] (nose-down pitch sees gravity
// along -x of the body).
Vec3 gravity_projection(double theta);

class World {
 public:
  explicit World(const PhysicsConfig& cfg);

  void set_terrain(TerrainFn h);          // default: flat at height 0
  double terrain_height(double x) const { return terrain_(x); }
  void set_friction(double mu) { friction_ = mu; }
  double friction() const { return friction_; }

  void set_state(const BodyState& s);
  const BodyState& state() const { return state_; }
  const PhysicsConfig& config() const { return cfg_; }
  bool exploded() const { return exploded_; }
  int n_joints() const { return static_cast<int>(cfg_.joints.size()); }

  // One environment step; PD torques are recomputed every substep against the
  // fixed targets. The wrench must already be masked and clamped.
  ContactState step_pd(const VecX& q_des, const SpatialForce& wrench);
  // One environment step at fixed joint torques.
  ContactState step_torques(const VecX& torques, const SpatialForce& wrench);
  // A single substep at fixed torques.
  void substep(const VecX& torques, const SpatialForce& wrench);

  // Pure contact query for the current state.
  ContactState resolve_contact() const;

  VecX pd_torques(const VecX& q_des) const;
  const VecX& last_torques() const { return last_torques_; }

  Vec2 joint_point(int j) const;          // link-end point mass position
  Vec2 foot_point(int i) const;           // foot attachment (axle for wheels)
  Vec2 foot_contact_point(int i) const;   // actual contact location

  double kinetic_energy() const;
  double potential_energy() const;        // gravity only, reference at z = 0
  double total_energy() const { return kinetic_energy() + potential_energy(); }

 private:
  struct ContactForce {
    Vec2 force = Vec2::Zero();  // world frame (tangent, normal)
    bool active = false;
  };

  int ngen() const { return 3 + n_joints(); }
  Vec2 rot(double c, double s, const Vec2& v) const { return Vec2(c * v.x() - s * v.y(), s * v.x() + c * v.y()); }
  Vec2 drot(double c, double s, const Vec2& v) const { return Vec2(-s * v.x() - c * v.y(), c * v.x() - s * v.y()); }

  // dense kinematics of one joint link-end point
  void point_kinematics(int j, Vec2& p, Vec2& dp_dtheta, Vec2& dp_dq, Vec2& bias_acc) const;
  void foot_kinematics(int i, Vec2& p_attach, Vec2& dp_dtheta, Vec2& dp_dq, int& qcol) const;
  ContactState compute_contacts(std::vector<ContactForce>* forces) const;
  void check_explosion();

  PhysicsConfig cfg_;
  TerrainFn terrain_;
  double friction_;
  BodyState state_;
  ContactState contact_;
  VecX last_torques_;
  bool exploded_ = false;
};

}  // namespace a2cf
