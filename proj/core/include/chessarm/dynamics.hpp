#pragma once

#include <cstddef>

#include "chessarm/kinematics.hpp"

// Torque sizing. Units are whatever the caller uses consistently; the
// reference convention throughout the docs is N, m, kg, s.

namespace chessarm {

/// Two-lift-joint arm held stretched out horizontally.
///
///   l1, l2, l3 : linkage lengths (l3 = lever arm of the lifted object from joint 2)
///   w1, w2     : weights of link 1 and link 2
///   w3         : weight of the lifted object
///   w4         : weight of joint 2 (its actuator)
struct LoadSpec3 {
  double l1 = 0.0;
  double l2 = 0.0;
  double l3 = 0.0;
  double w1 = 0.0;
  double w2 = 0.0;
  double w3 = 0.0;
  double w4 = 0.0;

  void validate() const;
};

struct JointMoments {
  double m1 = 0.0;  ///< about joint 1 (base lift joint)
  double m2 = 0.0;  ///< about joint 2
};

/// M1 = l1/2 w1 + l1 w4 + (l1 + l2/2) w2 + (l1 + l3) w3
/// M2 = l2/2 w2 + l3 w3
/// Link centres of mass sit at half their length.
JointMoments joint_moments(const LoadSpec3& load);

/// Static holding torque about `about_joint` for a chain stretched out
/// horizontally: every downstream link weight acts at its midpoint, every
/// downstream joint weight at its joint, and `payload` at the tip.
///
/// Prismatic joints are taken at their link length. Throws
/// Error(IndexOutOfRange) when `about_joint >= chain.size()`.
double static_moment_generic(const JointChain& chain, double payload, std::size_t about_joint);

/// The stretched two-link chain of a LoadSpec3: link 1 (l1, w1), joint 2
/// carrying w4, link 2 (l2, w2). The object hangs at the chain tip when the
/// chain is used with static_moment_generic.
JointChain load_template_chain(const LoadSpec3& load);

/// V = 2 pi R f.
double tip_speed(double radius, double freq);

struct SpinSpec {
  double m_arm = 0.0;      ///< arm mass
  double m_payload = 0.0;  ///< carried mass at the tip
  double length = 0.0;     ///< full arm length
  double omega = 0.0;      ///< target angular velocity, reached from rest
  double time = 1.0;       ///< ramp time

  void validate() const;
};

struct SpinTorque {
  double tau_arm = 0.0;
  double tau_obj = 0.0;
  double tau_motor = 0.0;
};

/// Torque to spin the arm up from rest to `omega` in `time` seconds about a
/// vertical axis (no gravity load):
///   tau_arm = m_arm L^2/4 omega/t, tau_obj = m L^2 omega/t.
/// Throws Error(NonPositiveTime) for time <= 0.
SpinTorque spin_up_torque(const SpinSpec& spec);

struct GripperSpec {
  double grip_force = 0.0;  ///< jaw clamping force
  double jaw_length = 0.0;  ///< gripper face to the part's centre of gravity
  double part_mass = 0.0;
  double accel_total = 0.0;  ///< all accelerations on the part, gravity included by the caller

  void validate() const;
};

struct GripperTorque {
  double tau_gripper = 0.0;
  double tau_part = 0.0;
  double tau_total = 0.0;
};

/// tau_gripper = F L_jaw, tau_part = a_total M_part L_jaw.
GripperTorque gripper_torque(const GripperSpec& spec);

}  // namespace chessarm
