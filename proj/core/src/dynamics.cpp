#include "chessarm/dynamics.hpp"

#include <string>

#include "chessarm/error.hpp"

namespace chessarm {
namespace {

void require_non_negative(double v, const char* name) {
  if (!(v >= 0.0)) {
    throw Error(ErrorCode::InvalidArgument, std::string(name) + " must be non-negative");
  }
}

}  // namespace

void LoadSpec3::validate() const {
  require_non_negative(l1, "l1");
  require_non_negative(l2, "l2");
  require_non_negative(l3, "l3");
  require_non_negative(w1, "w1");
  require_non_negative(w2, "w2");
  require_non_negative(w3, "w3");
  require_non_negative(w4, "w4");
}

JointMoments joint_moments(const LoadSpec3& load) {
  load.validate();
  const auto& [l1, l2, l3, w1, w2, w3, w4] = load;
  return {
      l1 / 2.0 * w1 + l1 * w4 + (l1 + l2 / 2.0) * w2 + (l1 + l3) * w3,
      l2 / 2.0 * w2 + l3 * w3,
  };
}

double static_moment_generic(const JointChain& chain, double payload, std::size_t about_joint) {
  if (about_joint >= chain.size()) {
    throw Error(ErrorCode::IndexOutOfRange,
                "joint index " + std::to_string(about_joint) + " out of range for chain of " +
                    std::to_string(chain.size()));
  }
  require_non_negative(payload, "payload");

  const auto joints = chain.joints();
  double moment = 0.0;
  double offset = 0.0;  // horizontal distance from the pivot to the current joint
  for (std::size_t i = about_joint; i < joints.size(); ++i) {
    const Joint& j = joints[i];
    moment += j.joint_weight * offset;
    moment += j.link_weight * (offset + j.link_length / 2.0);
    offset += j.link_length;
  }
  moment += payload * offset;
  return moment;
}

JointChain load_template_chain(const LoadSpec3& load) {
  load.validate();
  return JointChain(0.0, {
                             Joint::revolute(-kPi, kPi, load.l1, load.w1),
                             Joint::revolute(-kPi, kPi, load.l2, load.w2, load.w4),
                         });
}

double tip_speed(double radius, double freq) {
  require_non_negative(radius, "radius");
  require_non_negative(freq, "freq");
  return 2.0 * kPi * radius * freq;
}

void SpinSpec::validate() const {
  if (!(time > 0.0)) throw Error(ErrorCode::NonPositiveTime, "spin-up time must be positive");
  require_non_negative(m_arm, "m_arm");
  require_non_negative(m_payload, "m_payload");
  require_non_negative(length, "length");
  require_non_negative(omega, "omega");
}

SpinTorque spin_up_torque(const SpinSpec& spec) {
  spec.validate();
  const double rate = spec.omega / spec.time;
  const double l_sq = spec.length * spec.length;
  SpinTorque out;
  out.tau_arm = spec.m_arm * (l_sq / 4.0) * rate;
  out.tau_obj = spec.m_payload * l_sq * rate;
  out.tau_motor = out.tau_arm + out.tau_obj;
  return out;
}

void GripperSpec::validate() const {
  require_non_negative(grip_force, "grip_force");
  require_non_negative(jaw_length, "jaw_length");
  require_non_negative(part_mass, "part_mass");
  require_non_negative(accel_total, "accel_total");
}

GripperTorque gripper_torque(const GripperSpec& spec) {
  spec.validate();
  GripperTorque out;
  out.tau_gripper = spec.grip_force * spec.jaw_length;
  out.tau_part = spec.accel_total * spec.part_mass * spec.jaw_length;
  out.tau_total = out.tau_gripper + out.tau_part;
  return out;
}

}  // namespace chessarm
