#include "chessarm/kinematics.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <utility>

#include "chessarm/error.hpp"

namespace chessarm {
namespace {

// acos/asin arguments this close to +-1 are clamped; further out is a miss.
constexpr double kClampSlack = 1e-12;

void require(bool ok, const char* what) {
  if (!ok) throw Error(ErrorCode::InvalidArgument, what);
}

struct ElbowSolution {
  double c2;
  double s2;
};

ElbowSolution solve_elbow(const PlanarArm& arm, Point2 target, ElbowBranch branch) {
  const double l1 = arm.l1();
  const double l2 = arm.l2();
  const double r2 = target.x * target.x + target.y * target.y;
  if (target.x == 0.0 && target.y == 0.0 && l1 == l2) {
    throw Error(ErrorCode::Singular,
                "target coincides with the shoulder and l1 == l2: infinitely many solutions");
  }
  double c2 = (r2 - l1 * l1 - l2 * l2) / (2.0 * l1 * l2);
  if (c2 > 1.0 + kClampSlack || c2 < -1.0 - kClampSlack) {
    std::ostringstream msg;
    msg << "target distance " << std::sqrt(r2) << " outside reach [" << arm.min_reach()
        << ", " << arm.max_reach() << "]";
    throw Error(ErrorCode::OutOfReach, msg.str());
  }
  c2 = std::clamp(c2, -1.0, 1.0);
  double s2 = std::sqrt((1.0 - c2) * (1.0 + c2));
  if (branch == ElbowBranch::Down) s2 = -s2;
  return {c2, s2};
}

}  // namespace

double normalize_angle(double radians) noexcept {
  double r = std::remainder(radians, 2.0 * kPi);
  if (r <= -kPi) r += 2.0 * kPi;
  return r;
}

Joint Joint::revolute(double min_limit, double max_limit, double link_length,
                      double link_weight, double joint_weight) {
  Joint j{JointKind::Revolute, min_limit, max_limit, link_length, link_weight, joint_weight};
  j.validate();
  return j;
}

Joint Joint::prismatic(double min_limit, double max_limit, double link_length,
                       double link_weight, double joint_weight) {
  Joint j{JointKind::Prismatic, min_limit, max_limit, link_length, link_weight, joint_weight};
  j.validate();
  return j;
}

void Joint::validate() const {
  require(min_limit <= max_limit, "joint min_limit exceeds max_limit");
  require(link_length >= 0.0, "joint link_length must be non-negative");
  require(link_weight >= 0.0, "joint link_weight must be non-negative");
  require(joint_weight >= 0.0, "joint joint_weight must be non-negative");
}

JointChain::JointChain(double base_height, std::vector<Joint> joints)
    : base_height_(base_height), joints_(std::move(joints)) {
  require(base_height_ >= 0.0, "chain base_height must be non-negative");
  for (const auto& j : joints_) j.validate();
}

double JointChain::total_length() const noexcept {
  double sum = 0.0;
  for (const auto& j : joints_) sum += j.link_length;
  return sum;
}

bool within_limits(const JointChain& chain, std::span<const double> joint_values) {
  if (joint_values.size() != chain.size()) {
    throw Error(ErrorCode::LengthMismatch,
                "expected " + std::to_string(chain.size()) + " joint values, got " +
                    std::to_string(joint_values.size()));
  }
  for (std::size_t i = 0; i < joint_values.size(); ++i) {
    const auto& j = chain.joint(i);
    if (!(j.min_limit <= joint_values[i] && joint_values[i] <= j.max_limit)) return false;
  }
  return true;
}

PlanarArm::PlanarArm(double l0, double l1, double l2, Interval shoulder_limits,
                     Interval elbow_limits)
    : l0_(l0), l1_(l1), l2_(l2), shoulder_limits_(shoulder_limits), elbow_limits_(elbow_limits) {
  require(l0_ >= 0.0, "l0 must be non-negative");
  require(l1_ > 0.0, "l1 must be positive");
  require(l2_ > 0.0, "l2 must be positive");
  require(shoulder_limits_.lo <= shoulder_limits_.hi, "shoulder limits inverted");
  require(elbow_limits_.lo <= elbow_limits_.hi, "elbow limits inverted");
}

double PlanarArm::min_reach() const noexcept { return std::abs(l1_ - l2_); }

bool PlanarArm::within_limits(const AnglePair& angles) const noexcept {
  return shoulder_limits_.contains(angles.shoulder) && elbow_limits_.contains(angles.elbow_abs);
}

Pose2 fk_planar(const PlanarArm& arm, const AnglePair& angles) noexcept {
  return {
      arm.l1() * std::cos(angles.shoulder) + arm.l2() * std::cos(angles.elbow_abs),
      arm.l0() + arm.l1() * std::sin(angles.shoulder) + arm.l2() * std::sin(angles.elbow_abs),
      normalize_angle(angles.shoulder + angles.elbow_abs),
  };
}

AnglePair ik_planar(const PlanarArm& arm, Point2 target, ElbowBranch branch) {
  const auto [c2, s2] = solve_elbow(arm, target, branch);
  const double k1 = arm.l1() + arm.l2() * c2;
  const double k2 = arm.l2() * s2;
  const double shoulder =
      std::atan2(target.y * k1 - target.x * k2, target.x * k1 + target.y * k2);
  const double relative = std::atan2(s2, c2);
  return {shoulder, normalize_angle(shoulder + relative)};
}

double shoulder_angle_asin(const PlanarArm& arm, Point2 target, ElbowBranch branch) {
  const auto [c2, s2] = solve_elbow(arm, target, branch);
  const double r2 = target.x * target.x + target.y * target.y;
  const double s =
      (target.y * (arm.l1() + arm.l2() * c2) - target.x * arm.l2() * s2) / r2;
  return std::asin(std::clamp(s, -1.0, 1.0));
}

}  // namespace chessarm
