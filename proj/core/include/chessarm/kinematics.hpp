#pragma once

#include <cstddef>
#include <numbers>
#include <span>
#include <vector>

namespace chessarm {

inline constexpr double kPi = std::numbers::pi;

/// Wraps an angle into (-pi, pi].
double normalize_angle(double radians) noexcept;

constexpr double deg_to_rad(double deg) noexcept { return deg * kPi / 180.0; }
constexpr double rad_to_deg(double rad) noexcept { return rad * 180.0 / kPi; }

/// Closed interval [lo, hi].
struct Interval {
  double lo = -kPi;
  double hi = kPi;

  bool contains(double v) const noexcept { return lo <= v && v <= hi; }
  double width() const noexcept { return hi - lo; }

  friend bool operator==(const Interval&, const Interval&) = default;
};

inline constexpr Interval kFullTurn{-kPi, kPi};

struct Point2 {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point2&, const Point2&) = default;
};

// ---------------------------------------------------------------------------
// Joint chains
// ---------------------------------------------------------------------------

enum class JointKind { Prismatic, Revolute };

/// One actuated joint and the link that follows it.
///
/// Limits are radians for revolute joints and length units for prismatic
/// ones. `joint_weight` is the actuator's own weight, located at the joint;
/// it only matters for static moment sizing.
struct Joint {
  JointKind kind = JointKind::Revolute;
  double min_limit = -kPi;
  double max_limit = kPi;
  double link_length = 0.0;
  double link_weight = 0.0;
  double joint_weight = 0.0;

  static Joint revolute(double min_limit, double max_limit, double link_length = 0.0,
                        double link_weight = 0.0, double joint_weight = 0.0);
  static Joint prismatic(double min_limit, double max_limit, double link_length = 0.0,
                         double link_weight = 0.0, double joint_weight = 0.0);

  /// Throws Error(InvalidArgument) on a broken invariant.
  void validate() const;

  friend bool operator==(const Joint&, const Joint&) = default;
};

/// Ordered joints on top of a base column. One actuator per joint, so the
/// robot's degrees of freedom equal the joint count.
class JointChain {
 public:
  JointChain() = default;
  JointChain(double base_height, std::vector<Joint> joints);

  double base_height() const noexcept { return base_height_; }
  std::span<const Joint> joints() const noexcept { return joints_; }
  const Joint& joint(std::size_t i) const { return joints_.at(i); }
  std::size_t dof() const noexcept { return joints_.size(); }
  std::size_t size() const noexcept { return joints_.size(); }

  /// Sum of link lengths, i.e. reach when stretched out.
  double total_length() const noexcept;

 private:
  double base_height_ = 0.0;
  std::vector<Joint> joints_;
};

/// True iff every value lies in its joint's closed limit interval.
/// Throws Error(LengthMismatch) when the sizes differ.
bool within_limits(const JointChain& chain, std::span<const double> joint_values);

/// A task needing `dof_task` parameters can only be done by a robot with
/// exactly as many degrees of freedom.
constexpr bool dof_feasible(std::size_t dof_robot, std::size_t dof_task) noexcept {
  return dof_robot == dof_task;
}

// ---------------------------------------------------------------------------
// Planar 3-DOF arm (base column + two links in the vertical plane)
// ---------------------------------------------------------------------------

/// End-effector pose in the arm's plane.
struct Pose2 {
  double x = 0.0;
  double y = 0.0;
  double orientation = 0.0;  ///< (-pi, pi]
};

/// Both angles are measured absolutely from the horizontal: `shoulder` is
/// the first link's angle and `elbow_abs` the second link's.
struct AnglePair {
  double shoulder = 0.0;
  double elbow_abs = 0.0;

  friend bool operator==(const AnglePair&, const AnglePair&) = default;
};

enum class ElbowBranch { Up, Down };

class PlanarArm {
 public:
  PlanarArm(double l0, double l1, double l2, Interval shoulder_limits = kFullTurn,
            Interval elbow_limits = kFullTurn);

  double l0() const noexcept { return l0_; }
  double l1() const noexcept { return l1_; }
  double l2() const noexcept { return l2_; }
  const Interval& shoulder_limits() const noexcept { return shoulder_limits_; }
  const Interval& elbow_limits() const noexcept { return elbow_limits_; }

  double min_reach() const noexcept;
  double max_reach() const noexcept { return l1_ + l2_; }

  /// Shoulder position in the plane, (0, l0).
  Point2 shoulder() const noexcept { return {0.0, l0_}; }

  /// Exact closed-interval check of both angles.
  bool within_limits(const AnglePair& angles) const noexcept;

 private:
  double l0_;
  double l1_;
  double l2_;
  Interval shoulder_limits_;
  Interval elbow_limits_;
};

/// x = l1 cos(shoulder) + l2 cos(elbow_abs),
/// y = l0 + l1 sin(shoulder) + l2 sin(elbow_abs),
/// orientation = normalize(shoulder + elbow_abs).
Pose2 fk_planar(const PlanarArm& arm, const AnglePair& angles) noexcept;

/// Two-link inverse kinematics. `target` is relative to the shoulder, so the
/// base column l0 plays no part. The branch picks the sign of the elbow
/// sine: Up takes +sqrt(1 - c2^2), Down takes -sqrt(1 - c2^2).
///
/// Throws Error(OutOfReach) outside the annulus |l1-l2| <= r <= l1+l2 and
/// Error(Singular) for the origin when l1 == l2.
AnglePair ik_planar(const PlanarArm& arm, Point2 target, ElbowBranch branch);

/// Shoulder angle from the arcsine-only closed form
///   asin((y (l1 + l2 c2) - x l2 s2) / (x^2 + y^2)).
/// Only agrees with ik_planar when the shoulder points forward
/// (cos(shoulder) >= 0); otherwise it returns the supplementary angle.
double shoulder_angle_asin(const PlanarArm& arm, Point2 target, ElbowBranch branch);

}  // namespace chessarm
