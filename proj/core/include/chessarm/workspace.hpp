#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "chessarm/kinematics.hpp"

namespace chessarm {

enum class StructureCode { PPP, RPP_PRP, RRP, RRP_PRR_torical, RRR, Other };

enum class CoordinateSystem { Cartesian, Cylindrical, Spherical, Torical, Anthropomorphic, None };

std::string_view to_string(StructureCode code) noexcept;
std::string_view to_string(CoordinateSystem cs) noexcept;

/// Base structure of an arm (its first three joints) with the share of
/// industrial arms built that way.
struct StructureClass {
  StructureCode code = StructureCode::Other;
  double industry_share = 0.0;  ///< percent
  CoordinateSystem coordinate_system = CoordinateSystem::None;

  friend bool operator==(const StructureClass&, const StructureClass&) = default;
};

/// Classifies by the multiset of the first three joint kinds, so RPP, PRP
/// and PPR share a class, as do RRP, RPR and PRR.
///
/// The one-prismatic-two-revolute family has two variants (spherical, 13 %
/// and torical, 1 %). `hint`
/// selects the torical one; without a hint the spherical one is returned.
/// A hint that names a different coordinate system than the matched class
/// yields Other. Throws Error(TooFewJoints) for chains under three joints.
StructureClass classify_structure(const JointChain& chain,
                                  std::optional<CoordinateSystem> hint = std::nullopt);

/// End-effector positions of a PlanarArm, in the arm's plane (base at the
/// origin, shoulder at (0, l0)).
struct WorkspaceCloud {
  std::vector<Point2> points;
  std::size_t resolution = 0;  ///< samples per joint
};

/// Evaluates fk_planar on a resolution x resolution grid spanning both
/// joints' limit intervals (end points included).
/// Throws Error(InvalidArgument) when resolution < 2.
WorkspaceCloud sample_workspace(const PlanarArm& arm, std::size_t resolution);

/// Angular slack used when reachable() checks IK solutions against joint
/// limits; IK rounding is far below it.
inline constexpr double kLimitSlack = 1e-9;

/// True iff some IK branch reaches `point` (same frame as WorkspaceCloud)
/// with both angles inside the arm's limits. Revolute limits are compared
/// modulo a full turn. The singular shoulder point (l1 == l2) counts as
/// reachable when some in-limit shoulder angle folds the elbow back onto it.
bool reachable(const PlanarArm& arm, Point2 point);

/// Area estimate of a point cloud on an occupancy grid of square cells.
/// Occupied cells with all four neighbours occupied count fully, occupied
/// border cells count one half.
double occupancy_area(const WorkspaceCloud& cloud, double cell_size);

/// Cell size matched to the sampling density of sample_workspace(arm, resolution).
double default_cell_size(const PlanarArm& arm, std::size_t resolution);

}  // namespace chessarm
