#include "chessarm/workspace.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "chessarm/error.hpp"

namespace chessarm {
namespace {

constexpr double kTwoPi = 2.0 * kPi;

// Is some representative of `angle` (mod 2 pi) inside `limits`, up to `slack`?
bool angle_in(const Interval& limits, double angle, double slack) {
  const double shifted = angle - limits.lo;
  const double m = shifted - kTwoPi * std::floor(shifted / kTwoPi);  // [0, 2 pi)
  return m <= limits.width() + slack || kTwoPi - m <= slack;
}

// Folded configuration for the l1 == l2 singular point: elbow_abs = shoulder + pi.
bool folded_pose_in_limits(const PlanarArm& arm) {
  const Interval& s = arm.shoulder_limits();
  const Interval& e = arm.elbow_limits();
  if (s.width() >= kTwoPi || e.width() >= kTwoPi) return true;
  // Shoulder candidates: e - pi + 2 pi k for e in the elbow interval.
  const double lo = e.lo - kPi;
  const double hi = e.hi - kPi;
  const auto k_min = static_cast<long>(std::floor((s.lo - hi) / kTwoPi)) - 1;
  const auto k_max = static_cast<long>(std::ceil((s.hi - lo) / kTwoPi)) + 1;
  for (long k = k_min; k <= k_max; ++k) {
    const double shift = kTwoPi * static_cast<double>(k);
    if (lo + shift <= s.hi + kLimitSlack && s.lo - kLimitSlack <= hi + shift) return true;
  }
  return false;
}

double sample_at(const Interval& iv, std::size_t i, std::size_t n) {
  if (i + 1 == n) return iv.hi;
  return iv.lo + iv.width() * static_cast<double>(i) / static_cast<double>(n - 1);
}

}  // namespace

std::string_view to_string(StructureCode code) noexcept {
  switch (code) {
    case StructureCode::PPP: return "PPP";
    case StructureCode::RPP_PRP: return "RPP_PRP";
    case StructureCode::RRP: return "RRP";
    case StructureCode::RRP_PRR_torical: return "RRP_PRR_torical";
    case StructureCode::RRR: return "RRR";
    case StructureCode::Other: return "Other";
  }
  return "Other";
}

std::string_view to_string(CoordinateSystem cs) noexcept {
  switch (cs) {
    case CoordinateSystem::Cartesian: return "Cartesian";
    case CoordinateSystem::Cylindrical: return "Cylindrical";
    case CoordinateSystem::Spherical: return "Spherical";
    case CoordinateSystem::Torical: return "Torical";
    case CoordinateSystem::Anthropomorphic: return "Anthropomorphic";
    case CoordinateSystem::None: return "None";
  }
  return "None";
}

StructureClass classify_structure(const JointChain& chain, std::optional<CoordinateSystem> hint) {
  if (chain.size() < 3) {
    throw Error(ErrorCode::TooFewJoints, "structure classification needs at least 3 joints, got " +
                                             std::to_string(chain.size()));
  }
  int revolute = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    if (chain.joint(i).kind == JointKind::Revolute) ++revolute;
  }

  StructureClass out;
  switch (revolute) {
    case 0: out = {StructureCode::PPP, 14.0, CoordinateSystem::Cartesian}; break;
    case 1: out = {StructureCode::RPP_PRP, 47.0, CoordinateSystem::Cylindrical}; break;
    case 2:
      if (hint == CoordinateSystem::Torical) {
        out = {StructureCode::RRP_PRR_torical, 1.0, CoordinateSystem::Torical};
      } else {
        out = {StructureCode::RRP, 13.0, CoordinateSystem::Spherical};
      }
      break;
    default: out = {StructureCode::RRR, 25.0, CoordinateSystem::Anthropomorphic}; break;
  }
  if (hint && *hint != out.coordinate_system) {
    return {StructureCode::Other, 0.0, CoordinateSystem::None};
  }
  return out;
}

WorkspaceCloud sample_workspace(const PlanarArm& arm, std::size_t resolution) {
  if (resolution < 2) {
    throw Error(ErrorCode::InvalidArgument, "workspace resolution must be at least 2");
  }
  WorkspaceCloud cloud;
  cloud.resolution = resolution;
  cloud.points.reserve(resolution * resolution);
  for (std::size_t i = 0; i < resolution; ++i) {
    const double shoulder = sample_at(arm.shoulder_limits(), i, resolution);
    for (std::size_t j = 0; j < resolution; ++j) {
      const double elbow = sample_at(arm.elbow_limits(), j, resolution);
      const Pose2 p = fk_planar(arm, {shoulder, elbow});
      cloud.points.push_back({p.x, p.y});
    }
  }
  return cloud;
}

bool reachable(const PlanarArm& arm, Point2 point) {
  const Point2 target{point.x, point.y - arm.l0()};
  for (const auto branch : {ElbowBranch::Up, ElbowBranch::Down}) {
    AnglePair angles;
    try {
      angles = ik_planar(arm, target, branch);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::Singular) return folded_pose_in_limits(arm);
      return false;  // OutOfReach is branch independent
    }
    if (angle_in(arm.shoulder_limits(), angles.shoulder, kLimitSlack) &&
        angle_in(arm.elbow_limits(), angles.elbow_abs, kLimitSlack)) {
      return true;
    }
  }
  return false;
}

double occupancy_area(const WorkspaceCloud& cloud, double cell_size) {
  if (!(cell_size > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "cell size must be positive");
  }
  if (cloud.points.empty()) return 0.0;

  double min_x = std::numeric_limits<double>::infinity();
  double min_y = min_x;
  double max_x = -min_x;
  double max_y = -min_x;
  for (const auto& p : cloud.points) {
    min_x = std::min(min_x, p.x);
    min_y = std::min(min_y, p.y);
    max_x = std::max(max_x, p.x);
    max_y = std::max(max_y, p.y);
  }
  // One empty ring of cells around the occupied block keeps neighbour lookups in range.
  const auto nx = static_cast<std::size_t>(std::floor((max_x - min_x) / cell_size)) + 3;
  const auto ny = static_cast<std::size_t>(std::floor((max_y - min_y) / cell_size)) + 3;
  std::vector<char> occupied(nx * ny, 0);
  for (const auto& p : cloud.points) {
    const auto ix = static_cast<std::size_t>(std::floor((p.x - min_x) / cell_size)) + 1;
    const auto iy = static_cast<std::size_t>(std::floor((p.y - min_y) / cell_size)) + 1;
    occupied[iy * nx + ix] = 1;
  }

  double cells = 0.0;
  for (std::size_t iy = 1; iy + 1 < ny; ++iy) {
    for (std::size_t ix = 1; ix + 1 < nx; ++ix) {
      if (!occupied[iy * nx + ix]) continue;
      const bool interior = occupied[iy * nx + ix - 1] && occupied[iy * nx + ix + 1] &&
                            occupied[(iy - 1) * nx + ix] && occupied[(iy + 1) * nx + ix];
      cells += interior ? 1.0 : 0.5;
    }
  }
  return cells * cell_size * cell_size;
}

double default_cell_size(const PlanarArm& arm, std::size_t resolution) {
  if (resolution < 2) {
    throw Error(ErrorCode::InvalidArgument, "workspace resolution must be at least 2");
  }
  const double steps = static_cast<double>(resolution - 1);
  const double step =
      std::max(arm.shoulder_limits().width(), arm.elbow_limits().width()) / steps;
  const double link = std::max(arm.l1(), arm.l2());
  if (step == 0.0) return 1e-3 * link;
  return 1.3 * link * step;
}

}  // namespace chessarm
