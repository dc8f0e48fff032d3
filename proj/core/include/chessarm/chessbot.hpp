#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "chessarm/error.hpp"
#include "chessarm/kinematics.hpp"

// Chess-board geometry and the four-revolute board arm (J1 base yaw,
// J2 shoulder, J3 elbow, J4 wrist keeping the gripper pointed down).

namespace chessarm {

/// Board square addressed by column x in [-3, 4] and row y in [1, 8].
/// Columns left of the robot's centre line are non-positive.
struct Cell {
  int x = 1;
  int y = 1;

  friend bool operator==(const Cell&, const Cell&) = default;
};

class BoardModel {
 public:
  static constexpr int kMinColumn = -3;
  static constexpr int kMaxColumn = 4;
  static constexpr int kMinRow = 1;
  static constexpr int kMaxRow = 8;

  /// `dif` is the gap between the robot centre and the near board edge.
  BoardModel(double side_length, double dif);

  double side_length() const noexcept { return side_length_; }
  double dif() const noexcept { return dif_; }
  double cell_side() const noexcept { return side_length_ / 8.0; }

  static bool contains(Cell c) noexcept {
    return kMinColumn <= c.x && c.x <= kMaxColumn && kMinRow <= c.y && c.y <= kMaxRow;
  }

  /// All 64 cells, row-major from row 1.
  static std::vector<Cell> cells();

 private:
  double side_length_;
  double dif_;
};

/// (x L/8 - L/16, y L/8 - L/16 + dif) without range checks. Used directly
/// for the home square (0, 0).
Point2 board_position(const BoardModel& board, int x, int y) noexcept;

/// Centre of an on-board cell. Throws Error(CellOutOfRange).
Point2 cell_center(const BoardModel& board, Cell cell);

/// d = (15 L - 16 dif) / 32. Throws Error(NonPositiveLink) when d <= 0.
double default_link_length(const BoardModel& board);

class ChessArm {
 public:
  /// `column_height` is h (base column L0), `link_d` the shared length of the
  /// two arm links, `gripper_length` D_G.
  ChessArm(double column_height, double link_d, double gripper_length);

  double column_height() const noexcept { return column_height_; }
  double link_d() const noexcept { return link_d_; }
  double gripper_length() const noexcept { return gripper_length_; }
  /// Wrist-to-gripper link L4 = h - D_G.
  double gripper_drop() const noexcept { return column_height_ - gripper_length_; }

 private:
  double column_height_;
  double link_d_;
  double gripper_length_;
};

enum class IkMode {
  PaperLiteral,    ///< the closed-form board formulas evaluated as written
  StandardTwoLink  ///< geometric two-link solution in the vertical plane
};

std::string_view to_string(IkMode mode) noexcept;
/// Accepts "paper" / "standard". Throws Error(ConfigError) otherwise.
IkMode parse_ik_mode(std::string_view text);

/// Joint targets for one board position. J3's angle is absolute (the second
/// link's angle from horizontal), so J4 at -theta keeps the gripper axis at
/// its vertical rest orientation.
struct JointTargets {
  double theta1 = 0.0;  ///< J1 base yaw
  double theta2 = 0.0;  ///< J2 shoulder
  double theta = 0.0;   ///< J3 elbow
  double theta3 = 0.0;  ///< J4 wrist, always -theta
  double reach = 0.0;   ///< horizontal distance Dl from the robot axis

  friend bool operator==(const JointTargets&, const JointTargets&) = default;
};

/// Base yaw for a board position: atan(Xf/Yf) for PaperLiteral,
/// atan2(Xf, Yf) for StandardTwoLink. Requires Yf > 0.
double base_yaw(Point2 target, IkMode mode);

/// Full joint targets for (Xf, Yf). Requires Yf > 0 (Error(InvalidArgument)).
///
/// PaperLiteral: theta2 = asin(Yf/d), theta = pi/2 - theta2; raises
/// Error(AsinDomain) when Yf > d.
///
/// StandardTwoLink: solves the two equal links for the wrist at horizontal
/// distance Dl and at shoulder height (the wrist link plus gripper span the
/// column height), elbow raised. Raises Error(OutOfReach) when Dl > 2d.
JointTargets chess_ik(const ChessArm& arm, Point2 target, IkMode mode);

/// Arm as seen in its vertical plane: base column h, two links of length d.
PlanarArm vertical_plane_arm(const ChessArm& arm);

struct CellReach {
  Cell cell;
  Point2 center;
  bool ok = false;
  std::optional<ErrorCode> error;
  std::string message;
};

struct ReachReport {
  IkMode mode = IkMode::StandardTwoLink;
  std::vector<CellReach> cells;  ///< all 64, row-major
  std::size_t reachable_count = 0;
  std::size_t unreachable_count = 0;
  bool ok = false;               ///< all 64 cells reachable
  CellReach home;                ///< the (0, 0) home square, reported separately
};

ReachReport validate_board_reach(const ChessArm& arm, const BoardModel& board, IkMode mode);

nlohmann::json to_json(const ReachReport& report);

}  // namespace chessarm
