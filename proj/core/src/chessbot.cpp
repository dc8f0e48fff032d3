#include "chessarm/chessbot.hpp"

#include <cmath>
#include <sstream>

namespace chessarm {

BoardModel::BoardModel(double side_length, double dif) : side_length_(side_length), dif_(dif) {
  if (!(side_length_ > 0.0)) throw Error(ErrorCode::InvalidArgument, "board side_length must be positive");
  if (!(dif_ >= 0.0)) throw Error(ErrorCode::InvalidArgument, "board dif must be non-negative");
}

std::vector<Cell> BoardModel::cells() {
  std::vector<Cell> out;
  out.reserve(64);
  for (int y = kMinRow; y <= kMaxRow; ++y) {
    for (int x = kMinColumn; x <= kMaxColumn; ++x) out.push_back({x, y});
  }
  return out;
}

Point2 board_position(const BoardModel& board, int x, int y) noexcept {
  const double l = board.side_length();
  return {x * l / 8.0 - l / 16.0, y * l / 8.0 - l / 16.0 + board.dif()};
}

Point2 cell_center(const BoardModel& board, Cell cell) {
  if (!BoardModel::contains(cell)) {
    std::ostringstream msg;
    msg << "cell (" << cell.x << ", " << cell.y << ") outside columns [" << BoardModel::kMinColumn
        << ", " << BoardModel::kMaxColumn << "] x rows [" << BoardModel::kMinRow << ", "
        << BoardModel::kMaxRow << "]";
    throw Error(ErrorCode::CellOutOfRange, msg.str());
  }
  return board_position(board, cell.x, cell.y);
}

double default_link_length(const BoardModel& board) {
  const double d = (15.0 * board.side_length() - 16.0 * board.dif()) / 32.0;
  if (!(d > 0.0)) {
    std::ostringstream msg;
    msg << "link length (15 L - 16 dif) / 32 = " << d << " is not positive";
    throw Error(ErrorCode::NonPositiveLink, msg.str());
  }
  return d;
}

ChessArm::ChessArm(double column_height, double link_d, double gripper_length)
    : column_height_(column_height), link_d_(link_d), gripper_length_(gripper_length) {
  if (!(link_d_ > 0.0)) throw Error(ErrorCode::InvalidArgument, "arm link_d must be positive");
  if (!(column_height_ > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "arm column_height must be positive");
  }
  if (!(gripper_length_ >= 0.0 && gripper_length_ <= column_height_)) {
    throw Error(ErrorCode::InvalidArgument,
                "arm gripper_length must lie in [0, column_height]");
  }
}

std::string_view to_string(IkMode mode) noexcept {
  return mode == IkMode::PaperLiteral ? "paper" : "standard";
}

IkMode parse_ik_mode(std::string_view text) {
  if (text == "paper") return IkMode::PaperLiteral;
  if (text == "standard") return IkMode::StandardTwoLink;
  throw Error(ErrorCode::ConfigError,
              "unknown ik mode \"" + std::string(text) + "\" (expected paper|standard)");
}

double base_yaw(Point2 target, IkMode mode) {
  if (!(target.y > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "board target must lie in front of the robot (Yf > 0)");
  }
  if (mode == IkMode::PaperLiteral) return std::atan(target.x / target.y);
  return std::atan2(target.x, target.y);
}

PlanarArm vertical_plane_arm(const ChessArm& arm) {
  return PlanarArm(arm.column_height(), arm.link_d(), arm.link_d());
}

JointTargets chess_ik(const ChessArm& arm, Point2 target, IkMode mode) {
  JointTargets out;
  out.theta1 = base_yaw(target, mode);
  out.reach = std::hypot(target.x, target.y);

  if (mode == IkMode::PaperLiteral) {
    const double ratio = target.y / arm.link_d();
    if (std::abs(ratio) > 1.0) {
      std::ostringstream msg;
      msg << "asin argument Yf/d = " << ratio << " outside [-1, 1]";
      throw Error(ErrorCode::AsinDomain, msg.str());
    }
    out.theta2 = std::asin(ratio);
    out.theta = kPi / 2.0 - out.theta2;
    out.theta3 = -out.theta;
    return out;
  }

  // Wrist height above the board when the gripper tip touches it; the
  // shoulder sits on top of the column.
  const double wrist_height = arm.gripper_drop() + arm.gripper_length();
  const Point2 wrist{out.reach, wrist_height - arm.column_height()};
  // Elbow raised above the shoulder-wrist line, i.e. the Down sign of the elbow sine.
  const AnglePair angles = ik_planar(vertical_plane_arm(arm), wrist, ElbowBranch::Down);
  out.theta2 = angles.shoulder;
  out.theta = angles.elbow_abs;
  out.theta3 = -out.theta;
  return out;
}

ReachReport validate_board_reach(const ChessArm& arm, const BoardModel& board, IkMode mode) {
  auto probe = [&](Cell cell) {
    CellReach r;
    r.cell = cell;
    r.center = board_position(board, cell.x, cell.y);
    try {
      chess_ik(arm, r.center, mode);
      r.ok = true;
    } catch (const Error& e) {
      r.error = e.code();
      r.message = e.what();
    }
    return r;
  };

  ReachReport report;
  report.mode = mode;
  for (const Cell c : BoardModel::cells()) {
    report.cells.push_back(probe(c));
    if (report.cells.back().ok) {
      ++report.reachable_count;
    } else {
      ++report.unreachable_count;
    }
  }
  report.ok = report.unreachable_count == 0;
  report.home = probe({0, 0});
  return report;
}

namespace {

nlohmann::json cell_json(const CellReach& r) {
  nlohmann::json j{{"x", r.cell.x}, {"y", r.cell.y}, {"xf", r.center.x}, {"yf", r.center.y},
                   {"ok", r.ok}};
  if (r.error) {
    j["error"] = std::string(error_name(*r.error));
    j["message"] = r.message;
  }
  return j;
}

}  // namespace

nlohmann::json to_json(const ReachReport& report) {
  nlohmann::json cells = nlohmann::json::array();
  for (const auto& c : report.cells) cells.push_back(cell_json(c));
  return {
      {"mode", std::string(to_string(report.mode))},
      {"ok", report.ok},
      {"reachable", report.reachable_count},
      {"unreachable", report.unreachable_count},
      {"home", cell_json(report.home)},
      {"cells", std::move(cells)},
  };
}

}  // namespace chessarm
