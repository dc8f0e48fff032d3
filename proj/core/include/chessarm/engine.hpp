#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "chessarm/chessbot.hpp"
#include "chessarm/command.hpp"

namespace chessarm {

enum class JointId { J1, J2, J3, J4 };
enum class GripperState { Open, Closed };

std::string_view to_string(JointId joint) noexcept;

/// Interpreter registers. The four angles are the accumulated joint
/// positions (the sum of every rotation emitted so far); `target` holds the
/// current board position (Xf, Yf) the arm is aimed at.
struct ArmState {
  double teta1 = 0.0;  ///< J1
  double teta2 = 0.0;  ///< J2
  double teta3 = 0.0;  ///< J4
  double teta = 0.0;   ///< J3
  Point2 target;
  GripperState gripper = GripperState::Open;
  bool lifted = false;  ///< between a J2 lift and its matching lower

  double& angle(JointId joint) noexcept;
  double angle(JointId joint) const noexcept;

  friend bool operator==(const ArmState&, const ArmState&) = default;
};

enum class StepOp { Rotate, Grab, Release };
enum class StepTag { None, Lift, Lower };

struct MotionStep {
  StepOp op = StepOp::Rotate;
  JointId joint = JointId::J1;  ///< meaningful for Rotate only
  double delta = 0.0;           ///< radians, Rotate only
  StepTag tag = StepTag::None;

  static MotionStep rotate(JointId joint, double delta, StepTag tag = StepTag::None) {
    return {StepOp::Rotate, joint, delta, tag};
  }
  static MotionStep grab() { return {StepOp::Grab, JointId::J1, 0.0, StepTag::None}; }
  static MotionStep release() { return {StepOp::Release, JointId::J1, 0.0, StepTag::None}; }

  friend bool operator==(const MotionStep&, const MotionStep&) = default;
};

/// Single rotations beyond this are rejected rather than split.
inline constexpr double kMaxStepDelta = kPi;

enum class SegmentKind { GoToX, GoToY, MoveTo, MoveFrom, ReturnToO, Grab, Release };

std::string_view to_string(SegmentKind kind) noexcept;

/// Marks steps [begin, end) as produced by one command (depth 0) or by one
/// phase inside a compound command (depth 1).
struct Annotation {
  SegmentKind kind = SegmentKind::GoToX;
  std::size_t begin = 0;
  std::size_t end = 0;
  int depth = 0;

  friend bool operator==(const Annotation&, const Annotation&) = default;
};

struct MotionTrace {
  std::vector<MotionStep> steps;
  std::vector<Annotation> annotations;
  GripperState initial_gripper = GripperState::Open;

  /// Appends `other`, shifting its annotations past the current steps.
  void append(const MotionTrace& other);

  friend bool operator==(const MotionTrace&, const MotionTrace&) = default;
};

/// Fresh interpreter state: all angles zero, gripper open, aimed at
/// (L/16, L/16 + dif). Throws Error(UnreachableBoard) unless every cell
/// and the home square pass validate_board_reach for `mode`.
ArmState init_state(const BoardModel& board, const ChessArm& arm, IkMode mode);

struct Execution {
  ArmState state;
  MotionTrace trace;
};

/// Runs one command. Targets are absolute: each rotation is
/// (target angle - current register), and registers advance by exactly the
/// emitted deltas. Commands are atomic; on any error the caller's state is
/// untouched (it is only ever read).
///
/// A bare GoToX yaws toward the new column at the current row. Inside
/// MoveTo, MoveFrom and ReturnToO the yaw already uses the row the command
/// is heading for, so each of them ends aimed at its destination cell.
///
/// Errors: CellOutOfRange, GripperStateError, IkFailure, StepTooLarge.
Execution execute(const ArmState& state, const Command& cmd, const BoardModel& board,
                  const ChessArm& arm, IkMode mode);

/// Applies a trace's deltas and gripper actions to `initial`.
ArmState replay(const ArmState& initial, const MotionTrace& trace);

enum class TraceRule {
  LiftBeforeTravel,   ///< (a) carrying: lift after grab, before any J1 rotation
  LiftLowerPairing,   ///< (b) every lift lowered before release
  GripperAlternation, ///< (c) grab / release strictly alternate
  GoToYOrder,         ///< (d) reach-out rotations ordered J2, J4, J3
};

std::string_view to_string(TraceRule rule) noexcept;

struct TraceViolation {
  TraceRule rule;
  std::size_t step = 0;  ///< index of the offending step (or segment start)
  std::string detail;
};

/// Checks the pawn-safe motion rules. Empty result means the trace is clean.
std::vector<TraceViolation> check_trace(const MotionTrace& trace);

/// One interpreter instance: owns its state and accumulated trace.
class Engine {
 public:
  static constexpr std::size_t kDefaultTraceCap = 1'000'000;

  /// Throws Error(UnreachableBoard) via init_state.
  Engine(BoardModel board, ChessArm arm, IkMode mode, std::size_t trace_cap = kDefaultTraceCap);

  /// Executes one command and returns the steps it produced. Throws like
  /// execute(), plus Error(TraceCapExceeded); state and trace are unchanged
  /// on failure.
  MotionTrace run(const Command& cmd);

  const ArmState& state() const noexcept { return state_; }
  const MotionTrace& trace() const noexcept { return trace_; }
  const BoardModel& board() const noexcept { return board_; }
  const ChessArm& arm() const noexcept { return arm_; }
  IkMode mode() const noexcept { return mode_; }
  std::size_t trace_cap() const noexcept { return trace_cap_; }

 private:
  BoardModel board_;
  ChessArm arm_;
  IkMode mode_;
  std::size_t trace_cap_;
  ArmState state_;
  MotionTrace trace_;
};

}  // namespace chessarm
