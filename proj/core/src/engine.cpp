#include "chessarm/engine.hpp"

#include <cmath>
#include <optional>
#include <sstream>

namespace chessarm {

std::string_view to_string(JointId joint) noexcept {
  switch (joint) {
    case JointId::J1: return "J1";
    case JointId::J2: return "J2";
    case JointId::J3: return "J3";
    case JointId::J4: return "J4";
  }
  return "J?";
}

std::string_view to_string(SegmentKind kind) noexcept {
  switch (kind) {
    case SegmentKind::GoToX: return "go_to_x";
    case SegmentKind::GoToY: return "go_to_y";
    case SegmentKind::MoveTo: return "move_to";
    case SegmentKind::MoveFrom: return "move_from";
    case SegmentKind::ReturnToO: return "return_to_o";
    case SegmentKind::Grab: return "grab";
    case SegmentKind::Release: return "release";
  }
  return "?";
}

std::string_view to_string(TraceRule rule) noexcept {
  switch (rule) {
    case TraceRule::LiftBeforeTravel: return "lift-before-travel";
    case TraceRule::LiftLowerPairing: return "lift-lower-pairing";
    case TraceRule::GripperAlternation: return "gripper-alternation";
    case TraceRule::GoToYOrder: return "go-to-y-order";
  }
  return "?";
}

double& ArmState::angle(JointId joint) noexcept {
  switch (joint) {
    case JointId::J1: return teta1;
    case JointId::J2: return teta2;
    case JointId::J3: return teta;
    case JointId::J4: return teta3;
  }
  return teta1;
}

double ArmState::angle(JointId joint) const noexcept {
  return const_cast<ArmState&>(*this).angle(joint);
}

void MotionTrace::append(const MotionTrace& other) {
  const std::size_t shift = steps.size();
  steps.insert(steps.end(), other.steps.begin(), other.steps.end());
  for (Annotation a : other.annotations) {
    a.begin += shift;
    a.end += shift;
    annotations.push_back(a);
  }
}

ArmState init_state(const BoardModel& board, const ChessArm& arm, IkMode mode) {
  const ReachReport report = validate_board_reach(arm, board, mode);
  if (!report.ok || !report.home.ok) {
    std::ostringstream msg;
    msg << report.unreachable_count << " of 64 cells unreachable in " << to_string(mode)
        << " mode";
    if (!report.home.ok) msg << "; home square unreachable (" << report.home.message << ")";
    for (const auto& c : report.cells) {
      if (!c.ok) {
        msg << "; first failure at (" << c.cell.x << ", " << c.cell.y << "): " << c.message;
        break;
      }
    }
    throw Error(ErrorCode::UnreachableBoard, msg.str());
  }
  ArmState st;
  const double l = board.side_length();
  st.target = {l / 16.0, l / 16.0 + board.dif()};
  return st;
}

namespace {

class Runner {
 public:
  Runner(const ArmState& state, const BoardModel& board, const ChessArm& arm, IkMode mode)
      : board_(board), arm_(arm), mode_(mode) {
    out_.state = state;
    out_.trace.initial_gripper = state.gripper;
  }

  Execution finish() && { return std::move(out_); }

  void operator()(const GoToX& c) {
    check_column(c.x);
    go_to_x(c.x, 0);
  }

  void operator()(const GoToY& c) {
    check_row(c.y);
    go_to_y(c.y, 0);
  }

  void operator()(const MoveTo& c) {
    check_cell(c.to);
    const std::size_t a = open(SegmentKind::MoveTo, 0);
    go_to_x(c.to.x, 1, c.to.y);
    go_to_y(c.to.y, 1);
    close(a);
  }

  void operator()(const MoveFrom& c) {
    check_cell(c.from);
    check_cell(c.to);
    const std::size_t a = open(SegmentKind::MoveFrom, 0);
    go_to_x(c.from.x, 1, c.from.y);
    go_to_y(c.from.y, 1);
    grab(1);
    const double amount = lift();
    go_to_x(c.to.x, 1, c.to.y);
    lower(amount);
    go_to_y(c.to.y, 1);
    release(1);
    close(a);
  }

  void operator()(const ReturnToO&) {
    const std::size_t a = open(SegmentKind::ReturnToO, 0);
    const double amount = lift();
    go_to_x(0, 1, 0);
    lower(amount);
    go_to_y(0, 1);  // home row, outside the playing rows
    close(a);
  }

  void operator()(const Grab&) { grab(0); }
  void operator()(const Release&) { release(0); }

 private:
  ArmState& st() { return out_.state; }

  std::size_t open(SegmentKind kind, int depth) {
    const std::size_t at = out_.trace.steps.size();
    out_.trace.annotations.push_back({kind, at, at, depth});
    return out_.trace.annotations.size() - 1;
  }

  void close(std::size_t annotation) {
    out_.trace.annotations[annotation].end = out_.trace.steps.size();
  }

  void emit(const MotionStep& step) {
    if (step.op == StepOp::Rotate) {
      if (!std::isfinite(step.delta) || std::abs(step.delta) > kMaxStepDelta) {
        std::ostringstream msg;
        msg << "rotation of " << to_string(step.joint) << " by " << step.delta
            << " rad exceeds the single-step bound";
        throw Error(ErrorCode::StepTooLarge, msg.str());
      }
      st().angle(step.joint) += step.delta;
    }
    out_.trace.steps.push_back(step);
  }

  void rotate_to(JointId joint, double target) {
    emit(MotionStep::rotate(joint, target - st().angle(joint)));
  }

  static void check_column(int x) {
    if (x < BoardModel::kMinColumn || x > BoardModel::kMaxColumn) {
      throw Error(ErrorCode::CellOutOfRange, "column " + std::to_string(x) + " outside [" +
                                                 std::to_string(BoardModel::kMinColumn) + ", " +
                                                 std::to_string(BoardModel::kMaxColumn) + "]");
    }
  }

  static void check_row(int y) {
    if (y < BoardModel::kMinRow || y > BoardModel::kMaxRow) {
      throw Error(ErrorCode::CellOutOfRange, "row " + std::to_string(y) + " outside [" +
                                                 std::to_string(BoardModel::kMinRow) + ", " +
                                                 std::to_string(BoardModel::kMaxRow) + "]");
    }
  }

  static void check_cell(Cell c) {
    check_column(c.x);
    check_row(c.y);
  }

  template <typename Fn>
  auto solve(Fn&& fn) {
    try {
      return fn();
    } catch (const Error& e) {
      if (e.code() == ErrorCode::AsinDomain || e.code() == ErrorCode::OutOfReach ||
          e.code() == ErrorCode::Singular || e.code() == ErrorCode::InvalidArgument) {
        throw Error(ErrorCode::IkFailure, std::string(e.name()) + ": " + e.what());
      }
      throw;
    }
  }

  // `row` aims the yaw at the row a compound command is about to reach;
  // a bare go-to-x keeps the current row.
  void go_to_x(int x, int depth, std::optional<int> row = std::nullopt) {
    const std::size_t a = open(SegmentKind::GoToX, depth);
    st().target.x = board_position(board_, x, 0).x;
    if (row) st().target.y = board_position(board_, 0, *row).y;
    const double yaw = solve([&] { return base_yaw(st().target, mode_); });
    rotate_to(JointId::J1, yaw);
    close(a);
  }

  void go_to_y(int y, int depth) {
    const std::size_t a = open(SegmentKind::GoToY, depth);
    st().target.y = board_position(board_, 0, y).y;
    const JointTargets t = solve([&] { return chess_ik(arm_, st().target, mode_); });
    // J2 first, then the wrist, then the elbow, so the gripper clears the pieces.
    rotate_to(JointId::J2, t.theta2);
    rotate_to(JointId::J4, t.theta3);
    rotate_to(JointId::J3, t.theta);
    close(a);
  }

  void grab(int depth) {
    if (st().gripper != GripperState::Open) {
      throw Error(ErrorCode::GripperStateError, "grab requires an open gripper");
    }
    const std::size_t a = open(SegmentKind::Grab, depth);
    emit(MotionStep::grab());
    st().gripper = GripperState::Closed;
    close(a);
  }

  void release(int depth) {
    if (st().gripper != GripperState::Closed) {
      throw Error(ErrorCode::GripperStateError, "release requires a closed gripper");
    }
    const std::size_t a = open(SegmentKind::Release, depth);
    emit(MotionStep::release());
    st().gripper = GripperState::Open;
    close(a);
  }

  double lift() {
    const double amount = st().teta2 / 2.0;
    emit(MotionStep::rotate(JointId::J2, -amount, StepTag::Lift));
    st().lifted = true;
    return amount;
  }

  void lower(double amount) {
    emit(MotionStep::rotate(JointId::J2, amount, StepTag::Lower));
    st().lifted = false;
  }

  const BoardModel& board_;
  const ChessArm& arm_;
  IkMode mode_;
  Execution out_;
};

}  // namespace

Execution execute(const ArmState& state, const Command& cmd, const BoardModel& board,
                  const ChessArm& arm, IkMode mode) {
  Runner runner(state, board, arm, mode);
  std::visit(runner, cmd);
  return std::move(runner).finish();
}

ArmState replay(const ArmState& initial, const MotionTrace& trace) {
  ArmState st = initial;
  for (const auto& step : trace.steps) {
    switch (step.op) {
      case StepOp::Rotate:
        st.angle(step.joint) += step.delta;
        if (step.tag == StepTag::Lift) st.lifted = true;
        if (step.tag == StepTag::Lower) st.lifted = false;
        break;
      case StepOp::Grab: st.gripper = GripperState::Closed; break;
      case StepOp::Release: st.gripper = GripperState::Open; break;
    }
  }
  return st;
}

std::vector<TraceViolation> check_trace(const MotionTrace& trace) {
  std::vector<TraceViolation> out;
  const auto& steps = trace.steps;

  // (b) and (c): single pass over the whole trace.
  GripperState gripper = trace.initial_gripper;
  std::size_t pending_lift = steps.size();  // index of an unlowered lift, or size()
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const MotionStep& s = steps[i];
    if (s.op == StepOp::Grab) {
      if (gripper == GripperState::Closed) {
        out.push_back({TraceRule::GripperAlternation, i, "grab while the gripper is closed"});
      }
      gripper = GripperState::Closed;
    } else if (s.op == StepOp::Release) {
      if (gripper == GripperState::Open) {
        out.push_back({TraceRule::GripperAlternation, i, "release while the gripper is open"});
      }
      if (pending_lift != steps.size()) {
        out.push_back({TraceRule::LiftLowerPairing, pending_lift,
                       "lift at step " + std::to_string(pending_lift) +
                           " not lowered before the release at step " + std::to_string(i)});
        pending_lift = steps.size();
      }
      gripper = GripperState::Open;
    } else if (s.tag == StepTag::Lift) {
      if (pending_lift != steps.size()) {
        out.push_back({TraceRule::LiftLowerPairing, i, "second lift before a lower"});
      }
      pending_lift = i;
    } else if (s.tag == StepTag::Lower) {
      if (pending_lift == steps.size()) {
        out.push_back({TraceRule::LiftLowerPairing, i, "lower without a preceding lift"});
      }
      pending_lift = steps.size();
    }
  }
  if (pending_lift != steps.size()) {
    out.push_back({TraceRule::LiftLowerPairing, pending_lift, "lift never lowered"});
  }

  for (const Annotation& a : trace.annotations) {
    const std::size_t end = std::min(a.end, steps.size());
    if (a.kind == SegmentKind::MoveFrom) {
      // (a)
      std::size_t i = a.begin;
      while (i < end && steps[i].op != StepOp::Grab) ++i;
      if (i == end) {
        out.push_back({TraceRule::LiftBeforeTravel, a.begin, "carrying move without a grab"});
        continue;
      }
      const std::size_t grab_at = i;
      bool lifted = false;
      for (++i; i < end; ++i) {
        const MotionStep& s = steps[i];
        if (s.op != StepOp::Rotate) continue;
        if (s.tag == StepTag::Lift && s.joint == JointId::J2 && s.delta <= 0.0) {
          lifted = true;
          break;
        }
        if (s.joint == JointId::J1) {
          out.push_back({TraceRule::LiftBeforeTravel, i,
                         "J1 rotation after the grab at step " + std::to_string(grab_at) +
                             " before any lift"});
          lifted = true;  // reported already
          break;
        }
      }
      if (!lifted) {
        out.push_back({TraceRule::LiftBeforeTravel, grab_at, "no lift after the grab"});
      }
    } else if (a.kind == SegmentKind::GoToY) {
      // (d)
      static constexpr JointId kOrder[] = {JointId::J2, JointId::J4, JointId::J3};
      bool ordered = end - a.begin == 3;
      for (std::size_t k = 0; ordered && k < 3; ++k) {
        const MotionStep& s = steps[a.begin + k];
        ordered = s.op == StepOp::Rotate && s.joint == kOrder[k];
      }
      if (!ordered) {
        out.push_back({TraceRule::GoToYOrder, a.begin, "reach-out rotations not J2, J4, J3"});
      }
    }
  }
  return out;
}

Engine::Engine(BoardModel board, ChessArm arm, IkMode mode, std::size_t trace_cap)
    : board_(board),
      arm_(arm),
      mode_(mode),
      trace_cap_(trace_cap),
      state_(init_state(board_, arm_, mode_)) {
  trace_.initial_gripper = state_.gripper;
}

MotionTrace Engine::run(const Command& cmd) {
  Execution ex = execute(state_, cmd, board_, arm_, mode_);
  if (trace_.steps.size() + ex.trace.steps.size() > trace_cap_) {
    throw Error(ErrorCode::TraceCapExceeded,
                "trace would exceed the cap of " + std::to_string(trace_cap_) + " steps");
  }
  state_ = ex.state;
  trace_.append(ex.trace);
  return std::move(ex.trace);
}

}  // namespace chessarm
