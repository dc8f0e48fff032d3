// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "chessarm/chessarm.hpp"

using namespace chessarm;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

template <typename... Ts>
std::string cat(const Ts&... parts) {
  std::ostringstream s;
  s.precision(17);
  (s << ... << parts);
  return s.str();
}

// 1. FK/IK round trip over random arms, both branches, plus the arcsine differential.
Outcome round_trip() {
  Outcome o;
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> len(0.05, 5.0), unit(0.0, 1.0), ang(-kPi, kPi);
  double worst = 0.0;
  for (int i = 0; i < 10000 && o.pass; ++i) {
    const PlanarArm arm(len(rng), len(rng), len(rng));
    const double lo = std::abs(arm.l1() - arm.l2()), hi = arm.l1() + arm.l2();
    const double r = std::sqrt(lo * lo + unit(rng) * (hi * hi - lo * lo));
    const double phi = ang(rng);
    const Point2 t{r * std::cos(phi), r * std::sin(phi)};
    const PlanarArm flat(0, arm.l1(), arm.l2());
    for (const auto b : {ElbowBranch::Up, ElbowBranch::Down}) {
      const Pose2 p = fk_planar(flat, ik_planar(arm, t, b));
      const double err = std::hypot(p.x - t.x, p.y - t.y);
      worst = std::max(worst, err);
      if (err > 1e-9) o.fail(cat("round-trip error ", err, " at target (", t.x, ", ", t.y, ")"));
    }
  }

  // The arcsine shoulder formula: equal to the atan2 solution when the first
  // link faces forward, the supplementary angle otherwise.
  const PlanarArm arm(0, 1.3, 0.8);
  int agree = 0, supplementary = 0;
  for (int i = 0; i < 2000; ++i) {
    const Pose2 p = fk_planar(arm, {ang(rng), ang(rng)});
    if (std::hypot(p.x, p.y) < 1e-6) continue;
    for (const auto b : {ElbowBranch::Up, ElbowBranch::Down}) {
      const double s = ik_planar(arm, {p.x, p.y}, b).shoulder;
      const double a = shoulder_angle_asin(arm, {p.x, p.y}, b);
      if (std::abs(normalize_angle(a - s)) < 1e-6) {
        ++agree;
        if (std::cos(s) < -1e-6) o.fail("arcsine form agreed on a backward-facing shoulder");
      } else if (std::abs(normalize_angle(a + s - kPi)) < 1e-6 && std::cos(s) < 1e-6) {
        ++supplementary;
      } else {
        o.fail(cat("arcsine form off by an unexpected amount at shoulder ", s));
      }
    }
  }
  if (o.pass) {
    o.detail = cat("20000 solves, worst error ", worst, "; arcsine form agrees on ", agree,
                   ", returns pi - shoulder on ", supplementary);
  }
  return o;
}

// 2. M2 against the generic oracle; M1 differential pinned.
Outcome moment_oracle() {
  Outcome o;
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(0.0, 10.0);
  for (int i = 0; i < 1000 && o.pass; ++i) {
    const LoadSpec3 load{u(rng), u(rng), u(rng), u(rng), u(rng), u(rng), u(rng)};
    const JointMoments m = joint_moments(load);
    const JointChain tmpl = load_template_chain(load);
    // Object weight w3 acting at lever l3 from joint 2, superposed on the template.
    const JointChain lever(0, {Joint::revolute(-kPi, kPi, load.l3)});
    const double m2 = static_moment_generic(tmpl, 0.0, 1) + static_moment_generic(lever, load.w3, 0);
    if (std::abs(m.m2 - m2) > 1e-12 * std::max(1.0, std::abs(m2))) {
      o.fail(cat("M2 ", m.m2, " vs generic ", m2));
    }
    const double d1 = m.m1 - static_moment_generic(tmpl, load.w3, 0);
    const double expected = (load.l3 - load.l2) * load.w3;
    if (std::abs(d1 - expected) > 1e-12 * std::max(1.0, std::abs(m.m1))) {
      o.fail(cat("M1 differential ", d1, " vs (l3 - l2) w3 = ", expected));
    }
  }
  if (o.pass) o.detail = "1000 load cases; M2 matches, M1 - generic = (l3 - l2) w3";
  return o;
}

// 3. Hand-evaluated values.
Outcome hand_values() {
  Outcome o;
  const auto check = [&](const char* what, double got, double want) {
    if (std::abs(got - want) > 1e-12) o.fail(cat(what, " = ", got, ", expected ", want));
  };
  const JointMoments m = joint_moments({1, 1, 1, 1, 1, 1, 1});
  check("M1", m.m1, 5.0);
  check("M2", m.m2, 1.5);
  check("spin-up torque", spin_up_torque({4, 1, 2, kPi, 2}).tau_motor, 4 * kPi);
  check("gripper torque", gripper_torque({10, 0.1, 1, 10}).tau_total, 2.0);
  check("tip speed", tip_speed(1, 1), 2 * kPi);
  if (o.pass) o.detail = "moments, spin-up, gripper and tip speed match";
  return o;
}

// 4. Workspace coverage and cloud reachability.
Outcome workspace() {
  Outcome o;
  const PlanarArm arm(0, 1, 1);
  const WorkspaceCloud cloud = sample_workspace(arm, 200);
  const double area = occupancy_area(cloud, default_cell_size(arm, 200));
  const double truth = 4 * kPi;
  const double rel = std::abs(area - truth) / truth;
  if (rel > 0.02) o.fail(cat("coverage ", area, " vs ", truth, " (", rel * 100, " %)"));
  std::size_t bad = 0;
  for (const auto& p : cloud.points) bad += !reachable(arm, p);
  if (bad) o.fail(cat(bad, " cloud points not reachable"));
  if (o.pass) {
    o.detail = cat("area ", area, " vs 4 pi (", rel * 100, " % off); all ", cloud.points.size(),
                   " points reachable");
  }
  return o;
}

// 5. Board mapping.
Outcome board_mapping() {
  Outcome o;
  for (const auto& [side, dif] : {std::pair{32.0, 4.0}, {320.0, 40.0}, {400.0, 0.0}}) {
    const BoardModel b(side, dif);
    std::set<std::pair<double, double>> seen;
    for (const Cell c : BoardModel::cells()) {
      const Point2 p = cell_center(b, c);
      seen.insert({p.x, p.y});
      const Point2 m = cell_center(b, {1 - c.x, c.y});
      if (m.x != -p.x || m.y != p.y) o.fail(cat("cell (", c.x, ", ", c.y, ") has no mirror"));
      if (c.x < BoardModel::kMaxColumn &&
          std::abs(cell_center(b, {c.x + 1, c.y}).x - p.x - side / 8) > 1e-12) {
        o.fail("column spacing is not L/8");
      }
      if (c.y < BoardModel::kMaxRow &&
          std::abs(cell_center(b, {c.x, c.y + 1}).y - p.y - side / 8) > 1e-12) {
        o.fail("row spacing is not L/8");
      }
    }
    if (seen.size() != 64) o.fail(cat(seen.size(), " distinct centres"));
  }
  const BoardModel b(32, 4);
  if (!(cell_center(b, {1, 1}) == Point2{2, 6})) o.fail("(1, 1) not at (2, 6)");
  if (!(cell_center(b, {4, 8}) == Point2{14, 34})) o.fail("(4, 8) not at (14, 34)");
  if (!(cell_center(b, {-3, 1}) == Point2{-14, 6})) o.fail("(-3, 1) not at (-14, 6)");
  if (o.pass) o.detail = "64 distinct, mirrored, L/8-spaced centres; spot values exact";
  return o;
}

// 6. Chess IK invariants and the arcsine-domain enumeration.
Outcome chess_ik_invariants() {
  Outcome o;
  std::size_t solves = 0, domain_errors = 0;
  const BoardModel board(320, 40);
  for (const double d : {100.0, 130.0, 200.0, 260.0, 340.0, 400.0}) {
    const ChessArm arm(150, d, 50);
    for (const auto mode : {IkMode::PaperLiteral, IkMode::StandardTwoLink}) {
      for (const Cell c : BoardModel::cells()) {
        const Point2 p = cell_center(board, c);
        const bool oracle_domain = std::abs(p.y) > d;
        try {
          const JointTargets t = chess_ik(arm, p, mode);
          ++solves;
          if (mode == IkMode::PaperLiteral && oracle_domain) {
            o.fail(cat("no AsinDomain at Yf = ", p.y, ", d = ", d));
          }
          if (t.theta3 + t.theta != 0.0) o.fail("theta3 + theta != 0");
          const JointTargets m = chess_ik(arm, {-p.x, p.y}, mode);
          if (m.theta1 != -t.theta1) o.fail("theta1 not mirror-symmetric");
        } catch (const Error& e) {
          if (e.code() == ErrorCode::AsinDomain) {
            ++domain_errors;
            if (mode != IkMode::PaperLiteral || !oracle_domain) {
              o.fail(cat("unexpected AsinDomain at Yf = ", p.y, ", d = ", d));
            }
          } else if (!(mode == IkMode::StandardTwoLink && e.code() == ErrorCode::OutOfReach)) {
            o.fail(cat("unexpected ", e.name(), ": ", e.what()));
          }
        }
      }
    }
  }
  if (o.pass) {
    o.detail = cat(solves, " solves satisfy the invariants; AsinDomain on exactly the ",
                   domain_errors, " cells with Yf > d");
  }
  return o;
}

std::vector<JointId> rotations(const MotionTrace& t, std::size_t begin, std::size_t end) {
  std::vector<JointId> out;
  for (std::size_t i = begin; i < end; ++i) {
    if (t.steps[i].op == StepOp::Rotate) out.push_back(t.steps[i].joint);
  }
  return out;
}

// 7. Engine sweep over every (from, to) pair.
Outcome engine_sweep() {
  Outcome o;
  const BoardModel board(320, 40);
  const ChessArm arm(150, 200, 50);
  const IkMode mode = IkMode::StandardTwoLink;
  const ArmState start = init_state(board, arm, mode);
  const std::vector<JointId> reach{JointId::J2, JointId::J4, JointId::J3};

  for (int y = BoardModel::kMinRow; y <= BoardModel::kMaxRow; ++y) {
    const MotionTrace t = execute(start, GoToY{y}, board, arm, mode).trace;
    if (rotations(t, 0, t.steps.size()) != reach || t.steps.size() != 3) {
      o.fail(cat("go to y ", y, " is not [J2, J4, J3]"));
    }
  }

  const std::vector<StepOp> ops{StepOp::Rotate, StepOp::Rotate, StepOp::Rotate, StepOp::Rotate,
                                StepOp::Grab,   StepOp::Rotate, StepOp::Rotate, StepOp::Rotate,
                                StepOp::Rotate, StepOp::Rotate, StepOp::Rotate, StepOp::Release};
  const std::vector<JointId> joints{JointId::J1, JointId::J2, JointId::J4, JointId::J3,
                                    JointId::J2, JointId::J1, JointId::J2, JointId::J2,
                                    JointId::J4, JointId::J3};
  const std::vector<SegmentKind> phases{SegmentKind::GoToX, SegmentKind::GoToY, SegmentKind::Grab,
                                        SegmentKind::GoToX, SegmentKind::GoToY,
                                        SegmentKind::Release};
  std::size_t pairs = 0;
  for (const Cell from : BoardModel::cells()) {
    for (const Cell to : BoardModel::cells()) {
      const std::string where =
          cat("[", from.x, ", ", from.y, "] -> [", to.x, ", ", to.y, "]: ");
      Execution ex;
      try {
        ex = execute(start, MoveFrom{from, to}, board, arm, mode);
      } catch (const Error& e) {
        o.fail(where + e.what());
        continue;
      }
      ++pairs;
      const auto& s = ex.trace.steps;
      if (const auto v = check_trace(ex.trace); !v.empty()) {
        o.fail(where + std::string(to_string(v[0].rule)) + ": " + v[0].detail);
      }
      bool shape = s.size() == ops.size();
      for (std::size_t i = 0; shape && i < s.size(); ++i) shape = s[i].op == ops[i];
      shape = shape && rotations(ex.trace, 0, s.size()) == joints && s[5].tag == StepTag::Lift &&
              s[7].tag == StepTag::Lower;
      std::vector<SegmentKind> seen;
      for (const auto& a : ex.trace.annotations) {
        if (a.depth == 1) seen.push_back(a.kind);
      }
      if (!shape || seen != phases) o.fail(where + "not the eight-phase carry sequence");
    }
  }
  if (o.pass) o.detail = cat(pairs, " carries clean and eight-phase; every go-to-y is [J2, J4, J3]");
  return o;
}

struct Malformed {
  const char* text;
  std::size_t offset;
};

// 8. Parser corpus.
Outcome parser_corpus() {
  Outcome o;
  const std::vector<std::pair<const char*, Command>> corpus{
      {"go to x 3", GoToX{3}},
      {"GO TO X -3", GoToX{-3}},
      {"go to y 8", GoToY{8}},
      {"go  to\ty  +1", GoToY{1}},
      {"move to [2 , 5]", MoveTo{{2, 5}}},
      {"Move To[-1,7]", MoveTo{{-1, 7}}},
      {"move from [2 , 3] to [4 , 5]", MoveFrom{{2, 3}, {4, 5}}},
      {"move from[-3,1]to[4,8]", MoveFrom{{-3, 1}, {4, 8}}},
      {"return to o", ReturnToO{}},
      {"Return To O", ReturnToO{}},
      {"grab", Grab{}},
      {"release", Release{}},
  };
  for (const auto& [text, want] : corpus) {
    try {
      const Command c = parse_command(text);
      const std::string canon = to_string(c);
      if (!(c == want)) o.fail(cat("\"", text, "\" parsed to ", canon));
      if (!(parse_command(canon) == c)) o.fail(cat("\"", canon, "\" does not re-parse"));
    } catch (const Error& e) {
      o.fail(cat("\"", text, "\": ", e.what()));
    }
  }
  const std::vector<Malformed> bad{
      {"", 0},          {"   ", 3},          {"jump", 0},           {"go", 2},
      {"go x 3", 3},    {"go to z 3", 6},    {"go to x", 7},        {"go to x three", 8},
      {"go to x 3 4", 10}, {"move [1,2]", 5}, {"move to 1,2]", 8},  {"move to [1 2]", 11},
      {"move to [1,2", 12}, {"move to [a,2]", 9}, {"move from [1,2] [3,4]", 16},
      {"move from [1,2] to", 18}, {"return o", 7}, {"return to x", 10}, {"grab now", 5},
      {"move to [1;2]", 10}};
  for (const auto& m : bad) {
    try {
      parse_command(m.text);
      o.fail(cat("\"", m.text, "\" parsed"));
    } catch (const SyntaxError& e) {
      if (e.offset() != m.offset) {
        o.fail(cat("\"", m.text, "\" offset ", e.offset(), ", expected ", m.offset));
      }
    }
  }
  if (o.pass) {
    o.detail = cat(corpus.size(), " forms round-trip; ", bad.size(),
                   " malformed inputs rejected at the right offset");
  }
  return o;
}

std::vector<Command> random_script(std::uint64_t seed, std::size_t n) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> col(BoardModel::kMinColumn, BoardModel::kMaxColumn);
  std::uniform_int_distribution<int> row(BoardModel::kMinRow, BoardModel::kMaxRow);
  std::uniform_int_distribution<int> kind(0, 5);
  std::vector<Command> out;
  bool closed = false;
  while (out.size() < n) {
    switch (kind(rng)) {
      case 0: out.push_back(GoToX{col(rng)}); break;
      case 1: out.push_back(GoToY{row(rng)}); break;
      case 2: out.push_back(MoveTo{{col(rng), row(rng)}}); break;
      case 3:
        if (closed) {
          out.push_back(Release{});
          closed = false;
        } else {
          out.push_back(MoveFrom{{col(rng), row(rng)}, {col(rng), row(rng)}});
        }
        break;
      case 4:
        out.push_back(closed ? Command(Release{}) : Command(Grab{}));
        closed = !closed;
        break;
      default: out.push_back(ReturnToO{}); break;
    }
  }
  return out;
}

// 9. Determinism and atomicity.
Outcome determinism() {
  Outcome o;
  const BoardModel board(320, 40);
  const ChessArm arm(150, 200, 50);
  const IkMode mode = IkMode::StandardTwoLink;
  const nlohmann::json header{{"seed", 9}};
  const std::vector<Command> script = random_script(9, 500);

  std::vector<std::string> runs;
  for (int r = 0; r < 3; ++r) {
    Engine e(board, arm, mode);
    for (const auto& c : script) e.run(c);
    runs.push_back(trace_to_json_text(e.trace(), header));
  }
  if (runs[0] != runs[1] || runs[1] != runs[2]) o.fail("repeated runs differ");

  // Same script with failing commands spliced in.
  const std::vector<Command> faults{GoToX{9}, GoToY{0}, MoveTo{{-4, 2}}, MoveFrom{{1, 1}, {1, 12}},
                                    Grab{}};
  std::mt19937_64 rng(10);
  std::uniform_int_distribution<std::size_t> pick(0, faults.size() - 1);
  Engine e(board, arm, mode);
  std::size_t injected = 0, rejected = 0;
  for (const auto& c : script) {
    if (rng() % 4 == 0) {
      ++injected;
      const ArmState before = e.state();
      const std::size_t steps_before = e.trace().steps.size();
      Command fault = faults[pick(rng)];
      if (std::holds_alternative<Grab>(fault) && e.state().gripper == GripperState::Open) {
        fault = Release{};
      }
      try {
        e.run(fault);
        o.fail("an injected command succeeded");
      } catch (const Error&) {
        ++rejected;
        if (!(e.state() == before) || e.trace().steps.size() != steps_before) {
          o.fail("failed command changed the engine state");
        }
      }
    }
    e.run(c);
  }
  if (trace_to_json_text(e.trace(), header) != runs[0]) {
    o.fail("trace with rejected commands differs from the clean run");
  }
  if (o.pass) {
    o.detail = cat("3 runs of 500 commands byte-identical (", runs[0].size(), " bytes); ",
                   rejected, "/", injected, " injected faults rejected atomically");
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"FK/IK round trip", round_trip},
      {"moment oracle", moment_oracle},
      {"hand-value regression", hand_values},
      {"workspace coverage", workspace},
      {"board mapping", board_mapping},
      {"chess IK invariants", chess_ik_invariants},
      {"command engine sweep", engine_sweep},
      {"parser corpus", parser_corpus},
      {"determinism and atomicity", determinism},
  };
  int failed = 0;
  int n = 0;
  for (const auto& [name, fn] : criteria) {
    ++n;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o.fail(std::string("uncaught: ") + e.what());
    }
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    std::printf("[%s] %d %s: %s (%.0f ms)\n", o.pass ? "PASS" : "FAIL", n, name, o.detail.c_str(),
                ms);
    failed += !o.pass;
  }
  std::printf("%d/%d criteria passed\n", n - failed, n);
  return failed == 0 ? 0 : 1;
}
