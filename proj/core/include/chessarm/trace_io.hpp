#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "chessarm/engine.hpp"

// Trace export.
//
// JSON: {"header": <caller-supplied object>, "steps": [step...]} where each
// step is {"op":"rotate","joint":"J2","delta_rad":-0.123}, {"op":"grab"} or
// {"op":"release"}. Lift and lower rotations also carry "tag":"lift"/"lower".
//
// CSV: header "step,op,joint,delta_rad", one row per step; joint and delta
// are empty for gripper steps.

namespace chessarm {

nlohmann::json step_to_json(const MotionStep& step);
MotionStep step_from_json(const nlohmann::json& j);

nlohmann::json trace_to_json(const MotionTrace& trace, const nlohmann::json& header);

/// Steps only; annotations are not serialized.
MotionTrace trace_from_json(const nlohmann::json& j);

/// Pretty-printed JSON with a trailing newline. Identical traces and headers
/// produce identical bytes.
std::string trace_to_json_text(const MotionTrace& trace, const nlohmann::json& header);

std::string trace_to_csv(const MotionTrace& trace);

/// Shortest decimal text that reads back to the same double.
std::string format_double(double v);

}  // namespace chessarm
