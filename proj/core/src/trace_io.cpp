#include "chessarm/trace_io.hpp"

#include <array>
#include <charconv>

#include "chessarm/error.hpp"

namespace chessarm {
namespace {

JointId joint_from_string(const std::string& s) {
  if (s == "J1") return JointId::J1;
  if (s == "J2") return JointId::J2;
  if (s == "J3") return JointId::J3;
  if (s == "J4") return JointId::J4;
  throw Error(ErrorCode::InvalidArgument, "unknown joint \"" + s + "\"");
}

std::string_view op_name(StepOp op) {
  switch (op) {
    case StepOp::Rotate: return "rotate";
    case StepOp::Grab: return "grab";
    case StepOp::Release: return "release";
  }
  return "?";
}

}  // namespace

std::string format_double(double v) {
  std::array<char, 64> buf{};
  const auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  if (ec != std::errc()) return "nan";
  return std::string(buf.data(), end);
}

nlohmann::json step_to_json(const MotionStep& step) {
  nlohmann::json j{{"op", std::string(op_name(step.op))}};
  if (step.op == StepOp::Rotate) {
    j["joint"] = std::string(to_string(step.joint));
    j["delta_rad"] = step.delta;
    if (step.tag == StepTag::Lift) j["tag"] = "lift";
    if (step.tag == StepTag::Lower) j["tag"] = "lower";
  }
  return j;
}

MotionStep step_from_json(const nlohmann::json& j) {
  try {
    const auto op = j.at("op").get<std::string>();
    if (op == "grab") return MotionStep::grab();
    if (op == "release") return MotionStep::release();
    if (op != "rotate") throw Error(ErrorCode::InvalidArgument, "unknown step op \"" + op + "\"");
    StepTag tag = StepTag::None;
    if (j.contains("tag")) {
      const auto t = j.at("tag").get<std::string>();
      if (t == "lift") tag = StepTag::Lift;
      else if (t == "lower") tag = StepTag::Lower;
      else throw Error(ErrorCode::InvalidArgument, "unknown step tag \"" + t + "\"");
    }
    return MotionStep::rotate(joint_from_string(j.at("joint").get<std::string>()),
                              j.at("delta_rad").get<double>(), tag);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::InvalidArgument, std::string("malformed trace step: ") + e.what());
  }
}

nlohmann::json trace_to_json(const MotionTrace& trace, const nlohmann::json& header) {
  nlohmann::json steps = nlohmann::json::array();
  for (const auto& s : trace.steps) steps.push_back(step_to_json(s));
  return {{"header", header}, {"steps", std::move(steps)}};
}

MotionTrace trace_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("steps") || !j.at("steps").is_array()) {
    throw Error(ErrorCode::InvalidArgument, "trace JSON needs a \"steps\" array");
  }
  MotionTrace trace;
  for (const auto& s : j.at("steps")) trace.steps.push_back(step_from_json(s));
  return trace;
}

std::string trace_to_json_text(const MotionTrace& trace, const nlohmann::json& header) {
  return trace_to_json(trace, header).dump(2) + "\n";
}

std::string trace_to_csv(const MotionTrace& trace) {
  std::string out = "step,op,joint,delta_rad\n";
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const MotionStep& s = trace.steps[i];
    out += std::to_string(i);
    out += ',';
    out += op_name(s.op);
    out += ',';
    if (s.op == StepOp::Rotate) {
      out += to_string(s.joint);
      out += ',';
      out += format_double(s.delta);
    } else {
      out += ',';
    }
    out += '\n';
  }
  return out;
}

}  // namespace chessarm
