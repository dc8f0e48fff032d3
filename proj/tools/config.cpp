#include "config.hpp"

#include <fstream>

#include "chessarm/error.hpp"

namespace chessarm::cli {
namespace {

[[noreturn]] void config_error(const std::string& what) {
  throw Error(ErrorCode::ConfigError, what);
}

double positive(const nlohmann::json& obj, const char* section, const char* key) {
  if (!obj.contains(key)) config_error(std::string(section) + "." + key + " is required");
  const auto& v = obj.at(key);
  if (!v.is_number()) config_error(std::string(section) + "." + key + " must be a number");
  const double d = v.get<double>();
  if (!(d > 0.0)) config_error(std::string(section) + "." + key + " must be positive");
  return d;
}

const nlohmann::json& section(const nlohmann::json& j, const char* name) {
  if (!j.contains(name) || !j.at(name).is_object()) {
    config_error(std::string("\"") + name + "\" object is required");
  }
  return j.at(name);
}

}  // namespace

BoardModel Config::board() const { return BoardModel(side_length, dif); }

ChessArm Config::arm() const {
  const double d = link_d ? *link_d : default_link_length(board());
  return ChessArm(column_height, d, gripper_length);
}

Config config_from_json(const nlohmann::json& j) {
  if (!j.is_object()) config_error("config must be a JSON object");
  Config cfg;
  const auto& board = section(j, "board");
  cfg.side_length = positive(board, "board", "side_length");
  cfg.dif = positive(board, "board", "dif");

  const auto& arm = section(j, "arm");
  cfg.column_height = positive(arm, "arm", "column_height");
  cfg.gripper_length = positive(arm, "arm", "gripper_length");
  if (arm.contains("link_d") && !arm.at("link_d").is_null()) {
    cfg.link_d = positive(arm, "arm", "link_d");
  } else {
    cfg.link_d.reset();
  }
  if (cfg.gripper_length > cfg.column_height) {
    config_error("arm.gripper_length must not exceed arm.column_height");
  }

  if (j.contains("ik_mode")) {
    if (!j.at("ik_mode").is_string()) config_error("ik_mode must be a string");
    cfg.ik_mode = parse_ik_mode(j.at("ik_mode").get<std::string>());
  }
  if (j.contains("trace_cap")) {
    const auto& cap = j.at("trace_cap");
    if (!cap.is_number_unsigned() || cap.get<std::size_t>() == 0) {
      config_error("trace_cap must be a positive integer");
    }
    cfg.trace_cap = cap.get<std::size_t>();
  }
  return cfg;
}

nlohmann::json config_to_json(const Config& cfg) {
  nlohmann::json arm{{"column_height", cfg.column_height},
                     {"gripper_length", cfg.gripper_length}};
  if (cfg.link_d) arm["link_d"] = *cfg.link_d;
  return {
      {"board", {{"side_length", cfg.side_length}, {"dif", cfg.dif}}},
      {"arm", std::move(arm)},
      {"ik_mode", std::string(to_string(cfg.ik_mode))},
      {"trace_cap", cfg.trace_cap},
  };
}

Config load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) config_error("cannot open config file " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    config_error("config " + path + " is not valid JSON: " + e.what());
  }
  return config_from_json(j);
}

void save_config(const Config& cfg, const std::string& path) {
  std::ofstream out(path);
  if (!out) config_error("cannot write config file " + path);
  out << config_to_json(cfg).dump(2) << '\n';
}

}  // namespace chessarm::cli
