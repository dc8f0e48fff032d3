#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "chessarm/chessbot.hpp"
#include "chessarm/engine.hpp"

namespace chessarm::cli {

/// Tool configuration, stored as JSON:
///
///   {
///     "board": {"side_length": 320, "dif": 40},
///     "arm": {"column_height": 150, "link_d": 200, "gripper_length": 50},
///     "ik_mode": "standard",
///     "trace_cap": 1000000
///   }
///
/// `arm.link_d` may be omitted, in which case it is derived from the board
/// with default_link_length(). All lengths share one unit (mm in the docs).
struct Config {
  double side_length = 320.0;
  double dif = 40.0;
  double column_height = 150.0;
  std::optional<double> link_d = 200.0;
  double gripper_length = 50.0;
  IkMode ik_mode = IkMode::StandardTwoLink;
  std::size_t trace_cap = Engine::kDefaultTraceCap;

  BoardModel board() const;
  /// Resolves an omitted link_d; may throw Error(NonPositiveLink).
  ChessArm arm() const;

  friend bool operator==(const Config&, const Config&) = default;
};

/// Throws Error(ConfigError) on missing fields, wrong types or broken
/// invariants (non-positive lengths, unknown ik_mode).
Config config_from_json(const nlohmann::json& j);
nlohmann::json config_to_json(const Config& cfg);

Config load_config(const std::string& path);
void save_config(const Config& cfg, const std::string& path);

}  // namespace chessarm::cli
