#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "chessarm/chessbot.hpp"

// Board arm query language, one command per line:
//
//   go to x <int>
//   go to y <int>
//   move to [<int> , <int>]
//   move from [<int> , <int>] to [<int> , <int>]
//   return to o
//   grab
//   release
//
// Keywords are case-insensitive and whitespace is free-form. The parser
// accepts any integer; board ranges are enforced when a command runs.

namespace chessarm {

struct GoToX {
  int x = 0;
  friend bool operator==(const GoToX&, const GoToX&) = default;
};
struct GoToY {
  int y = 0;
  friend bool operator==(const GoToY&, const GoToY&) = default;
};
struct MoveTo {
  Cell to;
  friend bool operator==(const MoveTo&, const MoveTo&) = default;
};
struct MoveFrom {
  Cell from;
  Cell to;
  friend bool operator==(const MoveFrom&, const MoveFrom&) = default;
};
struct ReturnToO {
  friend bool operator==(const ReturnToO&, const ReturnToO&) = default;
};
struct Grab {
  friend bool operator==(const Grab&, const Grab&) = default;
};
struct Release {
  friend bool operator==(const Release&, const Release&) = default;
};

using Command = std::variant<GoToX, GoToY, MoveTo, MoveFrom, ReturnToO, Grab, Release>;

/// Throws SyntaxError carrying the byte offset of the first bad token and
/// a hint of what was expected there.
Command parse_command(std::string_view text);

/// Canonical spelling, e.g. "move from [2 , 3] to [4 , 5]". Re-parses to an
/// equal Command.
std::string to_string(const Command& cmd);

struct ScriptLine {
  std::size_t line = 0;  ///< 1-based
  Command command;
};

/// Parses a command file. Blank lines and lines whose first non-blank
/// character is '#' are skipped. SyntaxError reports the 1-based line.
std::vector<ScriptLine> parse_script(std::string_view text);

/// True for lines parse_script skips.
bool is_blank_or_comment(std::string_view line) noexcept;

struct QueryHelp {
  std::string_view form;
  std::string_view description;
};

/// One entry per query form, in grammar order.
const std::vector<QueryHelp>& query_help();

}  // namespace chessarm
