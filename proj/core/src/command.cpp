#include "chessarm/command.hpp"

#include <cctype>
#include <charconv>

namespace chessarm {
namespace {

enum class TokenKind { Word, Int, LBracket, RBracket, Comma, End, Invalid };

struct Token {
  TokenKind kind = TokenKind::End;
  std::size_t offset = 0;
  std::string_view text;
};

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' || c == '\v'; }
bool is_alpha(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
bool is_digit(char c) { return c >= '0' && c <= '9'; }

bool iequals(std::string_view a, std::string_view b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (std::tolower(static_cast<unsigned char>(a[i])) !=
        std::tolower(static_cast<unsigned char>(b[i]))) {
      return false;
    }
  }
  return true;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) { advance(); }

  Command parse() {
    const Token head = expect_word("one of go, move, return, grab, release");
    Command cmd;
    if (iequals(head.text, "go")) {
      keyword("to");
      const Token axis = expect_word("x or y");
      if (iequals(axis.text, "x")) {
        cmd = GoToX{integer()};
      } else if (iequals(axis.text, "y")) {
        cmd = GoToY{integer()};
      } else {
        fail(axis, "x or y");
      }
    } else if (iequals(head.text, "move")) {
      const Token how = expect_word("to or from");
      if (iequals(how.text, "to")) {
        cmd = MoveTo{cell()};
      } else if (iequals(how.text, "from")) {
        const Cell from = cell();
        keyword("to");
        cmd = MoveFrom{from, cell()};
      } else {
        fail(how, "to or from");
      }
    } else if (iequals(head.text, "return")) {
      keyword("to");
      keyword("o");
      cmd = ReturnToO{};
    } else if (iequals(head.text, "grab")) {
      cmd = Grab{};
    } else if (iequals(head.text, "release")) {
      cmd = Release{};
    } else {
      fail(head, "one of go, move, return, grab, release");
    }
    if (current_.kind != TokenKind::End) fail(current_, "end of command");
    return cmd;
  }

 private:
  [[noreturn]] void fail(const Token& at, std::string expected) const {
    throw SyntaxError(at.offset, std::move(expected), std::string(at.text));
  }

  void advance() {
    while (pos_ < text_.size() && is_space(text_[pos_])) ++pos_;
    const std::size_t start = pos_;
    if (pos_ >= text_.size()) {
      current_ = {TokenKind::End, start, {}};
      return;
    }
    const char c = text_[pos_];
    TokenKind kind = TokenKind::Invalid;
    if (is_alpha(c)) {
      while (pos_ < text_.size() && is_alpha(text_[pos_])) ++pos_;
      kind = TokenKind::Word;
    } else if (is_digit(c) ||
               ((c == '-' || c == '+') && pos_ + 1 < text_.size() && is_digit(text_[pos_ + 1]))) {
      ++pos_;
      while (pos_ < text_.size() && is_digit(text_[pos_])) ++pos_;
      kind = TokenKind::Int;
    } else {
      ++pos_;
      if (c == '[') kind = TokenKind::LBracket;
      if (c == ']') kind = TokenKind::RBracket;
      if (c == ',') kind = TokenKind::Comma;
    }
    current_ = {kind, start, text_.substr(start, pos_ - start)};
  }

  Token take(TokenKind kind, const char* expected) {
    if (current_.kind != kind) fail(current_, expected);
    const Token t = current_;
    advance();
    return t;
  }

  Token expect_word(const char* expected) { return take(TokenKind::Word, expected); }

  void keyword(std::string_view word) {
    const std::string expected = "\"" + std::string(word) + "\"";
    if (current_.kind != TokenKind::Word || !iequals(current_.text, word)) fail(current_, expected);
    advance();
  }

  int integer() {
    const Token t = take(TokenKind::Int, "integer");
    std::string_view digits = t.text;
    if (!digits.empty() && digits.front() == '+') digits.remove_prefix(1);
    int value = 0;
    const auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (ec != std::errc() || end != digits.data() + digits.size()) fail(t, "integer in int range");
    return value;
  }

  Cell cell() {
    take(TokenKind::LBracket, "\"[\"");
    const int x = integer();
    take(TokenKind::Comma, "\",\"");
    const int y = integer();
    take(TokenKind::RBracket, "\"]\"");
    return {x, y};
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  Token current_;
};

std::string cell_text(Cell c) {
  return "[" + std::to_string(c.x) + " , " + std::to_string(c.y) + "]";
}

struct Printer {
  std::string operator()(const GoToX& c) const { return "go to x " + std::to_string(c.x); }
  std::string operator()(const GoToY& c) const { return "go to y " + std::to_string(c.y); }
  std::string operator()(const MoveTo& c) const { return "move to " + cell_text(c.to); }
  std::string operator()(const MoveFrom& c) const {
    return "move from " + cell_text(c.from) + " to " + cell_text(c.to);
  }
  std::string operator()(const ReturnToO&) const { return "return to o"; }
  std::string operator()(const Grab&) const { return "grab"; }
  std::string operator()(const Release&) const { return "release"; }
};

}  // namespace

Command parse_command(std::string_view text) { return Parser(text).parse(); }

std::string to_string(const Command& cmd) { return std::visit(Printer{}, cmd); }

bool is_blank_or_comment(std::string_view line) noexcept {
  for (const char c : line) {
    if (is_space(c)) continue;
    return c == '#';
  }
  return true;
}

std::vector<ScriptLine> parse_script(std::string_view text) {
  std::vector<ScriptLine> out;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = text.substr(start, end - start);
    ++line_no;
    if (!is_blank_or_comment(line)) {
      try {
        out.push_back({line_no, parse_command(line)});
      } catch (const SyntaxError& e) {
        throw SyntaxError(e.offset(), e.expected(), e.found(), line_no);
      }
    }
    if (end == text.size()) break;
    start = end + 1;
  }
  return out;
}

const std::vector<QueryHelp>& query_help() {
  static const std::vector<QueryHelp> help = {
      {"go to x <col>", "swing the arm over board column <col>"},
      {"go to y <row>", "reach out to board row <row>"},
      {"move to [<col> , <row>]", "position the arm over a cell (x then y)"},
      {"move from [<col> , <row>] to [<col> , <row>]", "carry a piece from one cell to another"},
      {"return to o", "go back to the home square"},
      {"grab", "close the gripper on the piece"},
      {"release", "open the gripper"},
  };
  return help;
}

}  // namespace chessarm
