#include <gtest/gtest.h>

#include "chessarm/command.hpp"

using namespace chessarm;

TEST(ParseCommand, EveryForm) {
  EXPECT_EQ(parse_command("go to x 3"), Command(GoToX{3}));
  EXPECT_EQ(parse_command("go to y 8"), Command(GoToY{8}));
  EXPECT_EQ(parse_command("move to [2, 5]"), Command(MoveTo{{2, 5}}));
  EXPECT_EQ(parse_command("move from [2 , 3] to [4 , 5]"), Command(MoveFrom{{2, 3}, {4, 5}}));
  EXPECT_EQ(parse_command("return to o"), Command(ReturnToO{}));
  EXPECT_EQ(parse_command("grab"), Command(Grab{}));
  EXPECT_EQ(parse_command("release"), Command(Release{}));
}

TEST(ParseCommand, CaseAndWhitespace) {
  EXPECT_EQ(parse_command("  GO   To\tX   -3 "), Command(GoToX{-3}));
  EXPECT_EQ(parse_command("Move FROM[-3,1]TO[4,8]"), Command(MoveFrom{{-3, 1}, {4, 8}}));
  EXPECT_EQ(parse_command("RETURN TO O"), Command(ReturnToO{}));
  EXPECT_EQ(parse_command("go to y +7"), Command(GoToY{7}));
}

TEST(ParseCommand, OutOfBoardValuesStillParse) {
  EXPECT_EQ(parse_command("go to x 99"), Command(GoToX{99}));
  EXPECT_EQ(parse_command("move to [0, 0]"), Command(MoveTo{{0, 0}}));
}

TEST(ParseCommand, PrettyPrintRoundTrip) {
  for (const auto* text : {"go to x -2", "go to y 1", "move to [ -3 ,8 ]",
                           "move from [1,1] to [2,2]", "Return To O", "GRAB", "release"}) {
    const Command c = parse_command(text);
    const std::string canon = to_string(c);
    EXPECT_EQ(parse_command(canon), c) << canon;
    EXPECT_EQ(to_string(parse_command(canon)), canon);
  }
  EXPECT_EQ(to_string(Command(MoveFrom{{2, 3}, {4, 5}})), "move from [2 , 3] to [4 , 5]");
}

struct BadInput {
  const char* text;
  std::size_t offset;
};

class ParseCommandErrors : public ::testing::TestWithParam<BadInput> {};

TEST_P(ParseCommandErrors, ReportsOffset) {
  const BadInput& bad = GetParam();
  try {
    parse_command(bad.text);
    FAIL() << "parsed: " << bad.text;
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.offset(), bad.offset) << bad.text << ": " << e.what();
    EXPECT_EQ(e.code(), ErrorCode::SyntaxError);
    EXPECT_FALSE(e.expected().empty());
  }
}

INSTANTIATE_TEST_SUITE_P(
    Malformed, ParseCommandErrors,
    ::testing::Values(BadInput{"", 0}, BadInput{"   ", 3}, BadInput{"jump", 0},
                      BadInput{"go", 2}, BadInput{"go x 3", 3}, BadInput{"go to z 3", 6},
                      BadInput{"go to x", 7}, BadInput{"go to x three", 8},
                      BadInput{"go to x 3 4", 10}, BadInput{"move [1,2]", 5},
                      BadInput{"move to 1,2]", 8}, BadInput{"move to [1 2]", 11},
                      BadInput{"move to [1,2", 12}, BadInput{"move to [a,2]", 9},
                      BadInput{"move from [1,2] [3,4]", 16}, BadInput{"move from [1,2] to", 18},
                      BadInput{"return o", 7}, BadInput{"return to x", 10},
                      BadInput{"grab now", 5}, BadInput{"go to x 99999999999", 8}));

TEST(ParseCommand, MessageShape) {
  try {
    parse_command("go to q");
    FAIL();
  } catch (const SyntaxError& e) {
    const std::string msg = e.what();
    EXPECT_NE(msg.find("offset 6"), std::string::npos) << msg;
    EXPECT_EQ(e.found(), "q");
    EXPECT_EQ(e.line(), 0u);
  }
}

TEST(ParseScript, SkipsBlankAndCommentLines) {
  const auto lines = parse_script("# header\n\ngo to x 1\n   # indented\r\ngrab\n");
  ASSERT_EQ(lines.size(), 2u);
  EXPECT_EQ(lines[0].line, 3u);
  EXPECT_EQ(lines[0].command, Command(GoToX{1}));
  EXPECT_EQ(lines[1].line, 5u);
  EXPECT_EQ(lines[1].command, Command(Grab{}));
  EXPECT_TRUE(parse_script("").empty());
}

TEST(ParseScript, ErrorCarriesLine) {
  try {
    parse_script("grab\nrelease\nmove to [1;2]\n");
    FAIL();
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.line(), 3u);
    EXPECT_EQ(e.offset(), 10u);
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos);
  }
}

TEST(QueryHelp, OneEntryPerForm) {
  const auto& help = query_help();
  EXPECT_EQ(help.size(), 7u);
  for (const auto& h : help) EXPECT_FALSE(h.description.empty());
}
