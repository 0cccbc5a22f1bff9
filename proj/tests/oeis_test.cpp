#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "poplab/oeis.hpp"

using namespace poplab;

namespace {

std::vector<BigInt> big(std::initializer_list<long long> xs) {
  std::vector<BigInt> out;
  for (long long x : xs) out.emplace_back(x);
  return out;
}

const char* kSample =
    "# header\n"
    "A025192 ,1,2,6,18,54,162,486,\n"
    "A007531 ,0,0,0,6,24,60,120,210,336,504,\r\n"
    "A045925 ,0,1,2,6,12,25,48,91,168,\n";

}  // namespace

TEST(Stripped, Parses) {
  const OeisDb db = parse_stripped_text(kSample);
  EXPECT_EQ(db.size(), 3U);
  ASSERT_NE(db.find("A025192"), nullptr);
  EXPECT_EQ(*db.find("A025192"), big({1, 2, 6, 18, 54, 162, 486}));
  EXPECT_EQ(db.find("A007531")->size(), 10U);
  EXPECT_TRUE(db.warnings.empty());
}

TEST(Stripped, Errors) {
  EXPECT_THROW(parse_stripped_text(""), ParseError);
  EXPECT_THROW(parse_stripped_text("# only a comment\n"), ParseError);
  EXPECT_THROW(parse_stripped_text("\xEF\xBB\xBF" "A025192 ,1,2,6,\n"), ParseError);
  EXPECT_THROW(load_stripped("/nonexistent/stripped"), IoError);
}

TEST(Stripped, StrayLinesWarn) {
  const OeisDb db = parse_stripped_text("A025192 ,1,2,6,18,\nhello there\nA000001 ,1,x,\nA025192 ,1,\n");
  EXPECT_EQ(db.size(), 1U);
  ASSERT_EQ(db.warnings.size(), 3U);
  EXPECT_EQ(db.warnings[0].rfind("line 2", 0), 0U);
}

TEST(Stripped, LoadsFile) {
  const std::string path = ::testing::TempDir() + "poplab_stripped.txt";
  std::ofstream(path) << kSample;
  EXPECT_EQ(load_stripped(path).size(), 3U);
}

TEST(Match, Examples) {
  const OeisDb db = parse_stripped_text(kSample);
  const auto m1 = match_sequence(db, big({1, 2, 6, 18, 54, 162, 486}));
  ASSERT_EQ(m1.size(), 1U);
  EXPECT_EQ(m1[0].a_number, "A025192");
  EXPECT_EQ(m1[0].offset, 0);
  EXPECT_EQ(m1[0].overlap, 7);

  const auto m2 = match_sequence(db, big({1, 2, 6, 24, 60, 120, 210, 336}));
  ASSERT_EQ(m2.size(), 1U);
  EXPECT_EQ(m2[0].a_number, "A007531");
  EXPECT_EQ(m2[0].first_agreement, 3);
  EXPECT_EQ(m2[0].placeholders, 2);
  EXPECT_EQ(m2[0].overlap, 8);

  const auto m3 = match_sequence(db, big({1, 2, 6, 12, 25, 48, 91, 168}));
  ASSERT_EQ(m3.size(), 1U);
  EXPECT_EQ(m3[0].a_number, "A045925");
  EXPECT_EQ(m3[0].offset, 1);

  EXPECT_TRUE(match_sequence(db, big({1, 2, 6, 24, 120, 720, 5040})).empty());
  EXPECT_THROW(match_sequence(db, big({1, 2, 6})), std::invalid_argument);
}

TEST(Match, RespectsMaxShift) {
  const OeisDb db = parse_stripped_text("A999999 ,7,7,7,7,7,1,2,6,18,54,162,486,\n");
  EXPECT_TRUE(match_sequence(db, big({1, 2, 6, 18, 54, 162, 486})).empty());
  EXPECT_EQ(match_sequence(db, big({1, 2, 6, 18, 54, 162, 486}), 7, 5).size(), 1U);
}
