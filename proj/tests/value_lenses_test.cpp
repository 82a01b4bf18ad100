#include <gtest/gtest.h>

#include <cstdint>
#include <random>
#include <string>

#include "bx/law_harness.hpp"
#include "bx/value_lenses.hpp"

using namespace bx;

namespace {

DateTime at(int y, int m, int d) { return DateTime::make(y, m, d).data(); }

}  // namespace

TEST(IdentityLens, PerKind) {
  auto integers = identity_lens(ValueKind::Integer);
  EXPECT_EQ(integers.create_right(PrimitiveValue::integer(10)), ok(PrimitiveValue::integer(10)));
  auto booleans = identity_lens(ValueKind::Boolean);
  EXPECT_EQ(booleans.put_left(PrimitiveValue::boolean(true), PrimitiveValue::boolean(false)),
            ok(PrimitiveValue::boolean(true)));
  auto datetimes = identity_lens(ValueKind::DateTime);
  auto x = PrimitiveValue::datetime(at(1992, 12, 31));
  auto y = PrimitiveValue::datetime(at(2001, 1, 1));
  auto there = datetimes.put_right(x, y);
  ASSERT_TRUE(there.is_ok());
  EXPECT_EQ(datetimes.put_left(there.data(), x), ok(x));
}

TEST(IdentityLens, RejectsOtherKinds) {
  auto integers = identity_lens(ValueKind::Integer);
  EXPECT_TRUE(integers.create_right(PrimitiveValue::long_integer(1)).is_error());
  EXPECT_TRUE(integers.put_right(PrimitiveValue::text("1"), PrimitiveValue::integer(1)).is_error());
}

TEST(Arithmetic, SpecExamples) {
  EXPECT_EQ(add_lens(1).create_right(10), ok<std::int64_t>(11));
  EXPECT_EQ(add_lens(5).put_left(16, 10), ok<std::int64_t>(11));
  EXPECT_EQ(sub_lens(3).create_right(16), ok<std::int64_t>(13));
}

TEST(Arithmetic, AddThenSubIsIdentity) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::int64_t> values(-1'000'000'000, 1'000'000'000);
  for (int i = 0; i < 1000; ++i) {
    std::int64_t k = values(rng) % 1000;
    std::int64_t v = values(rng);
    auto round = add_lens(k) >> sub_lens(k);
    EXPECT_EQ(round.create_right(v), ok(v));
    EXPECT_EQ(round.create_left(v), ok(v));
    EXPECT_EQ(add_lens(k).create_right(v), ok(v + k));
  }
}

TEST(Arithmetic, OverflowIsAnError) {
  EXPECT_TRUE(add_lens(1).create_right(std::numeric_limits<std::int64_t>::max()).is_error());
}

TEST(Arithmetic, Decimals) {
  auto step = add<Decimal>(Decimal::parse("0.25").data());
  auto result = step.create_right(Decimal::parse("1.5").data());
  ASSERT_TRUE(result.is_ok());
  EXPECT_EQ(result.data().to_string(), "1.75");
  EXPECT_EQ(sub<Decimal>(Decimal::parse("0.25").data()).create_right(result.data()), ok(Decimal::parse("1.5").data()));
}

TEST(CrossType, IntString) {
  auto lens = int_string_lens();
  EXPECT_EQ(lens.create_right(13), ok(std::string("13")));
  EXPECT_EQ(lens.create_left("0"), ok<std::int64_t>(0));
  EXPECT_TRUE(lens.create_left("12x").is_error());
}

TEST(CrossType, IntStringRoundTripSample) {
  auto lens = int_string_lens();
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<std::int64_t> values(-1'000'000, 1'000'000);
  for (int i = 0; i < 10'000; ++i) {
    auto v = values(rng);
    auto text = lens.create_right(v);
    ASSERT_TRUE(text.is_ok());
    ASSERT_EQ(text.data(), std::to_string(v));
    ASSERT_EQ(lens.create_left(text.data()), ok(v));
  }
}

TEST(CrossType, StringDatetime) {
  auto lens = string_datetime_lens();
  EXPECT_EQ(lens.create_right("1992-12-31T00:00:00"), ok(at(1992, 12, 31)));
  EXPECT_EQ(lens.create_left(at(1992, 12, 31)), ok(std::string("1992-12-31T00:00:00")));
  EXPECT_TRUE(lens.create_right("31/12/1992").is_error());
}

TEST(CrossType, BoolAndDecimalStrings) {
  EXPECT_EQ(bool_string_lens().create_right(false), ok(std::string("false")));
  EXPECT_TRUE(bool_string_lens().create_left("yes").is_error());
  EXPECT_EQ(decimal_string_lens().create_right(Decimal::parse("0.0").data()), ok(std::string("0.0")));
  EXPECT_EQ(not_lens().create_right(true), ok(false));
}

TEST(DayOfMonth, SpecExamples) {
  auto lens = day_of_month_lens(at(2000, 1, 1));
  EXPECT_EQ(lens.create_right(at(1992, 12, 31)), ok<std::int64_t>(31));
  EXPECT_EQ(lens.put_left(31, at(1992, 12, 31)), ok(at(1992, 12, 31)));
  EXPECT_TRUE(lens.put_left(31, at(1992, 2, 10)).is_error());
}

TEST(DayOfMonth, CreateLeftUsesBase) {
  auto lens = day_of_month_lens(DateTime::make(2000, 3, 1, 12, 0, 0).data());
  EXPECT_EQ(lens.create_left(15), ok(DateTime::make(2000, 3, 15, 12, 0, 0).data()));
  EXPECT_TRUE(lens.create_left(0).is_error());
}

TEST(DayOfMonth, FirstOfMonthYieldsZeroAfterSub) {
  // birthday on the 1st: the naive chain yields 0
  auto chain = day_of_month_lens(at(2000, 1, 1)) >> sub_lens(1);
  EXPECT_EQ(chain.create_right(at(1990, 5, 1)), ok<std::int64_t>(0));
}

TEST(Lift, ChecksKindsAndWraps) {
  auto lifted = lift(int_string_lens(), ValueKind::Long, ValueKind::String);
  EXPECT_EQ(lifted.create_right(PrimitiveValue::long_integer(7)), ok(PrimitiveValue::text("7")));
  EXPECT_EQ(lifted.create_left(PrimitiveValue::text("8")), ok(PrimitiveValue::long_integer(8)));
  EXPECT_TRUE(lifted.create_right(PrimitiveValue::integer(7)).is_error());
}
