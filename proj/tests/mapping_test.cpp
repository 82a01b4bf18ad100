#include <gtest/gtest.h>

#include <random>
#include <string>

#include "bx/mapping.hpp"
#include "support/fixtures.hpp"

using namespace bx;
using namespace bx::testing;

namespace {

const char* kStudents = R"({
  "leftTable": "Students", "rightTable": "Students", "key": "StudentID",
  "columns": [
    {"kind": "identity", "name": "StudentID", "type": "integer"},
    {"kind": "identity", "name": "FirstName", "type": "string"},
    {"kind": "identity", "name": "LastName", "type": "string"},
    {"kind": "identity", "name": "Email", "type": "string"},
    {"kind": "delete", "left": "Major", "type": "string", "default": "Undeclared"},
    {"kind": "delete", "left": "EnrollmentDate", "type": "datetime", "default": "2000-01-01T00:00:00"},
    {"kind": "insert", "right": "BillingAddress", "type": "string", "default": ""}
  ]
})";

std::string with_columns(const std::string& columns, const std::string& key = "id") {
  return R"({"leftTable": "T", "rightTable": "T", "key": ")" + key + R"(", "columns": [)" + columns + "]}";
}

const std::string kId = R"({"kind": "identity", "name": "id", "type": "integer"})";

}  // namespace

TEST(Mapping, StudentsMappingMatchesHandBuiltLens) {
  auto config = parse_mapping(kStudents);
  ASSERT_TRUE(config.is_ok()) << config.message();
  EXPECT_EQ(config.data().columns.size(), 7u);
  auto lens = build_table_data_lens(config.data());
  ASSERT_TRUE(lens.is_ok()) << lens.message();
  auto reference = students_data_lens().data();
  std::mt19937_64 rng(1);
  for (int i = 0; i < 50; ++i) {
    auto academic = table_with_keys(academic_spec(), "StudentID", random_keys(rng, 5), rng);
    auto financial = table_with_keys(financial_spec(), "StudentID", random_keys(rng, 5), rng);
    EXPECT_EQ(lens.data().create_right(academic), reference.create_right(academic));
    EXPECT_EQ(lens.data().create_left(financial), reference.create_left(financial));
    EXPECT_EQ(lens.data().put_right(academic, financial), reference.put_right(academic, financial));
    EXPECT_EQ(lens.data().put_left(financial, academic), reference.put_left(financial, academic));
  }
}

TEST(Mapping, VerdictsPerColumn) {
  auto verdicts = column_verdicts(parse_mapping(kStudents).data());
  ASSERT_EQ(verdicts.size(), 7u);
  EXPECT_EQ(verdicts[4].column, "Major");
  EXPECT_EQ(verdicts[4].kind, "delete");
  EXPECT_EQ(verdicts[6].column, "BillingAddress");
  for (const auto& v : verdicts) EXPECT_FALSE(v.error) << v.column;
}

TEST(Mapping, RenameAndBooleanDefaults) {
  auto config = parse_mapping(R"({"leftTable": "A", "rightTable": "B", "key": "id", "columns": [)" + kId +
                              R"(, {"kind": "rename", "left": "dob", "right": "birth", "type": "datetime"},
                                  {"kind": "insert", "right": "isAdmin", "type": "boolean", "default": false},
                                  {"kind": "insert", "right": "hours", "type": "decimal", "default": "0.0"}]})");
  ASSERT_TRUE(config.is_ok()) << config.message();
  EXPECT_EQ(config.data().columns[2].default_value, PrimitiveValue::boolean(false));
  auto lens = build_table_data_lens(config.data());
  ASSERT_TRUE(lens.is_ok()) << lens.message();
  TableData left{TableSpec{"A", {{"id", ColumnType::Integer}, {"dob", ColumnType::DateTime}}},
                 {RowData{{{"id", PrimitiveValue::integer(1)},
                           {"dob", PrimitiveValue::datetime(DateTime::make(1992, 12, 31).data())}}}},
                 "id"};
  auto right = lens.data().create_right(left);
  ASSERT_TRUE(right.is_ok()) << right.message();
  EXPECT_EQ(right.data().spec.name, "B");
  EXPECT_EQ(*right.data().rows[0].find("birth"), PrimitiveValue::datetime(DateTime::make(1992, 12, 31).data()));
  EXPECT_EQ(*right.data().rows[0].find("isAdmin"), PrimitiveValue::boolean(false));
}

TEST(Mapping, ParseErrors) {
  EXPECT_TRUE(parse_mapping("{").is_error());
  EXPECT_TRUE(parse_mapping("[]").is_error());
  EXPECT_TRUE(parse_mapping(R"({"leftTable": "T", "key": "id", "columns": []})").is_error());
  EXPECT_TRUE(parse_mapping(R"({"leftTable": "T", "rightTable": "T", "key": "id", "columns": {}})").is_error());
  EXPECT_TRUE(parse_mapping(R"({"leftTable": "T", "rightTable": "T", "key": "id", "columns": [], "x": 1})").is_error());
  auto unknown_type = parse_mapping(with_columns(R"({"kind": "identity", "name": "id", "type": "number"})"));
  ASSERT_TRUE(unknown_type.is_error());
  EXPECT_NE(unknown_type.message().find("number"), std::string::npos);
  EXPECT_TRUE(parse_mapping(with_columns(R"({"kind": "identity", "name": "id", "type": "unit"})")).is_error());
  EXPECT_TRUE(parse_mapping(with_columns(R"({"kind": "swap", "name": "id", "type": "integer"})")).is_error());
  EXPECT_TRUE(parse_mapping(with_columns(R"({"kind": "identity", "left": "id", "type": "integer"})")).is_error());
  EXPECT_TRUE(parse_mapping(with_columns(R"({"kind": "rename", "left": "a", "type": "integer"})")).is_error());
  EXPECT_TRUE(parse_mapping(with_columns(R"({"kind": "insert", "right": "a", "type": "integer"})")).is_error());
  EXPECT_TRUE(parse_mapping(with_columns(R"({"kind": "insert", "right": "a", "type": "integer", "default": "x"})")).is_error());
  EXPECT_TRUE(parse_mapping(with_columns(R"({"kind": "insert", "right": "a", "type": "integer", "default": 3})")).is_error());
  EXPECT_TRUE(parse_mapping(with_columns(R"({"kind": "delete", "left": "a", "right": "b", "type": "string", "default": ""})")).is_error());
  EXPECT_TRUE(parse_mapping(with_columns(R"({"kind": "identity", "name": "", "type": "string"})")).is_error());
}

TEST(Mapping, KeyMustBeIdentity) {
  auto config = parse_mapping(with_columns(
      kId + R"(, {"kind": "insert", "right": "flag", "type": "boolean", "default": "true"})", "flag"));
  ASSERT_TRUE(config.is_ok()) << config.message();
  EXPECT_TRUE(build_table_data_lens(config.data()).is_error());
  auto missing = parse_mapping(with_columns(kId, "other"));
  ASSERT_TRUE(missing.is_ok());
  EXPECT_TRUE(build_table_data_lens(missing.data()).is_error());
}

TEST(Mapping, MismatchedDataKindIsRejected) {
  auto config = parse_mapping(with_columns(
      kId + R"(, {"kind": "delete", "dataKind": "insert", "left": "a", "type": "string", "default": ""})"));
  ASSERT_TRUE(config.is_ok()) << config.message();
  auto lens = build_table_data_lens(config.data());
  ASSERT_TRUE(lens.is_error());
  EXPECT_NE(lens.message().find("structural and data lens kinds must match"), std::string::npos) << lens.message();
  auto verdicts = column_verdicts(config.data());
  EXPECT_FALSE(verdicts[0].error);
  ASSERT_TRUE(verdicts[1].error);
}

TEST(Mapping, LoadReportsMissingFile) {
  auto config = load_mapping("/nonexistent/mapping.json");
  EXPECT_TRUE(config.is_error());
}
