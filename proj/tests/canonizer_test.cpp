#include <gtest/gtest.h>

#include <filesystem>
#include <random>
#include <string>

#include "bx/canonizer.hpp"
#include "support/fixtures.hpp"

using namespace bx;
using namespace bx::testing;

namespace {

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    path = std::filesystem::temp_directory_path() /
           ("bx-canonizer-" + std::to_string(std::random_device{}()));
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
};

const CsvCanonizer csv;
const JsonCanonizer json;

TableData mixed_table() {
  TableSpec spec{"Mixed",
                 {{"id", ColumnType::Integer},
                  {"big", ColumnType::Long},
                  {"amount", ColumnType::Decimal},
                  {"flag", ColumnType::Boolean},
                  {"when", ColumnType::DateTime},
                  {"note", ColumnType::String}}};
  auto row = [&](std::int64_t id, std::int64_t big, const char* amount, bool flag, DateTime when, std::string note) {
    return RowData{{{"id", PrimitiveValue::integer(id)},
                    {"big", PrimitiveValue::long_integer(big)},
                    {"amount", PrimitiveValue::decimal(Decimal::parse(amount).data())},
                    {"flag", PrimitiveValue::boolean(flag)},
                    {"when", PrimitiveValue::datetime(when)},
                    {"note", PrimitiveValue::text(std::move(note))}}};
  };
  return TableData{spec,
                   {row(1, 9'000'000'000, "1.50", true, DateTime::make(1992, 12, 31).data(), "plain"),
                    row(2, -4, "-0.25", false, DateTime::make(2024, 2, 29, 23, 59, 58).data(), "a, \"quoted\"\nline"),
                    row(3, 0, "0", true, DateTime::make(1, 1, 1).data(), "")},
                   "id"};
}

}  // namespace

TEST(Csv, ParsesSingleRow) {
  auto table = csv.parse("StudentID:integer,FirstName:string\n1,Ana\n", "Students", "StudentID");
  ASSERT_TRUE(table.is_ok()) << table.message();
  TableData expected{TableSpec{"Students", {{"StudentID", ColumnType::Integer}, {"FirstName", ColumnType::String}}},
                     {RowData{{{"StudentID", PrimitiveValue::integer(1)}, {"FirstName", PrimitiveValue::text("Ana")}}}},
                     "StudentID"};
  EXPECT_EQ(table.data(), expected);
}

TEST(Csv, HeaderOnlyGivesNoRows) {
  auto table = csv.parse("StudentID:integer,FirstName:string\n", "Students", "StudentID");
  ASSERT_TRUE(table.is_ok()) << table.message();
  EXPECT_TRUE(table.data().rows.empty());
  EXPECT_EQ(table.data().spec.columns.size(), 2u);
}

TEST(Csv, TypeErrorNamesRowAndColumn) {
  auto table = csv.parse("StudentID:integer,FirstName:string\nx,Ana\n", "Students", "StudentID");
  ASSERT_TRUE(table.is_error());
  EXPECT_NE(table.message().find("row 1"), std::string::npos) << table.message();
  EXPECT_NE(table.message().find("StudentID"), std::string::npos) << table.message();
}

TEST(Csv, RejectsMalformedInput) {
  EXPECT_TRUE(csv.parse("", "T", "id").is_error());
  EXPECT_TRUE(csv.parse("id\n", "T", "id").is_error());
  EXPECT_TRUE(csv.parse("id:unit\n", "T", "id").is_error());
  EXPECT_TRUE(csv.parse("id:number\n", "T", "id").is_error());
  EXPECT_TRUE(csv.parse("id:integer,id:string\n", "T", "id").is_error());
  EXPECT_TRUE(csv.parse("id:integer\n1\n1\n", "T", "id").is_error());
  EXPECT_TRUE(csv.parse("id:integer,s:string\n1\n", "T", "id").is_error());
  EXPECT_TRUE(csv.parse("id:integer,s:string\n1,\"open\n", "T", "id").is_error());
  EXPECT_TRUE(csv.parse("id:integer,s:string\n1,a\"b\n", "T", "id").is_error());
  EXPECT_TRUE(csv.parse("id:integer\n1\n", "T", "missing").is_error());
}

TEST(Csv, RendersCanonicalScalars) {
  auto text = csv.render(mixed_table());
  ASSERT_TRUE(text.is_ok()) << text.message();
  EXPECT_EQ(text.data(),
            "id:integer,big:long,amount:decimal,flag:boolean,when:datetime,note:string\n"
            "1,9000000000,1.50,true,1992-12-31T00:00:00,plain\n"
            "2,-4,-0.25,false,2024-02-29T23:59:58,\"a, \"\"quoted\"\"\nline\"\n"
            "3,0,0,true,0001-01-01T00:00:00,\n");
}

TEST(Csv, AcceptsCrLf) {
  auto table = csv.parse("id:integer,s:string\r\n1,a\r\n", "T", "id");
  ASSERT_TRUE(table.is_ok()) << table.message();
  EXPECT_EQ(*table.data().rows[0].find("s"), PrimitiveValue::text("a"));
}

TEST(Csv, ColumnNamesWithColonsAndCommas) {
  TableData table{TableSpec{"T", {{"id", ColumnType::Integer}, {"a:b,c", ColumnType::String}}},
                  {RowData{{{"id", PrimitiveValue::integer(1)}, {"a:b,c", PrimitiveValue::text("v")}}}},
                  "id"};
  auto text = csv.render(table);
  ASSERT_TRUE(text.is_ok());
  EXPECT_EQ(csv.parse(text.data(), "T", "id"), ok(table));
}

TEST(Csv, RenderRejectsInvalidTables) {
  auto table = mixed_table();
  table.rows.push_back(table.rows.front());
  EXPECT_TRUE(csv.render(table).is_error());
}

TEST(Json, RendersDocument) {
  TableData table{TableSpec{"People", {{"id", ColumnType::Integer}, {"isAdmin", ColumnType::Boolean}}},
                  {RowData{{{"id", PrimitiveValue::integer(7)}, {"isAdmin", PrimitiveValue::boolean(false)}}}},
                  "id"};
  auto text = json.render(table);
  ASSERT_TRUE(text.is_ok());
  auto doc = nlohmann::json::parse(text.data());
  EXPECT_EQ(doc["table"], "People");
  EXPECT_EQ(doc["key"], "id");
  EXPECT_EQ(doc["columns"][1]["type"], "boolean");
  EXPECT_EQ(doc["rows"][0][0], "7");
  EXPECT_EQ(doc["rows"][0][1], false);
}

TEST(Json, EmptyRowsAndMissingColumns) {
  auto empty = json.parse(R"({"table":"T","key":"id","columns":[{"name":"id","type":"integer"}],"rows":[]})", "T", "id");
  ASSERT_TRUE(empty.is_ok()) << empty.message();
  EXPECT_TRUE(empty.data().rows.empty());
  EXPECT_TRUE(json.parse(R"({"table":"T","key":"id","rows":[]})", "T", "id").is_error());
}

TEST(Json, RejectsMalformedInput) {
  const std::string columns = R"("columns":[{"name":"id","type":"integer"},{"name":"b","type":"boolean"}])";
  EXPECT_TRUE(json.parse("{", "T", "id").is_error());
  EXPECT_TRUE(json.parse("[]", "T", "id").is_error());
  EXPECT_TRUE(json.parse(R"({"table":"T","key":"id",)" + columns + R"(,"rows":[["1"]]})", "T", "id").is_error());
  EXPECT_TRUE(json.parse(R"({"table":"T","key":"id",)" + columns + R"(,"rows":[[1,true]]})", "T", "id").is_error());
  EXPECT_TRUE(json.parse(R"({"table":"T","key":"id",)" + columns + R"(,"rows":[["1","true"]]})", "T", "id").is_error());
  EXPECT_TRUE(json.parse(R"({"table":"U","key":"id",)" + columns + R"(,"rows":[]})", "T", "id").is_error());
  EXPECT_TRUE(json.parse(R"({"table":"T","key":"b",)" + columns + R"(,"rows":[]})", "T", "id").is_error());
  EXPECT_TRUE(json.parse(R"({"table":"T","key":"id",)" + columns + R"(,"rows":[]})", "", "").is_ok());
}

TEST(Json, TypeErrorNamesRowAndColumn) {
  auto table = json.parse(
      R"({"table":"T","key":"id","columns":[{"name":"id","type":"integer"}],"rows":[["1"],["2.5"]]})", "T", "id");
  ASSERT_TRUE(table.is_error());
  EXPECT_NE(table.message().find("row 2, column id"), std::string::npos) << table.message();
}

TEST(Files, StoreThenLoadMixedTable) {
  TempDir dir;
  auto table = mixed_table();
  for (const Canonizer* c : {static_cast<const Canonizer*>(&csv), static_cast<const Canonizer*>(&json)}) {
    auto path = dir.path / ("mixed." + std::string(c->format()));
    ASSERT_TRUE(c->store(table, path).is_ok());
    EXPECT_EQ(c->load(path, "Mixed", "id"), ok(table)) << c->format();
    auto first = read_file(path).data();
    ASSERT_TRUE(c->store(c->load(path, "Mixed", "id").data(), path).is_ok());
    EXPECT_EQ(read_file(path).data(), first);
  }
}

TEST(Files, ErrorsNameThePath) {
  TempDir dir;
  auto missing = csv.load(dir.path / "nope.csv", "T", "id");
  ASSERT_TRUE(missing.is_error());
  EXPECT_NE(missing.message().find("nope.csv"), std::string::npos);
  ASSERT_TRUE(write_file_atomic(dir.path / "bad.csv", "id:integer\nx\n").is_ok());
  auto bad = csv.load(dir.path / "bad.csv", "T", "id");
  ASSERT_TRUE(bad.is_error());
  EXPECT_NE(bad.message().find("bad.csv"), std::string::npos);
  EXPECT_TRUE(csv.store(mixed_table(), dir.path / "no-such-dir" / "x.csv").is_error());
}

TEST(Files, AtomicWriteLeavesNoTemporaries) {
  TempDir dir;
  ASSERT_TRUE(write_file_atomic(dir.path / "a.txt", "one").is_ok());
  ASSERT_TRUE(write_file_atomic(dir.path / "a.txt", "two").is_ok());
  EXPECT_EQ(read_file(dir.path / "a.txt"), ok(std::string("two")));
  EXPECT_EQ(std::distance(std::filesystem::directory_iterator(dir.path), std::filesystem::directory_iterator{}), 1);
}

TEST(Canonizers, LookupByFormat) {
  EXPECT_EQ(canonizer_for("csv").data()->format(), "csv");
  EXPECT_EQ(canonizer_for("json").data()->format(), "json");
  EXPECT_TRUE(canonizer_for("xml").is_error());
}

TEST(Canonizers, RandomTablesRoundTripAcrossFormats) {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 100; ++i) {
    auto table = random_table(rng);
    auto csv_text = csv.render(table);
    ASSERT_TRUE(csv_text.is_ok()) << csv_text.message();
    auto from_csv = csv.parse(csv_text.data(), table.spec.name, "key");
    ASSERT_EQ(from_csv, ok(table)) << csv_text.data();
    EXPECT_EQ(csv.render(from_csv.data()), csv_text);

    auto json_text = json.render(from_csv.data());
    ASSERT_TRUE(json_text.is_ok());
    auto from_json = json.parse(json_text.data(), table.spec.name, "key");
    ASSERT_EQ(from_json, ok(table));
    EXPECT_EQ(json.render(from_json.data()), json_text);
    EXPECT_EQ(csv.render(from_json.data()), csv_text);
  }
}
