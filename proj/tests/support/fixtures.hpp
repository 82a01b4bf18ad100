#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "bx/bx.hpp"

namespace bx::testing {

// People tables: left has address and phone, right renames dateOfBirth to
// dob, drops address and phone, and gains email.

inline TableSpec people_left_spec() {
  return TableSpec{"People",
                   {{"id", ColumnType::Integer},
                    {"firstName", ColumnType::String},
                    {"lastName", ColumnType::String},
                    {"dateOfBirth", ColumnType::DateTime},
                    {"address", ColumnType::String},
                    {"phone", ColumnType::String}}};
}

inline TableSpec people_right_spec() {
  return TableSpec{"People",
                   {{"id", ColumnType::Integer},
                    {"firstName", ColumnType::String},
                    {"lastName", ColumnType::String},
                    {"dob", ColumnType::DateTime},
                    {"email", ColumnType::String}}};
}

inline TableLens people_table_lens() {
  return table_identity_lens("People", {ColumnLens::identity("id", ColumnType::Integer),
                                        ColumnLens::identity("firstName", ColumnType::String),
                                        ColumnLens::identity("lastName", ColumnType::String),
                                        ColumnLens::rename("dateOfBirth", "dob", ColumnType::DateTime),
                                        ColumnLens::remove("address", ColumnType::String),
                                        ColumnLens::insert("email", ColumnType::String),
                                        ColumnLens::remove("phone", ColumnType::String)});
}

// Data lens over People(id, name, dob) gaining isAdmin and hoursClocked.

inline TableSpec staff_left_spec() {
  return TableSpec{"People",
                   {{"id", ColumnType::Integer}, {"name", ColumnType::String}, {"dob", ColumnType::DateTime}}};
}

inline TableSpec staff_right_spec() {
  return TableSpec{"People",
                   {{"id", ColumnType::Integer},
                    {"name", ColumnType::String},
                    {"dob", ColumnType::DateTime},
                    {"isAdmin", ColumnType::Boolean},
                    {"hoursClocked", ColumnType::Decimal}}};
}

inline std::vector<ColumnLens> staff_column_lenses() {
  return {ColumnLens::identity("id", ColumnType::Integer), ColumnLens::identity("name", ColumnType::String),
          ColumnLens::identity("dob", ColumnType::DateTime), ColumnLens::insert("isAdmin", ColumnType::Boolean),
          ColumnLens::insert("hoursClocked", ColumnType::Decimal)};
}

inline std::vector<ColumnDataLens> staff_data_lenses() {
  auto columns = staff_column_lenses();
  return {ColumnDataLens::identity(columns[0], identity_lens(ValueKind::Integer)),
          ColumnDataLens::identity(columns[1], identity_lens(ValueKind::String)),
          ColumnDataLens::identity(columns[2], identity_lens(ValueKind::DateTime)),
          ColumnDataLens::insert(columns[3], PrimitiveValue::boolean(false)),
          ColumnDataLens::insert(columns[4], PrimitiveValue::decimal(Decimal::parse("0.0").data()))};
}

inline Outcome<TableDataLens> staff_data_lens() {
  return make_table_data_lens(table_identity_lens("People", staff_column_lenses()), staff_data_lenses(), "id");
}

// Students: the academic side keeps Major and EnrollmentDate, the financial
// side keeps BillingAddress.

inline TableSpec academic_spec() {
  return TableSpec{"Students",
                   {{"StudentID", ColumnType::Integer},
                    {"FirstName", ColumnType::String},
                    {"LastName", ColumnType::String},
                    {"Email", ColumnType::String},
                    {"Major", ColumnType::String},
                    {"EnrollmentDate", ColumnType::DateTime}}};
}

inline TableSpec financial_spec() {
  return TableSpec{"Students",
                   {{"StudentID", ColumnType::Integer},
                    {"FirstName", ColumnType::String},
                    {"LastName", ColumnType::String},
                    {"Email", ColumnType::String},
                    {"BillingAddress", ColumnType::String}}};
}

inline Outcome<TableDataLens> students_data_lens() {
  std::vector<ColumnLens> columns = {ColumnLens::identity("StudentID", ColumnType::Integer),
                                     ColumnLens::identity("FirstName", ColumnType::String),
                                     ColumnLens::identity("LastName", ColumnType::String),
                                     ColumnLens::identity("Email", ColumnType::String),
                                     ColumnLens::remove("Major", ColumnType::String),
                                     ColumnLens::remove("EnrollmentDate", ColumnType::DateTime),
                                     ColumnLens::insert("BillingAddress", ColumnType::String)};
  std::vector<ColumnDataLens> data = {
      ColumnDataLens::identity(columns[0], identity_lens(ValueKind::Integer)),
      ColumnDataLens::identity(columns[1], identity_lens(ValueKind::String)),
      ColumnDataLens::identity(columns[2], identity_lens(ValueKind::String)),
      ColumnDataLens::identity(columns[3], identity_lens(ValueKind::String)),
      ColumnDataLens::remove(columns[4], PrimitiveValue::text("Undeclared")),
      ColumnDataLens::remove(columns[5], PrimitiveValue::datetime(DateTime::make(2000, 1, 1).data())),
      ColumnDataLens::insert(columns[6], PrimitiveValue::text(""))};
  return make_table_data_lens(table_identity_lens("Students", columns), data, "StudentID");
}

// ---------------------------------------------------------------------------
// Random data

inline std::string random_text(std::mt19937_64& rng, std::size_t max_length, bool awkward = true) {
  static const std::string plain = "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789 -_.";
  static const std::string tricky = ",\"\n\r:;'\\{}[]\t";
  std::string out;
  std::size_t length = rng() % (max_length + 1);
  for (std::size_t i = 0; i < length; ++i) {
    if (awkward && rng() % 6 == 0) out += tricky[rng() % tricky.size()];
    else out += plain[rng() % plain.size()];
  }
  if (awkward && rng() % 10 == 0) out += "\xc3\xa9";  // UTF-8 e-acute
  return out;
}

inline DateTime random_datetime(std::mt19937_64& rng) {
  int year = 1 + static_cast<int>(rng() % 9999);
  int month = 1 + static_cast<int>(rng() % 12);
  int day = 1 + static_cast<int>(rng() % static_cast<unsigned>(days_in_month(year, month)));
  return DateTime::make(year, month, day, static_cast<int>(rng() % 24), static_cast<int>(rng() % 60),
                        static_cast<int>(rng() % 60))
      .data();
}

inline Decimal random_decimal(std::mt19937_64& rng) {
  int scale = static_cast<int>(rng() % 5);
  auto unscaled = static_cast<std::int64_t>(rng() % 2'000'000'001) - 1'000'000'000;
  return Decimal::from_parts(unscaled, scale).data();
}

inline PrimitiveValue random_value(ValueKind kind, std::mt19937_64& rng) {
  switch (kind) {
    case ValueKind::Integer: return PrimitiveValue::integer(static_cast<std::int64_t>(rng() % 2'000'001) - 1'000'000);
    case ValueKind::Long: return PrimitiveValue::long_integer(static_cast<std::int64_t>(rng()));
    case ValueKind::Decimal: return PrimitiveValue::decimal(random_decimal(rng));
    case ValueKind::Boolean: return PrimitiveValue::boolean(rng() % 2 == 0);
    case ValueKind::DateTime: return PrimitiveValue::datetime(random_datetime(rng));
    case ValueKind::String: return PrimitiveValue::text(random_text(rng, 12));
    case ValueKind::Unit: break;
  }
  return PrimitiveValue::unit();
}

/// Fills `spec` with rows whose key column holds `keys` in order.
inline TableData table_with_keys(const TableSpec& spec, const std::string& key, const std::vector<std::int64_t>& keys,
                                 std::mt19937_64& rng) {
  TableData table{spec, {}, key};
  for (auto k : keys) {
    RowData row;
    for (const auto& column : spec.columns) {
      PrimitiveValue value = column.name == key ? (column.type == ValueKind::Long ? PrimitiveValue::long_integer(k)
                                                                                   : PrimitiveValue::integer(k))
                                                : random_value(column.type, rng);
      row.cells.push_back(ColumnData{column.name, value});
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

inline std::vector<std::int64_t> random_keys(std::mt19937_64& rng, std::size_t max_rows) {
  std::set<std::int64_t> seen;
  std::vector<std::int64_t> keys;
  std::size_t n = rng() % (max_rows + 1);
  while (keys.size() < n) {
    auto k = static_cast<std::int64_t>(rng() % 1000);
    if (seen.insert(k).second) keys.push_back(k);
  }
  return keys;
}

/// A random table with a random schema; the first column is an integer key.
inline TableData random_table(std::mt19937_64& rng) {
  TableSpec spec{"T" + std::to_string(rng() % 100), {{"key", ValueKind::Integer}}};
  std::size_t extra = rng() % 6;
  for (std::size_t i = 0; i < extra; ++i) {
    auto kind = kSerializableKinds[rng() % std::size(kSerializableKinds)];
    std::string name = "c" + std::to_string(i);
    if (rng() % 4 == 0) name += (rng() % 2 ? ",x" : " y\"");
    spec.columns.push_back(ColumnSpec{name, kind});
  }
  return table_with_keys(spec, "key", random_keys(rng, 8), rng);
}

// ---------------------------------------------------------------------------
// Probes for comparing column lenses function by function.

inline std::vector<MaybeColumn> column_probes(const std::string& name, ColumnType type) {
  auto other = type == ColumnType::String ? ColumnType::Integer : ColumnType::String;
  return {std::nullopt, ColumnSpec{name, type}, ColumnSpec{name, other}, ColumnSpec{name + "_other", type}};
}

/// Random table spec over a small pool of column names, so that probe tables
/// both match and mismatch a lens's expectations.
inline TableSpec random_probe_spec(std::mt19937_64& rng, const std::string& table_name) {
  static const std::vector<ColumnSpec> pool = {{"id", ColumnType::Integer},      {"n", ColumnType::String},
                                               {"n", ColumnType::Integer},       {"name", ColumnType::String},
                                               {"stamp", ColumnType::DateTime},  {"extra", ColumnType::Boolean}};
  TableSpec spec{rng() % 8 == 0 ? table_name + "X" : table_name, {}};
  std::set<std::string> names;
  for (const auto& column : pool)
    if (rng() % 2 == 0 && names.insert(column.name).second) spec.columns.push_back(column);
  if (rng() % 2) std::shuffle(spec.columns.begin(), spec.columns.end(), rng);
  return spec;
}

}  // namespace bx::testing
