#pragma once

#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "bx/canonizer.hpp"
#include "bx/relational.hpp"
#include "bx/relational_data.hpp"
#include "bx/value_lenses.hpp"

namespace bx {

/// One column of a declarative mapping.  `data_kind` normally equals
/// `kind`; a mapping may spell it out separately (field "dataKind"), which
/// is how an incompatible pairing reaches validation.
struct MappingColumn {
  LensKind kind = LensKind::Identity;
  LensKind data_kind = LensKind::Identity;
  std::optional<std::string> left;
  std::optional<std::string> right;
  ColumnType type = ColumnType::String;
  std::optional<PrimitiveValue> default_value;

  std::string label() const { return left.value_or(right.value_or("?")); }
};

/// Declarative table data lens: two table names, the key column and one
/// entry per column, in lens order.
///
///   {"leftTable": "Students", "rightTable": "Students", "key": "StudentID",
///    "columns": [{"kind": "identity", "name": "StudentID", "type": "integer"},
///                {"kind": "rename", "left": "dob", "right": "birthDate", "type": "datetime"},
///                {"kind": "insert", "right": "BillingAddress", "type": "string", "default": ""},
///                {"kind": "delete", "left": "Major", "type": "string", "default": ""}]}
struct MappingConfig {
  std::string left_table;
  std::string right_table;
  std::string key;
  std::vector<MappingColumn> columns;
};

namespace detail {

inline Outcome<LensKind> parse_mapping_kind(const std::string& name) {
  for (auto kind : {LensKind::Identity, LensKind::Rename, LensKind::Insert, LensKind::Delete})
    if (lens_kind_name(kind) == name) return kind;
  return failure("unknown column lens kind \"" + name + "\" (expected identity, rename, insert or delete)");
}

inline Outcome<MappingColumn> parse_mapping_column(const nlohmann::json& entry, std::size_t index) {
  std::string where = "columns[" + std::to_string(index) + "]";
  if (!entry.is_object()) return failure(where + " must be an object");
  auto text = [&](const char* field) -> Outcome<std::string> {
    if (!entry.contains(field)) return failure(where + ": missing \"" + field + "\"");
    if (!entry[field].is_string()) return failure(where + ": \"" + field + "\" must be a string");
    auto value = entry[field].get<std::string>();
    if (value.empty()) return failure(where + ": \"" + field + "\" must not be empty");
    return value;
  };

  auto kind_name_text = text("kind");
  if (kind_name_text.is_error()) return kind_name_text.error();
  auto kind = parse_mapping_kind(kind_name_text.data());
  if (kind.is_error()) return failure(where + ": " + kind.message());

  std::set<std::string> allowed{"kind", "type", "dataKind"};
  MappingColumn column;
  column.kind = kind.data();
  column.data_kind = kind.data();
  switch (column.kind) {
    case LensKind::Identity: allowed.insert("name"); break;
    case LensKind::Rename: allowed.insert({"left", "right"}); break;
    case LensKind::Insert: allowed.insert({"right", "default"}); break;
    case LensKind::Delete: allowed.insert({"left", "default"}); break;
    case LensKind::Disconnect: break;
  }
  for (const auto& item : entry.items())
    if (!allowed.count(item.key()))
      return failure(where + ": field \"" + item.key() + "\" does not belong to a " + kind_name_text.data() +
                     " column");

  if (entry.contains("dataKind")) {
    auto data_text = text("dataKind");
    if (data_text.is_error()) return data_text.error();
    auto data_kind = parse_mapping_kind(data_text.data());
    if (data_kind.is_error()) return failure(where + ": " + data_kind.message());
    column.data_kind = data_kind.data();
  }

  auto type_text = text("type");
  if (type_text.is_error()) return type_text.error();
  auto type = parse_kind(type_text.data());
  if (type.is_error() || type.data() == ValueKind::Unit)
    return failure(where + ": unknown type \"" + type_text.data() + "\"");
  column.type = type.data();

  auto name_field = [&](const char* field, std::optional<std::string>& into) -> Outcome<Unit> {
    auto value = text(field);
    if (value.is_error()) return value.error();
    into = value.data();
    return Unit{};
  };
  Outcome<Unit> names = Unit{};
  switch (column.kind) {
    case LensKind::Identity:
      names = name_field("name", column.left);
      column.right = column.left;
      break;
    case LensKind::Rename:
      names = name_field("left", column.left).bind([&](Unit) { return name_field("right", column.right); });
      break;
    case LensKind::Insert: names = name_field("right", column.right); break;
    case LensKind::Delete: names = name_field("left", column.left); break;
    case LensKind::Disconnect: break;
  }
  if (names.is_error()) return names.error();

  if (column.kind == LensKind::Insert || column.kind == LensKind::Delete) {
    if (!entry.contains("default")) return failure(where + ": missing \"default\"");
    const auto& raw = entry["default"];
    Outcome<PrimitiveValue> value = failure("");
    if (raw.is_boolean() && column.type == ValueKind::Boolean) value = PrimitiveValue::boolean(raw.get<bool>());
    else if (raw.is_string()) value = parse_value(column.type, raw.get<std::string>());
    else value = failure("must be a string rendering of a " + type_text.data() + " value");
    if (value.is_error()) return failure(where + ": default " + value.message());
    column.default_value = value.data();
  }
  return column;
}

}  // namespace detail

inline Outcome<MappingConfig> parse_mapping(const std::string& text) {
  auto doc = nlohmann::json::parse(text, nullptr, false);
  if (doc.is_discarded()) return failure("mapping: malformed JSON");
  if (!doc.is_object()) return failure("mapping: top-level value must be an object");
  for (const auto& item : doc.items())
    if (item.key() != "leftTable" && item.key() != "rightTable" && item.key() != "key" && item.key() != "columns")
      return failure("mapping: unknown field \"" + item.key() + "\"");
  MappingConfig config;
  for (auto [field, into] : {std::pair<const char*, std::string*>{"leftTable", &config.left_table},
                             {"rightTable", &config.right_table},
                             {"key", &config.key}}) {
    if (!doc.contains(field) || !doc[field].is_string() || doc[field].get<std::string>().empty())
      return failure(std::string("mapping: \"") + field + "\" must be a non-empty string");
    *into = doc[field].get<std::string>();
  }
  if (!doc.contains("columns") || !doc["columns"].is_array())
    return failure("mapping: \"columns\" must be an array");
  for (std::size_t i = 0; i < doc["columns"].size(); ++i) {
    auto column = detail::parse_mapping_column(doc["columns"][i], i);
    if (column.is_error()) return failure("mapping: " + column.message());
    config.columns.push_back(column.data());
  }
  return config;
}

inline Outcome<MappingConfig> load_mapping(const std::filesystem::path& path) {
  return read_file(path).bind(parse_mapping);
}

inline ColumnLens column_lens_of(const MappingColumn& column) {
  switch (column.kind) {
    case LensKind::Identity: return ColumnLens::identity(*column.left, column.type);
    case LensKind::Rename: return ColumnLens::rename(*column.left, *column.right, column.type);
    case LensKind::Insert: return ColumnLens::insert(*column.right, column.type);
    case LensKind::Delete: return ColumnLens::remove(*column.left, column.type);
    case LensKind::Disconnect: break;
  }
  return ColumnLens::disconnect(std::nullopt, std::nullopt);
}

/// Pairs the column's structural lens with a data lens of `data_kind`.
/// Identity and rename columns copy values unchanged.
inline ColumnDataLens column_data_lens_of(const MappingColumn& column) {
  auto shape = column_lens_of(column);
  auto fallback = column.default_value.value_or(PrimitiveValue::unit());
  switch (column.data_kind) {
    case LensKind::Identity: return ColumnDataLens::identity(shape, identity_lens(column.type));
    case LensKind::Rename: return ColumnDataLens::rename(shape, identity_lens(column.type));
    case LensKind::Insert: return ColumnDataLens::insert(shape, fallback);
    case LensKind::Delete: return ColumnDataLens::remove(shape, fallback);
    case LensKind::Disconnect: break;
  }
  return ColumnDataLens::disconnect(shape, column.default_value, column.default_value);
}

inline TableLens table_lens_of(const MappingConfig& config) {
  std::vector<ColumnLens> columns;
  for (const auto& column : config.columns) columns.push_back(column_lens_of(column));
  if (config.left_table == config.right_table) return TableLens::identity(config.left_table, std::move(columns));
  return TableLens::rename(config.left_table, config.right_table, std::move(columns));
}

inline Outcome<TableDataLens> build_table_data_lens(const MappingConfig& config) {
  std::vector<ColumnDataLens> columns;
  for (const auto& column : config.columns) columns.push_back(column_data_lens_of(column));
  return make_table_data_lens(table_lens_of(config), std::move(columns), config.key);
}

struct ColumnVerdict {
  std::string column;
  std::string kind;
  std::optional<std::string> error;
};

/// One verdict per mapping column, judged on its own.
inline std::vector<ColumnVerdict> column_verdicts(const MappingConfig& config) {
  std::vector<ColumnVerdict> verdicts;
  for (const auto& column : config.columns) {
    auto checked = check_column_data_lens(column_data_lens_of(column));
    verdicts.push_back(ColumnVerdict{column.label(), std::string(lens_kind_name(column.kind)),
                                     checked.is_error() ? std::optional(checked.message()) : std::nullopt});
  }
  return verdicts;
}

}  // namespace bx
