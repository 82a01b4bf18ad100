#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bx/lens.hpp"
#include "bx/relational.hpp"
#include "bx/value.hpp"
#include "bx/value_lenses.hpp"

namespace bx {

struct ColumnData {
  std::string column;
  PrimitiveValue value;

  friend bool operator==(const ColumnData&, const ColumnData&) = default;
};

/// One row; cells follow the owning table's column order.
struct RowData {
  std::vector<ColumnData> cells;

  const PrimitiveValue* find(const std::string& column) const {
    for (const auto& cell : cells)
      if (cell.column == column) return &cell.value;
    return nullptr;
  }

  friend bool operator==(const RowData&, const RowData&) = default;
};

/// A table's structure together with its rows.  Rows are aligned across
/// tables by the value in `key_column`.
struct TableData {
  TableSpec spec;
  std::vector<RowData> rows;
  std::string key_column;

  friend bool operator==(const TableData&, const TableData&) = default;
};

/// Key values in row order.
inline std::vector<PrimitiveValue> key_values(const TableData& table) {
  std::vector<PrimitiveValue> keys;
  auto index = table.spec.index_of(table.key_column);
  if (!index) return keys;
  for (const auto& row : table.rows) keys.push_back(row.cells.at(*index).value);
  return keys;
}

inline std::string describe_key(const PrimitiveValue& key) { return render_value(key); }

/// Checks every TableData invariant: valid spec, key column present, each
/// row aligned with the spec, cell kinds matching column types (no UNIT
/// cells), and distinct key values.
inline Outcome<Unit> validate_table_data(const TableData& table) {
  auto spec_ok = validate_table_spec(table.spec);
  if (spec_ok.is_error()) return spec_ok;
  auto key_index = table.spec.index_of(table.key_column);
  if (!key_index)
    return failure("table " + table.spec.name + ": key column " + table.key_column + " does not exist");
  std::map<std::string, std::size_t> seen;
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    const auto& row = table.rows[r];
    if (row.cells.size() != table.spec.columns.size())
      return failure("table " + table.spec.name + ": row " + std::to_string(r + 1) + " has " +
                     std::to_string(row.cells.size()) + " cells, expected " +
                     std::to_string(table.spec.columns.size()));
    for (std::size_t c = 0; c < row.cells.size(); ++c) {
      const auto& column = table.spec.columns[c];
      const auto& cell = row.cells[c];
      if (cell.column != column.name)
        return failure("table " + table.spec.name + ": row " + std::to_string(r + 1) + " cell " +
                       std::to_string(c + 1) + " is " + cell.column + ", expected " + column.name);
      if (cell.value.kind() != column.type)
        return failure("table " + table.spec.name + ": row " + std::to_string(r + 1) + ", column " +
                       column.name + " holds a " + std::string(kind_name(cell.value.kind())) + " value, expected " +
                       std::string(kind_name(column.type)));
    }
    auto key = describe_key(row.cells[*key_index].value);
    auto [it, inserted] = seen.emplace(key, r);
    if (!inserted)
      return failure("table " + table.spec.name + ": duplicate key " + key + " in rows " +
                     std::to_string(it->second + 1) + " and " + std::to_string(r + 1));
  }
  return Unit{};
}

/// Structural column lens paired with its data behaviour.
///
/// identity/rename carry a value lens; insert/delete carry the default used
/// when a value has to be invented; disconnect carries one default per side
/// that has the column.  The data kind is fixed at construction and must
/// equal the structural kind (checked by make_table_data_lens).
class ColumnDataLens {
 public:
  static ColumnDataLens identity(ColumnLens structural, ValueLens value) {
    return ColumnDataLens(LensKind::Identity, std::move(structural), std::move(value), std::nullopt, std::nullopt);
  }
  static ColumnDataLens rename(ColumnLens structural, ValueLens value) {
    return ColumnDataLens(LensKind::Rename, std::move(structural), std::move(value), std::nullopt, std::nullopt);
  }
  static ColumnDataLens insert(ColumnLens structural, PrimitiveValue default_value) {
    return ColumnDataLens(LensKind::Insert, std::move(structural), std::nullopt, std::nullopt,
                          std::move(default_value));
  }
  static ColumnDataLens remove(ColumnLens structural, PrimitiveValue default_value) {
    return ColumnDataLens(LensKind::Delete, std::move(structural), std::nullopt, std::move(default_value),
                          std::nullopt);
  }
  static ColumnDataLens disconnect(ColumnLens structural, std::optional<PrimitiveValue> left_default,
                                   std::optional<PrimitiveValue> right_default) {
    return ColumnDataLens(LensKind::Disconnect, std::move(structural), std::nullopt, std::move(left_default),
                          std::move(right_default));
  }

  LensKind kind() const noexcept { return kind_; }
  const ColumnLens& structural() const noexcept { return structural_; }
  const std::optional<ValueLens>& value_lens() const noexcept { return value_; }
  const std::optional<PrimitiveValue>& left_default() const noexcept { return left_default_; }
  const std::optional<PrimitiveValue>& right_default() const noexcept { return right_default_; }

 private:
  ColumnDataLens(LensKind kind, ColumnLens structural, std::optional<ValueLens> value,
                 std::optional<PrimitiveValue> left_default, std::optional<PrimitiveValue> right_default)
      : kind_(kind),
        structural_(std::move(structural)),
        value_(std::move(value)),
        left_default_(std::move(left_default)),
        right_default_(std::move(right_default)) {}

  LensKind kind_;
  ColumnLens structural_;
  std::optional<ValueLens> value_;
  std::optional<PrimitiveValue> left_default_;
  std::optional<PrimitiveValue> right_default_;
};

/// Checks one column data lens on its own: structural validity, matching
/// structural and data kinds, and defaults present with the column's type.
inline Outcome<Unit> check_column_data_lens(const ColumnDataLens& column) {
  const auto& shape = column.structural();
  std::string label = "column " + shape.left_name().value_or(shape.right_name().value_or("?"));
  if (shape.kind() != column.kind())
    return failure(label + ": a structural " + std::string(lens_kind_name(shape.kind())) +
                   " lens cannot be combined with a data " + std::string(lens_kind_name(column.kind())) +
                   " lens; structural and data lens kinds must match");
  auto check_default = [&](const std::optional<PrimitiveValue>& value, const std::optional<ColumnType>& type,
                           const char* side) -> Outcome<Unit> {
    if (!type) return Unit{};
    if (!value) return failure(label + ": missing " + side + " default value");
    if (value->kind() != *type)
      return failure(label + ": " + side + " default is a " + std::string(kind_name(value->kind())) +
                     " value, column type is " + std::string(kind_name(*type)));
    return Unit{};
  };
  switch (column.kind()) {
    case LensKind::Identity:
    case LensKind::Rename:
      if (!column.value_lens()) return failure(label + ": missing value lens");
      return Unit{};
    case LensKind::Insert: return check_default(column.right_default(), shape.right_type(), "right");
    case LensKind::Delete: return check_default(column.left_default(), shape.left_type(), "left");
    case LensKind::Disconnect:
      return check_default(column.left_default(), shape.left_type(), "left").bind([&](Unit) {
        return check_default(column.right_default(), shape.right_type(), "right");
      });
  }
  return Unit{};
}

using TableDataSymmetricLens = SymmetricLens<TableData, TableData>;

class TableDataLens;
Outcome<TableDataLens> make_table_data_lens(TableLens structural, std::vector<ColumnDataLens> columns,
                                            std::string key_column);

/// Structured data lens over whole tables.
///
/// create: every source row is transformed cell by cell.
/// put:    rows are aligned by key.  Matched rows are put cell by cell,
///         unmatched source rows are created, and target rows without a
///         source counterpart are kept (merge semantics).  Output order is
///         source order followed by the kept target rows in target order.
///
/// With equal key sets on both sides the four round-tripping laws hold;
/// with different key sets the merge intentionally keeps extra rows.
class TableDataLens {
 public:
  const TableLens& structural() const noexcept { return structural_; }
  const std::vector<ColumnDataLens>& columns() const noexcept { return columns_; }
  const std::string& key_column() const noexcept { return key_; }

  Outcome<TableData> create_right(const TableData& left) const { return transform(Side::Right, left, nullptr); }
  Outcome<TableData> create_left(const TableData& right) const { return transform(Side::Left, right, nullptr); }
  Outcome<TableData> put_right(const TableData& left, const TableData& right) const {
    return transform(Side::Right, left, &right);
  }
  Outcome<TableData> put_left(const TableData& right, const TableData& left) const {
    return transform(Side::Left, right, &left);
  }

  TableDataSymmetricLens lens() const {
    auto self = *this;
    return TableDataSymmetricLens([self](const TableData& x) { return self.create_right(x); },
                                  [self](const TableData& y) { return self.create_left(y); },
                                  [self](const TableData& x, const TableData& y) { return self.put_right(x, y); },
                                  [self](const TableData& y, const TableData& x) { return self.put_left(y, x); });
  }

 private:
  friend Outcome<TableDataLens> make_table_data_lens(TableLens, std::vector<ColumnDataLens>, std::string);

  enum class Side { Left, Right };

  TableDataLens(TableLens structural, std::vector<ColumnDataLens> columns, std::string key)
      : structural_(std::move(structural)), columns_(std::move(columns)), key_(std::move(key)) {}

  static const std::optional<std::string>& name_on(const ColumnDataLens& column, Side side) {
    return side == Side::Left ? column.structural().left_name() : column.structural().right_name();
  }
  static const std::optional<PrimitiveValue>& default_on(const ColumnDataLens& column, Side side) {
    return side == Side::Left ? column.left_default() : column.right_default();
  }

  const ColumnDataLens& key_lens() const {
    for (const auto& column : columns_)
      if (column.structural().left_name() == key_) return column;
    return columns_.front();  // unreachable after validation
  }

  /// Key of a source row as it will appear on the target side.
  Outcome<PrimitiveValue> target_key(Side toward, const PrimitiveValue& source_key) const {
    const auto& value = *key_lens().value_lens();
    return toward == Side::Right ? value.create_right(source_key) : value.create_left(source_key);
  }

  /// Cell for one column going toward `toward`; `existing` is the matched
  /// target row, if any.  Returns nullopt when the column does not exist on
  /// the target side.
  Outcome<std::optional<PrimitiveValue>> cell(const ColumnDataLens& column, Side toward, const RowData& source,
                                              const RowData* existing) const {
    Side from = toward == Side::Right ? Side::Left : Side::Right;
    const auto& target_name = name_on(column, toward);
    if (!target_name) return std::optional<PrimitiveValue>{};
    const PrimitiveValue* current = existing ? existing->find(*target_name) : nullptr;

    if (column.kind() == LensKind::Identity || column.kind() == LensKind::Rename) {
      const PrimitiveValue* value = source.find(*name_on(column, from));
      if (!value) return failure("source column " + *name_on(column, from) + " is missing");
      const auto& lens = *column.value_lens();
      auto mapped = toward == Side::Right
                        ? (current ? lens.put_right(*value, *current) : lens.create_right(*value))
                        : (current ? lens.put_left(*value, *current) : lens.create_left(*value));
      return mapped.map([](PrimitiveValue v) { return std::optional<PrimitiveValue>(std::move(v)); });
    }
    // insert, delete and disconnect: the target side keeps its own data.
    if (current) return std::optional<PrimitiveValue>(*current);
    const auto& fallback = default_on(column, toward);
    if (!fallback) return failure("no default value for column " + *target_name);
    return std::optional<PrimitiveValue>(*fallback);
  }

  Outcome<RowData> row(Side toward, const TableSpec& target_spec, const RowData& source,
                       const RowData* existing, const std::string& key_text) const {
    RowData out;
    for (const auto& column : columns_) {
      auto value = cell(column, toward, source, existing);
      if (value.is_error())
        return failure("row with key " + key_text + ", column " +
                       name_on(column, toward).value_or(name_on(column, toward == Side::Right ? Side::Left : Side::Right)
                                                            .value_or("?")) +
                       ": " + value.message());
      if (!value.data()) continue;
      const auto& name = *name_on(column, toward);
      const auto* spec = target_spec.find(name);
      if (spec && value.data()->kind() != spec->type)
        return failure("row with key " + key_text + ", column " + name + ": produced a " +
                       std::string(kind_name(value.data()->kind())) + " value for a " +
                       std::string(kind_name(spec->type)) + " column");
      out.cells.push_back(ColumnData{name, *value.data()});
    }
    return out;
  }

  /// Re-projects a kept target row onto `spec`; columns it lacks take the
  /// lens default for that side.
  Outcome<RowData> reshape(Side side, const TableSpec& spec, const RowData& kept, const std::string& key_text) const {
    RowData out;
    for (const auto& column : spec.columns) {
      if (const auto* value = kept.find(column.name)) {
        out.cells.push_back(ColumnData{column.name, *value});
        continue;
      }
      const ColumnDataLens* owner = nullptr;
      for (const auto& c : columns_)
        if (name_on(c, side) == column.name) owner = &c;
      if (!owner || !default_on(*owner, side))
        return failure("row with key " + key_text + ": kept row has no value for column " + column.name);
      out.cells.push_back(ColumnData{column.name, *default_on(*owner, side)});
    }
    return out;
  }

  Outcome<TableData> transform(Side toward, const TableData& source, const TableData* target) const {
    Side from = toward == Side::Right ? Side::Left : Side::Right;
    const char* from_label = from == Side::Left ? "left" : "right";
    const char* to_label = toward == Side::Left ? "left" : "right";

    auto valid = validate_table_data(source);
    if (valid.is_error()) return failure(std::string(from_label) + " table: " + valid.message());
    if (source.key_column != key_)
      return failure(std::string(from_label) + " table is keyed by " + source.key_column + ", lens by " + key_);
    if (target) {
      auto valid_target = validate_table_data(*target);
      if (valid_target.is_error()) return failure(std::string(to_label) + " table: " + valid_target.message());
      if (target->key_column != key_)
        return failure(std::string(to_label) + " table is keyed by " + target->key_column + ", lens by " + key_);
    }

    auto structure = structural_.lens();
    auto spec = toward == Side::Right
                    ? (target ? structure.put_right(source.spec, target->spec) : structure.create_right(source.spec))
                    : (target ? structure.put_left(source.spec, target->spec) : structure.create_left(source.spec));
    if (spec.is_error()) return spec.error();

    TableData out{spec.data(), {}, key_};
    std::size_t source_key = *source.spec.index_of(key_);
    std::map<std::string, std::size_t> target_rows;
    if (target) {
      std::size_t target_key_index = *target->spec.index_of(key_);
      for (std::size_t r = 0; r < target->rows.size(); ++r)
        target_rows.emplace(describe_key(target->rows[r].cells[target_key_index].value), r);
    }

    std::vector<bool> matched(target ? target->rows.size() : 0, false);
    for (const auto& source_row : source.rows) {
      const auto& key_value = source_row.cells[source_key].value;
      std::string key_text = describe_key(key_value);
      const RowData* existing = nullptr;
      if (target) {
        auto mapped_key = target_key(toward, key_value);
        if (mapped_key.is_error()) return failure("row with key " + key_text + ", column " + key_ + ": " + mapped_key.message());
        auto it = target_rows.find(describe_key(mapped_key.data()));
        if (it != target_rows.end()) {
          if (matched[it->second])
            return failure("row with key " + key_text + ": several " + std::string(from_label) +
                           " rows map to the same " + to_label + " key");
          matched[it->second] = true;
          existing = &target->rows[it->second];
        }
      }
      auto produced = row(toward, out.spec, source_row, existing, key_text);
      if (produced.is_error()) return produced.error();
      out.rows.push_back(std::move(produced).data());
    }
    if (target) {
      std::size_t target_key_index = *target->spec.index_of(key_);
      for (std::size_t r = 0; r < target->rows.size(); ++r) {
        if (matched[r]) continue;
        const auto& kept = target->rows[r];
        if (out.spec == target->spec) {
          out.rows.push_back(kept);
          continue;
        }
        auto reshaped = reshape(toward, out.spec, kept, describe_key(kept.cells[target_key_index].value));
        if (reshaped.is_error()) return reshaped.error();
        out.rows.push_back(std::move(reshaped).data());
      }
    }
    auto result_ok = validate_table_data(out);
    if (result_ok.is_error()) return failure("produced " + std::string(to_label) + " table: " + result_ok.message());
    return out;
  }

  TableLens structural_;
  std::vector<ColumnDataLens> columns_;
  std::string key_;
};

/// Pairs a structural table lens with column data lenses.
///
/// Rejects: a data lens whose kind differs from its structural lens (the
/// structural kinds are fixed, data lenses only supply value lenses or
/// defaults), data lenses that do not follow the table's column lenses one
/// to one, missing or mistyped defaults, and a key column that is not
/// covered by an identity data lens.
inline Outcome<TableDataLens> make_table_data_lens(TableLens structural, std::vector<ColumnDataLens> columns,
                                                   std::string key_column) {
  auto structural_ok = structural.validate();
  if (structural_ok.is_error()) return structural_ok.error();
  if (structural.kind() != TableLensKind::Identity && structural.kind() != TableLensKind::Rename)
    return failure("table data lenses need a table present on both sides");
  if (columns.size() != structural.columns().size())
    return failure("table data lens has " + std::to_string(columns.size()) + " column data lenses for " +
                   std::to_string(structural.columns().size()) + " column lenses");

  for (std::size_t i = 0; i < columns.size(); ++i) {
    const auto& shape = columns[i].structural();
    if (!(shape == structural.columns()[i]))
      return failure("column " + shape.left_name().value_or(shape.right_name().value_or("?")) + ": data lens " +
                     std::to_string(i + 1) + " does not use the table's column lens at the same position");
    auto column_ok = check_column_data_lens(columns[i]);
    if (column_ok.is_error()) return column_ok.error();
  }

  bool key_covered = false;
  for (const auto& column : columns)
    if (column.kind() == LensKind::Identity && column.structural().left_name() == key_column) key_covered = true;
  if (!key_covered) return failure("key column " + key_column + " must be covered by an identity column data lens");

  return TableDataLens(std::move(structural), std::move(columns), std::move(key_column));
}

/// Both sides after a full synchronization: right' = putR(left, right),
/// then left' = putL(right', left).
struct SyncResult {
  TableData left;
  TableData right;
};

inline Outcome<SyncResult> full_sync(const TableDataLens& lens, const TableData& left, const TableData& right) {
  return lens.put_right(left, right).bind([&](const TableData& updated_right) {
    return lens.put_left(updated_right, left).map([&](TableData updated_left) {
      return SyncResult{std::move(updated_left), updated_right};
    });
  });
}

}  // namespace bx
