#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "bx/lens.hpp"
#include "bx/value.hpp"

namespace bx {

struct ColumnSpec {
  std::string name;
  ColumnType type = ColumnType::String;

  friend bool operator==(const ColumnSpec&, const ColumnSpec&) = default;
};

/// A table: name plus ordered, uniquely named columns.
struct TableSpec {
  std::string name;
  std::vector<ColumnSpec> columns;

  const ColumnSpec* find(const std::string& column) const {
    auto it = std::find_if(columns.begin(), columns.end(),
                           [&](const ColumnSpec& c) { return c.name == column; });
    return it == columns.end() ? nullptr : &*it;
  }

  std::optional<std::size_t> index_of(const std::string& column) const {
    for (std::size_t i = 0; i < columns.size(); ++i)
      if (columns[i].name == column) return i;
    return std::nullopt;
  }

  friend bool operator==(const TableSpec&, const TableSpec&) = default;
};

/// Checks the TableSpec invariants: non-empty names, distinct column names,
/// no UNIT columns (deleted columns are absent rather than materialized).
inline Outcome<Unit> validate_table_spec(const TableSpec& spec) {
  if (spec.name.empty()) return failure("table name must not be empty");
  std::set<std::string> seen;
  for (const auto& column : spec.columns) {
    if (column.name.empty()) return failure("table " + spec.name + ": empty column name");
    if (column.type == ColumnType::Unit)
      return failure("table " + spec.name + ": column " + column.name + " has UNIT type");
    if (!seen.insert(column.name).second)
      return failure("table " + spec.name + ": duplicate column " + column.name);
  }
  return Unit{};
}

/// Absent means the column does not exist on that side.
using MaybeColumn = std::optional<ColumnSpec>;
using ColumnStructureLens = SymmetricLens<MaybeColumn, MaybeColumn>;

enum class LensKind { Identity, Rename, Insert, Delete, Disconnect };

inline constexpr LensKind kAllLensKinds[] = {LensKind::Identity, LensKind::Rename, LensKind::Insert,
                                             LensKind::Delete, LensKind::Disconnect};

inline std::string_view lens_kind_name(LensKind kind) {
  switch (kind) {
    case LensKind::Identity: return "identity";
    case LensKind::Rename: return "rename";
    case LensKind::Insert: return "insert";
    case LensKind::Delete: return "delete";
    case LensKind::Disconnect: return "disconnect";
  }
  return "?";
}

namespace detail {

inline std::string describe(const MaybeColumn& column) {
  if (!column) return "<absent>";
  return column->name + ":" + std::string(kind_name(column->type));
}

/// The column seen on one side must be the declared one (name and type).
inline Outcome<Unit> expect_column(const MaybeColumn& actual, const MaybeColumn& declared,
                                   const std::string& lens, const char* side) {
  if (declared.has_value() != actual.has_value() ||
      (declared && (declared->name != actual->name || declared->type != actual->type)))
    return failure(lens + ": " + side + " column " + describe(actual) + " does not match declared " +
                   describe(declared));
  return Unit{};
}

inline Outcome<Unit> expect_named(const MaybeColumn& actual, const std::string& name,
                                  const std::string& lens, const char* side) {
  if (!actual) return failure(lens + ": " + side + " column " + name + " is absent");
  if (actual->name != name)
    return failure(lens + ": expected " + side + " column " + name + ", got " + actual->name);
  return Unit{};
}

/// Target column kept by a put: the existing one when it carries the
/// declared name, else the declared metadata.
inline Outcome<MaybeColumn> keep_target(const MaybeColumn& target, const MaybeColumn& declared,
                                        const std::string& lens, const char* side) {
  if (!declared) {
    if (target) return failure(lens + ": " + side + " column " + describe(target) + " should be absent");
    return MaybeColumn{};
  }
  if (target && target->name != declared->name)
    return failure(lens + ": expected " + side + " column " + declared->name + ", got " + target->name);
  return target ? target : declared;
}

}  // namespace detail

/// Structural column lens, kept as data (kind + names + declared types) so
/// that data lenses and configuration can inspect it.  `lens()` yields the
/// executable symmetric lens over possibly-absent columns.
class ColumnLens {
 public:
  static ColumnLens identity(std::string name, std::optional<ColumnType> type = std::nullopt) {
    return ColumnLens(LensKind::Identity, name, name, type, type);
  }
  static ColumnLens rename(std::string left_name, std::string right_name,
                           std::optional<ColumnType> type = std::nullopt) {
    return ColumnLens(LensKind::Rename, std::move(left_name), std::move(right_name), type, type);
  }
  /// Column only exists on the right.
  static ColumnLens insert(std::string right_name, ColumnType type) {
    return ColumnLens(LensKind::Insert, std::nullopt, std::move(right_name), std::nullopt, type);
  }
  /// Column only exists on the left.
  static ColumnLens remove(std::string left_name, ColumnType type) {
    return ColumnLens(LensKind::Delete, std::move(left_name), std::nullopt, type, std::nullopt);
  }
  /// Each side maps independently; either may be absent.
  static ColumnLens disconnect(MaybeColumn left, MaybeColumn right) {
    std::optional<std::string> left_name, right_name;
    std::optional<ColumnType> left_type, right_type;
    if (left) left_name = left->name, left_type = left->type;
    if (right) right_name = right->name, right_type = right->type;
    return ColumnLens(LensKind::Disconnect, left_name, right_name, left_type, right_type);
  }

  LensKind kind() const noexcept { return kind_; }
  const std::optional<std::string>& left_name() const noexcept { return left_name_; }
  const std::optional<std::string>& right_name() const noexcept { return right_name_; }
  const std::optional<ColumnType>& left_type() const noexcept { return left_type_; }
  const std::optional<ColumnType>& right_type() const noexcept { return right_type_; }

  std::string describe() const {
    std::string text = std::string(lens_kind_name(kind_)) + "(";
    text += left_name_.value_or("-");
    text += " => ";
    text += right_name_.value_or("-");
    return text + ")";
  }

  ColumnStructureLens lens() const {
    switch (kind_) {
      case LensKind::Identity:
      case LensKind::Rename: return copy_lens();
      case LensKind::Insert: return insert_lens();
      case LensKind::Delete: return delete_lens();
      case LensKind::Disconnect: return disconnect_lens();
    }
    return disconnect_lens();
  }

  /// The column this lens declares on each side; an untyped identity or
  /// rename reports string.
  MaybeColumn declared_left() const {
    if (!left_name_) return std::nullopt;
    return ColumnSpec{*left_name_, left_type_.value_or(ColumnType::String)};
  }
  MaybeColumn declared_right() const {
    if (!right_name_) return std::nullopt;
    return ColumnSpec{*right_name_, right_type_.value_or(ColumnType::String)};
  }

  friend bool operator==(const ColumnLens&, const ColumnLens&) = default;

 private:
  ColumnLens(LensKind kind, std::optional<std::string> left_name, std::optional<std::string> right_name,
             std::optional<ColumnType> left_type, std::optional<ColumnType> right_type)
      : kind_(kind),
        left_name_(std::move(left_name)),
        right_name_(std::move(right_name)),
        left_type_(left_type),
        right_type_(right_type) {}

  /// identity and rename: copy the column, swapping the name.
  ColumnStructureLens copy_lens() const {
    auto name = describe();
    std::string left = *left_name_;
    std::string right = *right_name_;
    std::optional<ColumnType> type = left_type_;
    auto carry = [name, type](const MaybeColumn& from, const std::string& expected, const std::string& to,
                             const char* side) -> Outcome<MaybeColumn> {
      auto named = detail::expect_named(from, expected, name, side);
      if (named.is_error()) return named.error();
      if (type && from->type != *type)
        return failure(name + ": " + side + " column " + from->name + " has type " +
                       std::string(kind_name(from->type)) + ", declared " + std::string(kind_name(*type)));
      return MaybeColumn(ColumnSpec{to, from->type});
    };
    auto right_of = [=](const MaybeColumn& x) { return carry(x, left, right, "left"); };
    auto left_of = [=](const MaybeColumn& y) { return carry(y, right, left, "right"); };
    return ColumnStructureLens(
        right_of, left_of, [=](const MaybeColumn& x, const MaybeColumn&) { return right_of(x); },
        [=](const MaybeColumn& y, const MaybeColumn&) { return left_of(y); });
  }

  /// Left column present, right absent.
  ColumnStructureLens delete_lens() const {
    auto name = describe();
    ColumnSpec declared{*left_name_, *left_type_};
    auto check_left = [=](const MaybeColumn& x) { return detail::expect_column(x, declared, name, "left"); };
    auto check_right = [=](const MaybeColumn& y) -> Outcome<Unit> {
      if (y) return failure(name + ": right column " + y->name + " should be absent");
      return Unit{};
    };
    return ColumnStructureLens(
        [=](const MaybeColumn& x) { return check_left(x).map([](Unit) { return MaybeColumn{}; }); },
        [=](const MaybeColumn& y) { return check_right(y).map([&](Unit) { return MaybeColumn(declared); }); },
        [=](const MaybeColumn& x, const MaybeColumn& y) {
          return check_left(x).bind([&](Unit) { return check_right(y); }).map([](Unit) { return MaybeColumn{}; });
        },
        [=](const MaybeColumn& y, const MaybeColumn& x) -> Outcome<MaybeColumn> {
          auto ok_right = check_right(y);
          if (ok_right.is_error()) return ok_right.error();
          // the original left column comes back as it was
          if (!x) return MaybeColumn(declared);
          if (x->name != declared.name)
            return failure(name + ": expected left column " + declared.name + ", got " + x->name);
          return x;
        });
  }

  /// Right column present, left absent.
  ColumnStructureLens insert_lens() const {
    auto name = describe();
    ColumnSpec declared{*right_name_, *right_type_};
    auto check_right = [=](const MaybeColumn& y) { return detail::expect_column(y, declared, name, "right"); };
    auto check_left = [=](const MaybeColumn& x) -> Outcome<Unit> {
      if (x) return failure(name + ": left column " + x->name + " should be absent");
      return Unit{};
    };
    return ColumnStructureLens(
        [=](const MaybeColumn& x) { return check_left(x).map([&](Unit) { return MaybeColumn(declared); }); },
        [=](const MaybeColumn& y) { return check_right(y).map([](Unit) { return MaybeColumn{}; }); },
        [=](const MaybeColumn& x, const MaybeColumn& y) -> Outcome<MaybeColumn> {
          auto ok_left = check_left(x);
          if (ok_left.is_error()) return ok_left.error();
          if (!y) return MaybeColumn(declared);
          if (y->name != declared.name)
            return failure(name + ": expected right column " + declared.name + ", got " + y->name);
          return y;
        },
        [=](const MaybeColumn& y, const MaybeColumn& x) {
          return check_right(y).bind([&](Unit) { return check_left(x); }).map([](Unit) { return MaybeColumn{}; });
        });
  }

  /// Both sides declared independently; each side is validated against its
  /// own declaration and the opposite side is produced from metadata on
  /// create, or kept from the target on put.
  ColumnStructureLens disconnect_lens() const {
    auto name = describe();
    MaybeColumn left = declared_left();
    MaybeColumn right = declared_right();
    auto check_left = [=](const MaybeColumn& x) { return detail::expect_column(x, left, name, "left"); };
    auto check_right = [=](const MaybeColumn& y) { return detail::expect_column(y, right, name, "right"); };
    return ColumnStructureLens(
        [=](const MaybeColumn& x) { return check_left(x).map([&](Unit) { return right; }); },
        [=](const MaybeColumn& y) { return check_right(y).map([&](Unit) { return left; }); },
        [=](const MaybeColumn& x, const MaybeColumn& y) {
          return check_left(x).bind([&](Unit) { return detail::keep_target(y, right, name, "right"); });
        },
        [=](const MaybeColumn& y, const MaybeColumn& x) {
          return check_right(y).bind([&](Unit) { return detail::keep_target(x, left, name, "left"); });
        });
  }

  LensKind kind_;
  std::optional<std::string> left_name_;
  std::optional<std::string> right_name_;
  std::optional<ColumnType> left_type_;
  std::optional<ColumnType> right_type_;
};

enum class Direction { LeftToRight, RightToLeft };

/// Applies one column lens in the given direction.  Without a target this
/// is create; with one it is put.
inline Outcome<MaybeColumn> column_lens_apply(const ColumnLens& lens, Direction direction,
                                              const MaybeColumn& source,
                                              const std::optional<MaybeColumn>& target = std::nullopt) {
  auto executable = lens.lens();
  if (direction == Direction::LeftToRight)
    return target ? executable.put_right(source, *target) : executable.create_right(source);
  return target ? executable.put_left(source, *target) : executable.create_left(source);
}

// ---------------------------------------------------------------------------
// Table lenses

using TableStructureLens = SymmetricLens<TableSpec, TableSpec>;
using MaybeTable = std::optional<TableSpec>;

enum class TableLensKind { Identity, Rename, Insert, Delete };

/// Table lens: a table-level kind plus the column lenses it aggregates.
///
/// Every column of an input table must be claimed by exactly one column
/// lens on that side; unclaimed columns are an error.  Output columns
/// follow the column-lens order.
class TableLens {
 public:
  static TableLens identity(std::string name, std::vector<ColumnLens> columns) {
    return TableLens(TableLensKind::Identity, name, name, std::move(columns));
  }
  static TableLens rename(std::string left_name, std::string right_name, std::vector<ColumnLens> columns) {
    return TableLens(TableLensKind::Rename, std::move(left_name), std::move(right_name), std::move(columns));
  }
  /// Table only exists on the right; `columns` must all be insert lenses.
  static TableLens insert(std::string right_name, std::vector<ColumnLens> columns) {
    return TableLens(TableLensKind::Insert, std::nullopt, std::move(right_name), std::move(columns));
  }
  /// Table only exists on the left; `columns` must all be delete lenses.
  static TableLens remove(std::string left_name, std::vector<ColumnLens> columns) {
    return TableLens(TableLensKind::Delete, std::move(left_name), std::nullopt, std::move(columns));
  }

  TableLensKind kind() const noexcept { return kind_; }
  const std::optional<std::string>& left_name() const noexcept { return left_name_; }
  const std::optional<std::string>& right_name() const noexcept { return right_name_; }
  const std::vector<ColumnLens>& columns() const noexcept { return columns_; }

  /// Structural consistency of the lens itself.
  Outcome<Unit> validate() const {
    const std::string label = "table lens " + left_name_.value_or(right_name_.value_or("?"));
    if ((kind_ == TableLensKind::Identity || kind_ == TableLensKind::Rename) && columns_.empty())
      return failure(label + ": needs at least one column lens");
    if (kind_ == TableLensKind::Identity && left_name_ != right_name_)
      return failure(label + ": identity requires equal names");
    std::set<std::string> lefts, rights;
    for (const auto& column : columns_) {
      if (kind_ == TableLensKind::Insert && column.kind() != LensKind::Insert)
        return failure(label + ": inserted table may only hold insert column lenses");
      if (kind_ == TableLensKind::Delete && column.kind() != LensKind::Delete)
        return failure(label + ": deleted table may only hold delete column lenses");
      if (column.left_name() && !lefts.insert(*column.left_name()).second)
        return failure(label + ": left column " + *column.left_name() + " covered twice");
      if (column.right_name() && !rights.insert(*column.right_name()).second)
        return failure(label + ": right column " + *column.right_name() + " covered twice");
    }
    return Unit{};
  }

  /// Executable lens for tables present on both sides (identity/rename).
  TableStructureLens lens() const {
    auto self = *this;
    auto present = [self]() -> Outcome<Unit> {
      if (self.kind_ == TableLensKind::Insert || self.kind_ == TableLensKind::Delete)
        return failure("table lens for " + self.left_name_.value_or(*self.right_name_) +
                       " maps a table that is absent on one side");
      return self.validate();
    };
    return TableStructureLens(
        [=](const TableSpec& x) {
          return present().bind([&](Unit) { return self.transform(Side::Right, x, nullptr); });
        },
        [=](const TableSpec& y) {
          return present().bind([&](Unit) { return self.transform(Side::Left, y, nullptr); });
        },
        [=](const TableSpec& x, const TableSpec& y) {
          return present().bind([&](Unit) { return self.transform(Side::Right, x, &y); });
        },
        [=](const TableSpec& y, const TableSpec& x) {
          return present().bind([&](Unit) { return self.transform(Side::Left, y, &x); });
        });
  }

  /// Executable lens over possibly-absent tables; covers all four kinds.
  SymmetricLens<MaybeTable, MaybeTable> optional_lens() const {
    auto self = *this;
    auto to = [self](Side toward, const MaybeTable& source, const MaybeTable* target) -> Outcome<MaybeTable> {
      auto valid = self.validate();
      if (valid.is_error()) return valid.error();
      bool source_exists = toward == Side::Right ? self.left_name_.has_value() : self.right_name_.has_value();
      bool target_exists = toward == Side::Right ? self.right_name_.has_value() : self.left_name_.has_value();
      if (source_exists != source.has_value())
        return failure("table lens: source table is " + std::string(source ? "present" : "absent") +
                       " but the lens expects otherwise");
      if (target && target_exists != target->has_value())
        return failure("table lens: target table is " + std::string(*target ? "present" : "absent") +
                       " but the lens expects otherwise");
      if (source_exists && target_exists) {
        const TableSpec* existing = target ? &**target : nullptr;
        return self.transform(toward, *source, existing).map([](TableSpec t) { return MaybeTable(std::move(t)); });
      }
      if (!target_exists) {
        if (source) {
          auto claimed = self.check_coverage(toward == Side::Right ? Side::Left : Side::Right, *source);
          if (claimed.is_error()) return claimed.error();
        }
        return MaybeTable{};
      }
      // Table appears on the target side only.
      if (target && *target) return *target;
      return MaybeTable(self.declared(toward));
    };
    return SymmetricLens<MaybeTable, MaybeTable>(
        [=](const MaybeTable& x) { return to(Side::Right, x, nullptr); },
        [=](const MaybeTable& y) { return to(Side::Left, y, nullptr); },
        [=](const MaybeTable& x, const MaybeTable& y) { return to(Side::Right, x, &y); },
        [=](const MaybeTable& y, const MaybeTable& x) { return to(Side::Left, y, &x); });
  }

 private:
  enum class Side { Left, Right };

  TableLens(TableLensKind kind, std::optional<std::string> left_name, std::optional<std::string> right_name,
            std::vector<ColumnLens> columns)
      : kind_(kind), left_name_(std::move(left_name)), right_name_(std::move(right_name)), columns_(std::move(columns)) {}

  static const std::optional<std::string>& name_on(const ColumnLens& lens, Side side) {
    return side == Side::Left ? lens.left_name() : lens.right_name();
  }

  Outcome<Unit> check_coverage(Side side, const TableSpec& table) const {
    auto valid_spec = validate_table_spec(table);
    if (valid_spec.is_error()) return valid_spec;
    for (const auto& column : table.columns) {
      bool covered = std::any_of(columns_.begin(), columns_.end(),
                                 [&](const ColumnLens& l) { return name_on(l, side) == column.name; });
      if (!covered)
        return failure("table " + table.name + ": column " + column.name + " is not covered by any column lens");
    }
    return Unit{};
  }

  TableSpec declared(Side side) const {
    TableSpec spec{side == Side::Left ? *left_name_ : *right_name_, {}};
    for (const auto& column : columns_) {
      auto made = side == Side::Left ? column.lens().create_left(std::nullopt) : column.lens().create_right(std::nullopt);
      if (made.is_ok() && made.data()) spec.columns.push_back(*made.data());
    }
    return spec;
  }

  /// Maps `source` toward `toward`; `existing` is the current target table
  /// for put, or null for create.
  Outcome<TableSpec> transform(Side toward, const TableSpec& source, const TableSpec* existing) const {
    Side from = toward == Side::Right ? Side::Left : Side::Right;
    const std::string& expected_source = from == Side::Left ? *left_name_ : *right_name_;
    const std::string& target_name = toward == Side::Right ? *right_name_ : *left_name_;
    if (source.name != expected_source)
      return failure("table lens: expected table " + expected_source + ", got " + source.name);
    auto covered = check_coverage(from, source);
    if (covered.is_error()) return covered.error();
    if (existing) {
      if (existing->name != target_name)
        return failure("table lens: expected table " + target_name + ", got " + existing->name);
      auto covered_target = check_coverage(toward, *existing);
      if (covered_target.is_error()) return covered_target.error();
    }

    TableSpec out{target_name, {}};
    for (const auto& column : columns_) {
      const auto& source_name = name_on(column, from);
      const auto& target_column_name = name_on(column, toward);
      MaybeColumn in;
      if (source_name)
        if (const auto* found = source.find(*source_name)) in = *found;
      std::optional<MaybeColumn> target;
      if (existing) {
        MaybeColumn current;
        if (target_column_name)
          if (const auto* found = existing->find(*target_column_name)) current = *found;
        target = current;
      }
      auto mapped = column_lens_apply(column, toward == Side::Right ? Direction::LeftToRight : Direction::RightToLeft,
                                      in, target);
      if (mapped.is_error()) return failure("table " + source.name + ": " + mapped.message());
      if (mapped.data()) out.columns.push_back(*mapped.data());
    }
    return out;
  }

  TableLensKind kind_;
  std::optional<std::string> left_name_;
  std::optional<std::string> right_name_;
  std::vector<ColumnLens> columns_;
};

/// Convenience for the common case of a table present on both sides.
inline TableLens table_identity_lens(std::string name, std::vector<ColumnLens> columns) {
  return TableLens::identity(std::move(name), std::move(columns));
}

}  // namespace bx
