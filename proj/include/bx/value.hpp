#pragma once

#include <charconv>
#include <compare>
#include <cstdio>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "bx/outcome.hpp"

namespace bx {

// ---------------------------------------------------------------------------
// Integers

namespace detail {

inline bool is_digit(char c) { return c >= '0' && c <= '9'; }

/// -?(0|[1-9][0-9]*) without "-0".
inline bool canonical_integer_syntax(std::string_view text) {
  std::string_view digits = text;
  if (!digits.empty() && digits.front() == '-') digits.remove_prefix(1);
  if (digits.empty()) return false;
  for (char c : digits)
    if (!is_digit(c)) return false;
  if (digits.size() > 1 && digits.front() == '0') return false;
  if (digits == "0" && text.size() != digits.size()) return false;
  return true;
}

}  // namespace detail

inline Outcome<std::int64_t> parse_integer(std::string_view text) {
  if (!detail::canonical_integer_syntax(text))
    return failure("not an integer: \"" + std::string(text) + "\"");
  std::int64_t value = 0;
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || end != text.data() + text.size())
    return failure("integer out of range: \"" + std::string(text) + "\"");
  return value;
}

inline std::string render_integer(std::int64_t value) { return std::to_string(value); }

inline Outcome<std::int64_t> checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t sum = 0;
  if (__builtin_add_overflow(a, b, &sum))
    return failure("integer overflow: " + std::to_string(a) + " + " + std::to_string(b));
  return sum;
}

inline Outcome<std::int64_t> checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t diff = 0;
  if (__builtin_sub_overflow(a, b, &diff))
    return failure("integer overflow: " + std::to_string(a) + " - " + std::to_string(b));
  return diff;
}

// ---------------------------------------------------------------------------
// Decimal

/// Exact decimal: unscaled * 10^-scale, scale in [0, 10].
///
/// Equality and ordering are numeric (1.50 == 1.5).  The scale is kept so
/// that a parsed value renders back to the same text.
class Decimal {
 public:
  static constexpr int kMaxScale = 10;

  constexpr Decimal() = default;

  static Outcome<Decimal> from_parts(std::int64_t unscaled, int scale) {
    if (scale < 0 || scale > kMaxScale)
      return failure("decimal scale out of range: " + std::to_string(scale));
    return Decimal(unscaled, scale);
  }

  static Decimal from_integer(std::int64_t value) { return Decimal(value, 0); }

  /// Accepts -?(0|[1-9][0-9]*)(\.[0-9]+)? with at most 10 fraction digits;
  /// negative zero is rejected so every value has one spelling per scale.
  static Outcome<Decimal> parse(std::string_view text) {
    auto bad = [&] { return failure("not a decimal: \"" + std::string(text) + "\""); };
    std::string_view rest = text;
    bool negative = false;
    if (!rest.empty() && rest.front() == '-') {
      negative = true;
      rest.remove_prefix(1);
    }
    auto dot = rest.find('.');
    std::string_view whole = rest.substr(0, dot);
    std::string_view fraction = dot == std::string_view::npos ? std::string_view{} : rest.substr(dot + 1);
    if (whole.empty() || (whole.size() > 1 && whole.front() == '0')) return bad();
    if (dot != std::string_view::npos && fraction.empty()) return bad();
    for (char c : whole)
      if (!detail::is_digit(c)) return bad();
    for (char c : fraction)
      if (!detail::is_digit(c)) return bad();
    if (fraction.size() > static_cast<std::size_t>(kMaxScale))
      return failure("decimal has more than 10 fraction digits: \"" + std::string(text) + "\"");

    __int128 unscaled = 0;
    constexpr __int128 limit = std::numeric_limits<std::int64_t>::max();
    for (char c : whole) {
      unscaled = unscaled * 10 + (c - '0');
      if (unscaled > limit) return failure("decimal out of range: \"" + std::string(text) + "\"");
    }
    for (char c : fraction) {
      unscaled = unscaled * 10 + (c - '0');
      if (unscaled > limit) return failure("decimal out of range: \"" + std::string(text) + "\"");
    }
    auto value = static_cast<std::int64_t>(unscaled);
    if (negative && value == 0) return bad();
    return Decimal(negative ? -value : value, static_cast<int>(fraction.size()));
  }

  std::int64_t unscaled() const noexcept { return unscaled_; }
  int scale() const noexcept { return scale_; }

  std::string to_string() const {
    // Unsigned magnitude survives INT64_MIN.
    unsigned long long magnitude = unscaled_ < 0 ? 0ULL - static_cast<unsigned long long>(unscaled_)
                                                 : static_cast<unsigned long long>(unscaled_);
    std::string digits = std::to_string(magnitude);
    if (scale_ > 0) {
      if (digits.size() <= static_cast<std::size_t>(scale_))
        digits.insert(0, static_cast<std::size_t>(scale_) - digits.size() + 1, '0');
      digits.insert(digits.size() - static_cast<std::size_t>(scale_), 1, '.');
    }
    if (unscaled_ < 0) digits.insert(0, 1, '-');
    return digits;
  }

  friend Outcome<Decimal> operator+(const Decimal& a, const Decimal& b) { return combine(a, b, 1); }
  friend Outcome<Decimal> operator-(const Decimal& a, const Decimal& b) { return combine(a, b, -1); }

  friend bool operator==(const Decimal& a, const Decimal& b) {
    return (a <=> b) == std::strong_ordering::equal;
  }
  friend std::strong_ordering operator<=>(const Decimal& a, const Decimal& b) {
    int scale = a.scale_ > b.scale_ ? a.scale_ : b.scale_;
    return a.rescaled(scale) <=> b.rescaled(scale);
  }

 private:
  constexpr Decimal(std::int64_t unscaled, int scale) : unscaled_(unscaled), scale_(scale) {}

  __int128 rescaled(int scale) const {
    __int128 value = unscaled_;
    for (int i = scale_; i < scale; ++i) value *= 10;
    return value;
  }

  static Outcome<Decimal> combine(const Decimal& a, const Decimal& b, int sign) {
    int scale = a.scale_ > b.scale_ ? a.scale_ : b.scale_;
    __int128 result = a.rescaled(scale) + sign * b.rescaled(scale);
    if (result > std::numeric_limits<std::int64_t>::max() ||
        result < std::numeric_limits<std::int64_t>::min())
      return failure("decimal overflow: " + a.to_string() + (sign > 0 ? " + " : " - ") + b.to_string());
    return Decimal(static_cast<std::int64_t>(result), scale);
  }

  std::int64_t unscaled_ = 0;
  int scale_ = 0;
};

// ---------------------------------------------------------------------------
// DateTime

inline bool is_leap_year(int year) {
  return (year % 4 == 0 && year % 100 != 0) || year % 400 == 0;
}

inline int days_in_month(int year, int month) {
  static constexpr int kDays[] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
  if (month == 2 && is_leap_year(year)) return 29;
  return kDays[month - 1];
}

/// Calendar date-time with second precision and no timezone.
/// Years are limited to 1..9999 so the ISO rendering has a fixed width.
class DateTime {
 public:
  constexpr DateTime() = default;

  static Outcome<DateTime> make(int year, int month, int day, int hour = 0, int minute = 0,
                                int second = 0) {
    if (year < 1 || year > 9999) return failure("year out of range: " + std::to_string(year));
    if (month < 1 || month > 12) return failure("month out of range: " + std::to_string(month));
    if (day < 1 || day > days_in_month(year, month))
      return failure("day " + std::to_string(day) + " is not valid for " + std::to_string(year) +
                     "-" + std::to_string(month));
    if (hour < 0 || hour > 23) return failure("hour out of range: " + std::to_string(hour));
    if (minute < 0 || minute > 59) return failure("minute out of range: " + std::to_string(minute));
    if (second < 0 || second > 59) return failure("second out of range: " + std::to_string(second));
    return DateTime(year, month, day, hour, minute, second);
  }

  /// Parses exactly "YYYY-MM-DDThh:mm:ss".
  static Outcome<DateTime> parse(std::string_view text) {
    auto bad = [&] {
      return failure("not a datetime (expected YYYY-MM-DDThh:mm:ss): \"" + std::string(text) + "\"");
    };
    if (text.size() != 19) return bad();
    static constexpr std::string_view kShape = "dddd-dd-ddTdd:dd:dd";
    for (std::size_t i = 0; i < kShape.size(); ++i) {
      if (kShape[i] == 'd' ? !detail::is_digit(text[i]) : text[i] != kShape[i]) return bad();
    }
    auto field = [&](std::size_t pos, std::size_t len) {
      int value = 0;
      for (std::size_t i = pos; i < pos + len; ++i) value = value * 10 + (text[i] - '0');
      return value;
    };
    auto made = make(field(0, 4), field(5, 2), field(8, 2), field(11, 2), field(14, 2), field(17, 2));
    if (made.is_error()) return failure(made.message() + " in \"" + std::string(text) + "\"");
    return made;
  }

  int year() const noexcept { return year_; }
  int month() const noexcept { return month_; }
  int day() const noexcept { return day_; }
  int hour() const noexcept { return hour_; }
  int minute() const noexcept { return minute_; }
  int second() const noexcept { return second_; }

  Outcome<DateTime> with_day(int day) const {
    return make(year_, month_, day, hour_, minute_, second_);
  }

  std::string to_string() const {
    char buffer[20];
    std::snprintf(buffer, sizeof buffer, "%04d-%02d-%02dT%02d:%02d:%02d", year_, month_, day_, hour_,
                  minute_, second_);
    return buffer;
  }

  friend auto operator<=>(const DateTime&, const DateTime&) = default;

 private:
  constexpr DateTime(int year, int month, int day, int hour, int minute, int second)
      : year_(year), month_(month), day_(day), hour_(hour), minute_(minute), second_(second) {}

  int year_ = 1;
  int month_ = 1;
  int day_ = 1;
  int hour_ = 0;
  int minute_ = 0;
  int second_ = 0;
};

// ---------------------------------------------------------------------------
// Kinds and dynamically-typed values

/// Value kinds; doubles as the relational column type.  Unit marks deleted
/// data or structure.
enum class ValueKind { Integer, Long, Decimal, Boolean, DateTime, String, Unit };

using ColumnType = ValueKind;

inline constexpr ValueKind kSerializableKinds[] = {ValueKind::Integer,  ValueKind::Long,
                                                   ValueKind::Decimal,  ValueKind::Boolean,
                                                   ValueKind::DateTime, ValueKind::String};

inline std::string_view kind_name(ValueKind kind) {
  switch (kind) {
    case ValueKind::Integer: return "integer";
    case ValueKind::Long: return "long";
    case ValueKind::Decimal: return "decimal";
    case ValueKind::Boolean: return "boolean";
    case ValueKind::DateTime: return "datetime";
    case ValueKind::String: return "string";
    case ValueKind::Unit: return "unit";
  }
  return "?";
}

inline Outcome<ValueKind> parse_kind(std::string_view name) {
  for (ValueKind kind : kSerializableKinds)
    if (kind_name(kind) == name) return kind;
  if (name == "unit") return ValueKind::Unit;
  return failure("unknown type name: \"" + std::string(name) + "\"");
}

/// A primitive value tagged with its kind.  Integer and Long share the
/// int64 payload but remain distinct kinds.
class PrimitiveValue {
 public:
  PrimitiveValue() = default;  // unit

  static PrimitiveValue unit() { return PrimitiveValue(); }
  static PrimitiveValue boolean(bool v) { return PrimitiveValue(ValueKind::Boolean, v); }
  static PrimitiveValue integer(std::int64_t v) { return PrimitiveValue(ValueKind::Integer, v); }
  static PrimitiveValue long_integer(std::int64_t v) { return PrimitiveValue(ValueKind::Long, v); }
  static PrimitiveValue decimal(Decimal v) { return PrimitiveValue(ValueKind::Decimal, v); }
  static PrimitiveValue datetime(DateTime v) { return PrimitiveValue(ValueKind::DateTime, v); }
  static PrimitiveValue text(std::string v) { return PrimitiveValue(ValueKind::String, std::move(v)); }

  ValueKind kind() const noexcept { return kind_; }
  bool is_unit() const noexcept { return kind_ == ValueKind::Unit; }

  bool as_bool() const { return std::get<bool>(payload_); }
  std::int64_t as_int() const { return std::get<std::int64_t>(payload_); }
  const Decimal& as_decimal() const { return std::get<Decimal>(payload_); }
  const DateTime& as_datetime() const { return std::get<DateTime>(payload_); }
  const std::string& as_text() const { return std::get<std::string>(payload_); }

  friend bool operator==(const PrimitiveValue& a, const PrimitiveValue& b) {
    return a.kind_ == b.kind_ && a.payload_ == b.payload_;
  }

 private:
  using Payload = std::variant<std::monostate, bool, std::int64_t, Decimal, DateTime, std::string>;

  template <class T>
  PrimitiveValue(ValueKind kind, T&& payload) : kind_(kind), payload_(std::forward<T>(payload)) {}

  ValueKind kind_ = ValueKind::Unit;
  Payload payload_;
};

/// Canonical text rendering shared by every canonizer.  Unit renders empty.
inline std::string render_value(const PrimitiveValue& value) {
  switch (value.kind()) {
    case ValueKind::Integer:
    case ValueKind::Long: return render_integer(value.as_int());
    case ValueKind::Decimal: return value.as_decimal().to_string();
    case ValueKind::Boolean: return value.as_bool() ? "true" : "false";
    case ValueKind::DateTime: return value.as_datetime().to_string();
    case ValueKind::String: return value.as_text();
    case ValueKind::Unit: return "";
  }
  return "";
}

inline Outcome<PrimitiveValue> parse_value(ValueKind kind, std::string_view text) {
  switch (kind) {
    case ValueKind::Integer: return parse_integer(text).map(&PrimitiveValue::integer);
    case ValueKind::Long: return parse_integer(text).map(&PrimitiveValue::long_integer);
    case ValueKind::Decimal: return Decimal::parse(text).map(&PrimitiveValue::decimal);
    case ValueKind::Boolean:
      if (text == "true") return PrimitiveValue::boolean(true);
      if (text == "false") return PrimitiveValue::boolean(false);
      return failure("not a boolean: \"" + std::string(text) + "\"");
    case ValueKind::DateTime: return DateTime::parse(text).map(&PrimitiveValue::datetime);
    case ValueKind::String: return PrimitiveValue::text(std::string(text));
    case ValueKind::Unit:
      if (text.empty()) return PrimitiveValue::unit();
      return failure("unit value must be empty");
  }
  return failure("unknown kind");
}

}  // namespace bx
