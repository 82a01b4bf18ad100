#pragma once

#include <cstdint>
#include <string>

#include "bx/lens.hpp"
#include "bx/value.hpp"

namespace bx {

// Typed lenses over C++ value types.  Integer and long columns both use
// std::int64_t here; the dynamic wrappers at the bottom keep the kinds apart.

namespace detail {

inline Outcome<std::int64_t> shift(std::int64_t value, std::int64_t by) { return checked_add(value, by); }
inline Outcome<std::int64_t> unshift(std::int64_t value, std::int64_t by) { return checked_sub(value, by); }
inline Outcome<Decimal> shift(const Decimal& value, const Decimal& by) { return value + by; }
inline Outcome<Decimal> unshift(const Decimal& value, const Decimal& by) { return value - by; }

}  // namespace detail

/// Adds `amount` going right and subtracts it going left.
template <class T>
  requires std::same_as<T, std::int64_t> || std::same_as<T, Decimal>
SymmetricLens<T, T> add(T amount) {
  return bijection<T, T>([amount](const T& x) { return detail::shift(x, amount); },
                         [amount](const T& y) { return detail::unshift(y, amount); });
}

/// Subtracts `amount` going right and adds it going left.
template <class T>
  requires std::same_as<T, std::int64_t> || std::same_as<T, Decimal>
SymmetricLens<T, T> sub(T amount) {
  return bijection<T, T>([amount](const T& x) { return detail::unshift(x, amount); },
                         [amount](const T& y) { return detail::shift(y, amount); });
}

inline SymmetricLens<std::int64_t, std::int64_t> add_lens(std::int64_t amount) { return add<std::int64_t>(amount); }
inline SymmetricLens<std::int64_t, std::int64_t> sub_lens(std::int64_t amount) { return sub<std::int64_t>(amount); }

/// Boolean negation.
inline SymmetricLens<bool, bool> not_lens() {
  return bijection<bool, bool>([](bool x) { return Outcome<bool>(!x); },
                               [](bool y) { return Outcome<bool>(!y); });
}

/// Integer <-> base-10 text, no leading zeros.
inline SymmetricLens<std::int64_t, std::string> int_string_lens() {
  return bijection<std::int64_t, std::string>(
      [](std::int64_t x) { return Outcome<std::string>(render_integer(x)); },
      [](const std::string& y) { return parse_integer(y); });
}

inline SymmetricLens<Decimal, std::string> decimal_string_lens() {
  return bijection<Decimal, std::string>(
      [](const Decimal& x) { return Outcome<std::string>(x.to_string()); },
      [](const std::string& y) { return Decimal::parse(y); });
}

inline SymmetricLens<bool, std::string> bool_string_lens() {
  return bijection<bool, std::string>(
      [](bool x) { return Outcome<std::string>(x ? "true" : "false"); },
      [](const std::string& y) -> Outcome<bool> {
        if (y == "true") return true;
        if (y == "false") return false;
        return failure("not a boolean: \"" + y + "\"");
      });
}

/// ISO text "YYYY-MM-DDThh:mm:ss" <-> datetime.
inline SymmetricLens<std::string, DateTime> string_datetime_lens() {
  return bijection<std::string, DateTime>(
      [](const std::string& x) { return DateTime::parse(x); },
      [](const DateTime& y) { return Outcome<std::string>(y.to_string()); });
}

/// Datetime -> day of month.  Going left, putL replaces the day of the
/// original datetime; createL has no original and uses `default_base`.
inline SymmetricLens<DateTime, std::int64_t> day_of_month_lens(DateTime default_base) {
  auto replace_day = [](const DateTime& base, std::int64_t day) -> Outcome<DateTime> {
    if (day < 1 || day > 31) return failure("day of month out of range: " + std::to_string(day));
    return base.with_day(static_cast<int>(day));
  };
  return SymmetricLens<DateTime, std::int64_t>(
      [](const DateTime& x) { return Outcome<std::int64_t>(x.day()); },
      [default_base, replace_day](std::int64_t d) { return replace_day(default_base, d); },
      [](const DateTime& x, std::int64_t) { return Outcome<std::int64_t>(x.day()); },
      [replace_day](std::int64_t d, const DateTime& x) { return replace_day(x, d); });
}

// ---------------------------------------------------------------------------
// Dynamically-typed lenses over PrimitiveValue, used by column data lenses.

using ValueLens = SymmetricLens<PrimitiveValue, PrimitiveValue>;

namespace detail {

inline Outcome<PrimitiveValue> expect_kind(const PrimitiveValue& value, ValueKind kind) {
  if (value.kind() != kind)
    return failure("expected a " + std::string(kind_name(kind)) + " value, got " +
                   std::string(kind_name(value.kind())));
  return value;
}

template <class T>
T unwrap(const PrimitiveValue& value) {
  if constexpr (std::same_as<T, bool>) return value.as_bool();
  else if constexpr (std::same_as<T, std::int64_t>) return value.as_int();
  else if constexpr (std::same_as<T, Decimal>) return value.as_decimal();
  else if constexpr (std::same_as<T, DateTime>) return value.as_datetime();
  else return value.as_text();
}

inline PrimitiveValue wrap(ValueKind kind, bool v) { (void)kind; return PrimitiveValue::boolean(v); }
inline PrimitiveValue wrap(ValueKind kind, std::int64_t v) {
  return kind == ValueKind::Long ? PrimitiveValue::long_integer(v) : PrimitiveValue::integer(v);
}
inline PrimitiveValue wrap(ValueKind, const Decimal& v) { return PrimitiveValue::decimal(v); }
inline PrimitiveValue wrap(ValueKind, const DateTime& v) { return PrimitiveValue::datetime(v); }
inline PrimitiveValue wrap(ValueKind, const std::string& v) { return PrimitiveValue::text(v); }

}  // namespace detail

/// Identity over values of one kind; values of any other kind are rejected.
inline ValueLens identity_lens(ValueKind kind) {
  auto check = [kind](const PrimitiveValue& v) { return detail::expect_kind(v, kind); };
  return ValueLens(check, check, [check](const PrimitiveValue& x, const PrimitiveValue&) { return check(x); },
                   [check](const PrimitiveValue& y, const PrimitiveValue&) { return check(y); });
}

/// Lifts a typed lens to PrimitiveValue, checking the kind on every input.
template <class A, class B>
ValueLens lift(SymmetricLens<A, B> lens, ValueKind left_kind, ValueKind right_kind) {
  auto left_in = [left_kind](const PrimitiveValue& v) -> Outcome<A> {
    return detail::expect_kind(v, left_kind).map([](const PrimitiveValue& p) { return detail::unwrap<A>(p); });
  };
  auto right_in = [right_kind](const PrimitiveValue& v) -> Outcome<B> {
    return detail::expect_kind(v, right_kind).map([](const PrimitiveValue& p) { return detail::unwrap<B>(p); });
  };
  auto left_out = [left_kind](const A& a) { return detail::wrap(left_kind, a); };
  auto right_out = [right_kind](const B& b) { return detail::wrap(right_kind, b); };
  return ValueLens(
      [=](const PrimitiveValue& x) {
        return left_in(x).bind([&](const A& a) { return lens.create_right(a); }).map(right_out);
      },
      [=](const PrimitiveValue& y) {
        return right_in(y).bind([&](const B& b) { return lens.create_left(b); }).map(left_out);
      },
      [=](const PrimitiveValue& x, const PrimitiveValue& y) {
        return left_in(x).bind([&](const A& a) {
          return right_in(y).bind([&](const B& b) { return lens.put_right(a, b); });
        }).map(right_out);
      },
      [=](const PrimitiveValue& y, const PrimitiveValue& x) {
        return right_in(y).bind([&](const B& b) {
          return left_in(x).bind([&](const A& a) { return lens.put_left(b, a); });
        }).map(left_out);
      });
}

}  // namespace bx
