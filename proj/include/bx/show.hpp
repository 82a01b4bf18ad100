#pragma once

#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <type_traits>

#include "bx/either.hpp"
#include "bx/outcome.hpp"
#include "bx/relational.hpp"
#include "bx/relational_data.hpp"
#include "bx/value.hpp"

// Human-readable renderings used in law-harness witnesses and test output.

namespace bx {

inline std::string show(const std::string& s) { return "\"" + s + "\""; }
inline std::string show(const char* s) { return show(std::string(s)); }
inline std::string show(bool b) { return b ? "true" : "false"; }
inline std::string show(Unit) { return "()"; }
inline std::string show(const Decimal& d) { return d.to_string(); }
inline std::string show(const DateTime& d) { return d.to_string(); }

template <class T>
  requires(std::is_arithmetic_v<T> && !std::is_same_v<T, bool>)
std::string show(T value) {
  std::ostringstream out;
  out << value;
  return out.str();
}

inline std::string show(const PrimitiveValue& v) {
  if (v.is_unit()) return "unit";
  if (v.kind() == ValueKind::String) return show(v.as_text());
  return std::string(kind_name(v.kind())) + " " + render_value(v);
}

inline std::string show(const ColumnSpec& c) { return c.name + ":" + std::string(kind_name(c.type)); }

inline std::string show(const TableSpec& t) {
  std::string out = t.name + "(";
  for (std::size_t i = 0; i < t.columns.size(); ++i) out += (i ? ", " : "") + show(t.columns[i]);
  return out + ")";
}

inline std::string show(const TableData& t) {
  std::string out = show(t.spec) + " key=" + t.key_column + " [";
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    out += r ? "; " : "";
    for (std::size_t c = 0; c < t.rows[r].cells.size(); ++c)
      out += (c ? "," : "") + render_value(t.rows[r].cells[c].value);
  }
  return out + "]";
}

template <class T>
std::string show(const std::optional<T>& value) {
  return value ? show(*value) : std::string("<absent>");
}

template <class L, class R>
std::string show(const Either<L, R>& value) {
  return value.is_left() ? "Left(" + show(value.left_value()) + ")" : "Right(" + show(value.right_value()) + ")";
}

template <class T>
std::string show(const Outcome<T>& value) {
  return value.is_ok() ? "ok(" + show(value.data()) + ")" : "error(" + value.message() + ")";
}

}  // namespace bx
