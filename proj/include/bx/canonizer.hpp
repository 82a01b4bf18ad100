#pragma once

#include <filesystem>
#include <fstream>
#include <memory>
#include <random>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "bx/outcome.hpp"
#include "bx/relational_data.hpp"
#include "bx/value.hpp"

namespace bx {

// File formats for TableData.  Both formats write values with render_value,
// so a store followed by a load reproduces the table exactly and a load
// followed by a store reproduces the file byte for byte.

inline Outcome<std::string> read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return failure("cannot open " + path.string() + " for reading");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) return failure("error reading " + path.string());
  return buffer.str();
}

/// Writes each file to a temporary next to its target, and only once every
/// temporary is complete renames them into place.  On failure no target is
/// touched (short of a failing rename).
inline Outcome<Unit> write_files_atomic(const std::vector<std::pair<std::filesystem::path, std::string>>& files) {
  static thread_local std::mt19937_64 rng{std::random_device{}()};
  std::vector<std::filesystem::path> temps;
  auto discard = [&temps] {
    std::error_code ignored;
    for (const auto& temp : temps) std::filesystem::remove(temp, ignored);
  };
  for (const auto& [path, contents] : files) {
    auto temp = path;
    temp += ".tmp-" + std::to_string(rng() % 1000000007);
    std::ofstream out(temp, std::ios::binary | std::ios::trunc);
    if (!out) {
      discard();
      return failure("cannot open " + temp.string() + " for writing");
    }
    temps.push_back(temp);
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    out.flush();
    if (!out) {
      discard();
      return failure("error writing " + temp.string());
    }
  }
  for (std::size_t i = 0; i < files.size(); ++i) {
    std::error_code ec;
    std::filesystem::rename(temps[i], files[i].first, ec);
    if (ec) {
      temps.erase(temps.begin(), temps.begin() + static_cast<std::ptrdiff_t>(i));
      discard();
      return failure("cannot move " + files[i].first.string() + " into place: " + ec.message());
    }
  }
  return Unit{};
}

inline Outcome<Unit> write_file_atomic(const std::filesystem::path& path, const std::string& contents) {
  return write_files_atomic({{path, contents}});
}

/// A storage format for TableData.
class Canonizer {
 public:
  virtual ~Canonizer() = default;

  virtual std::string_view format() const = 0;

  /// `table_name` and `key_column` name the table being read; formats that
  /// record them in the file reject a mismatch.
  virtual Outcome<TableData> parse(const std::string& text, const std::string& table_name,
                                   const std::string& key_column) const = 0;
  virtual Outcome<std::string> render(const TableData& table) const = 0;

  Outcome<TableData> load(const std::filesystem::path& location, const std::string& table_name,
                          const std::string& key_column) const {
    return read_file(location).bind([&](const std::string& text) {
      return parse(text, table_name, key_column).with_context([&] { return location.string() + ": "; });
    });
  }

  Outcome<Unit> store(const TableData& table, const std::filesystem::path& location) const {
    return render(table).bind([&](const std::string& text) { return write_file_atomic(location, text); });
  }
};

namespace detail {

inline std::string row_column(std::size_t row, const std::string& column) {
  return "row " + std::to_string(row) + ", column " + column;
}

/// Builds and validates a table from already-split text cells.
inline Outcome<TableData> table_from_cells(TableSpec spec, const std::string& key_column,
                                           const std::vector<std::vector<std::string>>& rows) {
  auto spec_ok = validate_table_spec(spec);
  if (spec_ok.is_error()) return spec_ok.error();
  if (!spec.find(key_column)) return failure("key column " + key_column + " is not a column of " + spec.name);
  TableData table{std::move(spec), {}, key_column};
  table.rows.reserve(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    RowData row;
    row.cells.reserve(rows[r].size());
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      const auto& column = table.spec.columns[c];
      auto value = parse_value(column.type, rows[r][c]);
      if (value.is_error()) return failure(row_column(r + 1, column.name) + ": " + value.message());
      row.cells.push_back(ColumnData{column.name, std::move(value).data()});
    }
    table.rows.push_back(std::move(row));
  }
  auto valid = validate_table_data(table);
  if (valid.is_error()) return valid.error();
  return table;
}

}  // namespace detail

/// Comma-separated values.  The header line holds `name:type` per column;
/// fields containing a comma, quote, CR or LF are quoted with doubled
/// quotes.  Records end with "\n" (a "\r\n" ending is accepted on input).
class CsvCanonizer final : public Canonizer {
 public:
  std::string_view format() const override { return "csv"; }

  Outcome<TableData> parse(const std::string& text, const std::string& table_name,
                           const std::string& key_column) const override {
    auto records = split_records(text);
    if (records.is_error()) return records.error();
    const auto& lines = records.data();
    if (lines.empty()) return failure("missing header line");
    TableSpec spec{table_name, {}};
    for (std::size_t c = 0; c < lines[0].size(); ++c) {
      const auto& field = lines[0][c];
      auto colon = field.rfind(':');
      if (colon == std::string::npos || colon == 0)
        return failure("header field " + std::to_string(c + 1) + " \"" + field + "\" is not name:type");
      auto type = parse_kind(std::string_view(field).substr(colon + 1));
      if (type.is_error() || type.data() == ValueKind::Unit)
        return failure("header field " + std::to_string(c + 1) + ": unknown type \"" + field.substr(colon + 1) +
                       "\"");
      spec.columns.push_back(ColumnSpec{field.substr(0, colon), type.data()});
    }
    std::vector<std::vector<std::string>> rows(lines.begin() + 1, lines.end());
    for (std::size_t r = 0; r < rows.size(); ++r)
      if (rows[r].size() != spec.columns.size())
        return failure("row " + std::to_string(r + 1) + " has " + std::to_string(rows[r].size()) +
                       " fields, expected " + std::to_string(spec.columns.size()));
    return detail::table_from_cells(std::move(spec), key_column, rows);
  }

  Outcome<std::string> render(const TableData& table) const override {
    auto valid = validate_table_data(table);
    if (valid.is_error()) return valid.error();
    std::string out;
    for (std::size_t c = 0; c < table.spec.columns.size(); ++c) {
      const auto& column = table.spec.columns[c];
      if (c) out += ',';
      out += quote(column.name + ":" + std::string(kind_name(column.type)));
    }
    out += '\n';
    for (const auto& row : table.rows) {
      for (std::size_t c = 0; c < row.cells.size(); ++c) {
        if (c) out += ',';
        out += quote(render_value(row.cells[c].value));
      }
      out += '\n';
    }
    return out;
  }

  static std::string quote(const std::string& field) {
    if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char ch : field) {
      if (ch == '"') out += '"';
      out += ch;
    }
    return out + "\"";
  }

  /// Splits CSV text into records of fields.  Every newline-terminated line
  /// is a record, including an empty one; a final line without a newline
  /// is a record too.
  static Outcome<std::vector<std::vector<std::string>>> split_records(const std::string& text) {
    std::vector<std::vector<std::string>> records;
    std::vector<std::string> record;
    std::string field;
    std::size_t i = 0;
    const std::size_t n = text.size();
    auto where = [&] { return "line " + std::to_string(records.size() + 1); };
    while (i < n) {
      if (text[i] == '"') {
        ++i;
        for (;;) {
          if (i >= n) return failure(where() + ": unterminated quoted field");
          if (text[i] == '"') {
            if (i + 1 < n && text[i + 1] == '"') {
              field += '"';
              i += 2;
              continue;
            }
            ++i;
            break;
          }
          field += text[i++];
        }
        if (i < n && text[i] != ',' && text[i] != '\n' && !(text[i] == '\r' && i + 1 < n && text[i + 1] == '\n'))
          return failure(where() + ": unexpected character after closing quote");
      } else {
        while (i < n && text[i] != ',' && text[i] != '\n') {
          if (text[i] == '"') return failure(where() + ": quote inside unquoted field");
          if (text[i] == '\r') {
            if (i + 1 < n && text[i + 1] == '\n') break;
            return failure(where() + ": bare carriage return in unquoted field");
          }
          field += text[i++];
        }
      }
      record.push_back(std::move(field));
      field.clear();
      if (i >= n) break;
      if (text[i] == ',') {
        ++i;
        if (i >= n) record.push_back(std::string());
        continue;
      }
      if (text[i] == '\r') ++i;
      ++i;  // '\n'
      records.push_back(std::move(record));
      record.clear();
    }
    if (!record.empty()) records.push_back(std::move(record));
    return records;
  }
};

/// JSON document {"table", "key", "columns": [{"name", "type"}], "rows"}.
/// Rows are arrays in column order; boolean cells are JSON booleans and
/// every other cell is its canonical text as a JSON string.  Output is
/// indented by two spaces and ends with a newline.
class JsonCanonizer final : public Canonizer {
 public:
  using Json = nlohmann::ordered_json;

  std::string_view format() const override { return "json"; }

  /// An empty `table_name` or `key_column` accepts whatever the file says.
  Outcome<TableData> parse(const std::string& text, const std::string& table_name,
                           const std::string& key_column) const override {
    Json doc = Json::parse(text, nullptr, false);
    if (doc.is_discarded()) return failure("malformed JSON");
    if (!doc.is_object()) return failure("top-level JSON value must be an object");
    auto text_field = [&](const char* name) -> Outcome<std::string> {
      auto it = doc.find(name);
      if (it == doc.end()) return failure(std::string("missing \"") + name + "\" field");
      if (!it->is_string()) return failure(std::string("\"") + name + "\" must be a string");
      return it->get<std::string>();
    };
    auto file_table = text_field("table");
    if (file_table.is_error()) return file_table.error();
    auto file_key = text_field("key");
    if (file_key.is_error()) return file_key.error();
    if (!table_name.empty() && file_table.data() != table_name)
      return failure("file holds table " + file_table.data() + ", expected " + table_name);
    if (!key_column.empty() && file_key.data() != key_column)
      return failure("file is keyed by " + file_key.data() + ", expected " + key_column);

    auto columns = doc.find("columns");
    if (columns == doc.end()) return failure("missing \"columns\" field");
    if (!columns->is_array()) return failure("\"columns\" must be an array");
    TableSpec spec{file_table.data(), {}};
    for (std::size_t c = 0; c < columns->size(); ++c) {
      const auto& entry = (*columns)[c];
      auto label = "column " + std::to_string(c + 1);
      if (!entry.is_object() || !entry.contains("name") || !entry.contains("type") || !entry["name"].is_string() ||
          !entry["type"].is_string())
        return failure(label + " must be an object with string \"name\" and \"type\"");
      auto type = parse_kind(entry["type"].get<std::string>());
      if (type.is_error() || type.data() == ValueKind::Unit)
        return failure(label + ": unknown type \"" + entry["type"].get<std::string>() + "\"");
      spec.columns.push_back(ColumnSpec{entry["name"].get<std::string>(), type.data()});
    }

    auto rows = doc.find("rows");
    if (rows == doc.end()) return failure("missing \"rows\" field");
    if (!rows->is_array()) return failure("\"rows\" must be an array");
    std::vector<std::vector<std::string>> cells;
    cells.reserve(rows->size());
    for (std::size_t r = 0; r < rows->size(); ++r) {
      const auto& row = (*rows)[r];
      if (!row.is_array() || row.size() != spec.columns.size())
        return failure("row " + std::to_string(r + 1) + " must be an array of " +
                       std::to_string(spec.columns.size()) + " values");
      std::vector<std::string> texts;
      for (std::size_t c = 0; c < row.size(); ++c) {
        const auto& column = spec.columns[c];
        if (column.type == ValueKind::Boolean) {
          if (!row[c].is_boolean()) return failure(detail::row_column(r + 1, column.name) + ": expected a boolean");
          texts.push_back(row[c].get<bool>() ? "true" : "false");
        } else {
          if (!row[c].is_string()) return failure(detail::row_column(r + 1, column.name) + ": expected a string");
          texts.push_back(row[c].get<std::string>());
        }
      }
      cells.push_back(std::move(texts));
    }
    return detail::table_from_cells(std::move(spec), file_key.data(), cells);
  }

  Outcome<std::string> render(const TableData& table) const override {
    auto valid = validate_table_data(table);
    if (valid.is_error()) return valid.error();
    Json doc = Json::object();
    doc["table"] = table.spec.name;
    doc["key"] = table.key_column;
    doc["columns"] = Json::array();
    for (const auto& column : table.spec.columns)
      doc["columns"].push_back(Json{{"name", column.name}, {"type", std::string(kind_name(column.type))}});
    doc["rows"] = Json::array();
    for (const auto& row : table.rows) {
      Json values = Json::array();
      for (const auto& cell : row.cells) {
        if (cell.value.kind() == ValueKind::Boolean) values.push_back(cell.value.as_bool());
        else values.push_back(render_value(cell.value));
      }
      doc["rows"].push_back(std::move(values));
    }
    try {
      return doc.dump(2) + "\n";
    } catch (const Json::exception& e) {
      return failure(std::string("cannot encode table as JSON: ") + e.what());
    }
  }
};

/// The canonizer for a format name ("csv" or "json").
inline Outcome<std::shared_ptr<const Canonizer>> canonizer_for(std::string_view format) {
  if (format == "csv") return std::shared_ptr<const Canonizer>(std::make_shared<CsvCanonizer>());
  if (format == "json") return std::shared_ptr<const Canonizer>(std::make_shared<JsonCanonizer>());
  return failure("unknown format \"" + std::string(format) + "\" (expected csv or json)");
}

}  // namespace bx
