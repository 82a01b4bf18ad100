// bxsync: synchronize two tabular files through a declarative table data lens.
//
//   bxsync sync --left a.csv --right b.json --mapping m.json --mode full-sync
//               --out-left a2.csv --out-right b2.json
//   bxsync validate --mapping m.json
//
// Exit codes: 0 success, 2 invalid usage or mapping, 3 data error, 4 I/O error.

#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "bx/bx.hpp"

namespace fs = std::filesystem;

namespace {

enum Exit : int { kOk = 0, kInvalid = 2, kDataError = 3, kIoError = 4 };

struct Failure {
  int code;
  std::string message;
};

int report(const Failure& failure) {
  std::cerr << "bxsync: " << failure.message << "\n";
  return failure.code;
}

std::string format_of(const std::string& flag, const fs::path& path) {
  if (!flag.empty()) return flag;
  return path.extension() == ".json" ? "json" : "csv";
}

std::optional<Failure> load_lens(const fs::path& mapping_path, bx::MappingConfig& config,
                                 std::optional<bx::TableDataLens>& lens) {
  auto text = bx::read_file(mapping_path);
  if (text.is_error()) return Failure{kIoError, text.message()};
  auto parsed = bx::parse_mapping(text.data());
  if (parsed.is_error()) return Failure{kInvalid, mapping_path.string() + ": " + parsed.message()};
  config = parsed.data();
  auto built = bx::build_table_data_lens(config);
  if (built.is_error()) return Failure{kInvalid, mapping_path.string() + ": " + built.message()};
  lens = built.data();
  return std::nullopt;
}

std::optional<Failure> load_table(const fs::path& path, const std::string& format, const std::string& table,
                                  const std::string& key, std::optional<bx::TableData>& into) {
  auto canonizer = bx::canonizer_for(format);
  if (canonizer.is_error()) return Failure{kInvalid, canonizer.message()};
  auto text = bx::read_file(path);
  if (text.is_error()) return Failure{kIoError, text.message()};
  auto data = canonizer.data()->parse(text.data(), table, key);
  if (data.is_error()) return Failure{kDataError, path.string() + ": " + data.message()};
  into = data.data();
  return std::nullopt;
}

struct SyncOptions {
  std::string left, right, left_format, right_format, mapping, mode, out_left, out_right;
};

int run_sync(const SyncOptions& options) {
  bool needs_left = options.mode != "create-left";
  bool needs_right = options.mode != "create-right";
  bool writes_left = options.mode == "create-left" || options.mode == "put-left" || options.mode == "full-sync";
  bool writes_right = options.mode == "create-right" || options.mode == "put-right" || options.mode == "full-sync";
  if (needs_left && options.left.empty()) return report({kInvalid, "--left is required for " + options.mode});
  if (needs_right && options.right.empty()) return report({kInvalid, "--right is required for " + options.mode});
  if (writes_left && options.out_left.empty()) return report({kInvalid, "--out-left is required for " + options.mode});
  if (writes_right && options.out_right.empty())
    return report({kInvalid, "--out-right is required for " + options.mode});

  auto left_format = format_of(options.left_format, options.left.empty() ? options.out_left : options.left);
  auto right_format = format_of(options.right_format, options.right.empty() ? options.out_right : options.right);

  bx::MappingConfig config;
  std::optional<bx::TableDataLens> lens;
  if (auto failed = load_lens(options.mapping, config, lens)) return report(*failed);

  std::optional<bx::TableData> left, right;
  if (needs_left)
    if (auto failed = load_table(options.left, left_format, config.left_table, config.key, left)) return report(*failed);
  if (needs_right)
    if (auto failed = load_table(options.right, right_format, config.right_table, config.key, right))
      return report(*failed);

  bx::Outcome<bx::SyncResult> result = bx::failure("unknown mode " + options.mode);
  auto only_right = [&](const bx::TableData& t) { return bx::SyncResult{{}, t}; };
  auto only_left = [&](const bx::TableData& t) { return bx::SyncResult{t, {}}; };
  if (options.mode == "create-right") result = lens->create_right(*left).map(only_right);
  else if (options.mode == "create-left") result = lens->create_left(*right).map(only_left);
  else if (options.mode == "put-right") result = lens->put_right(*left, *right).map(only_right);
  else if (options.mode == "put-left") result = lens->put_left(*right, *left).map(only_left);
  else if (options.mode == "full-sync") result = bx::full_sync(*lens, *left, *right);
  if (result.is_error()) return report({kDataError, result.message()});

  std::vector<std::pair<fs::path, std::string>> outputs;
  auto render = [&](const std::string& format, const bx::TableData& table, const std::string& path) {
    auto text = bx::canonizer_for(format).bind(
        [&](const std::shared_ptr<const bx::Canonizer>& c) { return c->render(table); });
    if (text.is_ok()) outputs.emplace_back(path, text.data());
    return text;
  };
  if (writes_left)
    if (auto text = render(left_format, result.data().left, options.out_left); text.is_error())
      return report({kDataError, options.out_left + ": " + text.message()});
  if (writes_right)
    if (auto text = render(right_format, result.data().right, options.out_right); text.is_error())
      return report({kDataError, options.out_right + ": " + text.message()});

  auto written = bx::write_files_atomic(outputs);
  if (written.is_error()) return report({kIoError, written.message()});
  return kOk;
}

int run_validate(const std::string& mapping_path) {
  auto text = bx::read_file(mapping_path);
  if (text.is_error()) return report({kIoError, text.message()});
  auto config = bx::parse_mapping(text.data());
  if (config.is_error()) return report({kInvalid, mapping_path + ": " + config.message()});

  bool columns_ok = true;
  for (const auto& verdict : bx::column_verdicts(config.data())) {
    std::cout << verdict.column << " (" << verdict.kind << "): " << (verdict.error ? "error: " + *verdict.error : "ok")
              << "\n";
    columns_ok = columns_ok && !verdict.error;
  }
  auto lens = bx::build_table_data_lens(config.data());
  std::cout << "table " << config.data().left_table << " -> " << config.data().right_table << ": "
            << (lens.is_ok() ? "ok" : "error: " + lens.message()) << "\n";
  if (!columns_ok || lens.is_error()) return report({kInvalid, mapping_path + ": mapping is invalid"});
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Synchronize two tabular files through a declarative lens mapping."};
  app.require_subcommand(1);

  SyncOptions sync;
  auto* sync_cmd = app.add_subcommand("sync", "Run one lens operation over the input files.");
  sync_cmd->add_option("--left", sync.left, "Left input file");
  sync_cmd->add_option("--right", sync.right, "Right input file");
  sync_cmd->add_option("--left-format", sync.left_format, "csv or json (default: from the file extension)")
      ->check(CLI::IsMember({"csv", "json"}));
  sync_cmd->add_option("--right-format", sync.right_format, "csv or json (default: from the file extension)")
      ->check(CLI::IsMember({"csv", "json"}));
  sync_cmd->add_option("--mapping", sync.mapping, "Mapping file (JSON)")->required();
  sync_cmd->add_option("--mode", sync.mode, "Lens operation")
      ->required()
      ->check(CLI::IsMember({"create-right", "create-left", "put-right", "put-left", "full-sync"}));
  sync_cmd->add_option("--out-left", sync.out_left, "Where to write the left result");
  sync_cmd->add_option("--out-right", sync.out_right, "Where to write the right result");

  std::string validate_mapping;
  auto* validate_cmd = app.add_subcommand("validate", "Check a mapping and print one verdict per column.");
  validate_cmd->add_option("--mapping", validate_mapping, "Mapping file (JSON)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInvalid;
  }

  if (*sync_cmd) return run_sync(sync);
  return run_validate(validate_mapping);
}
