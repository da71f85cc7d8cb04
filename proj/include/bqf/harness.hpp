#pragma once

// Experiment runner: result tables, run manifests, the result cache and the
// subcommand implementations behind the CLI.

#include "bqf/numeric.hpp"

#include <json.hpp>

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace bqf::harness {

inline constexpr int kSchemaVersion = 1;
inline constexpr int kCsvSchemaVersion = 1;

/// Parameter domain violation; the CLI maps it to exit status 3.
struct ValidationError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// `%.12g`, so that CSV bodies are stable across platforms.
std::string fmt(double x);

std::string sha256_hex(const std::string& data);
std::string utc_now();

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  void add(std::vector<std::string> row);
  /// Header line plus one line per row; fields with commas or quotes are quoted.
  std::string csv() const;
  nlohmann::json records() const;
};

/// Ordered key-value parameters. Keys that only affect scheduling or output
/// placement stay out of the input hash.
using Params = std::map<std::string, std::string>;

bool affects_result(const std::string& key);
std::string canonical_params(const Params& p);
std::string input_hash(const std::string& command, const Params& p);

struct RunOutput {
  Table table;
  nlohmann::json summary = nlohmann::json::object();
  bool passed = true;  // verify: every check passed
};

struct RunManifest {
  int schemaVersion = kSchemaVersion;
  std::string command;
  Params parameters;
  std::string codeVersion = BQF_VERSION;
  std::string startedAt, finishedAt;
  std::string inputHash, outputHash;
  std::vector<std::string> csvColumns;
  bool cacheHit = false;
  nlohmann::json summary;
  std::vector<std::string> artifacts;

  nlohmann::json to_json() const;
};

/// Cached results under <root>, keyed by (command, parameters, codeVersion).
/// Unreadable or inconsistent entries move to <root>/quarantine.
class Cache {
 public:
  explicit Cache(std::filesystem::path root);

  static std::string key(const std::string& command, const Params& p, const std::string& codeVersion = BQF_VERSION);

  std::optional<RunOutput> lookup(const std::string& command, const Params& p);
  void store(const std::string& command, const Params& p, const RunOutput& out);

  std::filesystem::path entry_path(const std::string& key) const;
  std::uint64_t quarantined() const { return quarantined_; }

 private:
  void quarantine(const std::filesystem::path& file);

  std::filesystem::path root_;
  std::uint64_t quarantined_ = 0;
};

struct RunRequest {
  std::string command;
  Params params;
  std::filesystem::path outDir;
  std::string format = "csv";  // csv | json
  bool useCache = true;
};

struct RunResult {
  RunManifest manifest;
  RunOutput output;
  std::filesystem::path dataPath, manifestPath;
};

/// Compute (or fetch from the cache), then write the artifact and its manifest.
RunResult execute(const RunRequest& req);

/// The computation behind one command, without persistence.
RunOutput compute(const std::string& command, const Params& p);

bool cacheable(const std::string& command);

/// Commands accepted by `compute`.
const std::vector<std::string>& commands();

/// Output directory: the flag when given, else $OUTPUT_DIR, else "runs".
std::filesystem::path resolve_out_dir(const std::string& flag);

}  // namespace bqf::harness
