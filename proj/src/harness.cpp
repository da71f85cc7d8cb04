#include "bqf/harness.hpp"

#include "bqf/census.hpp"
#include "bqf/checks.hpp"
#include "bqf/elliptic.hpp"
#include "bqf/selmer.hpp"
#include "bqf/semiinv.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace bqf::harness {

namespace fs = std::filesystem;
using nlohmann::json;

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::string sha256_hex(const std::string& data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("sha256: digest failed");
  std::ostringstream os;
  for (unsigned int i = 0; i < len; ++i) os << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
  return os.str();
}

std::string utc_now() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

// ---------------------------------------------------------------- tables

void Table::add(std::vector<std::string> row) {
  if (row.size() != columns.size()) throw std::logic_error("Table::add: row width does not match header");
  rows.push_back(std::move(row));
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

void csv_line(std::ostringstream& os, const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) os << (i ? "," : "") << csv_field(fields[i]);
  os << '\n';
}

}  // namespace

std::string Table::csv() const {
  std::ostringstream os;
  csv_line(os, columns);
  for (const auto& r : rows) csv_line(os, r);
  return os.str();
}

json Table::records() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : rows) {
    nlohmann::json obj = nlohmann::json::object();
    for (std::size_t i = 0; i < columns.size(); ++i) obj[columns[i]] = r[i];
    arr.push_back(std::move(obj));
  }
  return arr;
}

// ---------------------------------------------------------------- hashing

bool affects_result(const std::string& key) {
  return key != "shards" && key != "out" && key != "format" && key != "cache";
}

std::string canonical_params(const Params& p) {
  std::string s;
  for (const auto& [k, v] : p)
    if (affects_result(k)) s += k + "=" + v + ";";
  return s;
}

std::string input_hash(const std::string& command, const Params& p) { return sha256_hex(command + "|" + canonical_params(p)); }

json RunManifest::to_json() const {
  json params = json::object();
  for (const auto& [k, v] : parameters) params[k] = v;
  return {{"schemaVersion", schemaVersion},
          {"command", command},
          {"parameters", params},
          {"codeVersion", codeVersion},
          {"startedAt", startedAt},
          {"finishedAt", finishedAt},
          {"inputHash", inputHash},
          {"outputHash", outputHash},
          {"csvSchema", {{"version", kCsvSchemaVersion}, {"columns", csvColumns}}},
          {"cacheHit", cacheHit},
          {"summary", summary},
          {"artifacts", artifacts}};
}

// ---------------------------------------------------------------- cache

Cache::Cache(fs::path root) : root_(std::move(root)) {}

std::string Cache::key(const std::string& command, const Params& p, const std::string& codeVersion) {
  return sha256_hex(command + "|" + canonical_params(p) + "|" + codeVersion);
}

fs::path Cache::entry_path(const std::string& k) const { return root_ / (k + ".json"); }

void Cache::quarantine(const fs::path& file) {
  const fs::path q = root_ / "quarantine";
  fs::create_directories(q);
  std::error_code ec;
  fs::rename(file, q / (file.filename().string() + "." + std::to_string(std::time(nullptr))), ec);
  if (ec) fs::remove(file, ec);
  ++quarantined_;
}

std::optional<RunOutput> Cache::lookup(const std::string& command, const Params& p) {
  const std::string k = key(command, p);
  const fs::path file = entry_path(k);
  if (!fs::exists(file)) return std::nullopt;
  try {
    std::ifstream in(file);
    const json e = json::parse(in);
    if (e.at("key").get<std::string>() != k || e.at("codeVersion").get<std::string>() != BQF_VERSION)
      throw std::runtime_error("key mismatch");
    const std::string body = e.at("csv").get<std::string>();
    if (sha256_hex(body) != e.at("csvHash").get<std::string>()) throw std::runtime_error("hash mismatch");
    RunOutput out;
    out.table.columns = e.at("columns").get<std::vector<std::string>>();
    out.table.rows = e.at("rows").get<std::vector<std::vector<std::string>>>();
    if (out.table.csv() != body) throw std::runtime_error("rows disagree with body");
    out.summary = e.at("summary");
    out.passed = e.at("passed").get<bool>();
    return out;
  } catch (const std::exception&) {
    quarantine(file);
    return std::nullopt;
  }
}

void Cache::store(const std::string& command, const Params& p, const RunOutput& out) {
  fs::create_directories(root_);
  const std::string k = key(command, p);
  const std::string body = out.table.csv();
  const json e = {{"key", k},          {"command", command},         {"codeVersion", BQF_VERSION},
                  {"params", canonical_params(p)}, {"columns", out.table.columns}, {"rows", out.table.rows},
                  {"csv", body},       {"csvHash", sha256_hex(body)}, {"summary", out.summary},
                  {"passed", out.passed}};
  const fs::path tmp = entry_path(k).string() + ".tmp";
  {
    std::ofstream os(tmp);
    os << e.dump();
  }
  fs::rename(tmp, entry_path(k));
}

// ---------------------------------------------------------------- parameters

namespace {

const std::string& need(const Params& p, const std::string& key) {
  auto it = p.find(key);
  if (it == p.end()) throw ValidationError("missing parameter --" + key);
  return it->second;
}

std::string get_or(const Params& p, const std::string& key, const std::string& fallback) {
  auto it = p.find(key);
  return it == p.end() ? fallback : it->second;
}

std::int64_t parse_int(const std::string& key, const std::string& v) {
  try {
    std::size_t pos = 0;
    const long long x = std::stoll(v, &pos);
    if (pos != v.size()) throw std::invalid_argument(v);
    return x;
  } catch (const std::exception&) {
    throw ValidationError("--" + key + ": not an integer: " + v);
  }
}

double parse_double(const std::string& key, const std::string& v) {
  try {
    std::size_t pos = 0;
    const double x = std::stod(v, &pos);
    if (pos != v.size() || !std::isfinite(x)) throw std::invalid_argument(v);
    return x;
  } catch (const std::exception&) {
    throw ValidationError("--" + key + ": not a number: " + v);
  }
}

std::int64_t int_param(const Params& p, const std::string& key, std::int64_t lo, std::int64_t hi) {
  const std::int64_t x = parse_int(key, need(p, key));
  if (x < lo || x > hi)
    throw ValidationError("--" + key + " must lie in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  return x;
}

std::vector<std::int64_t> int_list(const std::string& key, const std::string& v) {
  std::vector<std::int64_t> out;
  std::stringstream ss(v);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_int(key, item));
  if (out.empty()) throw ValidationError("--" + key + ": empty list");
  return out;
}

BigRational positive_c(const Params& p) {
  BigRational C;
  try {
    C = parse_rational(get_or(p, "c", "1"));
  } catch (const std::exception&) {
    throw ValidationError("--c: expected an integer or p/q");
  }
  if (C <= 0) throw ValidationError("--c must be positive");
  return C;
}

int shards_of(const Params& p) {
  const std::int64_t s = parse_int("shards", get_or(p, "shards", "1"));
  if (s < 1 || s > 1024) throw ValidationError("--shards must lie in [1, 1024]");
  return static_cast<int>(s);
}

std::vector<RootClass> class_filter(const Params& p) {
  const std::string v = get_or(p, "class", "all");
  if (v == "all") return {kRootClasses.begin(), kRootClasses.end()};
  try {
    return {parse_root_class(v)};
  } catch (const std::exception&) {
    throw ValidationError("--class must be one of 0, 1, 2+, 2-, all");
  }
}

std::string yes(bool b) { return b ? "true" : "false"; }

// ---------------------------------------------------------------- commands

RunOutput run_census(const Params& p) {
  const std::int64_t X = int_param(p, "xmax", 1, 100000);
  const BigRational C = positive_c(p);
  CensusOptions opt;
  opt.shards = shards_of(p);
  const CensusResult r = census(X, C, opt);
  RunOutput out;
  out.table.columns = {"X", "C", "i", "count", "count_over_X2", "target", "rel_dev"};
  const double x2 = static_cast<double>(X) * static_cast<double>(X);
  for (RootClass rc : class_filter(p)) {
    const auto n = r.counts[static_cast<std::size_t>(class_index(rc))];
    const double v = static_cast<double>(n) / x2, target = census_target(rc, C);
    out.table.add({std::to_string(X), to_string(C), to_string(rc), std::to_string(n), fmt(v), fmt(target),
                   fmt((v - target) / target)});
  }
  out.summary = {{"box", static_cast<std::int64_t>(r.box)}, {"reducibleSkipped", r.reducible}};
  return out;
}

RunOutput run_ratio(const Params& p) {
  const std::int64_t X = int_param(p, "xmax", 10, 100000);
  CensusOptions opt;
  opt.shards = shards_of(p);
  const RatioReport r = ratio_report(X, opt);
  RunOutput out;
  out.table.columns = {"X", "i", "class_count", "eligible_pairs", "ratio", "target", "rel_dev"};
  const char* names[3] = {"0", "1", "2"};
  for (int i = 0; i < 3; ++i)
    out.table.add({std::to_string(X), names[i], std::to_string(r.classSums[i]), std::to_string(r.eligiblePairs[i]),
                   fmt(r.ratio[i]), fmt(r.target[i]), fmt((r.ratio[i] - r.target[i]) / r.target[i])});
  return out;
}

RunOutput run_fiber_check(const Params& p) {
  const auto abc = int_list("fiber", need(p, "fiber"));
  if (abc.size() != 3 || abc[0] == 0) throw ValidationError("--fiber expects a,b,c with a != 0");
  const std::int64_t X = int_param(p, "xmax", 1, 1000000000);
  const BigRational C = positive_c(p);
  if (8 * abc[0] * abc[2] - 3 * abc[1] * abc[1] == 0) throw ValidationError("--fiber: H = 8ac - 3b^2 must be nonzero");
  const FiberCheck f = fiber_check(abc[0], abc[1], abc[2], X, C);
  RunOutput out;
  out.table.columns = {"a", "b", "c", "X", "C", "exact", "area_over_covolume", "rel_error", "height_count",
                       "symmetric_diff", "low_count"};
  out.table.add({std::to_string(abc[0]), std::to_string(abc[1]), std::to_string(abc[2]), std::to_string(X),
                 to_string(C), std::to_string(f.exactCount), fmt(f.areaOverCovolume), fmt(f.relError),
                 std::to_string(f.heightCount), std::to_string(f.symmetricDiff), yes(f.lowCount)});
  return out;
}

RunOutput run_fourier_scan(const Params& p) {
  const std::int64_t amax = int_param(p, "amax", 1, 50);
  const std::int64_t range = int_param(p, "range", 0, 500);
  RunOutput out;
  out.table.columns = {"a", "b", "c", "cases", "on_condition", "max_on_dev", "max_off", "failures"};
  std::uint64_t failures = 0;
  for (std::int64_t a = -amax; a <= amax; ++a) {
    if (a == 0) continue;
    const double n = 12.0 * static_cast<double>(a < 0 ? -a : a);
    for (std::int64_t b = -amax; b <= amax; ++b)
      for (std::int64_t c = -amax; c <= amax; ++c) {
        std::uint64_t cases = 0, on = 0, bad = 0;
        double worstOn = 0, worstOff = 0;
        for (std::int64_t al = -range; al <= range; ++al)
          for (std::int64_t be = -range; be <= range; ++be) {
            ++cases;
            const double s = lattice_fourier_sum(a, b, c, al, be);
            const bool cond = mod_pos<std::int64_t>(al - 3 * b * be, 12 * a) == 0;
            const bool eps = lattice_fourier_magnitude(a, b, c, al, be) != 0;
            bad += eps != cond;
            if (cond) {
              ++on;
              worstOn = std::max(worstOn, std::fabs(s - n));
              bad += std::fabs(s - n) > 1e-6;
            } else {
              worstOff = std::max(worstOff, s);
              bad += s >= 1e-6;
            }
          }
        failures += bad;
        out.table.add({std::to_string(a), std::to_string(b), std::to_string(c), std::to_string(cases),
                       std::to_string(on), fmt(worstOn), fmt(worstOff), std::to_string(bad)});
      }
  }
  out.passed = failures == 0;
  out.summary = {{"failures", failures}, {"allPass", out.passed}};
  return out;
}

RunOutput run_eligible_scan(const Params& p) {
  const std::int64_t X = int_param(p, "xmax", 1, 10000000);
  const BigRational C = positive_c(p);
  RunOutput out;
  out.table.columns = {"X", "C", "disc_sign", "eligible_pairs", "pairs_over_X2C"};
  const double norm = static_cast<double>(X) * static_cast<double>(X) * C.convert_to<double>();
  for (int sign : {1, -1}) {
    const auto n = eligible_pair_count(X, C, sign);
    out.table.add({std::to_string(X), to_string(C), sign > 0 ? "+" : "-", std::to_string(n),
                   fmt(static_cast<double>(n) / norm)});
  }
  return out;
}

RunOutput run_volume(const Params& p) {
  const double X = parse_double("xmax", get_or(p, "xmax", "1000000"));
  if (X < 1) throw ValidationError("--xmax must be >= 1");
  const BigRational C = positive_c(p);
  const std::int64_t P = parse_int("P", get_or(p, "P", "100000"));
  if (P < 2 || P > 100000000) throw ValidationError("--P must lie in [2, 1e8]");
  const VolumeConstants v = volume_constants(X, C.convert_to<double>(), static_cast<std::uint32_t>(P));
  RunOutput out;
  out.table.columns = {"X", "C", "value_over_X2", "two_C", "rel_dev", "signed_value_over_X2", "fundamental_domain",
                       "P", "tamagawa_product"};
  const double twoC = 2 * C.convert_to<double>();
  out.table.add({fmt(X), to_string(C), fmt(v.valueOverX2), fmt(twoC), fmt(v.deviation / twoC),
                 fmt(v.signedValueOverX2), fmt(v.fundamentalDomain), std::to_string(P), fmt(v.tamagawaProduct)});
  return out;
}

RunOutput run_sieve(const Params& p) {
  const std::int64_t X = int_param(p, "xmax", 2, 5000);
  std::vector<std::int64_t> qs = int_list("q", get_or(p, "q", "5,11,23,47"));
  for (auto q : qs)
    if (q < 5) throw ValidationError("--q: every Q must be at least 5");
  const auto scan = sieve_scan(X, shards_of(p));
  const auto unresolved =
      static_cast<std::uint64_t>(std::count_if(scan.begin(), scan.end(), [](const SieveEntry& s) { return s.unresolved; }));
  RunOutput out;
  out.table.columns = {"X", "Q", "count", "count_Q_over_X2"};
  const double x2 = static_cast<double>(X) * static_cast<double>(X);
  for (auto q : qs) {
    const auto n = sieve_count(scan, static_cast<std::uint64_t>(q));
    out.table.add({std::to_string(X), std::to_string(q), std::to_string(n),
                   fmt(static_cast<double>(n) * static_cast<double>(q) / x2)});
  }
  out.summary = {{"curves", scan.size()}, {"unresolvedFactorizations", unresolved}};
  return out;
}

RunOutput run_selmer(const Params& p) {
  const std::int64_t X = int_param(p, "xmax", 2, 40);
  const bool merge = get_or(p, "merge", "true") == "true";
  const SelmerCensus s = selmer_census(X, shards_of(p), merge);
  RunOutput out;
  out.table.columns = {"A", "B", "h_e", "disc", "torsion2", "zClassCount", "mergedQClassCount", "localFailures"};
  for (const auto& r : s.records)
    out.table.add({to_string(r.curve.A), to_string(r.curve.B), to_string(r.curve.height()), to_string(r.curve.disc()),
                   std::to_string(r.torsion2), std::to_string(r.zClassCount),
                   r.mergedQClassCount ? std::to_string(*r.mergedQClassCount) : "", std::to_string(r.localFailures)});
  out.summary = {{"curves", s.records.size()},
                 {"meanOnePlusZ", s.meanZ},
                 {"stderrOnePlusZ", s.stderrZ},
                 {"meanOnePlusMerged", s.meanMerged},
                 {"stderrOnePlusMerged", s.stderrMerged}};
  return out;
}

RunOutput run_q_invariant(const Params& p) {
  const auto ab = int_list("cubic", need(p, "cubic"));
  if (ab.size() != 2) throw ValidationError("--cubic expects A,B");
  const BigInt A(ab[0]), B(ab[1]);
  if (-4 * A * A * A - 27 * B * B == 0) throw ValidationError("--cubic: discriminant is zero");
  CubicRing ring;
  try {
    ring = q_invariant(A, B);
  } catch (const std::invalid_argument& e) {
    throw ValidationError(std::string("--cubic: ") + e.what());
  }
  std::string sigma, note;
  if (ring.status == FactorStatus::complete) {
    try {
      sigma = to_string(sigma_embed(A, B, ring.Q));
    } catch (const NonCyclicIndex&) {
      note = "non-cyclic index";
    }
  } else {
    note = "factorization unresolved";
  }
  RunOutput out;
  out.table.columns = {"A", "B", "disc", "Q", "D", "status", "sigma", "note"};
  out.table.add({to_string(A), to_string(B), to_string(ring.disc), to_string(ring.Q), to_string(ring.D),
                 ring.status == FactorStatus::complete ? "complete" : "unresolved", sigma, note});
  return out;
}

using checks::CheckResult;

// Identical CSV bodies for shard counts 1, 4 and 16.
CheckResult shard_check(const std::string& command, Params p) {
  const auto t0 = std::chrono::steady_clock::now();
  std::vector<std::string> hashes;
  for (int k : {1, 4, 16}) {
    p["shards"] = std::to_string(k);
    hashes.push_back(sha256_hex(compute(command, p).table.csv()));
  }
  CheckResult r;
  r.name = "shard-determinism-" + command;
  r.passed = std::all_of(hashes.begin(), hashes.end(), [&](const std::string& h) { return h == hashes.front(); });
  r.detail = "shards 1, 4, 16: " + std::string(r.passed ? "identical" : "different") + " CSV bodies (" +
             hashes.front().substr(0, 16) + ")";
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

RunOutput run_verify(const Params& p) {
  const std::string level = get_or(p, "level", "desk");
  if (level != "desk" && level != "quick") throw ValidationError("--level must be desk or quick");
  const std::int64_t seed = parse_int("seed", get_or(p, "seed", "1"));
  if (seed < 0) throw ValidationError("--seed must be nonnegative");
  const bool desk = level == "desk";
  const int scale = desk ? 1 : 10;
  const auto s = static_cast<std::uint64_t>(seed);
  using namespace checks;
  std::vector<CheckResult> results{
      syzygy(100000 / scale, 1000000, s),
      gl2_invariance(10000 / scale, s + 1),
      upsilon_round_trip(10000 / scale, s + 2),
      height_transport(10000 / scale, BigRational(1), s + 3),
      height_transport(10000 / scale, BigRational(36), s + 4),
      single_root_identity(1000 / scale, s + 5),
      discriminant_sign(2000 / scale, s + 6),
      lattice_fourier(desk ? 5 : 2, desk ? 30 : 10),
      fiber_single(1, 0, -1, desk ? 1000000 : 10000, 0.01),
      eligibility_table(),
      eligible_pairs_brute(desk ? 300 : 50),
      canonicalize_invariance(5000 / scale, 200, s + 7),
      volume(1e6, 1, 0.05),
      volume(1e6, 36, 0.05),
      tamagawa(100000, 1e-4),
      sigma_identities(1000 / scale, 50, s + 8),
      maximality_testers(desk ? 100000 : 5000, desk ? 2000 : 200),
      q_invariant_examples(),
      local_solubility_invariance(200 / scale, s + 9),
      local_large_primes(100 / scale, s + 10),
  };
  if (desk) results.push_back(fiber_equidistribution(1000000, 50, 1e4, 0.03, s + 11));
  results.push_back(shard_check("census", {{"xmax", desk ? "40" : "15"}, {"c", "1"}}));
  results.push_back(shard_check("sieve", {{"xmax", desk ? "60" : "20"}, {"q", "5,11,23,47"}}));
  results.push_back(shard_check("selmer", {{"xmax", desk ? "6" : "4"}}));
  RunOutput out;
  out.table.columns = {"check", "passed", "detail"};
  std::uint64_t failed = 0;
  json timings = json::object();
  for (const auto& r : results) {
    out.table.add({r.name, yes(r.passed), r.detail});
    failed += !r.passed;
    timings[r.name] = r.seconds;
  }
  out.passed = failed == 0;
  out.summary = {{"checks", results.size()}, {"failed", failed}, {"seconds", timings}};
  return out;
}

}  // namespace

// ---------------------------------------------------------------- dispatch

const std::vector<std::string>& commands() {
  static const std::vector<std::string> c{"census", "ratio", "fiber-check", "fourier-scan", "eligible-scan",
                                          "volume", "sieve", "selmer",      "q-invariant",  "verify"};
  return c;
}

bool cacheable(const std::string& command) { return command == "census" || command == "ratio" || command == "selmer" || command == "sieve"; }

RunOutput compute(const std::string& command, const Params& p) {
  if (command == "census") return run_census(p);
  if (command == "ratio") return run_ratio(p);
  if (command == "fiber-check") return run_fiber_check(p);
  if (command == "fourier-scan") return run_fourier_scan(p);
  if (command == "eligible-scan") return run_eligible_scan(p);
  if (command == "volume") return run_volume(p);
  if (command == "sieve") return run_sieve(p);
  if (command == "selmer") return run_selmer(p);
  if (command == "q-invariant") return run_q_invariant(p);
  if (command == "verify") return run_verify(p);
  throw ValidationError("unknown command: " + command);
}

fs::path resolve_out_dir(const std::string& flag) {
  if (!flag.empty()) return flag;
  if (const char* env = std::getenv("OUTPUT_DIR"); env && *env) return env;
  return "runs";
}

RunResult execute(const RunRequest& req) {
  if (req.format != "csv" && req.format != "json") throw ValidationError("--format must be csv or json");
  RunResult res;
  RunManifest& m = res.manifest;
  m.command = req.command;
  m.parameters = req.params;
  m.startedAt = utc_now();
  m.inputHash = input_hash(req.command, req.params);

  std::optional<RunOutput> cached;
  Cache cache(req.outDir / ".cache");
  const bool useCache = req.useCache && cacheable(req.command);
  if (useCache) cached = cache.lookup(req.command, req.params);
  if (cached) {
    res.output = std::move(*cached);
    m.cacheHit = true;
  } else {
    res.output = compute(req.command, req.params);
    if (useCache) cache.store(req.command, req.params, res.output);
  }
  if (cache.quarantined()) res.output.summary["quarantinedCacheEntries"] = cache.quarantined();

  const std::string body = res.output.table.csv();
  m.outputHash = sha256_hex(body);
  m.csvColumns = res.output.table.columns;
  m.summary = res.output.summary;

  fs::create_directories(req.outDir);
  res.dataPath = req.outDir / (req.command + (req.format == "csv" ? ".csv" : ".json"));
  {
    std::ofstream os(res.dataPath, std::ios::binary);
    if (req.format == "csv")
      os << body;
    else
      os << json{{"columns", res.output.table.columns}, {"rows", res.output.table.records()}}.dump(2) << '\n';
  }
  m.artifacts = {res.dataPath.filename().string()};
  m.finishedAt = utc_now();
  res.manifestPath = req.outDir / (req.command + ".manifest.json");
  std::ofstream(res.manifestPath) << m.to_json().dump(2) << '\n';
  return res;
}

}  // namespace bqf::harness
