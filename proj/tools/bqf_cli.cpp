// bqf: batch runner for quartic-form censuses, lattice checks and the
// elliptic-curve experiments. One subcommand per experiment; every run
// writes <out>/<command>.csv (or .json) and <out>/<command>.manifest.json.

#include "bqf/harness.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <map>
#include <memory>

namespace {

using bqf::harness::Params;

struct Sub {
  CLI::App* app;
  std::map<std::string, std::string> values;
  std::string out, format = "csv";
  bool noCache = false;
};

void opt(Sub& s, const std::string& name, const std::string& help) {
  s.app->add_option("--" + name, s.values[name], help);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Binary quartic form and elliptic curve experiments"};
  app.require_subcommand(1);

  const std::map<std::string, std::string> blurbs{
      {"census", "GL2(Z)-classes with h_C < X per root class"},
      {"ratio", "class counts over eligible (I, J) pairs"},
      {"fiber-check", "exact lattice count in one (a, b, c) fiber against area/covolume"},
      {"fourier-scan", "lattice Fourier coefficients over a box of (a, b, c, alpha, beta)"},
      {"eligible-scan", "eligible (I, J) pairs by discriminant sign"},
      {"volume", "volume of the height region and the Tamagawa product"},
      {"sieve", "minimal curves with p^2 | disc for some p > Q"},
      {"selmer", "locally soluble quartic classes per minimal curve"},
      {"q-invariant", "index of Z[theta] in the maximal order, and the quartic embedding"},
      {"verify", "property suite and shard determinism; nonzero exit on failure"},
  };

  std::vector<std::unique_ptr<Sub>> subs;
  for (const auto& name : bqf::harness::commands()) {
    auto s = std::make_unique<Sub>();
    s->app = app.add_subcommand(name, blurbs.at(name));
    s->app->add_option("--out", s->out, "output directory (default $OUTPUT_DIR, else ./runs)");
    s->app->add_option("--format", s->format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    s->app->add_flag("--no-cache", s->noCache, "recompute even when a cached result exists");
    opt(*s, "shards", "independent work partitions (output does not depend on it)");
    opt(*s, "seed", "seed for randomized checks");
    if (name == "census" || name == "ratio" || name == "fiber-check" || name == "eligible-scan" || name == "volume" ||
        name == "sieve" || name == "selmer")
      opt(*s, "xmax", "height bound X");
    if (name == "census" || name == "fiber-check" || name == "eligible-scan" || name == "volume")
      opt(*s, "c", "height weight C, integer or p/q");
    if (name == "census") opt(*s, "class", "0, 1, 2+, 2- or all");
    if (name == "fiber-check") opt(*s, "fiber", "a,b,c");
    if (name == "fourier-scan") {
      opt(*s, "amax", "bound on |a|, |b|, |c|");
      opt(*s, "range", "bound on |alpha|, |beta|");
    }
    if (name == "volume") opt(*s, "P", "prime bound for the Tamagawa product");
    if (name == "sieve") opt(*s, "q", "comma-separated list of Q >= 5");
    if (name == "selmer") opt(*s, "merge", "true or false: merge Q-equivalent classes");
    if (name == "q-invariant") opt(*s, "cubic", "A,B for x^3 + Ax + B");
    if (name == "verify") opt(*s, "level", "desk or quick");
    subs.push_back(std::move(s));
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  for (const auto& s : subs) {
    if (!s->app->parsed()) continue;
    bqf::harness::RunRequest req;
    req.command = s->app->get_name();
    for (const auto& [k, v] : s->values)
      if (s->app->get_option("--" + k)->count() > 0) req.params[k] = v;
    req.outDir = bqf::harness::resolve_out_dir(s->out);
    req.format = s->format;
    req.useCache = !s->noCache;
    try {
      const auto res = bqf::harness::execute(req);
      std::cout << res.output.table.csv();
      std::cerr << "wrote " << res.dataPath.string() << " and " << res.manifestPath.string()
                << (res.manifest.cacheHit ? " (cache hit)" : "") << "\n";
      return res.output.passed ? 0 : 1;
    } catch (const std::invalid_argument& e) {
      std::cerr << "validation error: " << e.what() << "\n";
      return 3;
    } catch (const std::exception& e) {
      std::cerr << "internal error: " << e.what() << "\n";
      return 4;
    }
  }
  return 2;
}
