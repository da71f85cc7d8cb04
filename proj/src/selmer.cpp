#include "bqf/selmer.hpp"

#include "bqf/local.hpp"
#include "bqf/reduction.hpp"

#include <cmath>
#include <map>
#include <numeric>
#include <thread>

namespace bqf {

namespace {

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t i) {
  while (parent[i] != i) i = parent[i] = parent[parent[i]];
  return i;
}

void mean_and_error(const std::vector<double>& xs, double& mean, double& err) {
  mean = err = 0;
  if (xs.empty()) return;
  const double n = static_cast<double>(xs.size());
  mean = std::accumulate(xs.begin(), xs.end(), 0.0) / n;
  if (xs.size() < 2) return;
  double ss = 0;
  for (double x : xs) ss += (x - mean) * (x - mean);
  err = std::sqrt(ss / (n - 1) / n);
}

}  // namespace

std::optional<RationalMap> rational_equivalence(const QuarticForm& f, const QuarticForm& g, int bound) {
  if (g.a == 0 || g.e == 0) return std::nullopt;
  std::map<BigInt, std::vector<std::pair<std::int64_t, std::int64_t>>> byValue;
  for (std::int64_t r = -bound; r <= bound; ++r)
    for (std::int64_t s = -bound; s <= bound; ++s)
      if (r != 0 || s != 0) byValue[eval(f, BigInt(r), BigInt(s))].emplace_back(r, s);

  for (const auto& [v, points] : byValue) {
    if (v % g.a != 0) continue;
    BigInt d;
    const BigInt d2 = v / g.a;
    if (d2 <= 0 || !is_square(d2, d)) continue;
    const auto it = byValue.find(d2 * g.e);
    if (it == byValue.end()) continue;
    const QuarticForm target{d2 * g.a, d2 * g.b, d2 * g.c, d2 * g.d, d2 * g.e};
    for (const auto& [p, q] : points)
      for (const auto& [r, s] : it->second) {
        const BigInt det = BigInt(p) * s - BigInt(q) * r;
        if (det != d && det != -d) continue;
        if (substitute(f, BigInt(p), BigInt(q), BigInt(r), BigInt(s)) == target) return RationalMap{p, q, r, s};
      }
  }
  return std::nullopt;
}

SelmerProxyRecord selmer_proxy(const EllipticCurve& E, bool merge, int mergeBound) {
  SelmerProxyRecord rec;
  rec.curve = E;
  rec.torsion2 = torsion2(E);
  for (const auto& cls : classes_with_invariants(16 * E.I(), 64 * E.J())) {
    if (cls.linearFactor) continue;
    if (locally_soluble(cls.rep))
      rec.soluble.push_back(cls.rep);
    else
      ++rec.localFailures;
  }
  rec.zClassCount = rec.soluble.size();
  if (merge) {
    const std::size_t n = rec.soluble.size();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        if (find_root(parent, i) == find_root(parent, j)) continue;
        if (rational_equivalence(rec.soluble[i], rec.soluble[j], mergeBound))
          parent[find_root(parent, j)] = find_root(parent, i);
      }
    std::uint64_t comps = 0;
    for (std::size_t i = 0; i < n; ++i) comps += find_root(parent, i) == i;
    rec.mergedQClassCount = comps;
  }
  return rec;
}

SelmerCensus selmer_census(std::int64_t X, int shards, bool merge) {
  SelmerCensus out;
  out.X = X;
  const auto curves = enumerate_minimal_curves(X);
  out.records.resize(curves.size());
  const auto k = static_cast<std::size_t>(std::max(1, shards));
  auto work = [&](std::size_t shard) {
    for (std::size_t i = shard; i < curves.size(); i += k) out.records[i] = selmer_proxy(curves[i], merge);
  };
  std::vector<std::thread> pool;
  const std::size_t threads = std::min<std::size_t>(k, std::max(1u, std::thread::hardware_concurrency()));
  // Shards beyond the thread count run on the same workers, in shard order.
  for (std::size_t t = 0; t < threads; ++t)
    pool.emplace_back([&, t] {
      for (std::size_t s = t; s < k; s += threads) work(s);
    });
  for (auto& th : pool) th.join();

  std::vector<double> z, m;
  for (const auto& r : out.records) {
    z.push_back(1.0 + static_cast<double>(r.zClassCount));
    if (r.mergedQClassCount) m.push_back(1.0 + static_cast<double>(*r.mergedQClassCount));
  }
  mean_and_error(z, out.meanZ, out.stderrZ);
  mean_and_error(m, out.meanMerged, out.stderrMerged);
  return out;
}

}  // namespace bqf
