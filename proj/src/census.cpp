#include "bqf/census.hpp"

#include "bqf/number_theory.hpp"
#include "bqf/reduction.hpp"
#include "bqf/semiinv.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <numbers>
#include <thread>

namespace bqf {

int class_index(RootClass rc) {
  switch (rc) {
    case RootClass::i0: return 0;
    case RootClass::i1: return 1;
    case RootClass::i2plus: return 2;
    case RootClass::i2minus: return 3;
    default: throw std::invalid_argument("class_index: degenerate class");
  }
}

double CensusResult::normalized(RootClass rc) const {
  return static_cast<double>(counts[class_index(rc)]) / (static_cast<double>(X) * static_cast<double>(X));
}

std::int64_t census_box(std::int64_t X, double kappa) {
  return static_cast<std::int64_t>(std::ceil(kappa * std::sqrt(static_cast<double>(X))));
}

namespace {

struct ShardRunner {
  std::int64_t X, cp, cq, box;
  bool keepReps;
  CensusResult out;

  void visit(const Quartic64& f) {
    // Disc != 0, then the cheap neighbour test, then the full search.
    const int128 I = inv_I(f), J = inv_J(f);
    if (4 * I * I * I == J * J) return;
    if (!locally_minimal(f)) return;
    if (!(canonicalize_unchecked(f) == f)) return;
    const QuarticForm g = convert<BigInt>(f);
    if (!is_irreducible(g)) {
      ++out.reducible;
      return;
    }
    const RootClass rc = real_root_class(g);
    ++out.counts[class_index(rc)];
    if (keepReps) out.reps.push_back({f, rc});
  }

  void run_ab(std::int64_t a, std::int64_t b) {
    const int128 A = a, B = b;
    const int128 modR = 8 * A * A;
    const std::int64_t modI = 12 * (a < 0 ? -a : a);
    const double a2 = static_cast<double>(a) * static_cast<double>(a);
    const double C = static_cast<double>(cp) / static_cast<double>(cq);
    for (std::int64_t c = -box; c <= box; ++c) {
      const int128 H = 8 * A * c - 3 * B * B;
      const int128 zeta = B * B * B - 4 * A * B * c;
      // Bound |R| from the I-window meeting (-X, X); the exact test follows per d.
      double r_sq;
      const double h = static_cast<double>(H);
      if (H > 0) {
        const double w = 4.0 * C * std::fabs(static_cast<double>(a)) * static_cast<double>(X) / (3.0 * h);
        r_sq = (static_cast<double>(X) + w - h * h / (48.0 * a2)) * 48.0 * a2 * h / 27.0;
      } else if (H < 0) {
        const double w = 4.0 * C * std::fabs(static_cast<double>(a)) * static_cast<double>(X) / (3.0 * -h);
        r_sq = ((static_cast<double>(X) + w) * 48.0 * a2 * -h + -h * h * h) / 27.0;
      } else {
        // J = -27 R^2 / (64 a^3), so |J| < C X bounds R.
        r_sq = 64.0 * a2 * std::fabs(static_cast<double>(a)) * C * static_cast<double>(X) / 27.0;
      }
      if (r_sq < 0) continue;
      const double r_max = std::sqrt(r_sq) * (1 + 1e-9) + 2.0;
      const double z = static_cast<double>(zeta), m = static_cast<double>(modR);
      const auto d_lo = std::max<std::int64_t>(-box, static_cast<std::int64_t>(std::floor((-r_max - z) / m)));
      const auto d_hi = std::min<std::int64_t>(box, static_cast<std::int64_t>(std::ceil((r_max - z) / m)));
      for (std::int64_t d = d_lo; d <= d_hi; ++d) {
        if (H != 0) {
          const IRange rng = e_range(a, b, c, d, X, cp, cq);
          if (rng.lo > rng.hi) continue;
          for (std::int64_t I = rng.first(); I <= rng.hi; I += rng.modulus) emit(a, b, c, d, I);
        } else {
          const int128 R = zeta + modR * d;
          const int128 j64 = -27 * R * R;  // 64 a^3 J
          const int128 den = 64 * A * A * A;
          const int128 J = j64 / den;
          const int128 lim = static_cast<int128>(cp) * X;  // |J| cq < cp X
          if ((J < 0 ? -J : J) * cq >= lim) continue;
          const std::int64_t residue =
              mod_pos<std::int64_t>(c * c - 3 * b * d, modI);
          std::int64_t I = -X + 1;
          I += mod_pos<std::int64_t>(residue - I, modI);
          for (; I < X; I += modI) emit(a, b, c, d, I);
        }
      }
    }
  }

  void emit(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d, std::int64_t I) {
    const std::int64_t e = (I + 3 * b * d - c * c) / (12 * a);
    // Canonical reps satisfy |a| <= |e| (the swap S would otherwise lower the key).
    if ((e < 0 ? -e : e) < (a < 0 ? -a : a)) return;
    visit({a, b, c, d, e});
  }
};

}  // namespace

CensusResult census_shard(std::int64_t X, const BigRational& C, std::int64_t box, int shard, int shards, bool keepReps) {
  if (X < 1) throw std::invalid_argument("census: X must be >= 1");
  if (C <= 0) throw std::invalid_argument("census: C must be positive");
  if (shards < 1 || shard < 0 || shard >= shards) throw std::invalid_argument("census: bad shard index");
  ShardRunner run{X, to_i64(numerator(C)), to_i64(denominator(C)), box, keepReps, {}};
  std::int64_t index = 0;
  for (std::int64_t a = -box; a <= box; ++a) {
    if (a == 0) continue;
    for (std::int64_t b = -box; b <= box; ++b, ++index) {
      if (index % shards != shard) continue;
      run.run_ab(a, b);
    }
  }
  run.out.X = X;
  run.out.C = C;
  run.out.box = box;
  std::sort(run.out.reps.begin(), run.out.reps.end());
  return run.out;
}

CensusResult merge_census(const std::vector<CensusResult>& parts) {
  CensusResult out;
  if (parts.empty()) return out;
  out.X = parts.front().X;
  out.C = parts.front().C;
  out.box = parts.front().box;
  for (const auto& p : parts) {
    for (int i = 0; i < 4; ++i) out.counts[i] += p.counts[i];
    out.reducible += p.reducible;
    out.reps.insert(out.reps.end(), p.reps.begin(), p.reps.end());
  }
  std::sort(out.reps.begin(), out.reps.end());
  return out;
}

CensusResult census(std::int64_t X, const BigRational& C, const CensusOptions& opt) {
  const auto t0 = std::chrono::steady_clock::now();
  const std::int64_t box = census_box(X, opt.kappa);
  const int shards = std::max(1, opt.shards);
  int threads = opt.threads > 0 ? opt.threads : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  threads = std::min(threads, shards);
  std::vector<CensusResult> parts(shards);
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int s = next++; s < shards; s = next++) parts[s] = census_shard(X, C, box, s, shards, opt.keepReps);
  };
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  CensusResult out = merge_census(parts);
  out.X = X;
  out.C = C;
  out.box = box;
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return out;
}

double census_target(RootClass rc, const BigRational& C) {
  const double zeta2 = std::numbers::pi * std::numbers::pi / 6.0;
  const double c = C.convert_to<double>();
  return (rc == RootClass::i1 ? 2.0 : 1.0) * c * zeta2 / 27.0;
}

std::uint64_t eligible_pair_count(std::int64_t X, const BigRational& C, int sign) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("eligible_pair_count: sign must be +-1");
  // |J| < C X  <=>  |J| <= jmax
  const BigInt cx = numerator(C) * X;
  const BigInt cq = denominator(C);
  const BigInt jm = (cx % cq == 0) ? BigInt(cx / cq - 1) : BigInt(cx / cq);
  const std::int64_t jmax = to_i64(jm);
  auto count_in = [](std::int64_t lo, std::int64_t hi, std::uint32_t mask) {
    std::uint64_t n = 0;
    if (lo > hi) return n;
    for (int j = 0; j < 27; ++j) {
      if (!(mask >> j & 1u)) continue;
      n += static_cast<std::uint64_t>(floor_div<std::int64_t>(hi - j, 27) - floor_div<std::int64_t>(lo - 1 - j, 27));
    }
    return n;
  };
  std::uint64_t total = 0;
  for (std::int64_t I = -X + 1; I < X; ++I) {
    const std::uint32_t mask = eligibility_row(static_cast<int>(mod_pos<std::int64_t>(I, 27)));
    if (mask == 0) continue;
    const int128 four_i3 = 4 * static_cast<int128>(I) * I * I;
    if (sign > 0) {
      // J^2 < 4 I^3: |J| <= isqrt(4I^3 - 1).
      if (I <= 0) continue;
      const auto t = static_cast<std::int64_t>(std::min<int128>(isqrt(four_i3 - 1), jmax));
      total += count_in(-t, t, mask);
    } else if (I < 0) {
      total += count_in(-jmax, jmax, mask);
    } else {
      // J^2 > 4 I^3: |J| >= isqrt(4I^3) + 1.
      const int128 s = isqrt(four_i3) + 1;
      if (s > jmax) continue;
      const auto lo = static_cast<std::int64_t>(s);
      total += count_in(lo, jmax, mask) + count_in(-jmax, -lo, mask);
    }
  }
  return total;
}

RatioReport ratio_report(const CensusResult& c) {
  if (c.X < 10) throw std::invalid_argument("ratio_report: X must be >= 10");
  const double zeta2 = std::numbers::pi * std::numbers::pi / 6.0;
  RatioReport r;
  r.X = c.X;
  r.classSums = {c.counts[0], c.counts[1], c.counts[2] + c.counts[3]};
  const std::uint64_t pos = eligible_pair_count(c.X, c.C, 1), neg = eligible_pair_count(c.X, c.C, -1);
  r.eligiblePairs = {pos, neg, pos};
  const std::array<double, 3> n{4.0, 2.0, 2.0};
  for (int i = 0; i < 3; ++i) {
    r.ratio[i] = r.eligiblePairs[i] ? static_cast<double>(r.classSums[i]) / static_cast<double>(r.eligiblePairs[i]) : 0.0;
    r.target[i] = 2.0 * zeta2 / n[i];
  }
  return r;
}

RatioReport ratio_report(std::int64_t X, const CensusOptions& opt) { return ratio_report(census(X, BigRational(1), opt)); }

FiberCheck fiber_check(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t X, const BigRational& C) {
  const FiberLattice lat = fiber_lattice(a, b, c);
  const FiberRegion reg = fiber_region(a, b, c, X, C);
  if (reg.H == 0) throw std::invalid_argument("fiber_check: H = 0");
  const LatticeCount n = lattice_enumerate(lat, reg);
  FiberCheck out;
  out.exactCount = n.inRegion;
  out.heightCount = n.inHeight;
  out.symmetricDiff = n.symmetricDiff;
  const double absA = std::fabs(static_cast<double>(a));
  out.areaOverCovolume = 2.0 * reg.R0 * 2.0 * reg.iHalfWidth.convert_to<double>() / (96.0 * absA * absA * absA);
  out.relError = out.areaOverCovolume > 0
                     ? std::fabs(static_cast<double>(out.exactCount) - out.areaOverCovolume) / out.areaOverCovolume
                     : 0.0;
  out.lowCount = out.areaOverCovolume < 10.0;
  return out;
}

VolumeConstants volume_constants(double X, double C, std::uint32_t P) {
  if (X < 1) throw std::invalid_argument("volume_constants: X must be >= 1");
  using boost::math::quadrature::gauss_kronrod;
  const double cut = C / std::sqrt(X);  // |J| < C X^{-1/2}
  const double kink = std::min(1.0, std::cbrt((cut / 2.0) * (cut / 2.0)));  // 2 I^{3/2} = cut
  auto inner_pos = [&](double I) { return 2.0 * std::min(2.0 * std::pow(I, 1.5), cut); };
  auto inner_neg = [&](double I) { return 2.0 * std::max(0.0, cut - 2.0 * std::pow(I, 1.5)); };
  double pos = gauss_kronrod<double, 31>::integrate(inner_pos, 0.0, kink, 10, 1e-13);
  double neg = gauss_kronrod<double, 31>::integrate(inner_neg, 0.0, kink, 10, 1e-13);
  if (kink < 1.0) pos += gauss_kronrod<double, 31>::integrate(inner_pos, kink, 1.0, 10, 1e-13);
  neg += 2.0 * cut;  // I in [-1, 0): every |J| < cut has disc < 0
  const double scale = std::pow(X, 2.5);
  VolumeConstants v;
  v.value = scale * pos;
  v.valueOverX2 = v.value / (X * X);
  v.deviation = v.valueOverX2 - 2.0 * C;
  v.signedValue = scale * neg;
  v.signedValueOverX2 = v.signedValue / (X * X);
  v.signedDeviation = v.signedValueOverX2 - 2.0 * C;
  const double zeta2 = std::numbers::pi * std::numbers::pi / 6.0;
  v.fundamentalDomain = 2.0 * zeta2;
  double prod = v.fundamentalDomain;
  for (std::uint32_t p : primes_up_to(P)) prod *= 1.0 - 1.0 / (static_cast<double>(p) * p);
  v.tamagawaProduct = prod;
  v.tamagawaBound = P;
  return v;
}

}  // namespace bqf
