#include "bqf/checks.hpp"

#include "bqf/census.hpp"
#include "bqf/elliptic.hpp"
#include "bqf/local.hpp"
#include "bqf/number_theory.hpp"
#include "bqf/quartic.hpp"
#include "bqf/reduction.hpp"
#include "bqf/semiinv.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <chrono>
#include <cmath>
#include <random>
#include <sstream>

namespace bqf::checks {

namespace {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) { return std::uniform_int_distribution<std::int64_t>(lo, hi)(gen_); }

 private:
  std::mt19937_64 gen_;
};

QuarticForm random_form(Rng& rng, std::int64_t m) {
  return {rng.uniform(-m, m), rng.uniform(-m, m), rng.uniform(-m, m), rng.uniform(-m, m), rng.uniform(-m, m)};
}

bool nondegenerate(const QuarticForm& f) { return disc_of(inv_I(f), inv_J(f)) != 0; }

QuarticForm random_nondegenerate(Rng& rng, std::int64_t m) {
  for (;;) {
    QuarticForm f = random_form(rng, m);
    if (nondegenerate(f)) return f;
  }
}

UnimodularMap random_unimodular(Rng& rng) {
  UnimodularMap g = UnimodularMap::identity();
  const int steps = static_cast<int>(rng.uniform(1, 6));
  for (int i = 0; i < steps; ++i) {
    switch (rng.uniform(0, 3)) {
      case 0: g = g * UnimodularMap::swap(); break;
      case 1: g = g * UnimodularMap::negate_x(); break;
      case 2: g = g * UnimodularMap::translate(rng.uniform(-3, 3)); break;
      default: g = g * UnimodularMap{1, rng.uniform(-3, 3), 0, 1}; break;
    }
  }
  return g;
}

// (x - k y) times a random cubic.
QuarticForm with_linear_factor(Rng& rng, std::int64_t m) {
  const BigInt k = rng.uniform(-m, m);
  const BigInt h0 = rng.uniform(1, m), h1 = rng.uniform(-m, m), h2 = rng.uniform(-m, m), h3 = rng.uniform(-m, m);
  return {h0, h1 - k * h0, h2 - k * h1, h3 - k * h2, -k * h3};
}

class Timer {
 public:
  Timer() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const { return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count(); }

 private:
  std::chrono::steady_clock::time_point start_;
};

CheckResult finish(std::string name, bool ok, const std::ostringstream& detail, const Timer& t) {
  return {std::move(name), ok, detail.str(), t.seconds()};
}

}  // namespace

CheckResult syzygy(int samples, std::int64_t coeffMax, std::uint64_t seed) {
  Timer t;
  Rng rng(seed);
  int bad = 0;
  for (int i = 0; i < samples; ++i) bad += syzygy_residual(random_form(rng, coeffMax)) != 0;
  std::ostringstream d;
  d << samples << " forms, |coeff| <= " << coeffMax << ", nonzero residuals " << bad;
  return finish("syzygy", bad == 0, d, t);
}

CheckResult gl2_invariance(int samples, std::uint64_t seed) {
  Timer t;
  Rng rng(seed);
  int bad = 0;
  for (int i = 0; i < samples; ++i) {
    const QuarticForm f = random_form(rng, 1000);
    const QuarticForm g = act(random_unimodular(rng), f);
    bad += inv_I(f) != inv_I(g) || inv_J(f) != inv_J(g);
  }
  std::ostringstream d;
  d << samples << " pairs (g, f), mismatches " << bad;
  return finish("gl2-invariance", bad == 0, d, t);
}

CheckResult upsilon_round_trip(int samples, std::uint64_t seed) {
  Timer t;
  Rng rng(seed);
  int bad = 0;
  for (int i = 0; i < samples; ++i) {
    QuarticForm f = random_form(rng, 100000);
    if (f.a == 0) f.a = 1;
    const SemiForm s = upsilon(f);
    bad += upsilon_inv(s) != convert<BigRational>(f) || !lambda_member(s);
  }
  std::ostringstream d;
  d << samples << " forms, failures " << bad;
  return finish("upsilon-round-trip", bad == 0, d, t);
}

CheckResult height_transport(int samples, const BigRational& C, std::uint64_t seed) {
  Timer t;
  Rng rng(seed);
  int bad = 0, flat = 0;
  for (int i = 0; i < samples; ++i) {
    QuarticForm f = random_form(rng, 1000);
    if (i % 10 == 0) {
      // H = 0 through (m, 4m, 6m).
      const std::int64_t m = rng.uniform(1, 30) * (i % 20 == 0 ? 1 : -1);
      f.a = m;
      f.b = 4 * m;
      f.c = 6 * m;
      ++flat;
    }
    if (f.a == 0) f.a = -1;
    bad += height(f, C) != height(upsilon(f), C);
  }
  std::ostringstream d;
  d << samples << " forms (" << flat << " with H = 0), C = " << C << ", mismatches " << bad;
  return finish("height-transport", bad == 0, d, t);
}

CheckResult single_root_identity(int samples, std::uint64_t seed) {
  Timer t;
  Rng rng(seed);
  int done = 0, bad = 0;
  while (done < samples) {
    const QuarticForm f = with_linear_factor(rng, 40);
    if (semi_R(f) == 0 || rational_roots(f).size() != 1) continue;
    ++done;
    bad += single_root_identity_residual(f) != 0;
  }
  std::ostringstream d;
  d << done << " forms (x - ky) h(x, y), nonzero residuals " << bad;
  return finish("single-root-identity", bad == 0, d, t);
}

CheckResult discriminant_sign(int samples, std::uint64_t seed) {
  Timer t;
  Rng rng(seed);
  int bad = 0;
  for (int i = 0; i < samples; ++i) {
    const QuarticForm f = random_nondegenerate(rng, 50);
    const BigRational disc = disc_of(inv_I(f), inv_J(f));
    const bool i1 = real_root_class(f) == RootClass::i1;
    bad += (i1 != (disc < 0)) || BigRational(poly_discriminant(f)) != disc;
  }
  std::ostringstream d;
  d << samples << " forms, root-class or discriminant mismatches " << bad;
  return finish("discriminant-sign", bad == 0, d, t);
}

CheckResult lattice_fourier(std::int64_t amax, std::int64_t range) {
  Timer t;
  std::uint64_t cases = 0, on = 0, bad = 0;
  double worstOn = 0, worstOff = 0;
  for (std::int64_t a = -amax; a <= amax; ++a) {
    if (a == 0) continue;
    const double n = 12.0 * static_cast<double>(a < 0 ? -a : a);
    for (std::int64_t b = -amax; b <= amax; ++b)
      for (std::int64_t c = -amax; c <= amax; ++c)
        for (std::int64_t al = -range; al <= range; ++al)
          for (std::int64_t be = -range; be <= range; ++be) {
            ++cases;
            const double s = lattice_fourier_sum(a, b, c, al, be);
            const bool eps = lattice_fourier_magnitude(a, b, c, al, be) != 0;
            const bool cond = mod_pos<std::int64_t>(al - 3 * b * be, 12 * a) == 0;
            if (eps != cond) ++bad;
            if (cond) {
              ++on;
              worstOn = std::max(worstOn, std::fabs(s - n));
              if (std::fabs(s - n) > 1e-6) ++bad;
            } else {
              worstOff = std::max(worstOff, s);
              if (s >= 1e-6) ++bad;
            }
          }
  }
  std::ostringstream d;
  d << cases << " cases, " << on << " on the lattice condition, max |sum - 12|a|| " << worstOn
    << ", max off-condition |sum| " << worstOff << ", failures " << bad;
  return finish("lattice-fourier", bad == 0, d, t);
}

CheckResult fiber_equidistribution(std::int64_t X, int fibers, double minExpected, double tolerance, std::uint64_t seed,
                                   std::vector<FiberSample>* samples) {
  Timer t;
  Rng rng(seed);
  const double hmin = std::pow(static_cast<double>(X), 0.8);
  std::vector<FiberSample> got;
  for (int attempt = 0; attempt < 200000 && static_cast<int>(got.size()) < fibers; ++attempt) {
    const std::int64_t a = rng.uniform(1, 6) * (rng.uniform(0, 1) ? 1 : -1);
    const std::int64_t abs_a = a < 0 ? -a : a;
    const std::int64_t b = rng.uniform(-2 * abs_a, 2 * abs_a);
    const auto cmax = static_cast<std::int64_t>(4 * hmin / static_cast<double>(abs_a));
    const std::int64_t c = rng.uniform(-cmax, cmax);
    const std::int64_t H = 8 * a * c - 3 * b * b;
    if (static_cast<double>(H < 0 ? -H : H) < hmin) continue;
    // Cheap estimates before the exact count: area 4 R0 w over covolume 96|a|^3,
    // enumeration cost about 2 R0 / (8 a^2) residues.
    const FiberRegion reg = fiber_region(a, b, c, X, BigRational(1));
    const double w = static_cast<double>(reg.iHalfWidth), a3 = static_cast<double>(abs_a * abs_a * abs_a);
    if (4 * reg.R0 * w / (96 * a3) < 0.9 * minExpected) continue;
    if (2 * reg.R0 / (8.0 * static_cast<double>(abs_a * abs_a)) > 2e5) continue;
    const FiberCheck fc = fiber_check(a, b, c, X, 1);
    if (fc.areaOverCovolume < minExpected) continue;
    got.push_back({a, b, c, fc.areaOverCovolume, fc.relError});
  }
  std::vector<double> errs;
  for (const auto& s : got) errs.push_back(s.relError);
  std::sort(errs.begin(), errs.end());
  const double p90 = errs.empty() ? 1.0 : errs[static_cast<std::size_t>(std::ceil(0.9 * static_cast<double>(errs.size()))) - 1];
  std::ostringstream d;
  d << got.size() << " fibers at X = " << X << " (|H| >= X^0.8, expected >= " << minExpected << "), 90th percentile "
    << p90 << ", max " << (errs.empty() ? 0.0 : errs.back()) << ", tolerance " << tolerance;
  if (samples) *samples = got;
  return finish("fiber-equidistribution", static_cast<int>(got.size()) >= fibers && p90 <= tolerance, d, t);
}

CheckResult fiber_single(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t X, double tolerance) {
  Timer t;
  const FiberCheck fc = fiber_check(a, b, c, X, 1);
  std::ostringstream d;
  d << "(" << a << "," << b << "," << c << ") X = " << X << ": exact " << fc.exactCount << ", area/covolume "
    << fc.areaOverCovolume << ", relative error " << fc.relError;
  return finish("fiber-single", fc.relError <= tolerance, d, t);
}

CheckResult eligibility_table() {
  Timer t;
  std::array<std::uint32_t, 27> rows{};
  for (int a = 0; a < 27; ++a)
    for (int b = 0; b < 27; ++b)
      for (int c = 0; c < 27; ++c)
        for (int d = 0; d < 27; ++d)
          for (int e = 0; e < 27; ++e) {
            const int I = ((12 * a * e - 3 * b * d + c * c) % 27 + 27) % 27;
            const long J = (72L * a * c * e + 9L * b * c * d - 27L * a * d * d - 27L * e * b * b - 2L * c * c * c) % 27;
            rows[I] |= 1u << ((J + 27) % 27);
          }
  int bad = 0, pairs = 0;
  for (int i = 0; i < 27; ++i) {
    bad += rows[i] != eligibility_row(i);
    pairs += std::popcount(rows[i]);
  }
  std::ostringstream d;
  d << pairs << " eligible residue pairs mod 27, table version " << eligibility_table_version() << ", mismatched rows "
    << bad;
  return finish("eligibility-table", bad == 0, d, t);
}

CheckResult eligible_pairs_brute(std::int64_t X) {
  Timer t;
  std::uint64_t pos = 0, neg = 0;
  for (std::int64_t I = -X + 1; I < X; ++I)
    for (std::int64_t J = -X + 1; J < X; ++J) {
      if (!is_eligible(I, J)) continue;
      const std::int64_t disc = 4 * I * I * I - J * J;
      pos += disc > 0;
      neg += disc < 0;
    }
  const std::uint64_t fp = eligible_pair_count(X, 1, 1), fn = eligible_pair_count(X, 1, -1);
  std::ostringstream d;
  d << "X = " << X << ": disc > 0 " << fp << " vs " << pos << ", disc < 0 " << fn << " vs " << neg;
  return finish("eligible-pairs", fp == pos && fn == neg, d, t);
}

CheckResult canonicalize_invariance(int samples, std::int64_t coeffMax, std::uint64_t seed) {
  Timer t;
  Rng rng(seed);
  int bad = 0, linear = 0;
  for (int i = 0; i < samples; ++i) {
    QuarticForm f = random_nondegenerate(rng, coeffMax);
    if (i % 4 == 0) {
      f = with_linear_factor(rng, coeffMax / 4 + 1);
      if (!nondegenerate(f)) continue;
      ++linear;
    }
    const QuarticForm cf = canonicalize(f);
    const QuarticForm g = act(random_unimodular(rng), f);
    bad += canonicalize(g) != cf || canonicalize(cf) != cf;
  }
  std::ostringstream d;
  d << samples << " orbits (" << linear << " with a linear factor), |coeff| <= " << coeffMax << ", failures " << bad;
  return finish("canonicalize-invariance", bad == 0, d, t);
}

CheckResult volume(double X, double C, double tolerance) {
  Timer t;
  const VolumeConstants v = volume_constants(X, C);
  const double rel = std::fabs(v.valueOverX2 - 2 * C) / (2 * C);
  std::ostringstream d;
  d << "X = " << X << ", C = " << C << ": value/X^2 " << v.valueOverX2 << " vs " << 2 * C << " (relative " << rel << ")";
  return finish("volume", rel <= tolerance, d, t);
}

CheckResult tamagawa(std::uint32_t P, double tolerance) {
  Timer t;
  const VolumeConstants v = volume_constants(1e6, 1, P);
  const double dev = std::fabs(v.tamagawaProduct - 2);
  std::ostringstream d;
  d.precision(12);
  d << "P = " << P << ": 2 zeta(2) prod (1 - p^-2) = " << v.tamagawaProduct << " (|dev| " << dev << ")";
  return finish("tamagawa", dev <= tolerance, d, t);
}

CheckResult sigma_identities(int samples, std::int64_t hmax, std::uint64_t seed) {
  Timer t;
  Rng rng(seed);
  int done = 0, bad = 0, nontrivial = 0, noncyclic = 0, attempts = 0;
  auto identities = [](const QuarticForm& f, const BigInt& A, const BigInt& B, const BigInt& n) {
    return inv_I(f) == -3 * A && inv_J(f) == -27 * B && f.a == 0 && f.b == n;
  };
  while (done < samples && attempts < 100 * samples) {
    ++attempts;
    const BigInt A = rng.uniform(-hmax + 1, hmax - 1), B = rng.uniform(-hmax + 1, hmax - 1);
    if (B == 0 || -4 * A * A * A - 27 * B * B == 0 || !is_minimal(A, B)) continue;
    CubicRing ring;
    try {
      ring = q_invariant(A, B);
    } catch (const std::invalid_argument&) {
      continue;  // reducible
    }
    if (ring.status != FactorStatus::complete) continue;
    ++done;
    nontrivial += ring.Q > 1;
    const BigInt D4 = mod_pos<BigInt>(ring.D, BigInt(4));
    bool ok = ring.disc == ring.D * ring.Q * ring.Q && (D4 == 0 || D4 == 1);
    try {
      ok = ok && identities(sigma_embed(A, B, ring.Q), A, B, ring.Q);
    } catch (const NonCyclicIndex&) {
      // The largest admissible divisor of Q still has to satisfy the identities.
      ++noncyclic;
      bool found = false;
      const auto divs = divisors(to_i64(ring.Q));
      for (auto it = divs.rbegin(); !found && it != divs.rend(); ++it) {
        try {
          ok = ok && identities(sigma_embed(A, B, BigInt(*it)), A, B, BigInt(*it));
          found = true;
        } catch (const NonCyclicIndex&) {
        }
      }
      ok = ok && found;
    } catch (const std::logic_error&) {
      ok = false;
    }
    bad += !ok;
  }
  std::ostringstream d;
  d << done << " irreducible minimal cubics with height < " << hmax << " (" << nontrivial << " with Q > 1, " << noncyclic
    << " with non-cyclic index), failures " << bad;
  return finish("sigma-identities", done == samples && bad == 0, d, t);
}

CheckResult maximality_testers(std::int64_t discMax, std::int64_t amax) {
  Timer t;
  std::uint64_t cubics = 0, primeTests = 0, nonmax = 0, bad = 0;
  for (std::int64_t A = -amax; A <= amax; ++A) {
    const BigInt a3 = 4 * BigInt(A) * A * A;
    const BigInt hi2 = floor_div<BigInt>(BigInt(discMax) - a3, BigInt(27));
    if (hi2 < 0) continue;
    BigInt lo2 = ceil_div<BigInt>(BigInt(-discMax) - a3, BigInt(27));
    if (lo2 < 0) lo2 = 0;
    BigInt blo = isqrt(lo2);
    if (blo * blo < lo2) ++blo;
    const BigInt bhi = isqrt(hi2);
    for (BigInt b0 = blo; b0 <= bhi; ++b0)
      for (const BigInt& B : {b0, BigInt(-b0)}) {
        if (B == 0) continue;
        const BigInt disc = -a3 - 27 * B * B;
        if (disc == 0) continue;
        bool reducible = false;
        for (std::int64_t x0 : divisors(to_i64(B)))
          for (const BigInt& x : {BigInt(x0), BigInt(-x0)}) reducible = reducible || x * x * x + A * x + B == 0;
        if (reducible) continue;
        ++cubics;
        const auto fac = factor(static_cast<std::uint64_t>(abs_val(disc)));
        for (const auto& [p, e] : fac.factors) {
          if (e < 2) continue;
          ++primeTests;
          const bool ded = dedekind_maximal(A, B, p);
          const bool sub = sublattice_maximal(A, B, p);
          const bool idx = index_exponent(BinaryCubic{1, 0, A, B}, p) == 0;
          nonmax += !ded;
          bad += ded != sub || ded != idx;
        }
      }
  }
  std::ostringstream d;
  d << cubics << " irreducible cubics with |disc| <= " << discMax << ", |A| <= " << amax << "; " << primeTests
    << " prime tests (" << nonmax << " non-maximal), disagreements " << bad;
  return finish("maximality-testers", bad == 0, d, t);
}

CheckResult q_invariant_examples() {
  Timer t;
  const CubicRing r1 = q_invariant(1, 1), r2 = q_invariant(-1, -4), r3 = q_invariant(0, -2);
  const bool ok = r1.Q == 1 && r2.Q == 2 && r3.Q == 1 && r3.D == -108 &&
                  sigma_embed(1, 1, 1) == QuarticForm{0, 1, 0, 1, 1} && sigma_embed(-1, -4, 2) == QuarticForm{0, 2, 3, 1, -1};
  std::ostringstream d;
  d << "x^3+x+1: Q = " << r1.Q << "; x^3-x-4: Q = " << r2.Q << "; x^3-2: Q = " << r3.Q << ", D = " << r3.D;
  return finish("q-invariant-examples", ok, d, t);
}

CheckResult local_solubility_invariance(int samples, std::uint64_t seed) {
  Timer t;
  Rng rng(seed);
  int bad = 0, soluble = 0;
  for (int i = 0; i < samples; ++i) {
    const QuarticForm f = random_nondegenerate(rng, 12);
    const bool s = locally_soluble(f);
    soluble += s;
    bad += s != locally_soluble(act(random_unimodular(rng), f));
  }
  const bool examples = locally_soluble({1, 0, 1, 0, 1}) && !locally_soluble({-1, 0, 0, 0, -1}) &&
                        !locally_soluble({3, 0, 0, 0, 3});
  std::ostringstream d;
  d << samples << " pairs (" << soluble << " soluble), mismatches " << bad << ", fixed examples "
    << (examples ? "ok" : "wrong");
  return finish("local-solubility-invariance", bad == 0 && examples, d, t);
}

CheckResult local_large_primes(int samples, std::uint64_t seed) {
  Timer t;
  Rng rng(seed);
  int bad = 0, done = 0;
  while (done < samples) {
    const QuarticForm f = random_nondegenerate(rng, 50);
    const auto p = static_cast<std::uint64_t>(rng.uniform(32, 600));
    if (!is_prime(p) || poly_discriminant(f) % BigInt(p) == 0) continue;
    ++done;
    bad += !qp_soluble(f, p);
  }
  std::ostringstream d;
  d << done << " random (f, p) with p >= 32, p not dividing 2 disc; insoluble " << bad;
  return finish("local-large-primes", bad == 0, d, t);
}

}  // namespace bqf::checks
