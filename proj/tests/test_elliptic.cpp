#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bqf/elliptic.hpp"
#include "bqf/number_theory.hpp"

#include <algorithm>
#include <random>

using namespace bqf;

TEST_CASE("factorization") {
  const auto f = factor(2UL * 2 * 3 * 1000003UL * 1000003UL);
  CHECK(f.status == FactorStatus::complete);
  CHECK(f.factors == std::vector<PrimePower>{{2, 2}, {3, 1}, {1000003, 2}});
  CHECK(factor(4294967291UL * 4294967279UL).factors == std::vector<PrimePower>{{4294967279UL, 1}, {4294967291UL, 1}});
  CHECK(is_prime(18446744073709551557UL));
  CHECK_FALSE(is_prime(3215031751UL));  // strong pseudoprime to bases 2, 3, 5, 7
  CHECK(divisors(12) == std::vector<std::int64_t>{1, 2, 3, 4, 6, 12});
  CHECK(legendre(2, 7) == 1);
  CHECK(legendre(3, 7) == -1);
}

TEST_CASE("curves") {
  const EllipticCurve E{-1, 0};
  CHECK(E.I() == 3);
  CHECK(E.J() == 0);
  CHECK(E.disc() == 4);
  CHECK(E.disc() * 27 == 4 * E.I() * E.I() * E.I() - E.J() * E.J());
  CHECK_FALSE(is_minimal(16, 64));
  CHECK(is_minimal(16, 32));
  CHECK(is_minimal(81, 0) == false);
  const auto small = enumerate_minimal_curves(2);
  CHECK(small.size() == 8);
  CHECK(std::none_of(small.begin(), small.end(), [](const EllipticCurve& c) { return c.disc() == 0; }));
  CHECK(std::is_sorted(small.begin(), small.end(), [](const EllipticCurve& x, const EllipticCurve& y) {
    return std::tie(x.A, x.B) < std::tie(y.A, y.B);
  }));
  for (const auto& c : enumerate_minimal_curves(30)) {
    CHECK(c.height() < 30);
    CHECK(is_minimal(c.A, c.B));
  }
}

TEST_CASE("rational 2-torsion") {
  CHECK(torsion2(EllipticCurve{-1, 0}) == 4);
  CHECK(torsion2(EllipticCurve{0, 1}) == 2);
  CHECK(torsion2(EllipticCurve{1, 1}) == 1);
}

TEST_CASE("Q-invariants") {
  auto r = q_invariant(1, 1);
  CHECK(r.disc == -31);
  CHECK(r.Q == 1);
  r = q_invariant(-1, -4);
  CHECK(r.disc == -428);
  CHECK(r.Q == 2);
  CHECK(r.D == -107);
  r = q_invariant(0, -2);
  CHECK(r.disc == -108);
  CHECK(r.Q == 1);
  CHECK(r.D == -108);
  CHECK_THROWS_AS(q_invariant(-1, 0), std::invalid_argument);
  // theta/2 is a root of x^3 + 24x + 10, so the index is at least 8
  r = q_invariant(96, 80);
  CHECK(r.Q % 8 == 0);
  CHECK(r.disc == r.D * r.Q * r.Q);
}

TEST_CASE("maximality testers agree") {
  int tests = 0;
  for (std::int64_t A = -60; A <= 60; ++A)
    for (std::int64_t B = -60; B <= 60; ++B) {
      const BigInt disc = -4 * BigInt(A) * A * A - 27 * BigInt(B) * B;
      if (disc == 0) continue;
      for (const auto& [p, e] : factor(static_cast<std::uint64_t>(abs_val(disc))).factors) {
        if (e < 2) continue;
        CHECK(dedekind_maximal(A, B, p) == sublattice_maximal(A, B, p));
        ++tests;
      }
    }
  CHECK(tests > 1000);
}

TEST_CASE("index exponent through overrings") {
  CHECK(index_exponent(BinaryCubic{1, 0, -1, -4}, 2) == 1);
  CHECK(index_exponent(BinaryCubic{1, 0, 1, 1}, 31) == 0);
  CHECK(cubic_disc(BinaryCubic{1, 0, -1, -4}) == -428);
  CHECK(index_exponent(BinaryCubic{2, 0, 0, 2}, 2) == 2);  // 2 (x^3 + y^3): an f = p g step counts twice
}

TEST_CASE("sigma embedding") {
  CHECK(sigma_embed(1, 1, 1) == QuarticForm{0, 1, 0, 1, 1});
  const QuarticForm s = sigma_embed(-1, -4, 2);
  CHECK(s == QuarticForm{0, 2, 3, 1, -1});
  CHECK(inv_I(s) == 3);
  CHECK(inv_J(s) == 108);
  CHECK_THROWS_AS(sigma_embed(1, 1, 0), std::invalid_argument);
  CHECK_THROWS_AS(sigma_embed(1, 1, 2), std::logic_error);
  // non-cyclic quotient at 2: theta/2 is integral
  CHECK(noncyclic_index(-48, -32, 8));
  CHECK_THROWS_AS(sigma_embed(-48, -32, 8), NonCyclicIndex);
  CHECK_FALSE(noncyclic_index(-1, -4, 2));
}

TEST_CASE("sigma identities on random cubics") {
  std::mt19937_64 rng(5);
  int done = 0, nontrivial = 0;
  while (done < 300) {
    const BigInt A = std::uniform_int_distribution<int>(-49, 49)(rng), B = std::uniform_int_distribution<int>(-49, 49)(rng);
    if (B == 0 || -4 * A * A * A - 27 * B * B == 0 || !is_minimal(A, B)) continue;
    CubicRing r;
    try {
      r = q_invariant(A, B);
    } catch (const std::invalid_argument&) {
      continue;
    }
    REQUIRE(r.status == FactorStatus::complete);
    ++done;
    const BigInt D4 = mod_pos<BigInt>(r.D, BigInt(4));
    CHECK((D4 == 0 || D4 == 1));
    CHECK(r.disc == r.D * r.Q * r.Q);
    if (noncyclic_index(A, B, r.Q)) continue;
    const QuarticForm f = sigma_embed(A, B, r.Q);
    nontrivial += r.Q > 1;
    CHECK(inv_I(f) == -3 * A);
    CHECK(inv_J(f) == -27 * B);
    CHECK(f.b == r.Q);  // h(1, 0) = n at the unique root (1 : 0)
    if (r.Q == 1) CHECK(f.c == 0);  // r = 0 branch
  }
  CHECK(nontrivial > 20);
}

TEST_CASE("discriminant sieve") {
  const auto scan = sieve_scan(30);
  auto entry = [&](int A, int B) {
    return *std::find_if(scan.begin(), scan.end(), [&](const SieveEntry& s) { return s.curve.A == A && s.curve.B == B; });
  };
  CHECK(entry(0, 25).pmax == 5);
  CHECK(entry(0, 4).pmax == 0);
  CHECK(sieve_count({entry(0, 25)}, 4) == 1);
  CHECK(sieve_count({entry(0, 25)}, 5) == 0);
  CHECK_THROWS(sieve_wp(30, 4));
  std::uint64_t prev = ~0ULL;
  for (std::uint64_t Q : {5, 7, 11, 13, 23, 47}) {
    const auto n = sieve_count(scan, Q);
    CHECK(n <= prev);
    prev = n;
  }
  const auto threaded = sieve_scan(30, 4);
  CHECK(threaded.size() == scan.size());
  for (std::size_t i = 0; i < scan.size(); ++i) CHECK(threaded[i].pmax == scan[i].pmax);
}
