#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bqf/local.hpp"
#include "bqf/number_theory.hpp"
#include "bqf/selmer.hpp"

#include <random>

using namespace bqf;

namespace {

std::mt19937_64 rng(99);
std::int64_t uni(std::int64_t lo, std::int64_t hi) { return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng); }

}  // namespace

TEST_CASE("local solubility examples") {
  CHECK(locally_soluble(QuarticForm{1, 0, 1, 0, 1}));
  CHECK_FALSE(real_soluble(QuarticForm{-1, 0, 0, 0, -1}));
  CHECK_FALSE(locally_soluble(QuarticForm{-1, 0, 0, 0, -1}));
  CHECK_FALSE(qp_soluble(QuarticForm{3, 0, 0, 0, 3}, 3));
  CHECK_FALSE(locally_soluble(QuarticForm{3, 0, 0, 0, 3}));
  CHECK(qp_soluble(QuarticForm{3, 0, 0, 0, 3}, 5));
  // z^2 = 2 (x^4 + y^4) at 2 and z^2 = -x^4 - y^4 + 3 x^2 y^2 over Q_3
  CHECK(qp_soluble(QuarticForm{2, 0, 0, 0, 2}, 2));
  CHECK(qp_soluble(QuarticForm{1, 0, 0, 0, 1}, 2));
  CHECK_FALSE(qp_soluble(QuarticForm{5, 0, 0, 0, 5}, 5));
  CHECK(qp_soluble(QuarticForm{10, 3, -8, 4, -1}, 3));
  CHECK(qp_soluble(QuarticForm{6, 8, 0, 6, 8}, 2));
  CHECK_THROWS(locally_soluble(QuarticForm{1, 2, 1, 0, 0}));
  const auto primes = local_test_primes(QuarticForm{1, 0, 1, 0, 1});
  CHECK(primes.front() == 2);
  CHECK(primes.back() == 31);
}

TEST_CASE("local solubility is a GL2(Z) invariant") {
  int tested = 0;
  while (tested < 150) {
    const QuarticForm f{uni(-12, 12), uni(-12, 12), uni(-12, 12), uni(-12, 12), uni(-12, 12)};
    if (invariants(f).disc == 0) continue;
    UnimodularMap g{uni(-2, 2), uni(-2, 2), uni(-2, 2), uni(-2, 2)};
    if (g.det() != 1 && g.det() != -1) continue;
    ++tested;
    CHECK(locally_soluble(f) == locally_soluble(act(g, f)));
  }
}

TEST_CASE("large good primes always have points") {
  int tested = 0;
  while (tested < 60) {
    const QuarticForm f{uni(-20, 20), uni(-20, 20), uni(-20, 20), uni(-20, 20), uni(-20, 20)};
    const BigInt disc = poly_discriminant(f);
    if (disc == 0) continue;
    const std::uint64_t p = primes_up_to(2000)[static_cast<std::size_t>(uni(11, 300))];
    if (disc % p == 0) continue;
    ++tested;
    CHECK(qp_soluble(f, p));
  }
}

TEST_CASE("rational equivalence search") {
  const QuarticForm f{1, 0, 1, 0, 3};
  const QuarticForm g = act(UnimodularMap{2, 1, 1, 1}, f);
  const auto m = rational_equivalence(f, g, 4);
  REQUIRE(m);
  CHECK((m->det() == 1 || m->det() == -1));
  CHECK_FALSE(rational_equivalence(f, QuarticForm{1, 0, 1, 0, 5}, 4));
}

TEST_CASE("Selmer proxy records") {
  const auto r = selmer_proxy(EllipticCurve{-1, 0});
  CHECK(r.torsion2 == 4);
  CHECK(r.zClassCount >= 3);
  const auto s = selmer_proxy(EllipticCurve{1, 1});
  CHECK(s.torsion2 == 1);
  REQUIRE(s.mergedQClassCount);
  CHECK(*s.mergedQClassCount <= s.zClassCount);
  for (const auto& f : r.soluble) {
    CHECK(inv_I(f) == 16 * r.curve.I());
    CHECK(inv_J(f) == 64 * r.curve.J());
    CHECK(locally_soluble(f));
    CHECK_FALSE(has_rational_linear_factor(f));
  }
}

TEST_CASE("Selmer census at X = 5") {
  const SelmerCensus a = selmer_census(5, 1), b = selmer_census(5, 3);
  REQUIRE(a.records.size() == b.records.size());
  CHECK(a.records.size() == enumerate_minimal_curves(5).size());
  for (std::size_t i = 0; i < a.records.size(); ++i) {
    const auto& x = a.records[i];
    CHECK(x.curve.A == b.records[i].curve.A);
    CHECK(x.curve.B == b.records[i].curve.B);
    CHECK(x.zClassCount == b.records[i].zClassCount);
    CHECK(x.mergedQClassCount == b.records[i].mergedQClassCount);
    CHECK(x.zClassCount + 1 >= static_cast<std::uint64_t>(x.torsion2));
    if (x.mergedQClassCount) CHECK(*x.mergedQClassCount <= x.zClassCount);
  }
  CHECK(a.meanZ >= 1);
  CHECK(a.meanZ == b.meanZ);
  CHECK(a.stderrZ >= 0);
}
