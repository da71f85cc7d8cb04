#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bqf/census.hpp"
#include "oracles.hpp"

#include <cmath>
#include <numbers>

using namespace bqf;

TEST_CASE("empty height ball") {
  const CensusResult r = census(1, BigRational(1));
  for (auto n : r.counts) CHECK(n == 0);
}

TEST_CASE("census equals the full-box oracle") {
  for (std::int64_t X : {10, 25, 50}) {
    const CensusResult r = census(X, BigRational(1));
    const auto o = oracle::full_box_census(X, 1, 1);
    for (int i = 0; i < 4; ++i) CHECK(r.counts[i] == o[i]);
  }
  const CensusResult r36 = census(20, BigRational(3, 2));
  const auto o36 = oracle::full_box_census(20, 3, 2);
  for (int i = 0; i < 4; ++i) CHECK(r36.counts[i] == o36[i]);
}

TEST_CASE("census equals the per-pair oracle") {
  const CensusResult r = census(20, BigRational(1));
  const auto o = oracle::per_pair_census(20);
  for (int i = 0; i < 4; ++i) CHECK(r.counts[i] == o[i]);
}

TEST_CASE("census is stable under box doubling") {
  CensusOptions wide;
  wide.kappa = 6.0;
  const CensusResult a = census(40, BigRational(1)), b = census(40, BigRational(1), wide);
  CHECK(a.counts == b.counts);
  CHECK(b.box > a.box);
}

TEST_CASE("shard determinism") {
  CensusOptions one, many;
  one.keepReps = many.keepReps = true;
  many.shards = 7;
  const CensusResult a = census(40, BigRational(1), one), b = census(40, BigRational(1), many);
  CHECK(a.counts == b.counts);
  CHECK(a.reps == b.reps);
  std::vector<CensusResult> parts;
  for (int s = 0; s < 5; ++s) parts.push_back(census_shard(40, BigRational(1), a.box, s, 5, true));
  const CensusResult m = merge_census(parts);
  CHECK(m.counts == a.counts);
  CHECK(m.reps == a.reps);
}

TEST_CASE("targets") {
  const double z2 = std::numbers::pi * std::numbers::pi / 6;
  CHECK(census_target(RootClass::i0, BigRational(1)) == doctest::Approx(z2 / 27));
  CHECK(census_target(RootClass::i1, BigRational(1)) == doctest::Approx(2 * z2 / 27));
  CHECK(census_target(RootClass::i0, BigRational(1)) == doctest::Approx(0.06092).epsilon(1e-3));
  CHECK(census_target(RootClass::i1, BigRational(1)) == doctest::Approx(0.12185).epsilon(1e-3));
}

TEST_CASE("ratio report") {
  const RatioReport r = ratio_report(10);
  CHECK(r.eligiblePairs[0] == oracle::eligible_pairs_direct(10, 1));
  CHECK(r.eligiblePairs[1] == oracle::eligible_pairs_direct(10, -1));
  CHECK(r.target[0] == doctest::Approx(0.8225).epsilon(1e-3));
  CHECK(r.target[1] == doctest::Approx(1.6449).epsilon(1e-3));
  CHECK_THROWS(ratio_report(9));
}

TEST_CASE("eligible pairs by residue class") {
  for (std::int64_t X : {10, 57, 200})
    for (int sign : {1, -1}) CHECK(eligible_pair_count(X, BigRational(1), sign) == oracle::eligible_pairs_direct(X, sign));
  // X^2 coefficient is stable between 10^3 and 10^4
  for (int sign : {1, -1}) {
    const double c3 = static_cast<double>(eligible_pair_count(1000, BigRational(1), sign)) / 1e6;
    const double c4 = static_cast<double>(eligible_pair_count(10000, BigRational(1), sign)) / 1e8;
    CHECK(std::fabs(c3 - c4) / c4 < 0.05);
  }
  CHECK_THROWS(eligible_pair_count(10, BigRational(1), 0));
}

TEST_CASE("fiber checks") {
  const FiberCheck f = fiber_check(1, 0, -1, 1000000, BigRational(1));
  CHECK(f.areaOverCovolume == doctest::Approx(2.6e7).epsilon(0.01));
  CHECK(f.relError <= 0.01);
  CHECK_FALSE(f.lowCount);
  const FiberCheck g = fiber_check(2, 1, -3, 100000000, BigRational(1));
  CHECK(g.areaOverCovolume >= 1e4);
  CHECK(g.relError <= 0.02);
  const FiberCheck tiny = fiber_check(3, 1, 2, 3, BigRational(1));
  CHECK(tiny.lowCount);
  CHECK_THROWS(fiber_check(1, 0, 0, 100, BigRational(1)));
}

TEST_CASE("H versus H' symmetric difference") {
  // at most 5% of the H-count once |H| >= X^(1 - 1/28), on fibers where the
  // center curve stays inside the height ball: X - H^2/(48 a^2) > (4/3)|a X / H|
  const std::int64_t X = 100000;
  const double Hmin = std::pow(static_cast<double>(X), 1 - 1.0 / 28);
  int fibers = 0;
  for (std::int64_t a = 30; a <= 60; a += 5)
    for (std::int64_t b = 0; b <= 2; ++b)
      for (int sign : {1, -1}) {
        std::int64_t c = sign;
        while (std::fabs(static_cast<double>(8 * a * c - 3 * b * b)) < Hmin) c += sign;
        const double H = static_cast<double>(8 * a * c - 3 * b * b), A = static_cast<double>(a);
        if (X - H * H / (48 * A * A) <= 4.0 / 3 * std::fabs(A * X / H)) continue;
        const FiberCheck f = fiber_check(a, b, c, X, BigRational(1));
        REQUIRE(f.heightCount > 0);
        ++fibers;
        CHECK(static_cast<double>(f.symmetricDiff) <= 0.05 * static_cast<double>(f.heightCount));
      }
  CHECK(fibers >= 10);
}

TEST_CASE("volume constants") {
  const VolumeConstants v1 = volume_constants(1e6, 1);
  CHECK(std::fabs(v1.valueOverX2 - 2) <= 0.05 * 2);
  const VolumeConstants v36 = volume_constants(1e6, 36);
  CHECK(std::fabs(v36.valueOverX2 - 72) <= 0.05 * 72);
  CHECK(v1.fundamentalDomain == doctest::Approx(std::numbers::pi * std::numbers::pi / 3));
  CHECK(std::fabs(v1.tamagawaProduct - 2) < 1e-4);
  CHECK_THROWS(volume_constants(0.5, 1));
}
