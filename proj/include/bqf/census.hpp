#pragma once

// Class counts by height, eligible-pair counts, fiber checks and volume constants.

#include "bqf/quartic.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <vector>

namespace bqf {

inline constexpr std::array<RootClass, 4> kRootClasses{RootClass::i0, RootClass::i1, RootClass::i2plus,
                                                        RootClass::i2minus};

int class_index(RootClass rc);

struct CensusOptions {
  double kappa = 3.0;  // coefficient box |a|,|b|,|c|,|d| <= ceil(kappa sqrt(X))
  int shards = 1;
  int threads = 0;  // 0: hardware concurrency, capped by shards
  bool keepReps = false;
};

struct CensusRep {
  Quartic64 rep;
  RootClass rootClass;
  bool operator<(const CensusRep& o) const { return rep < o.rep; }
  bool operator==(const CensusRep& o) const { return rep == o.rep && rootClass == o.rootClass; }
};

struct CensusResult {
  std::int64_t X = 0;
  BigRational C = 1;
  std::int64_t box = 0;
  std::array<std::uint64_t, 4> counts{};  // indexed by class_index
  std::uint64_t reducible = 0;            // canonical reps skipped as reducible
  std::vector<CensusRep> reps;            // sorted; filled when keepReps
  double seconds = 0;

  double normalized(RootClass rc) const;
};

std::int64_t census_box(std::int64_t X, double kappa);

/// Irreducible GL2(Z)-classes with h_C < X per root class.
CensusResult census(std::int64_t X, const BigRational& C, const CensusOptions& opt = {});

/// The work of one shard: (a, b) pairs whose enumeration index is s mod shards.
CensusResult census_shard(std::int64_t X, const BigRational& C, std::int64_t box, int shard, int shards, bool keepReps);

/// Merge shard results (order independent).
CensusResult merge_census(const std::vector<CensusResult>& parts);

/// Leading constant of N_C(V^(i); X) / X^2.
double census_target(RootClass rc, const BigRational& C);

/// Eligible (I, J) with |I| < X, |J| < C X and sign(disc) = sign, by residue-class arithmetic.
std::uint64_t eligible_pair_count(std::int64_t X, const BigRational& C, int sign);

struct RatioReport {
  std::int64_t X = 0;
  std::array<std::uint64_t, 3> classSums{};      // i = 0, 1, 2 (2+ and 2- together)
  std::array<std::uint64_t, 3> eligiblePairs{};  // disc > 0, < 0, > 0
  std::array<double, 3> ratio{};
  std::array<double, 3> target{};
};

RatioReport ratio_report(const CensusResult& census);
RatioReport ratio_report(std::int64_t X, const CensusOptions& opt = {});

struct FiberCheck {
  std::uint64_t exactCount = 0;
  double areaOverCovolume = 0;
  double relError = 0;
  bool lowCount = false;  // expected < 10: no equidistribution at that scale
  std::uint64_t heightCount = 0;
  std::uint64_t symmetricDiff = 0;
};

FiberCheck fiber_check(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t X, const BigRational& C);

struct VolumeConstants {
  double value = 0;             // positive-disc region
  double valueOverX2 = 0;
  double deviation = 0;         // valueOverX2 - 2C
  double signedValue = 0;       // negative-disc region
  double signedValueOverX2 = 0;
  double signedDeviation = 0;
  double fundamentalDomain = 0;  // 2 zeta(2)
  double tamagawaProduct = 0;    // 2 zeta(2) prod_{p <= P} (1 - p^-2)
  std::uint32_t tamagawaBound = 0;
};

VolumeConstants volume_constants(double X, double C, std::uint32_t P = 100000);

}  // namespace bqf
