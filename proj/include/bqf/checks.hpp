#pragma once

// Property suite shared by `verify` and the acceptance run. Each check is
// exhaustive or seeded, and reports what it measured.

#include "bqf/numeric.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace bqf::checks {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

CheckResult syzygy(int samples, std::int64_t coeffMax, std::uint64_t seed);
CheckResult gl2_invariance(int samples, std::uint64_t seed);
CheckResult upsilon_round_trip(int samples, std::uint64_t seed);
CheckResult height_transport(int samples, const BigRational& C, std::uint64_t seed);
CheckResult single_root_identity(int samples, std::uint64_t seed);
CheckResult discriminant_sign(int samples, std::uint64_t seed);

/// Normalized sum equals 12|a| exactly on the lattice condition and is
/// below 1e-6 elsewhere, for 0 < |a| <= amax, |b|, |c| <= amax, |alpha|, |beta| <= range.
CheckResult lattice_fourier(std::int64_t amax, std::int64_t range);

struct FiberSample {
  std::int64_t a, b, c;
  double expected, relError;
};

/// Fibers with |H| >= X^0.8 and expected count >= minExpected; reports the
/// 90th-percentile relative error against `tolerance`.
CheckResult fiber_equidistribution(std::int64_t X, int fibers, double minExpected, double tolerance, std::uint64_t seed,
                                   std::vector<FiberSample>* samples = nullptr);
CheckResult fiber_single(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t X, double tolerance);

/// The shipped residue table against a fresh enumeration of (Z/27)^5.
CheckResult eligibility_table();
/// Residue-class pair counts against a direct double loop.
CheckResult eligible_pairs_brute(std::int64_t X);

CheckResult canonicalize_invariance(int samples, std::int64_t coeffMax, std::uint64_t seed);

CheckResult volume(double X, double C, double tolerance);
CheckResult tamagawa(std::uint32_t P, double tolerance);

/// I = -3A, J = -27B and the root condition for random irreducible cubics of height < hmax.
CheckResult sigma_identities(int samples, std::int64_t hmax, std::uint64_t seed);
/// Dedekind and brute-force sublattice testers agree at every p with
/// p^2 | disc, for all irreducible x^3 + Ax + B with |disc| <= discMax, |A| <= amax.
CheckResult maximality_testers(std::int64_t discMax, std::int64_t amax);
CheckResult q_invariant_examples();

CheckResult local_solubility_invariance(int samples, std::uint64_t seed);
/// Spot checks that every Q_p with p >= 32, p not dividing 2 disc, has a point.
CheckResult local_large_primes(int samples, std::uint64_t seed);

}  // namespace bqf::checks
