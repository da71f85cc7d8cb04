#pragma once

// Locally soluble quartic classes attached to each curve, as a proxy for the
// 2-Selmer group.

#include "bqf/elliptic.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace bqf {

struct SelmerProxyRecord {
  EllipticCurve curve;
  int torsion2 = 1;
  /// Locally soluble classes with invariants (16I, 64J) and no rational linear factor.
  std::uint64_t zClassCount = 0;
  /// Those classes after merging pairs found to be Q-equivalent; a merge is
  /// certain, a missed one leaves the classes apart.
  std::optional<std::uint64_t> mergedQClassCount;
  /// Classes without a linear factor that fail some local condition.
  std::uint64_t localFailures = 0;
  std::vector<QuarticForm> soluble;  // canonical reps counted in zClassCount
};

/// Integer matrix [[p, q], [r, s]] with nonzero determinant.
struct RationalMap {
  std::int64_t p = 1, q = 0, r = 0, s = 1;
  std::int64_t det() const { return p * s - q * r; }
};

/// A matrix with entries in [-bound, bound] carrying f to g under the
/// twisted action f -> f((x, y) M) / det(M)^2.
std::optional<RationalMap> rational_equivalence(const QuarticForm& f, const QuarticForm& g, int bound);

SelmerProxyRecord selmer_proxy(const EllipticCurve& E, bool merge = true, int mergeBound = 24);

struct SelmerCensus {
  std::int64_t X = 0;
  std::vector<SelmerProxyRecord> records;  // ordered by (A, B)
  double meanZ = 0;        // mean of 1 + zClassCount
  double meanMerged = 0;   // mean of 1 + mergedQClassCount
  double stderrZ = 0;      // standard error of meanZ
  double stderrMerged = 0;
};

/// Records for every minimal curve with height below X. Curves are split
/// round-robin over `shards` independent workers; the output does not
/// depend on the split.
SelmerCensus selmer_census(std::int64_t X, int shards = 1, bool merge = true);

}  // namespace bqf
