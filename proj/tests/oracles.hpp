#pragma once

// Slow reference implementations that the tests compare the library against.

#include "bqf/census.hpp"
#include "bqf/quartic.hpp"
#include "bqf/reduction.hpp"

#include <array>
#include <cmath>
#include <cstdint>
#include <set>

namespace oracle {

// Every (a, b, c, d) in the box, e over the whole |I| < X interval, the
// height tested on (I, J) directly. Canonical reps are always locally
// minimal, so other forms are skipped before canonicalizing.
inline std::array<std::uint64_t, 4> full_box_census(std::int64_t X, std::int64_t cp, std::int64_t cq, double kappa = 3.0) {
  const auto B = static_cast<std::int64_t>(std::ceil(kappa * std::sqrt(static_cast<double>(X))));
  std::set<bqf::Quartic64> reps;
  for (std::int64_t a = -B; a <= B; ++a) {
    if (a == 0) continue;  // y | f
    for (std::int64_t b = -B; b <= B; ++b)
      for (std::int64_t c = -B; c <= B; ++c)
        for (std::int64_t d = -B; d <= B; ++d) {
          const std::int64_t t = c * c - 3 * b * d;
          const double u1 = static_cast<double>(-X - t) / static_cast<double>(12 * a);
          const double u2 = static_cast<double>(X - t) / static_cast<double>(12 * a);
          const auto lo = static_cast<std::int64_t>(std::floor(std::min(u1, u2))) - 1;
          const auto hi = static_cast<std::int64_t>(std::ceil(std::max(u1, u2))) + 1;
          for (std::int64_t e = lo; e <= hi; ++e) {
            const bqf::Quartic64 f{a, b, c, d, e};
            const std::int64_t I = 12 * a * e - 3 * b * d + c * c;
            if (I <= -X || I >= X) continue;
            const std::int64_t J = 72 * a * c * e + 9 * b * c * d - 27 * a * d * d - 27 * e * b * b - 2 * c * c * c;
            if (cq * (J < 0 ? -J : J) >= cp * X) continue;
            if (4 * I * I * I == J * J) continue;
            if (!bqf::locally_minimal(f)) continue;
            reps.insert(bqf::canonicalize_unchecked(f));
          }
        }
  }
  std::array<std::uint64_t, 4> counts{};
  for (const auto& r : reps) {
    const bqf::QuarticForm f = bqf::convert<bqf::BigInt>(r);
    if (!bqf::is_irreducible(f)) continue;
    ++counts[static_cast<std::size_t>(bqf::class_index(bqf::real_root_class(f)))];
  }
  return counts;
}

// Sum of per-(I, J) class lists over |I| < X, |J| < X.
inline std::array<std::uint64_t, 4> per_pair_census(std::int64_t X) {
  std::array<std::uint64_t, 4> counts{};
  for (std::int64_t I = -X + 1; I < X; ++I)
    for (std::int64_t J = -X + 1; J < X; ++J) {
      if (4 * I * I * I == J * J || !bqf::is_eligible(I, J)) continue;
      for (const auto& rec : bqf::classes_with_invariants(I, J))
        if (rec.irreducible) ++counts[static_cast<std::size_t>(bqf::class_index(rec.rootClass))];
    }
  return counts;
}

// Eligible pairs with sign(disc) = sign by a direct double loop.
inline std::uint64_t eligible_pairs_direct(std::int64_t X, int sign) {
  std::uint64_t n = 0;
  for (std::int64_t I = -X + 1; I < X; ++I)
    for (std::int64_t J = -X + 1; J < X; ++J) {
      const std::int64_t d = 4 * I * I * I - J * J;
      if ((sign > 0 ? d > 0 : d < 0) && bqf::is_eligible(I, J)) ++n;
    }
  return n;
}

}  // namespace oracle
