#pragma once

// Semi-invariant coordinates (a, b, c, R, I), the fiber lattice and fiber regions.

#include "bqf/quartic.hpp"

#include <cstdint>
#include <functional>
#include <optional>

namespace bqf {

struct SemiForm {
  BigInt a, b, c, R, I;
  bool operator==(const SemiForm&) const = default;
};

SemiForm upsilon(const QuarticForm& f);
RationalQuartic upsilon_inv(const SemiForm& s);
bool lambda_member(const SemiForm& s);

/// J recovered from the syzygy; exact rational.
BigRational semi_J(const SemiForm& s);

/// h_C(f) = max(|I|, |J|/C).
BigRational height(const QuarticForm& f, const BigRational& C);
/// Same height evaluated in semi-invariant coordinates (branch on H).
BigRational height(const SemiForm& s, const BigRational& C);

/// Center of the I-window: 27R^2/(48a^2 H) + H^2/(48a^2).
BigRational gamma_tilde(const BigInt& a, const BigInt& H, const BigInt& R);

struct FiberLattice {
  BigInt a, b, c;
  BigInt zetaOffset;  // b^3 - 4abc
  BigInt modR;        // 8a^2
  BigInt modI;        // 12|a|
};

FiberLattice fiber_lattice(const BigInt& a, const BigInt& b, const BigInt& c);

struct FiberRegion {
  BigInt a, b, c, H;
  BigInt X;
  BigRational C;
  double R0 = 0;
  /// R0^2 exactly when R0 comes from the square-root branches; empty for the
  /// fallback value R0 = 1.
  std::optional<BigRational> R0sq;
  BigRational iHalfWidth;  // (4C/3)|a/H| X
};

double r_zero(const BigInt& a, const BigInt& b, const BigInt& c, const BigInt& X, const BigRational& C);
FiberRegion fiber_region(const BigInt& a, const BigInt& b, const BigInt& c, const BigInt& X, const BigRational& C);

/// |R| < R0 (exact when R0sq is set).
bool r_in_range(const FiberRegion& reg, const BigInt& R);
/// Membership in H': |R| < R0 and |I - gamma_tilde(R)| < iHalfWidth.
bool fiber_region_contains(const FiberRegion& reg, const BigInt& R, const BigInt& I);
/// Membership in H: |I| < X and the same I-window condition.
bool fiber_height_contains(const FiberRegion& reg, const BigInt& R, const BigInt& I);

struct LatticeCount {
  std::uint64_t inRegion = 0;       // Lambda meets H'
  std::uint64_t inHeight = 0;       // Lambda meets H
  std::uint64_t symmetricDiff = 0;  // Lambda meets (H xor H')
};

/// Exact count of lattice points in H' (and H), enumerating R residue by
/// residue and counting admissible I by interval arithmetic. The optional
/// callback receives every (R, I) in H'.
LatticeCount lattice_enumerate(const FiberLattice& lat, const FiberRegion& reg,
                               const std::function<void(std::int64_t, std::int64_t)>& visit = {});

/// Admissible I for fixed (a, b, c, d): integers in an open interval with a
/// congruence condition. Empty when lo > hi.
struct IRange {
  std::int64_t lo = 1, hi = 0;  // inclusive bounds on I
  std::int64_t residue = 0;     // I = residue (mod modulus)
  std::int64_t modulus = 1;     // 12|a|

  std::int64_t first() const;
  std::int64_t count() const;
};

/// I-interval from |I| < X and |J| < C X, through the relation
/// (4/3)(a/H) J = I - gamma_tilde(R).
IRange e_range(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d, std::int64_t X, const BigRational& C);
/// Same with C = cp / cq already split into words.
IRange e_range(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d, std::int64_t X, std::int64_t cp,
               std::int64_t cq);

/// Closed form epsilon/|96 a^3| of the lattice Fourier coefficient.
BigRational lattice_fourier_magnitude(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t alpha,
                                      std::int64_t beta);
/// |sum_k exp(2 pi i (alpha xi_alpha,k + beta xi_beta,k))| over k = 0..12|a|-1.
double lattice_fourier_sum(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t alpha, std::int64_t beta);

}  // namespace bqf
