#pragma once

// Curves y^2 = x^3 + Ax + B, their cubic rings, the sigma embedding and the
// square-discriminant sieve.

#include "bqf/number_theory.hpp"
#include "bqf/quartic.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace bqf {

struct EllipticCurve {
  BigInt A, B;

  BigInt I() const { return -3 * A; }
  BigInt J() const { return -27 * B; }
  /// -4A^3 - 27B^2, which is Delta(I, J).
  BigInt disc() const { return -4 * A * A * A - 27 * B * B; }
  BigInt height() const { return abs_val(A) > abs_val(B) ? abs_val(A) : abs_val(B); }
  bool operator==(const EllipticCurve&) const = default;
};

/// No prime with p^4 | A and p^6 | B.
bool is_minimal(const BigInt& A, const BigInt& B);

/// Minimal curves with max(|A|, |B|) < X and nonzero discriminant, ordered by (A, B).
std::vector<EllipticCurve> enumerate_minimal_curves(std::int64_t X);

/// 1, 2 or 4 for 0, 1 or 3 rational roots of x^3 + Ax + B.
int torsion2(const EllipticCurve& E);

/// The order defined by x^3 + Ax + B and its index in the maximal order.
struct CubicRing {
  BigInt A, B;
  BigInt disc;
  BigInt Q = 1;  // index of Z[theta] in the maximal order
  BigInt D = 0;  // disc / Q^2
  FactorStatus status = FactorStatus::complete;
  std::vector<PrimePower> indexFactors;
};

/// Binary cubic a x^3 + b x^2 y + c x y^2 + d y^3.
struct BinaryCubic {
  BigInt a, b, c, d;
  bool operator==(const BinaryCubic&) const = default;
};

BigInt cubic_disc(const BinaryCubic& f);

/// Dedekind's criterion for Z[theta], theta^3 + A theta + B = 0, at the prime p.
bool dedekind_maximal(const BigInt& A, const BigInt& B, std::uint64_t p);
/// Brute force: Z[theta] is p-maximal iff no alpha in Z[theta] \ pZ[theta]
/// has alpha/p integral.
bool sublattice_maximal(const BigInt& A, const BigInt& B, std::uint64_t p);
/// Exponent of p in the index, by repeatedly passing to an overring of index p.
int index_exponent(const BinaryCubic& f, std::uint64_t p);

/// Throws std::invalid_argument when x^3 + Ax + B is reducible. An
/// incomplete factorization of the discriminant gives status `unresolved`
/// and Q = 0.
CubicRing q_invariant(const BigInt& A, const BigInt& B);

/// Some prime p | n has (theta - r)/p integral for an integer r, so the
/// quotient of the maximal order by Z[theta] is not cyclic at p.
bool noncyclic_index(const BigInt& A, const BigInt& B, const BigInt& n);

/// Raised by sigma_embed when n = Q has a non-cyclic quotient; no shift
/// of the requested shape exists then.
struct NonCyclicIndex : std::domain_error {
  using std::domain_error::domain_error;
};

/// (0, n, 3r, (3r^2 + A)/n, (r^3 + Ar + B)/n^2) for the r in [0, n) making
/// it integral. Throws NonCyclicIndex when no r exists for that reason and
/// std::logic_error in any other failure.
QuarticForm sigma_embed(const BigInt& A, const BigInt& B, const BigInt& n);

/// Largest prime p >= 5 with p^2 | disc(E); 0 when there is none.
struct SieveEntry {
  EllipticCurve curve;
  std::uint64_t pmax = 0;
  bool unresolved = false;
};

std::vector<SieveEntry> sieve_scan(std::int64_t X, int threads = 1);
/// Curves with some prime p > Q, p^2 | disc.
std::uint64_t sieve_count(const std::vector<SieveEntry>& scan, std::uint64_t Q);
std::uint64_t sieve_wp(std::int64_t X, std::uint64_t Q);

}  // namespace bqf
