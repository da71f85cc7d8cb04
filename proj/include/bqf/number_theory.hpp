#pragma once

// Integer factorization and elementary number theory on machine words.

#include <cstdint>
#include <utility>
#include <vector>

namespace bqf {

struct PrimePower {
  std::uint64_t p;
  int e;
  bool operator==(const PrimePower&) const = default;
};

enum class FactorStatus { complete, unresolved };

/// Prime factorization of |n| (n != 0). `status` is `unresolved` only if the
/// rho stage gives up; factors returned so far are still correct.
struct Factorization {
  std::vector<PrimePower> factors;
  FactorStatus status = FactorStatus::complete;
};

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m);

/// Deterministic Miller-Rabin for all 64-bit inputs.
bool is_prime(std::uint64_t n);

/// Primes <= limit (simple sieve of Eratosthenes).
std::vector<std::uint32_t> primes_up_to(std::uint32_t limit);

/// Trial division by every prime up to `trial_limit`, then Pollard rho
/// (Brent variant) on the cofactor.
Factorization factor(std::uint64_t n, std::uint64_t trial_limit = 1000000);

/// All positive divisors of |n|, ascending. n must be nonzero.
std::vector<std::int64_t> divisors(std::int64_t n);

/// Exponent of p in n (n != 0).
int valuation(std::int64_t n, std::int64_t p);

/// Legendre symbol (a/p) for odd prime p, values in {-1, 0, 1}.
int legendre(std::int64_t a, std::int64_t p);

std::int64_t gcd_i64(std::int64_t a, std::int64_t b);

}  // namespace bqf
