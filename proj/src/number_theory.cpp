#include "bqf/number_theory.hpp"

#include "bqf/numeric.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace bqf {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e > 0) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // This witness set is deterministic below 3.3e24.
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<std::uint32_t> primes_up_to(std::uint32_t limit) {
  std::vector<std::uint32_t> out;
  if (limit < 2) return out;
  std::vector<bool> sieve(limit + 1, true);
  sieve[0] = sieve[1] = false;
  for (std::uint64_t i = 2; i * i <= limit; ++i)
    if (sieve[i])
      for (std::uint64_t j = i * i; j <= limit; j += i) sieve[j] = false;
  for (std::uint32_t i = 2; i <= limit; ++i)
    if (sieve[i]) out.push_back(i);
  return out;
}

namespace {

const std::vector<std::uint32_t>& cached_primes(std::uint64_t limit) {
  static std::mutex mu;
  static std::map<std::uint64_t, std::vector<std::uint32_t>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(limit);
  if (it == cache.end()) it = cache.emplace(limit, primes_up_to(static_cast<std::uint32_t>(limit))).first;
  return it->second;
}

std::uint64_t rho(std::uint64_t n, std::uint64_t seed) {
  if (n % 2 == 0) return 2;
  std::uint64_t c = seed % (n - 1) + 1;
  auto f = [&](std::uint64_t x) { return (mulmod(x, x, n) + c) % n; };
  std::uint64_t y = seed % n, g = 1, q = 1, x = 0, ys = 0;
  std::uint64_t r = 1;
  const std::uint64_t m = 128;
  do {
    x = y;
    for (std::uint64_t i = 0; i < r; ++i) y = f(y);
    std::uint64_t k = 0;
    while (k < r && g == 1) {
      ys = y;
      for (std::uint64_t i = 0; i < std::min(m, r - k); ++i) {
        y = f(y);
        q = mulmod(q, x > y ? x - y : y - x, n);
      }
      g = std::gcd(q, n);
      k += m;
    }
    r <<= 1;
    if (r > (1ULL << 26)) return n;
  } while (g == 1);
  if (g == n) {
    do {
      ys = f(ys);
      g = std::gcd(x > ys ? x - ys : ys - x, n);
    } while (g == 1);
  }
  return g;
}

void split(std::uint64_t n, std::map<std::uint64_t, int>& acc, FactorStatus& status) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++acc[n];
    return;
  }
  std::uint64_t r = isqrt_u64(n);
  if (r * r == n) {
    split(r, acc, status);
    split(r, acc, status);
    return;
  }
  for (std::uint64_t seed = 2; seed < 64; ++seed) {
    std::uint64_t d = rho(n, seed);
    if (d != n && d != 1) {
      split(d, acc, status);
      split(n / d, acc, status);
      return;
    }
  }
  status = FactorStatus::unresolved;
}

}  // namespace

Factorization factor(std::uint64_t n, std::uint64_t trial_limit) {
  if (n == 0) throw std::domain_error("factor(0)");
  Factorization out;
  std::map<std::uint64_t, int> acc;
  const std::uint64_t limit = std::min<std::uint64_t>(trial_limit, std::max<std::uint64_t>(2, isqrt_u64(n)));
  for (std::uint32_t p : cached_primes(std::min<std::uint64_t>(limit, trial_limit))) {
    if (static_cast<std::uint64_t>(p) * p > n) break;
    while (n % p == 0) {
      ++acc[p];
      n /= p;
    }
  }
  split(n, acc, out.status);
  for (auto [p, e] : acc) out.factors.push_back({p, e});
  return out;
}

std::vector<std::int64_t> divisors(std::int64_t n) {
  if (n == 0) throw std::domain_error("divisors(0)");
  const std::uint64_t m = n < 0 ? static_cast<std::uint64_t>(-(n + 1)) + 1 : static_cast<std::uint64_t>(n);
  std::vector<std::int64_t> out{1};
  if (m < 4096) {
    out.clear();
    for (std::uint64_t d = 1; d * d <= m; ++d)
      if (m % d == 0) {
        out.push_back(static_cast<std::int64_t>(d));
        if (d * d != m) out.push_back(static_cast<std::int64_t>(m / d));
      }
    std::sort(out.begin(), out.end());
    return out;
  }
  auto fz = factor(m);
  if (fz.status != FactorStatus::complete) throw std::runtime_error("divisors: factorization unresolved");
  for (auto [p, e] : fz.factors) {
    const std::size_t n0 = out.size();
    std::int64_t pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= static_cast<std::int64_t>(p);
      for (std::size_t i = 0; i < n0; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

int valuation(std::int64_t n, std::int64_t p) {
  if (n == 0) throw std::domain_error("valuation(0)");
  int v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

int legendre(std::int64_t a, std::int64_t p) {
  std::int64_t r = mod_pos<std::int64_t>(a, p);
  if (r == 0) return 0;
  return powmod(static_cast<std::uint64_t>(r), static_cast<std::uint64_t>((p - 1) / 2), static_cast<std::uint64_t>(p)) == 1
             ? 1
             : -1;
}

std::int64_t gcd_i64(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

BigRational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return BigRational(BigInt(text));
    BigInt p(text.substr(0, slash));
    BigInt q(text.substr(slash + 1));
    if (q == 0) throw std::invalid_argument("zero denominator");
    return make_rational(p, q);
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("not a rational number: " + text);
  }
}

}  // namespace bqf
