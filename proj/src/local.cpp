#include "bqf/local.hpp"

#include "bqf/number_theory.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace bqf {

namespace {

using Poly = std::vector<BigInt>;  // ascending coefficients

constexpr int kMaxDepth = 400;

int val(BigInt m, std::uint64_t p) {
  const BigInt P(p);
  int v = 0;
  while (m % P == 0) {
    m /= P;
    ++v;
  }
  return v;
}

bool is_square_qp(const BigInt& m, std::uint64_t p) {
  const BigInt P(p);
  BigInt u = m;
  int v = 0;
  while (u % P == 0) {
    u /= P;
    ++v;
  }
  if (v % 2 != 0) return false;
  if (p == 2) {
    BigInt r = u % 8;
    if (r < 0) r += 8;
    return r == 1;
  }
  BigInt r = u % P;
  if (r < 0) r += P;
  return legendre(static_cast<std::int64_t>(r), static_cast<std::int64_t>(p)) == 1;
}

// g(t0 + s) as a polynomial in s.
Poly taylor_shift(Poly g, const BigInt& t0) {
  const auto n = g.size();
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t j = n - 1; j > i; --j) g[j - 1] += t0 * g[j];
  return g;
}

struct Disc {
  const Poly* g;
  BigInt t0;
  int n;  // radius p^-n
};

enum class Verdict { soluble, insoluble, split };

// A disc is soluble when its center value is a square, insoluble when every
// value on it lies in the class of the nonsquare center value.
Verdict settle(const Disc& D, std::uint64_t p) {
  if (D.n > kMaxDepth) throw std::logic_error("qp_soluble: depth limit reached");
  const Poly c = taylor_shift(*D.g, D.t0);
  if (c[0] == 0 || is_square_qp(c[0], p)) return Verdict::soluble;
  const int lambda = val(c[0], p);
  const int e = p == 2 ? 3 : 1;
  int delta = std::numeric_limits<int>::max();
  for (std::size_t k = 1; k < c.size(); ++k)
    if (c[k] != 0) delta = std::min(delta, val(c[k], p) + D.n * static_cast<int>(k));
  return delta >= lambda + e ? Verdict::insoluble : Verdict::split;
}

// Level order, so a chain of discs converging to a simple root cannot starve
// its siblings. Children are settled as they are generated.
bool discs_soluble(const std::vector<Disc>& roots, std::uint64_t p) {
  std::vector<Disc> level;
  for (const Disc& D : roots) {
    const Verdict v = settle(D, p);
    if (v == Verdict::soluble) return true;
    if (v == Verdict::split) level.push_back(D);
  }
  while (!level.empty()) {
    std::vector<Disc> next;
    for (const Disc& D : level) {
      BigInt step = 1;
      for (int i = 0; i < D.n; ++i) step *= p;
      for (std::uint64_t j = 0; j < p; ++j) {
        Disc child{D.g, D.t0 + BigInt(j) * step, D.n + 1};
        const Verdict v = settle(child, p);
        if (v == Verdict::soluble) return true;
        if (v == Verdict::split) next.push_back(std::move(child));
      }
    }
    level = std::move(next);
  }
  return false;
}

}  // namespace

bool real_soluble(const QuarticForm& f) { return !(real_root_count(f) == 0 && f.a < 0); }

bool qp_soluble(const QuarticForm& f, std::uint64_t p) {
  // Chart y = 1 with x in Z_p, then x = 1 with y in pZ_p.
  const Poly affine{f.e, f.d, f.c, f.b, f.a};
  const Poly atInfinity{f.a, f.b, f.c, f.d, f.e};
  return discs_soluble({{&affine, 0, 0}, {&atInfinity, 0, 1}}, p);
}

std::vector<std::uint64_t> local_test_primes(const QuarticForm& f) {
  const BigInt disc = abs_val(poly_discriminant(f));
  if (disc == 0) throw std::invalid_argument("local_test_primes: degenerate form");
  if (disc > BigInt(std::numeric_limits<std::uint64_t>::max() / 2))
    throw std::invalid_argument("local_test_primes: discriminant too large");
  const auto fac = factor(2 * static_cast<std::uint64_t>(disc));
  if (fac.status != FactorStatus::complete) throw std::runtime_error("local_test_primes: factorization unresolved");
  std::vector<std::uint64_t> out;
  for (const auto& pe : fac.factors) out.push_back(pe.p);
  for (std::uint32_t p : primes_up_to(31)) out.push_back(p);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool locally_soluble(const QuarticForm& f) {
  if (!real_soluble(f)) return false;
  for (std::uint64_t p : local_test_primes(f))
    if (!qp_soluble(f, p)) return false;
  return true;
}

}  // namespace bqf
