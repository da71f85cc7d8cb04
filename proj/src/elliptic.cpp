#include "bqf/elliptic.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <optional>
#include <stdexcept>
#include <thread>

namespace bqf {

namespace {

BigInt pow_big(const BigInt& p, int e) {
  BigInt r = 1;
  for (int i = 0; i < e; ++i) r *= p;
  return r;
}

std::int64_t mod_small(const BigInt& x, std::uint64_t p) {
  BigInt r = x % BigInt(p);
  if (r < 0) r += BigInt(p);
  return static_cast<std::int64_t>(r);
}

bool divides(const BigInt& m, const BigInt& x) { return x % m == 0; }

// Homogeneous polynomial in X, Y: coefficient k multiplies X^(deg-k) Y^k.
using Hom = std::vector<BigInt>;

Hom hom_mul(const Hom& f, const Hom& g) {
  Hom out(f.size() + g.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j) out[i + j] += f[i] * g[j];
  return out;
}

// f(al X + be Y, ga X + de Y).
BinaryCubic substitute(const BinaryCubic& f, const BigInt& al, const BigInt& be, const BigInt& ga, const BigInt& de) {
  const Hom x{al, be}, y{ga, de};
  const std::array<BigInt, 4> co{f.a, f.b, f.c, f.d};
  Hom acc(4, BigInt(0));
  for (int i = 0; i < 4; ++i) {
    Hom term{co[i]};
    for (int k = 0; k < 3 - i; ++k) term = hom_mul(term, x);
    for (int k = 0; k < i; ++k) term = hom_mul(term, y);
    for (int k = 0; k < 4; ++k) acc[k] += term[k];
  }
  return {acc[0], acc[1], acc[2], acc[3]};
}

std::int64_t eval_mod(const BinaryCubic& f, std::int64_t x, std::int64_t y, std::int64_t p) {
  const std::array<std::int64_t, 4> co{mod_small(f.a, p), mod_small(f.b, p), mod_small(f.c, p), mod_small(f.d, p)};
  std::int64_t acc = 0;
  for (int i = 0; i < 4; ++i) {
    std::int64_t t = co[i];
    for (int k = 0; k < 3 - i; ++k) t = t * x % p;
    for (int k = 0; k < i; ++k) t = t * y % p;
    acc = (acc + t) % p;
  }
  return acc;
}

// One step toward the maximal order at p: an overring of index p or p^2, or nothing.
std::optional<BinaryCubic> overring(const BinaryCubic& f, std::uint64_t p) {
  const BigInt P(p), P2 = P * P;
  if (divides(P, f.a) && divides(P, f.b) && divides(P, f.c) && divides(P, f.d))
    return BinaryCubic{f.a / P, f.b / P, f.c / P, f.d / P};
  // Candidates: multiple roots of f mod p moved to (1:0).
  std::vector<BinaryCubic> moved;
  if (divides(P, f.a) && divides(P, f.b)) moved.push_back(f);
  const auto ip = static_cast<std::int64_t>(p);
  const BinaryCubic df{0, 3 * f.a, 2 * f.b, f.c};  // d/dx, as a cubic with zero top term
  for (std::int64_t t = 0; t < ip; ++t) {
    if (eval_mod(f, t, 1, ip) != 0 || eval_mod(df, t, 1, ip) != 0) continue;
    moved.push_back(substitute(f, BigInt(t), 1, 1, 0));
  }
  for (const auto& g : moved) {
    if (divides(P2, g.a) && divides(P, g.b)) return BinaryCubic{g.a / P2, g.b / P, g.c, g.d * P};
  }
  return std::nullopt;
}

}  // namespace

bool is_minimal(const BigInt& A, const BigInt& B) {
  const std::int64_t a = to_i64(abs_val(A)), b = to_i64(abs_val(B));
  if (a == 0 && b == 0) return false;
  for (std::int64_t p = 2;; ++p) {
    const std::int64_t p2 = p * p, p4 = p2 * p2;
    if (a != 0 ? p4 > a : p4 * p2 > b) break;
    if (!is_prime(static_cast<std::uint64_t>(p))) continue;
    if (a % p4 == 0 && b % (p4 * p2) == 0) return false;
  }
  return true;
}

std::vector<EllipticCurve> enumerate_minimal_curves(std::int64_t X) {
  std::vector<EllipticCurve> out;
  for (std::int64_t A = -X + 1; A < X; ++A)
    for (std::int64_t B = -X + 1; B < X; ++B) {
      EllipticCurve E{A, B};
      if (E.disc() == 0 || !is_minimal(E.A, E.B)) continue;
      out.push_back(E);
    }
  return out;
}

int torsion2(const EllipticCurve& E) {
  if (E.disc() == 0) throw std::invalid_argument("torsion2: singular curve");
  int roots = 0;
  if (E.B == 0) {
    BigInt s;
    roots = 1 + ((-E.A > 0 && is_square(BigInt(-E.A), s)) ? 2 : 0);
  } else {
    for (std::int64_t x0 : divisors(to_i64(E.B)))
      for (const BigInt& x : {BigInt(x0), BigInt(-x0)})
        if (x * x * x + E.A * x + E.B == 0) ++roots;
  }
  return roots == 0 ? 1 : roots == 1 ? 2 : 4;
}

BigInt cubic_disc(const BinaryCubic& f) {
  const auto& [a, b, c, d] = f;
  return b * b * c * c - 4 * a * c * c * c - 4 * b * b * b * d - 27 * a * a * d * d + 18 * a * b * c * d;
}

bool dedekind_maximal(const BigInt& A, const BigInt& B, std::uint64_t p) {
  // Repeated factors of a cubic mod p are linear; for x - l repeated the
  // criterion reduces to g(l) != 0 mod p^2, independent of the lift of l.
  const BigInt P(p), P2 = P * P;
  const auto ip = static_cast<std::int64_t>(p);
  const std::int64_t a = mod_small(A, p), b = mod_small(B, p);
  for (std::int64_t l = 0; l < ip; ++l) {
    const std::int64_t g = ((l * l % ip * l + a * l) % ip + b) % ip;
    const std::int64_t dg = (3 * l % ip * l + a) % ip;
    if (g != 0 || dg != 0) continue;
    const BigInt L(l);
    if ((L * L * L + A * L + B) % P2 == 0) return false;
  }
  return true;
}

bool sublattice_maximal(const BigInt& A, const BigInt& B, std::uint64_t p) {
  using M3 = std::array<std::array<int128, 3>, 3>;
  const auto m3 = static_cast<int128>(p) * p * p;
  auto red = [&](int128 x) { return ((x % m3) + m3) % m3; };
  const int128 a = mod_small(A, static_cast<std::uint64_t>(m3)), b = mod_small(B, static_cast<std::uint64_t>(m3));
  // Multiplication by theta on (1, theta, theta^2).
  const M3 T{{{0, 0, red(-b)}, {1, 0, red(-a)}, {0, 1, 0}}};
  M3 T2{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      int128 s = 0;
      for (int k = 0; k < 3; ++k) s += T[i][k] * T[k][j];
      T2[i][j] = red(s);
    }
  auto integral_over_p = [&](int128 u, int128 v, int128 w) {
    M3 m{};
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) m[i][j] = red((i == j ? u : 0) + v * T[i][j] + w * T2[i][j]);
    const int128 tr = red(m[0][0] + m[1][1] + m[2][2]);
    const int128 mn = red(red(m[0][0] * m[1][1] - m[0][1] * m[1][0]) + red(m[0][0] * m[2][2] - m[0][2] * m[2][0]) +
                          red(m[1][1] * m[2][2] - m[1][2] * m[2][1]));
    const int128 det = red(red(m[0][0] * red(m[1][1] * m[2][2] - m[1][2] * m[2][1])) -
                           red(m[0][1] * red(m[1][0] * m[2][2] - m[1][2] * m[2][0])) +
                           red(m[0][2] * red(m[1][0] * m[2][1] - m[1][1] * m[2][0])));
    const int128 P = p;
    return tr % P == 0 && mn % (P * P) == 0 && det == 0;
  };
  const auto ip = static_cast<int128>(p);
  for (int128 u = 0; u < ip; ++u) {
    if (integral_over_p(u, 1, 0)) return false;
    for (int128 v = 0; v < ip; ++v)
      if (integral_over_p(u, v, 1)) return false;
  }
  return true;
}

int index_exponent(const BinaryCubic& f0, std::uint64_t p) {
  BinaryCubic f = f0;
  const BigInt P2 = BigInt(p) * BigInt(p);
  int e = 0;
  // Each step divides the discriminant by p^2 (index p) or, for f = p g, by p^4.
  while (divides(P2, cubic_disc(f))) {
    auto g = overring(f, p);
    if (!g) break;
    BigInt ratio = cubic_disc(f) / cubic_disc(*g);
    for (; ratio > 1; ratio /= P2) ++e;
    f = *g;
  }
  return e;
}

CubicRing q_invariant(const BigInt& A, const BigInt& B) {
  if (B == 0) throw std::invalid_argument("q_invariant: reducible cubic");
  for (std::int64_t x0 : divisors(to_i64(B)))
    for (const BigInt& x : {BigInt(x0), BigInt(-x0)})
      if (x * x * x + A * x + B == 0) throw std::invalid_argument("q_invariant: reducible cubic");

  CubicRing ring;
  ring.A = A;
  ring.B = B;
  ring.disc = -4 * A * A * A - 27 * B * B;
  const BigInt ad = abs_val(ring.disc);
  if (ad > BigInt(std::numeric_limits<std::uint64_t>::max())) {
    ring.status = FactorStatus::unresolved;
    ring.Q = 0;
    return ring;
  }
  const Factorization fac = factor(static_cast<std::uint64_t>(ad));
  if (fac.status == FactorStatus::unresolved) {
    ring.status = FactorStatus::unresolved;
    ring.Q = 0;
    return ring;
  }
  const BinaryCubic g{1, 0, A, B};
  for (const auto& [p, e] : fac.factors) {
    if (e < 2) continue;
    const bool maximal = dedekind_maximal(A, B, p);
    const int k = maximal ? 0 : index_exponent(g, p);
    if (!maximal && k == 0) throw std::logic_error("q_invariant: no overring at a non-maximal prime");
    if (k > 0) {
      ring.indexFactors.push_back({p, k});
      ring.Q *= pow_big(BigInt(p), k);
    }
  }
  ring.D = ring.disc / (ring.Q * ring.Q);
  return ring;
}

QuarticForm sigma_embed(const BigInt& A, const BigInt& B, const BigInt& n) {
  if (n <= 0) throw std::invalid_argument("sigma_embed: n must be positive");
  for (BigInt r = 0; r < n; ++r) {
    const BigInt lin = 3 * r * r + A, cst = r * r * r + A * r + B;
    if (lin % n != 0 || cst % (n * n) != 0) continue;
    const QuarticForm f{0, n, 3 * r, lin / n, cst / (n * n)};
    const auto iv = invariants(f);
    if (iv.I != -3 * A || iv.J != -27 * B) throw std::logic_error("sigma_embed: invariant identity violated");
    const auto roots = rational_roots(f);
    if (roots.size() != 1 || roots.front() != std::pair<BigInt, BigInt>(1, 0))
      throw std::logic_error("sigma_embed: (1:0) is not the unique rational root");
    return f;
  }
  if (noncyclic_index(A, B, n)) throw NonCyclicIndex("sigma_embed: index quotient is not cyclic");
  throw std::logic_error("sigma_embed: no admissible shift");
}

bool noncyclic_index(const BigInt& A, const BigInt& B, const BigInt& n) {
  if (n <= 1) return false;
  const auto fac = factor(static_cast<std::uint64_t>(n));
  for (const auto& pe : fac.factors) {
    if (pe.e < 2) continue;
    const BigInt P(pe.p), P2 = P * P, P3 = P2 * P;
    for (BigInt r = 0; r < P; ++r)
      if ((3 * r) % P == 0 && (3 * r * r + A) % P2 == 0 && (r * r * r + A * r + B) % P3 == 0) return true;
  }
  return false;
}

std::vector<SieveEntry> sieve_scan(std::int64_t X, int threads) {
  const auto curves = enumerate_minimal_curves(X);
  std::vector<SieveEntry> out(curves.size());
  auto work = [&](std::size_t start, std::size_t step) {
    for (std::size_t i = start; i < curves.size(); i += step) {
      SieveEntry& s = out[i];
      s.curve = curves[i];
      const auto fac = factor(static_cast<std::uint64_t>(abs_val(curves[i].disc())));
      s.unresolved = fac.status == FactorStatus::unresolved;
      for (const auto& [p, e] : fac.factors)
        if (p >= 5 && e >= 2) s.pmax = std::max(s.pmax, p);
    }
  };
  const auto n = static_cast<std::size_t>(std::max(1, threads));
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < n; ++t) pool.emplace_back(work, t, n);
  work(0, n);
  for (auto& th : pool) th.join();
  return out;
}

std::uint64_t sieve_count(const std::vector<SieveEntry>& scan, std::uint64_t Q) {
  return static_cast<std::uint64_t>(
      std::count_if(scan.begin(), scan.end(), [Q](const SieveEntry& s) { return s.pmax > Q; }));
}

std::uint64_t sieve_wp(std::int64_t X, std::uint64_t Q) {
  if (Q < 5) throw std::invalid_argument("sieve_wp: Q must be at least 5");
  return sieve_count(sieve_scan(X), Q);
}

}  // namespace bqf
