#include "bqf/quartic.hpp"

#include "bqf/number_theory.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <vector>

namespace bqf {

namespace {

template <class T> std::string format_form(const BasicQuartic<T>& f) {
  std::ostringstream os;
  os << '(' << to_string(f.a) << ',' << to_string(f.b) << ',' << to_string(f.c) << ',' << to_string(f.d) << ','
     << to_string(f.e) << ')';
  return os.str();
}

// Dense polynomial with rational coefficients, index = degree.
using Poly = std::vector<BigRational>;

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly derivative(const Poly& p) {
  Poly out;
  for (std::size_t i = 1; i < p.size(); ++i) out.push_back(p[i] * static_cast<int>(i));
  trim(out);
  return out;
}

Poly remainder(Poly num, const Poly& den) {
  trim(num);
  while (num.size() >= den.size() && !num.empty()) {
    const BigRational factor = num.back() / den.back();
    const std::size_t shift = num.size() - den.size();
    for (std::size_t i = 0; i < den.size(); ++i) num[i + shift] -= factor * den[i];
    num.pop_back();
    trim(num);
  }
  return num;
}

int sign(const BigRational& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

int sign_changes(const std::vector<int>& signs) {
  int changes = 0, last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

/// Number of distinct real roots of a square-free polynomial.
int sturm_count(const Poly& p0) {
  std::vector<Poly> chain{p0, derivative(p0)};
  while (!chain.back().empty()) {
    Poly r = remainder(chain[chain.size() - 2], chain.back());
    for (auto& c : r) c = -c;
    if (r.empty()) break;
    chain.push_back(std::move(r));
  }
  std::vector<int> at_neg, at_pos;
  for (const auto& q : chain) {
    if (q.empty()) continue;
    const int lead = sign(q.back());
    const int deg = static_cast<int>(q.size()) - 1;
    at_pos.push_back(lead);
    at_neg.push_back(deg % 2 == 0 ? lead : -lead);
  }
  return sign_changes(at_neg) - sign_changes(at_pos);
}

BigRational determinant(std::vector<std::vector<BigRational>> m) {
  const std::size_t n = m.size();
  BigRational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t row = col + 1; row < n; ++row) {
      if (m[row][col] == 0) continue;
      const BigRational factor = m[row][col] / m[col][col];
      for (std::size_t k = col; k < n; ++k) m[row][k] -= factor * m[col][k];
    }
  }
  return det;
}

BigRational resultant(const Poly& f, const Poly& g) {
  const std::size_t m = f.size() - 1, n = g.size() - 1, size = m + n;
  std::vector<std::vector<BigRational>> s(size, std::vector<BigRational>(size, 0));
  for (std::size_t row = 0; row < n; ++row)
    for (std::size_t i = 0; i <= m; ++i) s[row][row + i] = f[m - i];
  for (std::size_t row = 0; row < m; ++row)
    for (std::size_t i = 0; i <= n; ++i) s[n + row][row + i] = g[n - i];
  return determinant(std::move(s));
}

std::vector<std::int64_t> signed_divisors(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (auto d : divisors(n)) {
    out.push_back(d);
    out.push_back(-d);
  }
  return out;
}

BigInt content(const QuarticForm& f) {
  BigInt g = 0;
  for (const auto& c : f.coeffs()) g = boost::multiprecision::gcd(g, c);
  return g;
}

QuarticForm primitive_part(const QuarticForm& f) {
  const BigInt g = content(f);
  if (g == 0 || g == 1) return f;
  return {f.a / g, f.b / g, f.c / g, f.d / g, f.e / g};
}

/// Search for f = (alpha x^2 + beta xy + gamma y^2)(delta x^2 + eps xy + zeta y^2).
bool has_quadratic_factor(const QuarticForm& f) {
  const std::int64_t a = to_i64(f.a), e = to_i64(f.e);
  for (std::int64_t alpha : divisors(a)) {
    const BigInt delta = f.a / alpha;
    for (std::int64_t gamma : signed_divisors(e)) {
      const BigInt zeta = f.e / gamma;
      // b = alpha*eps + beta*delta, d = beta*zeta + gamma*eps
      const BigInt det = delta * gamma - BigInt(alpha) * zeta;
      if (det != 0) {
        const BigInt bn = f.b * gamma - BigInt(alpha) * f.d;
        const BigInt en = delta * f.d - zeta * f.b;
        if (bn % det != 0 || en % det != 0) continue;
        const BigInt beta = bn / det, eps = en / det;
        if (BigInt(alpha) * zeta + beta * eps + BigInt(gamma) * delta == f.c) return true;
        continue;
      }
      // Columns proportional: (delta, zeta) = t (alpha, gamma).
      if (f.b % alpha != 0 || f.d % gamma != 0) continue;
      const BigInt s = f.b / alpha;
      if (s != f.d / gamma) continue;
      const BigRational t = BigRational(delta, BigInt(alpha));
      // t beta^2 - s beta + (c - 2 t alpha gamma) = 0 with eps = s - t beta.
      const BigRational qa = t, qb = -BigRational(s), qc = BigRational(f.c) - 2 * t * alpha * gamma;
      const BigRational disc = qb * qb - 4 * qa * qc;
      if (disc < 0) continue;
      const BigInt dn = numerator(disc), dd = denominator(disc);
      BigInt rn, rd;
      if (!is_square(dn, rn) || !is_square(dd, rd)) continue;
      const BigRational root = BigRational(rn, rd);
      const std::array<BigRational, 2> betas{BigRational((-qb + root) / (2 * qa)), BigRational((-qb - root) / (2 * qa))};
      for (const BigRational& beta : betas) {
        if (denominator(beta) != 1) continue;
        const BigRational eps = BigRational(s) - t * beta;
        if (denominator(eps) == 1) return true;
      }
    }
  }
  return false;
}

}  // namespace

std::string to_string(const QuarticForm& f) { return format_form(f); }
std::string to_string(const Quartic64& f) { return format_form(f); }
std::ostream& operator<<(std::ostream& os, const QuarticForm& f) { return os << to_string(f); }
std::ostream& operator<<(std::ostream& os, const Quartic64& f) { return os << to_string(f); }

QuarticForm parse_quartic(const std::string& text) {
  std::string s;
  for (char ch : text)
    if (ch != '(' && ch != ')' && ch != ' ') s.push_back(ch == ',' ? ' ' : ch);
  std::istringstream is(s);
  std::vector<BigInt> c;
  std::string tok;
  while (is >> tok) {
    try {
      c.emplace_back(tok);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad coefficient: " + tok);
    }
  }
  if (c.size() != 5) throw std::invalid_argument("a quartic form needs 5 coefficients: " + text);
  return {c[0], c[1], c[2], c[3], c[4]};
}

UnimodularMap UnimodularMap::checked(std::int64_t p, std::int64_t q, std::int64_t r, std::int64_t s) {
  UnimodularMap g{p, q, r, s};
  if (g.det() != 1 && g.det() != -1) throw std::invalid_argument("matrix is not unimodular");
  return g;
}

UnimodularMap operator*(const UnimodularMap& g, const UnimodularMap& h) {
  return {g.p * h.p + g.q * h.r, g.p * h.q + g.q * h.s, g.r * h.p + g.s * h.r, g.r * h.q + g.s * h.s};
}

std::string to_string(RootClass rc) {
  switch (rc) {
    case RootClass::i0: return "0";
    case RootClass::i1: return "1";
    case RootClass::i2plus: return "2+";
    case RootClass::i2minus: return "2-";
    case RootClass::degenerate: return "degenerate";
  }
  return "?";
}

RootClass parse_root_class(const std::string& s) {
  if (s == "0") return RootClass::i0;
  if (s == "1") return RootClass::i1;
  if (s == "2+") return RootClass::i2plus;
  if (s == "2-") return RootClass::i2minus;
  throw std::invalid_argument("unknown root class: " + s);
}

BigRational disc_of(const BigInt& I, const BigInt& J) { return make_rational(4 * I * I * I - J * J, 27); }

InvariantPair invariants(const QuarticForm& f) {
  InvariantPair out;
  out.I = inv_I(f);
  out.J = inv_J(f);
  out.disc = disc_of(out.I, out.J);
  out.rootClass = out.disc == 0 ? RootClass::degenerate : real_root_class(f);
  return out;
}

SemiInvariants semi_invariants(const QuarticForm& f) {
  SemiInvariants s;
  s.a = f.a;
  s.H = semi_H(f);
  s.R = semi_R(f);
  const BigInt I = inv_I(f);
  s.S = make_rational(s.H * s.H - 16 * f.a * f.a * I, 3);
  return s;
}

BigInt syzygy_residual(const QuarticForm& f) {
  const BigInt I = inv_I(f), J = inv_J(f), H = semi_H(f), R = semi_R(f);
  const BigInt a2 = f.a * f.a;
  return H * H * H - 48 * a2 * H * I + 64 * a2 * f.a * J + 27 * R * R;
}

BigInt poly_discriminant(const QuarticForm& f) {
  QuarticForm g = f;
  if (g.a == 0) {
    // Move a non-root to infinity; the discriminant is GL2(Z)-invariant.
    for (std::int64_t k = 0;; ++k) {
      QuarticForm t = act_translate(g, BigInt(k));
      if (t.e != 0) {
        g = act_swap(t);
        break;
      }
    }
  }
  const Poly p{BigRational(g.e), BigRational(g.d), BigRational(g.c), BigRational(g.b), BigRational(g.a)};
  const Poly dp = derivative(p);
  // disc = (-1)^(n(n-1)/2) / a * Res(p, p'), with n = 4 giving sign +1.
  const BigRational d = resultant(p, dp) / BigRational(g.a);
  return numerator(d);
}

int real_root_count(const QuarticForm& f) {
  if (f.a != 0) {
    const Poly p{BigRational(f.e), BigRational(f.d), BigRational(f.c), BigRational(f.b), BigRational(f.a)};
    return sturm_count(p);
  }
  Poly p{BigRational(f.e), BigRational(f.d), BigRational(f.c), BigRational(f.b)};
  trim(p);
  return sturm_count(p) + 1;
}

RootClass real_root_class(const QuarticForm& f) {
  if (disc_of(inv_I(f), inv_J(f)) == 0) throw std::invalid_argument("real_root_class: degenerate form");
  switch (real_root_count(f)) {
    case 4: return RootClass::i0;
    case 2: return RootClass::i1;
    case 0: return f.a > 0 ? RootClass::i2plus : RootClass::i2minus;
    default: throw std::logic_error("real_root_class: impossible root count");
  }
}

std::vector<std::pair<BigInt, BigInt>> rational_roots(const QuarticForm& form) {
  const QuarticForm f = primitive_part(form);
  std::vector<std::pair<BigInt, BigInt>> out;
  if (f.a == 0 && f.b == 0 && f.c == 0 && f.d == 0 && f.e == 0) throw std::invalid_argument("zero form");
  if (f.a == 0) out.emplace_back(1, 0);
  // Roots (p : q) with q > 0. Strip the factor y^k when e = 0.
  if (f.e == 0) out.emplace_back(0, 1);
  std::array<BigInt, 5> c = f.coeffs();  // c[0] x^4 ... c[4] y^4
  int lo = 4;
  while (lo > 0 && c[lo] == 0) --lo;  // lowest nonzero y-power coefficient index
  int hi = 0;
  while (hi < 4 && c[hi] == 0) ++hi;
  if (hi == lo) return out;  // monomial: roots only at 0 and infinity
  const std::int64_t lead = to_i64(c[hi]), tail = to_i64(c[lo]);
  for (std::int64_t q : divisors(lead)) {
    for (std::int64_t p : signed_divisors(tail)) {
      if (std::gcd(p, q) != 1) continue;
      if (eval(f, BigInt(p), BigInt(q)) == 0) out.emplace_back(p, q);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool has_rational_linear_factor(const QuarticForm& f) { return !rational_roots(f).empty(); }

bool is_irreducible(const QuarticForm& f) {
  if (f.a == 0 || f.e == 0) return false;
  const QuarticForm g = primitive_part(f);
  if (has_rational_linear_factor(g)) return false;
  return !has_quadratic_factor(g);
}

MonicCubic cubic_resolvent(const BigInt& I, const BigInt& J) { return {0, -3 * I, J}; }

std::optional<UniqueRootData> unique_root(const QuarticForm& f) {
  if (f.a == 0) throw std::invalid_argument("unique_root: a = 0");
  const auto roots = rational_roots(f);
  if (roots.size() != 1) return std::nullopt;
  const auto& [p, q] = roots.front();
  UniqueRootData out;
  out.fourA = 4 * f.a;
  out.uPrime = 4 * (f.a / q) * p;
  out.u = -out.uPrime - f.b;
  const BigInt twice_v = out.u * out.u + semi_H(f);
  out.v = twice_v / 2;
  if (twice_v % 2 != 0) throw std::logic_error("unique_root: 2v not even");
  return out;
}

BigInt single_root_identity_residual(const QuarticForm& f) {
  if (f.a == 0) throw std::invalid_argument("single_root_identity_residual: a = 0");
  const BigInt R = semi_R(f);
  if (R == 0) throw std::invalid_argument("single_root_identity_residual: R = 0");
  const auto root = unique_root(f);
  if (!root) throw std::invalid_argument("single_root_identity_residual: no unique rational root");
  const BigInt H = semi_H(f), J = inv_J(f);
  const BigInt& u = root->u;
  const BigInt& v = root->v;
  const BigInt fa3 = root->fourA * root->fourA * root->fourA;
  const BigInt uH = u * H;
  const BigInt t = 3 * R - uH;
  return fa3 * J - (2 * H * H * H - 9 * H * v * v + 3 * uH * uH - 3 * t * t);
}

}  // namespace bqf
