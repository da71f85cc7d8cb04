#pragma once

// Binary quartic forms ax^4 + bx^3y + cx^2y^2 + dxy^3 + ey^4.

#include "bqf/numeric.hpp"

#include <array>
#include <optional>
#include <ostream>
#include <string>
#include <tuple>

namespace bqf {

template <class T> struct BasicQuartic {
  T a{}, b{}, c{}, d{}, e{};

  bool operator==(const BasicQuartic&) const = default;
  bool operator<(const BasicQuartic& o) const { return std::tie(a, b, c, d, e) < std::tie(o.a, o.b, o.c, o.d, o.e); }

  std::array<T, 5> coeffs() const { return {a, b, c, d, e}; }
};

using QuarticForm = BasicQuartic<BigInt>;
using Quartic64 = BasicQuartic<std::int64_t>;
using RationalQuartic = BasicQuartic<BigRational>;

template <class To, class From> BasicQuartic<To> convert(const BasicQuartic<From>& f) {
  return {To(f.a), To(f.b), To(f.c), To(f.d), To(f.e)};
}

inline Quartic64 narrow(const QuarticForm& f) {
  return {to_i64(f.a), to_i64(f.b), to_i64(f.c), to_i64(f.d), to_i64(f.e)};
}

std::string to_string(const QuarticForm& f);
std::string to_string(const Quartic64& f);
std::ostream& operator<<(std::ostream& os, const QuarticForm& f);
std::ostream& operator<<(std::ostream& os, const Quartic64& f);
QuarticForm parse_quartic(const std::string& text);

// ---- invariants, generic over the coefficient type -------------------------

template <class T> wide_t<T> inv_I(const BasicQuartic<T>& f) {
  using W = wide_t<T>;
  return W(12) * f.a * f.e - W(3) * f.b * f.d + W(f.c) * f.c;
}

template <class T> wide_t<T> inv_J(const BasicQuartic<T>& f) {
  using W = wide_t<T>;
  const W a = f.a, b = f.b, c = f.c, d = f.d, e = f.e;
  return 72 * a * c * e + 9 * b * c * d - 27 * a * d * d - 27 * e * b * b - 2 * c * c * c;
}

template <class T> wide_t<T> semi_H(const BasicQuartic<T>& f) {
  using W = wide_t<T>;
  return W(8) * f.a * f.c - W(3) * f.b * f.b;
}

template <class T> wide_t<T> semi_R(const BasicQuartic<T>& f) {
  using W = wide_t<T>;
  const W a = f.a, b = f.b, c = f.c, d = f.d;
  return b * b * b + 8 * a * a * d - 4 * a * b * c;
}

/// L1 norm of the coefficient vector.
template <class T> T norm1(const BasicQuartic<T>& f) {
  return abs_val(f.a) + abs_val(f.b) + abs_val(f.c) + abs_val(f.d) + abs_val(f.e);
}

/// Value of f at the point (x, y).
template <class T> wide_t<T> eval(const BasicQuartic<T>& f, const wide_t<T>& x, const wide_t<T>& y) {
  using W = wide_t<T>;
  const W x2 = x * x, y2 = y * y;
  return W(f.a) * x2 * x2 + W(f.b) * x2 * x * y + W(f.c) * x2 * y2 + W(f.d) * x * y2 * y + W(f.e) * y2 * y2;
}

// ---- group action -----------------------------------------------------------

/// 2x2 integer matrix [[p, q], [r, s]] with determinant +-1.
struct UnimodularMap {
  std::int64_t p = 1, q = 0, r = 0, s = 1;

  std::int64_t det() const { return p * s - q * r; }
  bool operator==(const UnimodularMap&) const = default;

  static UnimodularMap checked(std::int64_t p, std::int64_t q, std::int64_t r, std::int64_t s);
  static UnimodularMap identity() { return {}; }
  static UnimodularMap swap() { return {0, 1, 1, 0}; }
  static UnimodularMap negate_x() { return {-1, 0, 0, 1}; }
  /// x |-> x + k y.
  static UnimodularMap translate(std::int64_t k) { return {1, 0, k, 1}; }
};

UnimodularMap operator*(const UnimodularMap& g, const UnimodularMap& h);

/// (g . f)(x, y) = f((x, y) g) = f(px + ry, qx + sy). Works for any matrix; the
/// public entry point `act` insists on det = +-1.
template <class T> BasicQuartic<T> substitute(const BasicQuartic<T>& f, const T& p, const T& q, const T& r, const T& s) {
  // Expand c_i * (px + ry)^(4-i) * (qx + sy)^i.
  std::array<std::array<T, 5>, 5> L{}, M{};
  L[0] = {T(1), T(0), T(0), T(0), T(0)};
  M[0] = L[0];
  for (int k = 1; k <= 4; ++k) {
    for (int j = 0; j <= 4; ++j) {
      T lv = L[k - 1][j] * p, mv = M[k - 1][j] * q;
      if (j > 0) {
        lv += L[k - 1][j - 1] * r;
        mv += M[k - 1][j - 1] * s;
      }
      L[k][j] = lv;
      M[k][j] = mv;
    }
  }
  const std::array<T, 5> c = f.coeffs();
  std::array<T, 5> out{};
  for (int i = 0; i <= 4; ++i) {
    if (c[i] == 0) continue;
    const auto& l = L[4 - i];
    const auto& m = M[i];
    for (int u = 0; u <= 4 - i; ++u)
      for (int v = 0; v <= i; ++v) out[u + v] += c[i] * l[u] * m[v];
  }
  return {out[0], out[1], out[2], out[3], out[4]};
}

template <class T> BasicQuartic<T> act(const UnimodularMap& g, const BasicQuartic<T>& f) {
  if (g.det() != 1 && g.det() != -1) throw std::invalid_argument("act: matrix is not unimodular");
  return substitute(f, T(g.p), T(g.q), T(g.r), T(g.s));
}

// Generators used by reduction; cheaper than the general substitution.
template <class T> BasicQuartic<T> act_swap(const BasicQuartic<T>& f) { return {f.e, f.d, f.c, f.b, f.a}; }
template <class T> BasicQuartic<T> act_negate(const BasicQuartic<T>& f) { return {f.a, T(-f.b), f.c, T(-f.d), f.e}; }

/// f(x + k y, y).
template <class T> BasicQuartic<T> act_translate(const BasicQuartic<T>& f, const T& k) {
  const T& a = f.a;
  const T& b = f.b;
  const T& c = f.c;
  const T& d = f.d;
  const T k2 = k * k;
  return {a, T(b + 4 * a * k), T(c + 3 * b * k + 6 * a * k2), T(d + 2 * c * k + 3 * b * k2 + 4 * a * k2 * k),
          T(f.e + d * k + c * k2 + b * k2 * k + a * k2 * k2)};
}

// ---- exact public API -------------------------------------------------------

enum class RootClass { i0, i1, i2plus, i2minus, degenerate };

std::string to_string(RootClass rc);
RootClass parse_root_class(const std::string& s);

struct InvariantPair {
  BigInt I, J;
  BigRational disc;  // (4I^3 - J^2) / 27
  RootClass rootClass = RootClass::degenerate;
};

/// Discriminant (4I^3 - J^2)/27 of an invariant pair.
BigRational disc_of(const BigInt& I, const BigInt& J);

struct SemiInvariants {
  BigInt a, H, R;
  BigRational S;  // (H^2 - 16a^2 I) / 3
};

/// Monic cubic x^3 + c2 x^2 + c1 x + c0, stored as (c2, c1, c0).
struct MonicCubic {
  BigInt c2, c1, c0;
  bool operator==(const MonicCubic&) const = default;
};

struct UniqueRootData {
  BigInt uPrime, fourA, u, v;
};

InvariantPair invariants(const QuarticForm& f);
SemiInvariants semi_invariants(const QuarticForm& f);
BigInt syzygy_residual(const QuarticForm& f);

/// Classical discriminant of f(x, 1) as a polynomial, via the resultant of f
/// and its derivative (a = 0 handled as a root at infinity).
BigInt poly_discriminant(const QuarticForm& f);

/// Real root count on P^1(R) by Sturm sequences; definiteness splits i = 2.
RootClass real_root_class(const QuarticForm& f);
int real_root_count(const QuarticForm& f);

bool is_irreducible(const QuarticForm& f);
/// True when f vanishes at some point of P^1(Q).
bool has_rational_linear_factor(const QuarticForm& f);

MonicCubic cubic_resolvent(const BigInt& I, const BigInt& J);
inline MonicCubic cubic_resolvent(const InvariantPair& iv) { return cubic_resolvent(iv.I, iv.J); }

/// Rational roots of f on P^1(Q), as primitive pairs (x, y) with y >= 0.
std::vector<std::pair<BigInt, BigInt>> rational_roots(const QuarticForm& f);

std::optional<UniqueRootData> unique_root(const QuarticForm& f);
BigInt single_root_identity_residual(const QuarticForm& f);

}  // namespace bqf
