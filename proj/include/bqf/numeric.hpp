#pragma once

// Exact scalar types and small integer helpers shared by every module.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <type_traits>

namespace bqf {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;
using int128 = __int128;

/// Type wide enough to hold degree-6 polynomial expressions in the
/// coefficients of a form whose coefficients are stored as `T`.
template <class T> struct wide { using type = T; };
template <> struct wide<std::int64_t> { using type = int128; };
template <class T> using wide_t = typename wide<T>::type;

template <class T> inline T abs_val(const T& x) { return x < 0 ? T(-x) : x; }

/// Floor division for signed integers (rounds toward -inf).
template <class T> inline T floor_div(const T& n, const T& d) {
  T q = n / d;
  T r = n - q * d;
  if (r != 0 && ((r < 0) != (d < 0))) q -= 1;
  return q;
}

template <class T> inline T ceil_div(const T& n, const T& d) {
  return -floor_div<T>(T(-n), d);
}

/// Non-negative residue of n modulo |m|.
template <class T> inline T mod_pos(const T& n, const T& m) {
  T mm = abs_val(m);
  T r = n % mm;
  if (r < 0) r += mm;
  return r;
}

inline BigInt floor_div(const BigInt& n, const BigInt& d) {
  BigInt q, r;
  boost::multiprecision::divide_qr(n, d, q, r);
  if (r != 0 && ((r < 0) != (d < 0))) q -= 1;
  return q;
}

inline BigInt ceil_div(const BigInt& n, const BigInt& d) { return -floor_div(BigInt(-n), d); }

/// floor(sqrt(n)) for n >= 0.
inline BigInt isqrt(const BigInt& n) {
  if (n < 0) throw std::domain_error("isqrt of negative value");
  return boost::multiprecision::sqrt(n);
}

inline std::uint64_t isqrt_u64(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(__builtin_sqrtl(static_cast<long double>(n)));
  while (r > 0 && static_cast<unsigned __int128>(r) * r > n) --r;
  while (static_cast<unsigned __int128>(r + 1) * (r + 1) <= n) ++r;
  return r;
}

inline int128 isqrt(int128 n) {
  if (n < 0) throw std::domain_error("isqrt of negative value");
  if (n <= static_cast<int128>(std::numeric_limits<std::uint64_t>::max()))
    return static_cast<int128>(isqrt_u64(static_cast<std::uint64_t>(n)));
  return static_cast<int128>(boost::multiprecision::sqrt(BigInt(n)));
}

inline std::int64_t isqrt(std::int64_t n) {
  if (n < 0) throw std::domain_error("isqrt of negative value");
  return static_cast<std::int64_t>(isqrt_u64(static_cast<std::uint64_t>(n)));
}

/// Returns true and sets root when n is a perfect square.
template <class T> inline bool is_square(const T& n, T& root) {
  if (n < 0) return false;
  root = isqrt(n);
  return root * root == n;
}

inline BigInt to_big(const BigInt& x) { return x; }
inline BigInt to_big(std::int64_t x) { return BigInt(x); }
inline BigInt to_big(int128 x) { return BigInt(x); }

/// Narrowing conversion used when a desk-scale routine needs machine words.
inline std::int64_t to_i64(const BigInt& x) {
  if (x > std::numeric_limits<std::int64_t>::max() || x < std::numeric_limits<std::int64_t>::min())
    throw std::overflow_error("value exceeds 64-bit range: " + x.str());
  return static_cast<std::int64_t>(x);
}
inline std::int64_t to_i64(std::int64_t x) { return x; }
inline std::int64_t to_i64(int128 x) {
  if (x > std::numeric_limits<std::int64_t>::max() || x < std::numeric_limits<std::int64_t>::min())
    throw std::overflow_error("value exceeds 64-bit range");
  return static_cast<std::int64_t>(x);
}

inline std::string to_string(int128 x) {
  if (x == 0) return "0";
  bool neg = x < 0;
  unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(x + 1)) + 1 : static_cast<unsigned __int128>(x);
  std::string s;
  while (u > 0) {
    s.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
    u /= 10;
  }
  if (neg) s.push_back('-');
  return {s.rbegin(), s.rend()};
}
inline std::string to_string(const BigInt& x) { return x.str(); }
inline std::string to_string(std::int64_t x) { return std::to_string(x); }
inline std::string to_string(const BigRational& x) { return x.str(); }

/// n/d for any nonzero d; the two-argument constructor rejects negative d.
inline BigRational make_rational(const BigInt& n, const BigInt& d) {
  if (d == 0) throw std::domain_error("make_rational: zero denominator");
  return d < 0 ? BigRational(BigInt(-n), BigInt(-d)) : BigRational(n, d);
}

inline BigInt numerator(const BigRational& q) { return boost::multiprecision::numerator(q); }
inline BigInt denominator(const BigRational& q) { return boost::multiprecision::denominator(q); }

/// Parses "p/q" or "p" into an exact positive-or-negative rational.
BigRational parse_rational(const std::string& text);

}  // namespace bqf
