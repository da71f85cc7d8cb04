#include "bqf/semiinv.hpp"

#include <cmath>
#include <complex>
#include <numbers>

namespace bqf {

namespace {

BigRational abs_q(const BigRational& x) { return x < 0 ? BigRational(-x) : x; }

BigRational max_q(const BigRational& x, const BigRational& y) { return x < y ? y : x; }

/// Split a positive rational into 64-bit numerator and denominator.
std::pair<std::int64_t, std::int64_t> split_c(const BigRational& C) {
  if (C <= 0) throw std::invalid_argument("height constant must be positive");
  return {to_i64(numerator(C)), to_i64(denominator(C))};
}

int128 floor_div128(int128 n, int128 d) { return floor_div<int128>(n, d); }

/// Integers x with lo <= x <= hi and x = r (mod m).
std::int64_t count_congruent(int128 lo, int128 hi, int128 r, int128 m) {
  if (lo > hi) return 0;
  return static_cast<std::int64_t>(floor_div128(hi - r, m) - floor_div128(lo - 1 - r, m));
}

/// Open I-window (center +- half) for fixed (a, H, R), in common-denominator
/// form: the integers strictly inside are [lo, hi].
struct Window {
  int128 lo, hi;
};

Window i_window(std::int64_t a, int128 H, int128 R, std::int64_t X, std::int64_t cp, std::int64_t cq) {
  const int128 aa = a < 0 ? -a : a;
  const int128 absH = H < 0 ? -H : H;
  const long double est = std::fabs(27.0L * static_cast<long double>(R) * static_cast<long double>(R)) +
                          std::fabs(static_cast<long double>(H) * static_cast<long double>(H) *
                                    static_cast<long double>(H)) +
                          192.0L * static_cast<long double>(aa) * aa * aa * X * cp;
  if (est * 3.0L * static_cast<long double>(cq) > 1e36L) throw std::overflow_error("fiber window exceeds 128-bit range");
  const int128 D = 144 * aa * aa * absH * cq;
  const int128 center = (H < 0 ? -1 : 1) * (27 * R * R + H * H * H) * 3 * cq;
  const int128 half = 192 * static_cast<int128>(cp) * aa * aa * aa * X;
  return {floor_div128(center - half, D) + 1, -floor_div128(-(center + half), D) - 1};
}

}  // namespace

SemiForm upsilon(const QuarticForm& f) { return {f.a, f.b, f.c, semi_R(f), inv_I(f)}; }

RationalQuartic upsilon_inv(const SemiForm& s) {
  if (s.a == 0) throw std::invalid_argument("upsilon_inv: a = 0");
  const BigRational d = make_rational(s.R - s.b * s.b * s.b + 4 * s.a * s.b * s.c, 8 * s.a * s.a);
  const BigRational e = (BigRational(s.I) + 3 * BigRational(s.b) * d - BigRational(s.c * s.c)) / BigRational(12 * s.a);
  return {BigRational(s.a), BigRational(s.b), BigRational(s.c), d, e};
}

bool lambda_member(const SemiForm& s) {
  if (s.a == 0) throw std::invalid_argument("lambda_member: a = 0");
  const BigInt modR = 8 * s.a * s.a;
  const BigInt t = s.R - (s.b * s.b * s.b - 4 * s.a * s.b * s.c);
  if (t % modR != 0) return false;
  const BigInt d = t / modR;
  const BigInt modI = 12 * abs_val(s.a);
  return (s.I - (s.c * s.c - 3 * s.b * d)) % modI == 0;
}

BigRational semi_J(const SemiForm& s) {
  if (s.a == 0) throw std::invalid_argument("semi_J: a = 0");
  const BigInt H = 8 * s.a * s.c - 3 * s.b * s.b;
  const BigInt a2 = s.a * s.a;
  return make_rational(48 * a2 * H * s.I - H * H * H - 27 * s.R * s.R, 64 * a2 * s.a);
}

BigRational height(const QuarticForm& f, const BigRational& C) {
  if (C <= 0) throw std::invalid_argument("height constant must be positive");
  return max_q(BigRational(abs_val(inv_I(f))), BigRational(abs_val(inv_J(f))) / C);
}

BigRational gamma_tilde(const BigInt& a, const BigInt& H, const BigInt& R) {
  const BigInt a2 = a * a;
  return make_rational(27 * R * R, 48 * a2 * H) + make_rational(H * H, 48 * a2);
}

BigRational height(const SemiForm& s, const BigRational& C) {
  if (s.a == 0) throw std::invalid_argument("height: a = 0");
  if (C <= 0) throw std::invalid_argument("height constant must be positive");
  const BigInt H = 8 * s.a * s.c - 3 * s.b * s.b;
  const BigRational absI = BigRational(abs_val(s.I));
  if (H == 0) {
    const BigRational j = make_rational(27 * s.R * s.R, 64 * s.a * s.a * s.a);
    return max_q(absI, abs_q(j) / C);
  }
  // Gamma is the center scaled by 4aC/(3H).
  const BigRational scale = BigRational(3 * H) / (BigRational(4 * s.a) * C);
  const BigRational Gamma = scale * gamma_tilde(s.a, H, s.R);
  return max_q(absI, abs_q(scale * BigRational(s.I) - Gamma));
}

FiberLattice fiber_lattice(const BigInt& a, const BigInt& b, const BigInt& c) {
  if (a == 0) throw std::invalid_argument("fiber_lattice: a = 0");
  return {a, b, c, b * b * b - 4 * a * b * c, 8 * a * a, 12 * abs_val(a)};
}

namespace {

/// R0^2 as an exact rational, or empty for the fallback branch.
std::optional<BigRational> r_zero_sq(const BigInt& a, const BigInt& H, const BigInt& X, const BigRational& C) {
  if (H == 0) throw std::invalid_argument("r_zero: H = 0");
  const BigInt a2 = a * a;
  const BigRational shift = make_rational(H * H, 48 * a2);
  const BigRational lead = make_rational(48 * a2 * H, 27);
  if (H > 0) {
    const BigRational slack = BigRational(X) - shift;
    const BigRational width = BigRational(4, 3) * C * abs_q(make_rational(a * X, H));
    if (slack > width) return lead * slack;
    return std::nullopt;
  }
  return abs_q(lead * (BigRational(X) + shift));
}

}  // namespace

double r_zero(const BigInt& a, const BigInt& b, const BigInt& c, const BigInt& X, const BigRational& C) {
  const BigInt H = 8 * a * c - 3 * b * b;
  const auto sq = r_zero_sq(a, H, X, C);
  return sq ? std::sqrt(sq->convert_to<double>()) : 1.0;
}

FiberRegion fiber_region(const BigInt& a, const BigInt& b, const BigInt& c, const BigInt& X, const BigRational& C) {
  if (a == 0) throw std::invalid_argument("fiber_region: a = 0");
  FiberRegion reg;
  reg.a = a;
  reg.b = b;
  reg.c = c;
  reg.H = 8 * a * c - 3 * b * b;
  reg.X = X;
  reg.C = C;
  reg.R0sq = r_zero_sq(a, reg.H, X, C);
  reg.R0 = reg.R0sq ? std::sqrt(reg.R0sq->convert_to<double>()) : 1.0;
  reg.iHalfWidth = BigRational(4, 3) * C * abs_q(make_rational(a, reg.H)) * BigRational(X);
  return reg;
}

bool r_in_range(const FiberRegion& reg, const BigInt& R) {
  if (reg.R0sq) return BigRational(R * R) < *reg.R0sq;
  return abs_val(R) < 1;
}

bool fiber_region_contains(const FiberRegion& reg, const BigInt& R, const BigInt& I) {
  if (!r_in_range(reg, R)) return false;
  return abs_q(BigRational(I) - gamma_tilde(reg.a, reg.H, R)) < reg.iHalfWidth;
}

bool fiber_height_contains(const FiberRegion& reg, const BigInt& R, const BigInt& I) {
  if (abs_val(I) >= reg.X) return false;
  return abs_q(BigRational(I) - gamma_tilde(reg.a, reg.H, R)) < reg.iHalfWidth;
}

LatticeCount lattice_enumerate(const FiberLattice& lat, const FiberRegion& reg,
                               const std::function<void(std::int64_t, std::int64_t)>& visit) {
  if (reg.H == 0) throw std::invalid_argument("lattice_enumerate: H = 0");
  const std::int64_t a = to_i64(lat.a), b = to_i64(lat.b), c = to_i64(lat.c);
  const std::int64_t X = to_i64(reg.X);
  const auto [cp, cq] = split_c(reg.C);
  const int128 H = static_cast<int128>(to_i64(reg.H));
  const int128 zeta = static_cast<int128>(to_i64(lat.zetaOffset));
  const int128 modR = 8 * static_cast<int128>(a) * a;
  const int128 modI = 12 * static_cast<int128>(a < 0 ? -a : a);

  // R-range covering both H' (|R| < R0) and H (center within X + w of 0).
  const double a2 = static_cast<double>(a) * a, h = static_cast<double>(H);
  const double w = reg.iHalfWidth.convert_to<double>();
  const double shift = h * h / (48.0 * a2);
  double rh_sq = h > 0 ? (X + w - shift) * 48.0 * a2 * h / 27.0 : (X + w + shift) * 48.0 * a2 * (-h) / 27.0;
  const double r_height = rh_sq > 0 ? std::sqrt(rh_sq) : 0.0;
  const double r_max = std::max(reg.R0, r_height) + 2.0;
  const auto k_lo = static_cast<std::int64_t>(std::floor((-r_max - static_cast<double>(zeta)) / static_cast<double>(modR)));
  const auto k_hi = static_cast<std::int64_t>(std::ceil((r_max - static_cast<double>(zeta)) / static_cast<double>(modR)));

  LatticeCount out;
  for (std::int64_t k = k_lo; k <= k_hi; ++k) {
    const int128 R = zeta + modR * k;
    // d = k, so I = c^2 - 3bk (mod 12|a|).
    const int128 residue = mod_pos<int128>(static_cast<int128>(c) * c - 3 * static_cast<int128>(b) * k, modI);
    const Window win = i_window(a, H, R, X, cp, cq);
    if (win.lo > win.hi) continue;
    bool in_r;
    if (reg.R0sq) {
      in_r = BigRational(BigInt(R) * BigInt(R)) < *reg.R0sq;
    } else {
      in_r = R == 0;
    }
    const int128 hlo = std::max<int128>(win.lo, -static_cast<int128>(X) + 1);
    const int128 hhi = std::min<int128>(win.hi, static_cast<int128>(X) - 1);
    const std::int64_t n_height = count_congruent(hlo, hhi, residue, modI);
    out.inHeight += n_height;
    if (in_r) {
      const std::int64_t n_region = count_congruent(win.lo, win.hi, residue, modI);
      out.inRegion += n_region;
      out.symmetricDiff += n_region - n_height;
      if (visit) {
        int128 first = win.lo + mod_pos<int128>(residue - win.lo, modI);
        for (int128 I = first; I <= win.hi; I += modI) visit(static_cast<std::int64_t>(R), static_cast<std::int64_t>(I));
      }
    } else {
      out.symmetricDiff += n_height;
    }
  }
  return out;
}

std::int64_t IRange::first() const { return lo + mod_pos<std::int64_t>(residue - lo, modulus); }

std::int64_t IRange::count() const { return count_congruent(lo, hi, residue, modulus); }

IRange e_range(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d, std::int64_t X, const BigRational& C) {
  const auto [cp, cq] = split_c(C);
  return e_range(a, b, c, d, X, cp, cq);
}

IRange e_range(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d, std::int64_t X, std::int64_t cp,
               std::int64_t cq) {
  if (a == 0) throw std::invalid_argument("e_range: a = 0");
  const int128 H = 8 * static_cast<int128>(a) * c - 3 * static_cast<int128>(b) * b;
  if (H == 0) throw std::invalid_argument("e_range: H = 0");
  const int128 R = static_cast<int128>(b) * b * b + 8 * static_cast<int128>(a) * a * d - 4 * static_cast<int128>(a) * b * c;
  const Window win = i_window(a, H, R, X, cp, cq);
  IRange out;
  out.modulus = 12 * (a < 0 ? -a : a);
  out.residue = static_cast<std::int64_t>(mod_pos<int128>(static_cast<int128>(c) * c - 3 * static_cast<int128>(b) * d, out.modulus));
  out.lo = static_cast<std::int64_t>(std::max<int128>(win.lo, -static_cast<int128>(X) + 1));
  out.hi = static_cast<std::int64_t>(std::min<int128>(win.hi, static_cast<int128>(X) - 1));
  return out;
}

BigRational lattice_fourier_magnitude(std::int64_t a, std::int64_t b, std::int64_t, std::int64_t alpha,
                                      std::int64_t beta) {
  if (a == 0) throw std::invalid_argument("lattice_fourier_magnitude: a = 0");
  const std::int64_t m = 12 * (a < 0 ? -a : a);
  const bool eps = mod_pos<std::int64_t>(alpha - 3 * b * beta, m) == 0;
  const BigInt cov = 96 * abs_val(BigInt(a) * a * a);
  return eps ? BigRational(BigInt(1), cov) : BigRational(0);
}

double lattice_fourier_sum(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t alpha, std::int64_t beta) {
  if (a == 0) throw std::invalid_argument("lattice_fourier_sum: a = 0");
  const int128 A = a;
  const int128 D = 96 * A * A * A;
  const int128 absD = D < 0 ? -D : D;
  const int128 sgnD = D < 0 ? -1 : 1;
  const int128 zeta = static_cast<int128>(b) * b * b - 4 * A * b * c;
  const std::int64_t n = 12 * (a < 0 ? -a : a);
  std::complex<double> sum = 0;
  for (std::int64_t k = 0; k < n; ++k) {
    // alpha (zeta + 8a^2 k) / (96 a^3) + beta (c^2 - 3bk) / (12 a), over the common denominator 96a^3.
    const int128 num = alpha * (zeta + 8 * A * A * k) + 8 * A * A * beta * (static_cast<int128>(c) * c - 3 * static_cast<int128>(b) * k);
    const int128 r = mod_pos<int128>(sgnD * num, absD);
    const double phase = 2.0 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(absD);
    sum += std::polar(1.0, phase);
  }
  return std::abs(sum);
}

}  // namespace bqf
