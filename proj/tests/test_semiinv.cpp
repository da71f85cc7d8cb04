#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bqf/semiinv.hpp"

#include <cmath>
#include <random>

using namespace bqf;

namespace {

std::mt19937_64 rng(77);
std::int64_t uni(std::int64_t lo, std::int64_t hi) { return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng); }

SemiForm S(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t R, std::int64_t I) { return {a, b, c, R, I}; }

}  // namespace

TEST_CASE("upsilon and its inverse") {
  CHECK(upsilon(QuarticForm{1, -1, 1, 0, -1}) == S(1, -1, 1, 3, -11));
  CHECK(upsilon(QuarticForm{1, 0, 1, 0, 1}) == S(1, 0, 1, 0, 13));
  CHECK(upsilon(QuarticForm{1, 0, 0, 1, 1}) == S(1, 0, 0, 8, 12));
  CHECK(upsilon_inv(S(1, -1, 1, 3, -11)) == convert<BigRational>(QuarticForm{1, -1, 1, 0, -1}));
  CHECK(upsilon_inv(S(1, 0, 0, 8, 12)) == convert<BigRational>(QuarticForm{1, 0, 0, 1, 1}));
  CHECK(upsilon_inv(S(1, 0, 0, 1, 0)).d == BigRational(1, 8));
  CHECK_THROWS(upsilon_inv(S(0, 1, 1, 1, 1)));
}

TEST_CASE("lattice membership") {
  CHECK(lambda_member(S(1, 0, 0, 8, 12)));
  CHECK_FALSE(lambda_member(S(1, 0, 0, 8, 13)));
  CHECK(lambda_member(S(1, -1, 1, 3, -11)));
  CHECK_FALSE(lambda_member(S(1, 0, 0, 1, 0)));
  CHECK_THROWS(lambda_member(S(0, 0, 0, 0, 0)));
}

TEST_CASE("round trips") {
  for (int i = 0; i < 3000; ++i) {
    std::int64_t a = uni(-40, 40);
    if (a == 0) a = 1;
    const QuarticForm f{a, uni(-40, 40), uni(-40, 40), uni(-40, 40), uni(-40, 40)};
    CHECK(upsilon_inv(upsilon(f)) == convert<BigRational>(f));
  }
  int members = 0;
  while (members < 3000) {
    std::int64_t a = uni(-6, 6);
    if (a == 0) continue;
    const SemiForm s = S(a, uni(-20, 20), uni(-20, 20), uni(-3000, 3000), uni(-3000, 3000));
    if (!lambda_member(s)) continue;
    ++members;
    const RationalQuartic q = upsilon_inv(s);
    for (const auto& x : q.coeffs()) CHECK(denominator(x) == 1);
    const QuarticForm f{numerator(q.a), numerator(q.b), numerator(q.c), numerator(q.d), numerator(q.e)};
    CHECK(upsilon(f) == s);
  }
}

TEST_CASE("heights") {
  CHECK(height(QuarticForm{1, 0, 1, 0, 1}, BigRational(1)) == 70);
  CHECK(height(QuarticForm{1, 0, 1, 0, 1}, BigRational(36)) == 13);
  // H = 0 branch goes through the syzygy
  CHECK(height(S(1, 0, 0, 8, 12), BigRational(1)) == 27);
  CHECK(height(QuarticForm{1, 0, 0, 1, 1}, BigRational(1)) == 27);  // J = -27
  for (int i = 0; i < 3000; ++i) {
    std::int64_t a = uni(-30, 30);
    if (a == 0) a = -1;
    const QuarticForm f{a, uni(-30, 30), uni(-30, 30), uni(-30, 30), uni(-30, 30)};
    for (int C : {1, 36}) CHECK(height(upsilon(f), BigRational(C)) == height(f, BigRational(C)));
  }
}

TEST_CASE("R0 branches") {
  CHECK(r_zero(1, 0, -1, 1000000, BigRational(1)) == doctest::Approx(3771.2).epsilon(1e-4));
  CHECK(r_zero(1, 0, 1, 1, BigRational(1)) == 1.0);
  CHECK(r_zero(1, 0, 1, 100, BigRational(1)) == doctest::Approx(37.46).epsilon(1e-3));
  CHECK_THROWS(r_zero(1, 0, 0, 100, BigRational(1)));
}

TEST_CASE("fiber region membership") {
  const FiberRegion reg = fiber_region(1, 0, -1, 100, BigRational(1));
  CHECK(gamma_tilde(1, -8, 0) == BigRational(4, 3));
  CHECK(reg.iHalfWidth == BigRational(50, 3));
  CHECK(fiber_region_contains(reg, 0, 0));
  CHECK_FALSE(fiber_region_contains(reg, BigInt(1000000000), 0));
  // (1, 0, 3): center 12 at R = 0, half-width X/18; |I - 12| = 2 is excluded at X = 36
  const FiberRegion reg2 = fiber_region(1, 0, 3, 36, BigRational(1));
  CHECK(reg2.iHalfWidth == 2);
  CHECK(fiber_region_contains(reg2, 0, 13));
  CHECK_FALSE(fiber_region_contains(reg2, 0, 14));
  CHECK_FALSE(fiber_region_contains(reg2, 0, 10));
}

TEST_CASE("fiber membership matches coefficient-space height") {
  // (R, I) in Lambda cap H  <=>  the integral quartic has |I| < X and h_C < X
  for (std::int64_t a : {1, -2, 3})
    for (std::int64_t b = -2; b <= 2; ++b)
      for (std::int64_t c = -3; c <= 3; ++c) {
        if (8 * a * c - 3 * b * b == 0) continue;
        const std::int64_t X = 60;
        const FiberRegion reg = fiber_region(a, b, c, X, BigRational(1));
        const FiberLattice lat = fiber_lattice(a, b, c);
        for (std::int64_t d = -12; d <= 12; ++d)
          for (std::int64_t e = -12; e <= 12; ++e) {
            const QuarticForm f{a, b, c, d, e};
            const SemiForm s = upsilon(f);
            CHECK(lambda_member(s));
            CHECK((s.R - lat.zetaOffset) % lat.modR == 0);
            const bool inH = fiber_height_contains(reg, s.R, s.I);
            const bool direct = abs_val(s.I) < X && height(f, BigRational(1)) < X;
            CHECK(inH == direct);
          }
      }
}

TEST_CASE("lattice enumeration") {
  const FiberLattice lat = fiber_lattice(1, 0, -1);
  const FiberRegion reg = fiber_region(1, 0, -1, 1000000, BigRational(1));
  const LatticeCount n = lattice_enumerate(lat, reg);
  const double area = 2 * reg.R0 * 2 * static_cast<double>(reg.iHalfWidth) / 96.0;
  CHECK(std::fabs(static_cast<double>(n.inRegion) - area) / area < 0.01);
  CHECK_THROWS(fiber_region(1, 0, 0, 100, BigRational(1)));

  // streamed points agree with the count and with membership
  const FiberRegion small = fiber_region(2, 1, -3, 2000, BigRational(1));
  const FiberLattice sl = fiber_lattice(2, 1, -3);
  std::uint64_t seen = 0;
  bool allMembers = true;
  const LatticeCount m = lattice_enumerate(sl, small, [&](std::int64_t R, std::int64_t I) {
    ++seen;
    allMembers = allMembers && fiber_region_contains(small, R, I) && lambda_member(S(2, 1, -3, R, I));
  });
  CHECK(seen == m.inRegion);
  CHECK(allMembers);
}

TEST_CASE("e-range") {
  const IRange r = e_range(1, 0, 1, 0, 100, BigRational(1));
  CHECK(r.modulus == 12);
  CHECK(r.residue == 1);
  // I in (4/3 - 50/3, 4/3 + 50/3) = (-46/3, 18)
  CHECK(r.lo == -15);
  CHECK(r.hi == 17);
  CHECK(r.count() == 3);  // -11, 1, 13
  CHECK_THROWS(e_range(1, 0, 0, 0, 100, BigRational(1)));
  // bounded by the interval length over the modulus
  for (int i = 0; i < 2000; ++i) {
    std::int64_t a = uni(-5, 5);
    if (a == 0) a = 2;
    const std::int64_t b = uni(-9, 9), c = uni(-9, 9), d = uni(-9, 9);
    const std::int64_t H = 8 * a * c - 3 * b * b;
    if (H == 0) continue;
    const std::int64_t X = uni(10, 5000);
    const IRange e = e_range(a, b, c, d, X, BigRational(1));
    const double width = 2.0 * (4.0 / 3.0) * std::fabs(static_cast<double>(a) / static_cast<double>(H)) * static_cast<double>(X);
    CHECK(static_cast<double>(e.count()) <= std::ceil(width / (12.0 * std::fabs(static_cast<double>(a)))) + 1);
  }
}

TEST_CASE("lattice Fourier coefficient") {
  CHECK(lattice_fourier_magnitude(1, 0, 0, 12, 0) == BigRational(1, 96));
  CHECK(lattice_fourier_magnitude(1, 0, 0, 1, 0) == 0);
  CHECK(lattice_fourier_magnitude(1, 1, 0, 3, 1) == BigRational(1, 96));
  CHECK(lattice_fourier_sum(1, 0, 0, 12, 0) == doctest::Approx(12.0));
  CHECK(lattice_fourier_sum(1, 0, 0, 1, 0) < 1e-9);
  CHECK_THROWS(lattice_fourier_magnitude(0, 1, 1, 1, 1));
  for (std::int64_t a = -3; a <= 3; ++a) {
    if (a == 0) continue;
    for (std::int64_t b = -3; b <= 3; ++b)
      for (std::int64_t al = -15; al <= 15; ++al)
        for (std::int64_t be = -15; be <= 15; ++be) {
          const double n = lattice_fourier_sum(a, b, 2, al, be) / (12.0 * static_cast<double>(a < 0 ? -a : a));
          const double closed = static_cast<double>(lattice_fourier_magnitude(a, b, 2, al, be) * 96 * a * a * (a < 0 ? -a : a));
          CHECK(std::fabs(n - closed) < 1e-9);
        }
  }
}
