#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bqf/quartic.hpp"

#include <random>

using namespace bqf;

namespace {

QuarticForm Q(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d, std::int64_t e) { return {a, b, c, d, e}; }

std::mt19937_64 rng(20240611);
std::int64_t uni(std::int64_t lo, std::int64_t hi) { return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng); }
QuarticForm random_form(std::int64_t m) { return Q(uni(-m, m), uni(-m, m), uni(-m, m), uni(-m, m), uni(-m, m)); }

UnimodularMap random_map() {
  for (;;) {
    const UnimodularMap g{uni(-3, 3), uni(-3, 3), uni(-3, 3), uni(-3, 3)};
    if (g.det() == 1 || g.det() == -1) return g;
  }
}

}  // namespace

TEST_CASE("invariants of small forms") {
  auto iv = invariants(Q(1, 0, 0, 0, 1));
  CHECK(iv.I == 12);
  CHECK(iv.J == 0);
  CHECK(iv.disc == 256);
  CHECK(iv.rootClass == RootClass::i2plus);

  iv = invariants(Q(1, 0, 1, 0, 1));
  CHECK(iv.I == 13);
  CHECK(iv.J == 70);
  CHECK(iv.disc == 144);

  iv = invariants(Q(1, 4, 6, 4, 2));
  CHECK(iv.I == 12);
  CHECK(iv.J == 0);

  CHECK(invariants(Q(1, 2, 1, 0, 0)).rootClass == RootClass::degenerate);
}

TEST_CASE("semi-invariants") {
  auto s = semi_invariants(Q(1, 0, 0, 0, 1));
  CHECK(s.H == 0);
  CHECK(s.R == 0);
  CHECK(s.S == -64);
  s = semi_invariants(Q(1, 0, 1, 0, 1));
  CHECK(s.H == 8);
  CHECK(s.R == 0);
  CHECK(s.S == -48);
  s = semi_invariants(Q(1, -1, 1, 0, -1));
  CHECK(s.H == 5);
  CHECK(s.R == 3);
  CHECK(s.S == 67);
  CHECK(invariants(Q(1, -1, 1, 0, -1)).I == -11);
}

TEST_CASE("syzygy residual vanishes") {
  CHECK(syzygy_residual(Q(1, 0, 1, 0, 1)) == 0);
  CHECK(syzygy_residual(Q(1, -1, 1, 0, -1)) == 0);
  for (int i = 0; i < 2000; ++i) CHECK(syzygy_residual(random_form(1000000)) == 0);
}

TEST_CASE("action") {
  CHECK(act(UnimodularMap{1, 0, 1, 1}, Q(1, 0, 0, 0, 1)) == Q(1, 4, 6, 4, 2));
  CHECK(act(UnimodularMap::identity(), Q(3, -1, 4, 1, -5)) == Q(3, -1, 4, 1, -5));
  CHECK(act(UnimodularMap::swap(), Q(3, -1, 4, 1, -5)) == Q(-5, 1, 4, -1, 3));
  CHECK_THROWS_AS(act(UnimodularMap{2, 0, 0, 1}, Q(1, 0, 0, 0, 1)), std::invalid_argument);
  CHECK_THROWS(UnimodularMap::checked(1, 1, 1, 1));
}

TEST_CASE("action is a left action and preserves invariants") {
  for (int i = 0; i < 2000; ++i) {
    const auto f = random_form(50);
    const auto g = random_map(), h = random_map();
    CHECK(act(g, act(h, f)) == act(g * h, f));
    const auto iv = invariants(f), jv = invariants(act(g, f));
    CHECK(iv.I == jv.I);
    CHECK(iv.J == jv.J);
  }
}

TEST_CASE("real root classes") {
  CHECK(real_root_class(Q(1, 0, 0, 0, 1)) == RootClass::i2plus);
  CHECK(real_root_class(Q(-1, 0, 0, 0, -1)) == RootClass::i2minus);
  CHECK(real_root_class(Q(1, 0, -5, 0, 4)) == RootClass::i0);
  CHECK(real_root_class(Q(1, -1, 1, 0, -1)) == RootClass::i1);
  CHECK(invariants(Q(1, -1, 1, 0, -1)).disc == -279);
  CHECK(real_root_class(Q(0, 1, 0, 0, 1)) == RootClass::i1);  // y (x^3 + y^3)
  CHECK_THROWS(real_root_class(Q(1, 2, 1, 0, 0)));
}

TEST_CASE("root class agrees with the discriminant sign") {
  for (int i = 0; i < 2000; ++i) {
    const auto f = random_form(30);
    const auto iv = invariants(f);
    if (iv.disc == 0) continue;
    CHECK((iv.rootClass == RootClass::i1) == (iv.disc < 0));
  }
}

TEST_CASE("discriminant normalization is fixed") {
  // The constant is read off x^4 + y^4 and then held fixed.
  const auto base = invariants(Q(1, 0, 0, 0, 1));
  const BigRational k = BigRational(poly_discriminant(Q(1, 0, 0, 0, 1))) / base.disc;
  CHECK(k == 1);
  for (int i = 0; i < 2000; ++i) {
    const auto f = random_form(40);
    CHECK(BigRational(poly_discriminant(f)) == k * invariants(f).disc);
  }
}

TEST_CASE("irreducibility") {
  CHECK_FALSE(is_irreducible(Q(1, 0, 1, 0, 1)));
  CHECK_FALSE(is_irreducible(Q(1, -1, 1, 0, -1)));
  CHECK(is_irreducible(Q(1, 0, 0, 0, 2)));
  CHECK_FALSE(is_irreducible(Q(0, 1, 0, 0, 1)));
  CHECK(has_rational_linear_factor(Q(1, -1, 1, 0, -1)));
  CHECK_FALSE(has_rational_linear_factor(Q(1, 0, 1, 0, 1)));
  CHECK_FALSE(is_irreducible(Q(4, 0, 0, 0, 1)));  // (2x^2 + 2xy + y^2)(2x^2 - 2xy + y^2)
}

TEST_CASE("cubic resolvent") {
  CHECK(cubic_resolvent(BigInt(12), BigInt(0)) == MonicCubic{0, -36, 0});
  CHECK(cubic_resolvent(BigInt(1), BigInt(1)) == MonicCubic{0, -3, 1});
  CHECK(cubic_resolvent(BigInt(-11), BigInt(-47)) == MonicCubic{0, 33, -47});
}

TEST_CASE("unique root and the single-root identity") {
  const auto u = unique_root(Q(1, -1, 1, 0, -1));
  REQUIRE(u);
  CHECK(u->uPrime == 4);
  CHECK(u->fourA == 4);
  CHECK(u->u == -3);
  CHECK(u->v == 7);
  CHECK(2 * u->v == u->u * u->u + semi_invariants(Q(1, -1, 1, 0, -1)).H);
  CHECK(single_root_identity_residual(Q(1, -1, 1, 0, -1)) == 0);
  CHECK_FALSE(unique_root(Q(1, 0, 0, 0, 1)));
  CHECK_FALSE(unique_root(Q(1, 0, -5, 0, 4)));
  CHECK_THROWS(unique_root(Q(0, 1, 0, 0, 1)));
  CHECK_THROWS(single_root_identity_residual(Q(1, 0, 0, 0, 1)));
}

TEST_CASE("single-root identity on constructed forms") {
  int tested = 0;
  while (tested < 300) {
    // (x - k y)(p x^3 + q x^2 y + r x y^2 + s y^3)
    const std::int64_t k = uni(-5, 5), p = uni(1, 6), q = uni(-9, 9), r = uni(-9, 9), s = uni(-9, 9);
    const QuarticForm f = Q(p, q - k * p, r - k * q, s - k * r, -k * s);
    const auto iv = invariants(f);
    if (iv.disc == 0 || semi_invariants(f).R == 0) continue;
    const auto roots = rational_roots(f);
    if (roots.size() != 1) continue;
    ++tested;
    CHECK(single_root_identity_residual(f) == 0);
  }
}

TEST_CASE("text round trip") {
  const auto f = Q(3, -1, 4, 1, -5);
  CHECK(parse_quartic(to_string(f)) == f);
  CHECK_THROWS(parse_quartic("(1,2,3)"));
  CHECK(parse_root_class(to_string(RootClass::i2minus)) == RootClass::i2minus);
}
