#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bqf/reduction.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

using namespace bqf;

namespace {

std::mt19937_64 rng(4242);
std::int64_t uni(std::int64_t lo, std::int64_t hi) { return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng); }

QuarticForm random_nondegenerate(std::int64_t m) {
  for (;;) {
    const QuarticForm f{uni(-m, m), uni(-m, m), uni(-m, m), uni(-m, m), uni(-m, m)};
    if (invariants(f).disc != 0) return f;
  }
}

UnimodularMap random_map() {
  for (;;) {
    const UnimodularMap g{uni(-3, 3), uni(-3, 3), uni(-3, 3), uni(-3, 3)};
    if (g.det() == 1 || g.det() == -1) return g;
  }
}

std::size_t count_irreducible(const std::vector<ClassRecord>& v) {
  return static_cast<std::size_t>(std::count_if(v.begin(), v.end(), [](const ClassRecord& r) { return r.irreducible; }));
}

}  // namespace

TEST_CASE("canonical representatives") {
  CHECK(canonicalize(QuarticForm{1, 4, 6, 4, 2}) == canonicalize(QuarticForm{1, 0, 0, 0, 1}));
  CHECK_THROWS(canonicalize(QuarticForm{1, 2, 1, 0, 0}));
  for (int i = 0; i < 1000; ++i) {
    const QuarticForm f = random_nondegenerate(30);
    const QuarticForm c = canonicalize(f);
    CHECK(canonicalize(c) == c);
    CHECK(canonicalize(act(random_map(), f)) == c);
    CHECK(invariants(c).I == invariants(f).I);
    CHECK(invariants(c).J == invariants(f).J);
  }
}

TEST_CASE("canonicalize on forms with a linear factor") {
  for (int i = 0; i < 300; ++i) {
    const QuarticForm f{0, uni(1, 9), uni(-30, 30), uni(-30, 30), uni(-30, 30)};
    if (invariants(f).disc == 0) continue;
    const auto cusp = cusp_normal_form(f);
    REQUIRE(cusp);
    CHECK(cusp->a == 0);
    CHECK(cusp->b > 0);
    CHECK(cusp->c >= 0);
    CHECK(cusp->c < 3 * cusp->b);
    const QuarticForm g = act(random_map(), f);
    CHECK(cusp_normal_form(g) == cusp);
    CHECK(canonicalize(g) == canonicalize(f));
  }
  CHECK_FALSE(cusp_normal_form(QuarticForm{1, 0, 0, 0, 2}));
}

TEST_CASE("equivalence") {
  CHECK(are_equivalent(QuarticForm{1, 0, 0, 0, 1}, QuarticForm{1, 4, 6, 4, 2}));
  CHECK_FALSE(are_equivalent(QuarticForm{1, 0, 1, 0, 1}, QuarticForm{1, 0, -1, 0, 1}));
  CHECK(invariants(QuarticForm{1, 0, -1, 0, 1}).J == -70);
}

TEST_CASE("stabilizers") {
  const int x4y4 = aut_z(QuarticForm{1, 0, 0, 0, 1});
  CHECK(x4y4 >= 2);
  CHECK(24 % x4y4 == 0);
  // x^4 + y^4 is fixed by x <-> y, x -> -x and their products: the dihedral group of order 8 mod +-1
  CHECK(x4y4 == 4);
  int generic = 0;
  for (int i = 0; i < 100; ++i) {
    const QuarticForm f = random_nondegenerate(20);
    const int n = aut_z(f);
    CHECK(24 % n == 0);
    CHECK(aut_z(act(random_map(), f)) == n);
    generic += n == 1;
  }
  CHECK(generic > 80);
}

TEST_CASE("class lists") {
  const auto c13 = classes_with_invariants(13, 70);
  const QuarticForm rep = canonicalize(QuarticForm{1, 0, 1, 0, 1});
  CHECK(std::any_of(c13.begin(), c13.end(), [&](const ClassRecord& r) { return r.rep == rep; }));
  for (const auto& r : c13) {
    CHECK(r.iv.I == 13);
    CHECK(r.iv.J == 70);
    CHECK(canonicalize(r.rep) == r.rep);
  }
  const auto c12 = classes_with_invariants(12, 0);
  CHECK(!c12.empty());
  CHECK_THROWS(classes_with_invariants(0, 0));
  CHECK_THROWS(classes_with_invariants(1, 2));  // 4 I^3 = J^2
}

TEST_CASE("class lists are stable under box doubling") {
  for (auto [I, J] : std::vector<std::pair<int, int>>{{13, 70}, {12, 0}, {-11, -47}, {40, 100}, {25, -54}}) {
    std::set<Quartic64> base, wide;
    const auto recs = classes_with_invariants(I, J);
    for (const auto& r : recs)
      if (!r.linearFactor) base.insert(narrow(r.rep));
    const double scale = std::max(std::sqrt(std::fabs(double(I))), std::cbrt(std::fabs(double(J))));
    const auto box = std::max<std::int64_t>(4, static_cast<std::int64_t>(std::ceil(2.0 * scale)));
    for (const auto& f : classes_in_box(I, J, 4 * box)) wide.insert(f);
    CHECK(base == wide);
  }
}

TEST_CASE("genericity certificate") {
  CHECK_FALSE(is_generic(QuarticForm{1, 0, 0, 0, 2}));
  CHECK(invariants(QuarticForm{1, 0, 0, 2, 2}).I == 24);
  CHECK(invariants(QuarticForm{1, 0, 0, 2, 2}).J == -108);
  CHECK(is_generic(QuarticForm{1, 0, 0, 2, 2}));
  CHECK_THROWS(is_generic(QuarticForm{1, 0, 1, 0, 1}));
}

TEST_CASE("eligibility table") {
  CHECK(is_eligible(12, 0));
  CHECK(is_eligible(13, 70));
  CHECK(std::string(eligibility_table_version()) == "1");
  CHECK(std::string(eligibility_generator_hash()).size() == 64);
  // every eligible residue pair is attained by a small form
  std::set<std::pair<int, int>> seen;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 27; ++b)
      for (int c = 0; c < 27; ++c)
        for (int d = 0; d < 27; ++d)
          for (int e = 0; e < 3; ++e) {
            const Quartic64 f{a, b, c, d, e};
            seen.insert({static_cast<int>(mod_pos<std::int64_t>(inv_I(f), 27)),
                         static_cast<int>(mod_pos<std::int64_t>(inv_J(f), 27))});
          }
  for (const auto& [i, j] : seen) CHECK(is_eligible(i, j));
}

TEST_CASE("eligibility agrees with class enumeration") {
  // eligible <=> some integral class exists, for nondegenerate (I, J) of height <= 20
  int eligible = 0, mismatches = 0;
  for (int I = -20; I <= 20; ++I)
    for (int J = -20; J <= 20; ++J) {
      if (4 * I * I * I == J * J) continue;
      const bool e = is_eligible(I, J);
      const bool nonempty = !classes_with_invariants(I, J).empty();
      eligible += e;
      mismatches += e != nonempty;
    }
  CHECK(eligible > 0);
  CHECK(mismatches == 0);
}

TEST_CASE("h_IJ grows sublinearly for reducible resolvents") {
  // average class count over pairs whose resolvent x^3 - 3Ix + J has the root 1
  std::vector<double> lx, ly;
  for (std::int64_t X : {100, 1000, 10000}) {
    double total = 0;
    int pairs = 0;
    for (std::int64_t I = X / 3; pairs < 8 && I > 0; I -= 5) {
      const std::int64_t J = 3 * I - 1;  // x = 1 is a root
      if (4 * I * I * I == J * J || !is_eligible(I, J)) continue;
      total += static_cast<double>(count_irreducible(classes_with_invariants(I, J)));
      ++pairs;
    }
    REQUIRE(pairs > 0);
    lx.push_back(std::log(static_cast<double>(X)));
    ly.push_back(std::log(1.0 + total / pairs));
  }
  const double mx = (lx[0] + lx[1] + lx[2]) / 3, my = (ly[0] + ly[1] + ly[2]) / 3;
  double sxy = 0, sxx = 0;
  for (int i = 0; i < 3; ++i) {
    sxy += (lx[i] - mx) * (ly[i] - my);
    sxx += (lx[i] - mx) * (lx[i] - mx);
  }
  const double slope = sxy / sxx;
  MESSAGE("log-log slope of h_IJ: " << slope);
  CHECK(slope < 1.0);
}
