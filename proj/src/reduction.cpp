#include "bqf/reduction.hpp"

#include "bqf/number_theory.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <optional>
#include <set>
#include <unordered_set>

namespace bqf {

namespace detail {
#include "bqf/detail/eligibility_mod27.inc"
}

template <class T> bool key_less(const BasicQuartic<T>& f, const BasicQuartic<T>& g) {
  const T nf = norm1(f), ng = norm1(g);
  if (nf != ng) return nf < ng;
  const auto cf = f.coeffs(), cg = g.coeffs();
  for (int i = 0; i < 5; ++i) {
    const T x = abs_val(cf[i]), y = abs_val(cg[i]);
    if (x != y) return x < y;
  }
  return cf < cg;
}

template bool key_less(const Quartic64&, const Quartic64&);
template bool key_less(const QuarticForm&, const QuarticForm&);

namespace {

constexpr std::int64_t kSmall = std::int64_t{1} << 40;
constexpr std::size_t kMaxBall = 2000000;

struct Hash64 {
  std::size_t operator()(const Quartic64& f) const {
    std::uint64_t h = 1469598103934665603ULL;
    for (auto c : f.coeffs()) {
      h ^= static_cast<std::uint64_t>(c);
      h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h ^ (h >> 29));
  }
};

bool fits(const BasicQuartic<int128>& f) {
  constexpr int128 lim = kSmall;
  for (auto c : f.coeffs())
    if (c > lim || c < -lim) return false;
  return true;
}

// x -> x + k y via 128-bit intermediates; empty if the result leaves the small range.
std::optional<Quartic64> translate_x(const Quartic64& f, std::int64_t k) {
  if (k > 1000000 || k < -1000000) return std::nullopt;
  const auto w = act_translate(convert<int128>(f), static_cast<int128>(k));
  if (!fits(w)) return std::nullopt;
  return convert<std::int64_t>(w);
}

std::optional<QuarticForm> translate_x(const QuarticForm& f, const BigInt& k) { return act_translate(f, k); }

std::optional<Quartic64> translate_y(const Quartic64& f, std::int64_t k) {
  auto t = translate_x(act_swap(f), k);
  if (!t) return std::nullopt;
  return act_swap(*t);
}

std::optional<QuarticForm> translate_y(const QuarticForm& f, const BigInt& k) { return act_swap(act_translate(act_swap(f), k)); }

std::int64_t nearest_shift(std::int64_t lead, std::int64_t next) {
  // round(-next / (4 lead)), ties upward; same rule as the exact overload.
  if (lead == 0) return 0;
  int128 den = 4 * static_cast<int128>(lead), num = -static_cast<int128>(next);
  if (den < 0) {
    den = -den;
    num = -num;
  }
  const int128 r = floor_div<int128>(2 * num + den, 2 * den);
  if (r > 1000000 || r < -1000000) return 0;
  return static_cast<std::int64_t>(r);
}

BigInt nearest_shift(const BigInt& lead, const BigInt& next) {
  if (lead == 0) return 0;
  BigInt den = 4 * lead, num = -next;
  if (den < 0) {
    den = -den;
    num = -num;
  }
  const BigInt r = floor_div(BigInt(2 * num + den), BigInt(2 * den));
  if (r > 1000000 || r < -1000000) return 0;
  return r;
}

template <class T> void consider(std::optional<BasicQuartic<T>> cand, BasicQuartic<T>& best) {
  if (cand && key_less(*cand, best)) best = *cand;
}

template <class T> BasicQuartic<T> greedy_descent(BasicQuartic<T> f) {
  for (;;) {
    BasicQuartic<T> best = f;
    consider<T>(act_swap(f), best);
    consider<T>(act_negate(f), best);
    auto kx = nearest_shift(f.a, f.b);
    auto ky = nearest_shift(f.e, f.d);
    for (int off = -1; off <= 1; ++off) {
      if (kx + off != 0) consider(translate_x(f, decltype(kx)(kx + off)), best);
      if (ky + off != 0) consider(translate_y(f, decltype(ky)(ky + off)), best);
    }
    for (int s : {-1, 1}) {
      consider(translate_x(f, decltype(kx)(s)), best);
      consider(translate_y(f, decltype(ky)(s)), best);
    }
    if (!key_less(best, f)) return f;
    f = best;
  }
}

template <class T> std::array<std::optional<BasicQuartic<T>>, 6> neighbors(const BasicQuartic<T>& f) {
  using K = decltype(nearest_shift(f.a, f.b));
  return {act_swap(f), act_negate(f), translate_x(f, K(1)), translate_x(f, K(-1)), translate_y(f, K(1)),
          translate_y(f, K(-1))};
}

// Forms up to twice the best norm so far are explored; a strict "<= best"
// bound strands the search in local minima for a few orbits in 10^3.
template <class T> T ball_limit(const T& best_norm) { return T(2 * best_norm); }

template <class Set, class T> BasicQuartic<T> ball_search(const BasicQuartic<T>& start) {
  BasicQuartic<T> best = start;
  Set seen;
  seen.insert(start);
  std::deque<BasicQuartic<T>> queue{start};
  while (!queue.empty()) {
    const BasicQuartic<T> h = queue.front();
    queue.pop_front();
    for (auto& nb : neighbors(h)) {
      if (!nb || norm1(*nb) > ball_limit(norm1(best))) continue;
      if (!seen.insert(*nb).second) continue;
      if (seen.size() > kMaxBall) throw std::runtime_error("canonicalize: search ball too large");
      if (key_less(*nb, best)) best = *nb;
      queue.push_back(*nb);
    }
  }
  return best;
}

bool small_form(const QuarticForm& f) {
  for (const auto& c : f.coeffs())
    if (abs_val(c) >= kSmall) return false;
  return true;
}

void require_nondegenerate(const QuarticForm& f) {
  if (disc_of(inv_I(f), inv_J(f)) == 0) throw std::invalid_argument("canonicalize: degenerate form");
}

// p u + q v = g.
BigInt ext_gcd(const BigInt& p, const BigInt& q, BigInt& u, BigInt& v) {
  BigInt r0 = p, r1 = q, u0 = 1, u1 = 0, v0 = 0, v1 = 1;
  while (r1 != 0) {
    const BigInt k = r0 / r1;
    std::tie(r0, r1) = std::make_pair(r1, BigInt(r0 - k * r1));
    std::tie(u0, u1) = std::make_pair(u1, BigInt(u0 - k * u1));
    std::tie(v0, v1) = std::make_pair(v1, BigInt(v0 - k * v1));
  }
  if (r0 < 0) {
    r0 = -r0;
    u0 = -u0;
    v0 = -v0;
  }
  u = u0;
  v = v0;
  return r0;
}

}  // namespace

std::optional<QuarticForm> cusp_normal_form(const QuarticForm& f) {
  std::optional<QuarticForm> best;
  for (const auto& [p, q] : rational_roots(f)) {
    BigInt u, v;
    ext_gcd(p, q, u, v);
    // Columns (p, q) and (-v, u): determinant one and (1:0) maps to the root.
    QuarticForm g = substitute(f, p, q, BigInt(-v), u);
    if (g.b < 0) g = act_negate(g);
    const BigInt three_b = 3 * g.b;
    g = act_translate(g, BigInt(-floor_div(g.c, three_b)));
    if (!best || g < *best) best = g;
  }
  return best;
}

Quartic64 canonicalize_unchecked(const Quartic64& f) {
  if (norm1(f) >= kSmall) throw std::overflow_error("canonicalize: coefficients too large for the word path");
  return ball_search<std::unordered_set<Quartic64, Hash64>>(greedy_descent(f));
}

Quartic64 canonicalize(const Quartic64& f) { return narrow(canonicalize(convert<BigInt>(f))); }

QuarticForm canonicalize(const QuarticForm& f) {
  require_nondegenerate(f);
  const QuarticForm g = greedy_descent(cusp_normal_form(f).value_or(f));
  if (small_form(g)) return convert<BigInt>(canonicalize_unchecked(narrow(g)));
  return ball_search<std::set<QuarticForm>>(g);
}

bool locally_minimal(const Quartic64& f) {
  for (auto& nb : neighbors(f))
    if (nb && key_less(*nb, f)) return false;
  return true;
}

bool are_equivalent(const QuarticForm& f, const QuarticForm& g) {
  if (inv_I(f) != inv_I(g) || inv_J(f) != inv_J(g)) return false;
  return canonicalize(f) == canonicalize(g);
}

int aut_z_radius(const QuarticForm& form, int radius) {
  const Quartic64 f = narrow(form);
  const std::int64_t a = f.a, e = f.e;
  // act(g, f) = f forces f(p, q) = a and f(r, s) = e.
  std::vector<std::pair<std::int64_t, std::int64_t>> first, second;
  for (std::int64_t x = -radius; x <= radius; ++x)
    for (std::int64_t y = -radius; y <= radius; ++y) {
      const int128 v = eval(f, static_cast<int128>(x), static_cast<int128>(y));
      if (v == a) first.emplace_back(x, y);
      if (v == e) second.emplace_back(x, y);
    }
  int count = 0;
  for (auto [p, q] : first)
    for (auto [r, s] : second) {
      const std::int64_t det = p * s - q * r;
      if (det != 1 && det != -1) continue;
      if (substitute(convert<int128>(f), int128(p), int128(q), int128(r), int128(s)) == convert<int128>(f)) ++count;
    }
  // g and -g act identically.
  return count / 2;
}

int aut_z(const QuarticForm& f) {
  const QuarticForm rep = canonicalize(f);
  int radius = 4;
  int order = aut_z_radius(rep, radius);
  for (;;) {
    const int wider = aut_z_radius(rep, 2 * radius);
    if (wider == order) return order;
    if (radius >= 64) throw std::runtime_error("aut_z: stabilizer search did not stabilize");
    order = wider;
    radius *= 2;
  }
}

ClassRecord make_class_record(const QuarticForm& rep) {
  ClassRecord rec;
  rec.rep = rep;
  rec.iv = invariants(rep);
  rec.rootClass = rec.iv.rootClass;
  rec.autZ = aut_z(rep);
  rec.linearFactor = has_rational_linear_factor(rep);
  rec.irreducible = is_irreducible(rep);
  rec.generic = rec.irreducible && is_generic(rep);
  return rec;
}

namespace {

void collect_box(std::int64_t I, std::int64_t J, std::int64_t box, std::int64_t inner, std::set<Quartic64>& out) {
  const int128 I_ = I, J_ = J;
  for (std::int64_t a = -box; a <= box; ++a) {
    if (a == 0) continue;
    const int128 A = a;
    const int128 modR = 8 * A * A;
    const std::int64_t absA = a < 0 ? -a : a;
    for (std::int64_t b = 0; b <= 2 * absA; ++b) {
      const int128 B = b;
      for (std::int64_t c = -box; c <= box; ++c) {
        if (absA <= inner && (c < 0 ? -c : c) <= inner) continue;
        const int128 H = 8 * A * c - 3 * B * B;
        // -27 R^2 = H^3 - 48 a^2 H I + 64 a^3 J
        const int128 q = -(H * H * H - 48 * A * A * H * I_ + 64 * A * A * A * J_);
        if (q < 0 || q % 27 != 0) continue;
        int128 R;
        if (!is_square<int128>(q / 27, R)) continue;
        for (int128 r : {R, -R}) {
          const int128 num = r - B * B * B + 4 * A * B * c;
          if (num % modR != 0) continue;
          const int128 d = num / modR;
          const int128 enm = I_ + 3 * B * d - static_cast<int128>(c) * c;
          if (enm % (12 * A) != 0) continue;
          const int128 e = enm / (12 * A);
          const Quartic64 f{a, b, c, static_cast<std::int64_t>(d), static_cast<std::int64_t>(e)};
          if (has_rational_linear_factor(convert<BigInt>(f))) continue;  // listed by collect_linear
          out.insert(canonicalize_unchecked(f));
          if (R == 0) break;
        }
      }
    }
  }
}

// Classes with a rational linear factor have a representative y h(x, y) with
// h(1, 0) = b > 0 and c reduced mod 3b; b^2 divides disc = b^2 disc(h).
void collect_linear(std::int64_t I, std::int64_t J, std::set<Quartic64>& out) {
  const int128 I_ = I, J_ = J;
  const int128 num = 4 * I_ * I_ * I_ - J_ * J_;
  if (num % 27 != 0) return;  // not the invariants of any integral form
  const int128 disc = num / 27;
  for (std::int64_t b : divisors(to_i64(disc < 0 ? -disc : disc))) {
    const int128 B = b;
    if (disc % (B * B) != 0) continue;
    for (std::int64_t c = 0; c < 3 * b; ++c) {
      const int128 C = c;
      const int128 dn = C * C - I_;
      if (dn % (3 * B) != 0) continue;
      const int128 d = dn / (3 * B);
      const int128 en = 9 * B * C * d - 2 * C * C * C - J_;
      if (en % (27 * B * B) != 0) continue;
      const int128 e = en / (27 * B * B);
      out.insert(narrow(canonicalize(QuarticForm{0, b, c, BigInt(d), BigInt(e)})));
    }
  }
}

}  // namespace

std::vector<Quartic64> classes_in_box(std::int64_t I, std::int64_t J, std::int64_t box) {
  std::set<Quartic64> reps;
  collect_box(I, J, box, 0, reps);
  return {reps.begin(), reps.end()};
}

std::vector<ClassRecord> classes_with_invariants(const BigInt& I_, const BigInt& J_) {
  if (I_ == 0 && J_ == 0) throw std::invalid_argument("classes_with_invariants: (I, J) = (0, 0)");
  if (disc_of(I_, J_) == 0) throw std::invalid_argument("classes_with_invariants: degenerate invariants");
  const std::int64_t I = to_i64(I_), J = to_i64(J_);
  const double scale = std::max(std::sqrt(std::fabs(static_cast<double>(I))), std::cbrt(std::fabs(static_cast<double>(J))));
  std::int64_t box = std::max<std::int64_t>(4, static_cast<std::int64_t>(std::ceil(2.0 * scale)));
  std::set<Quartic64> reps;
  collect_linear(I, J, reps);
  collect_box(I, J, box, 0, reps);
  for (;;) {
    const std::size_t before = reps.size();
    collect_box(I, J, 2 * box, box, reps);
    box *= 2;
    if (reps.size() == before) break;
    if (box > (std::int64_t{1} << 16)) throw std::runtime_error("classes_with_invariants: box doubling did not stabilize");
  }
  std::vector<ClassRecord> out;
  for (const auto& r : reps) out.push_back(make_class_record(convert<BigInt>(r)));
  std::sort(out.begin(), out.end(), [](const ClassRecord& x, const ClassRecord& y) { return key_less(x.rep, y.rep); });
  return out;
}

bool is_generic(const QuarticForm& f) {
  if (!is_irreducible(f)) throw std::invalid_argument("is_generic: reducible form");
  const BigInt I = inv_I(f), J = inv_J(f);
  if (disc_of(I, J) == 0) throw std::invalid_argument("is_generic: degenerate form");
  if (J == 0) return false;  // x divides the resolvent
  for (std::int64_t r : divisors(to_i64(J)))
    for (const BigInt& x : {BigInt(r), BigInt(-r)})
      if (x * x * x - 3 * I * x + J == 0) return false;
  return true;
}

bool is_eligible(std::int64_t I, std::int64_t J) {
  const int i = static_cast<int>(mod_pos<std::int64_t>(I, 27));
  const int j = static_cast<int>(mod_pos<std::int64_t>(J, 27));
  return (detail::kEligibleMod27[i] >> j) & 1u;
}

bool is_eligible(const BigInt& I, const BigInt& J) {
  const BigInt m = 27;
  BigInt i = I % m, j = J % m;
  if (i < 0) i += m;
  if (j < 0) j += m;
  return is_eligible(static_cast<std::int64_t>(i), static_cast<std::int64_t>(j));
}

const char* eligibility_table_version() { return detail::kEligibilityVersion; }
const char* eligibility_generator_hash() { return detail::kEligibilityGeneratorSha256; }
std::uint32_t eligibility_row(int I_mod27) { return detail::kEligibleMod27[I_mod27]; }

}  // namespace bqf
