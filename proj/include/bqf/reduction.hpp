#pragma once

// GL2(Z) orbits: canonical representatives, stabilizers, class lists.

#include "bqf/quartic.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace bqf {

/// Orbit key: (|f|_1, |a|, |b|, |c|, |d|, |e|, a, b, c, d, e), compared lexicographically.
template <class T> bool key_less(const BasicQuartic<T>& f, const BasicQuartic<T>& g);

/// For a form with a rational linear factor: over its rational roots, the
/// least image y h(x, y) with b > 0 and 0 <= c < 3b. An exact orbit invariant.
std::optional<QuarticForm> cusp_normal_form(const QuarticForm& f);

/// Canonical orbit representative: key-minimal form found by greedy descent
/// followed by a norm-pruned breadth-first search over S, N, T+-. Forms with
/// a rational linear factor start from their cusp normal form.
/// Throws on degenerate input.
QuarticForm canonicalize(const QuarticForm& f);
Quartic64 canonicalize(const Quartic64& f);
/// Same search without the degeneracy check (hot loops that already know disc != 0).
Quartic64 canonicalize_unchecked(const Quartic64& f);

/// Cheap necessary condition for f == canonicalize(f): no single generator
/// step lowers the key.
bool locally_minimal(const Quartic64& f);

bool are_equivalent(const QuarticForm& f, const QuarticForm& g);

/// Order of the stabilizer of f in PGL2(Z).
int aut_z(const QuarticForm& f);
/// Stabilizer search over unimodular matrices with entries in [-radius, radius].
int aut_z_radius(const QuarticForm& f, int radius);

struct ClassRecord {
  QuarticForm rep;
  InvariantPair iv;
  RootClass rootClass = RootClass::degenerate;
  int autZ = 1;
  bool irreducible = false;
  bool generic = false;
  bool linearFactor = false;
};

ClassRecord make_class_record(const QuarticForm& rep);

/// Every GL2(Z)-class with invariants (I, J), sorted by canonical rep.
/// Classes with a rational linear factor are listed exactly from their
/// a = 0 representatives; for the rest the search box is doubled until no
/// new class appears.
std::vector<ClassRecord> classes_with_invariants(const BigInt& I, const BigInt& J);
/// Canonical reps found with |a|, |c| <= box (b reduced to [0, 2|a|]).
std::vector<Quartic64> classes_in_box(std::int64_t I, std::int64_t J, std::int64_t box);

/// Irreducible resolvent x^3 - 3Ix + J certifies a trivial PGL2(Q)-stabilizer.
bool is_generic(const QuarticForm& f);

/// (I mod 27, J mod 27) attained by some integral form.
bool is_eligible(const BigInt& I, const BigInt& J);
bool is_eligible(std::int64_t I, std::int64_t J);

const char* eligibility_table_version();
const char* eligibility_generator_hash();
/// Row I of the shipped residue table, as a 27-bit mask over J.
std::uint32_t eligibility_row(int I_mod27);

}  // namespace bqf
