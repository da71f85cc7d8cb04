#pragma once

// Local solubility of z^2 = f(x, y).

#include "bqf/quartic.hpp"

#include <cstdint>
#include <vector>

namespace bqf {

/// f takes a nonnegative value somewhere on R^2 \ {0}.
bool real_soluble(const QuarticForm& f);

/// z^2 = f(x, y) has a point over Q_p. Decided by splitting P^1(Z_p) into
/// discs: a disc is soluble when its center gives a square, insoluble when
/// every value on it lies in the square class of the (nonsquare) center
/// value, and is split into p subdiscs otherwise, one level at a time.
bool qp_soluble(const QuarticForm& f, std::uint64_t p);

/// {p : p | 2 disc(f)} together with every prime below 32.
std::vector<std::uint64_t> local_test_primes(const QuarticForm& f);

/// Real solubility and Q_p-solubility at every test prime. Requires disc(f) != 0.
bool locally_soluble(const QuarticForm& f);

}  // namespace bqf
