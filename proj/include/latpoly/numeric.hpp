#pragma once

#include <gmpxx.h>

#include <string>

namespace latpoly {

// All scalar quantities in the library are exact. Integers and rationals are
// arbitrary precision; nothing in the library ever rounds.
using Int = mpz_class;
using Rat = mpq_class;

Int rat_floor(const Rat& r);
Int rat_ceil(const Rat& r);

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

// "p/q", with "/q" omitted when q == 1.
std::string rat_str(const Rat& r);
std::string int_str(const Int& n);

// Accepts "p" and "p/q". Throws std::invalid_argument on malformed input or
// zero denominator.
Rat parse_rat(const std::string& s);

Rat rat_min(const Rat& a, const Rat& b);
Rat rat_max(const Rat& a, const Rat& b);

// Throws if n does not fit in a long long.
long long to_ll(const Int& n);

}  // namespace latpoly
