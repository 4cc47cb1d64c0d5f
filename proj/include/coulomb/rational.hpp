#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace coulomb {

// Exact rational scalar. GMP keeps values in canonical form (reduced,
// positive denominator) through arithmetic; the helpers below guard the
// string boundary where that is not automatic.
using Rat = mpq_class;

// Parses "p", "-p", or "p/q" (q > 0 after canonicalization). Returns
// nullopt on malformed input or zero denominator.
std::optional<Rat> rat_from_string(const std::string& text);

// Canonical "p" or "p/q" rendering.
std::string rat_to_string(const Rat& value);

inline bool is_integer(const Rat& value) {
  Rat v = value;
  v.canonicalize();  // two-argument constructions may arrive unreduced
  return v.get_den() == 1;
}

// Reduced fraction from a numerator/denominator pair; the mpq_class
// constructor alone does not canonicalize.
inline Rat make_rat(long num, long den) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

// base^e with negative exponents allowed (base must be nonzero for e < 0).
inline Rat rat_pow(const Rat& base, long e) {
  Rat out(1);
  for (long i = 0; i < (e < 0 ? -e : e); ++i) e > 0 ? out *= base : out /= base;
  return out;
}

}  // namespace coulomb
