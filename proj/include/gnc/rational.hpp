#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace gnc {

/* All arithmetic in the library is exact.  GMP supplies the scalar types;
   everything built on top of them (elimination, cohomology, counting) lives
   in this repository. */
using Rat = mpq_class;
using Int = mpz_class;

/* Canonicalized p/q.  The raw two-argument mpq_class constructor does not
   reduce, so route all literal fractions through here. */
Rat rat(long num, long den = 1);

/* Accepts "p", "-p", "p/q".  Rejects anything else, including q == 0. */
std::optional<Rat> parse_rational(const std::string& text);

std::string rat_str(const Rat& r);

}  // namespace gnc
