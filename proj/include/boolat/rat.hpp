#ifndef BOOLAT_RAT_HPP
#define BOOLAT_RAT_HPP

#include <gmpxx.h>

#include <cassert>
#include <string>

#include "boolat/error.hpp"

namespace boolat::polycore {

// Exact rationals and arbitrary-precision integers.  GMP keeps mpq values
// canonical (lowest terms, positive denominator) through arithmetic; the
// debug check below re-verifies that invariant at normalization points.
using Rat = mpq_class;
using Int = mpz_class;

inline void debug_check_reduced(const Rat& q) {
#ifndef NDEBUG
    assert(sgn(q.get_den()) > 0);
    Int g;
    mpz_gcd(g.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    assert(g == 1);
#else
    (void)q;
#endif
}

// Parses "n" or "n/d" with optional sign.  Throws ParseError on anything else.
Rat rat_from_string(const std::string& s);

// "n" when the denominator is 1, else "n/d".
std::string rat_to_string(const Rat& q);

bool is_prime_u64(unsigned long long n);

} // namespace boolat::polycore

#endif
