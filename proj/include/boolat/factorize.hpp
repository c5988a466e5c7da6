#ifndef BOOLAT_FACTORIZE_HPP
#define BOOLAT_FACTORIZE_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "boolat/polyfp.hpp"
#include "boolat/polyq.hpp"
#include "boolat/polyz.hpp"

namespace boolat::polycore {

// Irreducible factorization over F_p.  Factors are monic and sorted
// (degree, then coefficients); the product of factor^multiplicity times the
// leading coefficient reproduces f.  Throws ZeroPolynomial.
std::vector<std::pair<PolyFp, unsigned>> factor_mod_p(const PolyFp& f);

// Lifts a factorization of f modulo p to one modulo p^k.  f must reduce to a
// squarefree polynomial mod p whose monic factorization is the given list.
// Returned factors are monic with coefficients in [0, p^k).
// Throws NotSquarefreeModP / NotCoprime on violated preconditions.
std::vector<PolyZ> hensel_lift(const PolyQ& f, const std::vector<PolyFp>& factors, unsigned k);

// Irreducible factorization over Q: monic irreducible factors with
// multiplicities; f = lc * prod factor^mult for a rational constant lc.
// Deterministic (Zassenhaus with the smallest usable odd prime).
std::vector<std::pair<PolyQ, unsigned>> factor_q(const PolyQ& f);

bool is_irreducible_q(const PolyQ& f);

} // namespace boolat::polycore

#endif
