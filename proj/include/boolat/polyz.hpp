#ifndef BOOLAT_POLYZ_HPP
#define BOOLAT_POLYZ_HPP

#include <string>
#include <vector>

#include "boolat/polyq.hpp"
#include "boolat/rat.hpp"

namespace boolat::polycore {

// Dense integer polynomial, ascending degree, no trailing zeros.  Workhorse of
// the lifting/recombination stages where everything happens in Z or Z/m.
struct PolyZ {
    std::vector<Int> c;

    PolyZ() = default;
    explicit PolyZ(std::vector<Int> v) : c(std::move(v)) { normalize(); }

    int degree() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    const Int& lc() const;
    Int coeff(size_t k) const { return k < c.size() ? c[k] : Int(0); }
    void normalize();
    bool operator==(const PolyZ& o) const { return c == o.c; }
    std::string to_string(const std::string& var = "X") const;
};

PolyZ z_add(const PolyZ& a, const PolyZ& b);
PolyZ z_sub(const PolyZ& a, const PolyZ& b);
PolyZ z_mul(const PolyZ& a, const PolyZ& b);
PolyZ z_scale(const PolyZ& a, const Int& k);

// Reduce coefficients into [0, m).
PolyZ z_mod(const PolyZ& a, const Int& m);
// Reduce into the symmetric range (-m/2, m/2].
PolyZ z_mod_sym(const PolyZ& a, const Int& m);

// Division of a by b modulo m; lc(b) must be invertible mod m.
void z_divmod_mod(const PolyZ& a, const PolyZ& b, const Int& m, PolyZ& q, PolyZ& r);

Int z_content(const PolyZ& a);
// Primitive part with positive leading coefficient.
PolyZ z_primitive(const PolyZ& a);

PolyZ polyq_to_polyz_primitive(const PolyQ& f);
PolyQ polyz_to_polyq(const PolyZ& f);

// True when a divides b exactly over Z; fills q when non-null.
bool z_divides(const PolyZ& a, const PolyZ& b, PolyZ* q = nullptr);

} // namespace boolat::polycore

#endif
