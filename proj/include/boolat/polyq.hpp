#ifndef BOOLAT_POLYQ_HPP
#define BOOLAT_POLYQ_HPP

#include <string>
#include <utility>
#include <vector>

#include "boolat/rat.hpp"

namespace boolat::polycore {

// Dense univariate polynomial over the rationals, coefficients stored in
// ascending degree with no trailing zeros.  The zero polynomial is the empty
// coefficient vector and has degree -1.
class PolyQ {
public:
    PolyQ() = default;
    explicit PolyQ(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { normalize(); }

    static PolyQ zero() { return PolyQ(); }
    static PolyQ constant(const Rat& a) { return PolyQ({a}); }
    static PolyQ x() { return PolyQ({Rat(0), Rat(1)}); }
    // c * X^k
    static PolyQ monomial(const Rat& c, size_t k);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }
    const std::vector<Rat>& coeffs() const { return c_; }

    // Coefficient of X^k; zero beyond the degree.
    const Rat& coeff(size_t k) const;
    const Rat& lc() const;

    PolyQ operator-() const;
    PolyQ operator+(const PolyQ& o) const;
    PolyQ operator-(const PolyQ& o) const;
    PolyQ operator*(const PolyQ& o) const;
    PolyQ operator*(const Rat& a) const;
    bool operator==(const PolyQ& o) const { return c_ == o.c_; }
    bool operator!=(const PolyQ& o) const { return c_ != o.c_; }

    PolyQ monic() const;
    PolyQ derivative() const;
    Rat eval(const Rat& v) const;
    PolyQ shift_var(const Rat& s) const;  // f(X + s)
    std::string to_string(const std::string& var = "X") const;

private:
    void normalize();
    std::vector<Rat> c_;
};

// (quotient, remainder) with b != 0; deg r < deg b.
std::pair<PolyQ, PolyQ> poly_divmod(const PolyQ& a, const PolyQ& b);
// Exact division; throws if the remainder is nonzero.
PolyQ poly_divexact(const PolyQ& a, const PolyQ& b);

// Monic gcd.  gcd(f, 0) = monic(f), gcd(0, 0) = 0.
PolyQ poly_gcd_q(const PolyQ& a, const PolyQ& b);

// f / gcd(f, f'), monic; strips repeated roots.  Throws ZeroPolynomial.
PolyQ squarefree_part(const PolyQ& f);

// Sylvester resultant of two nonzero polynomials.  Throws ZeroPolynomial.
Rat resultant(const PolyQ& a, const PolyQ& b);

// Resultant with a monic first argument, defined as the product of b over the
// roots of m; accepts b = 0 (gives 0).  Used by norm computations.
Rat resultant_monic_lhs(const PolyQ& m, const PolyQ& b);

// Total order: degree first, then coefficients from the constant term up.
int poly_cmp(const PolyQ& a, const PolyQ& b);

} // namespace boolat::polycore

#endif
