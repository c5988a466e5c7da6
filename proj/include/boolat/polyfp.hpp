#ifndef BOOLAT_POLYFP_HPP
#define BOOLAT_POLYFP_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "boolat/error.hpp"
#include "boolat/polyz.hpp"

namespace boolat::polycore {

// Dense polynomial over the prime field F_p, residues reduced into [0, p).
// p stays small (word-sized); all products fit in 64 bits for p < 2^31.
class PolyFp {
public:
    PolyFp() : p_(2) {}
    explicit PolyFp(uint64_t p) : p_(p) { check_modulus(); }
    PolyFp(uint64_t p, std::vector<uint64_t> coeffs) : p_(p), c_(std::move(coeffs)) {
        check_modulus();
        reduce();
    }

    uint64_t modulus() const { return p_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }
    uint64_t coeff(size_t k) const { return k < c_.size() ? c_[k] : 0; }
    uint64_t lc() const { return c_.empty() ? 0 : c_.back(); }
    const std::vector<uint64_t>& coeffs() const { return c_; }

    static PolyFp constant(uint64_t p, uint64_t a) { return PolyFp(p, {a}); }
    static PolyFp x(uint64_t p) { return PolyFp(p, {0, 1}); }

    bool operator==(const PolyFp& o) const { return p_ == o.p_ && c_ == o.c_; }
    std::string to_string(const std::string& var = "X") const;

private:
    void check_modulus() const;
    void reduce();
    uint64_t p_;
    std::vector<uint64_t> c_;
};

PolyFp fp_add(const PolyFp& a, const PolyFp& b);
PolyFp fp_sub(const PolyFp& a, const PolyFp& b);
PolyFp fp_mul(const PolyFp& a, const PolyFp& b);
PolyFp fp_scale(const PolyFp& a, uint64_t k);
PolyFp fp_monic(const PolyFp& a);
PolyFp fp_derivative(const PolyFp& a);
void fp_divmod(const PolyFp& a, const PolyFp& b, PolyFp& q, PolyFp& r);
PolyFp fp_mod(const PolyFp& a, const PolyFp& b);
PolyFp fp_gcd(const PolyFp& a, const PolyFp& b);  // monic
PolyFp fp_powmod(const PolyFp& base, const Int& e, const PolyFp& mod);

uint64_t fp_inv_scalar(uint64_t a, uint64_t p);

PolyFp polyz_to_polyfp(const PolyZ& f, uint64_t p);
PolyZ polyfp_to_polyz(const PolyFp& f);

// Total order: degree, then coefficients from the constant term up.
int fp_cmp(const PolyFp& a, const PolyFp& b);

} // namespace boolat::polycore

#endif
