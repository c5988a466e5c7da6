#include "boolat/polyfp.hpp"

#include "boolat/rat.hpp"

namespace boolat::polycore {

void PolyFp::check_modulus() const {
    if (p_ < 2 || p_ >= (1ull << 31)) fail(errc::invalid_argument, "modulus out of range");
}

void PolyFp::reduce() {
    for (uint64_t& v : c_) v %= p_;
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

std::string PolyFp::to_string(const std::string& var) const {
    return polyz_to_polyq(polyfp_to_polyz(*this)).to_string(var) + " (mod " + std::to_string(p_) + ")";
}

static void require_same_p(const PolyFp& a, const PolyFp& b) {
    if (a.modulus() != b.modulus()) fail(errc::invalid_argument, "mixed moduli");
}

PolyFp fp_add(const PolyFp& a, const PolyFp& b) {
    require_same_p(a, b);
    uint64_t p = a.modulus();
    std::vector<uint64_t> v(std::max(a.coeffs().size(), b.coeffs().size()), 0);
    for (size_t i = 0; i < v.size(); ++i) v[i] = (a.coeff(i) + b.coeff(i)) % p;
    return PolyFp(p, std::move(v));
}

PolyFp fp_sub(const PolyFp& a, const PolyFp& b) {
    require_same_p(a, b);
    uint64_t p = a.modulus();
    std::vector<uint64_t> v(std::max(a.coeffs().size(), b.coeffs().size()), 0);
    for (size_t i = 0; i < v.size(); ++i) v[i] = (a.coeff(i) + p - b.coeff(i)) % p;
    return PolyFp(p, std::move(v));
}

PolyFp fp_mul(const PolyFp& a, const PolyFp& b) {
    require_same_p(a, b);
    uint64_t p = a.modulus();
    if (a.is_zero() || b.is_zero()) return PolyFp(p);
    std::vector<uint64_t> v(a.coeffs().size() + b.coeffs().size() - 1, 0);
    for (size_t i = 0; i < a.coeffs().size(); ++i) {
        if (a.coeff(i) == 0) continue;
        for (size_t j = 0; j < b.coeffs().size(); ++j)
            v[i + j] = (v[i + j] + a.coeff(i) * b.coeff(j)) % p;
    }
    return PolyFp(p, std::move(v));
}

PolyFp fp_scale(const PolyFp& a, uint64_t k) {
    uint64_t p = a.modulus();
    std::vector<uint64_t> v(a.coeffs());
    for (uint64_t& z : v) z = (z * (k % p)) % p;
    return PolyFp(p, std::move(v));
}

uint64_t fp_inv_scalar(uint64_t a, uint64_t p) {
    a %= p;
    if (a == 0) fail(errc::invalid_argument, "inverse of zero");
    int64_t t = 0, newt = 1;
    int64_t r = static_cast<int64_t>(p), newr = static_cast<int64_t>(a);
    while (newr != 0) {
        int64_t q = r / newr;
        t -= q * newt;
        std::swap(t, newt);
        r -= q * newr;
        std::swap(r, newr);
    }
    if (t < 0) t += static_cast<int64_t>(p);
    return static_cast<uint64_t>(t);
}

PolyFp fp_monic(const PolyFp& a) {
    if (a.is_zero() || a.lc() == 1) return a;
    return fp_scale(a, fp_inv_scalar(a.lc(), a.modulus()));
}

PolyFp fp_derivative(const PolyFp& a) {
    uint64_t p = a.modulus();
    if (a.degree() <= 0) return PolyFp(p);
    std::vector<uint64_t> v(a.coeffs().size() - 1);
    for (size_t i = 1; i < a.coeffs().size(); ++i) v[i - 1] = (a.coeff(i) * (i % p)) % p;
    return PolyFp(p, std::move(v));
}

void fp_divmod(const PolyFp& a, const PolyFp& b, PolyFp& q, PolyFp& r) {
    require_same_p(a, b);
    if (b.is_zero()) fail(errc::zero_polynomial, "division by zero polynomial");
    uint64_t p = a.modulus();
    std::vector<uint64_t> rem(a.coeffs());
    int db = b.degree();
    std::vector<uint64_t> quo;
    int da = a.degree();
    if (da >= db) quo.assign(da - db + 1, 0);
    uint64_t inv = fp_inv_scalar(b.lc(), p);
    for (int i = da; i >= db; --i) {
        uint64_t t = (rem[i] % p) * inv % p;
        if (t == 0) continue;
        quo[i - db] = t;
        for (int j = 0; j <= db; ++j) {
            uint64_t sub = t * b.coeff(j) % p;
            rem[i - db + j] = (rem[i - db + j] + p - sub) % p;
        }
    }
    q = PolyFp(p, std::move(quo));
    r = PolyFp(p, std::move(rem));
}

PolyFp fp_mod(const PolyFp& a, const PolyFp& b) {
    PolyFp q, r;
    fp_divmod(a, b, q, r);
    return r;
}

PolyFp fp_gcd(const PolyFp& a, const PolyFp& b) {
    PolyFp u = a, v = b;
    while (!v.is_zero()) {
        PolyFp r = fp_mod(u, v);
        u = v;
        v = r;
    }
    return fp_monic(u);
}

PolyFp fp_powmod(const PolyFp& base, const Int& e, const PolyFp& mod) {
    PolyFp result = PolyFp::constant(base.modulus(), 1);
    PolyFp b = fp_mod(base, mod);
    Int k = e;
    while (k > 0) {
        if (mpz_odd_p(k.get_mpz_t())) result = fp_mod(fp_mul(result, b), mod);
        b = fp_mod(fp_mul(b, b), mod);
        k >>= 1;
    }
    return result;
}

PolyFp polyz_to_polyfp(const PolyZ& f, uint64_t p) {
    std::vector<uint64_t> v;
    v.reserve(f.c.size());
    Int m(static_cast<unsigned long>(p));
    for (const Int& z : f.c) {
        Int r;
        mpz_mod(r.get_mpz_t(), z.get_mpz_t(), m.get_mpz_t());
        v.push_back(r.get_ui());
    }
    return PolyFp(p, std::move(v));
}

PolyZ polyfp_to_polyz(const PolyFp& f) {
    std::vector<Int> v;
    v.reserve(f.coeffs().size());
    for (uint64_t z : f.coeffs()) v.emplace_back(static_cast<unsigned long>(z));
    return PolyZ(std::move(v));
}

int fp_cmp(const PolyFp& a, const PolyFp& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
    for (int i = 0; i <= a.degree(); ++i) {
        if (a.coeff(i) != b.coeff(i)) return a.coeff(i) < b.coeff(i) ? -1 : 1;
    }
    return 0;
}

} // namespace boolat::polycore
