#include "boolat/polyz.hpp"

namespace boolat::polycore {

namespace {
const Int kZero(0);
}

const Int& PolyZ::lc() const { return c.empty() ? kZero : c.back(); }

void PolyZ::normalize() {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

std::string PolyZ::to_string(const std::string& var) const {
    return polyz_to_polyq(*this).to_string(var);
}

PolyZ z_add(const PolyZ& a, const PolyZ& b) {
    std::vector<Int> v(std::max(a.c.size(), b.c.size()), Int(0));
    for (size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) + b.coeff(i);
    return PolyZ(std::move(v));
}

PolyZ z_sub(const PolyZ& a, const PolyZ& b) {
    std::vector<Int> v(std::max(a.c.size(), b.c.size()), Int(0));
    for (size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) - b.coeff(i);
    return PolyZ(std::move(v));
}

PolyZ z_mul(const PolyZ& a, const PolyZ& b) {
    if (a.is_zero() || b.is_zero()) return PolyZ();
    std::vector<Int> v(a.c.size() + b.c.size() - 1, Int(0));
    for (size_t i = 0; i < a.c.size(); ++i)
        for (size_t j = 0; j < b.c.size(); ++j) v[i + j] += a.c[i] * b.c[j];
    return PolyZ(std::move(v));
}

PolyZ z_scale(const PolyZ& a, const Int& k) {
    std::vector<Int> v(a.c);
    for (Int& z : v) z *= k;
    return PolyZ(std::move(v));
}

PolyZ z_mod(const PolyZ& a, const Int& m) {
    std::vector<Int> v(a.c);
    for (Int& z : v) {
        mpz_mod(z.get_mpz_t(), z.get_mpz_t(), m.get_mpz_t());
    }
    return PolyZ(std::move(v));
}

PolyZ z_mod_sym(const PolyZ& a, const Int& m) {
    PolyZ r = z_mod(a, m);
    Int half = m / 2;
    for (Int& z : r.c)
        if (z > half) z -= m;
    r.normalize();
    return r;
}

void z_divmod_mod(const PolyZ& a, const PolyZ& b, const Int& m, PolyZ& q, PolyZ& r) {
    if (b.is_zero()) fail(errc::zero_polynomial, "modular division by zero polynomial");
    Int inv;
    if (mpz_invert(inv.get_mpz_t(), b.lc().get_mpz_t(), m.get_mpz_t()) == 0)
        fail(errc::invalid_argument, "leading coefficient not invertible modulo m");
    std::vector<Int> rem(z_mod(a, m).c);
    int db = b.degree();
    std::vector<Int> quo;
    int da = static_cast<int>(rem.size()) - 1;
    if (da >= db) quo.assign(da - db + 1, Int(0));
    for (int i = da; i >= db; --i) {
        Int t = (rem[i] * inv) % m;
        if (t < 0) t += m;
        if (t == 0) continue;
        quo[i - db] = t;
        for (int j = 0; j <= db; ++j) {
            rem[i - db + j] = (rem[i - db + j] - t * b.coeff(j)) % m;
        }
    }
    q = z_mod(PolyZ(std::move(quo)), m);
    r = z_mod(PolyZ(std::move(rem)), m);
}

Int z_content(const PolyZ& a) {
    Int g(0);
    for (const Int& z : a.c) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.get_mpz_t());
    return g;
}

PolyZ z_primitive(const PolyZ& a) {
    if (a.is_zero()) return a;
    Int g = z_content(a);
    std::vector<Int> v(a.c);
    for (Int& z : v) z /= g;
    if (sgn(v.back()) < 0)
        for (Int& z : v) z = -z;
    return PolyZ(std::move(v));
}

PolyZ polyq_to_polyz_primitive(const PolyQ& f) {
    Int den(1);
    for (const Rat& q : f.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den().get_mpz_t());
    std::vector<Int> v;
    v.reserve(f.coeffs().size());
    for (const Rat& q : f.coeffs()) {
        Rat scaled = q * Rat(den);
        v.push_back(scaled.get_num());
    }
    return z_primitive(PolyZ(std::move(v)));
}

PolyQ polyz_to_polyq(const PolyZ& f) {
    std::vector<Rat> v;
    v.reserve(f.c.size());
    for (const Int& z : f.c) v.emplace_back(z);
    return PolyQ(std::move(v));
}

bool z_divides(const PolyZ& a, const PolyZ& b, PolyZ* q) {
    if (a.is_zero()) return b.is_zero();
    if (b.is_zero()) {
        if (q) *q = PolyZ();
        return true;
    }
    if (b.degree() < a.degree()) return false;
    std::vector<Int> rem(b.c);
    int da = a.degree();
    std::vector<Int> quo(b.degree() - da + 1, Int(0));
    for (int i = static_cast<int>(rem.size()) - 1; i >= da; --i) {
        if (rem[i] == 0) continue;
        Int t, rr;
        mpz_tdiv_qr(t.get_mpz_t(), rr.get_mpz_t(), rem[i].get_mpz_t(), a.lc().get_mpz_t());
        if (rr != 0) return false;
        quo[i - da] = t;
        for (int j = 0; j <= da; ++j) rem[i - da + j] -= t * a.c[j];
    }
    for (const Int& z : rem)
        if (z != 0) return false;
    if (q) *q = PolyZ(std::move(quo));
    return true;
}

} // namespace boolat::polycore
