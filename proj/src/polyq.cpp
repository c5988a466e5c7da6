#include "boolat/polyq.hpp"

#include <sstream>

namespace boolat::polycore {

namespace {
const Rat kZero(0);
}

void PolyQ::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
    for (const Rat& q : c_) debug_check_reduced(q);
}

PolyQ PolyQ::monomial(const Rat& c, size_t k) {
    std::vector<Rat> v(k + 1, Rat(0));
    v[k] = c;
    return PolyQ(std::move(v));
}

const Rat& PolyQ::coeff(size_t k) const { return k < c_.size() ? c_[k] : kZero; }

const Rat& PolyQ::lc() const {
    if (c_.empty()) return kZero;
    return c_.back();
}

PolyQ PolyQ::operator-() const {
    PolyQ r(*this);
    for (Rat& q : r.c_) q = -q;
    return r;
}

PolyQ PolyQ::operator+(const PolyQ& o) const {
    std::vector<Rat> v(std::max(c_.size(), o.c_.size()), Rat(0));
    for (size_t i = 0; i < v.size(); ++i) v[i] = coeff(i) + o.coeff(i);
    return PolyQ(std::move(v));
}

PolyQ PolyQ::operator-(const PolyQ& o) const {
    std::vector<Rat> v(std::max(c_.size(), o.c_.size()), Rat(0));
    for (size_t i = 0; i < v.size(); ++i) v[i] = coeff(i) - o.coeff(i);
    return PolyQ(std::move(v));
}

PolyQ PolyQ::operator*(const PolyQ& o) const {
    if (is_zero() || o.is_zero()) return PolyQ();
    std::vector<Rat> v(c_.size() + o.c_.size() - 1, Rat(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
    return PolyQ(std::move(v));
}

PolyQ PolyQ::operator*(const Rat& a) const {
    PolyQ r(*this);
    for (Rat& q : r.c_) q *= a;
    r.normalize();
    return r;
}

PolyQ PolyQ::monic() const {
    if (is_zero()) return *this;
    return *this * (Rat(1) / lc());
}

PolyQ PolyQ::derivative() const {
    if (c_.size() <= 1) return PolyQ();
    std::vector<Rat> v(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * Rat(static_cast<long>(i));
    return PolyQ(std::move(v));
}

Rat PolyQ::eval(const Rat& v) const {
    Rat acc(0);
    for (size_t i = c_.size(); i-- > 0;) acc = acc * v + c_[i];
    return acc;
}

PolyQ PolyQ::shift_var(const Rat& s) const {
    PolyQ acc;
    PolyQ lin({s, Rat(1)});
    for (size_t i = c_.size(); i-- > 0;) acc = acc * lin + PolyQ::constant(c_[i]);
    return acc;
}

std::string PolyQ::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = c_.size(); i-- > 0;) {
        const Rat& q = c_[i];
        if (q == 0) continue;
        Rat a = q;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        if (i == 0) {
            os << rat_to_string(a);
        } else {
            if (a != 1) os << rat_to_string(a) << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

std::pair<PolyQ, PolyQ> poly_divmod(const PolyQ& a, const PolyQ& b) {
    if (b.is_zero()) fail(errc::zero_polynomial, "division by the zero polynomial");
    std::vector<Rat> rem(a.coeffs());
    int db = b.degree();
    if (a.degree() < db) return {PolyQ(), a};
    std::vector<Rat> quo(a.degree() - db + 1, Rat(0));
    Rat inv_lc = Rat(1) / b.lc();
    for (int i = a.degree(); i >= db; --i) {
        Rat q = rem[i] * inv_lc;
        if (q == 0) continue;
        quo[i - db] = q;
        for (int j = 0; j <= db; ++j) rem[i - db + j] -= q * b.coeff(j);
    }
    return {PolyQ(std::move(quo)), PolyQ(std::move(rem))};
}

PolyQ poly_divexact(const PolyQ& a, const PolyQ& b) {
    auto [q, r] = poly_divmod(a, b);
    if (!r.is_zero()) fail(errc::invalid_argument, "inexact polynomial division");
    return q;
}

namespace {

// Primitive-PRS gcd on the integer images; keeps intermediate coefficient
// growth under control where a plain rational Euclid would balloon.
std::vector<Int> to_primitive_int(const PolyQ& f, bool* negated = nullptr) {
    Int den(1);
    for (const Rat& q : f.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den().get_mpz_t());
    std::vector<Int> v;
    v.reserve(f.coeffs().size());
    Int g(0);
    for (const Rat& q : f.coeffs()) {
        Rat scaled = q * Rat(den);
        v.push_back(scaled.get_num());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.back().get_mpz_t());
    }
    if (g != 0)
        for (Int& z : v) z /= g;
    if (negated) *negated = false;
    if (!v.empty() && sgn(v.back()) < 0) {
        for (Int& z : v) z = -z;
        if (negated) *negated = true;
    }
    return v;
}

int zdeg(const std::vector<Int>& f) { return static_cast<int>(f.size()) - 1; }

void znorm(std::vector<Int>& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

// Pseudo-remainder: a scaled by powers of lc(b), reduced below deg b, all integer.
std::vector<Int> zprem(std::vector<Int> a, const std::vector<Int>& b) {
    int db = zdeg(b);
    const Int& lb = b.back();
    while (zdeg(a) >= db) {
        Int head = a.back();
        int da = zdeg(a);
        for (Int& z : a) z *= lb;
        for (int j = 0; j <= db; ++j) a[da - db + j] -= head * b[j];
        znorm(a);
    }
    return a;
}

void zmake_primitive(std::vector<Int>& f) {
    Int g(0);
    for (const Int& z : f) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.get_mpz_t());
    if (g > 1)
        for (Int& z : f) z /= g;
    if (!f.empty() && sgn(f.back()) < 0)
        for (Int& z : f) z = -z;
}

} // namespace

PolyQ poly_gcd_q(const PolyQ& a, const PolyQ& b) {
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    std::vector<Int> u = to_primitive_int(a), v = to_primitive_int(b);
    if (zdeg(u) < zdeg(v)) std::swap(u, v);
    while (!v.empty()) {
        std::vector<Int> r = zprem(u, v);
        zmake_primitive(r);
        u = std::move(v);
        v = std::move(r);
    }
    std::vector<Rat> coeffs;
    coeffs.reserve(u.size());
    for (const Int& z : u) coeffs.emplace_back(z);
    return PolyQ(std::move(coeffs)).monic();
}

PolyQ squarefree_part(const PolyQ& f) {
    if (f.is_zero()) fail(errc::zero_polynomial, "squarefree_part of zero");
    if (f.degree() == 0) return PolyQ::constant(Rat(1));
    PolyQ g = poly_gcd_q(f, f.derivative());
    return poly_divexact(f, g).monic();
}

Rat resultant_monic_lhs(const PolyQ& m, const PolyQ& b) {
    if (!m.is_monic() || m.degree() < 1) fail(errc::invalid_argument, "resultant_monic_lhs needs a monic lhs of degree >= 1");
    if (b.is_zero()) return Rat(0);
    PolyQ a = m, c = b;
    Rat acc(1);
    while (c.degree() > 0) {
        PolyQ r = poly_divmod(a, c).second;
        if (r.is_zero()) return Rat(0);
        long da = a.degree(), dc = c.degree(), dr = r.degree();
        Rat lc_pow(1);
        for (long i = 0; i < da - dr; ++i) lc_pow *= c.lc();
        if ((da * dc) % 2 != 0) lc_pow = -lc_pow;
        acc *= lc_pow;
        a = c;
        c = r;
    }
    // c is a nonzero constant now
    Rat cpow(1);
    for (int i = 0; i < a.degree(); ++i) cpow *= c.coeff(0);
    return acc * cpow;
}

Rat resultant(const PolyQ& a, const PolyQ& b) {
    if (a.is_zero() || b.is_zero()) fail(errc::zero_polynomial, "resultant of the zero polynomial");
    if (a.degree() == 0) {
        Rat r(1);
        for (int i = 0; i < b.degree(); ++i) r *= a.coeff(0);
        return r;
    }
    // Scale to a monic lhs: res(a, b) = lc(a)^deg(b) * res(a/lc, b).
    Rat scale(1);
    for (int i = 0; i < b.degree(); ++i) scale *= a.lc();
    return scale * resultant_monic_lhs(a.monic(), b);
}

int poly_cmp(const PolyQ& a, const PolyQ& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
    for (int i = 0; i <= a.degree(); ++i) {
        int c = cmp(a.coeff(i), b.coeff(i));
        if (c != 0) return c;
    }
    return 0;
}

} // namespace boolat::polycore
