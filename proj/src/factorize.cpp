#include "boolat/factorize.hpp"

#include <algorithm>
#include <map>

#include "boolat/rat.hpp"

namespace boolat::polycore {

namespace {

// ---------------------------------------------------------------------------
// Factorization over F_p
// ---------------------------------------------------------------------------

// p-th root of f when f = g(X^p) (char-p case with vanishing derivative);
// coefficients are fixed by Frobenius on F_p.
PolyFp fp_pth_root(const PolyFp& f) {
    uint64_t p = f.modulus();
    std::vector<uint64_t> v;
    for (size_t i = 0; i < f.coeffs().size(); i += p) v.push_back(f.coeff(i));
    return PolyFp(p, std::move(v));
}

// Squarefree decomposition of a monic f over F_p: list of (g_i, i) with
// f = prod g_i^i, each g_i squarefree and monic.
std::vector<std::pair<PolyFp, unsigned>> fp_squarefree_decomposition(const PolyFp& f, unsigned outer_mult = 1) {
    uint64_t p = f.modulus();
    std::vector<std::pair<PolyFp, unsigned>> out;
    if (f.degree() < 1) return out;
    PolyFp d = fp_derivative(f);
    if (d.is_zero()) {
        // f = h(X^p) = (pth root)^p
        auto inner = fp_squarefree_decomposition(fp_pth_root(f), outer_mult * static_cast<unsigned>(p));
        return inner;
    }
    PolyFp w = fp_gcd(f, d);
    PolyFp rest = w;  // collects the part with exponents divisible by p
    PolyFp g;
    {
        PolyFp q, r;
        fp_divmod(f, w, q, r);
        g = q;  // product of squarefree parts with exponent not divisible by p
    }
    unsigned i = 1;
    while (g.degree() >= 1) {
        PolyFp y = fp_gcd(g, rest);
        PolyFp fac;
        {
            PolyFp q, r;
            fp_divmod(g, y, q, r);
            fac = q;
        }
        if (fac.degree() >= 1) out.emplace_back(fp_monic(fac), i * outer_mult);
        PolyFp q2, r2;
        fp_divmod(rest, y, q2, r2);
        rest = q2;
        g = y;
        ++i;
    }
    if (rest.degree() >= 1) {
        auto inner = fp_squarefree_decomposition(fp_pth_root(rest), outer_mult * static_cast<unsigned>(p));
        for (auto& pr : inner) out.push_back(std::move(pr));
    }
    return out;
}

// Builds the c-th polynomial of degree < bound over F_p (base-p digits of c).
PolyFp nth_poly(uint64_t p, unsigned long long c, int bound) {
    std::vector<uint64_t> v;
    while (c > 0) {
        v.push_back(c % p);
        c /= p;
    }
    if (static_cast<int>(v.size()) > bound) v.resize(bound);
    return PolyFp(p, std::move(v));
}

// Equal-degree splitting of a squarefree monic g whose irreducible factors all
// have degree d.  Deterministic sweep over candidate elements in numeric
// order; a seeded random fallback exists but the sweep covers every candidate
// so it only fires after an implausibly long stall.
void fp_equal_degree(const PolyFp& g, int d, std::vector<PolyFp>& out) {
    uint64_t p = g.modulus();
    if (g.degree() == d) {
        out.push_back(fp_monic(g));
        return;
    }
    Int pd;
    mpz_ui_pow_ui(pd.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(d));
    Int e = (pd - 1) / 2;

    for (unsigned long long cand = 1;; ++cand) {
        PolyFp a = nth_poly(p, cand, g.degree());
        if (a.degree() < 1) continue;  // constants never separate factors
        PolyFp u = fp_gcd(a, g);
        if (u.degree() >= 1 && u.degree() < g.degree()) {
            PolyFp q, r;
            fp_divmod(g, u, q, r);
            fp_equal_degree(u, d, out);
            fp_equal_degree(q, d, out);
            return;
        }
        PolyFp b;
        if (p == 2) {
            // trace map T(a) = a + a^2 + ... + a^(2^(d-1))
            PolyFp t = fp_mod(a, g);
            PolyFp acc = t;
            for (int i = 1; i < d; ++i) {
                t = fp_mod(fp_mul(t, t), g);
                acc = fp_add(acc, t);
            }
            b = acc;
        } else {
            b = fp_sub(fp_powmod(a, e, g), PolyFp::constant(p, 1));
        }
        PolyFp h = fp_gcd(b, g);
        if (h.degree() >= 1 && h.degree() < g.degree()) {
            PolyFp q, r;
            fp_divmod(g, h, q, r);
            fp_equal_degree(h, d, out);
            fp_equal_degree(q, d, out);
            return;
        }
    }
}

// Distinct-degree then equal-degree factorization of a squarefree monic f.
std::vector<PolyFp> fp_factor_squarefree(const PolyFp& f) {
    uint64_t p = f.modulus();
    std::vector<PolyFp> out;
    PolyFp rem = f;
    PolyFp h = PolyFp::x(p);  // X^(p^d) mod rem, maintained incrementally
    int d = 0;
    while (rem.degree() > 0) {
        ++d;
        if (rem.degree() < 2 * d) {
            out.push_back(fp_monic(rem));
            break;
        }
        h = fp_powmod(h, Int(static_cast<unsigned long>(p)), rem);
        PolyFp g = fp_gcd(fp_sub(h, PolyFp::x(p)), rem);
        if (g.degree() > 0) {
            fp_equal_degree(g, d, out);
            PolyFp q, r;
            fp_divmod(rem, g, q, r);
            rem = q;
            h = fp_mod(h, rem);
        }
    }
    return out;
}

int fp_pair_cmp(const std::pair<PolyFp, unsigned>& a, const std::pair<PolyFp, unsigned>& b) {
    int c = fp_cmp(a.first, b.first);
    if (c != 0) return c;
    return a.second < b.second ? -1 : (a.second > b.second ? 1 : 0);
}

// ---------------------------------------------------------------------------
// Hensel lifting (linear, all factors at once)
// ---------------------------------------------------------------------------

struct LiftState {
    Int modulus;             // p^j
    std::vector<PolyZ> g;    // monic lifted factors
};

// One linear step: from f = lc * prod g_i (mod p^j) to the same mod p^(j+1).
// sigma_i are the precomputed partial-fraction multipliers mod p.
void lift_step(const PolyZ& f, const Int& p, LiftState& st, const std::vector<PolyFp>& sigma,
               uint64_t lc_inv_mod_p, const Int& lc) {
    Int next = st.modulus * p;
    PolyZ prod = PolyZ({lc});
    for (const PolyZ& gi : st.g) prod = z_mod(z_mul(prod, gi), next);
    PolyZ err = z_mod(z_sub(f, prod), next);
    // err is divisible by p^j
    std::vector<Int> w;
    w.reserve(err.c.size());
    for (const Int& z : err.c) w.push_back(z / st.modulus);
    PolyZ e_over(std::move(w));
    uint64_t pu = static_cast<unsigned long>(p.get_ui());
    PolyFp ebar = polyz_to_polyfp(e_over, pu);
    ebar = fp_scale(ebar, lc_inv_mod_p);
    for (size_t i = 0; i < st.g.size(); ++i) {
        PolyFp gbar = polyz_to_polyfp(st.g[i], pu);
        PolyFp delta = fp_mod(fp_mul(sigma[i], ebar), gbar);
        st.g[i] = z_mod(z_add(st.g[i], z_scale(polyfp_to_polyz(delta), st.modulus)), next);
    }
    st.modulus = next;
}

std::vector<PolyZ> hensel_lift_z(const PolyZ& f, const std::vector<PolyFp>& factors, uint64_t p, unsigned k) {
    Int pz(static_cast<unsigned long>(p));
    PolyFp fbar = polyz_to_polyfp(f, p);
    if (fbar.degree() != f.degree())
        fail(errc::invalid_argument, "leading coefficient of f vanishes mod p");
    // squarefreeness of f mod p
    if (fp_gcd(fbar, fp_derivative(fbar)).degree() != 0)
        fail(errc::not_squarefree_mod_p, "f is not squarefree modulo p");
    // pairwise coprimality
    for (size_t i = 0; i < factors.size(); ++i)
        for (size_t j = i + 1; j < factors.size(); ++j)
            if (fp_gcd(factors[i], factors[j]).degree() != 0)
                fail(errc::not_coprime, "input factors are not pairwise coprime mod p");
    // the product must reproduce f mod p
    PolyFp prod = PolyFp::constant(p, fbar.lc());
    for (const PolyFp& g : factors) {
        if (!g.is_monic()) fail(errc::invalid_argument, "input factors must be monic");
        prod = fp_mul(prod, g);
    }
    if (!(prod == fbar)) fail(errc::not_a_factor, "input factors do not multiply to f mod p");

    // partial-fraction multipliers: sigma_i = (prod_{j != i} g_j)^-1 mod g_i
    std::vector<PolyFp> sigma;
    sigma.reserve(factors.size());
    for (size_t i = 0; i < factors.size(); ++i) {
        PolyFp rest = PolyFp::constant(p, 1);
        for (size_t j = 0; j < factors.size(); ++j)
            if (j != i) rest = fp_mod(fp_mul(rest, factors[j]), factors[i]);
        // invert rest modulo g_i via extended Euclid on polynomials
        PolyFp r0 = factors[i], r1 = rest;
        PolyFp t0 = PolyFp(p), t1 = PolyFp::constant(p, 1);
        while (!r1.is_zero()) {
            PolyFp q, r;
            fp_divmod(r0, r1, q, r);
            PolyFp t2 = fp_sub(t0, fp_mul(q, t1));
            r0 = r1;
            r1 = r;
            t0 = t1;
            t1 = t2;
        }
        if (r0.degree() != 0) fail(errc::not_coprime, "factors share a root mod p");
        sigma.push_back(fp_mod(fp_scale(t0, fp_inv_scalar(r0.coeff(0), p)), factors[i]));
    }

    LiftState st;
    st.modulus = pz;
    st.g.reserve(factors.size());
    for (const PolyFp& g : factors) st.g.push_back(polyfp_to_polyz(g));

    Int lc = f.lc();
    uint64_t lc_inv = fp_inv_scalar(polyz_to_polyfp(PolyZ({lc}), p).coeff(0), p);
    for (unsigned j = 1; j < k; ++j) lift_step(f, pz, st, sigma, lc_inv, lc);
    for (PolyZ& g : st.g) g = z_mod(g, st.modulus);
    return st.g;
}

// ---------------------------------------------------------------------------
// Factorization over Q (Zassenhaus)
// ---------------------------------------------------------------------------

// Landau-Mignotte style bound on the coefficients of any candidate factor
// lc * (product of modular factors) of fz.
Int factor_coeff_bound(const PolyZ& fz) {
    Int sum(0);
    for (const Int& c : fz.c) sum += c * c;
    Int norm;
    mpz_sqrt(norm.get_mpz_t(), sum.get_mpz_t());
    norm += 1;
    Int two_pow;
    mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, static_cast<unsigned long>(fz.degree() + 1));
    Int b = norm * two_pow;
    Int lc = fz.lc();
    if (lc < 0) lc = -lc;
    return b * lc;
}

bool next_combination(std::vector<size_t>& idx, size_t n) {
    size_t k = idx.size();
    for (size_t i = k; i-- > 0;) {
        if (idx[i] < n - k + i) {
            ++idx[i];
            for (size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

// Zassenhaus on a primitive squarefree integer polynomial of degree >= 1.
std::vector<PolyQ> factor_squarefree_z(const PolyZ& fz) {
    std::vector<PolyQ> out;
    if (fz.degree() == 1) {
        out.push_back(polyz_to_polyq(fz).monic());
        return out;
    }

    // smallest odd prime p with p not dividing lc(f) and f squarefree mod p
    uint64_t p = 0;
    for (uint64_t cand = 3;; cand = (cand == 3 ? 5 : cand + 2)) {
        if (!is_prime_u64(cand)) continue;
        if (mpz_divisible_ui_p(fz.lc().get_mpz_t(), static_cast<unsigned long>(cand))) continue;
        PolyFp fbar = polyz_to_polyfp(fz, cand);
        if (fp_gcd(fbar, fp_derivative(fbar)).degree() == 0) {
            p = cand;
            break;
        }
    }

    PolyFp fbar = polyz_to_polyfp(fz, p);
    auto mod_factors_m = factor_mod_p(fp_monic(fbar));
    std::vector<PolyFp> mod_factors;
    for (auto& [g, mult] : mod_factors_m) {
        engine_check(mult == 1, "squarefree polynomial factored with multiplicity > 1 mod p");
        mod_factors.push_back(g);
    }
    if (mod_factors.size() == 1) {
        out.push_back(polyz_to_polyq(fz).monic());
        return out;
    }

    // lift precision: least p^k exceeding twice the coefficient bound
    Int bound = factor_coeff_bound(fz);
    Int target = 2 * bound;
    unsigned k = 1;
    Int pk(static_cast<unsigned long>(p));
    while (pk <= target) {
        pk *= static_cast<unsigned long>(p);
        ++k;
    }
    std::vector<PolyZ> lifted = hensel_lift_z(fz, mod_factors, p, k);

    // subset recombination, increasing subset size, lexicographic index order
    std::vector<PolyZ> pool = lifted;
    PolyZ rem = fz;
    size_t subset_size = 1;
    while (!pool.empty() && 2 * subset_size <= pool.size()) {
        bool found = false;
        std::vector<size_t> idx(subset_size);
        for (size_t i = 0; i < subset_size; ++i) idx[i] = i;
        do {
            // candidate = lc(rem) * prod pool[idx] mod p^k, symmetric range
            PolyZ cand = PolyZ({rem.lc()});
            for (size_t i : idx) cand = z_mod(z_mul(cand, pool[i]), pk);
            cand = z_mod_sym(cand, pk);
            // cheap test first: the constant coefficient must divide lc * f(0)
            bool plausible = true;
            if (!rem.c.empty() && rem.c[0] != 0) {
                Int c0 = cand.coeff(0);
                if (c0 == 0)
                    plausible = false;
                else
                    plausible = mpz_divisible_p(Int(rem.c[0] * rem.lc()).get_mpz_t(), c0.get_mpz_t());
            }
            PolyZ quotient;
            if (plausible) {
                PolyZ prim = z_primitive(cand);
                if (z_divides(prim, rem, &quotient)) {
                    out.push_back(polyz_to_polyq(prim).monic());
                    rem = z_primitive(quotient);
                    std::vector<PolyZ> next_pool;
                    std::vector<char> used(pool.size(), 0);
                    for (size_t i : idx) used[i] = 1;
                    for (size_t i = 0; i < pool.size(); ++i)
                        if (!used[i]) next_pool.push_back(pool[i]);
                    pool.swap(next_pool);
                    found = true;
                    break;
                }
            }
        } while (next_combination(idx, pool.size()));
        if (!found) ++subset_size;
    }
    if (rem.degree() >= 1) out.push_back(polyz_to_polyq(rem).monic());
    return out;
}

// Yun's squarefree decomposition over Q; input nonconstant.
std::vector<std::pair<PolyQ, unsigned>> squarefree_decomposition_q(const PolyQ& f) {
    std::vector<std::pair<PolyQ, unsigned>> out;
    PolyQ a = f.monic();
    PolyQ g = poly_gcd_q(a, a.derivative());
    if (g.degree() == 0) {
        out.emplace_back(a, 1);
        return out;
    }
    PolyQ w = poly_divexact(a, g);
    PolyQ y = poly_divexact(a.derivative(), g);
    PolyQ z = y - w.derivative();
    unsigned i = 1;
    while (!z.is_zero()) {
        PolyQ h = poly_gcd_q(w, z);
        if (h.degree() >= 1) out.emplace_back(h.monic(), i);
        w = poly_divexact(w, h);
        y = poly_divexact(z, h);
        z = y - w.derivative();
        ++i;
    }
    if (w.degree() >= 1) out.emplace_back(w.monic(), i);
    return out;
}

} // namespace

std::vector<std::pair<PolyFp, unsigned>> factor_mod_p(const PolyFp& f) {
    if (f.is_zero()) fail(errc::zero_polynomial, "factor_mod_p of zero");
    if (!is_prime_u64(f.modulus())) fail(errc::not_prime, "modulus is not prime");
    std::vector<std::pair<PolyFp, unsigned>> out;
    if (f.degree() < 1) return out;
    auto sqf = fp_squarefree_decomposition(fp_monic(f));
    for (const auto& [part, mult] : sqf) {
        for (PolyFp& irr : fp_factor_squarefree(part)) out.emplace_back(std::move(irr), mult);
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return fp_pair_cmp(a, b) < 0; });
    // verify the product, multiplicities included
    PolyFp prod = PolyFp::constant(f.modulus(), f.lc());
    for (const auto& [g, mult] : out)
        for (unsigned i = 0; i < mult; ++i) prod = fp_mul(prod, g);
    engine_check(prod == f, "factor_mod_p product mismatch");
    return out;
}

std::vector<PolyZ> hensel_lift(const PolyQ& f, const std::vector<PolyFp>& factors, unsigned k) {
    if (f.is_zero()) fail(errc::zero_polynomial, "hensel_lift of zero");
    if (factors.empty()) fail(errc::invalid_argument, "no factors to lift");
    if (k == 0) fail(errc::invalid_argument, "target precision must be at least p^1");
    uint64_t p = factors[0].modulus();
    if (!is_prime_u64(p)) fail(errc::not_prime, "modulus is not prime");
    for (const PolyFp& g : factors)
        if (g.modulus() != p) fail(errc::invalid_argument, "mixed moduli in factor list");
    // f must have p-integral coefficients
    for (const Rat& q : f.coeffs())
        if (mpz_divisible_ui_p(q.get_den().get_mpz_t(), static_cast<unsigned long>(p)))
            fail(errc::invalid_argument, "denominator of f not invertible mod p");
    Int den(1);
    for (const Rat& q : f.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den().get_mpz_t());
    // scale away denominators; they are units mod p^k, so fold them into f
    Int pk;
    mpz_ui_pow_ui(pk.get_mpz_t(), static_cast<unsigned long>(p), k);
    Int deninv;
    engine_check(mpz_invert(deninv.get_mpz_t(), den.get_mpz_t(), pk.get_mpz_t()) != 0,
                 "denominator not invertible mod p^k");
    std::vector<Int> zc;
    for (const Rat& q : f.coeffs()) {
        Rat scaled = q * Rat(den);
        zc.push_back(scaled.get_num() * deninv);
    }
    PolyZ fz = z_mod(PolyZ(std::move(zc)), pk);
    if (fz.degree() != f.degree()) fail(errc::invalid_argument, "leading coefficient of f vanishes mod p^k");
    std::vector<PolyZ> lifted = hensel_lift_z(fz, factors, p, k);
    // final verification mod p^k
    PolyZ prod = PolyZ({fz.lc()});
    for (const PolyZ& g : lifted) prod = z_mod(z_mul(prod, g), pk);
    engine_check(z_mod(z_sub(prod, fz), pk).is_zero(), "hensel product mismatch");
    return lifted;
}

std::vector<std::pair<PolyQ, unsigned>> factor_q(const PolyQ& f) {
    if (f.is_zero()) fail(errc::zero_polynomial, "factor_q of zero");
    std::vector<std::pair<PolyQ, unsigned>> out;
    if (f.degree() < 1) return out;
    for (const auto& [part, mult] : squarefree_decomposition_q(f)) {
        PolyZ pz = polyq_to_polyz_primitive(part);
        for (PolyQ& irr : factor_squarefree_z(pz)) out.emplace_back(std::move(irr), mult);
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        int c = poly_cmp(a.first, b.first);
        if (c != 0) return c < 0;
        return a.second < b.second;
    });
    // exactness: lc * prod factor^mult == f
    PolyQ prod = PolyQ::constant(f.lc());
    for (const auto& [g, mult] : out)
        for (unsigned i = 0; i < mult; ++i) prod = prod * g;
    engine_check(prod == f, "factor_q product mismatch");
    return out;
}

bool is_irreducible_q(const PolyQ& f) {
    if (f.degree() < 1) return false;
    auto fac = factor_q(f);
    return fac.size() == 1 && fac[0].second == 1;
}

} // namespace boolat::polycore
