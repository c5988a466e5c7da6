#include "boolat/lattice.hpp"

#include <algorithm>
#include <array>
#include <map>

namespace boolat::latcore {

FiniteLattice FiniteLattice::from_leq(std::vector<std::string> labels,
                                      const std::vector<std::pair<size_t, size_t>>& pairs) {
    FiniteLattice l;
    l.m_ = labels.size();
    l.labels_ = std::move(labels);
    if (l.m_ == 0) fail(errc::invalid_argument, "empty element set");
    l.up_.assign(l.m_, Bitset(l.m_));
    for (size_t i = 0; i < l.m_; ++i) l.up_[i].set(i);
    for (const auto& [a, b] : pairs) {
        if (a >= l.m_ || b >= l.m_) fail(errc::invalid_argument, "leq pair out of range");
        l.up_[a].set(b);
    }
    // reflexive-transitive closure (Warshall over bitset rows)
    for (size_t k = 0; k < l.m_; ++k)
        for (size_t i = 0; i < l.m_; ++i)
            if (l.up_[i].test(k)) l.up_[i] |= l.up_[k];
    // antisymmetry
    for (size_t i = 0; i < l.m_; ++i)
        for (size_t j = i + 1; j < l.m_; ++j)
            if (l.up_[i].test(j) && l.up_[j].test(i))
                fail(errc::not_a_poset, "antisymmetry violated between '" + l.labels_[i] + "' and '" +
                                            l.labels_[j] + "'");
    l.down_.assign(l.m_, Bitset(l.m_));
    for (size_t i = 0; i < l.m_; ++i)
        for (size_t j = 0; j < l.m_; ++j)
            if (l.up_[i].test(j)) l.down_[j].set(i);
    // unique bottom and top
    size_t bcount = 0, tcount = 0;
    for (size_t i = 0; i < l.m_; ++i) {
        if (l.up_[i].count() == l.m_) {
            l.bottom_ = i;
            ++bcount;
        }
        if (l.down_[i].count() == l.m_) {
            l.top_ = i;
            ++tcount;
        }
    }
    if (bcount != 1 || tcount != 1)
        fail(errc::no_bounded_ends, "poset lacks a unique bottom or top element");
    l.build_tables();
    return l;
}

void FiniteLattice::build_tables() {
    meet_.assign(m_ * m_, 0);
    join_.assign(m_ * m_, 0);
    Bitset tmp(m_);
    for (size_t a = 0; a < m_; ++a) {
        for (size_t b = a; b < m_; ++b) {
            // meet: maximum of down(a) & down(b)
            tmp = down_[a] & down_[b];
            size_t found = m_;
            for (size_t z = tmp.find_first(); z != Bitset::npos; z = tmp.find_next(z)) {
                if (tmp.is_subset_of(down_[z])) {
                    found = z;
                    break;
                }
            }
            if (found == m_)
                fail(errc::not_a_lattice, "no meet for '" + labels_[a] + "' and '" + labels_[b] + "'");
            meet_[a * m_ + b] = meet_[b * m_ + a] = static_cast<uint32_t>(found);
            // join: minimum of up(a) & up(b)
            tmp = up_[a] & up_[b];
            found = m_;
            for (size_t z = tmp.find_first(); z != Bitset::npos; z = tmp.find_next(z)) {
                if (tmp.is_subset_of(up_[z])) {
                    found = z;
                    break;
                }
            }
            if (found == m_)
                fail(errc::not_a_lattice, "no join for '" + labels_[a] + "' and '" + labels_[b] + "'");
            join_[a * m_ + b] = join_[b * m_ + a] = static_cast<uint32_t>(found);
        }
    }
}

bool FiniteLattice::covers(size_t a, size_t b) const {
    if (a == b || !leq(a, b)) return false;
    Bitset between = up_[a] & down_[b];
    return between.count() == 2;  // exactly a and b
}

std::vector<std::pair<size_t, size_t>> FiniteLattice::cover_pairs() const {
    std::vector<std::pair<size_t, size_t>> out;
    for (size_t a = 0; a < m_; ++a)
        for (size_t b = 0; b < m_; ++b)
            if (covers(a, b)) out.emplace_back(a, b);
    return out;
}

std::vector<size_t> atoms(const FiniteLattice& l) {
    std::vector<size_t> out;
    for (size_t i = 0; i < l.size(); ++i)
        if (l.covers(l.bottom(), i)) out.push_back(i);
    return out;
}

std::vector<size_t> coatoms(const FiniteLattice& l) {
    std::vector<size_t> out;
    for (size_t i = 0; i < l.size(); ++i)
        if (l.covers(i, l.top())) out.push_back(i);
    return out;
}

DistributivityResult is_distributive(const FiniteLattice& l) {
    size_t m = l.size();
    for (size_t x = 0; x < m; ++x)
        for (size_t y = 0; y < m; ++y)
            for (size_t z = 0; z < m; ++z) {
                size_t lhs = l.meet(x, l.join(y, z));
                size_t rhs = l.join(l.meet(x, y), l.meet(x, z));
                if (lhs != rhs) return {false, {x, y, z}};
            }
    return {true, {}};
}

std::vector<size_t> complements_of(const FiniteLattice& l, size_t t) {
    std::vector<size_t> out;
    for (size_t u = 0; u < l.size(); ++u)
        if (l.meet(t, u) == l.bottom() && l.join(t, u) == l.top()) out.push_back(u);
    if (is_distributive(l).distributive)
        engine_check(out.size() <= 1, "multiple complements in a distributive lattice");
    return out;
}

std::vector<size_t> join_irreducibles(const FiniteLattice& l) {
    std::vector<size_t> out;
    size_t m = l.size();
    for (size_t t = 0; t < m; ++t) {
        if (t == l.bottom()) continue;
        bool reducible = false;
        for (size_t a = 0; a < m && !reducible; ++a) {
            if (!l.leq(a, t) || a == t) continue;
            for (size_t b = a + 1; b < m; ++b) {
                if (!l.leq(b, t) || b == t) continue;
                if (l.join(a, b) == t) {
                    reducible = true;
                    break;
                }
            }
        }
        if (!reducible) out.push_back(t);
    }
    return out;
}

std::vector<size_t> meet_irreducibles(const FiniteLattice& l) {
    std::vector<size_t> out;
    size_t m = l.size();
    for (size_t t = 0; t < m; ++t) {
        if (t == l.top()) continue;
        bool reducible = false;
        for (size_t a = 0; a < m && !reducible; ++a) {
            if (!l.leq(t, a) || a == t) continue;
            for (size_t b = a + 1; b < m; ++b) {
                if (!l.leq(t, b) || b == t) continue;
                if (l.meet(a, b) == t) {
                    reducible = true;
                    break;
                }
            }
        }
        if (!reducible) out.push_back(t);
    }
    return out;
}

namespace {

bool raw_distributive(const FiniteLattice& l) { return is_distributive(l).distributive; }

bool raw_complemented(const FiniteLattice& l) {
    for (size_t t = 0; t < l.size(); ++t) {
        bool has = false;
        for (size_t u = 0; u < l.size() && !has; ++u)
            has = l.meet(t, u) == l.bottom() && l.join(t, u) == l.top();
        if (!has) return false;
    }
    return true;
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

} // namespace

FactorialResult factorial_decomposition(const FiniteLattice& l, size_t t, bool dual_sense) {
    std::vector<size_t> gens = dual_sense ? coatoms(l) : atoms(l);
    size_t neutral = dual_sense ? l.top() : l.bottom();
    auto combine = [&](size_t a, size_t b) { return dual_sense ? l.meet(a, b) : l.join(a, b); };

    FactorialResult res;
    res.kind = FactorialResult::Kind::NoRepresentation;
    std::vector<std::vector<size_t>> found;
    for (size_t k = 0; k <= gens.size(); ++k) {
        std::vector<size_t> idx(k);
        for (size_t i = 0; i < k; ++i) idx[i] = i;
        bool more = true;
        while (more && k > 0 ? true : k == 0) {
            std::vector<size_t> subset;
            subset.reserve(k);
            size_t acc = neutral;
            for (size_t i : idx) {
                subset.push_back(gens[i]);
                acc = combine(acc, gens[i]);
            }
            if (acc == t) {
                // irredundant: dropping any generator changes the result
                bool irredundant = true;
                for (size_t drop = 0; drop < subset.size() && irredundant; ++drop) {
                    size_t acc2 = neutral;
                    for (size_t i = 0; i < subset.size(); ++i)
                        if (i != drop) acc2 = combine(acc2, subset[i]);
                    if (acc2 == t) irredundant = false;
                }
                if (irredundant) {
                    found.push_back(subset);
                    if (found.size() == 2) {
                        res.kind = FactorialResult::Kind::Ambiguous;
                        res.rep = found[0];
                        res.rep2 = found[1];
                        return res;
                    }
                }
            }
            if (k == 0) break;
            more = next_combination(idx, gens.size());
        }
    }
    if (found.size() == 1) {
        res.kind = FactorialResult::Kind::Unique;
        res.rep = found[0];
    }
    return res;
}

namespace {

bool raw_factorial(const FiniteLattice& l, bool dual_sense) {
    for (size_t t = 0; t < l.size(); ++t)
        if (factorial_decomposition(l, t, dual_sense).kind != FactorialResult::Kind::Unique) return false;
    return true;
}

// Boolean, route (i): distributive and every element complemented.
// Route (ii): distributive with 2^length elements and length = #atoms.
// Route (iii): distributive and the join-irreducibles are exactly the atoms.
std::array<bool, 3> boolean_routes(const FiniteLattice& l) {
    bool dist = raw_distributive(l);
    bool r1 = dist && raw_complemented(l);
    size_t len = length(l);
    bool r2 = dist && len == atoms(l).size() && (len < 63 && l.size() == (size_t(1) << len));
    std::vector<size_t> ji = join_irreducibles(l);
    std::vector<size_t> at = atoms(l);
    std::sort(ji.begin(), ji.end());
    std::sort(at.begin(), at.end());
    bool r3 = dist && ji == at;
    return {r1, r2, r3};
}

} // namespace

bool is_boolean(const FiniteLattice& l) {
    auto [r1, r2, r3] = boolean_routes(l);
    engine_check(r1 == r2 && r2 == r3, "boolean decision routes disagree");
    return r1;
}

bool is_factorial(const FiniteLattice& l) {
    bool f = raw_factorial(l, false);
    engine_check(f == raw_factorial(l, true), "factorial/co-factorial disagree");
    engine_check(f == is_boolean(l), "factorial disagrees with boolean");
    return f;
}

bool is_cofactorial(const FiniteLattice& l) {
    bool f = raw_factorial(l, true);
    engine_check(f == raw_factorial(l, false), "co-factorial/factorial disagree");
    engine_check(f == is_boolean(l), "co-factorial disagrees with boolean");
    return f;
}

bool is_atomistic(const FiniteLattice& l) {
    std::vector<size_t> at = atoms(l);
    for (size_t t = 0; t < l.size(); ++t) {
        size_t acc = l.bottom();
        for (size_t a : at)
            if (l.leq(a, t)) acc = l.join(acc, a);
        if (acc != t) return false;
    }
    return true;
}

bool is_coatomistic(const FiniteLattice& l) {
    std::vector<size_t> ca = coatoms(l);
    for (size_t t = 0; t < l.size(); ++t) {
        size_t acc = l.top();
        for (size_t c : ca)
            if (l.leq(t, c)) acc = l.meet(acc, c);
        if (acc != t) return false;
    }
    return true;
}

namespace {

// min/max saturated-chain lengths from a to every element above it.
void chain_lengths(const FiniteLattice& l, size_t a, std::vector<long>& mn, std::vector<long>& mx) {
    size_t m = l.size();
    mn.assign(m, -1);
    mx.assign(m, -1);
    mn[a] = mx[a] = 0;
    // process in an order compatible with the partial order: sort by |down|
    std::vector<size_t> order;
    for (size_t t = 0; t < m; ++t)
        if (l.leq(a, t)) order.push_back(t);
    std::sort(order.begin(), order.end(),
              [&](size_t x, size_t y) { return l.down_set(x).count() < l.down_set(y).count(); });
    for (size_t t : order) {
        if (t == a) continue;
        for (size_t s : order) {
            if (s == t || !l.covers(s, t)) continue;
            if (mn[s] < 0) continue;
            if (mn[t] < 0 || mn[s] + 1 < mn[t]) mn[t] = mn[s] + 1;
            if (mx[s] + 1 > mx[t]) mx[t] = mx[s] + 1;
        }
    }
}

} // namespace

bool jordan_holder(const FiniteLattice& l) {
    std::vector<long> mn, mx;
    for (size_t a = 0; a < l.size(); ++a) {
        chain_lengths(l, a, mn, mx);
        for (size_t b = 0; b < l.size(); ++b)
            if (l.leq(a, b) && mn[b] != mx[b]) return false;
    }
    return true;
}

size_t length(const FiniteLattice& l) {
    std::vector<long> mn, mx;
    chain_lengths(l, l.bottom(), mn, mx);
    return static_cast<size_t>(mx[l.top()]);
}

UccResult ucc_holds(const FiniteLattice& l) {
    for (size_t t = 0; t < l.size(); ++t)
        for (size_t u = 0; u < l.size(); ++u) {
            if (l.covers(l.meet(t, u), t) && !l.covers(u, l.join(t, u))) return {false, {t, u}};
        }
    return {true, {}};
}

size_t goldie_dimension(const FiniteLattice& l) {
    if (!is_distributive(l).distributive)
        fail(errc::not_distributive, "goldie dimension requires a distributive lattice");
    std::vector<size_t> mi = meet_irreducibles(l);
    std::vector<std::vector<size_t>> decs;
    for (size_t k = 0; k <= mi.size(); ++k) {
        std::vector<size_t> idx(k);
        for (size_t i = 0; i < k; ++i) idx[i] = i;
        bool more = true;
        while (more && k > 0 ? true : k == 0) {
            size_t acc = l.top();
            for (size_t i : idx) acc = l.meet(acc, mi[i]);
            if (acc == l.bottom()) {
                bool irredundant = true;
                for (size_t drop = 0; drop < k && irredundant; ++drop) {
                    size_t acc2 = l.top();
                    for (size_t i = 0; i < k; ++i)
                        if (i != drop) acc2 = l.meet(acc2, mi[idx[i]]);
                    if (acc2 == l.bottom()) irredundant = false;
                }
                if (irredundant) {
                    std::vector<size_t> dec;
                    for (size_t i : idx) dec.push_back(mi[i]);
                    decs.push_back(dec);
                }
            }
            if (k == 0) break;
            more = next_combination(idx, mi.size());
        }
    }
    engine_check(decs.size() == 1, "irredundant meet-irreducible decomposition of bottom not unique");
    return decs[0].size();
}

namespace {

bool boolean_recursive_impl(const FiniteLattice& l, const Bitset& elems,
                            std::map<std::vector<Bitset::block_type>, bool>& memo) {
    size_t count = elems.count();
    if (count <= 2) return true;
    std::vector<Bitset::block_type> key(elems.num_blocks());
    boost::to_block_range(elems, key.begin());
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;

    // bottom and top of the interval
    size_t bot = Bitset::npos, top = Bitset::npos;
    for (size_t x = elems.find_first(); x != Bitset::npos; x = elems.find_next(x)) {
        if (bot == Bitset::npos || l.leq(x, bot)) bot = x;
        if (top == Bitset::npos || l.leq(top, x)) top = x;
    }

    bool ok = false;
    for (size_t u = elems.find_first(); u != Bitset::npos && !ok; u = elems.find_next(u)) {
        if (u == bot || u == top) continue;
        // u must be an atom of the interval
        bool atom = true;
        for (size_t z = elems.find_first(); z != Bitset::npos; z = elems.find_next(z)) {
            if (z != bot && z != u && l.leq(z, u)) {
                atom = false;
                break;
            }
        }
        if (!atom) continue;
        for (size_t t = elems.find_first(); t != Bitset::npos && !ok; t = elems.find_next(t)) {
            if (t == bot || t == top) continue;
            // (1) every element lies below t or above u
            bool covers_all = true;
            for (size_t z = elems.find_first(); z != Bitset::npos; z = elems.find_next(z)) {
                if (!l.leq(z, t) && !l.leq(u, z)) {
                    covers_all = false;
                    break;
                }
            }
            if (!covers_all) continue;
            // (5) K -> u v K maps [bot, t] bijectively onto [u, top]
            std::vector<size_t> lower, upper;
            for (size_t z = elems.find_first(); z != Bitset::npos; z = elems.find_next(z)) {
                if (l.leq(z, t)) lower.push_back(z);
                if (l.leq(u, z)) upper.push_back(z);
            }
            if (lower.size() != upper.size()) continue;
            Bitset image(l.size());
            bool bij = true;
            for (size_t z : lower) {
                size_t w = l.join(u, z);
                if (!elems.test(w) || !l.leq(u, w) || image.test(w)) {
                    bij = false;
                    break;
                }
                image.set(w);
            }
            if (!bij || image.count() != upper.size()) continue;
            // (4) recurse on [bot, t]
            Bitset sub(l.size());
            for (size_t z : lower) sub.set(z);
            if (boolean_recursive_impl(l, sub, memo)) ok = true;
        }
    }
    memo[key] = ok;
    return ok;
}

} // namespace

bool boolean_recursive(const FiniteLattice& l) {
    Bitset all(l.size());
    all.set();
    std::map<std::vector<Bitset::block_type>, bool> memo;
    return boolean_recursive_impl(l, all, memo);
}

FiniteLattice interval(const FiniteLattice& l, size_t a, size_t b) {
    if (!l.leq(a, b)) fail(errc::not_in_interval, "interval endpoints not comparable");
    std::vector<size_t> elems;
    for (size_t z = 0; z < l.size(); ++z)
        if (l.leq(a, z) && l.leq(z, b)) elems.push_back(z);
    std::vector<std::string> labels;
    labels.reserve(elems.size());
    for (size_t z : elems) labels.push_back(l.labels()[z]);
    std::vector<std::pair<size_t, size_t>> pairs;
    for (size_t i = 0; i < elems.size(); ++i)
        for (size_t j = 0; j < elems.size(); ++j)
            if (l.leq(elems[i], elems[j])) pairs.emplace_back(i, j);
    return FiniteLattice::from_leq(std::move(labels), pairs);
}

size_t relative_complement(const FiniteLattice& l, size_t a, size_t b, size_t v) {
    if (!is_boolean(l)) fail(errc::not_boolean, "relative complements need a Boolean lattice");
    if (!(l.leq(a, v) && l.leq(v, b))) fail(errc::not_in_interval, "element outside the interval");
    std::vector<size_t> comp = complements_of(l, v);
    engine_check(comp.size() == 1, "boolean lattice element without unique complement");
    size_t formula = l.join(a, l.meet(b, comp[0]));
    // direct search within [a, b]
    size_t direct = l.size();
    for (size_t w = 0; w < l.size(); ++w) {
        if (!l.leq(a, w) || !l.leq(w, b)) continue;
        if (l.meet(v, w) == a && l.join(v, w) == b) {
            engine_check(direct == l.size(), "relative complement not unique");
            direct = w;
        }
    }
    engine_check(direct != l.size(), "relative complement missing in a Boolean interval");
    engine_check(direct == formula, "relative complement formula disagrees with direct search");
    return formula;
}

FiniteLattice dual(const FiniteLattice& l) {
    std::vector<std::pair<size_t, size_t>> pairs;
    for (size_t i = 0; i < l.size(); ++i)
        for (size_t j = 0; j < l.size(); ++j)
            if (l.leq(i, j)) pairs.emplace_back(j, i);
    FiniteLattice d = FiniteLattice::from_leq(l.labels(), pairs);
    engine_check(is_boolean(d) == is_boolean(l), "boolean verdict changed under duality");
    return d;
}

LatticeReport build_report(const FiniteLattice& l) {
    LatticeReport r;
    r.size = l.size();
    r.length = length(l);
    r.atoms = atoms(l);
    r.coatoms = coatoms(l);
    r.is_lattice = true;
    auto dist = is_distributive(l);
    r.is_distributive = dist.distributive;
    if (!dist.distributive) r.distributivity_witness = dist.witness;
    r.is_atomistic = is_atomistic(l);
    r.is_coatomistic = is_coatomistic(l);
    r.is_factorial = is_factorial(l);
    r.is_cofactorial = is_cofactorial(l);
    r.is_boolean = is_boolean(l);
    r.jordan_holder = jordan_holder(l);
    auto u = ucc_holds(l);
    r.ucc = u.holds;
    if (!u.holds) r.ucc_witness = u.witness;
    if (r.is_distributive) r.goldie_dimension = goldie_dimension(l);
    r.complements.resize(l.size());
    for (size_t t = 0; t < l.size(); ++t) r.complements[t] = complements_of(l, t);
    if (r.is_boolean) {
        engine_check(r.is_distributive && r.is_factorial, "boolean report inconsistency");
        engine_check(r.length < 63 && r.size == (size_t(1) << r.length), "boolean size != 2^length");
    }
    return r;
}

} // namespace boolat::latcore
