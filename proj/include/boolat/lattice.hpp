#ifndef BOOLAT_LATTICE_HPP
#define BOOLAT_LATTICE_HPP

#include <boost/dynamic_bitset.hpp>

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "boolat/error.hpp"

namespace boolat::latcore {

using Bitset = boost::dynamic_bitset<>;

// Finite bounded lattice: reflexive partial order plus meet/join tables.
// Construction validates poset axioms, unique bottom/top, and the existence of
// all meets and joins (NotAPoset / NoBoundedEnds / NotALattice).
class FiniteLattice {
public:
    // pairs are (i, j) meaning element i <= element j; the reflexive-transitive
    // closure is taken automatically.
    static FiniteLattice from_leq(std::vector<std::string> labels,
                                  const std::vector<std::pair<size_t, size_t>>& pairs);

    size_t size() const { return m_; }
    const std::vector<std::string>& labels() const { return labels_; }
    bool leq(size_t a, size_t b) const { return up_[a].test(b); }
    size_t meet(size_t a, size_t b) const { return meet_[a * m_ + b]; }
    size_t join(size_t a, size_t b) const { return join_[a * m_ + b]; }
    size_t bottom() const { return bottom_; }
    size_t top() const { return top_; }
    // b covers a: a < b with nothing strictly between.
    bool covers(size_t a, size_t b) const;
    const Bitset& up_set(size_t a) const { return up_[a]; }      // {b : a <= b}
    const Bitset& down_set(size_t a) const { return down_[a]; }  // {b : b <= a}
    std::vector<std::pair<size_t, size_t>> cover_pairs() const;

private:
    FiniteLattice() = default;
    void build_tables();

    size_t m_ = 0;
    std::vector<std::string> labels_;
    std::vector<Bitset> up_, down_;
    std::vector<uint32_t> meet_, join_;
    size_t bottom_ = 0, top_ = 0;
};

std::vector<size_t> atoms(const FiniteLattice& l);
std::vector<size_t> coatoms(const FiniteLattice& l);

struct DistributivityResult {
    bool distributive;
    // violating triple (x, y, z) with x ^ (y v z) != (x ^ y) v (x ^ z)
    std::array<size_t, 3> witness{};
};
DistributivityResult is_distributive(const FiniteLattice& l);

std::vector<size_t> complements_of(const FiniteLattice& l, size_t t);

// Three equivalent decision routes computed and compared; disagreement throws
// InternalDisagreement.
bool is_boolean(const FiniteLattice& l);

std::vector<size_t> join_irreducibles(const FiniteLattice& l);
std::vector<size_t> meet_irreducibles(const FiniteLattice& l);

struct FactorialResult {
    enum class Kind { Unique, NoRepresentation, Ambiguous } kind;
    std::vector<size_t> rep;   // the unique representation (atom indices)
    std::vector<size_t> rep2;  // second representation when ambiguous
};
// Irredundant representations of t as a join of atoms, enumerated in
// increasing subset size.  Dually with `dual_sense` = true (meets of coatoms).
FactorialResult factorial_decomposition(const FiniteLattice& l, size_t t, bool dual_sense = false);

bool is_factorial(const FiniteLattice& l);
bool is_cofactorial(const FiniteLattice& l);

bool is_atomistic(const FiniteLattice& l);
bool is_coatomistic(const FiniteLattice& l);

bool jordan_holder(const FiniteLattice& l);
size_t length(const FiniteLattice& l);

struct UccResult {
    bool holds;
    std::pair<size_t, size_t> witness{};  // (T, U) with T^U covered by T but U not covered by TvU
};
UccResult ucc_holds(const FiniteLattice& l);

// Size of the irredundant meet-irreducible decomposition of bottom.
// Requires a distributive lattice (NotDistributive otherwise).
size_t goldie_dimension(const FiniteLattice& l);

// Recursive Boolean test: peel an atom U with a complementary T, check
// [bottom,T] u [U,top] covers everything, the join-with-U map is a bijection
// onto [U,top], and recurse on [bottom,T].  Independent of is_boolean.
bool boolean_recursive(const FiniteLattice& l);

FiniteLattice interval(const FiniteLattice& l, size_t a, size_t b);

// Complement of v inside [a, b] of a Boolean lattice, computed both by the
// closed formula a v (b ^ complement(v)) and by direct search; the two must
// coincide.  Throws NotInInterval / NotBoolean.
size_t relative_complement(const FiniteLattice& l, size_t a, size_t b, size_t v);

FiniteLattice dual(const FiniteLattice& l);

struct LatticeReport {
    size_t size;
    size_t length;
    std::vector<size_t> atoms, coatoms;
    bool is_lattice;
    bool is_distributive, is_atomistic, is_coatomistic;
    bool is_factorial, is_cofactorial, is_boolean;
    bool jordan_holder, ucc;
    std::optional<std::array<size_t, 3>> distributivity_witness;
    std::optional<std::pair<size_t, size_t>> ucc_witness;
    std::optional<size_t> goldie_dimension;  // absent when not distributive
    std::vector<std::vector<size_t>> complements;
};
LatticeReport build_report(const FiniteLattice& l);

// JSON format {"elements": [...], "leq": [[i,j], ...]} where leq entries are
// indices or label strings.  Throws ParseError on malformed input.
FiniteLattice lattice_from_json(const std::string& json_text);
std::string lattice_to_json(const FiniteLattice& l);

// Hasse diagram: cover edges only, atoms and coatoms styled distinctly.
std::string lattice_to_dot(const FiniteLattice& l);

} // namespace boolat::latcore

#endif
