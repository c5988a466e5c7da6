#include "boolat/error.hpp"

namespace boolat {

const char* errc_name(errc c) {
    switch (c) {
    case errc::zero_polynomial: return "ZeroPolynomial";
    case errc::not_coprime: return "NotCoprime";
    case errc::not_squarefree_mod_p: return "NotSquarefreeModP";
    case errc::not_irreducible: return "NotIrreducible";
    case errc::not_monic: return "NotMonic";
    case errc::not_a_factor: return "NotAFactor";
    case errc::degree_too_large: return "DegreeTooLarge";
    case errc::minimal_extension: return "MinimalExtension";
    case errc::not_boolean: return "NotBoolean";
    case errc::not_galois: return "NotGalois";
    case errc::not_a_poset: return "NotAPoset";
    case errc::not_a_lattice: return "NotALattice";
    case errc::no_bounded_ends: return "NoBoundedEnds";
    case errc::not_distributive: return "NotDistributive";
    case errc::not_in_interval: return "NotInInterval";
    case errc::not_a_group: return "NotAGroup";
    case errc::order_too_large: return "OrderTooLarge";
    case errc::internal_disagreement: return "InternalDisagreement";
    case errc::parse_error: return "ParseError";
    case errc::not_prime: return "NotPrime";
    case errc::invalid_argument: return "InvalidArgument";
    }
    return "UnknownError";
}

} // namespace boolat
