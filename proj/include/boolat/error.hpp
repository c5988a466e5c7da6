#ifndef BOOLAT_ERROR_HPP
#define BOOLAT_ERROR_HPP

#include <stdexcept>
#include <string>

namespace boolat {

// Error kinds surfaced by the library.  The CLI maps any of these to exit
// code 2 with a one-line diagnostic on stderr.
enum class errc {
    zero_polynomial,
    not_coprime,
    not_squarefree_mod_p,
    not_irreducible,
    not_monic,
    not_a_factor,
    degree_too_large,
    minimal_extension,
    not_boolean,
    not_galois,
    not_a_poset,
    not_a_lattice,
    no_bounded_ends,
    not_distributive,
    not_in_interval,
    not_a_group,
    order_too_large,
    internal_disagreement,
    parse_error,
    not_prime,
    invalid_argument,
};

const char* errc_name(errc c);

class error : public std::runtime_error {
public:
    error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

// Internal consistency checks that must hold whenever the engine is correct.
// They stay on in release builds; a failure is a bug, not a user error.
inline void engine_check(bool ok, const std::string& what) {
    if (!ok) fail(errc::internal_disagreement, what);
}

} // namespace boolat

#endif
