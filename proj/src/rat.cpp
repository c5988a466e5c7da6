#include "boolat/rat.hpp"

namespace boolat::polycore {

Rat rat_from_string(const std::string& s) {
    if (s.empty()) fail(errc::parse_error, "empty rational literal");
    size_t i = 0;
    auto digits = [&](size_t from) {
        size_t j = from;
        while (j < s.size() && s[j] >= '0' && s[j] <= '9') ++j;
        return j;
    };
    if (s[i] == '+' || s[i] == '-') ++i;
    size_t j = digits(i);
    if (j == i) fail(errc::parse_error, "bad rational literal '" + s + "'");
    if (j < s.size()) {
        if (s[j] != '/') fail(errc::parse_error, "bad rational literal '" + s + "'");
        size_t k = digits(j + 1);
        if (k == j + 1 || k != s.size()) fail(errc::parse_error, "bad rational literal '" + s + "'");
        if (Int(s.substr(j + 1)) == 0) fail(errc::parse_error, "zero denominator in '" + s + "'");
    }
    Rat q(s);
    q.canonicalize();
    return q;
}

std::string rat_to_string(const Rat& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

bool is_prime_u64(unsigned long long n) {
    Int z;
    mpz_set_ui(z.get_mpz_t(), static_cast<unsigned long>(n));
    return mpz_probab_prime_p(z.get_mpz_t(), 40) != 0;
}

} // namespace boolat::polycore
