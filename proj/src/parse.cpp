#include "boolat/parse.hpp"

#include <cctype>

#include "boolat/error.hpp"

namespace boolat::polycore {

namespace {

// poly  := [sign] term (sign term)*
// term  := coeff ['*'] power | power
// power := 'X' ['^' uint]
// coeff := uint ['/' uint]
class Parser {
public:
    explicit Parser(const std::string& s) : s_(s) {}

    PolyQ parse() {
        PolyQ acc;
        skip_ws();
        if (at_end()) fail(errc::parse_error, "empty polynomial");
        bool negative = eat_sign();
        acc = acc + term(negative);
        skip_ws();
        while (!at_end()) {
            char c = peek();
            if (c != '+' && c != '-') fail(errc::parse_error, err_context("expected '+' or '-'"));
            ++pos_;
            skip_ws();
            acc = acc + term(c == '-');
            skip_ws();
        }
        return acc;
    }

private:
    bool at_end() const { return pos_ >= s_.size(); }
    char peek() const { return s_[pos_]; }
    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }

    bool eat_sign() {
        if (!at_end() && (peek() == '+' || peek() == '-')) {
            bool neg = peek() == '-';
            ++pos_;
            skip_ws();
            return neg;
        }
        return false;
    }

    std::string err_context(const std::string& msg) const {
        return msg + " at position " + std::to_string(pos_) + " in '" + s_ + "'";
    }

    Int integer() {
        skip_ws();
        size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (pos_ == start) fail(errc::parse_error, err_context("expected an integer"));
        return Int(s_.substr(start, pos_ - start));
    }

    PolyQ term(bool negative) {
        skip_ws();
        if (at_end()) fail(errc::parse_error, err_context("dangling sign"));
        Rat coeff(1);
        bool have_coeff = false;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            Int num = integer();
            Int den(1);
            skip_ws();
            if (!at_end() && peek() == '/') {
                ++pos_;
                den = integer();
                if (den == 0) fail(errc::parse_error, err_context("zero denominator"));
            }
            coeff = Rat(num, den);
            coeff.canonicalize();
            have_coeff = true;
            skip_ws();
            if (!at_end() && peek() == '*') {
                ++pos_;
                skip_ws();
                if (at_end() || peek() != 'X') fail(errc::parse_error, err_context("expected X after '*'"));
            }
        }
        size_t power = 0;
        if (!at_end() && peek() == 'X') {
            ++pos_;
            power = 1;
            skip_ws();
            if (!at_end() && peek() == '^') {
                ++pos_;
                Int e = integer();
                if (e < 0 || e > 4096) fail(errc::parse_error, err_context("exponent out of range"));
                power = e.get_ui();
            }
        } else if (!have_coeff) {
            fail(errc::parse_error, err_context("expected a coefficient or X"));
        }
        if (negative) coeff = -coeff;
        return PolyQ::monomial(coeff, power);
    }

    const std::string& s_;
    size_t pos_ = 0;
};

} // namespace

PolyQ parse_polyq(const std::string& text) { return Parser(text).parse(); }

} // namespace boolat::polycore
