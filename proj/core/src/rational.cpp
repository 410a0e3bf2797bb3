#include "hopfmzv/rational.hpp"

#include "hopfmzv/errors.hpp"

#include <cctype>

namespace hopfmzv {

std::string to_fraction_string(const Rational& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_display_string(const Rational& q) { return q.get_str(); }

namespace {

Integer parse_unsigned(std::string_view text, std::size_t offset) {
    if (text.empty())
        throw ParseError(offset, "expected digits");
    for (std::size_t i = 0; i < text.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(text[i])))
            throw ParseError(offset + i, "unexpected character '" + std::string(1, text[i]) + "' in number");
    return Integer(std::string(text));
}

} // namespace

Rational parse_rational(std::string_view text) {
    std::size_t pos = 0;
    bool negative = false;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
        negative = text[pos] == '-';
        ++pos;
    }
    const auto slash = text.find('/', pos);
    Integer num = parse_unsigned(text.substr(pos, slash == std::string_view::npos ? text.npos : slash - pos), pos);
    Integer den = 1;
    if (slash != std::string_view::npos) {
        den = parse_unsigned(text.substr(slash + 1), slash + 1);
        if (den == 0)
            throw ParseError(slash + 1, "zero denominator in \"" + std::string(text) + "\"");
    }
    Rational q(num, den);
    q.canonicalize();
    return negative ? Rational(-q) : q;
}

Integer factorial(unsigned n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Integer binomial(unsigned n, unsigned k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

} // namespace hopfmzv
