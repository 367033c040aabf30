#include "reversive/exact_arith.hpp"

#include <cctype>

namespace reversive {

Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) {
        throw ZeroDivisor("rational with zero denominator");
    }
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Integer binomial(const Integer& r, long k) {
    if (k < 0) {
        return 0;
    }
    if (r >= 0 && r.fits_ulong_p()) {
        Integer out;
        mpz_bin_uiui(out.get_mpz_t(), r.get_ui(), static_cast<unsigned long>(k));
        return out;
    }
    // mpz_bin_ui implements the same generalized convention for negative r.
    Integer out;
    mpz_bin_ui(out.get_mpz_t(), r.get_mpz_t(), static_cast<unsigned long>(k));
    return out;
}

Integer binomial(long r, long k) { return binomial(Integer(r), k); }

Integer exact_div(const Integer& a, const Integer& b) {
    if (b == 0) {
        throw ZeroDivisor("exact_div by zero");
    }
    if (!mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t())) {
        throw DivisibilityViolation(to_string(b) + " does not divide " + to_string(a));
    }
    Integer q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

Integer to_integer(const Rational& q) {
    if (q.get_den() != 1) {
        throw NonIntegerCoefficient("value " + to_string(q) + " is not an integer");
    }
    return q.get_num();
}

std::string to_string(const Integer& z) { return z.get_str(); }

std::string to_string(const Rational& q) { return q.get_str(); }

Integer parse_integer(const std::string& text) {
    std::size_t i = 0;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
        ++i;
    }
    if (i == text.size()) {
        throw ParseError("expected an integer, got '" + text + "'");
    }
    for (std::size_t j = i; j < text.size(); ++j) {
        if (!std::isdigit(static_cast<unsigned char>(text[j]))) {
            throw ParseError("expected an integer, got '" + text + "'");
        }
    }
    return Integer(text[0] == '+' ? text.substr(1) : text, 10);
}

}  // namespace reversive
