#pragma once

#include <gmpxx.h>

#include <cctype>
#include <string>
#include <string_view>

#include "qbel/error.hpp"

namespace qbel {

// Every value in this library is an exact rational; the axiom verdicts hinge
// on exact `=` and strict `>`, so floating point never enters the picture.
using Rational = mpq_class;

namespace rational_detail {

inline bool is_digit(char c) {
    return std::isdigit(static_cast<unsigned char>(c)) != 0;
}

inline mpz_class parse_integer(std::string_view text) {
    bool negative = false;
    std::size_t i = 0;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
        negative = (text[i] == '-');
        ++i;
    }
    if (i == text.size())
        throw input_error("bad integer literal: '" + std::string(text) + "'");
    mpz_class value = 0;
    for (; i < text.size(); ++i) {
        if (!is_digit(text[i]))
            throw input_error("bad integer literal: '" + std::string(text) + "'");
        value = value * 10 + (text[i] - '0');
    }
    return negative ? mpz_class(-value) : value;
}

inline std::string_view trim(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
        text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
        text.remove_suffix(1);
    return text;
}

} // namespace rational_detail

// Accepts "p/q", plain integers, and decimal strings ("0.25"); all three are
// converted exactly. Always returns a canonicalized rational.
inline Rational parse_rational(std::string_view text) {
    using namespace rational_detail;
    text = trim(text);
    if (text.empty())
        throw input_error("empty rational literal");

    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        const mpz_class num = parse_integer(text.substr(0, slash));
        const mpz_class den = parse_integer(text.substr(slash + 1));
        if (den == 0)
            throw input_error("zero denominator in '" + std::string(text) + "'");
        Rational r(num, den);
        r.canonicalize();
        return r;
    }

    bool negative = false;
    if (text.front() == '+' || text.front() == '-') {
        negative = (text.front() == '-');
        text.remove_prefix(1);
    }
    const auto dot = text.find('.');
    const std::string_view int_digits = text.substr(0, dot);
    const std::string_view frac_digits =
        dot == std::string_view::npos ? std::string_view{} : text.substr(dot + 1);
    if (int_digits.empty() && frac_digits.empty())
        throw input_error("bad rational literal: '" + std::string(text) + "'");

    mpz_class num = 0;
    mpz_class den = 1;
    for (char c : int_digits) {
        if (!is_digit(c))
            throw input_error("bad rational literal: '" + std::string(text) + "'");
        num = num * 10 + (c - '0');
    }
    for (char c : frac_digits) {
        if (!is_digit(c))
            throw input_error("bad rational literal: '" + std::string(text) + "'");
        num = num * 10 + (c - '0');
        den *= 10;
    }
    Rational r(num, den);
    r.canonicalize();
    if (negative)
        r = -r;
    return r;
}

// Canonical exact rendering: "p" when the denominator is 1, else "p/q".
inline std::string rational_string(const Rational& r) {
    return r.get_str();
}

// Rounded decimal rendering. Approximation only; meant for human-facing
// output next to the exact form.
inline std::string decimal_string(const Rational& r, int places = 6) {
    mpz_class scale = 1;
    for (int i = 0; i < places; ++i)
        scale *= 10;
    const mpz_class scaled = r.get_num() * scale;
    mpz_class quot, rem;
    mpz_tdiv_qr(quot.get_mpz_t(), rem.get_mpz_t(), scaled.get_mpz_t(),
                r.get_den().get_mpz_t());
    if (2 * abs(rem) >= r.get_den())
        quot += (sgn(scaled) >= 0 ? 1 : -1);

    const bool negative = quot < 0;
    std::string digits = mpz_class(abs(quot)).get_str();
    if (digits.size() <= static_cast<std::size_t>(places))
        digits.insert(0, static_cast<std::size_t>(places) + 1 - digits.size(), '0');
    digits.insert(digits.size() - static_cast<std::size_t>(places), ".");
    return negative ? "-" + digits : digits;
}

} // namespace qbel
