#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

#include "wlpoly/errors.hpp"

namespace wlpoly {

// Exact coefficient field.  mpq_class keeps the canonical-form contract we
// rely on everywhere: reduced fraction, positive denominator, zero as 0/1.
using Int = mpz_class;
using Rat = mpq_class;

inline Int factorial(long n) {
    if (n < 0) throw std::invalid_argument("factorial: negative argument");
    Int r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

inline Int binomial(long n, long k) {
    if (n < 0 || k < 0 || k > n) return Int(0);
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return r;
}

/// n! / (n-k)!, computed exactly (the integer falling factorial).
inline Int falling_factorial(long n, long k) {
    if (k < 0 || k > n) throw std::invalid_argument("falling_factorial: bad range");
    Int r(1);
    for (long i = 0; i < k; ++i) r *= Int(n - i);
    return r;
}

inline Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

/// Parses "3", "-7/2", "0".  Throws std::invalid_argument on anything else.
inline Rat rat_from_string(const std::string& text) {
    const auto bad = [&] {
        return std::invalid_argument("not a rational number: '" + text + "'");
    };
    std::size_t i = 0;
    bool seen_digit = false, seen_slash = false;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
    for (; i < text.size(); ++i) {
        if (text[i] >= '0' && text[i] <= '9') {
            seen_digit = true;
        } else if (text[i] == '/' && seen_digit && !seen_slash) {
            seen_slash = true;
            seen_digit = false;
        } else {
            throw bad();
        }
    }
    if (!seen_digit) throw bad();
    Rat q;
    if (mpq_set_str(q.get_mpq_t(), text.c_str(), 10) != 0) throw bad();
    if (q.get_den() == 0) throw bad();
    q.canonicalize();
    return q;
}

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

/// "3/2" or "2"; the denominator is printed only when it is not 1.
inline std::string rat_to_string(const Rat& q) {
    return q.get_den() == 1 ? q.get_num().get_str() : q.get_str();
}

} // namespace wlpoly
