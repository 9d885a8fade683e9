#pragma once

#include <map>
#include <optional>
#include <string>

#include "wlpoly/rational.hpp"

namespace wlpoly {

enum class Var { x, alpha, beta };

/// Exponent triple of a single term, ordered lexicographically on (x, a, b).
struct Monomial {
    int x = 0;
    int a = 0;
    int b = 0;
    auto operator<=>(const Monomial&) const = default;
};

/**
 * Sparse multivariate polynomial in x, alpha, beta over exact rationals.
 *
 * Canonical form: the term map never stores a zero coefficient, so
 * structural equality of the maps is polynomial equality.  All operations
 * return canonical results.  Division is only ever by a nonzero rational
 * scalar; there is no polynomial division on this type.
 */
class MPoly {
public:
    using TermMap = std::map<Monomial, Rat>;

    MPoly() = default;
    MPoly(int value) : MPoly(Rat(value)) {}
    MPoly(const Int& value) : MPoly(Rat(value)) {}
    MPoly(const Rat& value) {
        if (value != 0) terms_.emplace(Monomial{}, value);
    }

    static MPoly variable(Var v);
    static MPoly monomial(const Monomial& m, const Rat& coeff);

    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }

    /// Degree in x; std::nullopt is the "minus infinity" degree of the zero
    /// polynomial.
    std::optional<int> degree_x() const;
    int degree_in(Var v) const; // -1 for the zero polynomial

    Rat coeff(const Monomial& m) const;
    /// The polynomial in alpha, beta multiplying x^k.
    MPoly coefficient_in_x(int k) const;

    bool is_constant() const;
    Rat constant_value() const; // requires is_constant()
    bool is_monic_in_x(int degree) const;
    bool integer_coefficients() const;

    MPoly operator-() const;
    MPoly& operator+=(const MPoly& o);
    MPoly& operator-=(const MPoly& o);
    MPoly& operator*=(const MPoly& o);
    MPoly& operator*=(const Rat& s);
    MPoly& operator/=(const Rat& s);

    friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
    friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
    friend MPoly operator*(const MPoly& a, const MPoly& b);
    friend MPoly operator*(MPoly a, const Rat& s) { return a *= s; }
    friend MPoly operator*(const Rat& s, MPoly a) { return a *= s; }
    friend MPoly operator/(MPoly a, const Rat& s) { return a /= s; }

    bool operator==(const MPoly&) const = default;

    MPoly derivative_x() const;
    MPoly substitute(Var v, const MPoly& value) const;
    MPoly pow(int exponent) const;

    /// "x^2 + 2*a*x + a^2 - a"; alpha prints as "a", beta as "b".
    std::string to_human() const;
    std::string to_latex() const;
    /// {"terms":[{"exp":[dx,da,db],"num":"...","den":"..."}]}, terms sorted
    /// by exponent triple descending.
    std::string to_json() const;
    static MPoly from_json(const std::string& text);

private:
    void add_term(const Monomial& m, const Rat& c);
    TermMap terms_;
};

inline MPoly var_x() { return MPoly::variable(Var::x); }
inline MPoly var_alpha() { return MPoly::variable(Var::alpha); }
inline MPoly var_beta() { return MPoly::variable(Var::beta); }

/// Divides a polynomial with integer coefficients by a nonzero integer,
/// checking every coefficient division leaves remainder zero.  Throws
/// InexactDivision otherwise — callers use this as a bug detector.
MPoly exact_divide_integral(const MPoly& p, const Int& divisor);

} // namespace wlpoly
