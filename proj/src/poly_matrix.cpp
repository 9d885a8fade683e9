#include "wlpoly/poly_matrix.hpp"

#include "wlpoly/errors.hpp"

namespace wlpoly {

namespace {

/**
 * Exact multivariate division, used only inside the fraction-free
 * elimination where divisibility is guaranteed by the Sylvester identity.
 * Leading terms are taken in the map's lexicographic (x, a, b) order, which
 * is a monomial order, so repeated leading-term elimination terminates.
 */
MPoly divide_exact(const MPoly& num, const MPoly& den) {
    if (den.is_zero())
        throw InexactDivision("divide_exact: zero divisor");
    MPoly quotient;
    MPoly rem = num;
    const auto& lead_den = *den.terms().rbegin();
    while (!rem.is_zero()) {
        const auto& lead_rem = *rem.terms().rbegin();
        const Monomial d{lead_rem.first.x - lead_den.first.x,
                         lead_rem.first.a - lead_den.first.a,
                         lead_rem.first.b - lead_den.first.b};
        if (d.x < 0 || d.a < 0 || d.b < 0)
            throw InexactDivision("divide_exact: leading term not divisible");
        const MPoly step =
            MPoly::monomial(d, Rat(lead_rem.second / lead_den.second));
        quotient += step;
        rem -= step * den;
    }
    return quotient;
}

MPoly cofactor_rec(const PolyMatrix& m) {
    const int n = m.rows();
    if (n == 0) return MPoly(1);
    if (n == 1) return m.at(0, 0);
    if (n == 2)
        return m.at(0, 0) * m.at(1, 1) - m.at(0, 1) * m.at(1, 0);
    MPoly det;
    for (int j = 0; j < n; ++j) {
        if (m.at(0, j).is_zero()) continue;
        PolyMatrix minor(n - 1, n - 1);
        for (int i = 1; i < n; ++i) {
            int cc = 0;
            for (int c = 0; c < n; ++c) {
                if (c == j) continue;
                minor.at(i - 1, cc++) = m.at(i, c);
            }
        }
        MPoly term = m.at(0, j) * cofactor_rec(minor);
        if (j % 2 == 1) term = -term;
        det += term;
    }
    return det;
}

} // namespace

MPoly determinant_cofactor(const PolyMatrix& m) {
    if (m.rows() != m.cols())
        throw NotSquare("determinant: matrix is not square");
    return cofactor_rec(m);
}

MPoly determinant_fraction_free(const PolyMatrix& input) {
    if (input.rows() != input.cols())
        throw NotSquare("determinant: matrix is not square");
    const int n = input.rows();
    if (n == 0) return MPoly(1);
    PolyMatrix m = input;
    MPoly prev_pivot(1);
    bool negate = false;
    for (int k = 0; k + 1 < n; ++k) {
        if (m.at(k, k).is_zero()) {
            int swap_row = -1;
            for (int i = k + 1; i < n; ++i) {
                if (!m.at(i, k).is_zero()) {
                    swap_row = i;
                    break;
                }
            }
            if (swap_row < 0) return MPoly(); // singular
            for (int j = 0; j < n; ++j)
                std::swap(m.at(k, j), m.at(swap_row, j));
            negate = !negate;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                m.at(i, j) = divide_exact(
                    m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j),
                    prev_pivot);
            }
            m.at(i, k) = MPoly();
        }
        prev_pivot = m.at(k, k);
    }
    MPoly det = m.at(n - 1, n - 1);
    return negate ? -det : det;
}

MPoly determinant(const PolyMatrix& m) {
    if (m.rows() != m.cols())
        throw NotSquare("determinant: matrix is not square");
    return m.rows() <= 5 ? determinant_cofactor(m)
                         : determinant_fraction_free(m);
}

} // namespace wlpoly
