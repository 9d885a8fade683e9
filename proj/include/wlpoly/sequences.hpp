#pragma once

#include <vector>

#include "wlpoly/mpoly.hpp"

namespace wlpoly {

/**
 * Univariate polynomial families used throughout.  The symbolic families
 * (classical/modified Laguerre in alpha, Hermite) are memoized behind a
 * lock; readers only ever see fully constructed entries, so the generators
 * are safe to call concurrently.
 */

/// L_n with symbolic alpha: L_0 = 1, L_1 = -x+a+1,
/// n L_n = (2n-1+a-x) L_{n-1} - (n-1+a) L_{n-2}.
MPoly classical_laguerre(int n);

/// Monic Appell relative of L_n: l_0 = 1, l_1 = x+a,
/// l_n = (x+a-n+1) l_{n-1} + x(n-1) l_{n-2}.
MPoly modified_laguerre(int n);

/// Probabilists' normalization: He_0 = 1, He_1 = x,
/// He_n = x He_{n-1} - (n-1) He_{n-2}.
MPoly hermite(int n);

/// Monic Appell relative of the Jacobi family at fixed rational parameters:
/// (a0+b0-n+1) A_n = ((a0+b0-2n+2)x + a0-b0) A_{n-1} + (x^2-1)(n-1) A_{n-2},
/// run from A_0 = 1 (the n=1 step has a vanishing second term).  Throws
/// SingularParameter when a leading factor a0+b0-k+1 vanishes for some
/// step k <= n.
MPoly modified_jacobi(int n, const Rat& alpha0, const Rat& beta0);

/// Coefficients c_1, c_2, ... of log of the generating series; entries live
/// in the coefficient ring (x-degree 0).
struct AppellSpec {
    enum class Kind { modified_laguerre, hermite, custom };
    Kind kind = Kind::custom;
    std::vector<MPoly> c; // c[k-1] holds c_k
};

/// A_n = x A_{n-1} + Σ_{k=1}^{n} binom(n-1,k-1) c_k A_{n-k}, A_0 = 1.
/// Throws InsufficientCoefficients when fewer than n coefficients are given.
MPoly appell_from_coeffs(const AppellSpec& spec, int n);

/// Inverts the triangular relation z_n = c_n + Σ_{i=1}^{n-1} binom(n-1,i)
/// c_{n-i} z_i given z_0, ..., z_N with z_0 = 1 (else BadNormalization);
/// returns c_1, ..., c_N.
std::vector<MPoly> c_from_z(const std::vector<MPoly>& z);

} // namespace wlpoly
