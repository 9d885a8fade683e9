#pragma once

#include <vector>

#include "wlpoly/rational.hpp"

namespace wlpoly {

enum class SolveKind { unique, underdetermined, infeasible };

/**
 * Result of exact Gaussian elimination on A x = b.
 *
 * unique/underdetermined: `solution` satisfies A x = b exactly; for the
 * underdetermined case it is the particular solution with every free
 * variable set to zero, and `free_columns` lists those variables as the
 * parameterized-solution witness.
 *
 * infeasible: `certificate` is a row-combination vector y with
 * yT A = 0 and yT b = certificate_value != 0 — the "0 = c" row produced
 * by elimination, traced back to the original rows.
 */
struct LinearSolveResult {
    SolveKind kind = SolveKind::unique;
    std::vector<Rat> solution;
    std::vector<std::size_t> free_columns;
    std::vector<Rat> certificate;
    Rat certificate_value;
};

using RatMatrix = std::vector<std::vector<Rat>>;

/// Throws DimensionMismatch when A is ragged or rows(A) != size(b).
LinearSolveResult solve_linear(const RatMatrix& a, const std::vector<Rat>& b);

} // namespace wlpoly
