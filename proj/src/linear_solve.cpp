#include "wlpoly/linear_solve.hpp"

#include "wlpoly/errors.hpp"

namespace wlpoly {

LinearSolveResult solve_linear(const RatMatrix& a, const std::vector<Rat>& b) {
    const std::size_t rows = a.size();
    if (rows != b.size())
        throw DimensionMismatch("solve_linear: rows(A) != size(b)");
    const std::size_t cols = rows == 0 ? 0 : a[0].size();
    for (const auto& row : a) {
        if (row.size() != cols)
            throw DimensionMismatch("solve_linear: ragged matrix");
    }

    RatMatrix m = a;
    std::vector<Rat> rhs = b;
    // multipliers[i] tracks row i of M where the current system is M·(A|b);
    // it turns an inconsistent row into a certificate on the original rows.
    RatMatrix multipliers(rows, std::vector<Rat>(rows, Rat(0)));
    for (std::size_t i = 0; i < rows; ++i) multipliers[i][i] = 1;

    std::vector<std::size_t> pivot_col;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && m[pivot][col] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[pivot], m[rank]);
        std::swap(rhs[pivot], rhs[rank]);
        std::swap(multipliers[pivot], multipliers[rank]);

        const Rat inv = Rat(1) / m[rank][col];
        for (std::size_t j = col; j < cols; ++j) m[rank][j] *= inv;
        rhs[rank] *= inv;
        for (std::size_t j = 0; j < rows; ++j) multipliers[rank][j] *= inv;

        for (std::size_t i = 0; i < rows; ++i) {
            if (i == rank || m[i][col] == 0) continue;
            const Rat f = m[i][col];
            for (std::size_t j = col; j < cols; ++j) m[i][j] -= f * m[rank][j];
            rhs[i] -= f * rhs[rank];
            for (std::size_t j = 0; j < rows; ++j)
                multipliers[i][j] -= f * multipliers[rank][j];
        }
        pivot_col.push_back(col);
        ++rank;
    }

    LinearSolveResult out;
    for (std::size_t i = rank; i < rows; ++i) {
        if (rhs[i] != 0) {
            out.kind = SolveKind::infeasible;
            out.certificate = multipliers[i];
            out.certificate_value = rhs[i];
            return out;
        }
    }

    out.solution.assign(cols, Rat(0));
    for (std::size_t r = 0; r < rank; ++r) out.solution[pivot_col[r]] = rhs[r];
    if (rank == cols) {
        out.kind = SolveKind::unique;
    } else {
        out.kind = SolveKind::underdetermined;
        std::size_t next = 0;
        for (std::size_t col = 0; col < cols; ++col) {
            if (next < pivot_col.size() && pivot_col[next] == col) {
                ++next;
            } else {
                out.free_columns.push_back(col);
            }
        }
    }
    return out;
}

} // namespace wlpoly
