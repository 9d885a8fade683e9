#pragma once

#include <vector>

#include "wlpoly/mpoly.hpp"

namespace wlpoly {

/// Dense row-major matrix of polynomials.
class PolyMatrix {
public:
    PolyMatrix() = default;
    PolyMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), entries_(static_cast<std::size_t>(rows) * cols) {
        if (rows < 0 || cols < 0)
            throw std::invalid_argument("PolyMatrix: negative dimension");
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    MPoly& at(int i, int j) { return entries_[index(i, j)]; }
    const MPoly& at(int i, int j) const { return entries_[index(i, j)]; }

private:
    std::size_t index(int i, int j) const {
        if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
            throw std::out_of_range("PolyMatrix: index out of range");
        return static_cast<std::size_t>(i) * cols_ + j;
    }
    int rows_ = 0;
    int cols_ = 0;
    std::vector<MPoly> entries_;
};

/**
 * Exact determinant.  The 0x0 determinant is 1 (empty product), so the
 * Wronskian of an empty family comes out as the constant 1 without a
 * special case.  Cofactor expansion up to 5x5, fraction-free elimination
 * above.  Throws NotSquare for rectangular input.
 */
MPoly determinant(const PolyMatrix& m);

// Both routes exposed for cross-checking in tests.
MPoly determinant_cofactor(const PolyMatrix& m);
MPoly determinant_fraction_free(const PolyMatrix& m);

} // namespace wlpoly
