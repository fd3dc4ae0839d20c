#include "boxdim/linalg.hpp"

namespace boxdim {

RationalVector AffineSpace::point(const RationalVector& parameters) const {
    if (parameters.size() != basis.size()) {
        throw invalid_input("parameter count does not match basis size");
    }
    RationalVector out = origin;
    for (size_t k = 0; k < basis.size(); ++k) {
        if (parameters[k] == 0) continue;
        for (size_t i = 0; i < out.size(); ++i) {
            out[i] += parameters[k] * basis[k][i];
        }
    }
    return out;
}

std::optional<AffineSpace> solve_affine(RationalMatrix a, RationalVector b) {
    const size_t rows = a.size();
    if (b.size() != rows) {
        throw invalid_input("matrix and rhs dimensions differ");
    }
    const size_t cols = rows == 0 ? 0 : a[0].size();

    std::vector<int> pivot_col_of_row;
    size_t row = 0;
    for (size_t col = 0; col < cols && row < rows; ++col) {
        size_t pivot = row;
        while (pivot < rows && a[pivot][col] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(a[pivot], a[row]);
        std::swap(b[pivot], b[row]);

        Rational inv = a[row][col];
        for (size_t j = col; j < cols; ++j) a[row][j] /= inv;
        b[row] /= inv;
        for (size_t r = 0; r < rows; ++r) {
            if (r == row || a[r][col] == 0) continue;
            Rational factor = a[r][col];
            for (size_t j = col; j < cols; ++j) a[r][j] -= factor * a[row][j];
            b[r] -= factor * b[row];
        }
        pivot_col_of_row.push_back(static_cast<int>(col));
        ++row;
    }
    for (size_t r = row; r < rows; ++r) {
        if (b[r] != 0) return std::nullopt;  // 0 = nonzero row: inconsistent
    }

    std::vector<bool> is_pivot_col(cols, false);
    for (int c : pivot_col_of_row) is_pivot_col[c] = true;

    AffineSpace space;
    space.origin.assign(cols, 0);
    for (size_t r = 0; r < pivot_col_of_row.size(); ++r) {
        space.origin[pivot_col_of_row[r]] = b[r];
    }
    for (size_t col = 0; col < cols; ++col) {
        if (is_pivot_col[col]) continue;
        RationalVector dir(cols, 0);
        dir[col] = 1;
        for (size_t r = 0; r < pivot_col_of_row.size(); ++r) {
            dir[pivot_col_of_row[r]] = -a[r][col];
        }
        space.basis.push_back(std::move(dir));
    }
    return space;
}

std::optional<RationalVector> solve_unique(const RationalMatrix& a, const RationalVector& b) {
    auto space = solve_affine(a, b);
    if (!space || !space->basis.empty()) return std::nullopt;
    return space->origin;
}

Rational dot(const RationalVector& a, const RationalVector& b) {
    if (a.size() != b.size()) {
        throw invalid_input("dot product dimensions differ");
    }
    Rational out = 0;
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] != 0 && b[i] != 0) out += a[i] * b[i];
    }
    return out;
}

}  // namespace boxdim
