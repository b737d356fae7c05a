#include "pospoly/linalg.hpp"

#include <algorithm>

namespace pospoly {

int rref(RatMatrix& mat) {
    const int rows = static_cast<int>(mat.size());
    const int cols = rows == 0 ? 0 : static_cast<int>(mat[0].size());
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r)
            if (mat[r][col] != 0) { pivot = r; break; }
        if (pivot == -1) continue;
        std::swap(mat[rank], mat[pivot]);
        const Rational lead = mat[rank][col];
        for (int c = col; c < cols; ++c) mat[rank][c] /= lead;
        for (int r = 0; r < rows; ++r) {
            if (r == rank || mat[r][col] == 0) continue;
            const Rational factor = mat[r][col];
            for (int c = col; c < cols; ++c) mat[r][c] -= factor * mat[rank][c];
        }
        ++rank;
    }
    return rank;
}

int rank_of(RatMatrix mat) { return rref(mat); }

std::vector<std::vector<Rational>> right_kernel(const RatMatrix& input) {
    RatMatrix mat = input;
    const int cols = mat.empty() ? 0 : static_cast<int>(mat[0].size());
    const int rank = rref(mat);
    // Pivot column of each echelon row.
    std::vector<int> pivot_col(rank);
    std::vector<char> is_pivot(cols, 0);
    for (int r = 0; r < rank; ++r) {
        int c = 0;
        while (mat[r][c] == 0) ++c;
        pivot_col[r] = c;
        is_pivot[c] = 1;
    }
    std::vector<std::vector<Rational>> basis;
    for (int free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rational> v(cols, 0);
        v[free] = 1;
        for (int r = 0; r < rank; ++r) v[pivot_col[r]] = -mat[r][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace pospoly
