#include "nicomach/linsolve.hpp"

#include <stdexcept>

namespace nicomach {

LinearSolution solve_linear(std::vector<std::vector<Rational>> A, std::vector<Rational> b) {
    std::size_t m = A.size();
    if (b.size() != m) throw std::domain_error("solve_linear: rhs arity mismatch");
    std::size_t n = m ? A[0].size() : 0;
    for (const auto& row : A)
        if (row.size() != n) throw std::domain_error("solve_linear: ragged matrix");

    std::vector<int> pivot_col_of_row;
    std::size_t row = 0;
    for (std::size_t col = 0; col < n && row < m; ++col) {
        std::size_t p = row;
        while (p < m && A[p][col].is_zero()) ++p;
        if (p == m) continue;
        std::swap(A[p], A[row]);
        std::swap(b[p], b[row]);
        Rational inv = A[row][col].inverse();
        for (std::size_t j = col; j < n; ++j) A[row][j] *= inv;
        b[row] *= inv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == row || A[i][col].is_zero()) continue;
            Rational f = A[i][col];
            for (std::size_t j = col; j < n; ++j) A[i][j] -= f * A[row][j];
            b[i] -= f * b[row];
        }
        pivot_col_of_row.push_back(int(col));
        ++row;
    }

    LinearSolution out;
    for (std::size_t i = row; i < m; ++i)
        if (!b[i].is_zero()) return out;  // 0 = nonzero: infeasible
    out.feasible = true;

    std::vector<int> pivot_row_of_col(n, -1);
    for (std::size_t r = 0; r < pivot_col_of_row.size(); ++r)
        pivot_row_of_col[std::size_t(pivot_col_of_row[r])] = int(r);

    out.particular.assign(n, Rational(0));
    for (std::size_t c = 0; c < n; ++c)
        if (pivot_row_of_col[c] >= 0) out.particular[c] = b[std::size_t(pivot_row_of_col[c])];

    for (std::size_t freec = 0; freec < n; ++freec) {
        if (pivot_row_of_col[freec] >= 0) continue;
        std::vector<Rational> v(n, Rational(0));
        v[freec] = Rational(1);
        for (std::size_t c = 0; c < n; ++c)
            if (pivot_row_of_col[c] >= 0)
                v[c] = -A[std::size_t(pivot_row_of_col[c])][freec];
        out.kernel.push_back(std::move(v));
    }
    return out;
}

}  // namespace nicomach
