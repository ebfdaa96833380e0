#include "cyops/linalg.hpp"

#include <algorithm>

namespace cyops {

namespace {

struct Echelon {
    std::vector<std::vector<Int>> rows;  // echelonized integer rows
    std::vector<long> pivot_col;         // per stored row
    size_t cols = 0;
};

// Fraction-free Gaussian elimination (Bareiss). Rows are scaled to integers
// first; the division in the Bareiss update is exact.
Echelon echelonize(const RatMatrix& m, size_t cols) {
    Echelon e;
    e.cols = cols;
    std::vector<std::vector<Int>> rows;
    for (const auto& r : m) {
        if (r.size() != cols) throw Error("rational_kernel: ragged matrix");
        Int l(1);
        for (const auto& v : r) l = lcm(l, den(v));
        std::vector<Int> ir(cols);
        bool nonzero = false;
        for (size_t j = 0; j < cols; ++j) {
            ir[j] = num(r[j]) * (l / den(r[j]));
            nonzero = nonzero || ir[j] != 0;
        }
        if (nonzero) rows.push_back(std::move(ir));
    }

    Int prev(1);
    size_t rank = 0;
    for (size_t col = 0; col < cols && rank < rows.size(); ++col) {
        size_t piv = rank;
        while (piv < rows.size() && rows[piv][col] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[rank], rows[piv]);
        const Int pivot = rows[rank][col];
        for (size_t i = rank + 1; i < rows.size(); ++i) {
            for (size_t j = col + 1; j < cols; ++j)
                rows[i][j] = (rows[i][j] * pivot - rows[i][col] * rows[rank][j]) / prev;
            rows[i][col] = 0;
        }
        prev = pivot;
        e.pivot_col.push_back(static_cast<long>(col));
        ++rank;
    }
    rows.resize(rank);
    e.rows = std::move(rows);
    return e;
}

}  // namespace

size_t rational_rank(const RatMatrix& m, size_t cols) {
    return echelonize(m, cols).rows.size();
}

std::vector<std::vector<Rat>> rational_kernel(const RatMatrix& m, size_t cols) {
    Echelon e = echelonize(m, cols);
    std::vector<bool> is_pivot(cols, false);
    for (long c : e.pivot_col) is_pivot[c] = true;

    std::vector<std::vector<Rat>> kernel;
    for (size_t free_col = 0; free_col < cols; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<Rat> x(cols, Rat(0));
        x[free_col] = 1;
        for (size_t k = e.rows.size(); k-- > 0;) {
            long pc = e.pivot_col[k];
            Rat s(0);
            for (size_t j = pc + 1; j < cols; ++j)
                if (x[j] != 0) s += Rat(e.rows[k][j]) * x[j];
            x[pc] = -s / Rat(e.rows[k][pc]);
        }
        kernel.push_back(std::move(x));
    }
    return kernel;
}

}  // namespace cyops
