#include "gsod/linalg.hpp"

namespace gsod {

std::vector<std::size_t> qmat_rref(QMat& m) {
    std::vector<std::size_t> pivots;
    if (m.empty()) return pivots;
    std::size_t rows = m.size(), cols = m[0].size(), r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && sgn(m[piv][c]) == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[r], m[piv]);
        Rational inv = Rational(1) / m[r][c];
        for (std::size_t j = c; j < cols; ++j) m[r][j] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || sgn(m[i][c]) == 0) continue;
            Rational f = m[i][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::size_t qmat_rank(QMat m) { return qmat_rref(m).size(); }

std::vector<std::vector<Rational>> qmat_nullspace(const QMat& m, std::size_t cols) {
    QMat a = m;
    auto pivots = qmat_rref(a);
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::vector<Rational>> basis;
    for (std::size_t fc = 0; fc < cols; ++fc) {
        if (is_pivot[fc]) continue;
        std::vector<Rational> v(cols, Rational(0));
        v[fc] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a[r][fc];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<std::vector<Rational>> qmat_solve(QMat m, std::vector<Rational> b) {
    if (m.empty()) {
        for (const auto& x : b)
            if (sgn(x) != 0) return std::nullopt;
        return std::vector<Rational>{};
    }
    std::size_t cols = m[0].size();
    for (std::size_t i = 0; i < m.size(); ++i) m[i].push_back(b[i]);
    auto pivots = qmat_rref(m);
    std::vector<Rational> x(cols, Rational(0));
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        if (pivots[r] == cols) return std::nullopt; // pivot in the rhs column
        x[pivots[r]] = m[r][cols];
    }
    return x;
}

} // namespace gsod
