// Test-only brute-force oracles: dense exact linear algebra, Macaulay-matrix
// ideal membership, and monomial enumeration. Kept independent of the library
// paths they are used to validate (only Polynomial/Monomial containers shared).
#pragma once

#include <functional>
#include <map>
#include <vector>

#include "gsod/groebner.hpp"
#include "gsod/ring.hpp"

namespace oracle {

using gsod::Monomial;
using gsod::Polynomial;
using gsod::Rational;

using QMatrix = std::vector<std::vector<Rational>>;

// In-place row reduction; returns rank.
inline std::size_t rank(QMatrix m) {
    std::size_t rows = m.size();
    if (rows == 0) return 0;
    std::size_t cols = m[0].size(), r = 0;
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
        ++r;
    }
    return r;
}

// All monomials in n variables of total degree exactly d.
inline std::vector<Monomial> monomials_of_degree(std::size_t n, int64_t d) {
    std::vector<Monomial> out;
    Monomial cur(n);
    std::function<void(std::size_t, int64_t)> rec = [&](std::size_t v, int64_t left) {
        if (v + 1 == n) {
            cur.e[v] = int32_t(left);
            out.push_back(cur);
            cur.e[v] = 0;
            return;
        }
        for (int64_t e = 0; e <= left; ++e) {
            cur.e[v] = int32_t(e);
            rec(v + 1, left - e);
        }
        cur.e[v] = 0;
    };
    if (d >= 0 && n > 0) rec(0, d);
    return out;
}

// Monomials of total degree d in n variables with weight w.m = wt.
inline std::vector<Monomial> monomials_of_degree_weight(std::size_t n, int64_t d,
                                                        const std::vector<int>& w, int64_t wt) {
    std::vector<Monomial> out;
    for (auto& m : monomials_of_degree(n, d))
        if (m.weight(w) == wt) out.push_back(m);
    return out;
}

// Row of coefficients of p over the listed monomials (must cover support).
inline std::vector<Rational> coeff_row(const Polynomial& p, const std::vector<Monomial>& basis) {
    std::map<std::vector<int32_t>, std::size_t> index;
    for (std::size_t i = 0; i < basis.size(); ++i) index[basis[i].e] = i;
    std::vector<Rational> row(basis.size(), Rational(0));
    for (const auto& t : p.terms()) row.at(index.at(t.m.e)) = t.c;
    return row;
}

// Macaulay-matrix membership: is f (total-degree-homogeneous of degree D) in
// the ideal generated by the total-degree-homogeneous gens?
inline bool macaulay_member(std::size_t nvars, const std::vector<Polynomial>& gens,
                            const Polynomial& f, int64_t D) {
    if (f.is_zero()) return true;
    std::vector<Monomial> basis = monomials_of_degree(nvars, D);
    QMatrix rows;
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        int64_t dg = g.total_degree();
        if (dg > D) continue;
        for (const auto& m : monomials_of_degree(nvars, D - dg))
            rows.push_back(coeff_row(g.term_mul(Rational(1), m), basis));
    }
    std::size_t r0 = rank(rows);
    rows.push_back(coeff_row(f, basis));
    return rank(rows) == r0;
}

// Dimension of the degree-D piece of the ideal (g_1..g_s).
inline std::size_t macaulay_dim(std::size_t nvars, const std::vector<Polynomial>& gens,
                                int64_t D) {
    std::vector<Monomial> basis = monomials_of_degree(nvars, D);
    QMatrix rows;
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        int64_t dg = g.total_degree();
        if (dg > D) continue;
        for (const auto& m : monomials_of_degree(nvars, D - dg))
            rows.push_back(coeff_row(g.term_mul(Rational(1), m), basis));
    }
    return rank(rows);
}

} // namespace oracle
