#pragma once

// Exact linear-algebra kernels: reduced row echelon form, rational nullspace,
// integer column echelon (Hermite-style) with unimodular transform, and
// saturated integer lattice bases of rational subspaces.

#include "insideout/matrix.hpp"
#include "insideout/rational.hpp"

#include <cassert>
#include <cstddef>
#include <utility>
#include <vector>

namespace insideout {

struct RrefResult {
    RatMatrix m;
    std::vector<std::size_t> pivot_cols;
    std::size_t rank = 0;
};

inline RrefResult rref(RatMatrix m) {
    RrefResult res;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m.at(p, c) == 0) ++p;
        if (p == m.rows()) continue;
        if (p != r) m.swap_rows(p, r);
        Rat inv = 1 / m.at(r, c);
        for (std::size_t j = c; j < m.cols(); ++j) m.at(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m.at(i, c) == 0) continue;
            Rat f = m.at(i, c);
            for (std::size_t j = c; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
        }
        res.pivot_cols.push_back(c);
        ++r;
    }
    res.rank = r;
    res.m = std::move(m);
    return res;
}

inline std::size_t rank(const RatMatrix& m) { return rref(m).rank; }

// Basis of {x : m x = 0}; one vector per non-pivot column.
inline std::vector<RatVec> nullspace(const RatMatrix& m) {
    RrefResult r = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : r.pivot_cols) is_pivot[c] = true;
    std::vector<RatVec> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        RatVec v(m.cols(), Rat(0));
        v[free] = 1;
        for (std::size_t i = 0; i < r.pivot_cols.size(); ++i) v[r.pivot_cols[i]] = -r.m.at(i, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

// Integer column echelon form with transform: finds unimodular Q (and its
// inverse) such that M·Q = [H | 0] with H of full column rank.  Pivot rows
// are strictly increasing down the columns of H.
struct ColumnEchelon {
    std::vector<IntVec> h_cols;     // echelon columns, each of size rows
    std::vector<std::size_t> pivot_rows;
    std::vector<IntVec> q_cols;     // all dim columns of Q, each of size dim
    std::vector<IntVec> qinv_rows;  // all dim rows of Q^{-1}
    std::size_t rank = 0;
};

inline ColumnEchelon column_echelon(const std::vector<IntVec>& rows, std::size_t dim) {
    std::size_t m = rows.size();
    std::vector<IntVec> cols(dim, IntVec(m, 0));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < dim; ++j) cols[j][i] = rows[i][j];

    std::vector<IntVec> q(dim, IntVec(dim, 0)), qinv(dim, IntVec(dim, 0));
    for (std::size_t j = 0; j < dim; ++j) q[j][j] = qinv[j][j] = 1;

    // Column op C_j += k*C_i on (cols, q) pairs with inverse row op on qinv.
    auto add_col = [&](std::size_t j, std::size_t i, const Int& k) {
        for (std::size_t t = 0; t < m; ++t) cols[j][t] += k * cols[i][t];
        for (std::size_t t = 0; t < dim; ++t) q[j][t] += k * q[i][t];
        for (std::size_t t = 0; t < dim; ++t) qinv[i][t] -= k * qinv[j][t];
    };
    auto swap_col = [&](std::size_t j, std::size_t i) {
        std::swap(cols[j], cols[i]);
        std::swap(q[j], q[i]);
        std::swap(qinv[j], qinv[i]);
    };
    auto negate_col = [&](std::size_t j) {
        for (std::size_t t = 0; t < m; ++t) cols[j][t] = -cols[j][t];
        for (std::size_t t = 0; t < dim; ++t) q[j][t] = -q[j][t];
        for (std::size_t t = 0; t < dim; ++t) qinv[j][t] = -qinv[j][t];
    };

    ColumnEchelon res;
    std::size_t c = 0;
    for (std::size_t r = 0; r < m && c < dim; ++r) {
        // Euclidean reduction across columns c..dim-1 on row r.
        while (true) {
            std::size_t best = dim;
            for (std::size_t j = c; j < dim; ++j) {
                if (cols[j][r] == 0) continue;
                if (best == dim || mpz_cmpabs(cols[j][r].get_mpz_t(), cols[best][r].get_mpz_t()) < 0)
                    best = j;
            }
            if (best == dim) break;  // row r is zero on the working columns
            if (best != c) swap_col(c, best);
            if (cols[c][r] < 0) negate_col(c);
            bool reduced = true;
            for (std::size_t j = c + 1; j < dim; ++j) {
                if (cols[j][r] == 0) continue;
                Int k;
                mpz_fdiv_q(k.get_mpz_t(), cols[j][r].get_mpz_t(), cols[c][r].get_mpz_t());
                add_col(j, c, -k);
                if (cols[j][r] != 0) reduced = false;
            }
            if (reduced) break;
        }
        if (c < dim && cols[c][r] != 0) {
            res.pivot_rows.push_back(r);
            ++c;
        }
    }
    res.rank = c;
    res.h_cols.assign(cols.begin(), cols.begin() + c);
    res.q_cols = std::move(q);
    res.qinv_rows = std::move(qinv);
    return res;
}

// Basis of the lattice {x in Z^dim : row·x = 0 for every row}.  Kernels are
// saturated by construction.
inline std::vector<IntVec> integer_kernel(const std::vector<IntVec>& rows, std::size_t dim) {
    ColumnEchelon ce = column_echelon(rows, dim);
    std::vector<IntVec> basis(ce.q_cols.begin() + ce.rank, ce.q_cols.end());
    return basis;
}

// Basis of V ∩ Z^dim where V is the rational span of the inputs, via double
// orthogonal-complement saturation (kernels are always saturated).
inline std::vector<IntVec> integer_lattice_basis(const std::vector<RatVec>& vectors,
                                                 std::size_t dim) {
    std::vector<IntVec> gens;
    for (const RatVec& v : vectors) {
        IntVec w = to_primitive(v);
        if (!is_zero(w)) gens.push_back(std::move(w));
    }
    std::vector<IntVec> perp = integer_kernel(gens, dim);
    return integer_kernel(perp, dim);
}

} // namespace insideout
