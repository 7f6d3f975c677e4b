#pragma once

#include "insideout/rational.hpp"

#include <cassert>
#include <cstddef>
#include <vector>

namespace insideout {

// Dense row-major rational matrix. The systems here top out around
// 120 x 16, so nothing fancier is warranted.
class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    static RatMatrix from_rows(const std::vector<RatVec>& rows) {
        RatMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            assert(rows[i].size() == m.cols_);
            for (std::size_t j = 0; j < m.cols_; ++j) m.at(i, j) = rows[i][j];
        }
        return m;
    }

    static RatMatrix identity(std::size_t n) {
        RatMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rat& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Rat& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    RatVec row(std::size_t i) const {
        RatVec r(cols_);
        for (std::size_t j = 0; j < cols_; ++j) r[j] = at(i, j);
        return r;
    }

    void swap_rows(std::size_t i, std::size_t k) {
        for (std::size_t j = 0; j < cols_; ++j) std::swap(at(i, j), at(k, j));
    }

    bool operator==(const RatMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rat> a_;
};

inline RatVec mat_vec(const RatMatrix& m, const RatVec& v) {
    assert(v.size() == m.cols());
    RatVec r(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Rat s = 0;
        for (std::size_t j = 0; j < m.cols(); ++j) s += m.at(i, j) * v[j];
        r[i] = s;
    }
    return r;
}

} // namespace insideout
