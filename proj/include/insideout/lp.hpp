#pragma once

// Exact rational linear programming: dense two-phase simplex with Bland's
// anti-cycling rule.  Strict inequalities are relaxed to weak here; all
// optimization happens over closures.  Dimensions are tiny (≤ 16 structural
// variables), so free variables are handled by the classic x = u − w split.

#include "insideout/polyhedron.hpp"
#include "insideout/rational.hpp"

#include <cassert>
#include <cstddef>
#include <optional>
#include <vector>

namespace insideout {

enum class LPStatus { Optimal, Infeasible, Unbounded };

struct LPResult {
    LPStatus status = LPStatus::Infeasible;
    Rat optimum;     // valid when Optimal
    RatVec witness;  // optimal point when Optimal; feasible start point when Unbounded
    RatVec ray;      // improving direction when Unbounded
};

namespace detail {

class Simplex {
public:
    // Rows are built from the closure of p; objective is over the structural x.
    explicit Simplex(const HPolyhedron& p) : d_(p.dim()) {
        std::size_t mi = p.inequalities().size();
        m_ = mi + p.equalities().size();
        ncols_ = 2 * d_ + mi + m_;  // u, w, slacks, artificials
        art0_ = 2 * d_ + mi;
        rows_.assign(m_, RatVec(ncols_ + 1, Rat(0)));
        basis_.assign(m_, 0);
        dead_row_.assign(m_, false);
        std::size_t r = 0;
        for (std::size_t i = 0; i < mi; ++i, ++r) {
            const Constraint& c = p.inequalities()[i];
            for (std::size_t j = 0; j < d_; ++j) {
                rows_[r][j] = c.a[j];
                rows_[r][d_ + j] = -Rat(c.a[j]);
            }
            rows_[r][2 * d_ + i] = -1;  // a·x − s = b
            rows_[r][ncols_] = c.b;
        }
        for (const Equation& e : p.equalities()) {
            for (std::size_t j = 0; j < d_; ++j) {
                rows_[r][j] = e.a[j];
                rows_[r][d_ + j] = -Rat(e.a[j]);
            }
            rows_[r][ncols_] = e.b;
            ++r;
        }
        for (std::size_t i = 0; i < m_; ++i) {
            if (rows_[i][ncols_] < 0)
                for (Rat& x : rows_[i]) x = -x;
            rows_[i][art0_ + i] = 1;
            basis_[i] = static_cast<long>(art0_ + i);
        }
    }

    bool phase1() {
        obj_.assign(ncols_ + 1, Rat(0));
        for (std::size_t i = 0; i < m_; ++i) {
            for (std::size_t j = 0; j < art0_; ++j) obj_[j] += rows_[i][j];
            obj_[ncols_] -= rows_[i][ncols_];
        }
        run(std::nullopt);
        if (obj_[ncols_] != 0) return false;
        // Drive remaining artificial variables out of the basis.
        for (std::size_t i = 0; i < m_; ++i) {
            if (basis_[i] < static_cast<long>(art0_)) continue;
            std::size_t c = 0;
            while (c < art0_ && rows_[i][c] == 0) ++c;
            if (c < art0_)
                pivot(i, c);
            else
                dead_row_[i] = true;  // redundant original row
        }
        return true;
    }

    // Maximize objective over structural x.  stop_above: return early once the
    // objective value exceeds the bound (the returned point is then feasible
    // with value > bound but not necessarily optimal).
    LPStatus phase2(const RatVec& objective, const std::optional<Rat>& stop_above) {
        obj_.assign(ncols_ + 1, Rat(0));
        for (std::size_t j = 0; j < d_ && j < objective.size(); ++j) {
            obj_[j] = objective[j];
            obj_[d_ + j] = -objective[j];
        }
        for (std::size_t i = 0; i < m_; ++i) {
            if (dead_row_[i] || obj_[basis_[i]] == 0) continue;
            Rat f = obj_[basis_[i]];
            for (std::size_t j = 0; j < ncols_; ++j) obj_[j] -= f * rows_[i][j];
            obj_[ncols_] += f * rows_[i][ncols_];
        }
        return run(stop_above);
    }

    Rat value() const { return obj_[ncols_]; }

    RatVec point() const {
        RatVec x(d_, Rat(0));
        for (std::size_t i = 0; i < m_; ++i) {
            if (dead_row_[i]) continue;
            long b = basis_[i];
            if (b < static_cast<long>(d_))
                x[b] += rows_[i][ncols_];
            else if (b < static_cast<long>(2 * d_))
                x[b - d_] -= rows_[i][ncols_];
        }
        return x;
    }

    RatVec ray() const {
        RatVec r(d_, Rat(0));
        if (unbounded_col_ < 0) return r;
        RatVec dir(ncols_, Rat(0));
        dir[unbounded_col_] = 1;
        for (std::size_t i = 0; i < m_; ++i)
            if (!dead_row_[i]) dir[basis_[i]] = -rows_[i][unbounded_col_];
        for (std::size_t j = 0; j < d_; ++j) r[j] = dir[j] - dir[d_ + j];
        return r;
    }

private:
    LPStatus run(const std::optional<Rat>& stop_above) {
        while (true) {
            if (stop_above && obj_[ncols_] > *stop_above) return LPStatus::Optimal;
            std::size_t enter = art0_;  // artificials never re-enter
            for (std::size_t j = 0; j < art0_; ++j) {
                if (obj_[j] > 0) {
                    enter = j;
                    break;  // Bland: smallest improving index
                }
            }
            if (enter == art0_) return LPStatus::Optimal;
            std::size_t leave = m_;
            Rat best;
            for (std::size_t i = 0; i < m_; ++i) {
                if (dead_row_[i] || rows_[i][enter] <= 0) continue;
                Rat ratio = rows_[i][ncols_] / rows_[i][enter];
                if (leave == m_ || ratio < best ||
                    (ratio == best && basis_[i] < basis_[leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (leave == m_) {
                unbounded_col_ = static_cast<long>(enter);
                return LPStatus::Unbounded;
            }
            pivot(leave, enter);
        }
    }

    void pivot(std::size_t r, std::size_t c) {
        Rat inv = 1 / rows_[r][c];
        for (Rat& x : rows_[r]) x *= inv;
        for (std::size_t i = 0; i < m_; ++i) {
            if (i == r || rows_[i][c] == 0) continue;
            Rat f = rows_[i][c];
            for (std::size_t j = 0; j <= ncols_; ++j) rows_[i][j] -= f * rows_[r][j];
        }
        if (!obj_.empty() && obj_[c] != 0) {
            Rat f = obj_[c];
            for (std::size_t j = 0; j < ncols_; ++j) obj_[j] -= f * rows_[r][j];
            obj_[ncols_] += f * rows_[r][ncols_];
        }
        basis_[r] = static_cast<long>(c);
    }

    std::size_t d_, m_ = 0, ncols_ = 0, art0_ = 0;
    std::vector<RatVec> rows_;
    RatVec obj_;
    std::vector<long> basis_;
    std::vector<bool> dead_row_;
    long unbounded_col_ = -1;
};

} // namespace detail

inline LPResult lp_optimize(const HPolyhedron& p, const RatVec& objective, bool maximize = true) {
    LPResult res;
    if (p.trivially_infeasible()) return res;
    detail::Simplex s(p);
    if (!s.phase1()) return res;
    RatVec c = objective;
    if (!maximize)
        for (Rat& x : c) x = -x;
    LPStatus st = s.phase2(c, std::nullopt);
    res.status = st;
    if (st == LPStatus::Optimal) {
        res.witness = s.point();
        res.optimum = maximize ? s.value() : -s.value();
    } else if (st == LPStatus::Unbounded) {
        res.witness = s.point();
        res.ray = s.ray();  // objective improves along the ray in the requested sense
    }
    return res;
}

inline LPResult lp_maximize(const HPolyhedron& p, const RatVec& objective) {
    return lp_optimize(p, objective, true);
}
inline LPResult lp_minimize(const HPolyhedron& p, const RatVec& objective) {
    return lp_optimize(p, objective, false);
}

// Any point of the closure, or nullopt if empty.
inline std::optional<RatVec> lp_feasible_point(const HPolyhedron& p) {
    if (p.trivially_infeasible()) return std::nullopt;
    detail::Simplex s(p);
    if (!s.phase1()) return std::nullopt;
    s.phase2(RatVec(p.dim(), Rat(0)), std::nullopt);
    return s.point();
}

// A point of the closure with objective·x > bound, or nullopt if none exists.
// Stops as soon as the threshold is crossed; never computes a full optimum
// unless it has to.
inline std::optional<RatVec> lp_point_above(const HPolyhedron& p, const RatVec& objective,
                                            const Rat& bound) {
    if (p.trivially_infeasible()) return std::nullopt;
    detail::Simplex s(p);
    if (!s.phase1()) return std::nullopt;
    LPStatus st = s.phase2(objective, bound);
    if (st == LPStatus::Optimal) {
        if (s.value() > bound) return s.point();
        return std::nullopt;
    }
    // Unbounded: walk far enough along the improving ray.
    RatVec x = s.point();
    RatVec r = s.ray();
    Rat cx = dot(objective, x), cr = dot(objective, r);
    assert(cr > 0);
    Rat lambda = (bound - cx) / cr + 1;
    if (lambda < 0) lambda = 1;
    for (std::size_t j = 0; j < x.size(); ++j) x[j] += lambda * r[j];
    return x;
}

inline std::optional<RatVec> lp_point_below(const HPolyhedron& p, const RatVec& objective,
                                            const Rat& bound) {
    RatVec neg = objective;
    for (Rat& x : neg) x = -x;
    return lp_point_above(p, neg, -bound);
}

// A point satisfying every inequality strictly (equalities still hold).
// Exists iff the open/relative-interior set cut out by making every stored
// inequality strict is nonempty.
inline std::optional<RatVec> lp_strict_point(const HPolyhedron& p) {
    if (p.trivially_infeasible()) return std::nullopt;
    // max s subject to a·x − s ≥ b per inequality, s ≤ 1; strict point iff opt > 0.
    HPolyhedron q(p.dim() + 1);
    for (const Constraint& c : p.inequalities()) {
        IntVec a = c.a;
        a.push_back(-1);
        q.add_inequality(std::move(a), c.b, false);
    }
    for (const Equation& e : p.equalities()) {
        IntVec a = e.a;
        a.push_back(0);
        q.add_equality(std::move(a), e.b);
    }
    IntVec cap(p.dim() + 1, 0);
    cap.back() = -1;
    q.add_inequality(std::move(cap), -1, false);  // s ≤ 1
    RatVec obj(p.dim() + 1, Rat(0));
    obj.back() = 1;
    LPResult r = lp_maximize(q, obj);
    if (r.status != LPStatus::Optimal || r.optimum <= 0) return std::nullopt;
    RatVec x(r.witness.begin(), r.witness.begin() + p.dim());
    return x;
}

} // namespace insideout
