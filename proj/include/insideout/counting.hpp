#pragma once

// Exact lattice-point counting in dilated polyhedra by recursive coordinate
// bounding.  The coordinate bounds at every level come from an exact
// Fourier-Motzkin elimination chain built once per polyhedron; evaluating a
// dilate then costs only integer arithmetic.  Strict constraints exclude
// boundary points; equalities are handled as inequality pairs.

#include "insideout/errors.hpp"
#include "insideout/lp.hpp"
#include "insideout/polyhedron.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <numeric>
#include <vector>

namespace insideout {

class DilatedCounter {
public:
    explicit DilatedCounter(const HPolyhedron& p) : dim_(p.dim()) {
        if (p.trivially_infeasible()) {
            empty_ = true;
            return;
        }
        HPolyhedron cl = p.closure();
        if (!lp_feasible_point(cl)) {
            empty_ = true;
            return;
        }

        // Bounds; also fixes the branching order (narrowest range outermost).
        std::vector<Rat> widths(dim_);
        for (std::size_t i = 0; i < dim_; ++i) {
            RatVec e(dim_, Rat(0));
            e[i] = 1;
            LPResult mx = lp_maximize(cl, e), mn = lp_minimize(cl, e);
            if (mx.status != LPStatus::Optimal || mn.status != LPStatus::Optimal)
                throw UnboundedPolyhedron();
            widths[i] = mx.optimum - mn.optimum;
        }
        order_.resize(dim_);
        std::iota(order_.begin(), order_.end(), 0);
        std::stable_sort(order_.begin(), order_.end(),
                         [&](std::size_t a, std::size_t b) { return widths[a] < widths[b]; });

        if (dim_ == 0) return;

        // Rows in permuted coordinates y_j = x_{order_[j]}.
        std::vector<Cons> all;
        auto permuted = [&](const IntVec& a) {
            IntVec out(dim_);
            for (std::size_t j = 0; j < dim_; ++j) out[j] = a[order_[j]];
            return out;
        };
        for (const Constraint& c : p.inequalities()) all.push_back({permuted(c.a), c.b, c.strict});
        for (const Equation& e : p.equalities()) {
            IntVec a = permuted(e.a);
            IntVec na(dim_);
            for (std::size_t j = 0; j < dim_; ++j) na[j] = -a[j];
            all.push_back({a, e.b, false});
            all.push_back({na, -e.b, false});
        }

        levels_.assign(dim_, {});
        for (Cons& c : all) place(std::move(c));
        // Eliminate from the innermost variable down, pruning as we go.
        for (std::size_t lev = dim_; lev-- > 1;) {
            prune_level(lev);
            for (const Cons& c : levels_[lev]) {
                if (c.a[lev] <= 0) continue;
                for (const Cons& u : levels_[lev]) {
                    if (u.a[lev] >= 0) continue;
                    Cons combo;
                    combo.a.resize(dim_);
                    Int m1 = -u.a[lev], m2 = c.a[lev];
                    for (std::size_t j = 0; j < dim_; ++j)
                        combo.a[j] = m1 * c.a[j] + m2 * u.a[j];
                    combo.b = m1 * c.b + m2 * u.b;
                    combo.strict = c.strict || u.strict;
                    assert(combo.a[lev] == 0);
                    place(std::move(combo));
                }
            }
        }
        prune_level(0);
        for (std::size_t lev = 0; lev < dim_; ++lev) {
            bool has_lower = false, has_upper = false;
            for (const Cons& c : levels_[lev]) {
                (c.a[lev] > 0 ? has_lower : has_upper) = true;
            }
            if (!has_lower || !has_upper) throw UnboundedPolyhedron();
        }
    }

    bool known_empty() const { return empty_; }
    std::size_t dim() const { return dim_; }

    Int count(const Int& t) const {
        Int total = 0;
        if (empty_) return total;
        if (dim_ == 0) return 1;
        IntVec prefix(dim_);
        walk(0, t, prefix, [&](const IntVec&, const Int& run) { total += run; }, false);
        return total;
    }

    // Calls fn once per lattice point of t·P, coordinates in original order.
    void enumerate(const Int& t, const std::function<void(const IntVec&)>& fn) const {
        if (empty_) return;
        if (dim_ == 0) {
            fn(IntVec{});
            return;
        }
        IntVec prefix(dim_);
        walk(0, t, prefix,
             [&](const IntVec& pfx, const Int&) {
                 IntVec x(dim_);
                 for (std::size_t j = 0; j < dim_; ++j) x[order_[j]] = pfx[j];
                 fn(x);
             },
             true);
    }

private:
    struct Cons {
        IntVec a;
        Int b;
        bool strict = false;
    };

    void place(Cons c) {
        std::size_t top = dim_;
        while (top-- > 0)
            if (c.a[top] != 0) break;
        if (top == static_cast<std::size_t>(-1)) {
            // Constant constraint 0 >= t·b; harmless when satisfied for t > 0.
            bool ok = c.strict ? (c.b < 0) : (c.b <= 0);
            if (!ok) empty_ = true;
            return;
        }
        // Normalize to primitive for cheap deduplication.
        Int g = content(c.a);
        g = gcd(g, c.b);
        if (g > 1) {
            for (Int& x : c.a) x /= g;
            c.b /= g;
        }
        for (Cons& e : levels_[top]) {
            if (e.a == c.a && e.b == c.b) {
                e.strict = e.strict || c.strict;
                return;
            }
        }
        levels_[top].push_back(std::move(c));
    }

    // LP-based redundancy pruning of one level against levels 0..lev.
    void prune_level(std::size_t lev) {
        std::vector<Cons>& cur = levels_[lev];
        if (cur.size() <= 2) return;
        for (std::size_t i = cur.size(); i-- > 0;) {
            HPolyhedron others(lev + 1);
            for (std::size_t l2 = 0; l2 <= lev; ++l2) {
                for (std::size_t j = 0; j < levels_[l2].size(); ++j) {
                    if (l2 == lev && j == i) continue;
                    IntVec a(levels_[l2][j].a.begin(), levels_[l2][j].a.begin() + lev + 1);
                    others.add_inequality(std::move(a), levels_[l2][j].b, false);
                }
            }
            RatVec obj(lev + 1);
            for (std::size_t j = 0; j <= lev; ++j) obj[j] = cur[i].a[j];
            if (lp_point_below(others, obj, Rat(cur[i].b)).has_value()) continue;  // needed
            if (cur[i].strict) {
                // Safe to drop a strict bound only if the others already force
                // a value strictly above it.
                HPolyhedron probe = others;
                IntVec neg(cur[i].a.begin(), cur[i].a.begin() + lev + 1);
                for (Int& x : neg) x = -x;
                probe.add_inequality(std::move(neg), -cur[i].b, false);
                if (lp_feasible_point(probe).has_value()) continue;
            }
            cur.erase(cur.begin() + i);
        }
    }

    template <typename Sink>
    void walk(std::size_t lev, const Int& t, IntVec& prefix, const Sink& sink,
              bool enumerate_last) const {
        Int lo, hi;
        bool has_lo = false, has_hi = false;
        for (const Cons& c : levels_[lev]) {
            Int s = t * c.b;
            for (std::size_t j = 0; j < lev; ++j) s -= c.a[j] * prefix[j];
            Int bound;
            if (c.a[lev] > 0) {
                if (c.strict) {
                    mpz_fdiv_q(bound.get_mpz_t(), s.get_mpz_t(), c.a[lev].get_mpz_t());
                    ++bound;
                } else {
                    mpz_cdiv_q(bound.get_mpz_t(), s.get_mpz_t(), c.a[lev].get_mpz_t());
                }
                if (!has_lo || bound > lo) lo = bound;
                has_lo = true;
            } else {
                if (c.strict) {
                    mpz_cdiv_q(bound.get_mpz_t(), s.get_mpz_t(), c.a[lev].get_mpz_t());
                    --bound;
                } else {
                    mpz_fdiv_q(bound.get_mpz_t(), s.get_mpz_t(), c.a[lev].get_mpz_t());
                }
                if (!has_hi || bound < hi) hi = bound;
                has_hi = true;
            }
        }
        assert(has_lo && has_hi);
        if (lo > hi) return;
        if (lev + 1 == dim_ && !enumerate_last) {
            sink(prefix, hi - lo + 1);
            return;
        }
        for (Int v = lo; v <= hi; ++v) {
            prefix[lev] = v;
            if (lev + 1 == dim_)
                sink(prefix, Int(1));
            else
                walk(lev + 1, t, prefix, sink, enumerate_last);
        }
    }

    std::size_t dim_ = 0;
    bool empty_ = false;
    std::vector<std::size_t> order_;
    std::vector<std::vector<Cons>> levels_;
};

// Exact |t·p ∩ Z^dim|, strictness respected.
inline Int count_lattice_points(const HPolyhedron& p, const Int& t) {
    return DilatedCounter(p).count(t);
}

} // namespace insideout
