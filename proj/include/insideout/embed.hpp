#pragma once

// Affine hulls (stated plus LP-detected implicit equalities) and the
// conversion of a polyhedron to a lattice-point-equivalent full-dimensional
// one.  The embedding x = t·offset + B·u is dilation-compatible: for every
// positive t with dilation_period | t it maps Z^k bijectively onto the
// integer points of the dilated affine hull, and for all other t the hull
// carries no integer points at all.

#include "insideout/errors.hpp"
#include "insideout/linalg.hpp"
#include "insideout/lp.hpp"
#include "insideout/polyhedron.hpp"

#include <cassert>
#include <vector>

namespace insideout {

struct AffineHull {
    std::vector<Equation> equalities;  // complete: stated + implicit
    std::size_t dim = 0;
};

inline AffineHull affine_hull(const HPolyhedron& p) {
    HPolyhedron cl = p.closure();
    if (cl.trivially_infeasible() || !lp_feasible_point(cl)) throw EmptyPolyhedron();
    HPolyhedron collect(p.dim());
    for (const Equation& e : cl.equalities()) collect.add_equality(e.a, e.b);
    for (const Constraint& c : cl.inequalities()) {
        RatVec obj(p.dim());
        for (std::size_t j = 0; j < p.dim(); ++j) obj[j] = c.a[j];
        LPResult mx = lp_maximize(cl, obj);
        if (mx.status == LPStatus::Optimal && mx.optimum == c.b)
            collect.add_equality(c.a, c.b);
    }
    AffineHull hull;
    hull.equalities = collect.equalities();
    std::vector<RatVec> normals;
    for (const Equation& e : hull.equalities) {
        RatVec a(p.dim());
        for (std::size_t j = 0; j < p.dim(); ++j) a[j] = e.a[j];
        normals.push_back(std::move(a));
    }
    std::size_t rk = normals.empty() ? 0 : rref(RatMatrix::from_rows(normals)).rank;
    hull.dim = p.dim() - rk;
    return hull;
}

struct AffineEmbedding {
    std::size_t ambient_dim = 0, reduced_dim = 0;
    RatVec offset;                 // ambient point family: t·offset
    std::vector<IntVec> basis;     // lattice basis of the direction space
    std::vector<IntVec> pullback;  // reduced_dim integer rows mapping directions back
    Int dilation_period = 1;       // M: the dilated hull meets Z^d iff M | t
    bool identity = false;

    RatVec to_ambient(const RatVec& u, const Rat& t) const {
        RatVec x(ambient_dim);
        for (std::size_t i = 0; i < ambient_dim; ++i) {
            Rat s = t * offset[i];
            for (std::size_t j = 0; j < reduced_dim; ++j) s += Rat(basis[j][i]) * u[j];
            x[i] = s;
        }
        return x;
    }

    RatVec pull_back(const RatVec& x, const Rat& t) const {
        RatVec u(reduced_dim);
        for (std::size_t j = 0; j < reduced_dim; ++j) {
            Rat s = 0;
            for (std::size_t i = 0; i < ambient_dim; ++i)
                s += Rat(pullback[j][i]) * (x[i] - t * offset[i]);
            u[j] = s;
        }
        return u;
    }
};

struct FullDimResult {
    HPolyhedron reduced;
    AffineEmbedding embedding;
};

inline FullDimResult full_dimensionalize(const HPolyhedron& p) {
    const std::size_t d = p.dim();
    AffineHull hull = affine_hull(p);  // throws EmptyPolyhedron

    FullDimResult res;
    AffineEmbedding& emb = res.embedding;
    emb.ambient_dim = d;

    if (hull.equalities.empty()) {
        emb.reduced_dim = d;
        emb.identity = true;
        emb.offset.assign(d, Rat(0));
        for (std::size_t j = 0; j < d; ++j) {
            IntVec e(d, 0);
            e[j] = 1;
            emb.basis.push_back(e);
            emb.pullback.push_back(e);
        }
        res.reduced = p;
        return res;
    }

    std::vector<IntVec> rows;
    RatVec rhs;
    for (const Equation& e : hull.equalities) {
        rows.push_back(e.a);
        rhs.push_back(Rat(e.b));
    }
    ColumnEchelon ce = column_echelon(rows, d);
    const std::size_t r = ce.rank, k = d - r;
    assert(k == hull.dim);

    // Forward-solve H y = b; consistency is guaranteed by nonemptiness.
    RatVec y(r, Rat(0));
    for (std::size_t j = 0; j < r; ++j) {
        std::size_t pr = ce.pivot_rows[j];
        Rat s = rhs[pr];
        for (std::size_t j2 = 0; j2 < j; ++j2) s -= y[j2] * Rat(ce.h_cols[j2][pr]);
        y[j] = s / Rat(ce.h_cols[j][pr]);
    }
    for (std::size_t i = 0; i < rows.size(); ++i) {
        Rat s = 0;
        for (std::size_t j = 0; j < r; ++j) s += y[j] * Rat(ce.h_cols[j][i]);
        if (s != rhs[i]) throw NoLatticeCompatibleOrigin("inconsistent hull equalities");
    }

    emb.reduced_dim = k;
    emb.dilation_period = denominator_lcm(y);
    emb.offset.assign(d, Rat(0));
    for (std::size_t j = 0; j < r; ++j)
        for (std::size_t i = 0; i < d; ++i) emb.offset[i] += y[j] * Rat(ce.q_cols[j][i]);
    for (std::size_t j = r; j < d; ++j) emb.basis.push_back(ce.q_cols[j]);
    for (std::size_t j = r; j < d; ++j) emb.pullback.push_back(ce.qinv_rows[j]);

    HPolyhedron q(k);
    for (const Constraint& c : p.inequalities()) {
        IntVec a(k);
        for (std::size_t j = 0; j < k; ++j) a[j] = dot_int(c.a, emb.basis[j]);
        Rat b = Rat(c.b) - dot(c.a, emb.offset);
        Int den = b.get_den();
        for (Int& x : a) x *= den;
        q.add_inequality(std::move(a), Int(b.get_num()), c.strict);
    }
    res.reduced = std::move(q);
    return res;
}

} // namespace insideout
