#pragma once

// Exact vertex enumeration by incremental double description in vertex form:
// start from a bounding box strictly containing the polytope, insert one
// constraint at a time, and cut crossing edges.  Adjacency is decided by the
// rank of the common active set, which is exact under any degeneracy.

#include "insideout/errors.hpp"
#include "insideout/linalg.hpp"
#include "insideout/lp.hpp"
#include "insideout/polyhedron.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <vector>

namespace insideout {

struct VPolytope {
    std::vector<RatVec> vertices;
};

namespace detail {

struct DDVertex {
    RatVec x;
    std::vector<std::size_t> active;  // sorted constraint indices
};

inline std::vector<std::size_t> common_active(const DDVertex& a, const DDVertex& b) {
    std::vector<std::size_t> out;
    std::set_intersection(a.active.begin(), a.active.end(), b.active.begin(), b.active.end(),
                          std::back_inserter(out));
    return out;
}

} // namespace detail

inline VPolytope vertex_enumeration(const HPolyhedron& p) {
    const std::size_t d = p.dim();
    HPolyhedron cl = p.closure();
    if (cl.trivially_infeasible() || !lp_feasible_point(cl)) throw EmptyPolyhedron();

    // Exact coordinate bounds; also the boundedness check.
    std::vector<Rat> lo(d), hi(d);
    for (std::size_t i = 0; i < d; ++i) {
        RatVec e(d, Rat(0));
        e[i] = 1;
        LPResult mx = lp_maximize(cl, e), mn = lp_minimize(cl, e);
        if (mx.status != LPStatus::Optimal || mn.status != LPStatus::Optimal)
            throw UnboundedPolyhedron();
        lo[i] = mn.optimum;
        hi[i] = mx.optimum;
    }

    if (d == 0) return VPolytope{{RatVec{}}};

    // Unified constraint list: box facets first (strictly off the polytope),
    // then the polytope's own inequality and equality data.
    struct Row {
        RatVec a;
        Rat b;
    };
    std::vector<Row> rows;
    for (std::size_t i = 0; i < d; ++i) {
        RatVec e(d, Rat(0));
        e[i] = 1;
        rows.push_back({e, floor_rat(lo[i]) - 1});
        RatVec f(d, Rat(0));
        f[i] = -1;
        rows.push_back({f, -(ceil_rat(hi[i]) + 1)});
    }
    std::size_t own_start = rows.size();
    for (const Constraint& c : cl.inequalities()) {
        RatVec a(d);
        for (std::size_t j = 0; j < d; ++j) a[j] = c.a[j];
        rows.push_back({a, Rat(c.b)});
    }
    for (const Equation& e : cl.equalities()) {
        RatVec a(d), na(d);
        for (std::size_t j = 0; j < d; ++j) {
            a[j] = e.a[j];
            na[j] = -Rat(e.a[j]);
        }
        rows.push_back({a, Rat(e.b)});
        rows.push_back({na, -Rat(e.b)});
    }

    // Box corners with their active facets.
    std::vector<detail::DDVertex> verts;
    for (std::size_t mask = 0; mask < (std::size_t(1) << d); ++mask) {
        detail::DDVertex v;
        v.x.resize(d);
        for (std::size_t i = 0; i < d; ++i) {
            bool high = (mask >> i) & 1;
            v.x[i] = high ? rows[2 * i + 1].b * -1 : rows[2 * i].b;
            v.active.push_back(high ? 2 * i + 1 : 2 * i);
        }
        std::sort(v.active.begin(), v.active.end());
        verts.push_back(std::move(v));
    }

    auto rank_of = [&](const std::vector<std::size_t>& idx) {
        std::vector<RatVec> normals;
        for (std::size_t k : idx) normals.push_back(rows[k].a);
        if (normals.empty()) return std::size_t(0);
        return rref(RatMatrix::from_rows(normals)).rank;
    };

    for (std::size_t k = own_start; k < rows.size(); ++k) {
        const Row& r = rows[k];
        std::vector<std::size_t> pos, neg, zero;
        for (std::size_t i = 0; i < verts.size(); ++i) {
            Rat s = dot(r.a, verts[i].x) - r.b;
            if (s > 0)
                pos.push_back(i);
            else if (s < 0)
                neg.push_back(i);
            else
                zero.push_back(i);
        }
        if (neg.empty()) {
            for (std::size_t i : zero) {
                verts[i].active.push_back(k);
                std::sort(verts[i].active.begin(), verts[i].active.end());
            }
            continue;
        }

        std::vector<detail::DDVertex> next;
        for (std::size_t i : pos) next.push_back(verts[i]);
        for (std::size_t i : zero) {
            detail::DDVertex v = verts[i];
            v.active.push_back(k);
            std::sort(v.active.begin(), v.active.end());
            next.push_back(std::move(v));
        }
        for (std::size_t i : pos) {
            for (std::size_t j : neg) {
                std::vector<std::size_t> common = detail::common_active(verts[i], verts[j]);
                if (common.size() < d - 1 || rank_of(common) != d - 1) continue;
                Rat si = dot(r.a, verts[i].x) - r.b;
                Rat sj = dot(r.a, verts[j].x) - r.b;
                Rat lambda = si / (si - sj);  // si > 0 > sj
                detail::DDVertex v;
                v.x.resize(d);
                for (std::size_t q = 0; q < d; ++q)
                    v.x[q] = verts[i].x[q] + lambda * (verts[j].x[q] - verts[i].x[q]);
                common.push_back(k);
                std::sort(common.begin(), common.end());
                v.active = std::move(common);
                next.push_back(std::move(v));
            }
        }

        // Merge coincident points, pooling their active sets.
        std::map<RatVec, std::size_t, bool (*)(const RatVec&, const RatVec&)> seen(
            lex_less<RatVec>);
        std::vector<detail::DDVertex> merged;
        for (detail::DDVertex& v : next) {
            auto it = seen.find(v.x);
            if (it == seen.end()) {
                seen.emplace(v.x, merged.size());
                merged.push_back(std::move(v));
            } else {
                detail::DDVertex& u = merged[it->second];
                std::vector<std::size_t> uni;
                std::set_union(u.active.begin(), u.active.end(), v.active.begin(),
                               v.active.end(), std::back_inserter(uni));
                u.active = std::move(uni);
            }
        }
        verts = std::move(merged);
        if (verts.empty()) throw EmptyPolyhedron();
    }

    VPolytope out;
    for (const detail::DDVertex& v : verts) {
        assert(rank_of(v.active) == d);
        out.vertices.push_back(v.x);
    }
    std::sort(out.vertices.begin(), out.vertices.end(), lex_less<RatVec>);
    return out;
}

// lcm of all vertex-coordinate denominators: the Ehrhart period bound.
inline Int vertex_denominator_lcm(const VPolytope& v) {
    Int l = 1;
    for (const RatVec& x : v.vertices) l = lcm(l, denominator_lcm(x));
    return l;
}

} // namespace insideout
