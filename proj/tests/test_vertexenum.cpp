#include <catch2/catch_amalgamated.hpp>

#include "insideout/vertexenum.hpp"

#include <functional>
#include <random>
#include <set>

using namespace insideout;

namespace {

HPolyhedron unit_square() {
    HPolyhedron p(2);
    p.add_inequality({1, 0}, 0, false);
    p.add_inequality({-1, 0}, -1, false);
    p.add_inequality({0, 1}, 0, false);
    p.add_inequality({0, -1}, -1, false);
    return p;
}

// Independent vertex oracle: solve every d-subset of tight constraints and
// keep feasible solutions.
std::vector<RatVec> brute_force_vertices(const HPolyhedron& p) {
    std::size_t d = p.dim();
    struct Row {
        RatVec a;
        Rat b;
    };
    std::vector<Row> rows;
    for (const Constraint& c : p.inequalities()) {
        RatVec a(d);
        for (std::size_t j = 0; j < d; ++j) a[j] = c.a[j];
        rows.push_back({a, Rat(c.b)});
    }
    for (const Equation& e : p.equalities()) {
        RatVec a(d);
        for (std::size_t j = 0; j < d; ++j) a[j] = e.a[j];
        rows.push_back({a, Rat(e.b)});
    }
    std::set<std::vector<Rat>> found;
    std::vector<std::size_t> idx(d);
    HPolyhedron cl = p.closure();
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start, std::size_t k) {
        if (k == d) {
            RatMatrix m(d, d + 1);
            for (std::size_t i = 0; i < d; ++i) {
                for (std::size_t j = 0; j < d; ++j) m.at(i, j) = rows[idx[i]].a[j];
                m.at(i, d) = rows[idx[i]].b;
            }
            RrefResult r = rref(m);
            if (r.rank != d) return;
            for (std::size_t c : r.pivot_cols)
                if (c == d) return;
            RatVec x(d);
            for (std::size_t i = 0; i < d; ++i) x[r.pivot_cols[i]] = r.m.at(i, d);
            if (cl.contains(x)) found.insert(x);
            return;
        }
        for (std::size_t i = start; i < rows.size(); ++i) {
            idx[k] = i;
            rec(i + 1, k + 1);
        }
    };
    rec(0, 0);
    return {found.begin(), found.end()};
}

} // namespace

TEST_CASE("unit square vertices") {
    VPolytope v = vertex_enumeration(unit_square());
    REQUIRE(v.vertices.size() == 4);
    std::set<std::vector<Rat>> got(v.vertices.begin(), v.vertices.end());
    CHECK(got.count({Rat(0), Rat(0)}) == 1);
    CHECK(got.count({Rat(1), Rat(1)}) == 1);
}

TEST_CASE("standard triangle has three vertices") {
    HPolyhedron p(2);
    p.add_inequality({1, 0}, 0, false);
    p.add_inequality({0, 1}, 0, false);
    p.add_inequality({-1, -1}, -1, false);
    CHECK(vertex_enumeration(p).vertices.size() == 3);
}

TEST_CASE("equality slice gives segment endpoints") {
    HPolyhedron p = unit_square();
    p.add_equality({1, 1}, 1);
    VPolytope v = vertex_enumeration(p);
    REQUIRE(v.vertices.size() == 2);
    CHECK(v.vertices[0] == RatVec{Rat(0), Rat(1)});
    CHECK(v.vertices[1] == RatVec{Rat(1), Rat(0)});
}

TEST_CASE("point polytope from implicit equalities") {
    HPolyhedron p(2);
    p.add_inequality({1, 0}, 0, false);
    p.add_inequality({0, 1}, 0, false);
    p.add_inequality({-1, -1}, 0, false);
    VPolytope v = vertex_enumeration(p);
    REQUIRE(v.vertices.size() == 1);
    CHECK(v.vertices[0] == RatVec{Rat(0), Rat(0)});
}

TEST_CASE("vertex enumeration error cases") {
    HPolyhedron empty(1);
    empty.add_inequality({1}, 1, false);
    empty.add_inequality({-1}, 0, false);
    CHECK_THROWS_AS(vertex_enumeration(empty), EmptyPolyhedron);

    HPolyhedron ray(2);
    ray.add_inequality({1, 0}, 0, false);
    ray.add_inequality({0, 1}, 0, false);
    CHECK_THROWS_AS(vertex_enumeration(ray), UnboundedPolyhedron);
}

TEST_CASE("open polytopes enumerate their closure's vertices") {
    HPolyhedron p(2);
    p.add_inequality({1, 0}, 0, true);
    p.add_inequality({0, 1}, 0, true);
    p.add_inequality({-1, -1}, -1, true);
    CHECK(vertex_enumeration(p).vertices.size() == 3);
}

TEST_CASE("fractional vertex coordinates are exact") {
    // x >= 0, y >= 0, 2x + 3y <= 1: vertices (0,0), (1/2,0), (0,1/3).
    HPolyhedron p(2);
    p.add_inequality({1, 0}, 0, false);
    p.add_inequality({0, 1}, 0, false);
    p.add_inequality({-2, -3}, -1, false);
    VPolytope v = vertex_enumeration(p);
    REQUIRE(v.vertices.size() == 3);
    CHECK(vertex_denominator_lcm(v) == 6);
}

TEST_CASE("double description matches the subset-solve oracle") {
    std::mt19937 rng(31337);
    std::uniform_int_distribution<int> coeff(-3, 3);
    int tested = 0;
    for (int trial = 0; trial < 60 && tested < 15; ++trial) {
        std::size_t d = 2 + trial % 2;
        HPolyhedron p(d);
        for (std::size_t i = 0; i < d; ++i) {
            IntVec lo(d, 0), hi(d, 0);
            lo[i] = 1;
            hi[i] = -1;
            p.add_inequality(std::move(lo), -1, false);
            p.add_inequality(std::move(hi), -2, false);
        }
        for (int k = 0; k < 2; ++k) {
            IntVec a(d);
            bool zero = true;
            for (std::size_t j = 0; j < d; ++j) {
                a[j] = coeff(rng);
                zero = zero && a[j] == 0;
            }
            if (zero) a[0] = 1;
            p.add_inequality(std::move(a), Int(coeff(rng)), false);
        }
        if (!lp_feasible_point(p)) continue;
        std::vector<RatVec> oracle = brute_force_vertices(p);
        VPolytope got = vertex_enumeration(p);
        CHECK(got.vertices == oracle);  // both sorted lexicographically
        HPolyhedron cl = p.closure();
        for (const RatVec& x : got.vertices) CHECK(cl.contains(x));
        ++tested;
    }
    CHECK(tested >= 10);
}

TEST_CASE("lp optimum equals max over vertices") {
    std::mt19937 rng(777);
    std::uniform_int_distribution<int> coeff(-4, 4);
    HPolyhedron p(3);
    for (std::size_t i = 0; i < 3; ++i) {
        IntVec lo(3, 0), hi(3, 0);
        lo[i] = 2;
        hi[i] = -3;
        p.add_inequality(std::move(lo), -1, false);
        p.add_inequality(std::move(hi), -4, false);
    }
    p.add_inequality({1, 1, 1}, 0, false);
    VPolytope v = vertex_enumeration(p);
    for (int k = 0; k < 12; ++k) {
        RatVec obj{Rat(coeff(rng)), Rat(coeff(rng)), Rat(coeff(rng))};
        LPResult r = lp_maximize(p, obj);
        REQUIRE(r.status == LPStatus::Optimal);
        Rat best;
        bool first = true;
        for (const RatVec& x : v.vertices) {
            Rat val = dot(obj, x);
            if (first || val > best) best = val;
            first = false;
        }
        CHECK(r.optimum == best);
    }
}
