#include <catch2/catch_amalgamated.hpp>

#include "insideout/lp.hpp"
#include "insideout/polyhedron.hpp"

#include <random>
#include <sstream>

using namespace insideout;

namespace {

HPolyhedron unit_square(bool strict = false) {
    HPolyhedron p(2);
    p.add_inequality({1, 0}, 0, strict);
    p.add_inequality({-1, 0}, -1, strict);
    p.add_inequality({0, 1}, 0, strict);
    p.add_inequality({0, -1}, -1, strict);
    return p;
}

} // namespace

TEST_CASE("constraint canonicalization is primitive with joint gcd") {
    HPolyhedron p(2);
    p.add_inequality({2, 4}, 6, false);
    REQUIRE(p.inequalities().size() == 1);
    CHECK(p.inequalities()[0].a == IntVec{1, 2});
    CHECK(p.inequalities()[0].b == 3);

    p.add_inequality({1, 2}, 3, true);  // strict subsumes the weak duplicate
    REQUIRE(p.inequalities().size() == 1);
    CHECK(p.inequalities()[0].strict);

    p.add_equality({-3, 0}, 6);
    REQUIRE(p.equalities().size() == 1);
    CHECK(p.equalities()[0].a == IntVec{1, 0});  // sign fixed
    CHECK(p.equalities()[0].b == -2);
    p.add_equality({1, 0}, -2);
    CHECK(p.equalities().size() == 1);
}

TEST_CASE("zero-normal constraints resolve to truth or infeasibility") {
    HPolyhedron p(2);
    p.add_inequality({0, 0}, -1, false);  // 0 >= -t, vacuous
    CHECK(p.inequalities().empty());
    CHECK(!p.trivially_infeasible());
    p.add_inequality({0, 0}, 0, true);  // 0 > 0
    CHECK(p.trivially_infeasible());
}

TEST_CASE("hrep round trip and parse errors") {
    std::string text =
        "2 4 1\n"
        "0 1 0 0\n"
        "-1 -1 0 0\n"
        "0 0 1 1\n"
        "-1 0 -1 0\n"
        "1 1 1\n";
    std::istringstream in(text);
    HPolyhedron p = parse_hrep(in);
    CHECK(p.dim() == 2);
    CHECK(p.inequalities().size() == 4);
    CHECK(p.equalities().size() == 1);

    std::ostringstream out;
    print_hrep(out, p);
    std::istringstream in2(out.str());
    HPolyhedron q = parse_hrep(in2);
    CHECK(p.canonical_key() == q.canonical_key());

    std::istringstream bad("2 1 0\n0 1 x 0\n");
    CHECK_THROWS_AS(parse_hrep(bad), ParseError);
    std::istringstream bad2("2 2 0\n0 1 0 0\n");
    CHECK_THROWS_AS(parse_hrep(bad2), ParseError);
}

TEST_CASE("lp maximizes exactly over the unit square") {
    LPResult r = lp_maximize(unit_square(), {Rat(1), Rat(0)});
    REQUIRE(r.status == LPStatus::Optimal);
    CHECK(r.optimum == 1);
    CHECK(unit_square().contains(r.witness));
    CHECK(dot(RatVec{Rat(1), Rat(0)}, r.witness) == 1);

    LPResult diag = lp_maximize(unit_square(), {Rat(1), Rat(1)});
    REQUIRE(diag.status == LPStatus::Optimal);
    CHECK(diag.optimum == 2);

    LPResult mn = lp_minimize(unit_square(), {Rat(1), Rat(3)});
    REQUIRE(mn.status == LPStatus::Optimal);
    CHECK(mn.optimum == 0);
}

TEST_CASE("lp reports infeasible and unbounded states") {
    HPolyhedron infeas(1);
    infeas.add_inequality({1}, 0, false);
    infeas.add_inequality({-1}, 1, false);  // -x >= 1
    CHECK(lp_maximize(infeas, {Rat(1)}).status == LPStatus::Infeasible);

    HPolyhedron ray(1);
    ray.add_inequality({1}, 0, false);
    LPResult r = lp_maximize(ray, {Rat(1)});
    REQUIRE(r.status == LPStatus::Unbounded);
    CHECK(dot(RatVec{Rat(1)}, r.ray) > 0);
    CHECK(ray.contains(r.witness));
}

TEST_CASE("lp handles fractional optima exactly") {
    // max x + y subject to 2x + 3y <= 1, x,y >= 0: optimum 1/2 at (1/2, 0).
    HPolyhedron p(2);
    p.add_inequality({1, 0}, 0, false);
    p.add_inequality({0, 1}, 0, false);
    p.add_inequality({-2, -3}, -1, false);
    LPResult r = lp_maximize(p, {Rat(1), Rat(1)});
    REQUIRE(r.status == LPStatus::Optimal);
    CHECK(r.optimum == Rat(1, 2));
}

TEST_CASE("lp treats strict constraints as their closure") {
    LPResult r = lp_maximize(unit_square(true), {Rat(1), Rat(0)});
    REQUIRE(r.status == LPStatus::Optimal);
    CHECK(r.optimum == 1);
}

TEST_CASE("equalities restrict the feasible set") {
    HPolyhedron p = unit_square();
    p.add_equality({1, 1}, 1);  // x + y = 1
    LPResult r = lp_maximize(p, {Rat(1), Rat(-1)});
    REQUIRE(r.status == LPStatus::Optimal);
    CHECK(r.optimum == 1);  // at (1, 0)
    CHECK(r.witness == RatVec{Rat(1), Rat(0)});
}

TEST_CASE("lp_point_above stops at the threshold") {
    auto pt = lp_point_above(unit_square(), {Rat(1), Rat(0)}, Rat(1, 2));
    REQUIRE(pt.has_value());
    CHECK((*pt)[0] > Rat(1, 2));
    CHECK(unit_square().contains(*pt));
    CHECK(!lp_point_above(unit_square(), {Rat(1), Rat(0)}, Rat(1)).has_value());
    CHECK(!lp_point_above(unit_square(), {Rat(1), Rat(0)}, Rat(2)).has_value());

    HPolyhedron ray(1);
    ray.add_inequality({1}, 0, false);
    auto far = lp_point_above(ray, {Rat(1)}, Rat(1000));
    REQUIRE(far.has_value());
    CHECK((*far)[0] > 1000);
}

TEST_CASE("lp_strict_point finds interior points when they exist") {
    HPolyhedron sq = unit_square();
    auto w = lp_strict_point(sq);
    REQUIRE(w.has_value());
    for (const Constraint& c : sq.inequalities()) CHECK(dot(c.a, *w) > c.b);

    // x >= 0, y >= 0, x + y <= 0 pins the origin: no strict point.
    HPolyhedron pin(2);
    pin.add_inequality({1, 0}, 0, false);
    pin.add_inequality({0, 1}, 0, false);
    pin.add_inequality({-1, -1}, 0, false);
    CHECK(!lp_strict_point(pin).has_value());
}

TEST_CASE("lp agrees with vertex scan on random bounded polytopes") {
    std::mt19937 rng(4242);
    std::uniform_int_distribution<int> coeff(-3, 3);
    for (int trial = 0; trial < 25; ++trial) {
        // Box [0,2]^2 cut by a few random halfplanes through lattice points;
        // compare the LP optimum against a fine rational grid scan.
        HPolyhedron p(2);
        p.add_inequality({1, 0}, 0, false);
        p.add_inequality({-1, 0}, -2, false);
        p.add_inequality({0, 1}, 0, false);
        p.add_inequality({0, -1}, -2, false);
        for (int k = 0; k < 2; ++k) {
            IntVec a{coeff(rng), coeff(rng)};
            if (a[0] == 0 && a[1] == 0) a[0] = 1;
            p.add_inequality(a, Int(coeff(rng)), false);
        }
        RatVec obj{Rat(coeff(rng)), Rat(coeff(rng))};
        LPResult r = lp_maximize(p, obj);
        if (r.status != LPStatus::Optimal) continue;
        CHECK(p.contains(r.witness));
        Rat best;
        bool any = false;
        const int N = 12;
        for (int i = 0; i <= 2 * N; ++i) {
            for (int j = 0; j <= 2 * N; ++j) {
                RatVec x{Rat(i, N), Rat(j, N)};
                if (!p.contains(x)) continue;
                Rat v = dot(obj, x);
                if (!any || v > best) best = v;
                any = true;
            }
        }
        if (any) CHECK(r.optimum >= best);
        CHECK(dot(obj, r.witness) == r.optimum);
    }
}
