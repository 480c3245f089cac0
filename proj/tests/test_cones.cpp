#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <homtrop/cones.hpp>

#include <algorithm>
#include <random>

using namespace homtrop;
using namespace homtrop::cones;

namespace {

    ConeH orthant(int d)
    {
        ConeH c;
        c.dim = d;
        for (int i = 0; i < d; ++i) {
            RatVector e(d, Rat(0));
            e[i] = 1;
            c.add_row("e" + std::to_string(i), std::move(e));
        }
        return c;
    }

    ConeH even_cycle_cone(int m)
    {
        // trop of {C_4,...,C_2m}: convexity rows, -y4+y6, growth row
        ConeH c;
        c.dim = m - 1;
        for (int i = 3; i <= m - 1; ++i) {
            RatVector row(m - 1, Rat(0));
            row[i - 3] = 1;
            row[i - 2] = -2;
            row[i - 1] = 1;
            c.add_row("conv" + std::to_string(i), std::move(row));
        }
        RatVector mono(m - 1, Rat(0));
        mono[0] = -1;
        mono[1] = 1;
        c.add_row("mono", std::move(mono));
        RatVector growth(m - 1, Rat(0));
        growth[m - 3] = m;
        growth[m - 2] = -(m - 1);
        c.add_row("growth", std::move(growth));
        return c;
    }

    bool contains_ray(const RaySet & rs, const RatVector & v)
    {
        return std::find(rs.rays.begin(), rs.rays.end(), primitive(v)) != rs.rays.end();
    }

}

TEST_CASE("extreme rays of the orthant")
{
    RaySet rs = extreme_rays(orthant(2));
    CHECK(rs.lineality.empty());
    REQUIRE(rs.rays.size() == 2);
    CHECK(contains_ray(rs, rat_vector({1, 0})));
    CHECK(contains_ray(rs, rat_vector({0, 1})));
}

TEST_CASE("even-cycle cone m=3 has the stated boundary rays")
{
    ConeH c;
    c.dim = 2;
    c.add_row("mono", rat_vector({-1, 1}));
    c.add_row("growth", rat_vector({3, -2}));
    RaySet rs = extreme_rays(c);
    CHECK(rs.lineality.empty());
    REQUIRE(rs.rays.size() == 2);
    CHECK(contains_ray(rs, rat_vector({1, 1})));
    CHECK(contains_ray(rs, rat_vector({2, 3})));
}

TEST_CASE("complete-graph cone m=3 rays")
{
    ConeH c;
    c.dim = 3;
    c.add_row("kk2", rat_vector({2, -1, 0}));
    c.add_row("kk3", rat_vector({0, 3, -2}));
    c.add_row("pos", rat_vector({0, 0, 1}));
    RaySet rs = extreme_rays(c);
    REQUIRE(rs.rays.size() == 3);
    CHECK(contains_ray(rs, rat_vector({1, 0, 0})));
    CHECK(contains_ray(rs, rat_vector({1, 2, 0})));
    CHECK(contains_ray(rs, rat_vector({1, 2, 3})));
}

TEST_CASE("dual cone basics")
{
    RaySet dual_orthant = dual_cone(orthant(3));
    CHECK(dual_orthant.lineality.empty());
    CHECK(dual_orthant.rays.size() == 3);

    // dual of a single ray is a halfspace; verify via the round trip
    RaySet one_ray;
    one_ray.dim = 2;
    one_ray.rays.push_back(rat_vector({1, 1}));
    ConeH halfspace = dual_cone_of_rays(one_ray);
    RaySet halfspace_rays = extreme_rays(halfspace);
    CHECK(halfspace_rays.lineality.size() == 1);
    CHECK(halfspace_rays.rays.size() == 1);
    ConeH back = dual_cone_of_rays(dual_cone(halfspace));
    CHECK(cones_equal(halfspace, back));

    // dual of the full space is the origin
    ConeH full;
    full.dim = 3;
    RaySet zero = dual_cone(full);
    CHECK(zero.rays.empty());
    CHECK(zero.lineality.empty());
}

TEST_CASE("tropical sum")
{
    CHECK(tropical_sum(rat_vector({1, 1, 1}), rat_vector({2, 3, 4})) == rat_vector({2, 3, 4}));
    CHECK(tropical_sum(rat_vector({3, 3, 3}), rat_vector({2, 3, 4})) == rat_vector({3, 3, 4}));
    RatVector x = rat_vector({5, -1, 2});
    CHECK(tropical_sum(x, x) == x);
    CHECK_THROWS(tropical_sum(rat_vector({1}), rat_vector({1, 2})));
}

TEST_CASE("max closure examples")
{
    RaySet basis;
    basis.dim = 2;
    basis.rays.push_back(rat_vector({1, 0}));
    basis.rays.push_back(rat_vector({0, 1}));
    CHECK(cones_equal(max_closure(basis), orthant(2)));

    RaySet pair;
    pair.dim = 3;
    pair.rays.push_back(rat_vector({1, 1, 1}));
    pair.rays.push_back(rat_vector({2, 3, 4}));
    ConeH closure = max_closure(pair);
    RatVector mix = rat_vector({3, 3, 4});
    CHECK(member(closure, mix));
    CHECK_FALSE(member_hull(pair, mix).has_value());

    RaySet single;
    single.dim = 3;
    single.rays.push_back(rat_vector({1, 2, 1}));
    ConeH hull = max_closure(single);
    RaySet hull_rays = extreme_rays(hull);
    CHECK(hull_rays.lineality.empty());
    REQUIRE(hull_rays.rays.size() == 1);
    CHECK(hull_rays.rays[0] == rat_vector({1, 2, 1}));

    RaySet bad;
    bad.dim = 2;
    bad.rays.push_back(rat_vector({1, -1}));
    CHECK_THROWS(max_closure(bad));
}

TEST_CASE("double hull reproduces the even-cycle cones")
{
    RaySet m3;
    m3.dim = 2;
    m3.rays.push_back(rat_vector({1, 1}));
    m3.rays.push_back(rat_vector({2, 3}));
    ConeH c3;
    c3.dim = 2;
    c3.add_row("mono", rat_vector({-1, 1}));
    c3.add_row("growth", rat_vector({3, -2}));
    CHECK(cones_equal(double_hull(m3), c3));

    RaySet m4;
    m4.dim = 3;
    m4.rays.push_back(rat_vector({1, 1, 1}));
    m4.rays.push_back(rat_vector({2, 3, 4}));
    CHECK(cones_equal(double_hull(m4), even_cycle_cone(4)));

    RaySet empty;
    empty.dim = 2;
    ConeH origin = double_hull(empty);
    RaySet origin_rays = extreme_rays(origin);
    CHECK(origin_rays.rays.empty());
    CHECK(origin_rays.lineality.empty());
}

TEST_CASE("cones_equal")
{
    CHECK(cones_equal(orthant(3), orthant(3)));
    ConeH half;
    half.dim = 2;
    half.add_row("x", rat_vector({1, 0}));
    CHECK_FALSE(cones_equal(orthant(2), half));
}

TEST_CASE("membership")
{
    ConeH c4 = even_cycle_cone(4);
    CHECK(member(c4, rat_vector({3, 3, 4})));
    CHECK(member(c4, rat_vector({0, 0, 0})));
    CHECK_FALSE(member(c4, rat_vector({1, 0, 0})));

    RaySet one;
    one.dim = 2;
    one.rays.push_back(rat_vector({1, 1}));
    RatVector separating;
    CHECK_FALSE(member_hull(one, rat_vector({1, 0}), &separating).has_value());
    CHECK(dot(separating, rat_vector({1, 1})) >= 0);
    CHECK(dot(separating, rat_vector({1, 0})) < 0);
    auto combo = member_hull(one, rat_vector({3, 3}));
    REQUIRE(combo.has_value());
    CHECK(combo->coefficients == RatVector{Rat(3)});
}

TEST_CASE("duality involution on assorted cones")
{
    std::vector<ConeH> cones = {orthant(2), orthant(4), even_cycle_cone(4), even_cycle_cone(5)};
    ConeH c;
    c.dim = 3;
    c.add_row("a", rat_vector({1, 1, -1}));
    c.add_row("b", rat_vector({0, 1, 0}));
    cones.push_back(c);
    for (const auto & cone : cones) {
        ConeH back = dual_cone_of_rays(dual_cone(cone));
        CHECK(cones_equal(cone, back));
    }
}

TEST_CASE("max-closure output is closed under tropical sums of hull points")
{
    RaySet pair;
    pair.dim = 3;
    pair.rays.push_back(rat_vector({1, 1, 1}));
    pair.rays.push_back(rat_vector({2, 3, 4}));
    ConeH closure = max_closure(pair);
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> coeff(0, 5);
    for (int trial = 0; trial < 200; ++trial) {
        RatVector x = add(scale(coeff(rng), pair.rays[0]), scale(coeff(rng), pair.rays[1]));
        RatVector y = add(scale(coeff(rng), pair.rays[0]), scale(coeff(rng), pair.rays[1]));
        CHECK(member(closure, tropical_sum(x, y)));
    }
}

TEST_CASE("extreme rays are tight on dim-1 independent rows")
{
    for (const ConeH & cone : {even_cycle_cone(4), even_cycle_cone(6), orthant(4)}) {
        RaySet rs = extreme_rays(cone);
        REQUIRE(rs.lineality.empty());
        for (const auto & ray : rs.rays) {
            RatMatrix tight;
            for (const auto & row : cone.rows)
                if (dot(row.coeffs, ray) == 0)
                    tight.push_back(row.coeffs);
            CHECK(rank(tight) == cone.dim - 1);
        }
    }
}

TEST_CASE("dual extreme rays of a max-closure have at most one negative coordinate")
{
    RaySet pair;
    pair.dim = 3;
    pair.rays.push_back(rat_vector({1, 1, 1}));
    pair.rays.push_back(rat_vector({2, 3, 4}));
    RaySet star;
    star.dim = 4;
    star.rays.push_back(rat_vector({1, 1, 1, 1}));
    star.rays.push_back(rat_vector({1, 0, 0, 0}));
    star.rays.push_back(rat_vector({1, 1, 2, 3}));
    star.rays.push_back(rat_vector({1, 2, 3, 4}));
    for (const RaySet & gens : {pair, star}) {
        ConeH closure = max_closure(gens);
        RaySet dual = dual_cone(closure);
        for (const auto & ray : dual.rays) {
            int negatives = 0;
            for (const auto & x : ray)
                if (x < 0)
                    ++negatives;
            CHECK(negatives <= 1);
        }
    }
}

TEST_CASE("fourier-motzkin projection")
{
    // cone {(x,y,z): z >= 0, x - z >= 0, -x + y + z >= 0} projected to (x,y)
    ConeH c;
    c.dim = 3;
    c.add_row("a", rat_vector({0, 0, 1}));
    c.add_row("b", rat_vector({1, 0, -1}));
    c.add_row("c", rat_vector({-1, 1, 1}));
    ConeH proj = project_cone(c, 2);
    // feasible z exists iff 0 <= z <= x and z >= x - y: projection is x >= 0, y >= 0
    CHECK(cones_equal(proj, orthant(2)));
    CHECK_THROWS(project_cone(c, 5));
}

TEST_CASE("dimension limit")
{
    CHECK_THROWS_AS(extreme_rays(orthant(17)), DimensionLimitError);
}
