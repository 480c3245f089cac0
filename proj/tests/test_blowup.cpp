#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <homtrop/blowup.hpp>
#include <homtrop/graphs.hpp>
#include <homtrop/pathprofile.hpp>

#include <random>

using namespace homtrop;
using namespace homtrop::blowup;

namespace {

    BlowUpSpec paper_spec()
    {
        return make_spec(Rat(34), Rat(30), rat_vector({4, 3, 3, 0, 1, 3, 4}));
    }

    const std::vector<long> paper_ray_values = {34, 34, 64, 67, 94, 100, 124, 130, 154, 161, 184, 194, 214, 228};

}

TEST_CASE("weight function on the worked spec")
{
    BlowUpSpec spec = paper_spec();
    CHECK(spec.f == 6);
    CHECK(spec.pivot_index() == 2);
    WeightedPath p = weight_function(spec);
    CHECK(p.edge_count == 13);
    CHECK(p.vertex_weights[0] == 34);
    CHECK(p.vertex_weights[1] == 4);
    for (int u = 0; u <= spec.f; ++u)
        CHECK(p.vertex_weights[2 * spec.f + 1 - u] == p.vertex_weights[u]);
    for (int e = 0; e < p.edge_count; ++e) {
        CHECK(p.edge_weights[e] >= std::max(p.vertex_weights[e], p.vertex_weights[e + 1]));
        CHECK(p.edge_weights[e] <= p.vertex_weights[e] + p.vertex_weights[e + 1]);
    }
}

TEST_CASE("degenerate spec with d = 0")
{
    BlowUpSpec spec = make_spec(Rat(5), Rat(5), rat_vector({0}));
    WeightedPath p = weight_function(spec);
    CHECK(p.vertex_weights == rat_vector({5, 0}));
    CHECK(p.edge_weights == rat_vector({5}));
}

TEST_CASE("invalid specs rejected")
{
    CHECK_THROWS_AS(make_spec(Rat(1), Rat(2), rat_vector({0})), SpecError);   // b < s
    CHECK_THROWS_AS(make_spec(Rat(3), Rat(1), rat_vector({1})), SpecError);   // d0 != b-s
    CHECK_THROWS_AS(make_spec(Rat(4), Rat(1), rat_vector({3, 2})), SpecError); // 2*tail > s
    CHECK_THROWS_AS(make_spec(Rat(10), Rat(2), rat_vector({8})), SpecError);  // s < d0 at t=0
}

TEST_CASE("max-weight homomorphism reproduces the worked ray")
{
    WeightedPath p = weight_function(paper_spec());
    for (int i = 0; i <= 13; ++i)
        CHECK(max_weight_hom(p, i) == paper_ray_values[i]);
    CHECK(max_weight_hom(p, 0) == 34); // the left end has the maximal vertex weight

    WeightedPath zeros;
    zeros.edge_count = 3;
    zeros.vertex_weights.assign(4, Rat(0));
    zeros.edge_weights.assign(3, Rat(0));
    for (int i = 0; i <= 6; ++i)
        CHECK(max_weight_hom(zeros, i) == 0);
}

TEST_CASE("limit ray closed form")
{
    RatVector ray = limit_ray(paper_spec(), 6);
    REQUIRE(ray.size() == 14);
    for (int i = 0; i <= 13; ++i)
        CHECK(ray[i] == paper_ray_values[i]);
    for (int i = 1; i <= 6; ++i)
        CHECK(ray[2 * i] - ray[2 * i - 2] == 30);

    BlowUpSpec flat = make_spec(Rat(7), Rat(4), rat_vector({3}));
    RatVector fray = limit_ray(flat, 4);
    for (int i = 0; i <= 4; ++i)
        CHECK(fray[2 * i + 1] == (i + 1) * 4 + 3);
}

TEST_CASE("closed form equals the DP on random valid specs")
{
    std::mt19937_64 rng(424242);
    std::uniform_int_distribution<int> small(0, 3);
    std::uniform_int_distribution<int> len(0, 5);
    int checked = 0;
    while (checked < 100) {
        // monotone nonincreasing d is prefix-dominant; symmetrize makes it
        // an admissible near-symmetric profile
        int f = len(rng);
        RatVector d(f + 1);
        int cur = small(rng) + 1;
        for (int i = 0; i <= f; ++i) {
            cur = std::min<int>(cur, small(rng) + (i == 0 ? 1 : 0));
            d[i] = cur;
        }
        RatVector sym = pathprofile::symmetrize_d(d);
        Rat tail = 0;
        for (std::size_t i = 1; i < sym.size(); ++i)
            tail += sym[i];
        Rat s = 2 * tail + small(rng);
        if (sym[0] > s)
            s = sym[0] + small(rng); // keep condition (8) when the pivot is 0
        Rat b = s + sym[0];
        BlowUpSpec spec;
        try {
            spec = make_spec(b, s, sym);
        }
        catch (const SpecError &) {
            continue;
        }
        int n = spec.f + 2;
        WeightedPath p = weight_function(spec);
        RatVector ray = limit_ray(spec, n);
        for (int i = 0; i <= 2 * n + 1; ++i)
            CHECK(ray[i] == max_weight_hom(p, i));
        ++checked;
    }
}

TEST_CASE("monotone DP when some edge dominates its endpoints")
{
    WeightedPath p = weight_function(paper_spec());
    bool dominating_edge = false;
    for (int e = 0; e < p.edge_count; ++e)
        if (p.edge_weights[e] >= p.vertex_weights[e] && p.edge_weights[e] >= p.vertex_weights[e + 1])
            dominating_edge = true;
    REQUIRE(dominating_edge);
    for (int i = 0; i <= 12; ++i)
        CHECK(max_weight_hom(p, i + 1) >= max_weight_hom(p, i));
}

TEST_CASE("blow-up graph: integer-weight complete joins are counted exactly")
{
    // b=s=1, d=(0): parts (m, 1), one complete join; the partition identity
    // hom(P_i; B_m) = sum over phi of m^p(phi) holds exactly
    BlowUpSpec spec = make_spec(Rat(1), Rat(1), rat_vector({0}));
    for (long m : {2L, 3L, 5L}) {
        graphs::Graph bm = build_blowup_graph(spec, m);
        CHECK(bm.vertex_count() == m + 1);
        CHECK(bm.edge_count() == m);
        auto counts = graphs::path_hom_vector(bm, 7).counts;
        for (int i = 0; i <= 7; ++i) {
            // hom(P_i; star with m leaves): m^((i+2)/2) + m^(i/2) split by parity
            BigInt expected = (i % 2 == 0)
                ? BigInt(big_pow(m, i / 2 + 1) + big_pow(m, i / 2))
                : BigInt(2 * big_pow(m, (i + 1) / 2));
            CHECK(counts[i] == expected);
        }
    }
}

namespace {

    // Exact sum over homomorphisms phi: P_i -> P of m^p(phi); the partition
    // identity says this equals hom(P_i; B_m) for integer weights.
    BigInt partition_sum(const WeightedPath & p, long m, int i)
    {
        int verts = p.edge_count + 1;
        auto power = [&](const Rat & e) {
            REQUIRE(e.get_den() == 1);
            return big_pow(m, mpz_get_ui(e.get_num().get_mpz_t()));
        };
        std::vector<BigInt> sum(verts);
        for (int w = 0; w < verts; ++w)
            sum[w] = power(p.vertex_weights[w]);
        for (int step = 0; step < i; ++step) {
            std::vector<BigInt> next(verts, BigInt(0));
            for (int w = 0; w < verts; ++w) {
                if (w > 0)
                    next[w] += sum[w - 1] * power(p.edge_weights[w - 1] - p.vertex_weights[w - 1]);
                if (w < verts - 1)
                    next[w] += sum[w + 1] * power(p.edge_weights[w] - p.vertex_weights[w + 1]);
            }
            sum = std::move(next);
        }
        BigInt total = 0;
        for (const auto & x : sum)
            total += x;
        return total;
    }

}

TEST_CASE("blow-up graph satisfies the partition identity exactly")
{
    BlowUpSpec spec = make_spec(Rat(3), Rat(2), rat_vector({1, 1}));
    WeightedPath p = weight_function(spec);
    RatVector ray = limit_ray(spec, 3);
    for (long t : {2L, 3L}) {
        long m = 1L << t;
        graphs::Graph bm = build_blowup_graph(spec, m, 400000);
        auto counts = graphs::path_hom_vector(bm, 7).counts;
        for (int i = 0; i <= 7; ++i) {
            CHECK(counts[i] == partition_sum(p, m, i));
            // the limit entry is the dominant exponent
            REQUIRE(ray[i].get_den() == 1);
            CHECK(counts[i] >= big_pow(m, mpz_get_ui(ray[i].get_num().get_mpz_t())));
        }
    }
}

TEST_CASE("toy blow-up is well formed")
{
    BlowUpSpec small = make_spec(Rat(3), Rat(2), rat_vector({1, 0, 0, 0, 0, 0, 1}));
    graphs::Graph g = build_blowup_graph(small, 2, 5000);
    CHECK(g.vertex_count() == 40); // 8 + 12 * 2 + 8 at m = 2
    auto counts = graphs::path_hom_vector(g, 5).counts;
    WeightedPath p = weight_function(small);
    for (int i = 0; i <= 5; ++i)
        CHECK(counts[i] == partition_sum(p, 2, i));
}

TEST_CASE("spec text round trip")
{
    BlowUpSpec spec = parse_spec("b=34 s=30 d=4,3,3,0,1,3,4");
    CHECK(spec.f == 6);
    CHECK(spec.b == 34);
    BlowUpSpec again = parse_spec(spec_to_text(spec));
    CHECK(again.d == spec.d);
    CHECK_THROWS_AS(parse_spec("b=1 s=2"), SpecError);
    CHECK_THROWS_AS(parse_spec("b=1 s=2 d=0"), SpecError);
}
