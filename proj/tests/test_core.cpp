#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <sstream>

#include "mg/density.hpp"
#include "mg/multigraph.hpp"
#include "mg/one_factorization.hpp"
#include "mg/rng.hpp"
#include "mg/second_class.hpp"

using namespace mg;

namespace {

Multigraph triangle() { return Multigraph::build(3, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}}); }

Multigraph shannon_triple(int delta) {
    int h = delta / 2;
    return Multigraph::build(3, {{0, 1, h}, {0, 2, h}, {1, 2, h}});
}

Multigraph petersen() {
    // outer 5-cycle, inner pentagram, spokes
    return Multigraph::build(10, {{0, 1, 1},
                                  {1, 2, 1},
                                  {2, 3, 1},
                                  {3, 4, 1},
                                  {0, 4, 1},
                                  {5, 7, 1},
                                  {7, 9, 1},
                                  {6, 9, 1},
                                  {6, 8, 1},
                                  {5, 8, 1},
                                  {0, 5, 1},
                                  {1, 6, 1},
                                  {2, 7, 1},
                                  {3, 8, 1},
                                  {4, 9, 1}});
}

Multigraph complete(int n) {
    std::vector<EdgeSpec> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) e.push_back({u, v, 1});
    return Multigraph::build(n, e);
}

Multigraph random_multigraph(SplitMix64& rng, int n, int max_edges, int max_mult = 3) {
    std::vector<EdgeSpec> e;
    int edges = static_cast<int>(rng.bounded(max_edges + 1));
    for (int i = 0; i < edges; ++i) {
        int u = static_cast<int>(rng.bounded(n));
        int v = static_cast<int>(rng.bounded(n));
        if (u == v) continue;
        e.push_back({std::min(u, v), std::max(u, v), 1 + static_cast<long long>(rng.bounded(max_mult))});
    }
    return Multigraph::build(n, e);
}

}  // namespace

TEST_CASE("build: triangle") {
    Multigraph g = triangle();
    CHECK(g.edge_count() == 3);
    for (int v = 0; v < 3; ++v) CHECK(g.degree(v) == 2);
}

TEST_CASE("build: rejects loops and bad vertices") {
    CHECK_THROWS_AS(Multigraph::build(2, {{0, 0, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(Multigraph::build(2, {{0, 2, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(Multigraph::build(2, {{0, 1, -1}}), std::invalid_argument);
}

TEST_CASE("build: duplicate pairs accumulate") {
    Multigraph g = Multigraph::build(4, {{0, 1, 2}, {0, 1, 1}});
    CHECK(g.multiplicity(0, 1) == 3);
    CHECK(g.multiplicity(1, 0) == 3);
    CHECK(g.edge_count() == 3);
}

TEST_CASE("instances: ordered by (u, v, copy) and invertible") {
    Multigraph g = Multigraph::build(4, {{0, 1, 2}, {2, 3, 1}, {0, 2, 1}});
    CHECK(g.instance(0) == EdgeInstance{0, 1, 0});
    CHECK(g.instance(1) == EdgeInstance{0, 1, 1});
    CHECK(g.instance(2) == EdgeInstance{0, 2, 0});
    CHECK(g.instance(3) == EdgeInstance{2, 3, 0});
    for (long long i = 0; i < g.edge_count(); ++i) {
        EdgeInstance e = g.instance(i);
        CHECK(g.instance_id(e.u, e.v, e.copy) == i);
    }
    CHECK(g.instance_id(0, 3, 0) == -1);
    CHECK(g.instance_id(0, 1, 2) == -1);
}

TEST_CASE("degree_stats: triangle and path") {
    DegreeStats t = degree_stats(triangle());
    CHECK(t.sorted == std::vector<long long>{2, 2, 2});
    CHECK(t.mu_max == 1);
    CHECK(t.mu_min == 1);

    DegreeStats p = degree_stats(Multigraph::build(3, {{0, 1, 1}, {1, 2, 1}}));
    CHECK(p.sorted == std::vector<long long>{2, 1, 1});
    CHECK(p.mu_min == 0);  // pair {0,2} absent
    CHECK(p.mu_max == 1);
}

TEST_CASE("degree_stats: Shannon triple") {
    DegreeStats s = degree_stats(shannon_triple(4));
    CHECK(s.delta == 4);
    CHECK(s.mu_max == 2);
    CHECK(s.mu_min == 2);
}

TEST_CASE("rho_of_subset: examples") {
    std::vector<int> all{0, 1, 2};
    CHECK(rho_of_subset(triangle(), all) == Rational(3, 1));
    Multigraph single = Multigraph::build(2, {{0, 1, 1}});
    std::vector<int> pair{0, 1};
    CHECK(rho_of_subset(single, pair) == Rational(1, 1));
    std::vector<int> v4{0, 1, 2, 3};
    CHECK(rho_of_subset(complete(4), v4) == Rational(3, 1));
    std::vector<int> tiny{0};
    CHECK_THROWS_AS(rho_of_subset(triangle(), tiny), std::invalid_argument);
}

TEST_CASE("rho_exact: examples and tie-breaking") {
    DensityWitness t = rho_exact(triangle());
    CHECK(t.value == Rational(3, 1));
    CHECK(t.subset == std::vector<int>{0, 1, 2});

    // K4: value 3 attained on V and on every 3-subset; smaller wins
    DensityWitness k4 = rho_exact(complete(4));
    CHECK(k4.value == Rational(3, 1));
    CHECK(k4.subset == std::vector<int>{0, 1, 2});

    DensityWitness pet = rho_exact(petersen());
    CHECK(pet.value == Rational(3, 1));

    CHECK_THROWS_AS(rho_exact(complete(4), 3), ExhaustiveBoundExceeded);
}

TEST_CASE("rho_exact: parallel kernel matches the serial reference") {
    SplitMix64 rng(0x5eedc0de01ULL);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 2 + static_cast<int>(rng.bounded(9));
        Multigraph g = random_multigraph(rng, n, 25);
        DensityWitness a = rho_exact(g);
        DensityWitness b = rho_exact_serial(g);
        CHECK(a.value == b.value);
        CHECK(a.subset == b.subset);
        CHECK(a.edges_inside == b.edges_inside);
    }
}

TEST_CASE("rho_exact: witness recomputes and dominates all subsets") {
    SplitMix64 rng(0x5eedc0de02ULL);
    for (int trial = 0; trial < 25; ++trial) {
        int n = 2 + static_cast<int>(rng.bounded(7));
        Multigraph g = random_multigraph(rng, n, 18);
        DensityWitness w = rho_exact(g);
        if (w.subset.size() >= 2) {
            CHECK(rho_of_subset(g, w.subset) == w.value);
            CHECK(Rational(w.edges_inside, static_cast<long long>(w.subset.size()) / 2) == w.value);
        }
        for (uint32_t mask = 0; mask < (1u << n); ++mask) {
            if (__builtin_popcount(mask) < 2) continue;
            std::vector<int> s;
            for (int v = 0; v < n; ++v)
                if (mask & (1u << v)) s.push_back(v);
            CHECK(rho_of_subset(g, s) <= w.value);
        }
    }
}

TEST_CASE("rho: odd n attains the maximum on an odd-size subset") {
    // The returned witness may be a smaller even set on exact ties; the
    // attainment itself always has an odd-size representative.
    SplitMix64 rng(0x5eedc0de03ULL);
    for (int trial = 0; trial < 30; ++trial) {
        int n = 3 + 2 * static_cast<int>(rng.bounded(3));  // 3, 5, 7
        Multigraph g = random_multigraph(rng, n, 16);
        if (g.edge_count() == 0) continue;
        DensityWitness w = rho_exact(g);
        Rational best_odd(0, 1);
        for (uint32_t mask = 0; mask < (1u << n); ++mask) {
            int sz = __builtin_popcount(mask);
            if (sz < 3 || sz % 2 == 0) continue;
            std::vector<int> s;
            for (int v = 0; v < n; ++v)
                if (mask & (1u << v)) s.push_back(v);
            Rational r = rho_of_subset(g, s);
            if (best_odd < r) best_odd = r;
        }
        CHECK(best_odd == w.value);
    }
}

TEST_CASE("rho_fast: lower bound, exact on the examples") {
    CHECK(rho_fast(triangle()).value == Rational(3, 1));
    CHECK(rho_fast(complete(4)).value == Rational(3, 1));
    SplitMix64 rng(0x5eedc0de04ULL);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 2 + static_cast<int>(rng.bounded(9));
        Multigraph g = random_multigraph(rng, n, 22);
        CHECK(rho_fast(g).value <= rho_exact(g).value);
    }
}

TEST_CASE("lower_bound: examples") {
    LowerBoundResult t = lower_bound(triangle());
    CHECK(t.value == 3);
    CHECK(t.from_density);
    CHECK(t.witness.has_value());

    LowerBoundResult star =
        lower_bound(Multigraph::build(5, {{0, 1, 1}, {0, 2, 1}, {0, 3, 1}, {0, 4, 1}}));
    CHECK(star.value == 4);
    CHECK_FALSE(star.from_density);

    LowerBoundResult pet = lower_bound(petersen());
    CHECK(pet.value == 3);  // not tight: chi'(Petersen) = 4
}

TEST_CASE("lower_bound: degenerate graphs") {
    CHECK(lower_bound(Multigraph::build(0, {})).value == 0);
    CHECK(lower_bound(Multigraph::build(1, {})).value == 0);
    CHECK(lower_bound(Multigraph::build(5, {})).value == 0);
}

TEST_CASE("decompose_complete: examples and reassembly identity") {
    auto [c1, g1] = decompose_complete(
        Multigraph::build(4, {{0, 1, 2}, {0, 2, 2}, {0, 3, 2}, {1, 2, 2}, {1, 3, 2}, {2, 3, 2}}));
    CHECK(c1 == 2);
    CHECK(g1.edge_count() == 0);

    auto [c2, g2] = decompose_complete(triangle());
    CHECK(c2 == 1);
    CHECK(g2.edge_count() == 0);

    Multigraph path = Multigraph::build(3, {{0, 1, 1}, {1, 2, 1}});
    auto [c3, g3] = decompose_complete(path);
    CHECK(c3 == 0);
    CHECK(g3 == path);

    SplitMix64 rng(0x5eedc0de05ULL);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 2 + static_cast<int>(rng.bounded(7));
        Multigraph g = random_multigraph(rng, n, 20);
        auto [c, rest] = decompose_complete(g);
        std::vector<EdgeSpec> rebuilt;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) {
                long long mult = rest.multiplicity(u, v) + c;
                if (mult > 0) rebuilt.push_back({u, v, mult});
            }
        CHECK(Multigraph::build(n, rebuilt) == g);
        CHECK(degree_stats(rest).mu_max == degree_stats(g).mu_max - c);
    }
}

TEST_CASE("one_factorization: examples and partition property") {
    CHECK_THROWS_AS(one_factorization(1), std::invalid_argument);
    auto k4 = one_factorization(4);
    CHECK(k4.size() == 3);
    for (auto& cls : k4) CHECK(cls.size() == 2);

    auto k3 = one_factorization(3);
    CHECK(k3.size() == 3);
    for (auto& cls : k3) CHECK(cls.size() == 1);

    for (int n : {2, 3, 4, 5, 6, 7, 8, 9, 12}) {
        auto classes = one_factorization(n);
        CHECK(classes.size() == static_cast<size_t>(n % 2 == 0 ? n - 1 : n));
        std::set<std::pair<int, int>> seen;
        for (auto& cls : classes) {
            CHECK(cls.size() == static_cast<size_t>(n % 2 == 0 ? n / 2 : (n - 1) / 2));
            std::set<int> touched;
            for (auto [u, v] : cls) {
                CHECK(u < v);
                CHECK(touched.insert(u).second);  // matching: no shared vertex
                CHECK(touched.insert(v).second);
                CHECK(seen.insert({u, v}).second);  // classes are disjoint
            }
        }
        CHECK(seen.size() == static_cast<size_t>(n) * (n - 1) / 2);
    }
}

TEST_CASE("check_second_class_conditions: examples") {
    CHECK(check_second_class_conditions(triangle(), 2).str() == "bd");
    CHECK(check_second_class_conditions(triangle(), 3).str() == "b");
    CHECK(check_second_class_conditions(complete(5), 4).str() == "bd");
    CHECK_THROWS_AS(check_second_class_conditions(complete(4), 3), std::invalid_argument);
}

TEST_CASE("multigraph text format: round trip and rejection") {
    Multigraph g = Multigraph::build(4, {{0, 1, 2}, {2, 3, 1}, {0, 2, 1}});
    std::string text = format_multigraph(g);
    CHECK(text == "4 3\n0 1 2\n0 2 1\n2 3 1\n");
    CHECK(parse_multigraph_string(text) == g);

    CHECK_THROWS_AS(parse_multigraph_string("2 1\n0 0 1\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_multigraph_string("2 2\n0 1 1\n0 1 2\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_multigraph_string("2 2\n0 1 1\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_multigraph_string("3 2\n1 2 1\n0 1 1\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_multigraph_string("2 1\n1 0 1\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_multigraph_string("2 1\n0 1 0\n"), std::invalid_argument);
    CHECK(parse_multigraph_string("0 0\n").vertex_count() == 0);
}
