#include "latticecf/errors.hpp"
#include "latticecf/graphs.hpp"

#include "../support/oracles.hpp"

#include <doctest.h>

#include <random>

using namespace latticecf;

namespace {

WeightedDualGraph random_graph(std::mt19937_64& gen) {
    std::uniform_int_distribution<int> nverts(1, 6);
    std::uniform_int_distribution<int> weight(-6, 1);
    std::uniform_int_distribution<int> coin(0, 3);
    WeightedDualGraph g;
    const int n = nverts(gen);
    for (int i = 0; i < n; ++i)
        g.add_vertex(weight(gen));
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            const int c = coin(gen);
            if (c == 0 || (c == 1 && i != j && coin(gen) == 0)) {
                g.add_edge(i, j);
                if (c == 1)
                    g.add_edge(i, j);
            }
        }
    }
    return g;
}

} // namespace

TEST_SUITE("graphs") {

TEST_CASE("intersection matrices") {
    const IntMatrix a = intersection_matrix(chain({-2, -3, -2, -2}));
    CHECK(a == IntMatrix{{-2, 1, 0, 0}, {1, -3, 1, 0}, {0, 1, -2, 1}, {0, 0, 1, -2}});
    CHECK(intersection_matrix(chain({-1})) == IntMatrix{{-1}});
    CHECK(intersection_matrix(cycle_graph({-2, -3})) == IntMatrix{{-2, 2}, {2, -3}});
    WeightedDualGraph loop;
    loop.add_vertex(1);
    loop.add_edge(0, 0);
    CHECK(intersection_matrix(loop) == IntMatrix{{1}});
    CHECK(intersection_matrix(cycle_graph({-5})) == IntMatrix{{-5}});
}

TEST_CASE("contractibility") {
    CHECK(is_contractible(chain({-2, -3, -2, -2})));
    CHECK(leading_minors(intersection_matrix(chain({-2, -3, -2, -2}))) == IntSeq{-2, 5, -8, 11});
    CHECK_FALSE(is_contractible(chain({0})));
    WeightedDualGraph loop;
    loop.add_vertex(1);
    loop.add_edge(0, 0);
    CHECK_FALSE(is_contractible(loop));
    CHECK(is_contractible(chain({})));
    CHECK_FALSE(is_contractible(chain({-1, -1})));
    CHECK(is_contractible(chain({-1, -2})));
    CHECK_FALSE(is_contractible(chain({-2, -1, -2})));
    // E8 is negative definite, the affine E8 is not.
    WeightedDualGraph e8 = chain({-2, -2, -2, -2, -2, -2, -2});
    e8.add_edge(2, e8.add_vertex(-2));
    CHECK(is_contractible(e8));
    e8.add_edge(6, e8.add_vertex(-2));
    CHECK_FALSE(is_contractible(e8));
}

TEST_CASE("minor signs agree with rational elimination on random graphs") {
    std::mt19937_64 gen(7);
    int positives = 0;
    for (int it = 0; it < 1000; ++it) {
        const WeightedDualGraph g = random_graph(gen);
        const bool expected = oracle::negative_definite(intersection_matrix(g));
        REQUIRE(is_contractible(g) == expected);
        positives += expected ? 1 : 0;
    }
    CHECK(positives > 50);
}

TEST_CASE("fundamental cycles") {
    CHECK(fundamental_cycle(chain({-2, -3, -2, -2})) == IntSeq{1, 1, 1, 1});
    CHECK(fundamental_cycle(chain({-2})) == IntSeq{1});
    WeightedDualGraph d4;
    const std::size_t c = d4.add_vertex(-2);
    for (int i = 0; i < 3; ++i)
        d4.add_edge(c, d4.add_vertex(-2));
    CHECK(fundamental_cycle(d4) == IntSeq{2, 1, 1, 1});
    CHECK(oracle::fundamental_cycle(d4, 4) == IntSeq{2, 1, 1, 1});

    WeightedDualGraph two = chain({-2});
    two.add_vertex(-2);
    CHECK_THROWS_AS(fundamental_cycle(two), Error);
    CHECK_THROWS_AS(fundamental_cycle(chain({-1, -1})), Error);
    try {
        fundamental_cycle(two);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::disconnected);
    }
}

TEST_CASE("fundamental cycle properties on random contractible graphs") {
    std::mt19937_64 gen(11);
    int checked = 0;
    for (int it = 0; it < 3000 && checked < 150; ++it) {
        WeightedDualGraph g = random_graph(gen);
        if (g.size() > 5 || !g.connected() || !is_contractible(g))
            continue;
        ++checked;
        const IntSeq z = fundamental_cycle(g);
        const IntMatrix m = intersection_matrix(g);
        for (std::size_t i = 0; i < g.size(); ++i) {
            Integer s = 0;
            for (std::size_t j = 0; j < g.size(); ++j)
                s += z[j] * m[j][i];
            REQUIRE(s <= 0);
            REQUIRE(z[i] >= 1);
        }
        const auto brute = oracle::fundamental_cycle(g, 6);
        if (brute)
            REQUIRE(z == *brute);
    }
    CHECK(checked > 20);
}

TEST_CASE("chains with weights <= -2 have reduced fundamental cycle") {
    for (int it = 0; it < 200; ++it) {
        IntSeq w = oracle::random_sequence(1, 10, 2, 7);
        for (auto& x : w)
            x = -x;
        REQUIRE(fundamental_cycle(chain(w)) == IntSeq(w.size(), Integer(1)));
    }
}

TEST_CASE("normalized Euler numbers") {
    WeightedDualGraph loop;
    loop.add_vertex(1);
    loop.add_edge(0, 0);
    CHECK(euler_normalized(loop, 0) == -1);
    CHECK(euler_normalized(chain({-2}), 0) == -2);
    WeightedDualGraph star;
    const std::size_t c = star.add_vertex(-7);
    for (int i = 0; i < 9; ++i)
        star.add_edge(c, star.add_vertex(-2));
    CHECK(star.valency(c) == 9);
    CHECK(euler_normalized(star, c) == -16);
    CHECK_THROWS_AS(euler_normalized(star, 99), Error);
}

TEST_CASE("graph construction rules") {
    WeightedDualGraph g;
    g.add_vertex(-1, 0, "E1");
    CHECK_THROWS_AS(g.add_vertex(-2, 0, "E1"), Error);
    CHECK_THROWS_AS(g.add_vertex(-2, -1), Error);
    CHECK_THROWS_AS(g.add_edge(0, 3), Error);
    CHECK(g.find_label("E1") == std::size_t{0});
    CHECK_FALSE(g.find_label("E2"));
    CHECK(chain({}).empty());
    CHECK(cycle_graph({-2, -3}).edges().size() == 2);
}

TEST_CASE("DOT output") {
    const std::string dot = to_dot(chain({-2, -3}));
    CHECK(dot ==
          "graph G {\n"
          "  node [shape=circle];\n"
          "  v0 [label=\"-2\", weight=\"-2\", genus=\"0\"];\n"
          "  v1 [label=\"-3\", weight=\"-3\", genus=\"0\"];\n"
          "  v0 -- v1;\n"
          "}\n");
}

TEST_CASE("JSON round trip") {
    std::mt19937_64 gen(3);
    for (int it = 0; it < 200; ++it) {
        WeightedDualGraph g = random_graph(gen);
        if (it % 3 == 0)
            g.add_arrow(0);
        REQUIRE(graph_from_json(to_json(g)) == g);
    }
    WeightedDualGraph big;
    Integer w = 1;
    for (int i = 0; i < 30; ++i)
        w *= 1000;
    big.add_vertex(-w, 2, "E1");
    big.add_vertex(-2);
    big.add_edge(0, 1);
    big.add_arrow(1);
    const std::string text = to_json(big);
    CHECK(text.find("\"-1" + std::string(90, '0') + "\"") != std::string::npos);
    CHECK(graph_from_json(text) == big);
    CHECK_THROWS_AS(graph_from_json("{"), Error);
    CHECK_THROWS_AS(graph_from_json("{\"vertices\":[{\"id\":1,\"weight\":2}],\"edges\":[]}"), Error);
}

}
