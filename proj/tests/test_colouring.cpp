#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <set>

#include "doctest.h"
#include "starcol/colouring.hpp"
#include "starcol/constructions.hpp"
#include "starcol/graph.hpp"
#include "test_util.hpp"

using namespace starcol;

TEST_CASE("verify_star basics") {
    Graph c4 = gen_standard(StandardKind::Cycle, 4);
    CHECK(verify_star(c4, make_colouring(3, {0, 1, 0, 2})).ok);

    Graph p4 = build_graph(4, {{0, 1}, {1, 2}, {2, 3}});
    auto bad = verify_star(p4, make_colouring(2, {0, 1, 0, 1}));
    CHECK(!bad.ok);
    REQUIRE(bad.bicoloured_p4);
    // The witness is the whole path in some traversal order.
    std::array<int, 4> w = *bad.bicoloured_p4;
    std::set<int> verts(w.begin(), w.end());
    CHECK(verts == std::set<int>{0, 1, 2, 3});

    auto mono = verify_star(c4, make_colouring(2, {0, 0, 1, 1}));
    CHECK(!mono.ok);
    CHECK(mono.monochromatic_edge == std::pair<int, int>{0, 1});

    CHECK_THROWS_AS(verify_star(c4, make_colouring(2, {0, 1})), input_error);
}

TEST_CASE("verify_star accepts the canonical colouring of G4") {
    Graph g4 = build_g2p(2);
    Colouring f = g2p_canonical_colouring(2);
    CHECK(verify_star(g4, f).ok);
}

TEST_CASE("bicoloured components") {
    Graph k2 = build_graph(2, {{0, 1}});
    auto comps = bicoloured_components(k2, make_colouring(2, {0, 1}));
    REQUIRE(comps.size() == 1);
    CHECK(comps[0].is_star);
    CHECK(comps[0].leaf_count == 1);
    CHECK(!comps[0].centre.has_value());  // K_{1,1} has no unique centre

    Graph star = build_graph(4, {{0, 1}, {0, 2}, {0, 3}});
    auto sc = bicoloured_components(star, make_colouring(2, {0, 1, 1, 1}));
    REQUIRE(sc.size() == 1);
    CHECK(sc[0].is_star);
    CHECK(sc[0].centre == 0);
    CHECK(sc[0].vertices == std::vector<int>{0, 1, 2, 3});

    // Every component of G4 under f((i,j)) = i is K_{1,2}.
    Graph g4 = build_g2p(2);
    for (const auto& c : bicoloured_components(g4, g2p_canonical_colouring(2))) {
        CHECK(c.is_star);
        CHECK(c.leaf_count == 2);
    }

    CHECK_THROWS_AS(bicoloured_components(k2, make_colouring(1, {0, 0})), input_error);
}

TEST_CASE("verify_star agrees with the all-components-are-stars definition") {
    std::mt19937 rng(3);
    int checked = 0;
    while (checked < 200) {
        Graph g = testutil::random_graph(2 + static_cast<int>(rng() % 11), 0.3, rng);
        int k = 2 + static_cast<int>(rng() % 4);
        std::vector<int> at(g.n());
        for (int& c : at) c = static_cast<int>(rng() % k);
        Colouring col{k, at};
        bool proper = true;
        for (auto [u, v] : g.edges()) proper = proper && at[u] != at[v];
        if (!proper) continue;
        bool by_paths = verify_star(g, col).ok;
        bool by_components = true;
        for (const auto& c : bicoloured_components(g, col))
            by_components = by_components && c.is_star;
        CHECK(by_paths == by_components);
        ++checked;
    }
}

TEST_CASE("canonical colouring and swap equivalence") {
    Colouring c{3, {2, 0, 2, 1}};
    Colouring canon = canonical_colouring(c);
    CHECK(canon.at == std::vector<int>{0, 1, 0, 2});
    // Idempotent.
    CHECK(canonical_colouring(canon).at == canon.at);
    CHECK(same_up_to_swaps(c, Colouring{3, {0, 1, 0, 2}}));
    CHECK(!same_up_to_swaps(c, Colouring{3, {0, 1, 1, 2}}));
    CHECK(!same_up_to_swaps(c, Colouring{4, {2, 0, 2, 1}}));
}
