#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <numeric>
#include <set>

#include "doctest.h"
#include "starcol/constructions.hpp"
#include "starcol/graph.hpp"
#include "starcol/patterns.hpp"
#include "starcol/solver.hpp"
#include "starcol/structure.hpp"
#include "test_util.hpp"

using namespace starcol;

TEST_CASE("build_g2p sizes and regularity") {
    Graph g4 = build_g2p(2);
    CHECK(g4.n() == 12);
    CHECK(g4.m() == 24);
    CHECK(is_regular(g4) == 4);

    Graph g6 = build_g2p(3);
    CHECK(g6.n() == 20);
    CHECK(g6.m() == 60);
    CHECK(is_regular(g6) == 6);

    CHECK_THROWS_AS(build_g2p(1), input_error);
    CHECK(verify_star(g4, g2p_canonical_colouring(2)).ok);
    CHECK(verify_star(g6, g2p_canonical_colouring(3)).ok);
}

TEST_CASE("G4 edge set matches the drawn graph") {
    // Transcription of the displayed drawing's 24 edges as index pairs.
    auto e = [](int i1, int j1, int i2, int j2) {
        int a = g2p_pair_index(2, i1, j1);
        int b = g2p_pair_index(2, i2, j2);
        return std::pair<int, int>(std::min(a, b), std::max(a, b));
    };
    std::set<std::pair<int, int>> drawn = {
        e(0, 1, 1, 2), e(0, 1, 1, 3), e(1, 0, 0, 2), e(1, 0, 0, 3), e(1, 2, 2, 0),
        e(1, 2, 2, 3), e(2, 1, 1, 0), e(2, 1, 1, 3), e(2, 3, 3, 0), e(2, 3, 3, 1),
        e(3, 2, 2, 0), e(3, 2, 2, 1), e(0, 2, 2, 3), e(0, 2, 3, 0), e(3, 1, 1, 0),
        e(3, 1, 0, 3), e(0, 3, 2, 0), e(1, 3, 3, 0), e(1, 2, 3, 1), e(0, 2, 2, 1),
        e(0, 1, 2, 0), e(0, 1, 3, 0), e(3, 2, 1, 3), e(3, 2, 0, 3)};
    Graph g4 = build_g2p(2);
    std::set<std::pair<int, int>> built(g4.edges().begin(), g4.edges().end());
    CHECK(built == drawn);
}

TEST_CASE("index relabellings are automorphisms with single orbits") {
    for (int p = 2; p <= 4; ++p) {
        Graph g = build_g2p(p);
        std::vector<int> h(p + 2);
        std::iota(h.begin(), h.end(), 0);
        // Identity maps to identity.
        auto id = g2p_automorphism(p, h);
        for (int v = 0; v < g.n(); ++v) CHECK(id[v] == v);
        // All (p+2)! relabellings are automorphisms; vertex and edge orbits
        // of any one vertex/edge cover everything.
        std::set<int> vertex_orbit;
        std::set<std::pair<int, int>> edge_orbit;
        auto e0 = g.edges()[0];
        int count = 0;
        do {
            auto perm = g2p_automorphism(p, h);  // throws if not an automorphism
            vertex_orbit.insert(perm[0]);
            edge_orbit.insert(std::minmax(perm[e0.first], perm[e0.second]));
            ++count;
        } while (std::next_permutation(h.begin(), h.end()));
        CHECK(count == [&] {
            int f = 1;
            for (int i = 2; i <= p + 2; ++i) f *= i;
            return f;
        }());
        CHECK(static_cast<int>(vertex_orbit.size()) == g.n());
        CHECK(static_cast<int>(edge_orbit.size()) == g.m());
    }
    CHECK_THROWS_AS(g2p_automorphism(2, {0, 1, 2}), input_error);
    CHECK_THROWS_AS(g2p_automorphism(2, {0, 0, 1, 2}), input_error);
}

TEST_CASE("hamiltonian cycles of G2p") {
    // Fixed base cycle for p = 2.
    std::vector<std::pair<int, int>> base = {{0, 1}, {2, 0}, {1, 2}, {2, 3}, {3, 1}, {0, 3},
                                             {1, 0}, {0, 2}, {2, 1}, {3, 2}, {1, 3}, {3, 0}};
    CHECK(g2p_hamiltonian_cycle(2) == base);
    for (int p = 2; p <= 6; ++p) {
        Graph g = build_g2p(p);
        auto cyc = g2p_hamiltonian_cycle(p);
        std::vector<int> idx;
        for (auto [i, j] : cyc) idx.push_back(g2p_pair_index(p, i, j));
        CHECK(is_hamiltonian_cycle(g, idx));
    }
}

TEST_CASE("build_h2p removes a perfect matching") {
    Graph h4 = build_h2p(2);
    CHECK(h4.n() == 12);
    CHECK(h4.m() == 18);
    CHECK(is_regular(h4) == 3);
    // Subgraph of G4, so the canonical colouring still works.
    CHECK(verify_star(h4, g2p_canonical_colouring(2)).ok);

    Graph h6 = build_h2p(3);
    CHECK(h6.n() == 20);
    CHECK(h6.m() == 50);
    CHECK(is_regular(h6) == 5);
    CHECK(verify_star(h6, g2p_canonical_colouring(3)).ok);

    // Attainment of the lower bound for odd degree: chi_s = ceil((d+4)/2).
    auto x4 = star_chromatic_number(h4);
    CHECK(x4.exact);
    CHECK(x4.lo == 4);
    auto x6 = star_chromatic_number(h6);
    CHECK(x6.exact);
    CHECK(x6.lo == 5);
}

TEST_CASE("build_ring") {
    // t = 1 restores the removed edge: the ring is G_2p itself.
    RingGraph r1 = build_ring(2, 1);
    Graph g4 = build_g2p(2);
    CHECK(r1.graph.edges() == g4.edges());

    for (int p : {2, 3}) {
        for (int t = 1; t <= 4; ++t) {
            RingGraph r = build_ring(p, t);
            CHECK(r.graph.n() == t * (p + 1) * (p + 2));
            CHECK(is_regular(r.graph) == 2 * p);
            CHECK(is_hamiltonian_cycle(r.graph, r.hamiltonian_cycle));
            CHECK(verify_star(r.graph, r.lifted_colouring).ok);
            auto cover = find_cover(r.graph, build_g2p(p), 90);
            REQUIRE(cover);
            CHECK(check_cover(r.graph, build_g2p(p), *cover));
        }
    }
    CHECK_THROWS_AS(build_ring(1, 2), input_error);
    CHECK_THROWS_AS(build_ring(2, 0), input_error);

    // Rings attain the even-degree lower bound exactly.
    auto chi = star_chromatic_number(build_ring(2, 3).graph);
    CHECK(chi.exact);
    CHECK(chi.lo == 4);
}

TEST_CASE("verify_cycle_decomposition") {
    Graph c6 = gen_standard(StandardKind::Cycle, 6);
    CycleDecomposition one;
    one.cycles = {{0, 1, 2, 3, 4, 5}};
    CHECK(verify_cycle_decomposition(c6, one, 3).ok);

    Graph c4 = gen_standard(StandardKind::Cycle, 4);
    CycleDecomposition four;
    four.cycles = {{0, 1, 2, 3}};
    CHECK(!verify_cycle_decomposition(c4, four, 3).ok);
    CHECK(verify_cycle_decomposition(c4, four, 4).ok);

    // Malformed inputs.
    CycleDecomposition bad;
    bad.cycles = {{0, 1}};
    CHECK(!verify_cycle_decomposition(c4, bad, 1).ok);
    bad.cycles = {{0, 1, 1, 2}};
    CHECK(!verify_cycle_decomposition(c4, bad, 1).ok);
    bad.cycles = {{0, 1, 3}};
    CHECK(!verify_cycle_decomposition(c4, bad, 1).ok);  // 1-3 is not an edge
    bad.cycles = {{0, 1, 2, 3}, {0, 1, 2, 3}};
    CHECK(!verify_cycle_decomposition(c4, bad, 4).ok);  // edges reused
}

namespace {

// Exhaustive search for a decomposition into cycles of length divisible by
// the modulus; used as the oracle for the G4 instance.
bool decompose_rec(const Graph& g, std::set<std::pair<int, int>>& unused,
                   CycleDecomposition& out, int modulus) {
    if (unused.empty()) return true;
    auto [su, sv] = *unused.begin();
    // Grow a cycle starting with edge su-sv.
    std::vector<int> path = {su, sv};
    std::set<std::pair<int, int>> taken = {{su, sv}};
    std::function<bool()> grow = [&]() -> bool {
        int last = path.back();
        if (last == su && path.size() > 1) {
            if ((path.size() - 1) % modulus != 0) return false;
            std::vector<int> cyc(path.begin(), path.end() - 1);
            for (auto e : taken) unused.erase(e);
            out.cycles.push_back(cyc);
            if (decompose_rec(g, unused, out, modulus)) return true;
            for (auto e : taken) unused.insert(e);
            out.cycles.pop_back();
            return false;
        }
        for (int w : g.adj(last)) {
            auto e = std::minmax(last, w);
            if (!unused.count(e) || taken.count(e)) continue;
            if (w != su && std::find(path.begin(), path.end() - 1, w) != path.end() - 1)
                continue;  // keep cycles simple
            bool was_closing = (w == su);
            if (!was_closing && path.front() != su) continue;
            taken.insert(e);
            path.push_back(w);
            if (grow()) return true;
            path.pop_back();
            taken.erase(e);
        }
        return false;
    };
    return grow();
}

}  // namespace

TEST_CASE("G4 decomposes into cycles of length divisible by three") {
    Graph g4 = build_g2p(2);
    std::set<std::pair<int, int>> unused(g4.edges().begin(), g4.edges().end());
    CycleDecomposition found;
    REQUIRE(decompose_rec(g4, unused, found, 3));
    CHECK(verify_cycle_decomposition(g4, found, 3).ok);
}

TEST_CASE("uniqueness of G4 at minimum size, desk scale") {
    Graph g4 = build_g2p(2);
    // Relabellings of G4 cover G4 in both directions.
    std::mt19937 rng(23);
    for (int trial = 0; trial < 5; ++trial) {
        std::vector<int> perm(12);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        Graph g = testutil::relabel(g4, perm);
        auto fwd = find_cover(g, g4);
        REQUIRE(fwd);
        CHECK(check_cover(g, g4, *fwd));
        auto bwd = find_cover(g4, g);
        REQUIRE(bwd);
        CHECK(check_cover(g4, g, *bwd));
    }
    // Other 4-regular graphs on 12 vertices admit no cover (a 12-vertex
    // cover of G4 would be an isomorphism).
    for (auto jumps : std::vector<std::vector<int>>{{1, 2}, {1, 3}, {2, 3}, {1, 4}}) {
        Graph g = testutil::circulant(12, jumps);
        REQUIRE(is_regular(g) == 4);
        CHECK(!find_cover(g, g4).has_value());
    }
}
