#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <array>
#include <cmath>

#include "doctest.h"
#include "starcol/constructions.hpp"
#include "starcol/graph.hpp"
#include "starcol/solver.hpp"
#include "starcol/structure.hpp"
#include "test_util.hpp"

using namespace starcol;

namespace {

StarPartition singleton_partition(int p) {
    StarPartition sp;
    sp.p = p;
    auto labels = g2p_pair_labels(p);
    for (int idx = 0; idx < static_cast<int>(labels.size()); ++idx)
        sp.cells[labels[idx]] = {idx};
    return sp;
}

CountConstraint from_char(char c) {
    switch (c) {
        case '0': return CountConstraint::Zero;
        case '1': return CountConstraint::One;
        default: return CountConstraint::Any;
    }
}

}  // namespace

TEST_CASE("divisibility_reject") {
    CHECK(divisibility_reject(gen_standard(StandardKind::Hypercube, 4), 2) ==
          DivisibilityVerdict::Reject);
    CHECK(divisibility_reject(build_g2p(2), 2) == DivisibilityVerdict::Inconclusive);
    CHECK(divisibility_reject(testutil::circulant(24, {1, 2}), 2) ==
          DivisibilityVerdict::Inconclusive);
    CHECK_THROWS_AS(divisibility_reject(gen_standard(StandardKind::Complete, 4), 2), input_error);
    CHECK_THROWS_AS(divisibility_reject(gen_standard(StandardKind::Cycle, 6), 1), input_error);
}

TEST_CASE("extract_partition on G4 gives singleton cells") {
    Graph g4 = build_g2p(2);
    StarPartition sp = extract_partition(g4, g2p_canonical_colouring(2));
    CHECK(sp.p == 2);
    CHECK(sp.cells.size() == 12);
    auto labels = g2p_pair_labels(2);
    for (int idx = 0; idx < 12; ++idx)
        CHECK(sp.cells.at(labels[idx]) == std::vector<int>{idx});
}

TEST_CASE("extract_partition rejects a corrupted colouring") {
    Graph g4 = build_g2p(2);
    Colouring f = g2p_canonical_colouring(2);
    std::swap(f.at[0], f.at[11]);  // destroys the exact neighbourhood counts
    CHECK_THROWS_AS(extract_partition(g4, f), input_error);
}

TEST_CASE("verify_partition accepts the G4 certificate and rejects corruption") {
    Graph g4 = build_g2p(2);
    StarPartition sp = singleton_partition(2);
    auto rep = verify_partition(g4, sp);
    CHECK(rep.ok);
    CHECK(rep.equal_cells);

    // Swapping two cells breaks the certificate.
    StarPartition bad = sp;
    std::swap(bad.cells[{0, 1}], bad.cells[{0, 2}]);
    CHECK(!verify_partition(g4, bad).ok);

    // Accepted partition induces a star colouring.
    std::vector<int> at(g4.n());
    for (const auto& [ij, verts] : sp.cells)
        for (int v : verts) at[v] = ij.first;
    CHECK(verify_star(g4, Colouring{4, at}).ok);
}

TEST_CASE("extract/verify round trip on a solver colouring of a ring") {
    RingGraph ring = build_ring(2, 2);
    auto r = decide_k_star(ring.graph, 4);
    REQUIRE(r.status == SolveStatus::Sat);
    StarPartition sp = extract_partition(ring.graph, *r.colouring);
    auto rep = verify_partition(ring.graph, sp);
    CHECK(rep.ok);
    CHECK(rep.equal_cells);
    // 24 vertices in 12 cells of size 2.
    for (const auto& [ij, verts] : sp.cells) CHECK(verts.size() == 2);
}

TEST_CASE("build_dq matches the printed 12x12 matrix") {
    // Frozen transcription; rows/columns ordered V01 V02 V03 V10 V12 V13 V20
    // V21 V23 V30 V31 V32, with '*' for the unconstrained entries.
    const std::array<const char*, 12> printed = {
        "000 0** 100 100",
        "000 100 0** 100",
        "000 100 100 0**",
        "0** 000 010 010",
        "100 000 *0* 010",
        "100 000 010 *0*",
        "*0* 010 000 001",
        "010 *0* 000 001",
        "010 010 000 **0",
        "**0 001 001 000",
        "001 **0 001 000",
        "001 001 **0 000",
    };
    DegreeConstraintMatrix d12 = build_dq(2);
    CHECK(d12.q == 12);
    for (int r = 0; r < 12; ++r) {
        std::string row;
        for (const char* p = printed[r]; *p; ++p)
            if (*p != ' ') row.push_back(*p);
        REQUIRE(row.size() == 12);
        for (int c = 0; c < 12; ++c) CHECK(d12.at(r, c) == from_char(row[c]));
    }
}

TEST_CASE("build_dq for p = 1 matches the printed 6x6 matrix") {
    const std::array<const char*, 6> printed = {
        "00 0* 10", "00 10 0*", "0* 00 01", "10 00 *0", "*0 01 00", "01 *0 00",
    };
    DegreeConstraintMatrix d6 = build_dq(1);
    CHECK(d6.q == 6);
    for (int r = 0; r < 6; ++r) {
        std::string row;
        for (const char* p = printed[r]; *p; ++p)
            if (*p != ' ') row.push_back(*p);
        for (int c = 0; c < 6; ++c) CHECK(d6.at(r, c) == from_char(row[c]));
    }
}

TEST_CASE("build_dq for p = 0 is all zeros") {
    DegreeConstraintMatrix d2 = build_dq(0);
    CHECK(d2.q == 2);
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) CHECK(d2.at(r, c) == CountConstraint::Zero);
}

TEST_CASE("build_eq equals the G2p adjacency matrix") {
    for (int p = 2; p <= 4; ++p) {
        DegreeConstraintMatrix eq = build_eq(p);
        Graph g = build_g2p(p);
        REQUIRE(eq.q == g.n());
        for (int r = 0; r < eq.q; ++r)
            for (int c = 0; c < eq.q; ++c) {
                bool adj = g.has_edge(r, c);
                CHECK((eq.at(r, c) == CountConstraint::One) == adj);
                CHECK((eq.at(r, c) == CountConstraint::Zero) == !adj);
            }
    }
}

TEST_CASE("verify_dq_partition on G4") {
    Graph g4 = build_g2p(2);
    StarPartition sp = singleton_partition(2);
    CHECK(verify_dq_partition(g4, sp, build_dq(2)).ok);
    CHECK(verify_dq_partition(g4, sp, build_eq(2)).ok);
}

TEST_CASE("no 12-cell labelling of K5 satisfies D12") {
    Graph k5 = gen_standard(StandardKind::Complete, 5);
    DegreeConstraintMatrix d12 = build_dq(2);
    auto labels = g2p_pair_labels(2);
    long long accepted = 0;
    std::array<int, 5> cell{};
    // All 12^5 labellings.
    for (long long code = 0; code < 248832; ++code) {
        long long c = code;
        for (int v = 0; v < 5; ++v) {
            cell[v] = static_cast<int>(c % 12);
            c /= 12;
        }
        StarPartition sp;
        sp.p = 2;
        for (int v = 0; v < 5; ++v) sp.cells[labels[cell[v]]].push_back(v);
        if (verify_dq_partition(k5, sp, d12).ok) ++accepted;
    }
    CHECK(accepted == 0);
}

TEST_CASE("find_cover") {
    Graph g4 = build_g2p(2);
    auto id = find_cover(g4, g4);
    REQUIRE(id);
    CHECK(check_cover(g4, g4, *id));

    RingGraph ring = build_ring(2, 3);
    auto lab = find_cover(ring.graph, g4);
    REQUIRE(lab);
    CHECK(check_cover(ring.graph, g4, *lab));

    // Degree mismatch: immediate absence.
    CHECK(!find_cover(gen_standard(StandardKind::Cycle, 8), g4).has_value());
    CHECK_THROWS_AS(find_cover(build_graph(61, {}), g4), input_error);

    // The natural copy labelling is itself a cover.
    std::vector<int> natural(ring.graph.n());
    for (int v = 0; v < ring.graph.n(); ++v)
        natural[v] = g2p_pair_index(2, ring.pair_label[v].first, ring.pair_label[v].second);
    CHECK(check_cover(ring.graph, g4, natural));
}

TEST_CASE("independent sets I_t") {
    Graph g4 = build_g2p(2);
    StarPartition sp = singleton_partition(2);
    auto check_independent = [&](const std::vector<int>& s) {
        for (size_t a = 0; a < s.size(); ++a)
            for (size_t b = a + 1; b < s.size(); ++b) CHECK(!g4.has_edge(s[a], s[b]));
    };
    auto i2 = independent_set_it(sp, 2);
    CHECK(i2.size() == 4);  // t(p+2-t) n/((p+1)(p+2)) = 2*2*12/12
    check_independent(i2);
    std::vector<int> expect = {g2p_pair_index(2, 0, 2), g2p_pair_index(2, 0, 3),
                               g2p_pair_index(2, 1, 2), g2p_pair_index(2, 1, 3)};
    std::sort(expect.begin(), expect.end());
    CHECK(i2 == expect);
    CHECK(static_cast<int>(i2.size()) > g4.n() / 4);  // t = ceil((p+2)/2)

    auto i1 = independent_set_it(sp, 1);
    CHECK(i1.size() == 3);
    check_independent(i1);

    CHECK_THROWS_AS(independent_set_it(sp, 0), input_error);
    CHECK_THROWS_AS(independent_set_it(sp, 3), input_error);

    // On an extracted ring partition: sizes t(p+2-t) n/((p+1)(p+2)) and no
    // internal edges, for every valid t.
    for (int p : {2, 3}) {
        RingGraph ring = build_ring(p, 2);
        StarPartition rsp = extract_partition(ring.graph, ring.lifted_colouring);
        for (int t = 1; t <= p; ++t) {
            auto it = independent_set_it(rsp, t);
            CHECK(static_cast<int>(it.size()) ==
                  t * (p + 2 - t) * ring.graph.n() / ((p + 1) * (p + 2)));
            for (size_t a = 0; a < it.size(); ++a)
                for (size_t b = a + 1; b < it.size(); ++b)
                    CHECK(!ring.graph.has_edge(it[a], it[b]));
        }
    }
}

TEST_CASE("colour_from_partition") {
    Graph g4 = build_g2p(2);
    Colouring c = colour_from_partition(g4, singleton_partition(2));
    CHECK(c.k <= 6);  // 3 ceil(log2(p+2)) = 6 for p = 2
    for (auto [u, v] : g4.edges()) CHECK(c.at[u] != c.at[v]);

    // p = 1 instance: two disjoint triangles with singleton cells; the row
    // unions are the three colour classes.
    Graph two_triangles = build_graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
    StarPartition sp1;
    sp1.p = 1;
    sp1.cells[{0, 1}] = {0};
    sp1.cells[{1, 2}] = {1};
    sp1.cells[{2, 0}] = {2};
    sp1.cells[{1, 0}] = {3};
    sp1.cells[{0, 2}] = {4};
    sp1.cells[{2, 1}] = {5};
    CHECK(verify_dq_partition(two_triangles, sp1, build_dq(1)).ok);
    Colouring c1 = colour_from_partition(two_triangles, sp1);
    CHECK(c1.colours_used() == 3);
    for (auto [u, v] : two_triangles.edges()) CHECK(c1.at[u] != c1.at[v]);

    // Empty graph, all-empty cells.
    StarPartition empty;
    empty.p = 2;
    for (auto ij : g2p_pair_labels(2)) empty.cells[ij] = {};
    Colouring c0 = colour_from_partition(Graph{}, empty);
    CHECK(c0.k == 0);
}

TEST_CASE("independence and chromatic number of G4 against their oracles") {
    Graph g4 = build_g2p(2);
    // Full subset enumeration over the 12 vertices.
    int brute = 0;
    for (int mask = 0; mask < (1 << 12); ++mask) {
        bool ind = true;
        for (auto [u, v] : g4.edges())
            if ((mask >> u & 1) && (mask >> v & 1)) {
                ind = false;
                break;
            }
        if (ind) brute = std::max(brute, __builtin_popcount(mask));
    }
    CHECK(brute == 4);
    CHECK(independence_number(g4) == brute);
    CHECK(independence_number(g4) > g4.n() / 4);

    int chi = chromatic_number(g4);
    CHECK(chi == 3);
    Colouring recursive = colour_from_partition(g4, singleton_partition(2));
    CHECK(chi <= recursive.colours_used());
    CHECK(recursive.colours_used() <= 6);
}

TEST_CASE("colour_from_partition on larger p via rings") {
    for (int p : {2, 3}) {
        RingGraph ring = build_ring(p, 2);
        StarPartition sp = extract_partition(ring.graph, ring.lifted_colouring);
        Colouring c = colour_from_partition(ring.graph, sp);
        int bound = 3 * static_cast<int>(std::ceil(std::log2(p + 2)));
        CHECK(c.colours_used() <= bound);
        for (auto [u, v] : ring.graph.edges()) CHECK(c.at[u] != c.at[v]);
    }
}

TEST_CASE("check_fall_equitable") {
    Graph g4 = build_g2p(2);
    auto rep = check_fall_equitable(g4, g2p_canonical_colouring(2));
    CHECK(rep.equitable);
    CHECK(rep.all_equal);
    CHECK(rep.fall);
    CHECK(rep.class_sizes == std::vector<int>{3, 3, 3, 3});

    Graph p3 = build_graph(3, {{0, 1}, {1, 2}});
    auto rp = check_fall_equitable(p3, make_colouring(2, {0, 1, 0}));
    CHECK(rp.fall);
    CHECK(rp.equitable);
    CHECK(!rp.all_equal);

    Graph k4 = gen_standard(StandardKind::Complete, 4);
    auto rk = check_fall_equitable(k4, make_colouring(4, {0, 1, 2, 3}));
    CHECK(rk.fall);
    CHECK(rk.equitable);
}
