#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <sstream>

#include "doctest.h"
#include "starcol/constructions.hpp"
#include "starcol/io.hpp"
#include "test_util.hpp"

using namespace starcol;

TEST_CASE("edge list round trip is byte-identical") {
    std::mt19937 rng(9);
    for (int trial = 0; trial < 30; ++trial) {
        Graph g = testutil::random_graph(1 + static_cast<int>(rng() % 14), 0.4, rng);
        std::ostringstream out;
        write_edge_list(out, g);
        std::istringstream in(out.str());
        Graph back = read_edge_list(in);
        std::ostringstream again;
        write_edge_list(again, back);
        CHECK(again.str() == out.str());
        CHECK(back.edges() == g.edges());
        CHECK(back.n() == g.n());
    }
}

TEST_CASE("edge list parsing errors and comments") {
    std::istringstream ok("# a comment\n3 2\n0 1\n# another\n1 2\n");
    Graph g = read_edge_list(ok);
    CHECK(g.n() == 3);
    CHECK(g.m() == 2);

    std::istringstream selfloop("2 1\n1 1\n");
    CHECK_THROWS_AS(read_edge_list(selfloop), input_error);
    std::istringstream range("2 1\n0 5\n");
    CHECK_THROWS_AS(read_edge_list(range), input_error);
    std::istringstream trunc("3 2\n0 1\n");
    CHECK_THROWS_AS(read_edge_list(trunc), input_error);
    std::istringstream dup("3 2\n0 1\n0 1\n");
    CHECK_THROWS_AS(read_edge_list(dup), input_error);
    std::istringstream empty("");
    CHECK_THROWS_AS(read_edge_list(empty), input_error);
}

TEST_CASE("colouring file round trip") {
    Colouring c{3, {2, 0, 1, 0}};
    std::ostringstream out;
    write_colouring(out, c);
    std::istringstream in(out.str());
    Colouring back = read_colouring(in, 4);
    CHECK(back.at == c.at);
    CHECK(back.k == 3);

    std::istringstream missing("0 1\n");
    CHECK_THROWS_AS(read_colouring(missing, 2), input_error);
    std::istringstream twice("0 1\n0 2\n");
    CHECK_THROWS_AS(read_colouring(twice, 2), input_error);
}

TEST_CASE("orientation file round trip") {
    Graph c4 = gen_standard(StandardKind::Cycle, 4);
    Orientation o;
    o.forward = {1, 0, 1, 1};
    std::ostringstream out;
    write_orientation(out, c4, o);
    std::istringstream in(out.str());
    Orientation back = read_orientation(in, c4);
    CHECK(back.forward == o.forward);

    std::istringstream notedge("4 4\n0 2\n1 2\n2 3\n3 0\n");
    CHECK_THROWS_AS(read_orientation(notedge, c4), input_error);
}

TEST_CASE("partition JSON round trip") {
    Graph g4 = build_g2p(2);
    StarPartition sp;
    sp.p = 2;
    auto labels = g2p_pair_labels(2);
    for (int idx = 0; idx < 12; ++idx) sp.cells[labels[idx]] = {idx};
    std::string text = partition_to_json(sp);
    StarPartition back = partition_from_json(text);
    CHECK(back.p == 2);
    CHECK(back.cells == sp.cells);
    CHECK_THROWS_AS(partition_from_json("{oops"), input_error);
    CHECK_THROWS_AS(partition_from_json("{\"format\":1}"), input_error);
}

TEST_CASE("matrix and sidecar JSON shape") {
    std::string mj = matrix_to_json(build_dq(2));
    CHECK(mj.find("\"format\":1") != std::string::npos);
    CHECK(mj.find("\"q\":12") != std::string::npos);
    CHECK(mj.find("\"*\"") != std::string::npos);

    Graph k2 = build_graph(2, {{0, 1}});
    std::string sj = reduction_sidecar_json(construction1(k2, 0));
    CHECK(sj.find("\"kind\":\"c1\"") != std::string::npos);
    CHECK(sj.find("terminal_map") != std::string::npos);
    CHECK(sj.find("gadget_index") != std::string::npos);
}
