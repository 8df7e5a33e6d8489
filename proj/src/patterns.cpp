#include "starcol/patterns.hpp"

#include <algorithm>
#include <array>
#include <map>

namespace starcol {

namespace {

struct PatternData {
    Graph graph;
    std::vector<std::string> labels;
};

PatternData make_pattern(PatternId id) {
    // Label order fixes the vertex numbering of each pattern.
    switch (id) {
        case PatternId::Diamond: {
            std::vector<std::string> lab = {"a", "x", "b", "y"};
            return {build_graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {1, 3}}), lab};
        }
        case PatternId::K4: {
            std::vector<std::string> lab = {"a", "b", "c", "d"};
            return {build_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}), lab};
        }
        case PatternId::C6Complement: {
            // Triangular prism: triangles u,v,w and x,z,y plus matching ux, wz, vy.
            std::vector<std::string> lab = {"u", "v", "w", "x", "z", "y"};
            return {build_graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5},
                                    {0, 3}, {2, 4}, {1, 5}}),
                    lab};
        }
        case PatternId::ObstructionB: {
            // 8 vertices, 13 edges: triangles uvw, uxa, xzy plus ab, wz, vb, by.
            std::vector<std::string> lab = {"u", "v", "w", "x", "a", "z", "y", "b"};
            return {build_graph(8, {{0, 1}, {1, 2}, {0, 2},          // uvw
                                    {0, 3}, {3, 4}, {0, 4},          // uxa
                                    {3, 5}, {5, 6}, {3, 6},          // xzy
                                    {4, 7}, {2, 5}, {1, 7}, {6, 7}}),
                    lab};
        }
        case PatternId::ObstructionD: {
            // 8 vertices, 13 edges: triangles uvw, xzy; wz, vy; paths w,a,x and y,b,u; ab.
            std::vector<std::string> lab = {"u", "v", "w", "x", "z", "y", "a", "b"};
            return {build_graph(8, {{0, 1}, {1, 2}, {0, 2},          // uvw
                                    {3, 4}, {4, 5}, {3, 5},          // xzy
                                    {2, 4}, {1, 5},                  // wz, vy
                                    {2, 6}, {6, 3},                  // w,a,x
                                    {5, 7}, {7, 0},                  // y,b,u
                                    {6, 7}}),
                    lab};
        }
        case PatternId::ObstructionE: {
            // 9 vertices, 15 edges: triangles uvw, xzy; wz, vy; paths w,a,x and
            // v,c,x and a,b,c; ub.
            std::vector<std::string> lab = {"u", "v", "w", "x", "z", "y", "a", "b", "c"};
            return {build_graph(9, {{0, 1}, {1, 2}, {0, 2},          // uvw
                                    {3, 4}, {4, 5}, {3, 5},          // xzy
                                    {2, 4}, {1, 5},                  // wz, vy
                                    {2, 6}, {6, 3},                  // w,a,x
                                    {1, 8}, {8, 3},                  // v,c,x
                                    {6, 7}, {7, 8},                  // a,b,c
                                    {0, 7}}),
                    lab};
        }
    }
    throw input_error("unknown pattern");
}

const PatternData& data(PatternId id) {
    static const std::array<PatternData, 6> all = {
        make_pattern(PatternId::Diamond),      make_pattern(PatternId::ObstructionB),
        make_pattern(PatternId::C6Complement), make_pattern(PatternId::ObstructionD),
        make_pattern(PatternId::ObstructionE), make_pattern(PatternId::K4)};
    return all[static_cast<int>(id)];
}

bool embed_rec(const Graph& g, const Graph& p, std::vector<int>& map, std::vector<char>& used,
               int pv) {
    if (pv == p.n()) return true;
    for (int gv = 0; gv < g.n(); ++gv) {
        if (used[gv] || g.degree(gv) < p.degree(pv)) continue;
        bool ok = true;
        for (int pw : p.adj(pv)) {
            if (pw < pv && !g.has_edge(map[pw], gv)) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        map[pv] = gv;
        used[gv] = 1;
        if (embed_rec(g, p, map, used, pv + 1)) return true;
        used[gv] = 0;
        map[pv] = -1;
    }
    return false;
}

}  // namespace

const Graph& pattern_graph(PatternId id) { return data(id).graph; }

const std::vector<std::string>& pattern_labels(PatternId id) { return data(id).labels; }

std::string pattern_name(PatternId id) {
    switch (id) {
        case PatternId::Diamond: return "diamond";
        case PatternId::ObstructionB: return "obstruction_b";
        case PatternId::C6Complement: return "c6_complement";
        case PatternId::ObstructionD: return "obstruction_d";
        case PatternId::ObstructionE: return "obstruction_e";
        case PatternId::K4: return "k4";
    }
    return "?";
}

std::optional<PatternId> pattern_from_name(const std::string& name) {
    for (PatternId id : kAllPatterns)
        if (pattern_name(id) == name) return id;
    return std::nullopt;
}

std::optional<std::vector<int>> find_subgraph_embedding(const Graph& g, const Graph& pattern) {
    if (pattern.n() > g.n()) return std::nullopt;
    std::vector<int> map(pattern.n(), -1);
    std::vector<char> used(g.n(), 0);
    if (embed_rec(g, pattern, map, used, 0)) return map;
    return std::nullopt;
}

std::optional<std::vector<int>> contains_subgraph(const Graph& g, PatternId pattern) {
    return find_subgraph_embedding(g, pattern_graph(pattern));
}

}  // namespace starcol
