#include "starcol/io.hpp"

#include <istream>
#include <ostream>
#include <sstream>

#include "json.hpp"

namespace starcol {

namespace {

// Next content line, skipping blanks and '#' comments.
bool next_line(std::istream& in, std::string& line) {
    while (std::getline(in, line)) {
        size_t pos = line.find_first_not_of(" \t\r");
        if (pos == std::string::npos) continue;
        if (line[pos] == '#') continue;
        return true;
    }
    return false;
}

}  // namespace

Graph read_edge_list(std::istream& in) {
    std::string line;
    if (!next_line(in, line)) throw input_error("empty edge-list input");
    std::istringstream head(line);
    long long n = -1, m = -1;
    if (!(head >> n >> m) || n < 0 || m < 0) throw input_error("bad edge-list header");
    std::vector<std::pair<int, int>> edges;
    for (long long i = 0; i < m; ++i) {
        if (!next_line(in, line)) throw input_error("edge-list truncated");
        std::istringstream es(line);
        int u, v;
        if (!(es >> u >> v)) throw input_error("bad edge line: " + line);
        edges.emplace_back(u, v);
    }
    Graph g = build_graph(static_cast<int>(n), edges);
    if (g.m() != m) throw input_error("edge list contains duplicate edges");
    return g;
}

void write_edge_list(std::ostream& out, const Graph& g) {
    out << g.n() << ' ' << g.m() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

Colouring read_colouring(std::istream& in, int n) {
    std::vector<int> at(n, -1);
    std::string line;
    int maxc = 0;
    for (int i = 0; i < n; ++i) {
        if (!next_line(in, line)) throw input_error("colouring truncated");
        std::istringstream cs(line);
        int v, c;
        if (!(cs >> v >> c)) throw input_error("bad colouring line: " + line);
        if (v < 0 || v >= n) throw input_error("colouring vertex out of range");
        if (c < 0) throw input_error("negative colour");
        if (at[v] != -1) throw input_error("duplicate colouring entry for vertex");
        at[v] = c;
        maxc = std::max(maxc, c);
    }
    return Colouring{maxc + 1, at};
}

void write_colouring(std::ostream& out, const Colouring& c) {
    for (size_t v = 0; v < c.at.size(); ++v) out << v << ' ' << c.at[v] << '\n';
}

Orientation read_orientation(std::istream& in, const Graph& g) {
    std::string line;
    if (!next_line(in, line)) throw input_error("empty orientation input");
    std::istringstream head(line);
    int n, m;
    if (!(head >> n >> m)) throw input_error("bad orientation header");
    if (n != g.n() || m != g.m()) throw input_error("orientation header does not match graph");
    Orientation o;
    o.forward.assign(g.m(), -1);
    for (int i = 0; i < m; ++i) {
        if (!next_line(in, line)) throw input_error("orientation truncated");
        std::istringstream as(line);
        int t, h;
        if (!(as >> t >> h)) throw input_error("bad arc line: " + line);
        int e = g.edge_index(t, h);
        if (e < 0) throw input_error("arc is not an edge of the graph");
        if (o.forward[e] != -1) throw input_error("duplicate arc for edge");
        o.forward[e] = (g.edges()[e].first == t);
    }
    return o;
}

void write_orientation(std::ostream& out, const Graph& g, const Orientation& o) {
    out << g.n() << ' ' << g.m() << '\n';
    for (auto [t, h] : o.arcs(g)) out << t << ' ' << h << '\n';
}

std::string partition_to_json(const StarPartition& sp) {
    nlohmann::json cells = nlohmann::json::array();
    for (const auto& [ij, verts] : sp.cells)
        cells.push_back({{"i", ij.first}, {"j", ij.second}, {"vertices", verts}});
    nlohmann::json j = {{"format", 1}, {"p", sp.p}, {"cells", cells}};
    return j.dump();
}

StarPartition partition_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
    if (j.is_discarded()) throw input_error("invalid partition JSON");
    StarPartition sp;
    try {
        sp.p = j.at("p").get<int>();
        for (const auto& cell : j.at("cells")) {
            int i = cell.at("i").get<int>();
            int jj = cell.at("j").get<int>();
            sp.cells[{i, jj}] = cell.at("vertices").get<std::vector<int>>();
        }
    } catch (const nlohmann::json::exception& e) {
        throw input_error(std::string("invalid partition JSON: ") + e.what());
    }
    return sp;
}

std::string matrix_to_json(const DegreeConstraintMatrix& m) {
    nlohmann::json labels = nlohmann::json::array();
    for (auto [i, j] : m.labels) labels.push_back({i, j});
    nlohmann::json rows = nlohmann::json::array();
    for (int r = 0; r < m.q; ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (int c = 0; c < m.q; ++c) {
            switch (m.at(r, c)) {
                case CountConstraint::Zero: row.push_back("0"); break;
                case CountConstraint::One: row.push_back("1"); break;
                case CountConstraint::Any: row.push_back("*"); break;
            }
        }
        rows.push_back(row);
    }
    nlohmann::json j = {{"format", 1}, {"p", m.p}, {"q", m.q}, {"labels", labels},
                        {"entries", rows}};
    return j.dump();
}

std::string reduction_sidecar_json(const ReductionOutput& red) {
    const char* kind = red.kind == ReductionKind::C1   ? "c1"
                       : red.kind == ReductionKind::C2 ? "c2"
                                                       : "c3";
    nlohmann::json gadgets = nlohmann::json::array();
    for (size_t e = 0; e < red.gadget_edge.size(); ++e)
        gadgets.push_back({{"edge", {red.gadget_edge[e].first, red.gadget_edge[e].second}},
                           {"base", red.edge_gadget_base[e]}});
    nlohmann::json j = {{"format", 1},
                        {"kind", kind},
                        {"s", red.s},
                        {"k", red.k},
                        {"terminal_map", red.terminal_map},
                        {"gadget_index", gadgets}};
    return j.dump();
}

std::string certificate_to_json(const Graph& g, const CeoCertificate& cert) {
    nlohmann::json arcs = nlohmann::json::array();
    for (auto [t, h] : cert.orientation.arcs(g)) arcs.push_back({t, h});
    nlohmann::json j = {{"format", 1},
                        {"q", cert.colouring.k},
                        {"arcs", arcs},
                        {"colouring", cert.colouring.at},
                        {"in_colour", cert.in_colour}};
    return j.dump();
}

}  // namespace starcol
