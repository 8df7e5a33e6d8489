#include "starcol/reductions.hpp"

#include <algorithm>
#include <array>
#include <numeric>

namespace starcol {

namespace {

struct Builder {
    int n = 0;
    std::vector<std::pair<int, int>> edges;
    int vertex() { return n++; }
    void edge(int u, int v) { edges.emplace_back(u, v); }
    Graph graph() const { return build_graph(n, edges); }
};

using SchemeList = std::vector<std::pair<int, int>>;  // (vertex, reference colour)

struct Comp3Layout {
    int w, x, y, z;
    // Side order: xy, xz, yz; paths run first corner -> second corner.
    std::array<std::vector<int>, 3> path;
    std::array<std::vector<int>, 3> pendant;  // aligned with path, -1 where none
};

// Reference colours along a side path: period-3 runs from both corners with
// a 0,1,0 block in the middle. Pendants take host colour + 1 (mod 3).
int path_ref_colour(int s, int t) {
    static const int run[3] = {2, 0, 1};
    int len = 6 * s + 5;
    if (t <= 3 * s) return run[t % 3];
    if (t >= len - 1 - 3 * s) return run[(len - 1 - t) % 3];
    static const int mid[3] = {0, 1, 0};
    return mid[t - (3 * s + 1)];
}

Comp3Layout emit_component3(int s, Builder& b, SchemeList& scheme) {
    Comp3Layout c;
    c.w = b.vertex();
    c.x = b.vertex();
    c.y = b.vertex();
    c.z = b.vertex();
    scheme.push_back({c.w, 0});
    for (int corner : {c.x, c.y, c.z}) {
        b.edge(c.w, corner);
        scheme.push_back({corner, 1});
    }
    int len = 6 * s + 5;
    const std::array<std::pair<int, int>, 3> ends = {
        std::pair{c.x, c.y}, std::pair{c.x, c.z}, std::pair{c.y, c.z}};
    for (int side = 0; side < 3; ++side) {
        auto [from, to] = ends[side];
        auto& path = c.path[side];
        auto& pend = c.pendant[side];
        pend.assign(len, -1);
        int prev = from;
        for (int t = 0; t < len; ++t) {
            int v = b.vertex();
            path.push_back(v);
            b.edge(prev, v);
            prev = v;
            scheme.push_back({v, path_ref_colour(s, t)});
        }
        b.edge(prev, to);
        for (int t = 0; t < len; ++t) {
            if (t > 3 * s && t < len - 1 - 3 * s) continue;
            int pv = b.vertex();
            pend[t] = pv;
            b.edge(path[t], pv);
            scheme.push_back({pv, (path_ref_colour(s, t) + 1) % 3});
        }
    }
    return c;
}

// Vertex gadget: component plus four terminal arms grown out of the
// corner-side pendants of the x-y and x-z paths. Returns terminals in slot
// order v1..v4.
std::array<int, 4> emit_vertex_gadget3(int s, Builder& b, SchemeList& scheme) {
    Comp3Layout c = emit_component3(s, b, scheme);
    int len = 6 * s + 5;
    auto arm = [&](int side, int pos) {
        int mid = c.pendant[side][pos];
        int t = b.vertex();
        b.edge(mid, t);
        scheme.push_back({t, 1});
        return t;
    };
    int v2 = arm(0, 0);        // x end of the x-y path
    int v1 = arm(0, len - 1);  // y end
    int v3 = arm(1, 0);        // x end of the x-z path
    int v4 = arm(1, len - 1);  // z end
    return {v1, v2, v3, v4};
}

// Edge gadget between two existing terminals: short arm to term_u at the
// y end of the x-y path, pendant chain to term_v at the z end of the x-z
// path. Terminal reference colours: term_u = 1, term_v = 0 (handled by the
// per-gadget colour permutation in lift_colouring).
void emit_edge_gadget3(int s, Builder& b, int term_u, int term_v, SchemeList& scheme) {
    Comp3Layout c = emit_component3(s, b, scheme);
    int len = 6 * s + 5;
    b.edge(c.pendant[0][len - 1], term_u);
    int c1 = c.pendant[1][len - 1];
    int c2 = b.vertex();
    int c3 = b.vertex();
    int g1 = b.vertex();
    int g2 = b.vertex();
    scheme.push_back({c2, 1});
    scheme.push_back({c3, 2});
    scheme.push_back({g1, 1});
    scheme.push_back({g2, 2});
    b.edge(c1, c2);
    b.edge(c2, c3);
    b.edge(c3, term_v);
    b.edge(c1, g1);
    b.edge(c2, g2);
}

struct CompKLayout {
    int a, b, c;
};

// shared_c >= 0 reuses an existing vertex as corner c (chained gadgets).
CompKLayout emit_componentk(int k, Builder& bld, int shared_c, SchemeList& scheme) {
    CompKLayout l{};
    l.a = bld.vertex();
    l.b = bld.vertex();
    scheme.push_back({l.a, 0});
    scheme.push_back({l.b, 0});
    if (shared_c >= 0) {
        l.c = shared_c;
    } else {
        l.c = bld.vertex();
        scheme.push_back({l.c, 0});
    }
    int x1 = bld.vertex(), y1 = bld.vertex(), z1 = bld.vertex();
    int x2 = bld.vertex(), x3 = bld.vertex();
    int y2 = bld.vertex(), y3 = bld.vertex();
    int z2 = bld.vertex(), z3 = bld.vertex();
    for (int v : {x1, y1, z1}) scheme.push_back({v, k - 2});
    for (int v : {x2, x3, y2, y3, z2, z3}) scheme.push_back({v, k - 1});
    auto ind_set = [&](int size, int first_colour) {
        std::vector<int> verts;
        for (int i = 0; i < size; ++i) {
            int v = bld.vertex();
            verts.push_back(v);
            scheme.push_back({v, first_colour + i});
        }
        return verts;
    };
    auto uni_set = [&](int size, int colour) {
        std::vector<int> verts;
        for (int i = 0; i < size; ++i) {
            int v = bld.vertex();
            verts.push_back(v);
            scheme.push_back({v, colour});
        }
        return verts;
    };
    std::vector<int> w1 = ind_set(k - 2, 0);
    std::vector<int> u1 = uni_set(k - 3, k - 2);
    std::vector<int> w2 = ind_set(k - 3, 1);
    std::vector<int> u2 = uni_set(k - 3, k - 2);
    std::vector<int> w3 = ind_set(k - 3, 1);
    std::vector<int> u3 = uni_set(k - 3, k - 2);
    // Outer 12-cycle through the corners.
    int ring[12] = {x1, x2, l.b, z3, z1, z2, l.a, y3, y1, y2, l.c, x3};
    for (int i = 0; i < 12; ++i) bld.edge(ring[i], ring[(i + 1) % 12]);
    auto join = [&](const std::vector<int>& ws, int xj, int yj, int zj,
                    const std::vector<int>& us) {
        for (int wv : ws) {
            bld.edge(wv, xj);
            bld.edge(wv, yj);
            bld.edge(wv, zj);
            for (int uv : us) bld.edge(wv, uv);
        }
    };
    join(w1, x1, y1, z1, u1);
    join(w2, x2, y2, z2, u2);
    join(w3, x3, y3, z3, u3);
    return l;
}

// Vertex gadget: chain of 2(k-1) components, corner b of one component
// identified with corner c of the next; the corner-a vertices are the
// terminals.
std::vector<int> emit_vertex_gadgetk(int k, Builder& bld, SchemeList& scheme) {
    std::vector<int> terminals;
    int prev_b = -1;
    for (int t = 0; t < 2 * (k - 1); ++t) {
        CompKLayout l = emit_componentk(k, bld, prev_b, scheme);
        terminals.push_back(l.a);
        prev_b = l.b;
    }
    return terminals;
}

void emit_edge_gadgetk(int k, Builder& bld, int term_u, int term_v, SchemeList& scheme) {
    CompKLayout l = emit_componentk(k, bld, -1, scheme);
    bld.edge(term_u, l.b);
    bld.edge(term_u, l.c);
    bld.edge(term_v, l.b);
    bld.edge(term_v, l.c);
}

Colouring scheme_to_colouring(const Builder& b, const SchemeList& scheme, int k) {
    std::vector<int> at(b.n, -1);
    for (auto [v, col] : scheme) at[v] = col;
    for (int v : at)
        if (v < 0) throw std::logic_error("gadget scheme misses a vertex");
    return Colouring{k, at};
}

int terminal_slot(const Graph& g, int v, int other) {
    const auto& nb = g.adj(v);
    auto it = std::lower_bound(nb.begin(), nb.end(), other);
    return static_cast<int>(it - nb.begin());
}

}  // namespace

Component3 gadget_component_3star(int s) {
    if (s < 0) throw input_error("s must be nonnegative");
    Builder b;
    SchemeList scheme;
    Comp3Layout l = emit_component3(s, b, scheme);
    Component3 out;
    out.graph = b.graph();
    out.w = l.w;
    out.x = l.x;
    out.y = l.y;
    out.z = l.z;
    out.scheme = scheme_to_colouring(b, scheme, 3);
    return out;
}

ComponentK gadget_component_kstar(int k) {
    if (k < 4) throw input_error("k must be >= 4");
    Builder b;
    SchemeList scheme;
    CompKLayout l = emit_componentk(k, b, -1, scheme);
    ComponentK out;
    out.graph = b.graph();
    out.a = l.a;
    out.b = l.b;
    out.c = l.c;
    out.scheme = scheme_to_colouring(b, scheme, k);
    return out;
}

ReductionOutput construction1(const Graph& g, int s) {
    if (s < 0) throw input_error("s must be nonnegative");
    for (int v = 0; v < g.n(); ++v)
        if (g.degree(v) > 4) throw input_error("construction1 requires max degree <= 4");
    ReductionOutput out;
    out.kind = ReductionKind::C1;
    out.s = s;
    out.k = 3;
    Builder b;
    out.terminal_map.resize(g.n());
    out.vertex_scheme.resize(g.n());
    for (int v = 0; v < g.n(); ++v) {
        auto terms = emit_vertex_gadget3(s, b, out.vertex_scheme[v]);
        out.terminal_map[v].assign(terms.begin(), terms.end());
    }
    for (auto [u, v] : g.edges()) {
        out.gadget_edge.emplace_back(u, v);
        out.edge_gadget_base.push_back(b.n);
        int tu = out.terminal_map[u][terminal_slot(g, u, v)];
        int tv = out.terminal_map[v][terminal_slot(g, v, u)];
        out.edge_scheme.emplace_back();
        emit_edge_gadget3(s, b, tu, tv, out.edge_scheme.back());
    }
    out.graph = b.graph();
    return out;
}

ReductionOutput construction2(const Graph& g, int s) {
    if (s < 0) throw input_error("s must be nonnegative");
    for (int v = 0; v < g.n(); ++v)
        if (g.degree(v) > 8) throw input_error("construction2 requires max degree <= 8");
    ReductionOutput out;
    out.kind = ReductionKind::C2;
    out.s = s;
    out.k = 3;
    Builder b;
    out.terminal_map.resize(g.n());
    out.vertex_scheme.resize(g.n());
    for (int v = 0; v < g.n(); ++v) {
        int t = b.vertex();  // source vertices persist as terminals
        out.terminal_map[v] = {t};
    }
    for (auto [u, v] : g.edges()) {
        out.gadget_edge.emplace_back(u, v);
        out.edge_gadget_base.push_back(b.n);
        out.edge_scheme.emplace_back();
        emit_edge_gadget3(s, b, u, v, out.edge_scheme.back());
    }
    out.graph = b.graph();
    return out;
}

ReductionOutput construction3(const Graph& g, int k) {
    if (k < 4) throw input_error("construction3 requires k >= 4");
    for (int v = 0; v < g.n(); ++v)
        if (g.degree(v) > 2 * (k - 1))
            throw input_error("construction3 requires max degree <= 2(k-1)");
    ReductionOutput out;
    out.kind = ReductionKind::C3;
    out.s = 0;
    out.k = k;
    Builder b;
    out.terminal_map.resize(g.n());
    out.vertex_scheme.resize(g.n());
    for (int v = 0; v < g.n(); ++v)
        out.terminal_map[v] = emit_vertex_gadgetk(k, b, out.vertex_scheme[v]);
    for (auto [u, v] : g.edges()) {
        out.gadget_edge.emplace_back(u, v);
        out.edge_gadget_base.push_back(b.n);
        int tu = out.terminal_map[u][terminal_slot(g, u, v)];
        int tv = out.terminal_map[v][terminal_slot(g, v, u)];
        out.edge_scheme.emplace_back();
        emit_edge_gadgetk(k, b, tu, tv, out.edge_scheme.back());
    }
    out.graph = b.graph();
    return out;
}

Colouring lift_colouring(const Graph& g, const ReductionOutput& red, const Colouring& c) {
    if (static_cast<int>(c.at.size()) != g.n()) throw input_error("colouring size mismatch");
    if (c.k != red.k) throw input_error("colouring must use the reduction's k colours");
    for (auto [u, v] : g.edges())
        if (c.at[u] == c.at[v]) throw input_error("colouring of g is not proper");
    int k = red.k;
    std::vector<int> at(red.graph.n(), -1);
    auto apply = [&](const std::vector<std::pair<int, int>>& scheme,
                     const std::vector<int>& sigma) {
        for (auto [v, ref] : scheme) at[v] = sigma[ref];
    };
    for (int v = 0; v < g.n(); ++v) {
        std::vector<int> sigma(k);
        std::iota(sigma.begin(), sigma.end(), 0);
        if (red.kind == ReductionKind::C3)
            std::swap(sigma[0], sigma[c.at[v]]);  // corners take f(v)
        else
            std::swap(sigma[1], sigma[c.at[v]]);  // terminals take f(v)
        if (red.kind == ReductionKind::C2)
            at[red.terminal_map[v][0]] = c.at[v];
        else
            apply(red.vertex_scheme[v], sigma);
    }
    for (size_t e = 0; e < red.gadget_edge.size(); ++e) {
        auto [u, v] = red.gadget_edge[e];
        std::vector<int> sigma(k);
        if (red.kind == ReductionKind::C3) {
            // sigma(0) = p, sigma(k-1) = q: the two smallest colours outside
            // {f(u), f(v)}; remaining colours fill ascending.
            std::vector<int> outside;
            for (int col = 0; col < k; ++col)
                if (col != c.at[u] && col != c.at[v]) outside.push_back(col);
            int p = outside[0], q = outside[1];
            std::vector<int> rest;
            for (int col = 0; col < k; ++col)
                if (col != p && col != q) rest.push_back(col);
            sigma[0] = p;
            sigma[k - 1] = q;
            for (int r = 1; r < k - 1; ++r) sigma[r] = rest[r - 1];
        } else {
            // Reference terminal colours are u = 1, v = 0.
            sigma[1] = c.at[u];
            sigma[0] = c.at[v];
            sigma[2] = 3 - c.at[u] - c.at[v];
        }
        apply(red.edge_scheme[e], sigma);
    }
    for (int v : at)
        if (v < 0) throw std::logic_error("lift left a vertex uncoloured");
    Colouring lifted{k, at};
    if (!verify_star(red.graph, lifted).ok)
        throw std::logic_error("lifted colouring failed star verification");
    return lifted;
}

Colouring project_colouring(const Graph& g, const ReductionOutput& red, const Colouring& c) {
    if (static_cast<int>(c.at.size()) != red.graph.n())
        throw input_error("colouring size mismatch");
    if (!verify_star(red.graph, c).ok)
        throw input_error("colouring of the reduction output is not a star colouring");
    std::vector<int> at(g.n());
    for (int v = 0; v < g.n(); ++v) at[v] = c.at[red.terminal_map[v][0]];
    Colouring projected{red.k, at};
    for (auto [u, v] : g.edges())
        if (projected.at[u] == projected.at[v])
            throw std::logic_error("projected colouring is not proper");
    return projected;
}

}  // namespace starcol
