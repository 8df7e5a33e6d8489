#include "starcol/graph.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <stdexcept>

namespace starcol {

bool Graph::has_edge(int u, int v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v) return false;
    const auto& a = adj_[u];
    return std::binary_search(a.begin(), a.end(), v);
}

int Graph::edge_index(int u, int v) const {
    if (u > v) std::swap(u, v);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), std::make_pair(u, v));
    if (it == edges_.end() || *it != std::make_pair(u, v)) return -1;
    return static_cast<int>(it - edges_.begin());
}

Graph build_graph(int n, const std::vector<std::pair<int, int>>& edge_list) {
    if (n < 0) throw input_error("vertex count must be nonnegative");
    std::set<std::pair<int, int>> dedup;
    for (auto [u, v] : edge_list) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw input_error("edge endpoint out of range: (" + std::to_string(u) + "," +
                              std::to_string(v) + ")");
        if (u == v)
            throw input_error("self-loop rejected: (" + std::to_string(u) + "," +
                              std::to_string(v) + ")");
        if (u > v) std::swap(u, v);
        dedup.emplace(u, v);
    }
    Graph g;
    g.n_ = n;
    g.edges_.assign(dedup.begin(), dedup.end());
    g.adj_.assign(n, {});
    for (auto [u, v] : g.edges_) {
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
    }
    for (auto& a : g.adj_) std::sort(a.begin(), a.end());
    return g;
}

Graph gen_standard(StandardKind kind, int param) {
    std::vector<std::pair<int, int>> e;
    switch (kind) {
        case StandardKind::Complete: {
            if (param < 3) throw input_error("complete k requires k >= 3");
            for (int u = 0; u < param; ++u)
                for (int v = u + 1; v < param; ++v) e.emplace_back(u, v);
            return build_graph(param, e);
        }
        case StandardKind::Cycle: {
            if (param < 3) throw input_error("cycle k requires k >= 3");
            for (int u = 0; u < param; ++u) e.emplace_back(u, (u + 1) % param);
            return build_graph(param, e);
        }
        case StandardKind::Hypercube: {
            if (param < 1) throw input_error("hypercube d requires d >= 1");
            if (param > 20) throw input_error("hypercube d too large");
            int n = 1 << param;
            for (int u = 0; u < n; ++u)
                for (int b = 0; b < param; ++b)
                    if (u < (u ^ (1 << b))) e.emplace_back(u, u ^ (1 << b));
            return build_graph(n, e);
        }
        case StandardKind::MoebiusLadder8: {
            if (param != 8) throw input_error("moebius_ladder supports only 8 vertices");
            for (int u = 0; u < 8; ++u) e.emplace_back(u, (u + 1) % 8);
            for (int u = 0; u < 4; ++u) e.emplace_back(u, u + 4);
            return build_graph(8, e);
        }
    }
    throw input_error("unknown generator kind");
}

std::optional<int> is_regular(const Graph& g) {
    if (g.n() == 0) return std::nullopt;
    int d = g.degree(0);
    for (int v = 1; v < g.n(); ++v)
        if (g.degree(v) != d) return std::nullopt;
    return d;
}

std::optional<int> girth(const Graph& g) {
    int best = -1;
    std::vector<int> dist(g.n()), parent(g.n());
    for (int s = 0; s < g.n(); ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(parent.begin(), parent.end(), -1);
        std::queue<int> q;
        dist[s] = 0;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int w : g.adj(u)) {
                if (dist[w] == -1) {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    q.push(w);
                } else if (w != parent[u]) {
                    int len = dist[u] + dist[w] + 1;
                    if (best == -1 || len < best) best = len;
                }
            }
        }
    }
    if (best == -1) return std::nullopt;
    return best;
}

std::optional<std::vector<int>> bipartition(const Graph& g) {
    std::vector<int> side(g.n(), -1);
    for (int s = 0; s < g.n(); ++s) {
        if (side[s] != -1) continue;
        side[s] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int w : g.adj(u)) {
                if (side[w] == -1) {
                    side[w] = 1 - side[u];
                    q.push(w);
                } else if (side[w] == side[u]) {
                    return std::nullopt;
                }
            }
        }
    }
    return side;
}

namespace {

// Max independent set on the subgraph induced by `alive`, branching on a
// max-degree vertex: either exclude it or take it and drop its neighbourhood.
int mis_rec(const Graph& g, std::vector<char>& alive, int alive_count, int current, int& best) {
    if (current + alive_count <= best) return best;
    int pick = -1, pick_deg = -1;
    for (int v = 0; v < g.n(); ++v) {
        if (!alive[v]) continue;
        int d = 0;
        for (int w : g.adj(v)) d += alive[w];
        if (d > pick_deg) {
            pick_deg = d;
            pick = v;
        }
    }
    if (pick == -1) {
        best = std::max(best, current);
        return best;
    }
    if (pick_deg <= 1) {
        // Remaining graph is a union of isolated vertices and edges: greedy is exact.
        int extra = 0;
        std::vector<char> seen(g.n(), 0);
        for (int v = 0; v < g.n(); ++v) {
            if (!alive[v] || seen[v]) continue;
            seen[v] = 1;
            ++extra;
            for (int w : g.adj(v))
                if (alive[w]) seen[w] = 1;
        }
        best = std::max(best, current + extra);
        return best;
    }
    std::vector<int> removed;
    // Branch 1: take pick.
    alive[pick] = 0;
    removed.push_back(pick);
    for (int w : g.adj(pick))
        if (alive[w]) {
            alive[w] = 0;
            removed.push_back(w);
        }
    mis_rec(g, alive, alive_count - static_cast<int>(removed.size()), current + 1, best);
    for (int v : removed) alive[v] = 1;
    // Branch 2: exclude pick.
    alive[pick] = 0;
    mis_rec(g, alive, alive_count - 1, current, best);
    alive[pick] = 1;
    return best;
}

bool colourable_rec(const Graph& g, int k, std::vector<int>& col, int v, int max_used) {
    if (v == g.n()) return true;
    int limit = std::min(k - 1, max_used + 1);
    for (int c = 0; c <= limit; ++c) {
        bool ok = true;
        for (int w : g.adj(v))
            if (w < v && col[w] == c) {
                ok = false;
                break;
            }
        if (!ok) continue;
        col[v] = c;
        if (colourable_rec(g, k, col, v + 1, std::max(max_used, c))) return true;
    }
    col[v] = -1;
    return false;
}

}  // namespace

int independence_number(const Graph& g, int cap) {
    if (g.n() > cap)
        throw input_error("independence_number brute-force cap exceeded (cap " +
                          std::to_string(cap) + ", n " + std::to_string(g.n()) + ")");
    std::vector<char> alive(g.n(), 1);
    int best = 0;
    mis_rec(g, alive, g.n(), 0, best);
    return best;
}

std::optional<std::vector<int>> find_proper_colouring(const Graph& g, int k) {
    if (k < 0) throw input_error("k must be nonnegative");
    std::vector<int> col(g.n(), -1);
    if (g.n() == 0) return col;
    if (k == 0) return std::nullopt;
    if (colourable_rec(g, k, col, 0, -1)) return col;
    return std::nullopt;
}

int chromatic_number(const Graph& g, int cap) {
    if (g.n() > cap)
        throw input_error("chromatic_number brute-force cap exceeded (cap " +
                          std::to_string(cap) + ", n " + std::to_string(g.n()) + ")");
    if (g.n() == 0) return 0;
    for (int k = 1;; ++k)
        if (find_proper_colouring(g, k)) return k;
}

}  // namespace starcol
