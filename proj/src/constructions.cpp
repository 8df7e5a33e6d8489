#include "starcol/constructions.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace starcol {

namespace {

bool g2p_adjacent(int i, int j, int k, int l) {
    return (k == j && l != i && l != j) || (k != i && k != j && l == i);
}

}  // namespace

int g2p_pair_index(int p, int i, int j) {
    if (i < 0 || j < 0 || i > p + 1 || j > p + 1 || i == j)
        throw input_error("invalid pair label");
    return i * (p + 1) + (j < i ? j : j - 1);
}

std::vector<std::pair<int, int>> g2p_pair_labels(int p) {
    std::vector<std::pair<int, int>> labels;
    for (int i = 0; i <= p + 1; ++i)
        for (int j = 0; j <= p + 1; ++j)
            if (i != j) labels.emplace_back(i, j);
    return labels;
}

Graph build_g2p(int p) {
    if (p < 2) throw input_error("build_g2p requires p >= 2");
    auto labels = g2p_pair_labels(p);
    int n = static_cast<int>(labels.size());
    std::vector<std::pair<int, int>> edges;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            auto [i, j] = labels[a];
            auto [k, l] = labels[b];
            if (g2p_adjacent(i, j, k, l)) edges.emplace_back(a, b);
        }
    return build_graph(n, edges);
}

Colouring g2p_canonical_colouring(int p) {
    auto labels = g2p_pair_labels(p);
    std::vector<int> at(labels.size());
    for (size_t v = 0; v < labels.size(); ++v) at[v] = labels[v].first;
    return Colouring{p + 2, std::move(at)};
}

std::vector<int> g2p_automorphism(int p, const std::vector<int>& h) {
    if (static_cast<int>(h.size()) != p + 2) throw input_error("h must permute 0..p+1");
    std::vector<char> hit(p + 2, 0);
    for (int x : h) {
        if (x < 0 || x > p + 1 || hit[x]) throw input_error("h is not a bijection");
        hit[x] = 1;
    }
    auto labels = g2p_pair_labels(p);
    std::vector<int> perm(labels.size());
    for (size_t v = 0; v < labels.size(); ++v)
        perm[v] = g2p_pair_index(p, h[labels[v].first], h[labels[v].second]);
    // Edge preservation check.
    Graph g = build_g2p(p);
    for (auto [u, v] : g.edges())
        if (!g.has_edge(perm[u], perm[v]))
            throw std::logic_error("index relabelling is not an automorphism");
    return perm;
}

std::vector<std::pair<int, int>> g2p_hamiltonian_cycle(int p) {
    if (p < 2) throw input_error("g2p_hamiltonian_cycle requires p >= 2");
    // Base cycle L_4 in G_4, closing with the edge {(3,0),(0,1)}.
    std::vector<std::pair<int, int>> cycle = {{0, 1}, {2, 0}, {1, 2}, {2, 3}, {3, 1}, {0, 3},
                                              {1, 0}, {0, 2}, {2, 1}, {3, 2}, {1, 3}, {3, 0}};
    for (int pp = 3; pp <= p; ++pp) {
        // The cycle lives in G_{2(pp-1)} over indices 0..pp. Relabel so that
        // it contains the edge {(0,1),(pp,0)}: every cycle edge has the form
        // {(a,b),(b,c)}; map a -> pp, b -> 0, c -> 1 (edge-transitivity).
        auto [x1, y1] = cycle[0];
        auto [x2, y2] = cycle[1];
        int a, b, c;
        if (y1 == x2) {
            a = x1, b = y1, c = y2;
        } else {  // shared index the other way round
            a = x2, b = y2, c = y1;
        }
        std::vector<int> h(pp + 1, -1);
        h[a] = pp;
        h[b] = 0;
        h[c] = 1;
        int next = 2;
        for (int i = 0; i <= pp; ++i)
            if (h[i] == -1) h[i] = next++;
        for (auto& [x, y] : cycle) {
            x = h[x];
            y = h[y];
        }
        // Rotate/orient so the sequence starts at (0,1) with (pp,0) last.
        int n = static_cast<int>(cycle.size());
        int at = -1;
        for (int i = 0; i < n; ++i)
            if (cycle[i] == std::make_pair(0, 1)) at = i;
        std::rotate(cycle.begin(), cycle.begin() + at, cycle.end());
        if (cycle[1] == std::make_pair(pp, 0)) {
            std::reverse(cycle.begin() + 1, cycle.end());
        }
        if (cycle.back() != std::make_pair(pp, 0))
            throw std::logic_error("hamiltonian relabelling failed");
        // Splice the path through the new pairs in place of the closing edge:
        // (0,1),(1,p+1),(p+1,0),(2,p+1),(p+1,1),...,(p,p+1),(p+1,p-1),
        // (0,p+1),(p+1,p),(p,0). Here p is pp and p+1 is the new index pp+1.
        std::vector<std::pair<int, int>> splice;
        for (int t = 1; t <= pp; ++t) {
            splice.emplace_back(t, pp + 1);
            splice.emplace_back(pp + 1, t - 1);
        }
        splice.emplace_back(0, pp + 1);
        splice.emplace_back(pp + 1, pp);
        // The path runs (0,1) -> splice -> (pp,0); with (0,1) first and
        // (pp,0) last in the sequence, append it reversed.
        std::reverse(splice.begin(), splice.end());
        cycle.insert(cycle.end(), splice.begin(), splice.end());
    }
    return cycle;
}

bool is_hamiltonian_cycle(const Graph& g, const std::vector<int>& cycle) {
    if (static_cast<int>(cycle.size()) != g.n() || g.n() < 3) return false;
    std::vector<char> seen(g.n(), 0);
    for (int v : cycle) {
        if (v < 0 || v >= g.n() || seen[v]) return false;
        seen[v] = 1;
    }
    for (size_t i = 0; i < cycle.size(); ++i)
        if (!g.has_edge(cycle[i], cycle[(i + 1) % cycle.size()])) return false;
    return true;
}

Graph build_h2p(int p) {
    Graph g = build_g2p(p);
    auto cyc = g2p_hamiltonian_cycle(p);
    int n = g.n();
    std::set<std::pair<int, int>> matching;
    for (size_t i = 0; i < cyc.size(); i += 2) {
        int u = g2p_pair_index(p, cyc[i].first, cyc[i].second);
        int v = g2p_pair_index(p, cyc[(i + 1) % cyc.size()].first, cyc[(i + 1) % cyc.size()].second);
        matching.insert(std::minmax(u, v));
    }
    std::vector<std::pair<int, int>> edges;
    for (auto e : g.edges())
        if (!matching.count(e)) edges.push_back(e);
    return build_graph(n, edges);
}

RingGraph build_ring(int p, int t) {
    if (p < 2 || t < 1) throw input_error("build_ring requires p >= 2 and t >= 1");
    Graph g2p = build_g2p(p);
    auto cyc = g2p_hamiltonian_cycle(p);
    int block = g2p.n();
    // vw = the closing edge of the Hamiltonian cycle; the cycle itself is a
    // Hamiltonian path from w = cyc[0] to v = cyc[block-1] in G_2p - vw.
    int w = g2p_pair_index(p, cyc[0].first, cyc[0].second);
    int v = g2p_pair_index(p, cyc[block - 1].first, cyc[block - 1].second);
    std::vector<std::pair<int, int>> edges;
    for (int s = 0; s < t; ++s) {
        for (auto [a, b] : g2p.edges()) {
            if (std::minmax(a, b) == std::minmax(v, w)) continue;
            edges.emplace_back(s * block + a, s * block + b);
        }
        edges.emplace_back(s * block + v, ((s + 1) % t) * block + w);
    }
    RingGraph r;
    r.p = p;
    r.t = t;
    r.graph = build_graph(block * t, edges);
    auto labels = g2p_pair_labels(p);
    r.pair_label.resize(block * t);
    r.copy_label.resize(block * t);
    std::vector<int> lifted(block * t);
    for (int s = 0; s < t; ++s)
        for (int u = 0; u < block; ++u) {
            r.pair_label[s * block + u] = labels[u];
            r.copy_label[s * block + u] = s;
            lifted[s * block + u] = labels[u].first;
        }
    r.lifted_colouring = Colouring{p + 2, std::move(lifted)};
    // Hamiltonian cycle: chain the per-copy Hamiltonian paths w^(s)..v^(s).
    for (int s = 0; s < t; ++s)
        for (auto [i, j] : cyc) r.hamiltonian_cycle.push_back(s * block + g2p_pair_index(p, i, j));
    return r;
}

DecompositionVerdict verify_cycle_decomposition(const Graph& g, const CycleDecomposition& d,
                                                int modulus) {
    DecompositionVerdict r;
    if (modulus < 1) throw input_error("modulus must be positive");
    std::set<std::pair<int, int>> covered;
    for (size_t ci = 0; ci < d.cycles.size(); ++ci) {
        const auto& cyc = d.cycles[ci];
        if (cyc.size() < 3) {
            r.detail = "cycle " + std::to_string(ci) + " has fewer than 3 vertices";
            return r;
        }
        std::set<int> verts(cyc.begin(), cyc.end());
        if (verts.size() != cyc.size()) {
            r.detail = "cycle " + std::to_string(ci) + " repeats a vertex";
            return r;
        }
        if (cyc.size() % modulus != 0) {
            r.detail = "cycle " + std::to_string(ci) + " has length " +
                       std::to_string(cyc.size()) + " not divisible by " + std::to_string(modulus);
            return r;
        }
        for (size_t i = 0; i < cyc.size(); ++i) {
            int u = cyc[i], v = cyc[(i + 1) % cyc.size()];
            if (u < 0 || u >= g.n() || !g.has_edge(u, v)) {
                r.detail = "cycle " + std::to_string(ci) + " uses a non-edge";
                return r;
            }
            auto e = std::minmax(u, v);
            if (covered.count(e)) {
                r.detail = "edge (" + std::to_string(e.first) + "," + std::to_string(e.second) +
                           ") used twice";
                return r;
            }
            covered.insert(e);
        }
    }
    if (static_cast<int>(covered.size()) != g.m()) {
        r.detail = "cycles cover " + std::to_string(covered.size()) + " of " +
                   std::to_string(g.m()) + " edges";
        return r;
    }
    r.ok = true;
    return r;
}

}  // namespace starcol
