#ifndef STARCOL_TEST_UTIL_HPP
#define STARCOL_TEST_UTIL_HPP

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "starcol/graph.hpp"

namespace testutil {

// Erdos-Renyi-style random graph from a seeded engine.
inline starcol::Graph random_graph(int n, double p, std::mt19937& rng) {
    std::vector<std::pair<int, int>> edges;
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng) < p) edges.emplace_back(u, v);
    return starcol::build_graph(n, edges);
}

inline starcol::Graph relabel(const starcol::Graph& g, const std::vector<int>& perm) {
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
    return starcol::build_graph(g.n(), edges);
}

inline starcol::Graph circulant(int n, std::vector<int> jumps) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < n; ++v)
        for (int j : jumps) edges.emplace_back(v, (v + j) % n);
    return starcol::build_graph(n, edges);
}

// True iff repeatedly deleting vertices of degree <= 2 empties the graph.
inline bool is_2_degenerate(const starcol::Graph& g) {
    std::vector<int> deg(g.n());
    std::vector<char> dead(g.n(), 0);
    for (int v = 0; v < g.n(); ++v) deg[v] = g.degree(v);
    int removed = 0;
    bool progress = true;
    while (progress) {
        progress = false;
        for (int v = 0; v < g.n(); ++v) {
            if (dead[v] || deg[v] > 2) continue;
            dead[v] = 1;
            ++removed;
            progress = true;
            for (int w : g.adj(v))
                if (!dead[w]) --deg[w];
        }
    }
    return removed == g.n();
}

// Isomorphism-free exhaustive generation of connected d-regular graphs on n
// vertices by vertex augmentation. A graph is kept in canonical form: its
// column-major upper-triangle bitstring (pairs ordered by higher endpoint)
// is lexicographically maximal over all relabellings. Deleting the last
// vertex of a canonical graph leaves a canonical graph, so extending only
// canonical partial graphs reaches every canonical graph exactly once.
class RegularEnumerator {
public:
    RegularEnumerator(int n, int d) : n_(n), d_(d) {}

    std::vector<starcol::Graph> all() {
        graphs_.clear();
        adj_.assign(n_, std::vector<char>(n_, 0));
        deg_.assign(n_, 0);
        if (n_ >= 1) grow(1);
        return graphs_;
    }

private:
    int n_, d_;
    std::vector<std::vector<char>> adj_;
    std::vector<int> deg_;
    std::vector<starcol::Graph> graphs_;

    void grow(int t) {  // vertices 0..t-1 are placed and canonical
        if (t == n_) {
            for (int v = 0; v < n_; ++v)
                if (deg_[v] != d_) return;
            if (!connected()) return;
            std::vector<std::pair<int, int>> edges;
            for (int a = 0; a < n_; ++a)
                for (int b = a + 1; b < n_; ++b)
                    if (adj_[a][b]) edges.emplace_back(a, b);
            graphs_.push_back(starcol::build_graph(n_, edges));
            return;
        }
        // Feasibility: every old vertex can gain at most one edge per new vertex.
        for (int v = 0; v < t; ++v)
            if (d_ - deg_[v] > n_ - t) return;
        // Choose the back-neighbourhood of the new vertex t.
        std::vector<int> nbrs;
        choose(t, 0, nbrs);
    }

    void choose(int t, int from, std::vector<int>& nbrs) {
        if (static_cast<int>(nbrs.size()) <= d_) {
            bool full = static_cast<int>(nbrs.size()) == d_;
            // Accept this neighbourhood (vertex t may stay under degree d
            // and catch up from later vertices, unless it is the last one).
            if (full || t < n_ - 1) {
                for (int w : nbrs) {
                    adj_[t][w] = adj_[w][t] = 1;
                    ++deg_[w];
                }
                deg_[t] = static_cast<int>(nbrs.size());
                if (canonical(t + 1)) grow(t + 1);
                deg_[t] = 0;
                for (int w : nbrs) {
                    adj_[t][w] = adj_[w][t] = 0;
                    --deg_[w];
                }
            }
        }
        if (static_cast<int>(nbrs.size()) == d_) return;
        for (int w = from; w < t; ++w) {
            if (deg_[w] == d_) continue;
            nbrs.push_back(w);
            choose(t, w + 1, nbrs);
            nbrs.pop_back();
        }
    }

    bool connected() const {
        std::vector<char> seen(n_, 0);
        std::vector<int> stack = {0};
        seen[0] = 1;
        int cnt = 1;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (int y = 0; y < n_; ++y)
                if (adj_[x][y] && !seen[y]) {
                    seen[y] = 1;
                    ++cnt;
                    stack.push_back(y);
                }
        }
        return cnt == n_;
    }

    // True iff no relabelling of the first `t` vertices yields a
    // lexicographically larger column-major bitstring.
    bool canonical(int t) {
        std::vector<int> perm;
        perm.reserve(t);
        std::vector<char> used(t, 0);
        return !larger_exists(t, perm, used);
    }

    bool larger_exists(int t, std::vector<int>& perm, std::vector<char>& used) {
        if (static_cast<int>(perm.size()) == t) return false;
        int depth = static_cast<int>(perm.size());
        for (int x = 0; x < t; ++x) {
            if (used[x]) continue;
            // Compare the new column (pairs (a, depth)) against the identity.
            int cmp = 0;
            for (int a = 0; a < depth; ++a) {
                int lhs = adj_[perm[a]][x];
                int rhs = adj_[a][depth];
                if (lhs != rhs) {
                    cmp = lhs - rhs;
                    break;
                }
            }
            if (cmp > 0) return true;
            if (cmp < 0) continue;
            perm.push_back(x);
            used[x] = 1;
            if (larger_exists(t, perm, used)) return true;
            used[x] = 0;
            perm.pop_back();
        }
        return false;
    }
};

}  // namespace testutil

#endif
