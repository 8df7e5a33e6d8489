#include "starcol/colouring.hpp"

#include <algorithm>
#include <array>

namespace starcol {

int Colouring::colours_used() const {
    std::vector<char> seen(k, 0);
    int used = 0;
    for (int c : at)
        if (!seen[c]) {
            seen[c] = 1;
            ++used;
        }
    return used;
}

Colouring make_colouring(int k, std::vector<int> assignment) {
    if (k < 0) throw input_error("k must be nonnegative");
    for (int c : assignment)
        if (c < 0 || c >= k) throw input_error("colour out of range");
    return Colouring{k, std::move(assignment)};
}

StarVerdict verify_star(const Graph& g, const Colouring& c) {
    if (static_cast<int>(c.at.size()) != g.n())
        throw input_error("colouring length does not match graph");
    for (int v = 0; v < g.n(); ++v)
        if (c.at[v] < 0 || c.at[v] >= c.k) throw input_error("colour out of range");
    StarVerdict r;
    for (auto [u, v] : g.edges()) {
        if (c.at[u] == c.at[v]) {
            r.monochromatic_edge = {u, v};
            return r;
        }
    }
    // A bicoloured P4 x,u,v,y exists iff some edge {u,v} has a neighbour x of u
    // coloured like v and a neighbour y of v coloured like u. Properness makes
    // any such x and y automatically distinct.
    for (auto [u, v] : g.edges()) {
        int x = -1;
        for (int w : g.adj(u))
            if (w != v && c.at[w] == c.at[v]) {
                x = w;
                break;
            }
        if (x == -1) continue;
        for (int y : g.adj(v))
            if (y != u && c.at[y] == c.at[u]) {
                r.bicoloured_p4 = std::array<int, 4>{x, u, v, y};
                return r;
            }
    }
    r.ok = true;
    return r;
}

std::vector<BicolouredComponent> bicoloured_components(const Graph& g, const Colouring& c) {
    if (static_cast<int>(c.at.size()) != g.n())
        throw input_error("colouring length does not match graph");
    for (auto [u, v] : g.edges())
        if (c.at[u] == c.at[v]) throw input_error("colouring is not proper");

    std::vector<BicolouredComponent> out;
    std::vector<int> comp(g.n());
    std::vector<int> stack;
    for (int i = 0; i < c.k; ++i) {
        for (int j = i + 1; j < c.k; ++j) {
            std::fill(comp.begin(), comp.end(), -1);
            for (int s = 0; s < g.n(); ++s) {
                if ((c.at[s] != i && c.at[s] != j) || comp[s] != -1) continue;
                BicolouredComponent bc;
                bc.colour_i = i;
                bc.colour_j = j;
                stack.assign(1, s);
                comp[s] = 1;
                while (!stack.empty()) {
                    int u = stack.back();
                    stack.pop_back();
                    bc.vertices.push_back(u);
                    for (int w : g.adj(u)) {
                        if ((c.at[w] == i || c.at[w] == j) && comp[w] == -1) {
                            comp[w] = 1;
                            stack.push_back(w);
                        }
                    }
                }
                std::sort(bc.vertices.begin(), bc.vertices.end());
                // Star test: K_{1,l} has l vertices of induced degree 1 and, for
                // l >= 2, one centre of degree l; count induced degrees.
                int nc = static_cast<int>(bc.vertices.size());
                int edges2 = 0;  // twice the edge count
                int centre = -1, max_deg = 0;
                for (int u : bc.vertices) {
                    int d = 0;
                    for (int w : g.adj(u))
                        if ((c.at[w] == i || c.at[w] == j)) ++d;
                    edges2 += d;
                    if (d > max_deg) {
                        max_deg = d;
                        centre = u;
                    }
                }
                int edges = edges2 / 2;
                bc.is_star = (edges == nc - 1) && (max_deg == nc - 1);
                if (bc.is_star) {
                    bc.leaf_count = nc - 1;
                    if (nc == 1)
                        bc.centre = bc.vertices[0];
                    else if (nc > 2)
                        bc.centre = centre;
                    // K_{1,1}: no unique centre.
                }
                out.push_back(std::move(bc));
            }
        }
    }
    return out;
}

Colouring canonical_colouring(const Colouring& c) {
    std::vector<int> relabel(c.k, -1);
    int next = 0;
    Colouring out;
    out.k = c.k;
    out.at.reserve(c.at.size());
    for (int col : c.at) {
        if (relabel[col] == -1) relabel[col] = next++;
        out.at.push_back(relabel[col]);
    }
    return out;
}

bool same_up_to_swaps(const Colouring& a, const Colouring& b) {
    if (a.k != b.k || a.at.size() != b.at.size()) return false;
    return canonical_colouring(a).at == canonical_colouring(b).at;
}

}  // namespace starcol
