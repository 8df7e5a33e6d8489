#ifndef STARCOL_CONSTRUCTIONS_HPP
#define STARCOL_CONSTRUCTIONS_HPP

#include <string>
#include <vector>

#include "starcol/colouring.hpp"
#include "starcol/graph.hpp"

namespace starcol {

// Vertices of G_2p are ordered pairs (i,j), i != j, i,j in 0..p+1, in
// lexicographic order; (i,j) ~ (k,l) iff (k = j and l not in {i,j}) or
// (k not in {i,j} and l = i).
int g2p_pair_index(int p, int i, int j);
std::vector<std::pair<int, int>> g2p_pair_labels(int p);

// The unique 2p-regular (p+2)-star-colourable graph on (p+1)(p+2) vertices.
Graph build_g2p(int p);

// f((i,j)) = i, a (p+2)-star colouring of G_2p.
Colouring g2p_canonical_colouring(int p);

// Vertex permutation induced by an index relabelling h: (x,y) -> (h(x),h(y)).
// Always an automorphism; edge preservation is checked on return.
std::vector<int> g2p_automorphism(int p, const std::vector<int>& h);

// Hamiltonian cycle as a pair-label sequence: fixed 12-cycle base for p = 2,
// then inductive splice through the two new index classes.
std::vector<std::pair<int, int>> g2p_hamiltonian_cycle(int p);

// Generic checker: every vertex once, consecutive pairs (and the closing
// pair) are edges.
bool is_hamiltonian_cycle(const Graph& g, const std::vector<int>& cycle);

// G_2p minus the perfect matching of alternate Hamiltonian-cycle edges.
Graph build_h2p(int p);

struct RingGraph {
    Graph graph;
    int p = 0, t = 0;
    // Dense index of copy s of pair u is s*(p+1)(p+2) + index(u).
    std::vector<std::pair<int, int>> pair_label;  // per vertex
    std::vector<int> copy_label;                  // per vertex
    std::vector<int> hamiltonian_cycle;
    Colouring lifted_colouring;                   // f(u^(s)) = i for u = (i,j)
};

// t copies of G_2p minus a Hamiltonian-cycle edge vw, chained by edges
// v^(s) w^(s+1 mod t). 2p-regular on t(p+1)(p+2) vertices; covers G_2p.
RingGraph build_ring(int p, int t);

struct CycleDecomposition {
    std::vector<std::vector<int>> cycles;  // each a vertex sequence
};

struct DecompositionVerdict {
    bool ok = false;
    std::string detail;
};

// Accepts iff the cycles are simple, edge-disjoint, cover E(g), and all
// lengths are divisible by `modulus`.
DecompositionVerdict verify_cycle_decomposition(const Graph& g, const CycleDecomposition& d,
                                                int modulus);

}  // namespace starcol

#endif
