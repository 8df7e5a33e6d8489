#ifndef STARCOL_REDUCTIONS_HPP
#define STARCOL_REDUCTIONS_HPP

#include <array>
#include <string>
#include <vector>

#include "starcol/colouring.hpp"
#include "starcol/graph.hpp"

namespace starcol {

// Gadget component for the 3-star constructions: hub w joined to corners
// x,y,z; three corner-to-corner paths with 6s+5 internal vertices each;
// pendant vertices on the 3s+1 positions nearest each corner. 36s+25
// vertices, 36s+27 edges, girth 6s+8. Its 3-star colouring is unique up to
// swaps and gives x,y,z one colour.
struct Component3 {
    Graph graph;
    int w = 0, x = 0, y = 0, z = 0;
    Colouring scheme;  // reference 3-star colouring (w=0, corners=1)
};
Component3 gadget_component_3star(int s);

// Gadget component for the k-star construction (k >= 4): corners a,b,c on a
// 12-cycle, independent sets W1 (k-2), W2,W3,U1,U2,U3 (k-3 each), W_j joined
// to x_j,y_j,z_j and U_j. 6k-5 vertices; every k-star colouring gives a,b,c
// one colour.
struct ComponentK {
    Graph graph;
    int a = 0, b = 0, c = 0;
    Colouring scheme;  // reference k-star colouring (corners 0)
};
ComponentK gadget_component_kstar(int k);

enum class ReductionKind { C1, C2, C3 };

struct ReductionOutput {
    ReductionKind kind = ReductionKind::C1;
    int s = 0;  // girth parameter (C1/C2)
    int k = 3;  // colour parameter (3 for C1/C2)
    Graph graph;
    std::vector<std::vector<int>> terminal_map;    // source vertex -> terminal vertices
    std::vector<std::pair<int, int>> gadget_edge;  // edge-gadget id -> source edge (u < v)
    std::vector<int> edge_gadget_base;             // first fresh vertex per edge gadget

    // Reference-scheme colour of gadget-internal vertices, used by
    // lift_colouring; not serialized.
    std::vector<std::vector<std::pair<int, int>>> vertex_scheme;  // per source vertex
    std::vector<std::vector<std::pair<int, int>>> edge_scheme;    // per edge gadget
};

// Vertex gadgets (4 terminals) for every source vertex, edge gadgets for
// every source edge. Output: bipartite, max degree 3, girth 6s+8, with
// (36s+29)(n+m) vertices and (36s+31)n + (36s+33)m edges. 3-colourability of
// g is equivalent to 3-star colourability of the output.
ReductionOutput construction1(const Graph& g, int s);

// Source vertices persist; every edge becomes an edge gadget. Output:
// bipartite, 2-degenerate, max degree max(deg) <= 8, girth 6s+8. The number
// of 3-colourings of g up to swaps equals the number of 3-star colourings of
// the output up to swaps.
ReductionOutput construction2(const Graph& g, int s);

// Vertex gadget = chain of 2(k-1) k-star components sharing corners, with
// the corner-a vertices as terminals; edge gadget = one component with b and
// c joined to both terminals. Output: bipartite, max degree k.
// k-colourability of g is equivalent to k-star colourability of the output.
ReductionOutput construction3(const Graph& g, int k);

// Extends a proper colouring of g to a star colouring of the reduction
// output using the per-gadget reference schemes (colour-swapped per gadget);
// the result is verified before return.
Colouring lift_colouring(const Graph& g, const ReductionOutput& red, const Colouring& c);

// Reads terminal colours back into a proper colouring of g. Requires c a
// verified star colouring of the reduction output.
Colouring project_colouring(const Graph& g, const ReductionOutput& red, const Colouring& c);

}  // namespace starcol

#endif
