#ifndef STARCOL_GRAPH_HPP
#define STARCOL_GRAPH_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace starcol {

// Immutable simple undirected graph. Vertices are dense integers 0..n-1,
// edges are stored as sorted pairs (u < v) in lexicographic order.
class Graph {
public:
    Graph() = default;

    int n() const { return n_; }
    int m() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<int>& adj(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    bool has_edge(int u, int v) const;
    // Index of edge {u,v} in edges(), or -1.
    int edge_index(int u, int v) const;

    friend Graph build_graph(int n, const std::vector<std::pair<int, int>>& edge_list);

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adj_;
};

// Thrown on precondition violations (bad parameters, malformed input).
struct input_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Builds a graph from an edge list; duplicate pairs collapse.
// Rejects out-of-range endpoints and self-loops, naming the offending pair.
Graph build_graph(int n, const std::vector<std::pair<int, int>>& edge_list);

enum class StandardKind { Complete, Cycle, Hypercube, MoebiusLadder8 };

// complete k (k>=3), cycle k (k>=3), hypercube d (d>=1, vertices are
// bitstrings as integers), moebius_ladder 8 (cycle 0..7 plus chords i,i+4).
Graph gen_standard(StandardKind kind, int param);

// Degree d iff every vertex has degree d; empty for n=0 or irregular graphs.
std::optional<int> is_regular(const Graph& g);

// Length of a shortest cycle (BFS from every vertex); empty if acyclic.
std::optional<int> girth(const Graph& g);

// Two-colouring by BFS, or empty if some component has an odd cycle.
std::optional<std::vector<int>> bipartition(const Graph& g);

// Exact maximum independent set size by branch and bound; n <= cap.
int independence_number(const Graph& g, int cap = 40);

// Minimum k admitting a proper colouring, iterative deepening; n <= cap.
int chromatic_number(const Graph& g, int cap = 40);

// Proper k-colouring by backtracking with first-use colour symmetry breaking.
std::optional<std::vector<int>> find_proper_colouring(const Graph& g, int k);

}  // namespace starcol

#endif
