#ifndef STARCOL_COLOURING_HPP
#define STARCOL_COLOURING_HPP

#include <array>
#include <optional>
#include <vector>

#include "starcol/graph.hpp"

namespace starcol {

// Total map vertex -> colour class index in 0..k-1.
struct Colouring {
    int k = 0;
    std::vector<int> at;

    int colours_used() const;
};

Colouring make_colouring(int k, std::vector<int> assignment);

struct StarVerdict {
    bool ok = false;
    // On rejection exactly one of these is set.
    std::optional<std::pair<int, int>> monochromatic_edge;
    std::optional<std::array<int, 4>> bicoloured_p4;
};

// Accepts iff c is proper and g has no bicoloured 4-vertex path under c.
// Deterministic witness: first violation in edge order.
StarVerdict verify_star(const Graph& g, const Colouring& c);

// Component of G[V_i u V_j] for a colour pair.
struct BicolouredComponent {
    int colour_i = 0, colour_j = 0;
    std::vector<int> vertices;   // sorted
    bool is_star = false;
    int leaf_count = -1;              // l for K_{1,l} components, -1 otherwise
    std::optional<int> centre;        // unique centre (absent for K_{1,1} and non-stars)
};

// All components over all colour pairs, including single-vertex ones.
// Requires c proper.
std::vector<BicolouredComponent> bicoloured_components(const Graph& g, const Colouring& c);

// Relabels colours by first occurrence scanning vertices 0..n-1.
Colouring canonical_colouring(const Colouring& c);

bool same_up_to_swaps(const Colouring& a, const Colouring& b);

}  // namespace starcol

#endif
