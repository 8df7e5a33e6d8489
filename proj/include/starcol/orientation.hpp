#ifndef STARCOL_ORIENTATION_HPP
#define STARCOL_ORIENTATION_HPP

#include <optional>
#include <string>
#include <vector>

#include "starcol/colouring.hpp"
#include "starcol/graph.hpp"
#include "starcol/patterns.hpp"
#include "starcol/solver.hpp"

namespace starcol {

// Direction per edge of a base graph: forward[e] means edges()[e].first ->
// edges()[e].second.
struct Orientation {
    std::vector<char> forward;

    // Arc list (tail, head) aligned with g.edges().
    std::vector<std::pair<int, int>> arcs(const Graph& g) const;
};

std::vector<int> in_degrees(const Graph& g, const Orientation& o);
bool is_eulerian(const Graph& g, const Orientation& o);

// Eulerian orientation via circuit stitching per component; empty when some
// vertex has odd degree.
std::optional<Orientation> eulerian_orientation(const Graph& g);

struct ColourfulVerdict {
    bool ok = false;
    int vertex = -1;     // witness vertex on failure
    int condition = 0;   // violated condition 1..3, or 0 for properness
    std::string detail;
};

// Conditions of a q-colourful Eulerian orientation at every vertex v:
// (1) in-neighbours share one colour c_v, (2) no out-neighbour has colour
// c_v, (3) out-neighbours pairwise distinctly coloured. Requires o Eulerian
// and c proper.
ColourfulVerdict check_colourful(const Graph& g, const Orientation& o, const Colouring& c);

// Orients the two edges of every bicoloured P3 towards its middle vertex;
// edges on no bicoloured P3 go lower index -> higher index. Requires c to
// pass verify_star.
Orientation in_orientation(const Graph& g, const Colouring& c);

struct CeoCertificate {
    Orientation orientation;
    Colouring colouring;
    std::vector<int> in_colour;  // c_v per vertex; -1 for in-degree 0
};

// Forward direction of the (p+2)-star colouring <-> (p+2)-colourful Eulerian
// orientation equivalence. Requires g 2p-regular (p >= 2) and c a verified
// (p+2)-star colouring; the produced certificate always passes check_colourful.
CeoCertificate colouring_to_ceo(const Graph& g, const Colouring& c);

// Backward direction: the certificate's colouring, verified as a star colouring.
Colouring ceo_to_colouring(const Graph& g, const CeoCertificate& cert);

struct CeoSearchResult {
    SolveStatus status = SolveStatus::Indeterminate;  // Sat = certificate found
    std::optional<CeoCertificate> certificate;
    long long orientations_tried = 0;
    std::string reason;
};

// Exhaustive search for a q-colourful Eulerian orientation with q <=
// min(q_max, n): all 2^m orientations filtered to Eulerian, then colouring
// backtracking with condition-(1) propagation. Odd-degree graphs get "no"
// directly. jobs > 1 shards the orientation range; the certificate comes
// from the lowest-index orientation either way.
CeoSearchResult ceo_exists(const Graph& g, int q_max, long long budget = -1, int jobs = 1);

// First obstruction pattern contained as a subgraph, if any (hence no colourful
// Eulerian orientation; for d-regular g this certifies chi_s >= ceil((d+5)/2)).
struct ObstructionHit {
    PatternId pattern;
    std::vector<int> embedding;
};
std::optional<ObstructionHit> obstruction_reject(const Graph& g);

}  // namespace starcol

#endif
