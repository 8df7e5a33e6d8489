#ifndef STARCOL_SOLVER_HPP
#define STARCOL_SOLVER_HPP

#include <map>
#include <optional>
#include <string>

#include "starcol/colouring.hpp"
#include "starcol/graph.hpp"

namespace starcol {

struct SolveConfig {
    std::map<int, int> pinned;   // vertex -> colour, fixed before search
    int upper_bound_k = 0;       // star_chromatic_number search cap (0 = none)
    long long node_budget = -1;  // -1 = unlimited
    unsigned seed = 0;           // rotates vertex tie-breaking (portfolio)
    int jobs = 1;
    bool deterministic = true;   // forces sequential search even when jobs > 1
    bool use_known_bounds = true;  // divisibility fast-reject, regular lower bound
};

enum class SolveStatus { Sat, Unsat, Indeterminate };

struct DecideResult {
    SolveStatus status = SolveStatus::Indeterminate;
    std::optional<Colouring> colouring;  // present iff Sat; passes verify_star
    long long nodes = 0;
    std::string reason;  // "divisibility" when the fast-reject fired
};

struct CountResult {
    bool complete = false;  // false = node budget exhausted
    long long count = 0;
    long long nodes = 0;
};

struct ChiResult {
    int lo = 0, hi = 0;  // chi_s(g) lies in [lo, hi]
    bool exact = false;
    std::optional<Colouring> colouring;  // witness for hi when exact
    long long nodes = 0;
};

struct AnotherResult {
    SolveStatus status = SolveStatus::Indeterminate;  // Sat = another colouring exists
    std::optional<Colouring> colouring;
    long long nodes = 0;
};

// Exact k-star-colouring decision by backtracking: saturation-first vertex
// order, incremental bicoloured-P4 detection, forced-colour propagation on
// bicoloured P3s, first-use colour symmetry breaking when no pins are given.
DecideResult decide_k_star(const Graph& g, int k, const SolveConfig& cfg = {});

// Smallest k with decide_k_star succeeding; iterates upward from the cheap
// lower bounds. Budget exhaustion yields the interval [lo, hi] with hi = n.
ChiResult star_chromatic_number(const Graph& g, const SolveConfig& cfg = {});

// Number of k-star colourings respecting cfg.pinned; with up_to_swaps the
// count is over canonical representatives (colours in first-use order by
// vertex index). up_to_swaps cannot be combined with pins.
CountResult count_k_star(const Graph& g, int k, bool up_to_swaps, const SolveConfig& cfg = {});

// A k-star colouring that is not a colour permutation of c, if any.
AnotherResult another_colouring(const Graph& g, const Colouring& c, int k,
                                const SolveConfig& cfg = {});

}  // namespace starcol

#endif
