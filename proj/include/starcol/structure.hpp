#ifndef STARCOL_STRUCTURE_HPP
#define STARCOL_STRUCTURE_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "starcol/colouring.hpp"
#include "starcol/graph.hpp"

namespace starcol {

// Partition of the vertex set into cells V_i^j indexed by ordered colour
// pairs (i,j), i != j, i,j in 0..p+1. Cells may be empty.
struct StarPartition {
    int p = 0;
    std::map<std::pair<int, int>, std::vector<int>> cells;

    int colour_count() const { return p + 2; }
    int cell_count() const { return (p + 1) * (p + 2); }
    // Cell index of each vertex (as a pair), or throws if not a partition of 0..n-1.
    std::vector<std::pair<int, int>> cell_of(int n) const;
};

enum class CountConstraint { Zero, One, Any };  // {0}, {1}, Z_0^+

// q x q matrix of allowed neighbour-count sets, rows/columns labelled by
// ordered pairs (i,j) in lexicographic order, q = (p+1)(p+2).
struct DegreeConstraintMatrix {
    int p = 0;
    int q = 0;
    std::vector<std::pair<int, int>> labels;
    std::vector<CountConstraint> entry;  // row-major q*q

    CountConstraint at(int r, int c) const { return entry[static_cast<size_t>(r) * q + c]; }
};

struct Verdict {
    bool ok = false;
    std::string detail;  // witness description on rejection
};

// "not (p+2)-star colourable" when n mod (p+1)(p+2) != 0; inconclusive otherwise.
// Requires g 2p-regular with p >= 2.
enum class DivisibilityVerdict { Reject, Inconclusive };
DivisibilityVerdict divisibility_reject(const Graph& g, int p);

// V_i^j := vertices of colour i with exactly p neighbours in colour class j.
// Requires g 2p-regular (p >= 2) and every vertex to have exactly one such j
// (one class with p neighbours, all others with one); reports the offending
// vertex otherwise.
StarPartition extract_partition(const Graph& g, const Colouring& c);

struct PartitionReport {
    bool ok = false;
    std::string detail;
    bool equal_cells = false;  // all cells of size n/((p+1)(p+2))
};

// Checks the exact neighbourhood conditions: each vertex of V_i^j has p
// neighbours in U_{k not in {i,j}} V_j^k, exactly one in V_k^i for every
// k not in {i,j}, and no neighbours elsewhere.
PartitionReport verify_partition(const Graph& g, const StarPartition& sp);

DegreeConstraintMatrix build_dq(int p);
DegreeConstraintMatrix build_eq(int p);

// Accepts iff every vertex's neighbour counts into every cell lie in the
// matrix's sets.
Verdict verify_dq_partition(const Graph& g, const StarPartition& sp,
                            const DegreeConstraintMatrix& m);

// Locally bijective homomorphism (H-cover): label[v] in V(h) with
// deg_g(v) = deg_h(label(v)) and the labels of N_g(v) exactly the
// neighbours of label(v), one each. Backtracking in BFS order from vertex 0.
std::optional<std::vector<int>> find_cover(const Graph& g, const Graph& h, int cap = 60);

// Validity check for a candidate cover labelling.
bool check_cover(const Graph& g, const Graph& h, const std::vector<int>& label);

// I_t = union of V_i^j over 0 <= i < t <= j <= p+1; independent in g.
std::vector<int> independent_set_it(const StarPartition& sp, int t);

// Proper colouring with at most 3*ceil(log2(p+2)) colours from a verified
// D_q-partition, by the recursive A/B/C/W1/W2 split.
Colouring colour_from_partition(const Graph& g, const StarPartition& sp);

struct FallEquitableReport {
    bool equitable = false;      // class sizes differ by <= 1
    bool all_equal = false;      // class sizes all equal
    bool fall = false;           // every closed neighbourhood sees all k colours
    std::vector<int> class_sizes;
};

FallEquitableReport check_fall_equitable(const Graph& g, const Colouring& c);

}  // namespace starcol

#endif
