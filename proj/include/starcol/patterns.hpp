#ifndef STARCOL_PATTERNS_HPP
#define STARCOL_PATTERNS_HPP

#include <optional>
#include <string>
#include <vector>

#include "starcol/graph.hpp"

namespace starcol {

// Fixed small obstruction patterns. The B/D/E patterns are frozen
// transcriptions with vertex labels u,v,w,x,y,z,a,b,c (see pattern_labels).
enum class PatternId { Diamond, ObstructionB, C6Complement, ObstructionD, ObstructionE, K4 };

constexpr PatternId kAllPatterns[] = {PatternId::Diamond,       PatternId::ObstructionB,
                                      PatternId::C6Complement,  PatternId::ObstructionD,
                                      PatternId::ObstructionE,  PatternId::K4};

const Graph& pattern_graph(PatternId id);
const std::vector<std::string>& pattern_labels(PatternId id);
std::string pattern_name(PatternId id);
std::optional<PatternId> pattern_from_name(const std::string& name);

// Injective map pattern-vertex -> g-vertex preserving pattern edges
// (subgraph, not induced). Deterministic: lexicographically least
// embedding vector, found by backtracking with degree pruning.
std::optional<std::vector<int>> contains_subgraph(const Graph& g, PatternId pattern);

// Same search for an arbitrary small pattern graph.
std::optional<std::vector<int>> find_subgraph_embedding(const Graph& g, const Graph& pattern);

}  // namespace starcol

#endif
