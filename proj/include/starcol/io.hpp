#ifndef STARCOL_IO_HPP
#define STARCOL_IO_HPP

#include <iosfwd>
#include <string>

#include "starcol/colouring.hpp"
#include "starcol/graph.hpp"
#include "starcol/orientation.hpp"
#include "starcol/reductions.hpp"
#include "starcol/structure.hpp"

namespace starcol {

// Canonical edge-list text: first line "n m", then m lines "u v" with
// 0 <= u < v < n sorted lexicographically; '#' begins a comment line.
Graph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Graph& g);

// Colouring text: n lines "v c".
Colouring read_colouring(std::istream& in, int n);
void write_colouring(std::ostream& out, const Colouring& c);

// Orientation text: "n m" header then m lines "u v" meaning u -> v.
Orientation read_orientation(std::istream& in, const Graph& g);
void write_orientation(std::ostream& out, const Graph& g, const Orientation& o);

// JSON (all objects carry "format": 1).
std::string partition_to_json(const StarPartition& sp);
StarPartition partition_from_json(const std::string& text);
std::string matrix_to_json(const DegreeConstraintMatrix& m);
std::string reduction_sidecar_json(const ReductionOutput& red);
std::string certificate_to_json(const Graph& g, const CeoCertificate& cert);

}  // namespace starcol

#endif
