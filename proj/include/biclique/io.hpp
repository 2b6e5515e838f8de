#pragma once

#include <iosfwd>
#include <string>

#include "biclique/graph.hpp"
#include "biclique/reductions.hpp"

namespace biclique {

// Edge list: `p <n> <m>` then m lines `e <u> <v>`, 1-based; blank lines and
// lines starting with `c` are skipped. Throws parse_error.
Graph read_edge_list(std::istream &in);
Graph read_edge_list_file(const std::string &path);

// Live vertices are renumbered 1..n in ascending id order; edges sorted.
void write_edge_list(std::ostream &out, const Graph &g, const std::string &comment = {});

// `p rbds <red> <blue> <m> <kappa>` then m lines `e <r> <b>`, both 1-based.
RbdsInstance read_rbds(std::istream &in);

// `h <N> <M>` then M lines of 1-based vertex ids, one hyperedge per line.
Hypergraph read_hypergraph(std::istream &in);

} // namespace biclique
