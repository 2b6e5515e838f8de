#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "biclique/graph.hpp"

namespace biclique {

// Bipartite graph on red ids [0, red) and blue ids [0, blue) with budget kappa.
struct RbdsInstance {
	std::size_t red = 0;
	std::size_t blue = 0;
	// (red id, blue id) pairs.
	std::vector<std::pair<Vertex, Vertex>> edges;
	long kappa = 0;
};

struct Hypergraph {
	std::size_t n = 0;
	std::vector<std::vector<Vertex>> edges;
};

// Output of a generator. `parameter` is the contraction budget, except for
// the independent-set reduction where it is the target biclique size.
struct Generated {
	Graph graph;
	long parameter = 0;
	std::vector<std::pair<std::string, long>> counts;
	std::vector<std::string> normalization;
};

// Deduplicates edges and gives every blue vertex with a single red neighbour
// a private red twin. Throws generator_error on out-of-range ids, an empty
// blue side, a blue vertex without red neighbours, or negative kappa.
RbdsInstance normalize(const RbdsInstance &inst, std::vector<std::string> *notes = nullptr);

// Sorts and deduplicates each hyperedge and appends the full edge when no
// hyperedge covers all vertices. Throws generator_error on empty or
// singleton hyperedges, out-of-range ids, or fewer than two vertices.
Hypergraph normalize(const Hypergraph &hg, std::vector<std::string> *notes = nullptr);

// Layout: R, B, B' (pendant per blue), apex x, then C of size kappa + |B| + 1.
// Budget kappa + |B|.
Generated gen_bc_from_rbds(const RbdsInstance &inst);

// The intermediate graph before subdivision. Layout: V, S^l, S^r, L, R with
// |L| = |R| = 6M + 3N - 5.
Graph h2c_intermediate(const Hypergraph &hg);

// Subdivides every S^l-V edge; the new vertices follow all other ids.
// Budget 2M + N - 2 plus the number of subdivision vertices.
Generated gen_bbc_from_h2c(const Hypergraph &hg);

// h plus a universal vertex (the last id); parameter k_is + 1.
Generated gen_bc_from_is(const Graph &h, long k_is);

// Exhaustive solvers for the source problems, refusing more than 20
// red / hypergraph / graph vertices with size_limit_exceeded.
bool solve_rbds_brute(const RbdsInstance &inst);
bool solve_h2c_brute(const Hypergraph &hg);
bool solve_is_brute(const Graph &h, long k);

} // namespace biclique
