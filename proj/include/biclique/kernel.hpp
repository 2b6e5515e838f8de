#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "biclique/biclique.hpp"
#include "biclique/graph.hpp"

namespace biclique {

// Vertex-disjoint induced K3 / K1+K2 triples; z is the union of their vertices.
struct Packing {
	std::vector<ForbiddenTriple> triples;
	VertexSet z;
};

// Maximal packing by repeated find_forbidden on the vertices not used so far.
Packing greedy_packing(const Graph &g);

enum class KernelOutcome { in_progress, reduced_instance, trivial_no, trivial_yes };

std::string to_string(KernelOutcome o);

// One rule application, with the state the rule saw.
struct RuleApplication {
	std::string rule;
	std::size_t n = 0;
	long k = 0;
	std::size_t z = 0;
	std::size_t x = 0;
	std::size_t y = 0;
	std::string detail;
};

struct KernelState {
	Graph graph;
	long k = 0;
	Packing packing;
	// Parts of G - Z with |x| <= |y|.
	VertexSet x, y;
	VertexSet z_x, z_y, z_prime;
	VertexSet marked;
	KernelOutcome outcome = KernelOutcome::in_progress;
	std::vector<RuleApplication> log;
	std::size_t original_n = 0;
	long original_k = 0;
};

// Fresh state with packing and classification computed.
KernelState make_kernel_state(Graph g, long k);

// Recomputes packing, X, Y, Z_X, Z_Y and Z' from the current graph and k.
void refresh(KernelState &st);

// Each rule is a no-op unless the state is in progress. Trivial outcomes
// replace the graph by a fixed instance with the same answer: K3 with k = 0
// for no, K2 with k = 0 for yes.
KernelState rr1_trivial(KernelState st);
// Stops with a reduced instance when |Y| <= k + 2.
KernelState rr2_size(KernelState st);
// Trivial-no when Z_X and Z_Y meet; otherwise contracts the smallest qualifying edge.
KernelState rr3_contract(KernelState st);
// Marks and deletes one unmarked vertex on each side, or stops with a reduced instance.
KernelState rr4_mark_delete(KernelState st);

// Throws precondition_error for a disconnected graph.
KernelState kernelize_bbc(const Graph &g, long k);

} // namespace biclique
