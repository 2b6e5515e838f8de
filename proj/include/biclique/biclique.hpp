#pragma once

#include <array>
#include <optional>

#include "biclique/graph.hpp"

namespace biclique {

// Ordered pair of disjoint vertex sets. As a certificate it must cover V(G);
// either side may be empty.
struct Bipartition {
	VertexSet left;
	VertexSet right;

	friend bool operator==(const Bipartition &, const Bipartition &) = default;
};

// Returns the parts of g when g is complete bipartite. An edgeless graph is
// reported as <V, {}>. The first part holds the smallest vertex id.
std::optional<Bipartition> is_biclique(const Graph &g);

// Equal part sizes. An edgeless graph is balanced only when it has no vertices.
bool is_balanced_biclique(const Graph &g);

enum class ForbiddenKind { triangle, edge_plus_vertex };

struct ForbiddenTriple {
	ForbiddenKind kind;
	std::array<Vertex, 3> vertices; // for edge_plus_vertex: edge endpoints, then the isolated vertex
};

// An induced K3 or K1+K2, absent exactly when g is a biclique.
std::optional<ForbiddenTriple> find_forbidden(const Graph &g);
std::optional<ForbiddenTriple> find_forbidden(const Graph &g, const VertexSet &within);

// An induced K1+K2 of g[within] (equivalently an induced P3 of the complement).
std::optional<ForbiddenTriple> find_edge_plus_vertex(const Graph &g, const VertexSet &within);

} // namespace biclique
