#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "biclique/vertex_set.hpp"

namespace biclique {

// Unordered vertex pair, stored with u < v.
struct Edge {
	Vertex u = 0;
	Vertex v = 0;

	Edge() = default;
	Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

	friend bool operator==(const Edge &, const Edge &) = default;
	friend auto operator<=>(const Edge &, const Edge &) = default;
};

// Simple undirected graph over a fixed id universe [0, capacity). Removing or
// merging vertices never renumbers the survivors.
class Graph {
public:
	Graph() = default;
	explicit Graph(std::size_t n);

	static Graph from_edges(std::size_t n, std::span<const Edge> edges);

	std::size_t capacity() const { return adj_.size(); }
	std::size_t order() const { return vertices_.size(); }
	std::size_t size() const { return edge_count_; }

	const VertexSet &vertices() const { return vertices_; }
	const VertexSet &neighbors(Vertex v) const { return adj_[v]; }
	std::size_t degree(Vertex v) const { return adj_[v].size(); }

	bool has_vertex(Vertex v) const { return vertices_.contains(v); }
	bool has_edge(Vertex u, Vertex v) const { return u < adj_.size() && adj_[u].contains(v); }

	// Throws invalid_edge on self-loops or absent endpoints; parallel edges are ignored.
	void add_edge(Vertex u, Vertex v);
	void remove_edge(Vertex u, Vertex v);
	void remove_vertex(Vertex v);

	// Contracts the edge uv in place. The merged vertex keeps the smaller id,
	// which is returned. Throws invalid_edge when uv is not an edge.
	Vertex merge(Vertex u, Vertex v);

	std::vector<Edge> edges() const;

	friend bool operator==(const Graph &a, const Graph &b) {
		return a.vertices_ == b.vertices_ && a.adj_ == b.adj_;
	}

private:
	VertexSet vertices_;
	std::vector<VertexSet> adj_;
	std::size_t edge_count_ = 0;
};

// Sum of neighbourhood sizes equals twice the edge count, adjacency is
// symmetric and loop-free, and every neighbour is a live vertex.
bool check_invariants(const Graph &g);

Graph complement(const Graph &g);
Graph induced(const Graph &g, const VertexSet &s);
bool is_connected(const Graph &g);

// Connected components of g[s], ordered by minimum vertex id.
std::vector<VertexSet> components(const Graph &g, const VertexSet &s);
std::size_t component_count(const Graph &g, const VertexSet &s);

// Number of edges in a spanning forest of g[s].
std::size_t sf_size(const Graph &g, const VertexSet &s);

// Edges of a BFS spanning forest of g[s].
std::vector<Edge> spanning_forest(const Graph &g, const VertexSet &s);

} // namespace biclique
