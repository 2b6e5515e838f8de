#include "biclique/graph.hpp"

#include <string>

#include "biclique/errors.hpp"

namespace biclique {

Graph::Graph(std::size_t n) : vertices_(VertexSet::full(n)), adj_(n, VertexSet(n)) {}

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
	Graph g(n);
	for (const Edge &e : edges)
		g.add_edge(e.u, e.v);
	return g;
}

void Graph::add_edge(Vertex u, Vertex v) {
	if (u == v)
		throw invalid_edge("self-loop at vertex " + std::to_string(u));
	if (!has_vertex(u) || !has_vertex(v))
		throw invalid_edge("edge endpoint is not a vertex: " + std::to_string(u) + "-" + std::to_string(v));
	if (adj_[u].contains(v))
		return;
	adj_[u].insert(v);
	adj_[v].insert(u);
	++edge_count_;
}

void Graph::remove_edge(Vertex u, Vertex v) {
	if (!has_edge(u, v))
		return;
	adj_[u].erase(v);
	adj_[v].erase(u);
	--edge_count_;
}

void Graph::remove_vertex(Vertex v) {
	if (!has_vertex(v))
		return;
	for (Vertex w : adj_[v])
		adj_[w].erase(v);
	edge_count_ -= adj_[v].size();
	adj_[v].clear();
	vertices_.erase(v);
}

Vertex Graph::merge(Vertex u, Vertex v) {
	if (!has_edge(u, v))
		throw invalid_edge("cannot contract non-edge " + std::to_string(u) + "-" + std::to_string(v));
	Vertex keep = u < v ? u : v;
	Vertex gone = u < v ? v : u;
	VertexSet moved = adj_[gone];
	remove_vertex(gone);
	moved.erase(keep);
	for (Vertex w : moved)
		add_edge(keep, w);
	return keep;
}

std::vector<Edge> Graph::edges() const {
	std::vector<Edge> out;
	out.reserve(edge_count_);
	for (Vertex u : vertices_)
		for (Vertex v : adj_[u])
			if (u < v)
				out.emplace_back(u, v);
	return out;
}

bool check_invariants(const Graph &g) {
	std::size_t degree_sum = 0;
	for (Vertex v = 0; v < g.capacity(); ++v) {
		const VertexSet &nb = g.neighbors(v);
		if (!g.has_vertex(v)) {
			if (!nb.empty())
				return false;
			continue;
		}
		if (nb.contains(v) || !nb.is_subset_of(g.vertices()))
			return false;
		for (Vertex w : nb)
			if (!g.neighbors(w).contains(v))
				return false;
		degree_sum += nb.size();
	}
	return degree_sum == 2 * g.size();
}

Graph complement(const Graph &g) {
	Graph c(g.capacity());
	for (Vertex v = 0; v < g.capacity(); ++v)
		if (!g.has_vertex(v))
			c.remove_vertex(v);
	for (Vertex u : g.vertices())
		for (Vertex v : g.vertices())
			if (u < v && !g.has_edge(u, v))
				c.add_edge(u, v);
	return c;
}

Graph induced(const Graph &g, const VertexSet &s) {
	Graph h = g;
	for (Vertex v : g.vertices() - s)
		h.remove_vertex(v);
	return h;
}

namespace {

// Vertices of g[s] reachable from root.
VertexSet reach(const Graph &g, const VertexSet &s, Vertex root) {
	VertexSet seen(g.capacity());
	seen.insert(root);
	VertexSet frontier = seen;
	while (!frontier.empty()) {
		VertexSet next(g.capacity());
		for (Vertex v : frontier)
			next |= g.neighbors(v);
		next &= s;
		next -= seen;
		seen |= next;
		frontier = std::move(next);
	}
	return seen;
}

} // namespace

std::vector<VertexSet> components(const Graph &g, const VertexSet &s) {
	std::vector<VertexSet> out;
	VertexSet rest = s & g.vertices();
	while (!rest.empty()) {
		VertexSet comp = reach(g, rest, rest.first());
		rest -= comp;
		out.push_back(std::move(comp));
	}
	return out;
}

std::size_t component_count(const Graph &g, const VertexSet &s) {
	std::size_t n = 0;
	VertexSet rest = s & g.vertices();
	while (!rest.empty()) {
		rest -= reach(g, rest, rest.first());
		++n;
	}
	return n;
}

bool is_connected(const Graph &g) {
	return component_count(g, g.vertices()) <= 1;
}

std::size_t sf_size(const Graph &g, const VertexSet &s) {
	return (s & g.vertices()).size() - component_count(g, s);
}

std::vector<Edge> spanning_forest(const Graph &g, const VertexSet &s) {
	std::vector<Edge> out;
	VertexSet rest = s & g.vertices();
	std::vector<Vertex> queue;
	while (!rest.empty()) {
		Vertex root = rest.first();
		rest.erase(root);
		queue.assign(1, root);
		for (std::size_t i = 0; i < queue.size(); ++i) {
			Vertex v = queue[i];
			for (Vertex w : g.neighbors(v) & rest) {
				rest.erase(w);
				out.emplace_back(v, w);
				queue.push_back(w);
			}
		}
	}
	return out;
}

} // namespace biclique
