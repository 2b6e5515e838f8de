#include "biclique/biclique.hpp"

namespace biclique {

std::optional<Bipartition> is_biclique(const Graph &g) {
	const VertexSet &all = g.vertices();
	if (all.empty())
		return Bipartition{all, all};
	// In a complete bipartite graph the far side of any vertex is its neighbourhood.
	VertexSet right = g.neighbors(all.first());
	VertexSet left = all - right;
	for (Vertex v : left)
		if (!(g.neighbors(v) == right))
			return std::nullopt;
	for (Vertex v : right)
		if (!(g.neighbors(v) == left))
			return std::nullopt;
	return Bipartition{std::move(left), std::move(right)};
}

bool is_balanced_biclique(const Graph &g) {
	auto parts = is_biclique(g);
	if (!parts)
		return false;
	if (g.size() == 0)
		return g.order() == 0;
	return parts->left.size() == parts->right.size();
}

std::optional<ForbiddenTriple> find_edge_plus_vertex(const Graph &g, const VertexSet &within) {
	VertexSet live = within & g.vertices();
	for (Vertex u : live) {
		for (Vertex v : g.neighbors(u) & live) {
			if (v < u)
				continue;
			VertexSet rest = live - g.neighbors(u) - g.neighbors(v);
			rest.erase(u);
			rest.erase(v);
			if (!rest.empty())
				return ForbiddenTriple{ForbiddenKind::edge_plus_vertex, {u, v, rest.first()}};
		}
	}
	return std::nullopt;
}

std::optional<ForbiddenTriple> find_forbidden(const Graph &g, const VertexSet &within) {
	VertexSet live = within & g.vertices();
	for (Vertex u : live) {
		for (Vertex v : g.neighbors(u) & live) {
			if (v < u)
				continue;
			VertexSet common = g.neighbors(u) & g.neighbors(v) & live;
			if (!common.empty())
				return ForbiddenTriple{ForbiddenKind::triangle, {u, v, common.first()}};
			VertexSet rest = live - g.neighbors(u) - g.neighbors(v);
			rest.erase(u);
			rest.erase(v);
			if (!rest.empty())
				return ForbiddenTriple{ForbiddenKind::edge_plus_vertex, {u, v, rest.first()}};
		}
	}
	return std::nullopt;
}

std::optional<ForbiddenTriple> find_forbidden(const Graph &g) {
	return find_forbidden(g, g.vertices());
}

} // namespace biclique
