#include <algorithm>
#include <vector>

#include "biclique/fpt.hpp"

namespace biclique {

namespace {

// Deletes vertices from `alive` until the complement of g[alive] is a union of
// at most two cliques, spending at most `budget` deletions.
std::optional<VertexSet> shrink(const Graph &g, const VertexSet &alive, std::size_t budget) {
	// An induced K1+K2 of g is an induced P3 of the complement; one of its
	// three vertices has to go.
	if (auto t = find_edge_plus_vertex(g, alive)) {
		if (budget == 0)
			return std::nullopt;
		for (Vertex v : t->vertices) {
			VertexSet rest = alive;
			rest.erase(v);
			if (auto r = shrink(g, rest, budget - 1))
				return r;
		}
		return std::nullopt;
	}
	// g[alive] is complete multipartite: each part is a clique of the
	// complement. Keep the two largest parts.
	std::vector<VertexSet> parts;
	VertexSet rest = alive;
	while (!rest.empty()) {
		Vertex v = rest.first();
		VertexSet part = rest - g.neighbors(v);
		rest -= part;
		parts.push_back(std::move(part));
	}
	std::stable_sort(parts.begin(), parts.end(),
					 [](const VertexSet &a, const VertexSet &b) { return a.size() > b.size(); });
	VertexSet keep(g.capacity());
	for (std::size_t i = 0; i < parts.size() && i < 2; ++i)
		keep |= parts[i];
	if (alive.size() - keep.size() > budget)
		return std::nullopt;
	return keep;
}

} // namespace

std::optional<Modulator> find_biclique_modulator(const Graph &g, std::size_t bound) {
	std::size_t ceiling = std::min(bound, g.order());
	for (std::size_t b = 0; b <= ceiling; ++b) {
		auto keep = shrink(g, g.vertices(), b);
		if (!keep)
			continue;
		auto parts = is_biclique(induced(g, *keep));
		Modulator m{g.vertices() - *keep, std::move(parts->left), std::move(parts->right)};
		if (m.x.size() > m.y.size())
			std::swap(m.x, m.y);
		return m;
	}
	return std::nullopt;
}

} // namespace biclique
