#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "biclique/graph.hpp"

namespace biclique::testing {

// Pairs (i, j), i < j, in the order used by graph_from_mask.
inline std::vector<Edge> all_pairs(std::size_t n) {
	std::vector<Edge> out;
	for (Vertex i = 0; i < n; ++i)
		for (Vertex j = i + 1; j < n; ++j)
			out.emplace_back(i, j);
	return out;
}

inline Graph graph_from_mask(std::size_t n, std::uint64_t mask) {
	Graph g(n);
	auto pairs = all_pairs(n);
	for (std::size_t i = 0; i < pairs.size(); ++i)
		if ((mask >> i) & 1)
			g.add_edge(pairs[i].u, pairs[i].v);
	return g;
}

inline Graph random_graph(std::size_t n, double p, std::mt19937_64 &rng) {
	std::bernoulli_distribution coin(p);
	Graph g(n);
	for (Vertex i = 0; i < n; ++i)
		for (Vertex j = i + 1; j < n; ++j)
			if (coin(rng))
				g.add_edge(i, j);
	return g;
}

// Connected G(n, p) sample; retries until connected.
inline Graph random_connected_graph(std::size_t n, double p, std::mt19937_64 &rng) {
	for (;;) {
		Graph g = random_graph(n, p, rng);
		if (is_connected(g))
			return g;
	}
}

inline Graph complete_bipartite(std::size_t a, std::size_t b) {
	Graph g(a + b);
	for (Vertex i = 0; i < a; ++i)
		for (Vertex j = 0; j < b; ++j)
			g.add_edge(i, static_cast<Vertex>(a + j));
	return g;
}

inline Graph path(std::size_t n) {
	Graph g(n);
	for (Vertex i = 0; i + 1 < n; ++i)
		g.add_edge(i, i + 1);
	return g;
}

inline Graph cycle(std::size_t n) {
	Graph g = path(n);
	if (n >= 3)
		g.add_edge(0, static_cast<Vertex>(n - 1));
	return g;
}

} // namespace biclique::testing
