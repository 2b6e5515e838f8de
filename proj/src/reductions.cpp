#include "biclique/reductions.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <set>

#include "biclique/errors.hpp"

namespace biclique {

namespace {

void say(std::vector<std::string> *notes, std::string line) {
	if (notes)
		notes->push_back(std::move(line));
}

constexpr std::size_t brute_limit = 20;

} // namespace

RbdsInstance normalize(const RbdsInstance &inst, std::vector<std::string> *notes) {
	if (inst.kappa < 0)
		throw generator_error("negative kappa");
	if (inst.blue == 0)
		throw generator_error("RBDS instance has no blue vertices");
	std::set<std::pair<Vertex, Vertex>> edges;
	for (auto [r, b] : inst.edges) {
		if (r >= inst.red || b >= inst.blue)
			throw generator_error("RBDS edge out of range");
		edges.emplace(r, b);
	}
	if (edges.size() != inst.edges.size())
		say(notes, "dropped " + std::to_string(inst.edges.size() - edges.size()) + " duplicate edges");
	std::vector<std::size_t> degree(inst.blue, 0);
	for (auto [r, b] : edges)
		++degree[b];
	RbdsInstance out{inst.red, inst.blue, {}, inst.kappa};
	out.edges.assign(edges.begin(), edges.end());
	for (Vertex b = 0; b < inst.blue; ++b) {
		if (degree[b] == 0)
			throw generator_error("blue vertex " + std::to_string(b + 1) + " has no red neighbour");
		if (degree[b] == 1) {
			Vertex twin = static_cast<Vertex>(out.red++);
			out.edges.emplace_back(twin, b);
			say(notes, "added red " + std::to_string(twin + 1) + " as a private twin neighbour of blue " +
						   std::to_string(b + 1));
		}
	}
	return out;
}

Hypergraph normalize(const Hypergraph &hg, std::vector<std::string> *notes) {
	if (hg.n < 2)
		throw generator_error("hypergraph needs at least two vertices");
	Hypergraph out{hg.n, {}};
	bool has_full = false;
	for (const auto &e : hg.edges) {
		std::vector<Vertex> s = e;
		std::sort(s.begin(), s.end());
		s.erase(std::unique(s.begin(), s.end()), s.end());
		if (s.size() < 2)
			throw generator_error("hyperedge with fewer than two vertices");
		if (s.back() >= hg.n)
			throw generator_error("hyperedge vertex out of range");
		has_full = has_full || s.size() == hg.n;
		out.edges.push_back(std::move(s));
	}
	if (!has_full) {
		std::vector<Vertex> all(hg.n);
		for (Vertex v = 0; v < hg.n; ++v)
			all[v] = v;
		out.edges.push_back(std::move(all));
		say(notes, "appended the full hyperedge");
	}
	return out;
}

Generated gen_bc_from_rbds(const RbdsInstance &raw) {
	Generated out;
	RbdsInstance inst = normalize(raw, &out.normalization);
	const std::size_t r = inst.red, b = inst.blue;
	const std::size_t c = static_cast<std::size_t>(inst.kappa) + b + 1;
	const Vertex blue0 = static_cast<Vertex>(r), pendant0 = static_cast<Vertex>(r + b);
	const Vertex apex = static_cast<Vertex>(r + 2 * b), c0 = apex + 1;
	Graph g(r + 2 * b + 1 + c);
	for (auto [red, blue] : inst.edges)
		g.add_edge(red, blue0 + blue);
	for (Vertex i = 0; i < b; ++i)
		g.add_edge(blue0 + i, pendant0 + i);
	for (Vertex i = 0; i < r; ++i)
		g.add_edge(apex, i);
	for (Vertex i = 0; i < c; ++i)
		g.add_edge(apex, c0 + i);
	out.graph = std::move(g);
	out.parameter = inst.kappa + static_cast<long>(b);
	out.counts = {{"red", static_cast<long>(r)},
				  {"blue", static_cast<long>(b)},
				  {"pendants", static_cast<long>(b)},
				  {"apex", 1},
				  {"clique_guard", static_cast<long>(c)},
				  {"kappa", inst.kappa}};
	return out;
}

Graph h2c_intermediate(const Hypergraph &raw) {
	Hypergraph hg = normalize(raw);
	const std::size_t n = hg.n, m = hg.edges.size(), big = 6 * m + 3 * n - 5;
	const Vertex sl = static_cast<Vertex>(n), sr = static_cast<Vertex>(n + m);
	const Vertex l0 = static_cast<Vertex>(n + 2 * m), r0 = static_cast<Vertex>(n + 2 * m + big);
	Graph h(n + 2 * m + 2 * big);
	for (Vertex j = 0; j < m; ++j)
		for (Vertex v : hg.edges[j]) {
			h.add_edge(v, sl + j);
			h.add_edge(v, sr + j);
		}
	for (Vertex i = 0; i < big; ++i) {
		for (Vertex t = 0; t < big; ++t)
			h.add_edge(l0 + i, r0 + t);
		for (Vertex j = 0; j < m; ++j) {
			h.add_edge(l0 + i, sr + j);
			h.add_edge(r0 + i, sl + j);
		}
	}
	return h;
}

Generated gen_bbc_from_h2c(const Hypergraph &raw) {
	Generated out;
	Hypergraph hg = normalize(raw, &out.normalization);
	Graph h = h2c_intermediate(hg);
	const std::size_t n = hg.n, m = hg.edges.size();
	std::size_t subdivisions = 0;
	for (const auto &e : hg.edges)
		subdivisions += e.size();
	Graph g(h.capacity() + subdivisions);
	for (const Edge &e : h.edges())
		if (!(e.u < n && e.v >= n && e.v < n + m))
			g.add_edge(e.u, e.v);
	Vertex next = static_cast<Vertex>(h.capacity());
	for (Vertex j = 0; j < m; ++j)
		for (Vertex v : hg.edges[j]) {
			g.add_edge(v, next);
			g.add_edge(next, static_cast<Vertex>(n + j));
			++next;
		}
	long k = 2 * static_cast<long>(m) + static_cast<long>(n) - 2;
	out.graph = std::move(g);
	out.parameter = k + static_cast<long>(subdivisions);
	out.counts = {{"hypergraph_vertices", static_cast<long>(n)},
				  {"hyperedges", static_cast<long>(m)},
				  {"intermediate_vertices", static_cast<long>(h.order())},
				  {"intermediate_budget", k},
				  {"subdivision_vertices", static_cast<long>(subdivisions)},
				  {"side_size", static_cast<long>(6 * m + 3 * n - 5)}};
	return out;
}

Generated gen_bc_from_is(const Graph &h, long k_is) {
	Generated out;
	Vertex apex = static_cast<Vertex>(h.capacity());
	Graph g(h.capacity() + 1);
	for (Vertex v = 0; v < h.capacity(); ++v)
		if (!h.has_vertex(v))
			g.remove_vertex(v);
	for (const Edge &e : h.edges())
		g.add_edge(e.u, e.v);
	for (Vertex v : h.vertices())
		g.add_edge(apex, v);
	out.graph = std::move(g);
	out.parameter = k_is + 1;
	out.counts = {{"source_vertices", static_cast<long>(h.order())}, {"independent_set_size", k_is}};
	return out;
}

bool solve_rbds_brute(const RbdsInstance &raw) {
	if (raw.red > brute_limit)
		throw size_limit_exceeded("RBDS brute force limited to 20 red vertices");
	if (raw.kappa < 0)
		return false;
	std::vector<std::uint64_t> dominated(raw.red, 0);
	for (auto [r, b] : raw.edges) {
		if (r >= raw.red || b >= raw.blue)
			throw generator_error("RBDS edge out of range");
		dominated[r] |= std::uint64_t{1} << b;
	}
	if (raw.blue > 64)
		throw size_limit_exceeded("RBDS brute force limited to 64 blue vertices");
	const std::uint64_t all = raw.blue == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << raw.blue) - 1;
	for (std::uint32_t s = 0; s < (std::uint32_t{1} << raw.red); ++s) {
		if (std::popcount(s) > raw.kappa)
			continue;
		std::uint64_t cover = 0;
		for (std::size_t r = 0; r < raw.red; ++r)
			if ((s >> r) & 1)
				cover |= dominated[r];
		if (cover == all)
			return true;
	}
	return false;
}

bool solve_h2c_brute(const Hypergraph &hg) {
	if (hg.n > brute_limit)
		throw size_limit_exceeded("hypergraph 2-colouring brute force limited to 20 vertices");
	std::vector<std::uint32_t> masks;
	for (const auto &e : hg.edges) {
		std::uint32_t m = 0;
		for (Vertex v : e) {
			if (v >= hg.n)
				throw generator_error("hyperedge vertex out of range");
			m |= std::uint32_t{1} << v;
		}
		masks.push_back(m);
	}
	// Vertex 0 takes colour 1 by symmetry.
	for (std::uint32_t colour = 0; colour < (std::uint32_t{1} << hg.n); colour += 2) {
		bool ok = std::all_of(masks.begin(), masks.end(),
							  [&](std::uint32_t m) { return (m & colour) != 0 && (m & ~colour) != 0; });
		if (ok)
			return true;
	}
	return false;
}

bool solve_is_brute(const Graph &h, long k) {
	if (h.order() > brute_limit)
		throw size_limit_exceeded("independent set brute force limited to 20 vertices");
	if (k <= 0)
		return true;
	std::vector<Vertex> vs = h.vertices().to_vector();
	std::vector<std::uint32_t> adj(vs.size(), 0);
	for (std::size_t i = 0; i < vs.size(); ++i)
		for (std::size_t j = 0; j < vs.size(); ++j)
			if (h.has_edge(vs[i], vs[j]))
				adj[i] |= std::uint32_t{1} << j;
	for (std::uint32_t s = 0; s < (std::uint32_t{1} << vs.size()); ++s) {
		if (std::popcount(s) < k)
			continue;
		bool independent = true;
		for (std::size_t i = 0; i < vs.size() && independent; ++i)
			if ((s >> i) & 1)
				independent = (adj[i] & s) == 0;
		if (independent)
			return true;
	}
	return false;
}

} // namespace biclique
