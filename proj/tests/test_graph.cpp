#include <doctest.h>

#include <algorithm>

#include "biclique/biclique.hpp"
#include "biclique/contraction.hpp"
#include "biclique/errors.hpp"
#include "support.hpp"

using namespace biclique;
using namespace biclique::testing;

namespace {

VertexSet set_of(std::size_t cap, std::initializer_list<Vertex> vs) {
	VertexSet s(cap);
	for (Vertex v : vs)
		s.insert(v);
	return s;
}

std::vector<std::size_t> degrees(const Graph &g) {
	std::vector<std::size_t> d;
	for (Vertex v : g.vertices())
		d.push_back(g.degree(v));
	std::sort(d.begin(), d.end());
	return d;
}

} // namespace

TEST_CASE("vertex set basics") {
	VertexSet s(130);
	s.insert(3);
	s.insert(129);
	s.insert(64);
	CHECK(s.size() == 3);
	CHECK(s.first() == 3);
	CHECK(s.to_vector() == std::vector<Vertex>{3, 64, 129});
	VertexSet t = s;
	t.erase(3);
	CHECK(t.is_subset_of(s));
	CHECK_FALSE(s.is_subset_of(t));
	CHECK((s - t).to_vector() == std::vector<Vertex>{3});
	CHECK((s & t).size() == 2);
	CHECK(VertexSet(5).first() == 5);
}

TEST_CASE("graph invariants and mutation") {
	Graph g = cycle(5);
	CHECK(check_invariants(g));
	CHECK(g.size() == 5);
	CHECK_THROWS_AS(g.add_edge(1, 1), invalid_edge);
	CHECK_THROWS_AS(g.add_edge(1, 9), invalid_edge);
	g.add_edge(0, 1);
	CHECK(g.size() == 5);
	g.remove_vertex(2);
	CHECK(g.order() == 4);
	CHECK(g.size() == 3);
	CHECK(check_invariants(g));
	CHECK_THROWS_AS(g.merge(0, 3), invalid_edge);
}

TEST_CASE("contract_edge examples") {
	Graph k3 = cycle(3);
	Graph k2 = contract_edge(k3, {0, 1});
	CHECK(k2.order() == 2);
	CHECK(k2.size() == 1);

	Graph k3b = contract_edge(cycle(4), {1, 2});
	CHECK(k3b.order() == 3);
	CHECK(k3b.size() == 3);

	Graph c4 = contract_edge(cycle(5), {4, 0});
	CHECK(c4.order() == 4);
	CHECK(c4.size() == 4);
	CHECK(is_connected(c4));
	CHECK(degrees(c4) == std::vector<std::size_t>{2, 2, 2, 2});

	CHECK_THROWS_AS(contract_edge(path(4), {0, 2}), invalid_edge);

	Graph g = complete_bipartite(2, 3);
	for (const Edge &e : g.edges()) {
		Graph h = contract_edge(g, e);
		CHECK(h.order() == g.order() - 1);
		CHECK(check_invariants(h));
	}
}

TEST_CASE("contract_edges examples") {
	std::vector<Edge> f{{0, 1}, {2, 3}};
	auto r = contract_edges(path(4), f);
	CHECK(r.graph.order() == 2);
	CHECK(r.graph.size() == 1);
	CHECK(r.skipped.empty());

	Graph tree = path(6);
	tree.add_edge(1, 5);
	tree.remove_edge(4, 5);
	auto all = tree.edges();
	CHECK(contract_edges(tree, all).graph.order() == 1);

	std::vector<Edge> disjoint{{0, 1}, {2, 3}};
	auto k3 = contract_edges(cycle(5), disjoint).graph;
	CHECK(k3.order() == 3);
	CHECK(k3.size() == 3);

	std::vector<Edge> triangle{{0, 1}, {1, 2}, {0, 2}};
	auto skipped = contract_edges(cycle(3), triangle);
	CHECK(skipped.graph.order() == 1);
	CHECK(skipped.skipped.size() == 1);
}

TEST_CASE("contract_edges is order independent") {
	std::mt19937_64 rng(11);
	for (int it = 0; it < 200; ++it) {
		Graph g = random_connected_graph(7, 0.5, rng);
		auto edges = g.edges();
		std::shuffle(edges.begin(), edges.end(), rng);
		std::vector<Edge> f(edges.begin(), edges.begin() + 3);
		auto a = contract_edges(g, f);
		std::reverse(f.begin(), f.end());
		auto b = contract_edges(g, f);
		if (a.skipped.empty() && b.skipped.empty())
			CHECK(a.graph == b.graph);
		CHECK(a.trace.replay(g) == a.graph);
		for (Vertex v = 0; v < 7; ++v) {
			Vertex rep = a.trace.representative(v);
			CHECK(a.trace.representative(rep) == rep);
			CHECK(a.graph.has_vertex(rep));
		}
	}
}

TEST_CASE("biclique recognition") {
	auto k23 = is_biclique(complete_bipartite(2, 3));
	REQUIRE(k23);
	CHECK(k23->left.size() == 2);
	CHECK(k23->right.size() == 3);
	CHECK_FALSE(is_biclique(cycle(3)));
	Graph k1k2(3);
	k1k2.add_edge(0, 1);
	CHECK_FALSE(is_biclique(k1k2));
	auto edgeless = is_biclique(Graph(3));
	REQUIRE(edgeless);
	CHECK(edgeless->left.size() == 3);
	CHECK(edgeless->right.empty());
	CHECK(is_biclique(path(3)));
	CHECK_FALSE(is_biclique(path(4)));
}

TEST_CASE("balanced biclique recognition") {
	CHECK(is_balanced_biclique(complete_bipartite(2, 2)));
	CHECK_FALSE(is_balanced_biclique(complete_bipartite(1, 2)));
	CHECK_FALSE(is_balanced_biclique(Graph(1)));
	CHECK_FALSE(is_balanced_biclique(Graph(2)));
	CHECK(is_balanced_biclique(Graph(0)));
	CHECK(is_balanced_biclique(complete_bipartite(1, 1)));
}

TEST_CASE("find_forbidden examples") {
	CHECK_FALSE(find_forbidden(path(3)));
	auto t = find_forbidden(cycle(3));
	REQUIRE(t);
	CHECK(t->kind == ForbiddenKind::triangle);
	Graph k2k1(3);
	k2k1.add_edge(0, 1);
	auto u = find_forbidden(k2k1);
	REQUIRE(u);
	CHECK(u->kind == ForbiddenKind::edge_plus_vertex);
	CHECK(u->vertices == std::array<Vertex, 3>{0, 1, 2});
}

TEST_CASE("is_biclique agrees with the forbidden subgraph scan on all graphs up to 6 vertices") {
	std::size_t checked = 0;
	for (std::size_t n = 0; n <= 6; ++n)
		for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n * (n - 1) / 2)); ++mask) {
			Graph g = graph_from_mask(n, mask);
			auto parts = is_biclique(g);
			auto bad = find_forbidden(g);
			CHECK(parts.has_value() != bad.has_value());
			if (bad) {
				auto [a, b, c] = bad->vertices;
				bool ab = g.has_edge(a, b), ac = g.has_edge(a, c), bc = g.has_edge(b, c);
				if (bad->kind == ForbiddenKind::triangle)
					CHECK((ab && ac && bc));
				else
					CHECK((ab && !ac && !bc));
			}
			++checked;
		}
	CHECK(checked == 1 + 1 + 2 + 8 + 64 + 1024 + 32768);
}

TEST_CASE("components and spanning forests") {
	Graph c4 = cycle(4);
	auto opposite = components(c4, set_of(4, {0, 2}));
	CHECK(opposite.size() == 2);
	CHECK(components(c4, set_of(4, {0, 1})).size() == 1);
	CHECK(components(c4, VertexSet(4)).empty());
	CHECK(sf_size(path(4), path(4).vertices()) == 3);
	CHECK(sf_size(c4, set_of(4, {0, 2})) == 0);
	CHECK(sf_size(c4, c4.vertices()) == 3);
	CHECK(spanning_forest(c4, c4.vertices()).size() == 3);
	auto comps = components(Graph::from_edges(5, std::vector<Edge>{{3, 4}, {0, 2}}), VertexSet::full(5));
	REQUIRE(comps.size() == 3);
	CHECK(comps[0].first() == 0);
	CHECK(comps[1].first() == 1);
	CHECK(comps[2].first() == 3);
}

TEST_CASE("complement, induced and connectivity") {
	Graph k3c = complement(cycle(3));
	CHECK(k3c.order() == 3);
	CHECK(k3c.size() == 0);
	Graph p3 = induced(cycle(5), set_of(5, {1, 2, 3}));
	CHECK(p3.order() == 3);
	CHECK(p3.size() == 2);
	CHECK(p3.has_edge(1, 2));
	Graph k1k2(3);
	k1k2.add_edge(0, 1);
	CHECK_FALSE(is_connected(k1k2));
	CHECK(is_connected(cycle(5)));
}
