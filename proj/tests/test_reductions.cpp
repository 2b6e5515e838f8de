#include <doctest.h>

#include "biclique/errors.hpp"
#include "biclique/fpt.hpp"
#include "biclique/oracle.hpp"
#include "biclique/reductions.hpp"
#include "support.hpp"

using namespace biclique;
using namespace biclique::testing;

namespace {

bool bipartite(const Graph &g) {
	std::vector<int> side(g.capacity(), -1);
	for (Vertex s : g.vertices()) {
		if (side[s] != -1)
			continue;
		side[s] = 0;
		std::vector<Vertex> stack{s};
		while (!stack.empty()) {
			Vertex v = stack.back();
			stack.pop_back();
			for (Vertex w : g.neighbors(v)) {
				if (side[w] == -1) {
					side[w] = 1 - side[v];
					stack.push_back(w);
				} else if (side[w] == side[v]) {
					return false;
				}
			}
		}
	}
	return true;
}

long count(const Generated &g, const std::string &name) {
	for (const auto &[key, value] : g.counts)
		if (key == name)
			return value;
	return -1;
}

} // namespace

TEST_CASE("rbds worked example") {
	RbdsInstance inst{2, 1, {{0, 0}, {1, 0}}, 1};
	Generated g = gen_bc_from_rbds(inst);
	CHECK(g.graph.order() == 8);
	CHECK(g.parameter == 2);
	CHECK(is_connected(g.graph));
	CHECK(bipartite(g.graph));
	CHECK(g.normalization.empty());
	CHECK(solve_rbds_brute(inst));
	CHECK(oracle_bc(g.graph, g.parameter).answer);
}

TEST_CASE("rbds no-instance") {
	RbdsInstance inst{4, 2, {{0, 0}, {1, 0}, {2, 1}, {3, 1}}, 1};
	CHECK_FALSE(solve_rbds_brute(inst));
	Generated g = gen_bc_from_rbds(inst);
	CHECK(g.graph.order() == 4 + 3 * 2 + 1 + 2);
	CHECK_FALSE(oracle_bc(g.graph, g.parameter).answer);
	CHECK(fpt_bc(g.graph, g.parameter).outcome == Outcome::no);
}

TEST_CASE("rbds normalization") {
	std::vector<std::string> notes;
	RbdsInstance single{1, 2, {{0, 0}, {0, 1}, {0, 1}}, 1};
	RbdsInstance norm = normalize(single, &notes);
	CHECK(norm.red == 3);
	CHECK(norm.edges.size() == 4);
	CHECK(notes.size() == 3);
	CHECK(solve_rbds_brute(single) == solve_rbds_brute(norm));
	CHECK_THROWS_AS(normalize(RbdsInstance{2, 1, {}, 1}), generator_error);
	CHECK_THROWS_AS(normalize(RbdsInstance{2, 0, {}, 1}), generator_error);
	CHECK_THROWS_AS(normalize(RbdsInstance{2, 1, {{0, 0}, {1, 0}}, -1}), generator_error);
	CHECK_THROWS_AS(normalize(RbdsInstance{2, 1, {{2, 0}}, 1}), generator_error);
}

TEST_CASE("rbds brute force") {
	CHECK(solve_rbds_brute(RbdsInstance{1, 3, {{0, 0}, {0, 1}, {0, 2}}, 1}));
	CHECK_FALSE(solve_rbds_brute(RbdsInstance{2, 2, {{0, 0}, {1, 1}}, 1}));
	CHECK(solve_rbds_brute(RbdsInstance{2, 2, {{0, 0}, {1, 1}}, 2}));
	CHECK_THROWS_AS(solve_rbds_brute(RbdsInstance{21, 1, {}, 1}), size_limit_exceeded);
}

TEST_CASE("h2c worked example") {
	Hypergraph hg{2, {{0, 1}, {0, 1}}};
	CHECK(h2c_intermediate(hg).order() == 32);
	Generated g = gen_bbc_from_h2c(hg);
	CHECK(count(g, "intermediate_budget") == 4);
	CHECK(count(g, "subdivision_vertices") == 4);
	CHECK(g.parameter == 8);
	CHECK(g.graph.order() == 36);
	CHECK(bipartite(g.graph));
	CHECK_FALSE(bipartite(h2c_intermediate(hg)));
}

TEST_CASE("h2c normalization") {
	std::vector<std::string> notes;
	Hypergraph hg = normalize(Hypergraph{3, {{1, 0, 1}}}, &notes);
	REQUIRE(hg.edges.size() == 2);
	CHECK(hg.edges[0] == std::vector<Vertex>{0, 1});
	CHECK(hg.edges[1] == std::vector<Vertex>{0, 1, 2});
	CHECK(notes.size() == 1);
	CHECK_THROWS_AS(normalize(Hypergraph{3, {{0}}}), generator_error);
	CHECK_THROWS_AS(normalize(Hypergraph{3, {{}}}), generator_error);
	CHECK_THROWS_AS(normalize(Hypergraph{1, {}}), generator_error);
	CHECK_THROWS_AS(normalize(Hypergraph{2, {{0, 2}}}), generator_error);
}

TEST_CASE("h2c brute force") {
	CHECK(solve_h2c_brute(Hypergraph{2, {{0, 1}}}));
	CHECK(solve_h2c_brute(Hypergraph{4, {{0, 1, 2, 3}}}));
	CHECK_FALSE(solve_h2c_brute(Hypergraph{3, {{0, 1}, {1, 2}, {0, 2}, {0, 1, 2}}}));
	CHECK(solve_h2c_brute(Hypergraph{3, {{0, 1}, {1, 2}, {0, 1, 2}}}));
}

TEST_CASE("h2c smallest instances agree with the source answer") {
	for (const Hypergraph &hg : {Hypergraph{2, {{0, 1}}}, Hypergraph{3, {{0, 1, 2}}}}) {
		Generated g = gen_bbc_from_h2c(hg);
		CHECK(bipartite(g.graph));
		CHECK((fpt_bbc(g.graph, g.parameter).outcome == Outcome::yes) == solve_h2c_brute(normalize(hg)));
	}
}

TEST_CASE("independent set reduction") {
	Generated k4 = gen_bc_from_is(cycle(3), 1);
	CHECK(k4.graph.order() == 4);
	CHECK(k4.graph.size() == 6);
	CHECK(k4.parameter == 2);

	auto reachable = [](const Generated &g) {
		auto best = oracle_min_k(g.graph, false);
		return best && static_cast<long>(*best) <= static_cast<long>(g.graph.order()) - g.parameter;
	};
	CHECK(reachable(k4));
	CHECK(reachable(gen_bc_from_is(cycle(5), 2)));
	CHECK(solve_is_brute(cycle(5), 2));
	Graph complete(4);
	for (Vertex u = 0; u < 4; ++u)
		for (Vertex v = u + 1; v < 4; ++v)
			complete.add_edge(u, v);
	CHECK_FALSE(solve_is_brute(complete, 2));
	CHECK_FALSE(reachable(gen_bc_from_is(complete, 2)));
	CHECK_THROWS_AS(solve_is_brute(path(21), 2), size_limit_exceeded);
}
