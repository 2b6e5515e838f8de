#include "biclique/certify.hpp"

#include "biclique/contraction.hpp"
#include "biclique/errors.hpp"

namespace biclique {

void require_partition(const Graph &g, const Bipartition &p) {
	if (p.left.capacity() != g.capacity() || p.right.capacity() != g.capacity())
		throw malformed_partition("partition universe does not match the graph");
	if (p.left.intersects(p.right))
		throw malformed_partition("partition sides overlap");
	if (!((p.left | p.right) == g.vertices()))
		throw malformed_partition("partition does not cover exactly the vertex set");
}

namespace {

VertexSet neighborhood_union(const Graph &g, const VertexSet &s) {
	VertexSet out(g.capacity());
	for (Vertex v : s)
		out |= g.neighbors(v);
	return out;
}

PartitionVerdict check(const Graph &g, const Bipartition &p, long k, bool balanced) {
	require_partition(g, p);
	std::vector<VertexSet> left = components(g, p.left);
	std::vector<VertexSet> right = components(g, p.right);

	PartitionVerdict verdict;
	verdict.sf_total = (p.left.size() - left.size()) + (p.right.size() - right.size());
	if (static_cast<long>(verdict.sf_total) > k) {
		verdict.failed_condition = FailedCondition::budget;
		return verdict;
	}
	for (const VertexSet &a : left) {
		VertexSet reach = neighborhood_union(g, a);
		for (const VertexSet &b : right) {
			if (!reach.intersects(b)) {
				verdict.failed_condition = FailedCondition::adjacency;
				verdict.witness_components = std::make_pair(a, b);
				return verdict;
			}
		}
	}
	if (balanced && left.size() != right.size()) {
		verdict.failed_condition = FailedCondition::balance;
		return verdict;
	}
	verdict.valid = true;
	return verdict;
}

} // namespace

PartitionVerdict check_valid_partition(const Graph &g, const Bipartition &p, long k) {
	return check(g, p, k, false);
}

PartitionVerdict check_valid_balanced_partition(const Graph &g, const Bipartition &p, long k) {
	return check(g, p, k, true);
}

ContractionSolution solution_from_partition(const Graph &g, const Bipartition &p) {
	ContractionSolution s;
	s.edges = spanning_forest(g, p.left);
	std::vector<Edge> right = spanning_forest(g, p.right);
	s.edges.insert(s.edges.end(), right.begin(), right.end());
	return s;
}

std::optional<Bipartition> partition_from_solution(const Graph &g, std::span<const Edge> f) {
	ContractionResult r = contract_edges(g, f);
	auto parts = is_biclique(r.graph);
	if (!parts)
		return std::nullopt;
	return Bipartition{r.trace.preimage(parts->left), r.trace.preimage(parts->right)};
}

bool verify_solution(const Graph &g, const ContractionSolution &s, long k) {
	if (static_cast<long>(s.edges.size()) > k)
		return false;
	for (const Edge &e : s.edges)
		if (!g.has_edge(e.u, e.v))
			return false;
	ContractionResult r = contract_edges(g, s.edges);
	return s.target_balanced ? is_balanced_biclique(r.graph) : is_biclique(r.graph).has_value();
}

} // namespace biclique
