#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "biclique/biclique.hpp"
#include "biclique/graph.hpp"

namespace biclique {

struct ContractionSolution {
	std::vector<Edge> edges;
	bool target_balanced = false;
};

enum class FailedCondition { none, budget, adjacency, balance };

struct PartitionVerdict {
	bool valid = false;
	std::size_t sf_total = 0;
	FailedCondition failed_condition = FailedCondition::none;
	// One component of each side with no edge between them.
	std::optional<std::pair<VertexSet, VertexSet>> witness_components;
};

// Throws malformed_partition unless p.left and p.right partition V(g).
void require_partition(const Graph &g, const Bipartition &p);

// sf(L) + sf(R) <= k and every component of g[L] is adjacent to every
// component of g[R].
PartitionVerdict check_valid_partition(const Graph &g, const Bipartition &p, long k);

// As above, plus equal component counts on both sides.
PartitionVerdict check_valid_balanced_partition(const Graph &g, const Bipartition &p, long k);

// Spanning-forest edges of g[L] and g[R].
ContractionSolution solution_from_partition(const Graph &g, const Bipartition &p);

// Preimage of the parts of g/f when g/f is a biclique.
std::optional<Bipartition> partition_from_solution(const Graph &g, std::span<const Edge> f);

// |f| <= k and g/f is a (balanced, if requested) biclique.
bool verify_solution(const Graph &g, const ContractionSolution &s, long k);

} // namespace biclique
