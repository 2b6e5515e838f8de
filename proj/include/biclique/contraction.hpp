#pragma once

#include <span>
#include <utility>
#include <vector>

#include "biclique/graph.hpp"

namespace biclique {

// Record of contractions applied to an original graph. Each step stores
// (surviving id, absorbed id); representative() maps an original id to the
// id of the vertex that currently contains it.
class ContractionTrace {
public:
	struct Step {
		Vertex survivor;
		Vertex absorbed;
		friend bool operator==(const Step &, const Step &) = default;
	};

	ContractionTrace() = default;
	explicit ContractionTrace(std::size_t capacity);

	void record(Vertex survivor, Vertex absorbed);

	Vertex representative(Vertex v) const;
	void compress();

	const std::vector<Step> &steps() const { return steps_; }
	std::size_t capacity() const { return parent_.size(); }

	// Original vertices merged into any member of `current`.
	VertexSet preimage(const VertexSet &current) const;

	// Re-applies every step to `original`.
	Graph replay(const Graph &original) const;

private:
	std::vector<Vertex> parent_;
	std::vector<Step> steps_;
};

Graph contract_edge(const Graph &g, Edge e);

struct ContractionResult {
	Graph graph;
	ContractionTrace trace;
	// Edges whose endpoints already shared a representative when reached.
	std::vector<Edge> skipped;
};

// G/F. Edges are given in original ids and routed through representatives,
// so the result (ids included) does not depend on the order of `f`.
ContractionResult contract_edges(const Graph &g, std::span<const Edge> f);

} // namespace biclique
