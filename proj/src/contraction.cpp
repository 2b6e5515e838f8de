#include "biclique/contraction.hpp"

#include <numeric>
#include <string>

#include "biclique/errors.hpp"

namespace biclique {

ContractionTrace::ContractionTrace(std::size_t capacity) : parent_(capacity) {
	std::iota(parent_.begin(), parent_.end(), Vertex{0});
}

void ContractionTrace::record(Vertex survivor, Vertex absorbed) {
	parent_[absorbed] = survivor;
	steps_.push_back({survivor, absorbed});
}

Vertex ContractionTrace::representative(Vertex v) const {
	while (parent_[v] != v)
		v = parent_[v];
	return v;
}

void ContractionTrace::compress() {
	for (Vertex v = 0; v < parent_.size(); ++v)
		parent_[v] = representative(v);
}

VertexSet ContractionTrace::preimage(const VertexSet &current) const {
	VertexSet out(parent_.size());
	for (Vertex v = 0; v < parent_.size(); ++v)
		if (current.contains(representative(v)))
			out.insert(v);
	return out;
}

Graph ContractionTrace::replay(const Graph &original) const {
	Graph g = original;
	for (const Step &s : steps_)
		g.merge(s.survivor, s.absorbed);
	return g;
}

Graph contract_edge(const Graph &g, Edge e) {
	if (!g.has_edge(e.u, e.v))
		throw invalid_edge("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " is not in the graph");
	Graph out = g;
	out.merge(e.u, e.v);
	return out;
}

ContractionResult contract_edges(const Graph &g, std::span<const Edge> f) {
	ContractionResult res{g, ContractionTrace(g.capacity()), {}};
	for (const Edge &e : f) {
		if (!g.has_edge(e.u, e.v))
			throw invalid_edge("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " is not in the graph");
		Vertex a = res.trace.representative(e.u);
		Vertex b = res.trace.representative(e.v);
		if (a == b) {
			res.skipped.push_back(e);
			continue;
		}
		Vertex keep = res.graph.merge(a, b);
		res.trace.record(keep, keep == a ? b : a);
	}
	return res;
}

} // namespace biclique
