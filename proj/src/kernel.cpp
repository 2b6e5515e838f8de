#include "biclique/kernel.hpp"

#include <optional>

#include "biclique/errors.hpp"

namespace biclique {

std::string to_string(KernelOutcome o) {
	switch (o) {
	case KernelOutcome::in_progress:
		return "in-progress";
	case KernelOutcome::reduced_instance:
		return "reduced-instance";
	case KernelOutcome::trivial_no:
		return "trivial-no";
	case KernelOutcome::trivial_yes:
		return "trivial-yes";
	}
	return "unknown";
}

Packing greedy_packing(const Graph &g) {
	Packing p{{}, VertexSet(g.capacity())};
	VertexSet rest = g.vertices();
	while (auto t = find_forbidden(g, rest)) {
		for (Vertex v : t->vertices) {
			rest.erase(v);
			p.z.insert(v);
		}
		p.triples.push_back(*t);
	}
	return p;
}

void refresh(KernelState &st) {
	const Graph &g = st.graph;
	st.packing = greedy_packing(g);
	auto parts = is_biclique(induced(g, g.vertices() - st.packing.z));
	st.x = std::move(parts->left);
	st.y = std::move(parts->right);
	if (st.x.size() > st.y.size())
		std::swap(st.x, st.y);
	std::size_t threshold = st.k < 0 ? 0 : static_cast<std::size_t>(st.k) + 1;
	st.z_x = st.z_y = VertexSet(g.capacity());
	for (Vertex z : st.packing.z) {
		if (g.neighbors(z).intersection_size(st.y) >= threshold)
			st.z_x.insert(z);
		if (g.neighbors(z).intersection_size(st.x) >= threshold)
			st.z_y.insert(z);
	}
	st.z_prime = st.packing.z - (st.z_x | st.z_y);
	st.marked = VertexSet(g.capacity());
}

KernelState make_kernel_state(Graph g, long k) {
	KernelState st;
	st.original_n = g.order();
	st.original_k = k;
	st.graph = std::move(g);
	st.k = k;
	refresh(st);
	return st;
}

namespace {

void note(KernelState &st, std::string rule, std::string detail) {
	st.log.push_back({std::move(rule), st.graph.order(), st.k, st.packing.z.size(), st.x.size(), st.y.size(),
					  std::move(detail)});
}

void settle(KernelState &st, bool answer) {
	Graph g(answer ? 2 : 3);
	g.add_edge(0, 1);
	if (!answer) {
		g.add_edge(0, 2);
		g.add_edge(1, 2);
	}
	st.graph = std::move(g);
	st.k = 0;
	st.outcome = answer ? KernelOutcome::trivial_yes : KernelOutcome::trivial_no;
	refresh(st);
}

} // namespace

KernelState rr1_trivial(KernelState st) {
	if (st.outcome != KernelOutcome::in_progress)
		return st;
	bool balanced = is_balanced_biclique(st.graph);
	if (st.k <= 0 && !balanced) {
		note(st, "rr1", "k <= 0 and not a balanced biclique");
		settle(st, false);
	} else if (static_cast<long>(st.packing.z.size()) > 6 * st.k) {
		note(st, "rr1", "|Z| > 6k");
		settle(st, false);
	} else if (balanced) {
		note(st, "rr1", "already a balanced biclique");
		settle(st, true);
	}
	return st;
}

KernelState rr2_size(KernelState st) {
	if (st.outcome != KernelOutcome::in_progress)
		return st;
	long y = static_cast<long>(st.y.size());
	if (y < st.k + 3) {
		note(st, "rr2", "|Y| <= k + 2, linear instance");
		st.outcome = KernelOutcome::reduced_instance;
	} else if (y > static_cast<long>(st.x.size() + st.packing.z.size()) + st.k) {
		note(st, "rr2", "|Y| > |X| + |Z| + k");
		settle(st, false);
	}
	return st;
}

KernelState rr3_contract(KernelState st) {
	if (st.outcome != KernelOutcome::in_progress)
		return st;
	if (st.z_x.intersects(st.z_y)) {
		note(st, "rr3", "Z_X and Z_Y intersect");
		settle(st, false);
		return st;
	}
	std::optional<Edge> pick;
	for (const Edge &e : st.graph.edges()) {
		auto within = [&](const VertexSet &a, const VertexSet &b) {
			return (a.contains(e.u) && b.contains(e.v)) || (a.contains(e.v) && b.contains(e.u));
		};
		if (within(st.x, st.z_x) || within(st.y, st.z_y) || within(st.z_x, st.z_x) || within(st.z_y, st.z_y)) {
			pick = e;
			break;
		}
	}
	if (!pick)
		return st;
	note(st, "rr3", "contract " + std::to_string(pick->u) + "-" + std::to_string(pick->v));
	st.graph.merge(pick->u, pick->v);
	--st.k;
	refresh(st);
	return st;
}

KernelState rr4_mark_delete(KernelState st) {
	if (st.outcome != KernelOutcome::in_progress)
		return st;
	const Graph &g = st.graph;
	VertexSet near_prime(g.capacity());
	for (Vertex z : st.z_prime)
		near_prime |= g.neighbors(z);
	VertexSet marked = st.packing.z | (near_prime & (st.x | st.y));
	VertexSet free_x = st.x - near_prime, free_y = st.y - near_prime;
	for (Vertex z : st.packing.z) {
		if (Vertex u = (free_x - g.neighbors(z)).first(); u < g.capacity())
			marked.insert(u);
		if (Vertex v = (free_y - g.neighbors(z)).first(); v < g.capacity())
			marked.insert(v);
	}
	st.marked = marked;
	VertexSet open_x = st.x - marked, open_y = st.y - marked;
	if (open_x.size() < 2 || open_y.size() < 2) {
		note(st, "rr4", "fewer than two unmarked vertices on a side");
		st.outcome = KernelOutcome::reduced_instance;
		return st;
	}
	Vertex u = open_x.first(), v = open_y.first();
	note(st, "rr4", "delete " + std::to_string(u) + " and " + std::to_string(v));
	st.graph.remove_vertex(u);
	st.graph.remove_vertex(v);
	refresh(st);
	return st;
}

KernelState kernelize_bbc(const Graph &g, long k) {
	if (!is_connected(g))
		throw precondition_error("kernelization requires a connected graph");
	KernelState st = make_kernel_state(g, k);
	while (st.outcome == KernelOutcome::in_progress) {
		st = rr1_trivial(std::move(st));
		st = rr2_size(std::move(st));
		std::size_t before = st.log.size();
		st = rr3_contract(std::move(st));
		if (st.log.size() != before)
			continue;
		st = rr4_mark_delete(std::move(st));
	}
	return st;
}

} // namespace biclique
