#include "biclique/oracle.hpp"

#include <bit>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <string>
#include <vector>

#include "biclique/errors.hpp"
#include "biclique/parallel.hpp"

namespace biclique {

OracleOptions OracleOptions::from_environment() {
	OracleOptions opts;
	if (const char *env = std::getenv("BICLIQUE_ORACLE_LIMIT")) {
		char *end = nullptr;
		unsigned long v = std::strtoul(env, &end, 10);
		if (end != env && *end == '\0')
			opts.vertex_limit = v;
	}
	return opts;
}

namespace {

using Mask = std::uint64_t;
constexpr std::size_t hard_limit = 64;

// The graph relabelled onto 0..n-1 in ascending id order.
struct Dense {
	std::vector<Vertex> ids;
	std::vector<Mask> adj;
};

Dense densify(const Graph &g, const OracleOptions &opts) {
	std::size_t limit = opts.vertex_limit < hard_limit ? opts.vertex_limit : hard_limit;
	if (g.order() > limit)
		throw size_limit_exceeded("oracle refuses " + std::to_string(g.order()) + " vertices (limit " +
								  std::to_string(limit) + ")");
	Dense d;
	d.ids = g.vertices().to_vector();
	std::vector<int> index(g.capacity(), -1);
	for (std::size_t i = 0; i < d.ids.size(); ++i)
		index[d.ids[i]] = static_cast<int>(i);
	d.adj.assign(d.ids.size(), 0);
	for (std::size_t i = 0; i < d.ids.size(); ++i)
		for (Vertex w : g.neighbors(d.ids[i]))
			d.adj[i] |= Mask{1} << index[w];
	return d;
}

Mask reach(const Dense &d, Mask within, int root) {
	Mask seen = Mask{1} << root;
	Mask frontier = seen;
	while (frontier) {
		Mask next = 0;
		for (Mask f = frontier; f; f &= f - 1)
			next |= d.adj[std::countr_zero(f)];
		next &= within & ~seen;
		seen |= next;
		frontier = next;
	}
	return seen;
}

int component_count(const Dense &d, Mask s) {
	int n = 0;
	while (s) {
		s &= ~reach(d, s, std::countr_zero(s));
		++n;
	}
	return n;
}

long sf(const Dense &d, Mask s) {
	return std::popcount(s) - component_count(d, s);
}

bool structurally_valid(const Dense &d, Mask left, Mask right, bool balanced) {
	std::vector<Mask> lc, rc;
	for (Mask s = left; s;) {
		Mask c = reach(d, s, std::countr_zero(s));
		lc.push_back(c);
		s &= ~c;
	}
	for (Mask s = right; s;) {
		Mask c = reach(d, s, std::countr_zero(s));
		rc.push_back(c);
		s &= ~c;
	}
	if (balanced && lc.size() != rc.size())
		return false;
	for (Mask a : lc) {
		Mask nb = 0;
		for (Mask f = a; f; f &= f - 1)
			nb |= d.adj[std::countr_zero(f)];
		for (Mask b : rc)
			if (!(nb & b))
				return false;
	}
	return true;
}

struct Decider {
	const Dense &d;
	long k;
	bool balanced;

	// First valid completion of (left, right) in enumeration order.
	std::optional<Mask> search(std::size_t idx, Mask left, Mask right) const {
		if (sf(d, left) + sf(d, right) > k)
			return std::nullopt;
		if (idx == d.ids.size()) {
			if (structurally_valid(d, left, right, balanced))
				return left;
			return std::nullopt;
		}
		Mask bit = Mask{1} << idx;
		if (auto r = search(idx + 1, left | bit, right))
			return r;
		return search(idx + 1, left, right | bit);
	}
};

Bipartition expand(const Graph &g, const Dense &d, Mask left) {
	Bipartition p{VertexSet(g.capacity()), VertexSet(g.capacity())};
	for (std::size_t i = 0; i < d.ids.size(); ++i)
		((left >> i) & 1 ? p.left : p.right).insert(d.ids[i]);
	return p;
}

OracleResult decide(const Graph &g, long k, bool balanced, const OracleOptions &opts) {
	Dense d = densify(g, opts);
	OracleResult res;
	if (k < 0)
		return res;
	std::size_t n = d.ids.size();
	if (n == 0) {
		res.answer = true;
		res.certificate = expand(g, d, 0);
		return res;
	}
	Decider dec{d, k, balanced};
	// Vertices 1..depth are fixed per task; task order equals sequential DFS order.
	std::size_t depth = 0;
	if (opts.threads > 1)
		while (depth + 1 < n && (std::size_t{1} << depth) < 8 * opts.threads)
			++depth;
	std::size_t tasks = std::size_t{1} << depth;
	std::function<std::optional<Mask>(std::size_t)> task = [&](std::size_t t) -> std::optional<Mask> {
		Mask left = 1, right = 0;
		for (std::size_t j = 0; j < depth; ++j) {
			Mask bit = Mask{1} << (j + 1);
			if ((t >> (depth - 1 - j)) & 1)
				right |= bit;
			else
				left |= bit;
		}
		return dec.search(depth + 1, left, right);
	};
	if (auto hit = first_hit<Mask>(tasks, opts.threads, task)) {
		res.answer = true;
		res.certificate = expand(g, d, *hit);
	}
	return res;
}

struct Minimizer {
	const Dense &d;
	bool balanced;
	long best;

	void search(std::size_t idx, Mask left, Mask right) {
		long cost = sf(d, left) + sf(d, right);
		if (cost >= best)
			return;
		if (idx == d.ids.size()) {
			if (structurally_valid(d, left, right, balanced))
				best = cost;
			return;
		}
		Mask bit = Mask{1} << idx;
		search(idx + 1, left | bit, right);
		search(idx + 1, left, right | bit);
	}
};

} // namespace

OracleResult oracle_bc(const Graph &g, long k, const OracleOptions &opts) {
	return decide(g, k, false, opts);
}

OracleResult oracle_bbc(const Graph &g, long k, const OracleOptions &opts) {
	return decide(g, k, true, opts);
}

std::optional<std::size_t> oracle_min_k(const Graph &g, bool balanced, const OracleOptions &opts) {
	Dense d = densify(g, opts);
	if (d.ids.empty())
		return 0;
	constexpr long unreachable = 1L << 20;
	Minimizer m{d, balanced, unreachable};
	m.search(1, 1, 0);
	if (m.best == unreachable)
		return std::nullopt;
	return static_cast<std::size_t>(m.best);
}

} // namespace biclique
