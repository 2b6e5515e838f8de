#include <atomic>
#include <bit>
#include <cstdint>
#include <functional>
#include <queue>
#include <unordered_map>
#include <vector>

#include "biclique/errors.hpp"
#include "biclique/fpt.hpp"
#include "biclique/parallel.hpp"
#include "rules.hpp"

namespace biclique {

std::string to_string(Outcome o) {
	switch (o) {
	case Outcome::yes:
		return "yes";
	case Outcome::no:
		return "no";
	case Outcome::budget_exceeded:
		return "budget-exceeded";
	}
	return "unknown";
}

namespace {

struct search_exhausted {};

struct Counters {
	std::atomic<std::uint64_t> nodes{0};
	std::atomic<std::uint64_t> z_partitions{0};
	std::atomic<std::uint64_t> z_partitions_pruned{0};
	std::atomic<std::uint64_t> branching{0};
	std::atomic<std::uint64_t> preprocessing{0};
	std::atomic<std::uint64_t> split_calls{0};
	std::atomic<std::uint64_t> candidates{0};
	std::atomic<std::uint64_t> enumerations{0};
	std::atomic<std::uint64_t> rejected{0};
	std::atomic<std::uint64_t> max_depth{0};
};

struct Hit {
	Bipartition partition;
	std::string label;
};

class Solver {
public:
	Solver(const Graph &g, long k, bool balanced, const FptOptions &opts)
		: g_(g), k_(k), balanced_(balanced), opts_(opts) {}

	Verdict run();

private:
	void tick(std::uint64_t depth = 0) {
		std::uint64_t n = ++c_.nodes;
		std::uint64_t cur = c_.max_depth.load();
		while (depth > cur && !c_.max_depth.compare_exchange_weak(cur, depth)) {
		}
		if (opts_.node_limit && n > opts_.node_limit)
			throw search_exhausted{};
		if (opts_.deadline && (n & 255) == 0 && std::chrono::steady_clock::now() > *opts_.deadline)
			throw search_exhausted{};
	}

	bool valid(const Graph &g, const Bipartition &p, long k) const {
		return balanced_ ? check_valid_balanced_partition(g, p, k).valid : check_valid_partition(g, p, k).valid;
	}

	// Checks a partition of the working graph, then maps it back to the
	// original graph and re-checks it there.
	std::optional<Hit> accept(const CaseContext &ctx, const VertexSet &left, const VertexSet &right,
							  const char *label) {
		++c_.candidates;
		Bipartition working{left, right};
		if (!valid(ctx.graph, working, ctx.budget))
			return std::nullopt;
		Bipartition original{ctx.trace.preimage(left), ctx.trace.preimage(right)};
		if (!valid(g_, original, k_)) {
			++c_.rejected;
			return std::nullopt;
		}
		return Hit{std::move(original), label};
	}

	std::optional<Hit> split_solve(CaseContext ctx, const char *label, std::uint64_t depth);
	std::optional<Hit> trivial_scenario(const CaseContext &ctx, const VertexSet &home_y, const VertexSet &other_y,
										bool home_is_left, const char *label);
	std::optional<VertexSet> min_connector(const Graph &g, const std::vector<VertexSet> &groups,
										   const VertexSet &candidates, long budget);
	std::optional<Hit> enumerate_all(const char *label);
	std::optional<Hit> solve_guess(const VertexSet &z_l, const VertexSet &z_r);

	const Graph &g_;
	long k_;
	bool balanced_;
	FptOptions opts_;
	Counters c_;
	Modulator mod_;
};

std::optional<Hit> Solver::split_solve(CaseContext ctx, const char *label, std::uint64_t depth) {
	tick(depth);
	++c_.split_calls;
	for (;;) {
		bool changed = false;
		for (Vertex v : ctx.y) {
			if (!branching_rule_1_applies(ctx, v))
				continue;
			++c_.branching;
			auto [to_left, to_right] = apply_branching_rule_1(ctx, v);
			if (to_left.budget >= 0)
				if (auto r = split_solve(std::move(to_left), label, depth + 1))
					return r;
			if (to_right.budget >= 0)
				if (auto r = split_solve(std::move(to_right), label, depth + 1))
					return r;
			return std::nullopt;
		}
		for (Vertex v : ctx.y) {
			if (!preprocessing_rule_1_applies(ctx, v))
				continue;
			++c_.preprocessing;
			ctx = apply_preprocessing_rule_1(ctx, v);
			if (ctx.budget < 0)
				return std::nullopt;
			changed = true;
			break;
		}
		if (!changed)
			break;
	}

	VertexSet y_left(ctx.graph.capacity()), y_right(ctx.graph.capacity());
	for (Vertex v : ctx.y) {
		const VertexSet &nb = ctx.graph.neighbors(v);
		if (nb.is_subset_of(ctx.z_l))
			y_left.insert(v);
		else if (nb.is_subset_of(ctx.z_r))
			y_right.insert(v);
		else
			throw std::logic_error("vertex left with neighbours outside Z after exhaustive rules");
	}

	// No vertex of Y^L or Y^R sits alone: each joins the side of its neighbours.
	if (auto r = accept(ctx, ctx.z_l | y_left, ctx.z_r | y_right, label))
		return r;
	// Some Y^L vertex is a trivial component on the right, or mirrored.
	if (auto r = trivial_scenario(ctx, y_left, y_right, true, label))
		return r;
	return trivial_scenario(ctx, y_right, y_left, false, label);
}

// The "home" side owns the guessed Z part that neighbours home_y. Some
// home_y vertex is assumed to be a trivial component on the other side,
// which forces other_y onto the other side as well.
std::optional<Hit> Solver::trivial_scenario(const CaseContext &ctx, const VertexSet &home_y,
											const VertexSet &other_y, bool home_is_left, const char *label) {
	if (home_y.empty())
		return std::nullopt;
	const VertexSet &home_z = home_is_left ? ctx.z_l : ctx.z_r;
	const VertexSet &other_z = home_is_left ? ctx.z_r : ctx.z_l;
	auto emit = [&](const VertexSet &home, const VertexSet &other) {
		return home_is_left ? accept(ctx, home, other, label) : accept(ctx, other, home, label);
	};

	std::vector<VertexSet> groups = components(ctx.graph, home_z);
	std::size_t c = groups.size();
	if (c > 62)
		throw search_exhausted{};

	// Several components on the home side: guess the Z-part Z' of one of them.
	for (std::uint64_t mask = 1; c >= 2 && mask + 1 < (std::uint64_t{1} << c); ++mask) {
		tick();
		VertexSet z_prime(ctx.graph.capacity());
		for (std::size_t i = 0; i < c; ++i)
			if ((mask >> i) & 1)
				z_prime |= groups[i];
		VertexSet home = home_z, other = other_z | other_y;
		for (Vertex v : home_y) {
			const VertexSet &nb = ctx.graph.neighbors(v);
			if (nb.is_subset_of(z_prime) || !nb.intersects(z_prime))
				home.insert(v);
			else
				other.insert(v);
		}
		if (auto r = emit(home, other))
			return r;
	}

	// A single home component: the home_y vertices placed at home only serve
	// to connect home_z, the rest sit on the other side as singletons.
	if (!balanced_) {
		auto connector = min_connector(ctx.graph, groups, home_y, ctx.budget);
		if (!connector)
			return std::nullopt;
		return emit(home_z | *connector, other_z | other_y | (home_y - *connector));
	}
	// Balanced: one home component needs exactly one on the other side.
	VertexSet fixed_other = other_z | other_y;
	std::size_t fixed_components = component_count(ctx.graph, fixed_other);
	if (fixed_components == 1)
		return emit(home_z | home_y, fixed_other);
	if (fixed_components == 0) {
		for (Vertex v : home_y) {
			VertexSet home = home_z | home_y;
			home.erase(v);
			VertexSet other(ctx.graph.capacity());
			other.insert(v);
			if (auto r = emit(home, other))
				return r;
		}
	}
	return std::nullopt;
}

// Fewest candidates whose addition makes the union of `groups` connected.
std::optional<VertexSet> Solver::min_connector(const Graph &g, const std::vector<VertexSet> &groups,
											   const VertexSet &candidates, long budget) {
	VertexSet none(g.capacity());
	if (groups.size() <= 1)
		return none;
	if (groups.size() > 30)
		throw search_exhausted{};
	using State = std::uint32_t;
	std::vector<std::pair<State, Vertex>> links;
	for (Vertex v : candidates) {
		State m = 0;
		for (std::size_t i = 0; i < groups.size(); ++i)
			if (g.neighbors(v).intersects(groups[i]))
				m |= State{1} << i;
		if (std::popcount(m) < 2)
			continue;
		bool seen = false;
		for (auto &[lm, lv] : links)
			seen = seen || lm == m;
		if (!seen)
			links.emplace_back(m, v);
	}
	const State goal = (State{1} << groups.size()) - 1;
	struct Back {
		State from;
		Vertex via;
		long depth;
	};
	std::unordered_map<State, Back> back;
	back[1] = {0, 0, 0};
	std::queue<State> queue;
	queue.push(1);
	while (!queue.empty()) {
		State s = queue.front();
		queue.pop();
		if (s == goal) {
			VertexSet out = none;
			for (State cur = s; cur != 1; cur = back[cur].from)
				out.insert(back[cur].via);
			return out;
		}
		long d = back[s].depth;
		if (d >= budget)
			continue;
		for (auto &[m, v] : links) {
			if (!(m & s))
				continue;
			State t = s | m;
			if (back.count(t))
				continue;
			back[t] = {s, v, d + 1};
			queue.push(t);
		}
		tick();
	}
	return std::nullopt;
}

// All bipartitions with the smallest vertex on the left, pruned on sf.
std::optional<Hit> Solver::enumerate_all(const char *label) {
	++c_.enumerations;
	std::vector<Vertex> order = g_.vertices().to_vector();
	CaseContext identity{g_, ContractionTrace(g_.capacity()), {}, {}, {}, {}, k_, balanced_};
	std::function<std::optional<Hit>(std::size_t, VertexSet &, VertexSet &)> dfs =
		[&](std::size_t i, VertexSet &left, VertexSet &right) -> std::optional<Hit> {
		tick();
		if (static_cast<long>(sf_size(g_, left) + sf_size(g_, right)) > k_)
			return std::nullopt;
		if (i == order.size())
			return accept(identity, left, right, label);
		left.insert(order[i]);
		if (auto r = dfs(i + 1, left, right))
			return r;
		left.erase(order[i]);
		if (i == 0)
			return std::nullopt;
		right.insert(order[i]);
		auto r = dfs(i + 1, left, right);
		right.erase(order[i]);
		return r;
	};
	VertexSet left(g_.capacity()), right(g_.capacity());
	return dfs(0, left, right);
}

std::optional<Hit> Solver::solve_guess(const VertexSet &z_l, const VertexSet &z_r) {
	tick();
	++c_.z_partitions;
	if (static_cast<long>(sf_size(g_, z_l) + sf_size(g_, z_r)) > k_) {
		++c_.z_partitions_pruned;
		return std::nullopt;
	}
	const VertexSet &x = mod_.x;
	const VertexSet &y = mod_.y;
	CaseContext base{g_, ContractionTrace(g_.capacity()), x, y, z_l, z_r, k_, balanced_};

	if (x.empty()) {
		// Y entirely on one side.
		if (auto r = accept(base, z_l, z_r | y, "1a"))
			return r;
		// Y split across both sides.
		return split_solve(base, "1b", 1);
	}

	// X on one side (the left, by symmetry), Y on one side.
	if (auto r = accept(base, z_l | x, z_r | y, "2a"))
		return r;
	if (auto r = accept(base, z_l | x | y, z_r, "2a"))
		return r;

	// X on the left, Y split: some y in Y lies with X and collapses it.
	if (y.size() >= 2) {
		for (Vertex v : y) {
			CaseContext ctx = base;
			detail::absorb(ctx, v, x | z_l, true);
			if (ctx.budget < 0)
				continue;
			if (auto r = split_solve(std::move(ctx), "2b", 1))
				return r;
		}
	}

	// X split, Y on one side (the left): some x in X lies with Y and collapses it.
	if (x.size() >= 2) {
		for (Vertex v : x) {
			CaseContext ctx = base;
			detail::absorb(ctx, v, y | z_l, true);
			if (ctx.budget < 0)
				continue;
			ctx.y = ctx.x;
			ctx.x = VertexSet(g_.capacity());
			if (auto r = split_solve(std::move(ctx), "3a", 1))
				return r;
		}
	}
	return std::nullopt;
}

Verdict Solver::run() {
	if (!is_connected(g_))
		throw precondition_error("the FPT solver requires a connected graph");
	Verdict verdict;
	auto finish = [&](std::optional<Hit> hit, bool exhausted) {
		if (hit) {
			verdict.outcome = Outcome::yes;
			verdict.solution = solution_from_partition(g_, hit->partition);
			verdict.solution->target_balanced = balanced_;
			verdict.partition = std::move(hit->partition);
			verdict.stats.winning_case = hit->label;
		} else {
			verdict.outcome = exhausted ? Outcome::budget_exceeded : Outcome::no;
		}
		verdict.stats.z_partitions = c_.z_partitions;
		verdict.stats.z_partitions_pruned = c_.z_partitions_pruned;
		verdict.stats.branching_applications = c_.branching;
		verdict.stats.preprocessing_applications = c_.preprocessing;
		verdict.stats.split_solver_calls = c_.split_calls;
		verdict.stats.candidates_checked = c_.candidates;
		verdict.stats.whole_graph_enumerations = c_.enumerations;
		verdict.stats.rejected_certificates = c_.rejected;
		verdict.stats.max_depth = c_.max_depth;
		return verdict;
	};
	if (k_ < 0)
		return finish(std::nullopt, false);

	if (auto parts = is_biclique(g_); parts && (!balanced_ || is_balanced_biclique(g_)))
		return finish(Hit{std::move(*parts), "already-biclique"}, false);

	// A yes-instance has a modulator of at most 2k vertices.
	auto mod = find_biclique_modulator(g_, static_cast<std::size_t>(2 * k_));
	if (!mod)
		return finish(std::nullopt, false);
	mod_ = std::move(*mod);
	verdict.stats.modulator_size = mod_.z.size();

	try {
		if (mod_.x.empty() && mod_.y.empty())
			return finish(enumerate_all("z-only"), false);

		std::vector<Vertex> zs = mod_.z.to_vector();
		if (zs.size() >= 63)
			return finish(std::nullopt, true);
		std::atomic<bool> exhausted{false};
		std::function<std::optional<Hit>(std::size_t)> task = [&](std::size_t i) -> std::optional<Hit> {
			if (exhausted)
				return std::nullopt;
			VertexSet z_l(g_.capacity()), z_r(g_.capacity());
			for (std::size_t j = 0; j < zs.size(); ++j)
				((i >> j) & 1 ? z_l : z_r).insert(zs[j]);
			try {
				return solve_guess(z_l, z_r);
			} catch (const search_exhausted &) {
				exhausted = true;
				return std::nullopt;
			}
		};
		auto hit = first_hit<Hit>(std::size_t{1} << zs.size(), opts_.threads, task);
		if (hit || exhausted)
			return finish(std::move(hit), exhausted);

		// X and Y both split: all but one edge of the X-Y biclique is contracted.
		if (mod_.x.size() >= 2 && mod_.y.size() >= 2 &&
			static_cast<long>(mod_.x.size() + mod_.y.size()) <= k_ + 2)
			return finish(enumerate_all("3b"), false);
		return finish(std::nullopt, false);
	} catch (const search_exhausted &) {
		return finish(std::nullopt, true);
	}
}

} // namespace

Verdict fpt_bc(const Graph &g, long k, const FptOptions &opts) {
	return Solver(g, k, false, opts).run();
}

Verdict fpt_bbc(const Graph &g, long k, const FptOptions &opts) {
	return Solver(g, k, true, opts).run();
}

} // namespace biclique
