#include <stdexcept>
#include <string>

#include "biclique/fpt.hpp"
#include "rules.hpp"

namespace biclique {

namespace detail {

void drop_roles(CaseContext &ctx, Vertex v) {
	ctx.x.erase(v);
	ctx.y.erase(v);
	ctx.z_l.erase(v);
	ctx.z_r.erase(v);
}

Vertex absorb(CaseContext &ctx, Vertex v, const VertexSet &targets, bool into_left) {
	VertexSet hits = ctx.graph.neighbors(v) & targets;
	drop_roles(ctx, v);
	Vertex merged = v;
	for (Vertex a : hits) {
		drop_roles(ctx, a);
		Vertex keep = ctx.graph.merge(merged, a);
		ctx.trace.record(keep, keep == merged ? a : merged);
		merged = keep;
		--ctx.budget;
	}
	(into_left ? ctx.z_l : ctx.z_r).insert(merged);
	return merged;
}

} // namespace detail

bool branching_rule_1_applies(const CaseContext &ctx, Vertex v) {
	if (!ctx.y.contains(v))
		return false;
	const VertexSet &nb = ctx.graph.neighbors(v);
	return nb.intersects(ctx.z_l) && nb.intersects(ctx.z_r) &&
		   nb.intersection_size(ctx.z_l) + nb.intersection_size(ctx.z_r) > 2;
}

std::pair<CaseContext, CaseContext> apply_branching_rule_1(const CaseContext &ctx, Vertex v) {
	if (!branching_rule_1_applies(ctx, v))
		throw std::logic_error("branching rule 1 does not apply to vertex " + std::to_string(v));
	CaseContext left = ctx;
	detail::absorb(left, v, ctx.z_l, true);
	CaseContext right = ctx;
	detail::absorb(right, v, ctx.z_r, false);
	return {std::move(left), std::move(right)};
}

bool preprocessing_rule_1_applies(const CaseContext &ctx, Vertex v) {
	if (!ctx.y.contains(v) || ctx.graph.degree(v) != 2)
		return false;
	const VertexSet &nb = ctx.graph.neighbors(v);
	return nb.intersects(ctx.z_l) && nb.intersects(ctx.z_r);
}

CaseContext apply_preprocessing_rule_1(const CaseContext &ctx, Vertex v) {
	if (!preprocessing_rule_1_applies(ctx, v))
		throw std::logic_error("preprocessing rule 1 does not apply to vertex " + std::to_string(v));
	CaseContext out = ctx;
	detail::absorb(out, v, ctx.z_l, true);
	return out;
}

} // namespace biclique
