#pragma once

#include "biclique/fpt.hpp"

namespace biclique::detail {

// Removes v from every role set of ctx.
void drop_roles(CaseContext &ctx, Vertex v);

// Contracts every edge between v and `targets`, charging one unit of budget
// per edge. The merged vertex joins Z_L (or Z_R) and is returned.
Vertex absorb(CaseContext &ctx, Vertex v, const VertexSet &targets, bool into_left);

} // namespace biclique::detail
