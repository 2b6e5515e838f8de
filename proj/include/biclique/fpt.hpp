#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include "biclique/biclique.hpp"
#include "biclique/certify.hpp"
#include "biclique/contraction.hpp"
#include "biclique/graph.hpp"

namespace biclique {

// Z with G - Z complete bipartite on parts x, y where |x| <= |y|.
struct Modulator {
	VertexSet z;
	VertexSet x;
	VertexSet y;
};

// Minimum-size biclique modulator, or nullopt when every modulator has more
// than `bound` vertices. Works on the complement: G - Z is a biclique exactly
// when the complement minus Z is a union of at most two cliques.
std::optional<Modulator> find_biclique_modulator(const Graph &g, std::size_t bound);

// Working state for one guessed ordered partition <Z_L, Z_R> of the modulator.
struct CaseContext {
	Graph graph;
	ContractionTrace trace;
	VertexSet x, y, z_l, z_r;
	long budget = 0;
	bool balanced = false;
};

// Branching Rule 1 on v in Y: first branch contracts E(v, Z_L), second E(v, Z_R).
std::pair<CaseContext, CaseContext> apply_branching_rule_1(const CaseContext &ctx, Vertex v);
bool branching_rule_1_applies(const CaseContext &ctx, Vertex v);

// Preprocessing Rule 1 on a degree-2 v in Y with one neighbour on each side.
CaseContext apply_preprocessing_rule_1(const CaseContext &ctx, Vertex v);
bool preprocessing_rule_1_applies(const CaseContext &ctx, Vertex v);

enum class Outcome { yes, no, budget_exceeded };

std::string to_string(Outcome o);

struct FptStats {
	std::uint64_t modulator_size = 0;
	std::uint64_t z_partitions = 0;
	std::uint64_t z_partitions_pruned = 0;
	std::uint64_t branching_applications = 0;
	std::uint64_t preprocessing_applications = 0;
	std::uint64_t split_solver_calls = 0;
	std::uint64_t candidates_checked = 0;
	std::uint64_t whole_graph_enumerations = 0;
	std::uint64_t rejected_certificates = 0;
	std::uint64_t max_depth = 0;
	std::string winning_case;
};

struct FptOptions {
	unsigned threads = 1;
	// Abandon with Outcome::budget_exceeded once this many search nodes were visited (0: unlimited).
	std::uint64_t node_limit = 0;
	std::optional<std::chrono::steady_clock::time_point> deadline;
};

struct Verdict {
	Outcome outcome = Outcome::no;
	std::optional<Bipartition> partition;
	std::optional<ContractionSolution> solution;
	FptStats stats;
};

// Both require a connected graph (precondition_error otherwise).
Verdict fpt_bc(const Graph &g, long k, const FptOptions &opts = {});
Verdict fpt_bbc(const Graph &g, long k, const FptOptions &opts = {});

} // namespace biclique
