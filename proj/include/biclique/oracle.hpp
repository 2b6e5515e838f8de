#pragma once

#include <cstddef>
#include <optional>

#include "biclique/biclique.hpp"
#include "biclique/graph.hpp"

namespace biclique {

struct OracleOptions {
	// Refuse graphs with more vertices than this (hard ceiling 64).
	std::size_t vertex_limit = 24;
	unsigned threads = 1;

	// Defaults, with vertex_limit taken from BICLIQUE_ORACLE_LIMIT when set.
	static OracleOptions from_environment();
};

struct OracleResult {
	bool answer = false;
	std::optional<Bipartition> certificate;
	std::optional<std::size_t> min_k;
};

// Exhaustive search over all bipartitions with the smallest vertex on the
// left. The certificate is the first valid partition in enumeration order
// (vertices in ascending id, left before right). Throws size_limit_exceeded.
OracleResult oracle_bc(const Graph &g, long k, const OracleOptions &opts = {});
OracleResult oracle_bbc(const Graph &g, long k, const OracleOptions &opts = {});

// Smallest sf(L) + sf(R) over partitions meeting the adjacency (and balance)
// condition; nullopt when no partition does.
std::optional<std::size_t> oracle_min_k(const Graph &g, bool balanced, const OracleOptions &opts = {});

} // namespace biclique
